//! Experiment harness around `mbgames-core`: file formats, strategy
//! lookup by name, bias sweeps, scaling runs and the verification suite.
//! The `mbgames` binary is a thin command-line layer over this library.

pub mod catalog;
pub mod experiment;
pub mod io;
pub mod lineup;
pub mod suite;

pub use experiment::{BoundReport, SweepRow, CSV_HEADER};
pub use lineup::{play_game, GameRun, LineupError};
