//! Maker–Breaker component games played on the edge set of a graph.
//!
//! The crate is `no_std` (it needs `alloc`) and contains everything that is
//! pure computation: the board ([`graph`]), structural analysis used by the
//! strategies and verifiers ([`analysis`]), short positive-out-degree
//! orientations ([`orientation`]), the game engine with component tracking
//! ([`game`]), an exhaustive solver for tiny boards ([`minimax`]), the
//! strategies themselves together with invariant monitors ([`strategy`]),
//! and the driver that plays two strategies against each other ([`play`]).
//!
//! File IO, the CLI and experiment plumbing live in the companion `mbgames`
//! crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod analysis;
pub mod game;
pub mod graph;
pub mod minimax;
pub mod orientation;
pub mod play;
pub mod strategy;

mod math;

pub use math::ceil_log;
pub use game::{GameConfig, GameError, GameState, Owner, Player};
pub use graph::{EdgeId, Graph, GraphError, Vertex};
pub use orientation::{Orientation, OrientationCertificate};
pub use play::{play, PlayError, Transcript};
pub use strategy::{Decision, Strategy};
