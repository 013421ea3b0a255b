//! Post-move invariant checks. The driver runs every monitor after each
//! complete Breaker move; a monitor inspects the components containing an
//! endpoint of any step claimed since its previous check.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::game::{ComponentMeta, GameState, Owner};
use crate::graph::{EdgeId, Vertex};
use crate::orientation::Orientation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub monitor: &'static str,
    pub round: usize,
    pub detail: String,
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} violated in round {}: {}", self.monitor, self.round, self.detail)
    }
}

pub trait Monitor {
    fn name(&self) -> &'static str;

    fn check(&mut self, st: &GameState<'_>) -> Result<(), Violation>;
}

/// Components touched by steps the caller has not seen yet.
#[derive(Debug, Clone, Default)]
struct Cursor {
    seen: usize,
}

impl Cursor {
    fn touched(&mut self, st: &GameState<'_>) -> Vec<Vertex> {
        let g = st.graph();
        let mut out: Vec<Vertex> = Vec::new();
        for step in &st.history()[self.seen..] {
            let (u, v) = g.edge(step.edge);
            for x in [u, v] {
                let c = st.component_of(x);
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        self.seen = st.history().len();
        out.sort_unstable();
        out
    }
}

fn violation(monitor: &'static str, st: &GameState<'_>, detail: String) -> Violation {
    Violation { monitor, round: st.round(), detail }
}

fn dump(meta: &ComponentMeta, o: Option<&Orientation>, st: &GameState<'_>) -> String {
    let mut s = String::new();
    let _ = write!(s, "component root {} size {} [", meta.root, meta.size());
    for (i, &v) in meta.vertices.iter().enumerate() {
        let _ = write!(s, " {v}:h{}", meta.height[i]);
    }
    let _ = write!(s, " ] free incident {}", meta.free_incident);
    if let Some(o) = o {
        let _ = write!(s, " free arcs [");
        for &e in st.free_incident_edges(meta.root) {
            let (a, b) = o.arc(e);
            let _ = write!(s, " {a}->{b}");
        }
        let _ = write!(s, " ]");
    }
    s
}

fn meta(st: &GameState<'_>, c: Vertex) -> ComponentMeta {
    st.component_meta(c).expect("component ids are vertices")
}

/// Every component `S` has at most `max(0, (d - 2 - b)|S| + b + 2)` free
/// incident edges. Holds against any Maker when Breaker is reactive in the
/// (1:b) game on a d-regular graph.
#[derive(Debug, Clone)]
pub struct Claim31Monitor {
    d: i64,
    b: i64,
    cursor: Cursor,
}

impl Claim31Monitor {
    pub fn new(d: usize, b: usize) -> Self {
        Claim31Monitor { d: d as i64, b: b as i64, cursor: Cursor::default() }
    }

    pub fn bound(&self, size: usize) -> usize {
        ((self.d - 2 - self.b) * size as i64 + self.b + 2).max(0) as usize
    }
}

impl Monitor for Claim31Monitor {
    fn name(&self) -> &'static str {
        "claim31"
    }

    fn check(&mut self, st: &GameState<'_>) -> Result<(), Violation> {
        for c in self.cursor.touched(st) {
            let size = st.component_size(c);
            let free = st.free_incident(c);
            if free > self.bound(size) {
                let m = meta(st, c);
                return Err(violation(
                    self.name(),
                    st,
                    format!(
                        "{free} free incident edges, bound {}; {}",
                        self.bound(size),
                        dump(&m, st.orientation(), st)
                    ),
                ));
            }
        }
        Ok(())
    }
}

/// Each component is a directed tree hanging from its root, and free arcs
/// enter it only at the root. Needs an oriented game.
#[derive(Debug, Clone, Default)]
pub struct DirectedTreeMonitor {
    cursor: Cursor,
}

impl DirectedTreeMonitor {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Monitor for DirectedTreeMonitor {
    fn name(&self) -> &'static str {
        "directed_tree"
    }

    fn check(&mut self, st: &GameState<'_>) -> Result<(), Violation> {
        let Some(o) = st.orientation() else {
            return Err(violation(self.name(), st, "game is not oriented".into()));
        };
        let g = st.graph();
        for c in self.cursor.touched(st) {
            let m = meta(st, c);
            let fail = |why: String| Err(violation("directed_tree", st, format!("{why}; {}", dump(&m, Some(o), st))));
            let root = m.root;
            if m.height_of(root) != Some(0) {
                return fail(format!("root {root} is not at height 0"));
            }
            for (i, &w) in m.vertices.iter().enumerate() {
                if w == root {
                    continue;
                }
                let Some(p) = m.parent[i] else {
                    return fail(format!("vertex {w} has no parent"));
                };
                let Some(e) = g.edge_between(p, w) else {
                    return fail(format!("parent {p} of {w} is not adjacent"));
                };
                if st.owner(e) != Owner::Maker || o.arc(e) != (p, w) {
                    return fail(format!("tree edge {p} {w} is not a Maker arc {p}->{w}"));
                }
                if m.height_of(p).map(|h| h + 1) != Some(m.height[i]) {
                    return fail(format!("height of {w} is not one more than its parent's"));
                }
            }
            for &e in st.free_incident_edges(c) {
                let (a, b) = o.arc(e);
                if !st.same_component(a, c) && st.same_component(b, c) && b != root {
                    return fail(format!("free arc {a}->{b} enters below the root"));
                }
            }
        }
        Ok(())
    }
}

/// Breaker's claimed out-arcs of a tree are never higher than its free
/// out-arcs. Needs an oriented game.
#[derive(Debug, Clone, Default)]
pub struct OutArcHeightMonitor {
    cursor: Cursor,
}

impl OutArcHeightMonitor {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Monitor for OutArcHeightMonitor {
    fn name(&self) -> &'static str {
        "out_arc_height"
    }

    fn check(&mut self, st: &GameState<'_>) -> Result<(), Violation> {
        let Some(o) = st.orientation() else {
            return Err(violation(self.name(), st, "game is not oriented".into()));
        };
        let g = st.graph();
        for c in self.cursor.touched(st) {
            let mut claimed: Option<(usize, EdgeId)> = None;
            let mut free: Option<(usize, EdgeId)> = None;
            for &x in st.members(c) {
                for &(y, e) in g.neighbors(x) {
                    if o.tail(e) != x || st.same_component(y, c) {
                        continue;
                    }
                    let h = st.height(x);
                    match st.owner(e) {
                        Owner::Breaker if claimed.is_none_or(|(ch, _)| h > ch) => {
                            claimed = Some((h, e))
                        }
                        Owner::Free if free.is_none_or(|(fh, _)| h < fh) => free = Some((h, e)),
                        _ => {}
                    }
                }
            }
            if let (Some((ch, ce)), Some((fh, fe))) = (claimed, free) {
                if ch > fh {
                    let m = meta(st, c);
                    return Err(violation(
                        self.name(),
                        st,
                        format!(
                            "Breaker holds out-arc {ce} at height {ch} but {fe} is free at height {fh}; {}",
                            dump(&m, Some(o), st)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A tree of type `t` has `t <= d - 1` and width at most `d - t`, or
/// `2d - 2` when `t = 0`. Needs an oriented game.
#[derive(Debug, Clone)]
pub struct WidthMonitor {
    d: usize,
    cursor: Cursor,
}

impl WidthMonitor {
    pub fn new(d: usize) -> Self {
        WidthMonitor { d, cursor: Cursor::default() }
    }

    pub fn bound(&self, kind: usize) -> usize {
        if kind == 0 {
            2 * self.d - 2
        } else {
            self.d.saturating_sub(kind)
        }
    }
}

impl Monitor for WidthMonitor {
    fn name(&self) -> &'static str {
        "width"
    }

    fn check(&mut self, st: &GameState<'_>) -> Result<(), Violation> {
        let Some(o) = st.orientation() else {
            return Err(violation(self.name(), st, "game is not oriented".into()));
        };
        for c in self.cursor.touched(st) {
            let m = meta(st, c);
            let kind = m.kind.unwrap_or(0);
            let heights: Vec<usize> = m.free_out_arcs.iter().map(|&e| st.height(o.tail(e))).collect();
            let w = m.width(&heights);
            if kind + 1 > self.d || w > self.bound(kind) {
                return Err(violation(
                    self.name(),
                    st,
                    format!("type {kind}, width {w}, bound {}; {}", self.bound(kind), dump(&m, Some(o), st)),
                ));
            }
        }
        Ok(())
    }
}
