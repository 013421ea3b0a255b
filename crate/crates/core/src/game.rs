//! The (m:b) Maker–Breaker state machine on a graph's edge set.
//!
//! Maker's components are tracked incrementally: each component keeps its
//! member list and the set of free edges with at least one endpoint in it,
//! and smaller components are relabelled into larger ones on a merge. A
//! game created with [`GameState::new_oriented`] also keeps, per component,
//! a rooted directed tree: when Maker claims an arc `x -> y` joining two
//! components, `x`'s root stays the root and `y`'s old component hangs
//! below `x` with `h(y) = h(x) + 1`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::orientation::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Player {
    Maker,
    Breaker,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Maker => Player::Breaker,
            Player::Breaker => Player::Maker,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Player::Maker => "maker",
            Player::Breaker => "breaker",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Owner {
    Free,
    Maker,
    Breaker,
}

impl From<Player> for Owner {
    fn from(p: Player) -> Owner {
        match p {
            Player::Maker => Owner::Maker,
            Player::Breaker => Owner::Breaker,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GameConfig {
    /// Maker's bias.
    pub m: usize,
    /// Breaker's bias.
    pub b: usize,
    pub first_player: Player,
    /// The game stops as soon as Maker owns a component with this many
    /// vertices.
    pub target_s: Option<usize>,
    pub seed: u64,
}

impl GameConfig {
    /// Maker moves first, no target, seed 0.
    pub fn new(m: usize, b: usize) -> Self {
        GameConfig { m, b, first_player: Player::Maker, target_s: None, seed: 0 }
    }

    pub fn first(mut self, p: Player) -> Self {
        self.first_player = p;
        self
    }

    pub fn target(mut self, s: usize) -> Self {
        self.target_s = Some(s);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn bias(&self, p: Player) -> usize {
        match p {
            Player::Maker => self.m,
            Player::Breaker => self.b,
        }
    }

    pub fn validate(&self) -> Result<(), GameError> {
        if self.m == 0 || self.b == 0 {
            return Err(GameError::InvalidConfig("biases must be at least 1"));
        }
        if self.target_s.is_some_and(|s| s < 2) {
            return Err(GameError::InvalidConfig("target component size must be at least 2"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("orientation does not match the graph")]
    OrientationMismatch,
    #[error("the game is over")]
    GameOver,
    #[error("{player:?} moved out of turn")]
    OutOfTurn { player: Player },
    #[error("edge {edge} is out of range")]
    EdgeOutOfRange { edge: EdgeId },
    #[error("edge {edge} is not free")]
    EdgeNotFree { edge: EdgeId },
    #[error("vertex {vertex} is out of range")]
    UnknownVertex { vertex: Vertex },
}

/// One claimed edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub round: usize,
    pub player: Player,
    pub edge: EdgeId,
}

/// Snapshot of one Maker component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMeta {
    /// Members, increasing.
    pub vertices: Vec<Vertex>,
    pub root: Vertex,
    /// Tree parent of each member (aligned with `vertices`).
    pub parent: Vec<Option<Vertex>>,
    /// Height of each member (aligned with `vertices`).
    pub height: Vec<usize>,
    /// Number of free arcs entering the component (oriented games only).
    pub kind: Option<usize>,
    /// Free edges with at least one endpoint in the component.
    pub free_incident: usize,
    /// Free arcs leaving the component (oriented games only).
    pub free_out_arcs: Vec<EdgeId>,
}

impl ComponentMeta {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn height_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok().map(|i| self.height[i])
    }

    pub fn tree_height(&self) -> usize {
        self.height.iter().copied().max().unwrap_or(0)
    }

    /// `max_i w_i` over `i = 0..=h(T)`, where `w_i` counts members of height
    /// `i` plus free out-arcs whose tail has height below `i`. Needs the
    /// tail heights of the free out-arcs, which the caller supplies.
    pub fn width(&self, out_arc_heights: &[usize]) -> usize {
        let h = self.tree_height();
        let mut at = vec![0usize; h + 1];
        for &x in &self.height {
            at[x] += 1;
        }
        let mut below = vec![0usize; h + 2];
        for &x in out_arc_heights {
            if x < h + 1 {
                below[x + 1] += 1;
            }
        }
        let mut best = 0;
        let mut acc = 0;
        for i in 0..=h {
            acc += below[i];
            best = best.max(at[i] + acc);
        }
        best
    }
}

/// Mutable game state; borrows the board and, in oriented games, the
/// orientation.
#[derive(Debug, Clone)]
pub struct GameState<'g> {
    g: &'g Graph,
    cfg: GameConfig,
    orientation: Option<&'g Orientation>,
    owner: Vec<Owner>,
    free_count: usize,
    lowest_free: EdgeId,
    turn: Player,
    steps_left: usize,
    round: usize,
    over: bool,
    forfeited: Option<Player>,
    history: Vec<Step>,
    // Component id per vertex; ids are member vertices.
    comp: Vec<Vertex>,
    // Indexed by component id.
    members: Vec<Vec<Vertex>>,
    free_inc: Vec<BTreeSet<EdgeId>>,
    tree_root: Vec<Vertex>,
    live: BTreeSet<(Reverse<usize>, Vertex)>,
    max_size: usize,
    maker_adj: Vec<Vec<(Vertex, EdgeId)>>,
    parent: Vec<Option<Vertex>>,
    height: Vec<usize>,
    last_touched: Option<Vertex>,
    // Endpoints of Maker's steps in the current or most recent Maker move.
    move_touched: Vec<Vertex>,
}

impl<'g> GameState<'g> {
    pub fn new(g: &'g Graph, cfg: GameConfig) -> Result<Self, GameError> {
        cfg.validate()?;
        let n = g.n();
        let m = g.edge_count();
        let free_inc: Vec<BTreeSet<EdgeId>> =
            (0..n).map(|v| g.neighbors(v).iter().map(|&(_, e)| e).collect()).collect();
        let live = (0..n).filter(|&v| g.degree(v) > 0).map(|v| (Reverse(1), v)).collect();
        let mut st = GameState {
            g,
            cfg,
            orientation: None,
            owner: vec![Owner::Free; m],
            free_count: m,
            lowest_free: 0,
            turn: cfg.first_player,
            steps_left: cfg.bias(cfg.first_player).min(m),
            round: 1,
            over: m == 0,
            forfeited: None,
            history: Vec::new(),
            comp: (0..n).collect(),
            members: (0..n).map(|v| vec![v]).collect(),
            free_inc,
            tree_root: (0..n).collect(),
            live,
            max_size: usize::from(n > 0),
            maker_adj: vec![Vec::new(); n],
            parent: vec![None; n],
            height: vec![0; n],
            last_touched: None,
            move_touched: Vec::new(),
        };
        st.check_target();
        Ok(st)
    }

    /// A game that also maintains directed tree metadata for `o`.
    pub fn new_oriented(
        g: &'g Graph,
        cfg: GameConfig,
        o: &'g Orientation,
    ) -> Result<Self, GameError> {
        if !o.matches(g) {
            return Err(GameError::OrientationMismatch);
        }
        let mut st = Self::new(g, cfg)?;
        st.orientation = Some(o);
        Ok(st)
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn config(&self) -> &GameConfig {
        &self.cfg
    }

    pub fn orientation(&self) -> Option<&'g Orientation> {
        self.orientation
    }

    pub fn owner(&self, e: EdgeId) -> Owner {
        self.owner[e]
    }

    pub fn owners(&self) -> &[Owner] {
        &self.owner
    }

    pub fn is_free(&self, e: EdgeId) -> bool {
        self.owner[e] == Owner::Free
    }

    pub fn free_count(&self) -> usize {
        self.free_count
    }

    pub fn lowest_free_edge(&self) -> Option<EdgeId> {
        (self.lowest_free < self.owner.len()).then_some(self.lowest_free)
    }

    pub fn turn(&self) -> Player {
        self.turn
    }

    pub fn steps_left(&self) -> usize {
        self.steps_left
    }

    /// Current round, counting moves of the first player.
    pub fn round(&self) -> usize {
        self.round
    }

    pub fn is_over(&self) -> bool {
        self.over
    }

    pub fn forfeited(&self) -> Option<Player> {
        self.forfeited
    }

    pub fn history(&self) -> &[Step] {
        &self.history
    }

    pub fn maker_has_moved(&self) -> bool {
        self.last_touched.is_some()
    }

    /// Component id of `v`; ids are stable until the component merges.
    pub fn component_of(&self, v: Vertex) -> Vertex {
        self.comp[v]
    }

    pub fn same_component(&self, u: Vertex, v: Vertex) -> bool {
        self.comp[u] == self.comp[v]
    }

    pub fn component_size(&self, id: Vertex) -> usize {
        self.members[self.comp[id]].len()
    }

    pub fn members(&self, id: Vertex) -> &[Vertex] {
        &self.members[self.comp[id]]
    }

    /// Free edges with an endpoint in the component of `id`, increasing.
    pub fn free_incident_edges(&self, id: Vertex) -> &BTreeSet<EdgeId> {
        &self.free_inc[self.comp[id]]
    }

    pub fn free_incident(&self, id: Vertex) -> usize {
        self.free_incident_edges(id).len()
    }

    pub fn is_live(&self, id: Vertex) -> bool {
        self.free_incident(id) > 0
    }

    /// Live components, largest first, ties by id.
    pub fn live_components(&self) -> impl Iterator<Item = (usize, Vertex)> + '_ {
        self.live.iter().map(|&(Reverse(s), id)| (s, id))
    }

    pub fn max_component_size(&self) -> usize {
        self.max_size
    }

    /// Component Maker touched last.
    pub fn last_touched(&self) -> Option<Vertex> {
        self.last_touched.map(|v| self.comp[v])
    }

    /// Distinct components touched by Maker's current or most recent move,
    /// most recently touched first.
    pub fn touched_in_last_maker_move(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = Vec::new();
        for &v in self.move_touched.iter().rev() {
            let c = self.comp[v];
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    pub fn maker_neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.maker_adj[v]
    }

    /// Tree root of the component of `v` (oriented games).
    pub fn tree_root(&self, v: Vertex) -> Vertex {
        self.tree_root[self.comp[v]]
    }

    /// Height of `v` in its component's tree (oriented games).
    pub fn height(&self, v: Vertex) -> usize {
        self.height[v]
    }

    pub fn tree_parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    /// Claims `e` for `player`.
    pub fn apply_step(&mut self, player: Player, e: EdgeId) -> Result<(), GameError> {
        if self.over {
            return Err(GameError::GameOver);
        }
        if player != self.turn || self.steps_left == 0 {
            return Err(GameError::OutOfTurn { player });
        }
        if e >= self.owner.len() {
            return Err(GameError::EdgeOutOfRange { edge: e });
        }
        if self.owner[e] != Owner::Free {
            return Err(GameError::EdgeNotFree { edge: e });
        }
        if player == Player::Maker && self.history.last().is_none_or(|s| s.player != Player::Maker)
        {
            self.move_touched.clear();
        }
        self.owner[e] = player.into();
        self.free_count -= 1;
        while self.lowest_free < self.owner.len() && self.owner[self.lowest_free] != Owner::Free {
            self.lowest_free += 1;
        }
        self.history.push(Step { round: self.round, player, edge: e });
        let (u, v) = self.g.edge(e);
        for x in [u, v] {
            let c = self.comp[x];
            if self.free_inc[c].remove(&e) && self.free_inc[c].is_empty() {
                self.live.remove(&(Reverse(self.members[c].len()), c));
            }
        }
        if player == Player::Maker {
            self.maker_adj[u].push((v, e));
            self.maker_adj[v].push((u, e));
            if self.comp[u] != self.comp[v] {
                self.merge(e);
            }
            self.last_touched = Some(u);
            self.move_touched.push(u);
        }

        self.steps_left -= 1;
        if self.free_count == 0 {
            self.over = true;
        } else if self.steps_left == 0 {
            self.turn = self.turn.other();
            self.steps_left = self.cfg.bias(self.turn).min(self.free_count);
            if self.turn == self.cfg.first_player {
                self.round += 1;
            }
        }
        self.check_target();
        Ok(())
    }

    /// Ends the game; the player to move gives up.
    pub fn forfeit(&mut self, player: Player) -> Result<(), GameError> {
        if self.over {
            return Err(GameError::GameOver);
        }
        if player != self.turn {
            return Err(GameError::OutOfTurn { player });
        }
        self.forfeited = Some(player);
        self.over = true;
        Ok(())
    }

    fn check_target(&mut self) {
        if self.cfg.target_s.is_some_and(|s| self.max_size >= s) {
            self.over = true;
        }
    }

    fn merge(&mut self, e: EdgeId) {
        let (u, v) = self.g.edge(e);
        let (x, y) = match self.orientation {
            Some(o) => o.arc(e),
            None => (u, v),
        };
        let (cx, cy) = (self.comp[x], self.comp[y]);
        if self.orientation.is_some() {
            self.hang(x, y);
        }
        let root = self.tree_root[cx];
        for c in [cx, cy] {
            self.live.remove(&(Reverse(self.members[c].len()), c));
        }
        let (big, small) = if self.members[cx].len() >= self.members[cy].len() {
            (cx, cy)
        } else {
            (cy, cx)
        };
        let moved = core::mem::take(&mut self.members[small]);
        for &w in &moved {
            self.comp[w] = big;
        }
        self.members[big].extend(moved);
        let moved = core::mem::take(&mut self.free_inc[small]);
        self.free_inc[big].extend(moved);
        self.tree_root[big] = root;
        let size = self.members[big].len();
        self.max_size = self.max_size.max(size);
        if !self.free_inc[big].is_empty() {
            self.live.insert((Reverse(size), big));
        }
    }

    // Puts y's component below x: heights shift by h(x) + 1 when y is its
    // root, otherwise the component is re-rooted at y by breadth-first search.
    fn hang(&mut self, x: Vertex, y: Vertex) {
        let cy = self.comp[y];
        let base = self.height[x] + 1;
        if self.tree_root[cy] == y {
            for &w in &self.members[cy] {
                self.height[w] += base;
            }
        } else {
            let mut queue = VecDeque::from([y]);
            let mut seen = BTreeSet::from([y]);
            self.height[y] = base;
            while let Some(a) = queue.pop_front() {
                for &(b, _) in &self.maker_adj[a] {
                    if self.comp[b] == cy && seen.insert(b) {
                        self.parent[b] = Some(a);
                        self.height[b] = self.height[a] + 1;
                        queue.push_back(b);
                    }
                }
            }
        }
        self.parent[y] = Some(x);
    }

    /// Snapshot of the component containing `v`.
    ///
    /// In plain games the root is the lowest member and heights are
    /// breadth-first distances in Maker's graph.
    pub fn component_meta(&self, v: Vertex) -> Result<ComponentMeta, GameError> {
        if v >= self.g.n() {
            return Err(GameError::UnknownVertex { vertex: v });
        }
        let c = self.comp[v];
        let mut vertices = self.members[c].clone();
        vertices.sort_unstable();
        let (root, parent, height) = match self.orientation {
            Some(_) => (
                self.tree_root[c],
                vertices.iter().map(|&w| self.parent[w]).collect(),
                vertices.iter().map(|&w| self.height[w]).collect(),
            ),
            None => self.bfs_tree(&vertices),
        };
        let free = &self.free_inc[c];
        let (kind, free_out_arcs) = match self.orientation {
            Some(o) => {
                let mut kind = 0;
                let mut out = Vec::new();
                for &e in free {
                    let (a, b) = o.arc(e);
                    match (self.comp[a] == c, self.comp[b] == c) {
                        (false, true) => kind += 1,
                        (true, false) => out.push(e),
                        _ => {}
                    }
                }
                (Some(kind), out)
            }
            None => (None, Vec::new()),
        };
        Ok(ComponentMeta {
            vertices,
            root,
            parent,
            height,
            kind,
            free_incident: free.len(),
            free_out_arcs,
        })
    }

    fn bfs_tree(&self, vertices: &[Vertex]) -> (Vertex, Vec<Option<Vertex>>, Vec<usize>) {
        let root = vertices[0];
        let idx = |w: Vertex| vertices.binary_search(&w).unwrap();
        let mut parent = vec![None; vertices.len()];
        let mut height = vec![usize::MAX; vertices.len()];
        height[0] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            let ha = height[idx(a)];
            for &(b, _) in &self.maker_adj[a] {
                let ib = idx(b);
                if height[ib] == usize::MAX {
                    height[ib] = ha + 1;
                    parent[ib] = Some(a);
                    queue.push_back(b);
                }
            }
        }
        (root, parent, height)
    }

    /// Maker components recomputed from scratch as sorted vertex lists,
    /// sorted by smallest member.
    pub fn recompute_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let a = comp[i];
                i += 1;
                for (e, &(x, y)) in self.g.edges().iter().enumerate() {
                    if self.owner[e] == Owner::Maker && (x == a || y == a) {
                        let b = if x == a { y } else { x };
                        if !seen[b] {
                            seen[b] = true;
                            comp.push(b);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Tracked components as sorted vertex lists, sorted by smallest member.
    pub fn tracked_components(&self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = (0..self.g.n())
            .filter(|&v| self.comp[v] == v)
            .map(|v| {
                let mut m = self.members[v].clone();
                m.sort_unstable();
                m
            })
            .collect();
        out.sort_unstable();
        out
    }
}
