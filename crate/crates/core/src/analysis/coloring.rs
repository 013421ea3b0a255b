use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::AnalysisError;
use crate::graph::{Graph, Vertex};

/// Largest graph [`exact_chromatic`] accepts.
pub const EXACT_CHROMATIC_MAX_N: usize = 30;

/// Vertex coloring with colors `1..=num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Coloring {
    pub colors: Vec<u32>,
    pub num_colors: u32,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c >= 1 && c <= self.num_colors)
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Repeatedly removes a vertex of minimum remaining degree (lowest index on
/// ties). Returns the removal order and the degeneracy, the largest degree
/// seen at removal time.
pub fn degeneracy_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    (order, degeneracy)
}

/// First-fit coloring along `order`, which must be a permutation of the
/// vertices.
pub fn greedy_coloring(g: &Graph, order: &[Vertex]) -> Result<Coloring, AnalysisError> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || core::mem::replace(&mut seen[v], true))
    {
        return Err(AnalysisError::Precondition("order is not a permutation of V".into()));
    }
    let mut colors = vec![0u32; n];
    let mut used = Vec::new();
    let mut num_colors = 0;
    for &v in order {
        used.clear();
        used.resize(g.degree(v) + 2, false);
        for &(w, _) in g.neighbors(v) {
            let c = colors[w] as usize;
            if c > 0 && c < used.len() {
                used[c] = true;
            }
        }
        let c = (1..used.len()).find(|&c| !used[c]).unwrap() as u32;
        colors[v] = c;
        num_colors = num_colors.max(c);
    }
    Ok(Coloring { colors, num_colors })
}

/// DSATUR: color next the uncolored vertex with the most distinct neighbor
/// colors, then the highest degree, then the lowest index.
pub fn dsatur_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![0u32; n];
    let mut neighbor_colors: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    let key = |sat: usize, v: Vertex| (Reverse(sat), Reverse(g.degree(v)), v);
    let mut queue: BTreeSet<_> = (0..n).map(|v| key(0, v)).collect();
    let mut num_colors = 0;
    while let Some((_, _, v)) = queue.pop_first() {
        let taken = &neighbor_colors[v];
        let c = (1..).find(|c| !taken.contains(c)).unwrap();
        colors[v] = c;
        num_colors = num_colors.max(c);
        for &(w, _) in g.neighbors(v) {
            if colors[w] == 0 && !neighbor_colors[w].contains(&c) {
                queue.remove(&key(neighbor_colors[w].len(), w));
                neighbor_colors[w].insert(c);
                queue.insert(key(neighbor_colors[w].len(), w));
            }
        }
    }
    Coloring { colors, num_colors }
}

/// Chromatic number by branch and bound, for graphs with at most
/// [`EXACT_CHROMATIC_MAX_N`] vertices.
pub fn exact_chromatic(g: &Graph) -> Result<u32, AnalysisError> {
    let n = g.n();
    if n > EXACT_CHROMATIC_MAX_N {
        return Err(AnalysisError::SizeGuard {
            what: "vertices for exact chromatic number",
            actual: n,
            limit: EXACT_CHROMATIC_MAX_N,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let upper = dsatur_coloring(g).num_colors;
    let lower = if g.edge_count() > 0 { 2 } else { 1 };
    for k in lower..upper {
        let mut colors = vec![0u32; n];
        if colorable(g, k, &mut colors) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn colorable(g: &Graph, k: u32, colors: &mut [u32]) -> bool {
    // Most constrained uncolored vertex first.
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    for v in 0..g.n() {
        if colors[v] != 0 {
            continue;
        }
        let mut mask = 0u64;
        for &(w, _) in g.neighbors(v) {
            if colors[w] != 0 {
                mask |= 1 << colors[w];
            }
        }
        let key = (mask.count_ones() as usize, g.degree(v));
        if pick.is_none() || key > pick_key {
            pick = Some((v, mask));
            pick_key = key;
        }
    }
    let Some((v, mask)) = pick else {
        return true;
    };
    // Colors above the largest used so far are interchangeable.
    let max_used = colors.iter().copied().max().unwrap_or(0);
    for c in 1..=k.min(max_used + 1) {
        if mask & (1 << c) == 0 {
            colors[v] = c;
            if colorable(g, k, colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_ary_tree, complete_graph, cycle_graph, petersen, random_regular};

    /// Oracle: try every assignment of k colors.
    fn brute_chromatic(g: &Graph) -> u32 {
        let n = g.n();
        for k in 1..=n as u32 {
            let total = (k as u64).pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let colors: Vec<u64> = (0..n)
                    .map(|_| {
                        let x = c % k as u64;
                        c /= k as u64;
                        x
                    })
                    .collect();
                if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                    return k;
                }
            }
        }
        n as u32
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_order(&complete_ary_tree(3, 4).unwrap()).1, 1);
        assert_eq!(degeneracy_order(&complete_graph(4).unwrap()).1, 3);
        // Petersen is 3-regular and every proper subgraph has a vertex of
        // degree <= 2, so peeling starts at 3 and never exceeds it.
        assert_eq!(degeneracy_order(&petersen()).1, 3);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(exact_chromatic(&complete_graph(4).unwrap()).unwrap(), 4);
        assert_eq!(dsatur_coloring(&complete_graph(4).unwrap()).num_colors, 4);
        assert_eq!(exact_chromatic(&cycle_graph(5).unwrap()).unwrap(), 3);
        assert_eq!(exact_chromatic(&cycle_graph(6).unwrap()).unwrap(), 2);
        assert_eq!(exact_chromatic(&petersen()).unwrap(), 3);
        assert_eq!(brute_chromatic(&petersen()), 3);
        assert!(exact_chromatic(&random_regular(32, 3, 1).unwrap()).is_err());
    }

    #[test]
    fn exact_matches_brute_force() {
        for seed in 0..10 {
            let g = random_regular(8, 3, seed).unwrap();
            assert_eq!(exact_chromatic(&g).unwrap(), brute_chromatic(&g));
            let g = random_regular(8, 4, seed).unwrap();
            assert_eq!(exact_chromatic(&g).unwrap(), brute_chromatic(&g));
        }
    }

    #[test]
    fn greedy_rejects_bad_order() {
        let g = complete_graph(3).unwrap();
        assert!(greedy_coloring(&g, &[0, 1]).is_err());
        assert!(greedy_coloring(&g, &[0, 1, 1]).is_err());
        assert!(greedy_coloring(&g, &[0, 1, 2]).unwrap().is_proper(&g));
    }

    #[test]
    fn reverse_degeneracy_order_coloring_bound() {
        for seed in 0..30 {
            for d in [3, 4, 5] {
                let g = random_regular(40, d, seed).unwrap();
                let (mut order, k) = degeneracy_order(&g);
                order.reverse();
                let c = greedy_coloring(&g, &order).unwrap();
                assert!(c.is_proper(&g));
                assert!(c.num_colors as usize <= k + 1);
                let ds = dsatur_coloring(&g);
                assert!(ds.is_proper(&g));
            }
        }
    }
}
