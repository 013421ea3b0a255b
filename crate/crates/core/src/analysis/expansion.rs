use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use super::AnalysisError;
use crate::graph::{Graph, Vertex};

/// Maximum number of connected vertex sets the exhaustive profile will visit.
pub const PROFILE_SUBSET_BUDGET: u64 = 10_000_000;

/// Edge isoperimetric profile `k -> min |E(S, V \ S)| / |S|` over
/// `1 <= |S| <= k`, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoperimetricProfile {
    /// `values[k - 1]` holds the value for `k`.
    pub values: Vec<Ratio<u64>>,
}

impl IsoperimetricProfile {
    pub fn get(&self, k: usize) -> Option<Ratio<u64>> {
        k.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }

    pub fn kmax(&self) -> usize {
        self.values.len()
    }
}

/// Exact profile up to `kmax`.
///
/// Only connected sets are enumerated: when `S` splits into parts with no
/// edges between them, its boundary is the sum of the parts' boundaries, so
/// its ratio is a mediant of theirs and never below the smallest one.
pub fn isoperimetric_profile(g: &Graph, kmax: usize) -> Result<IsoperimetricProfile, AnalysisError> {
    let n = g.n();
    if kmax < 1 || kmax > n / 2 {
        return Err(AnalysisError::Precondition(alloc::format!(
            "need 1 <= kmax <= n/2, got kmax = {kmax}, n = {n}"
        )));
    }
    let mut e = Enumerator {
        g,
        kmax,
        best: vec![u64::MAX; kmax + 1],
        in_sub: vec![false; n],
        blocked: vec![0; n],
        visited: 0,
    };
    for v in 0..n {
        e.in_sub[v] = true;
        e.block(v, 1);
        let ext: Vec<Vertex> = g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| w > v).collect();
        e.extend(v, 1, g.degree(v) as u64, ext)?;
        e.block(v, -1);
        e.in_sub[v] = false;
    }
    let mut values = Vec::with_capacity(kmax);
    let mut running: Option<Ratio<u64>> = None;
    for s in 1..=kmax {
        if e.best[s] != u64::MAX {
            let r = Ratio::new(e.best[s], s as u64);
            running = Some(running.map_or(r, |c| c.min(r)));
        }
        values.push(running.expect("singletons are always connected"));
    }
    Ok(IsoperimetricProfile { values })
}

struct Enumerator<'g> {
    g: &'g Graph,
    kmax: usize,
    best: Vec<u64>,
    in_sub: Vec<bool>,
    // Number of subset vertices that are the vertex itself or adjacent to it.
    blocked: Vec<i32>,
    visited: u64,
}

impl Enumerator<'_> {
    fn block(&mut self, v: Vertex, delta: i32) {
        self.blocked[v] += delta;
        for &(w, _) in self.g.neighbors(v) {
            self.blocked[w] += delta;
        }
    }

    // ESU-style enumeration: each connected set is produced once, from its
    // smallest vertex `root`.
    fn extend(
        &mut self,
        root: Vertex,
        size: usize,
        boundary: u64,
        mut ext: Vec<Vertex>,
    ) -> Result<(), AnalysisError> {
        self.visited += 1;
        if self.visited > PROFILE_SUBSET_BUDGET {
            return Err(AnalysisError::SizeGuard {
                what: "connected subsets enumerated",
                actual: self.visited as usize,
                limit: PROFILE_SUBSET_BUDGET as usize,
            });
        }
        self.best[size] = self.best[size].min(boundary);
        if size == self.kmax {
            return Ok(());
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            let mut inside = 0u64;
            for &(x, _) in self.g.neighbors(w) {
                if self.in_sub[x] {
                    inside += 1;
                } else if x > root && self.blocked[x] == 0 {
                    next.push(x);
                }
            }
            let boundary = boundary + self.g.degree(w) as u64 - 2 * inside;
            self.in_sub[w] = true;
            self.block(w, 1);
            let res = self.extend(root, size + 1, boundary, next);
            self.block(w, -1);
            self.in_sub[w] = false;
            res?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, petersen, random_regular};

    /// Naive oracle: every subset of size <= kmax, by bitmask.
    fn brute_profile(g: &Graph, kmax: usize) -> Vec<Ratio<u64>> {
        let n = g.n();
        let mut best = vec![None::<Ratio<u64>>; kmax + 1];
        for mask in 1u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size > kmax {
                continue;
            }
            let cut = g
                .edges()
                .iter()
                .filter(|&&(u, v)| ((mask >> u) & 1) != ((mask >> v) & 1))
                .count() as u64;
            let r = Ratio::new(cut, size as u64);
            best[size] = Some(best[size].map_or(r, |b: Ratio<u64>| b.min(r)));
        }
        let mut out = Vec::new();
        let mut running: Option<Ratio<u64>> = None;
        for b in best.into_iter().skip(1) {
            let b = b.unwrap();
            running = Some(running.map_or(b, |r| r.min(b)));
            out.push(running.unwrap());
        }
        out
    }

    #[test]
    fn complete_graph_formula() {
        // Psi(K_{n+1}, k) = n + 1 - k.
        for order in 4..=10 {
            let g = complete_graph(order).unwrap();
            let kmax = (order - 1) / 2;
            let p = isoperimetric_profile(&g, kmax).unwrap();
            for k in 1..=kmax {
                assert_eq!(p.get(k).unwrap(), Ratio::from_integer((order - k) as u64));
            }
        }
        let k5 = isoperimetric_profile(&complete_graph(5).unwrap(), 2).unwrap();
        assert_eq!(k5.get(2).unwrap(), Ratio::from_integer(3));
    }

    #[test]
    fn cycle_profile() {
        let p = isoperimetric_profile(&cycle_graph(8).unwrap(), 4).unwrap();
        for k in 1..=4u64 {
            assert_eq!(p.get(k as usize).unwrap(), Ratio::new(2, k));
        }
    }

    #[test]
    fn k4_profile() {
        let p = isoperimetric_profile(&complete_graph(4).unwrap(), 2).unwrap();
        assert_eq!(p.values, vec![Ratio::from_integer(3), Ratio::from_integer(2)]);
        assert_eq!(p.values, brute_profile(&complete_graph(4).unwrap(), 2));
    }

    #[test]
    fn matches_all_subsets_oracle() {
        for seed in 0..15 {
            for (n, d) in [(10, 3), (12, 3), (12, 4), (11, 4)] {
                let g = random_regular(n, d, seed).unwrap();
                let kmax = n / 2;
                let p = isoperimetric_profile(&g, kmax).unwrap();
                assert_eq!(p.values, brute_profile(&g, kmax), "n {n} d {d} seed {seed}");
                assert_eq!(p.get(1).unwrap(), Ratio::from_integer(g.min_degree() as u64));
                assert!(p.values.windows(2).all(|w| w[1] <= w[0]));
            }
        }
        let pg = petersen();
        assert_eq!(isoperimetric_profile(&pg, 5).unwrap().values, brute_profile(&pg, 5));
        let two = complete_graph(3).unwrap().disjoint_union(&cycle_graph(5).unwrap());
        assert_eq!(isoperimetric_profile(&two, 4).unwrap().values, brute_profile(&two, 4));
    }

    #[test]
    fn range_is_checked() {
        let g = complete_graph(4).unwrap();
        assert!(isoperimetric_profile(&g, 0).is_err());
        assert!(isoperimetric_profile(&g, 3).is_err());
    }

    #[test]
    fn budget_guard_fires() {
        let g = random_regular(300, 6, 1).unwrap();
        assert!(matches!(
            isoperimetric_profile(&g, 150),
            Err(AnalysisError::SizeGuard { .. })
        ));
    }
}
