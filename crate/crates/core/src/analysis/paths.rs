use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::AnalysisError;
use crate::graph::Vertex;
use crate::orientation::{Orientation, OrientationCertificate};

/// Largest vertex count [`longest_directed_path_exact`] accepts.
pub const EXACT_LONGEST_PATH_MAX_N: usize = 48;

/// Length in edges of a longest simple directed path, by exhaustive search.
///
/// Strongly connected components are processed in topological order; a
/// simple path leaves each component at most once, so only the paths inside
/// one component are enumerated at a time.
pub fn longest_directed_path_exact(o: &Orientation) -> Result<usize, AnalysisError> {
    let n = o.n();
    if n > EXACT_LONGEST_PATH_MAX_N {
        return Err(AnalysisError::SizeGuard {
            what: "vertices for exact longest path",
            actual: n,
            limit: EXACT_LONGEST_PATH_MAX_N,
        });
    }
    let out = o.out_adjacency();
    let (comp, count) = scc(&out);
    // Tarjan numbers components in reverse topological order.
    let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); count];
    for v in 0..n {
        members[comp[v]].push(v);
    }
    let mut entry: Vec<usize> = vec![0; n];
    let mut end: Vec<usize> = vec![0; n];
    for c in (0..count).rev() {
        let mut mask = 0u64;
        for &v in &members[c] {
            mask |= 1 << v;
        }
        for &p in &members[c] {
            let mut best = end.clone();
            dfs_inside(&out, mask, p, 1 << p, entry[p], &mut best);
            for &v in &members[c] {
                end[v] = end[v].max(best[v]);
            }
        }
        for &x in &members[c] {
            for &(y, _) in &out[x] {
                if comp[y] != c {
                    entry[y] = entry[y].max(end[x] + 1);
                }
            }
        }
    }
    Ok(end.into_iter().max().unwrap_or(0))
}

fn dfs_inside(
    out: &[Vec<(Vertex, usize)>],
    mask: u64,
    x: Vertex,
    used: u64,
    len: usize,
    best: &mut [usize],
) {
    best[x] = best[x].max(len);
    for &(y, _) in &out[x] {
        if mask & (1 << y) != 0 && used & (1 << y) == 0 {
            dfs_inside(out, mask, y, used | (1 << y), len + 1, best);
        }
    }
}

/// Tarjan's algorithm; returns the component per vertex and the count.
fn scc(out: &[Vec<(Vertex, usize)>]) -> (Vec<usize>, usize) {
    const NONE: usize = usize::MAX;
    let n = out.len();
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![NONE; n];
    let mut count = 0;
    let mut next = 0;
    // Explicit call stack of (vertex, next neighbor position).
    let mut calls: Vec<(Vertex, usize)> = Vec::new();
    for s in 0..n {
        if index[s] != NONE {
            continue;
        }
        calls.push((s, 0));
        index[s] = next;
        low[s] = next;
        next += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (v, ref mut pos)) = calls.last_mut() {
            if let Some(&(w, _)) = out[v].get(*pos) {
                *pos += 1;
                if index[w] == NONE {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp[w] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    (comp, count)
}

/// Longest simple directed path using the certificate's structure: outside
/// the cycles the orientation is acyclic, nothing leaves a cycle, and a path
/// that enters a cycle of length `c` can add at most `c - 1` more edges.
///
/// Fails if the orientation does not have that structure.
pub fn longest_directed_path_structured(
    o: &Orientation,
    cert: &OrientationCertificate,
) -> Result<usize, AnalysisError> {
    let n = o.n();
    let mismatch = |msg: alloc::string::String| Err(AnalysisError::CertificateMismatch(msg));
    let mut cycle_of = vec![usize::MAX; n];
    let mut succ = vec![usize::MAX; n];
    for (i, c) in cert.collection.cycles.iter().enumerate() {
        if c.len() < 3 {
            return mismatch(format!("cycle {i} is shorter than 3"));
        }
        for (j, &v) in c.iter().enumerate() {
            if v >= n || cycle_of[v] != usize::MAX {
                return mismatch(format!("cycle {i} reuses or misnames vertex {v}"));
            }
            cycle_of[v] = i;
            succ[v] = c[(j + 1) % c.len()];
        }
    }
    let mut seen_cycle_arc = vec![0usize; cert.collection.cycles.len()];
    let mut indeg = vec![0usize; n];
    for &(a, b) in o.arcs() {
        if cycle_of[a] != usize::MAX {
            if succ[a] != b {
                return mismatch(format!("arc {a} -> {b} leaves or cuts across a cycle"));
            }
            seen_cycle_arc[cycle_of[a]] += 1;
        } else if cycle_of[b] == usize::MAX {
            indeg[b] += 1;
        }
    }
    for (i, c) in cert.collection.cycles.iter().enumerate() {
        if seen_cycle_arc[i] != c.len() {
            return mismatch(format!("cycle {i} is not a directed cycle"));
        }
    }
    let out = o.out_adjacency();
    // Longest path ending at each non-cycle vertex, in topological order.
    let mut end = vec![0usize; n];
    let mut queue: VecDeque<Vertex> =
        (0..n).filter(|&v| cycle_of[v] == usize::MAX && indeg[v] == 0).collect();
    let mut processed = 0;
    let mut best = 0;
    while let Some(x) = queue.pop_front() {
        processed += 1;
        best = best.max(end[x]);
        for &(y, _) in &out[x] {
            if cycle_of[y] == usize::MAX {
                end[y] = end[y].max(end[x] + 1);
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            } else {
                let c = cert.collection.cycles[cycle_of[y]].len();
                best = best.max(end[x] + c);
            }
        }
    }
    let outside = cycle_of.iter().filter(|&&c| c == usize::MAX).count();
    if processed != outside {
        return mismatch("orientation outside the cycles has a directed cycle".into());
    }
    for c in &cert.collection.cycles {
        best = best.max(c.len() - 1);
    }
    Ok(best)
}
