//! Maximal linear paths and the edge decomposition they induce on a
//! connected graph.
//!
//! A linear path is a path (or closed walk, first vertex = last) whose
//! interior vertices have degree 2 in the host; it is maximal when no strict
//! linear-path superset exists. Every connected graph's edge set partitions
//! into its maximal linear paths; φ(G) counts them.

use crate::{Error, Graph, Result};

/// The decomposition: each path is a vertex sequence; closed paths repeat
/// the first vertex at the end. The order of a path is its sequence length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPathDecomposition {
    pub paths: Vec<Vec<usize>>,
    pub phi: usize,
}

impl LinearPathDecomposition {
    pub fn edge_total(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }
}

fn lex_min_direction(mut seq: Vec<usize>) -> Vec<usize> {
    let mut rev = seq.clone();
    rev.reverse();
    if rev < seq {
        seq = rev;
    }
    seq
}

/// Decomposes a connected graph (order >= 2) into its maximal linear paths.
/// A cycle yields a single closed path. Paths are sorted by (order,
/// lexicographic sequence); each path's direction is the lexicographically
/// smaller of the two traversals.
pub fn maximal_linear_paths(g: &Graph) -> Result<LinearPathDecomposition> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.vertices().all(|v| g.degree(v) == 2) {
        // The whole graph is one cycle: emit one closed path starting at the
        // smallest id, moving to its smaller neighbor first.
        let mut seq = vec![0usize];
        let mut prev = 0usize;
        let mut cur = g.neighbors(0).next().unwrap();
        seq.push(cur);
        while cur != 0 {
            let next = g.neighbors(cur).find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            seq.push(cur);
        }
        return Ok(LinearPathDecomposition {
            paths: vec![lex_min_direction(seq)],
            phi: 1,
        });
    }

    let mut used = vec![0u64; g.n()];
    let mut paths = Vec::new();
    for j in g.vertices().filter(|&v| g.degree(v) != 2) {
        for u in g.neighbors(j) {
            if used[j] >> u & 1 == 1 {
                continue;
            }
            let mut seq = vec![j, u];
            used[j] |= 1u64 << u;
            used[u] |= 1u64 << j;
            let mut prev = j;
            let mut cur = u;
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).find(|&w| w != prev).unwrap();
                used[cur] |= 1u64 << next;
                used[next] |= 1u64 << cur;
                prev = cur;
                cur = next;
                seq.push(cur);
            }
            paths.push(lex_min_direction(seq));
        }
    }
    paths.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let phi = paths.len();
    Ok(LinearPathDecomposition { paths, phi })
}

/// Verifies 2φ(G) = Σ_{v: d(v) != 2} d(v) against the computed
/// decomposition. Cycles are rejected; the identity does not apply.
pub fn phi_identity_check(g: &Graph) -> Result<bool> {
    if g.n() >= 2 && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2) {
        return Err(Error::CycleInput);
    }
    let d = maximal_linear_paths(g)?;
    let non_deg2_sum: usize = g
        .vertices()
        .filter(|&v| g.degree(v) != 2)
        .map(|v| g.degree(v))
        .sum();
    Ok(2 * d.phi == non_deg2_sum)
}

/// A maximum-order path of the decomposition; ties break to the
/// lexicographically least sequence.
pub fn longest_maximal_linear_path(g: &Graph) -> Result<Vec<usize>> {
    let d = maximal_linear_paths(g)?;
    // Paths are sorted by (order, sequence): the first of maximal order is
    // the lexicographically least one.
    let max_len = d.paths.last().expect("decomposition is nonempty").len();
    Ok(d.paths.iter().find(|p| p.len() == max_len).unwrap().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as cons;
    use std::collections::HashSet;

    fn assert_partitions_edges(g: &Graph, d: &LinearPathDecomposition) {
        let mut covered = HashSet::new();
        for p in &d.paths {
            for w in p.windows(2) {
                let e = (w[0].min(w[1]), w[0].max(w[1]));
                assert!(g.has_edge(e.0, e.1), "path uses non-edge {e:?}");
                assert!(covered.insert(e), "edge {e:?} repeated");
            }
        }
        assert_eq!(covered.len(), g.edge_count(), "edges not exhausted");
    }

    #[test]
    fn cycle_is_single_closed_path() {
        let c7 = cons::cycle(7).unwrap();
        let d = maximal_linear_paths(&c7).unwrap();
        assert_eq!(d.phi, 1);
        assert_eq!(d.paths[0].len(), 8);
        assert_eq!(d.paths[0][0], d.paths[0][7]);
        assert_partitions_edges(&c7, &d);
        assert!(matches!(phi_identity_check(&c7), Err(Error::CycleInput)));
    }

    #[test]
    fn path_is_single_open_path() {
        let p6 = cons::path(6).unwrap();
        let d = maximal_linear_paths(&p6).unwrap();
        assert_eq!(d.phi, 1);
        assert_eq!(d.paths[0], vec![0, 1, 2, 3, 4, 5]);
        assert!(phi_identity_check(&p6).unwrap());
    }

    #[test]
    fn subdivided_k4_decomposition() {
        let g = cons::subdivided_clique(4, 3).unwrap();
        let d = maximal_linear_paths(&g).unwrap();
        assert_eq!(d.phi, 6);
        assert_partitions_edges(&g, &d);
        // Five single edges among the degree-3 vertices plus the length-4
        // subdivided path.
        let orders: Vec<usize> = d.paths.iter().map(|p| p.len()).collect();
        assert_eq!(orders, vec![2, 2, 2, 2, 2, 5]);
        assert!(phi_identity_check(&g).unwrap());
        let longest = longest_maximal_linear_path(&g).unwrap();
        assert_eq!(longest.len(), 5);
    }

    #[test]
    fn longest_path_of_big_subdivision() {
        for n in 6..=10 {
            let g = cons::subdivided_clique(4, n - 4).unwrap();
            let longest = longest_maximal_linear_path(&g).unwrap();
            assert_eq!(longest.len(), n - 2);
        }
        // K4 has no degree-2 vertices: every edge is its own path.
        let k4 = cons::complete(4).unwrap();
        let longest = longest_maximal_linear_path(&k4).unwrap();
        assert_eq!(longest.len(), 2);
        assert_eq!(longest, vec![0, 1]);
    }

    #[test]
    fn endpoint_law() {
        let g = cons::flower(&[3, 4]).unwrap();
        let d = maximal_linear_paths(&g).unwrap();
        for p in &d.paths {
            if p[0] != p[p.len() - 1] {
                assert_ne!(g.degree(p[0]), 2);
                assert_ne!(g.degree(p[p.len() - 1]), 2);
            }
        }
        assert_partitions_edges(&g, &d);
    }

    #[test]
    fn flower_petals_are_closed_paths() {
        // Every petal of a flower is a closed linear path at the hub.
        let g = cons::flower(&[3, 3, 4]).unwrap();
        let d = maximal_linear_paths(&g).unwrap();
        assert_eq!(d.phi, 3);
        for p in &d.paths {
            assert_eq!(p[0], p[p.len() - 1]);
            assert_eq!(p[0], 0);
        }
        assert!(phi_identity_check(&g).unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(maximal_linear_paths(&Graph::empty(1).unwrap()).is_err());
        let disconnected =
            Graph::disjoint_union(&[cons::path(2).unwrap(), cons::path(2).unwrap()]).unwrap();
        assert!(maximal_linear_paths(&disconnected).is_err());
    }

    #[test]
    fn pigeonhole_floor() {
        for g in [
            cons::subdivided_clique(4, 4).unwrap(),
            cons::flower(&[3, 5]).unwrap(),
            cons::wheel(6).unwrap(),
        ] {
            let d = maximal_linear_paths(&g).unwrap();
            let longest = longest_maximal_linear_path(&g).unwrap();
            assert!(longest.len() * d.phi >= g.edge_count() + d.phi);
        }
    }
}
