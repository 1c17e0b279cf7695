//! Generators for the named graph families: books, wheels, flowers, complete
//! multipartite graphs, subdivided cliques, the star forests H_{s1,s2} and
//! their subdivided complements, the extremal candidate G^▲ with its
//! quotient/remainder case analysis, and the regular family G^▼.

use crate::{Error, Graph, Result};

/// Part sizes of a complete multipartite graph, stored nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    /// Normalizes to nonincreasing order; parts must be positive.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameters("no parts given".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameters(
                "part sizes must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MultipartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn s1(&self) -> usize {
        self.parts[0]
    }

    pub fn s2(&self) -> usize {
        self.parts[1]
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// γ = s_2 + … + s_r − 1.
    pub fn gamma(&self) -> usize {
        self.parts[1..].iter().sum::<usize>().saturating_sub(1)
    }
}

/// The derived quantities of the G^▲ case analysis: β, β₀ from s₁, s₂ and
/// p, q from n − γ = p·s₁ + q with 1 ≤ q ≤ s₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockParams {
    pub gamma: usize,
    pub beta: usize,
    pub beta0: usize,
    pub p: usize,
    pub q: usize,
}

impl BlockParams {
    pub fn new(n: usize, spec: &MultipartiteSpec) -> Result<Self> {
        if spec.parts().len() < 2 {
            return Err(Error::InvalidParameters(
                "a forbidden complete multipartite minor needs at least 2 parts".into(),
            ));
        }
        let s1 = spec.s1();
        let s2 = spec.s2();
        let gamma = spec.gamma();
        if gamma < 1 {
            return Err(Error::InvalidParameters(format!(
                "gamma = {gamma} must be at least 1"
            )));
        }
        if n <= gamma {
            return Err(Error::InvalidParameters(format!(
                "order {n} leaves no room beyond the {gamma}-clique"
            )));
        }
        let m = n - gamma;
        if m < s1 {
            return Err(Error::InvalidParameters(format!(
                "n - gamma = {m} is smaller than s1 = {s1}"
            )));
        }
        let beta = (s1 + 1) / (s2 + 1);
        let beta0 = (s1 + 1) - beta * (s2 + 1);
        let q = (m - 1) % s1 + 1;
        let p = (m - q) / s1;
        debug_assert!(beta * (s2 + 1) + beta0 == s1 + 1 && beta0 <= s2);
        debug_assert!(p * s1 + q == m && (1..=s1).contains(&q));
        Ok(BlockParams {
            gamma,
            beta,
            beta0,
            p,
            q,
        })
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::empty(n)?;
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("cycle length {n} < 3")));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// The book B_{γ,t}: a γ-clique joined to an independent set of size t.
/// Clique vertices take ids 0..γ.
pub fn book(gamma: usize, t: usize) -> Result<Graph> {
    complete(gamma)?.join(&Graph::empty(t)?)
}

/// B^k_{s,t}: the book plus a k-edge matching inside its independent set.
pub fn book_with_matching(s: usize, t: usize, k: usize) -> Result<Graph> {
    if 2 * k > t {
        return Err(Error::InvalidParameters(format!(
            "matching of {k} edges does not fit in an independent set of {t}"
        )));
    }
    let b = book(s, t)?;
    let mut g = b;
    for i in 0..k {
        g = g.with_edge(s + 2 * i, s + 2 * i + 1)?;
    }
    Ok(g)
}

/// Complete multipartite graph; part 1 takes the lowest ids.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> Result<Graph> {
    let n = spec.order();
    Graph::empty(n)?;
    let mut edges = Vec::new();
    let mut starts = Vec::with_capacity(spec.parts().len() + 1);
    let mut acc = 0;
    for &s in spec.parts() {
        starts.push(acc);
        acc += s;
    }
    starts.push(acc);
    for a in 0..spec.parts().len() {
        for b in (a + 1)..spec.parts().len() {
            for u in starts[a]..starts[a + 1] {
                for v in starts[b]..starts[b + 1] {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Convenience wrapper taking raw part sizes.
pub fn complete_multipartite_parts(parts: &[usize]) -> Result<Graph> {
    complete_multipartite(&MultipartiteSpec::new(parts.to_vec())?)
}

/// The star forest H_{s1,s2} = (β−1)K_{1,s2} ∪ K_{1,s2+β0}, order s1+1.
pub fn star_forest(s1: usize, s2: usize) -> Result<Graph> {
    if s2 < 1 || s1 < s2 {
        return Err(Error::InvalidParameters(format!(
            "star forest needs s1 >= s2 >= 1, got ({s1}, {s2})"
        )));
    }
    let beta = (s1 + 1) / (s2 + 1);
    let beta0 = (s1 + 1) - beta * (s2 + 1);
    let mut parts = Vec::with_capacity(beta);
    for _ in 0..beta.saturating_sub(1) {
        parts.push(book(1, s2)?);
    }
    parts.push(book(1, s2 + beta0)?);
    let g = Graph::disjoint_union(&parts)?;
    debug_assert_eq!(g.n(), s1 + 1);
    Ok(g)
}

/// Lexicographically least edge of `g` among those minimizing d(u)+d(v).
fn min_degree_sum_edge(g: &Graph) -> Option<(usize, usize)> {
    g.edges()
        .min_by_key(|&(u, v)| (g.degree(u) + g.degree(v), u, v))
}

/// S(̄H_{s1,s2}): one minimum-degree-sum edge of the complement of the star
/// forest, subdivided once. Ties break to the smallest (u, v) pair; an
/// explicit-edge variant is exposed for callers that want a different one.
pub fn subdivided_complement_star_forest(s1: usize, s2: usize) -> Result<Graph> {
    let h = star_forest(s1, s2)?.complement();
    let (u, v) = min_degree_sum_edge(&h).ok_or_else(|| {
        Error::InvalidParameters("complement of the star forest has no edge".into())
    })?;
    h.subdivide_edge(u, v, 1)
}

/// Explicit-edge variant of [`subdivided_complement_star_forest`].
pub fn subdivided_complement_star_forest_at(
    s1: usize,
    s2: usize,
    u: usize,
    v: usize,
) -> Result<Graph> {
    star_forest(s1, s2)?.complement().subdivide_edge(u, v, 1)
}

/// S^ℓ(K_t): the complete graph with one edge subdivided ℓ times.
pub fn subdivided_clique(t: usize, ell: usize) -> Result<Graph> {
    let k = complete(t)?;
    if ell == 0 {
        return Ok(k);
    }
    if t < 2 {
        return Err(Error::InvalidParameters(format!(
            "K_{t} has no edge to subdivide"
        )));
    }
    k.subdivide_edge(0, 1, ell)
}

/// The wheel W_{k+1} = K_1 ∇ C_k; hub gets id 0.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!(
            "wheel rim length {k} < 3"
        )));
    }
    complete(1)?.join(&cycle(k)?)
}

/// The t-flower: cycles of the given lengths sharing exactly one vertex
/// (id 0). Order is 1 + Σ(s_i − 1).
pub fn flower(lengths: &[usize]) -> Result<Graph> {
    if lengths.is_empty() {
        return Err(Error::InvalidParameters(
            "flower needs at least one cycle".into(),
        ));
    }
    if let Some(&bad) = lengths.iter().find(|&&s| s < 3) {
        return Err(Error::InvalidParameters(format!("cycle length {bad} < 3")));
    }
    let n = 1 + lengths.iter().map(|s| s - 1).sum::<usize>();
    Graph::empty(n)?;
    let mut edges = Vec::new();
    let mut next = 1;
    for &s in lengths {
        let ring: Vec<usize> = std::iter::once(0).chain(next..next + s - 1).collect();
        for i in 0..ring.len() {
            edges.push((ring[i], ring[(i + 1) % ring.len()]));
        }
        next += s - 1;
    }
    Graph::from_edges(n, &edges)
}

/// The Petersen graph in its Kneser (5,2) presentation: vertices are the
/// 2-subsets of {0..4} in lexicographic order, edges between disjoint pairs.
pub fn petersen() -> Graph {
    let mut pairs = Vec::with_capacity(10);
    for a in 0..5 {
        for b in (a + 1)..5 {
            pairs.push((a, b));
        }
    }
    let mut edges = Vec::new();
    for i in 0..10 {
        for j in (i + 1)..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, &edges).expect("petersen fits")
}

/// G^▲ of the case table: the (n−γ)-vertex graph joined under K_γ in the
/// extremal construction for a forbidden K_{s1,…,sr} minor.
pub fn g_triangle(n: usize, spec: &MultipartiteSpec) -> Result<Graph> {
    let bp = BlockParams::new(n, spec)?;
    let s1 = spec.s1();
    let s2 = spec.s2();
    let BlockParams { beta, p, q, .. } = bp;

    let g = if (q, beta) == (2, 2) {
        let mut parts = vec![complete(s1)?; p - 1];
        parts.push(subdivided_complement_star_forest(s1, s2)?);
        Graph::disjoint_union(&parts)?
    } else if (q, beta, s1) == (2, 1, 8) {
        let mut parts = vec![complete(s1)?; p - 1];
        parts.push(petersen().complement());
        Graph::disjoint_union(&parts)?
    } else if q <= 2 * (beta - 1) {
        let mut parts = vec![complete(s1)?; p - q];
        parts.extend(std::iter::repeat_n(star_forest(s1, s2)?.complement(), q));
        Graph::disjoint_union(&parts)?
    } else {
        let mut parts = vec![complete(s1)?; p];
        parts.push(complete(q)?);
        Graph::disjoint_union(&parts)?
    };
    debug_assert_eq!(g.n(), n - bp.gamma);
    Ok(g)
}

/// Members of the G^▼ family: (s1−1)-regular K_{s1,1}-minor-free graphs of
/// order n−γ for odd s1: disjoint unions of cycles when s1 = 3, and of
/// K_{s1} and ̄H_{s1,1} otherwise. Emits up to `limit` members, distinct up
/// to isomorphism, ordered by lexicographic component multisets.
pub fn g_down_members(n: usize, s1: usize, gamma: usize, limit: usize) -> Result<Vec<Graph>> {
    if s1.is_multiple_of(2) || s1 < 3 {
        return Err(Error::InvalidParameters(format!(
            "s1 = {s1} must be odd and at least 3"
        )));
    }
    if n <= gamma {
        return Err(Error::InvalidParameters(format!(
            "order {n} leaves no room beyond the {gamma}-clique"
        )));
    }
    let m = n - gamma;
    let mut out = Vec::new();
    if s1 == 3 {
        // Partitions of m into cycle lengths >= 3, nonincreasing,
        // enumerated in lexicographically decreasing order.
        let mut parts: Vec<usize> = Vec::new();
        fn rec(m: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<Graph>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            if m == 0 {
                let cycles: Vec<Graph> = parts.iter().map(|&c| cycle(c).unwrap()).collect();
                out.push(Graph::disjoint_union(&cycles).unwrap());
                return;
            }
            let mut c = max.min(m);
            while c >= 3 {
                if m - c != 0 && m - c < 3 {
                    c -= 1;
                    continue;
                }
                parts.push(c);
                rec(m - c, c, parts, out, limit);
                parts.pop();
                c -= 1;
            }
        }
        if m < 3 {
            return Err(Error::InvalidParameters(format!(
                "no disjoint union of cycles has order {m}"
            )));
        }
        rec(m, m, &mut parts, &mut out, limit);
    } else {
        // a copies of K_{s1} plus b copies of ̄H_{s1,1}; a·s1 + b·(s1+1) = m.
        let h_bar = star_forest(s1, 1)?.complement();
        let mut found = false;
        let mut b = 0usize;
        while b * (s1 + 1) <= m {
            let rest = m - b * (s1 + 1);
            if rest.is_multiple_of(s1) {
                found = true;
                if out.len() < limit {
                    let a = rest / s1;
                    let mut parts = vec![complete(s1)?; a];
                    parts.extend(std::iter::repeat_n(h_bar.clone(), b));
                    out.push(Graph::disjoint_union(&parts)?);
                }
            }
            b += 1;
        }
        if !found {
            return Err(Error::InvalidParameters(format!(
                "order {m} is not expressible with components of order {s1} and {}",
                s1 + 1
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn book_formulas() {
        let star = book(1, 7).unwrap();
        assert!(is_isomorphic(
            &star,
            &complete_multipartite_parts(&[7, 1]).unwrap()
        ));
        let b = book(2, 8).unwrap();
        assert_eq!((b.n(), b.edge_count()), (10, 17));
        let k = book(4, 0).unwrap();
        assert!(is_isomorphic(&k, &complete(4).unwrap()));
        for gamma in 1..5usize {
            for t in 0..6usize {
                let b = book(gamma, t).unwrap();
                assert_eq!(b.edge_count(), gamma * (gamma - 1) / 2 + gamma * t);
            }
        }
    }

    #[test]
    fn book_matching_edges() {
        let b1 = book_with_matching(2, 8, 1).unwrap();
        assert_eq!(b1.edge_count(), 18);
        assert_eq!(book_with_matching(2, 8, 0).unwrap(), book(2, 8).unwrap());
        assert!(book_with_matching(2, 3, 2).is_err());
    }

    #[test]
    fn multipartite_sizes() {
        let k33 = complete_multipartite_parts(&[3, 3]).unwrap();
        assert_eq!((k33.n(), k33.edge_count()), (6, 9));
        let k22 = complete_multipartite_parts(&[2, 2]).unwrap();
        assert!(is_isomorphic(&k22, &cycle(4).unwrap()));
        // K_{s1,1,...,1} with r-1 ones is the book B_{r-1,s1}.
        let h = complete_multipartite_parts(&[4, 1, 1]).unwrap();
        assert!(is_isomorphic(&h, &book(2, 4).unwrap()));
        let spec = MultipartiteSpec::new(vec![1, 3, 2]).unwrap();
        assert_eq!(spec.parts(), &[3, 2, 1]);
        let sum: usize = spec
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &a)| spec.parts()[i + 1..].iter().map(|&b| a * b).sum::<usize>())
            .sum();
        assert_eq!(complete_multipartite(&spec).unwrap().edge_count(), sum);
    }

    #[test]
    fn star_forest_shapes() {
        // H_{4,1} = K_{1,1} ∪ K_{1,2}
        let h41 = star_forest(4, 1).unwrap();
        let expected = Graph::disjoint_union(&[book(1, 1).unwrap(), book(1, 2).unwrap()]).unwrap();
        assert!(is_isomorphic(&h41, &expected));
        // H_{5,1} = 3 disjoint edges
        let h51 = star_forest(5, 1).unwrap();
        let three_edges = Graph::disjoint_union(&[
            book(1, 1).unwrap(),
            book(1, 1).unwrap(),
            book(1, 1).unwrap(),
        ])
        .unwrap();
        assert!(is_isomorphic(&h51, &three_edges));
        for s1 in 1..9 {
            for s2 in 1..=s1 {
                assert_eq!(star_forest(s1, s2).unwrap().n(), s1 + 1);
            }
        }
    }

    #[test]
    fn complement_star_forest_identities() {
        // ̄H_{4,1} ≅ S^1(K_4) and S(̄H_{4,1}) ≅ S^2(K_4)
        let h41c = star_forest(4, 1).unwrap().complement();
        assert!(is_isomorphic(&h41c, &subdivided_clique(4, 1).unwrap()));
        let s = subdivided_complement_star_forest(4, 1).unwrap();
        assert!(is_isomorphic(&s, &subdivided_clique(4, 2).unwrap()));
        assert_eq!(s.n(), 4 + 2);
    }

    #[test]
    fn subdivided_clique_sizes() {
        for n in 5..10 {
            let g = subdivided_clique(4, n - 4).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, n + 2));
        }
        assert!(is_isomorphic(
            &subdivided_clique(5, 0).unwrap(),
            &complete(5).unwrap()
        ));
    }

    #[test]
    fn wheel_and_flower() {
        let w5 = wheel(4).unwrap();
        assert_eq!((w5.n(), w5.edge_count()), (5, 8));
        let friendship = flower(&[3, 3]).unwrap();
        assert_eq!((friendship.n(), friendship.edge_count()), (5, 6));
        let f = flower(&[3, 4, 5]).unwrap();
        assert_eq!(f.n(), 1 + 2 + 3 + 4);
        assert_eq!(f.edge_count(), 12);
        assert!(flower(&[2, 3]).is_err());
    }

    #[test]
    fn petersen_is_three_regular_girth_five() {
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        // Exhaustive girth check: no triangles and no 4-cycles.
        for u in p.vertices() {
            for v in p.neighbors(u) {
                assert_eq!(
                    p.neighbors_mask(u) & p.neighbors_mask(v),
                    0,
                    "triangle at ({u},{v})"
                );
            }
        }
        for u in p.vertices() {
            for w in p.vertices() {
                if w != u && !p.has_edge(u, w) {
                    let common = (p.neighbors_mask(u) & p.neighbors_mask(w)).count_ones();
                    assert!(common <= 1, "4-cycle through ({u},{w})");
                }
            }
        }
    }

    #[test]
    fn block_params_arithmetic() {
        let spec = MultipartiteSpec::new(vec![4, 2, 1]).unwrap();
        let bp = BlockParams::new(14, &spec).unwrap();
        assert_eq!(bp.gamma, 2);
        assert_eq!(bp.beta, 1);
        assert_eq!(bp.beta0, 2);
        assert_eq!((bp.p, bp.q), (2, 4));
        assert_eq!(bp.p * 4 + bp.q, 12);
    }

    #[test]
    fn g_triangle_cases() {
        // Generic case q > 2(β−1): p K_{s1} ∪ K_q.
        let spec = MultipartiteSpec::new(vec![4, 2]).unwrap(); // γ = 1, β = 1
        let g = g_triangle(12, &spec).unwrap(); // m = 11 = 2·4 + 3
        assert_eq!(g.n(), 11);
        let want = Graph::disjoint_union(&[
            complete(4).unwrap(),
            complete(4).unwrap(),
            complete(3).unwrap(),
        ])
        .unwrap();
        assert!(is_isomorphic(&g, &want));

        // (q,β) = (2,2): (p−1)K_{s1} ∪ S(̄H_{s1,s2}).
        let spec = MultipartiteSpec::new(vec![5, 2]).unwrap(); // β = ⌊6/3⌋ = 2
        let g = g_triangle(13, &spec).unwrap(); // γ = 1, m = 12 = 2·5 + 2
        let want = Graph::disjoint_union(&[
            complete(5).unwrap(),
            subdivided_complement_star_forest(5, 2).unwrap(),
        ])
        .unwrap();
        assert!(is_isomorphic(&g, &want));
    }

    #[test]
    fn g_triangle_gamma_must_be_positive() {
        let spec = MultipartiteSpec::new(vec![5, 1]).unwrap();
        // γ = 0 is rejected.
        assert!(BlockParams::new(12, &spec).is_err());
    }

    #[test]
    fn g_triangle_h_bar_case() {
        // s = (5, 1, 1): γ = 1, β = 3, so q = 2 ≤ 2(β−1) = 4 picks the
        // (p−q)K_{s1} ∪ q·̄H case.
        let spec = MultipartiteSpec::new(vec![5, 1, 1]).unwrap();
        let g = g_triangle(18, &spec).unwrap(); // m = 17 = 3·5 + 2
        let h_bar = star_forest(5, 1).unwrap().complement();
        let want = Graph::disjoint_union(&[complete(5).unwrap(), h_bar.clone(), h_bar]).unwrap();
        assert!(is_isomorphic(&g, &want));
        assert_eq!(g.n(), 17);
    }

    #[test]
    fn g_triangle_petersen_case() {
        // (q, β, s1) = (2, 1, 8) wants s2 ≥ 4 so that β = 1.
        let spec = MultipartiteSpec::new(vec![8, 4]).unwrap();
        let n = 3 + 8 + 2; // γ = 3, m = 10 = 1·8 + 2
        let g = g_triangle(n, &spec).unwrap();
        let want = petersen().complement();
        assert!(is_isomorphic(&g, &want));
    }

    #[test]
    fn g_down_cycle_partitions() {
        // m = 7: partitions into cycles are {7} and {4,3}.
        let members = g_down_members(8, 3, 1, 100).unwrap();
        assert_eq!(members.len(), 2);
        for g in &members {
            assert_eq!(g.n(), 7);
            assert!(g.vertices().all(|v| g.degree(v) == 2));
        }
        assert!(is_isomorphic(&members[0], &cycle(7).unwrap()));
        let c43 = Graph::disjoint_union(&[cycle(4).unwrap(), cycle(3).unwrap()]).unwrap();
        assert!(is_isomorphic(&members[1], &c43));
        assert!(g_down_members(3, 3, 1, 10).is_err());
    }

    #[test]
    fn g_down_regularity_for_s1_five() {
        let members = g_down_members(17, 5, 1, 100).unwrap();
        assert!(!members.is_empty());
        for g in &members {
            assert_eq!(g.n(), 16);
            assert!(g.vertices().all(|v| g.degree(v) == 4));
        }
    }
}
