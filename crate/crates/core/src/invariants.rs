//! Exact family invariants: independence and clique numbers, γ_H and γ_ℍ,
//! minimal members and C_ℍ, and the irreducible induced-subgraph families
//! Γ_s, Γ*_s, Γ(ℍ).

use crate::graph::BitIter;
use crate::{canon, Error, Graph, Result, VertexSet};

/// A finite set of forbidden minors. Normalization deletes isolated vertices
/// of each member (they do not affect minor-freeness at large order); a
/// member that becomes empty is an error, as is an empty family.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    members: Vec<Graph>,
    stripped_isolated: bool,
}

impl FamilySpec {
    pub fn new(members: Vec<Graph>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let mut normalized = Vec::with_capacity(members.len());
        let mut stripped = false;
        for (index, g) in members.into_iter().enumerate() {
            let keep: VertexSet = g.vertices().filter(|&v| g.degree(v) > 0).collect();
            if keep.is_empty() {
                return Err(Error::EmptyFamilyMember { index });
            }
            if keep.len() < g.n() {
                stripped = true;
                normalized.push(g.induced(&keep)?);
            } else {
                normalized.push(g);
            }
        }
        Ok(FamilySpec {
            members: normalized,
            stripped_isolated: stripped,
        })
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    /// Whether normalization actually removed isolated vertices.
    pub fn stripped_isolated(&self) -> bool {
        self.stripped_isolated
    }

    /// A member isomorphic to a star K_{1,t} (t >= 1) makes γ_ℍ = 0 and is
    /// rejected by the spectral searches.
    pub fn star_member(&self) -> Option<&Graph> {
        self.members.iter().find(|h| {
            h.n() >= 2
                && h.is_connected()
                && h.edge_count() == h.n() - 1
                && h.max_degree() == h.n() - 1
        })
    }
}

/// Exact independence number by branch and bound on the neighbor bitmasks.
pub fn independence_number(g: &Graph) -> usize {
    fn mis(adj: &[u64], mask: u64) -> usize {
        if mask == 0 {
            return 0;
        }
        // Degree <= 1 vertices are always safe to take.
        let mut best_v = usize::MAX;
        let mut best_deg = 0;
        for v in BitIter(mask) {
            let d = (adj[v] & mask).count_ones() as usize;
            if d <= 1 {
                return 1 + mis(adj, mask & !adj[v] & !(1u64 << v));
            }
            if best_v == usize::MAX || d > best_deg {
                best_v = v;
                best_deg = d;
            }
        }
        let v = best_v;
        let include = 1 + mis(adj, mask & !adj[v] & !(1u64 << v));
        let exclude = mis(adj, mask & !(1u64 << v));
        include.max(exclude)
    }
    mis(g.rows(), VertexSet::full(g.n()).0)
}

/// Exact clique number, via the complement's independence number.
pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// γ_H = |H| − α_H − 1. Callers pass graphs with minimum degree >= 1, for
/// which this is nonnegative; the signed result keeps degenerate direct
/// calls (stars included) total.
pub fn gamma(h: &Graph) -> i64 {
    h.n() as i64 - independence_number(h) as i64 - 1
}

/// γ_ℍ = min over members of γ_H.
pub fn gamma_family(family: &FamilySpec) -> usize {
    family
        .members()
        .iter()
        .map(gamma)
        .min()
        .expect("family is nonempty")
        .max(0) as usize
}

/// The derived family quantities around the minimal members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInvariants {
    pub gamma_family: usize,
    pub alpha_family: usize,
    /// C_ℍ = min over minimal members of 2^{|H*|+1}·e(H*).
    pub c_family: u128,
    /// Indices into `members()` of the minimal members: γ_H = γ_ℍ and |H|
    /// least among those.
    pub minimal_ids: Vec<usize>,
}

pub fn family_invariants(family: &FamilySpec) -> FamilyInvariants {
    let members = family.members();
    let gammas: Vec<i64> = members.iter().map(gamma).collect();
    let gamma_min = *gammas.iter().min().unwrap();
    let min_order = members
        .iter()
        .zip(&gammas)
        .filter(|(_, &g)| g == gamma_min)
        .map(|(h, _)| h.n())
        .min()
        .unwrap();
    let minimal_ids: Vec<usize> = (0..members.len())
        .filter(|&i| gammas[i] == gamma_min && members[i].n() == min_order)
        .collect();
    let alpha_family = independence_number(&members[minimal_ids[0]]);
    debug_assert!(minimal_ids
        .iter()
        .all(|&i| independence_number(&members[i]) == alpha_family));
    let c_family = minimal_ids
        .iter()
        .map(|&i| (1u128 << (members[i].n() + 1)) * members[i].edge_count() as u128)
        .min()
        .unwrap();
    let gamma_family = gamma_min.max(0) as usize;
    debug_assert!(((gamma_family + alpha_family) as u128) < c_family);
    FamilyInvariants {
        gamma_family,
        alpha_family,
        c_family,
        minimal_ids,
    }
}

pub fn alpha_family(family: &FamilySpec) -> usize {
    family_invariants(family).alpha_family
}

pub fn c_family(family: &FamilySpec) -> u128 {
    family_invariants(family).c_family
}

pub fn minimal_members(family: &FamilySpec) -> Vec<usize> {
    family_invariants(family).minimal_ids
}

/// Sorts by canonical label and removes isomorphic duplicates.
fn dedup_by_canonical(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(Vec<u8>, Graph)> = graphs
        .into_iter()
        .map(|g| (canon::canonical_form(&g), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Γ_s(H): one representative per isomorphism class of s-vertex induced
/// subgraphs, sorted by canonical label.
pub fn induced_family(h: &Graph, s: usize) -> Vec<Graph> {
    assert!(s >= 1 && s <= h.n(), "need 1 <= s <= |H|");
    let mut out = Vec::new();
    let n = h.n();
    let mut subset: Vec<usize> = (0..s).collect();
    loop {
        let set: VertexSet = subset.iter().copied().collect();
        out.push(h.induced(&set).unwrap());
        // Next s-combination of 0..n in lexicographic order.
        let mut i = s;
        loop {
            if i == 0 {
                return dedup_by_canonical(out);
            }
            i -= 1;
            if subset[i] != i + n - s {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..s {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// True iff some vertex bijection maps every edge of `sub` onto an edge of
/// `host` (spanning-subgraph embedding; |sub| must equal |host|).
pub(crate) fn spanning_subgraph_embeds(sub: &Graph, host: &Graph) -> bool {
    debug_assert_eq!(sub.n(), host.n());
    let n = sub.n();
    if sub.edge_count() > host.edge_count() || sub.max_degree() > host.max_degree() {
        return false;
    }
    // Map pattern vertices in decreasing-degree order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(sub.degree(v)), v));
    let mut image = vec![usize::MAX; n];
    fn place(
        sub: &Graph,
        host: &Graph,
        order: &[usize],
        image: &mut [usize],
        used: u64,
        k: usize,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in host.vertices() {
            if used >> w & 1 == 1 || host.degree(w) < sub.degree(v) {
                continue;
            }
            let ok = order[..k]
                .iter()
                .all(|&u| !sub.has_edge(u, v) || host.has_edge(image[u], w));
            if ok {
                image[v] = w;
                if place(sub, host, order, image, used | 1u64 << w, k + 1) {
                    return true;
                }
                image[v] = usize::MAX;
            }
        }
        false
    }
    place(sub, host, &order, &mut image, 0, 0)
}

/// Γ*_s(H): members of Γ_s(H) with no Γ_s(H) member isomorphic to a proper
/// subgraph of them. All members share the vertex count s, so a proper
/// subgraph here is a spanning subgraph with strictly fewer edges.
pub fn irreducible_family(h: &Graph, s: usize) -> Vec<Graph> {
    let gamma_s = induced_family(h, s);
    let keep: Vec<Graph> = gamma_s
        .iter()
        .filter(|m| {
            !gamma_s
                .iter()
                .any(|n| n.edge_count() < m.edge_count() && spanning_subgraph_embeds(n, m))
        })
        .cloned()
        .collect();
    keep
}

/// Γ(ℍ) = ⋃_{H∈ℍ} Γ*_{|H|−γ_ℍ}(H), deduplicated by isomorphism and sorted
/// by canonical label. Members may carry isolated vertices; they are
/// returned exactly as induced.
pub fn gamma_union_family(family: &FamilySpec) -> Vec<Graph> {
    let gamma_h = gamma_family(family);
    let mut out = Vec::new();
    for h in family.members() {
        let s = h.n() - gamma_h;
        out.extend(irreducible_family(h, s));
    }
    dedup_by_canonical(out)
}

/// True iff every member of the family is connected.
pub fn is_connected_family(members: &[Graph]) -> bool {
    members.iter().all(|g| g.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::constructions as cons;

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&cons::complete(6).unwrap()), 1);
        assert_eq!(
            independence_number(&cons::complete_multipartite_parts(&[4, 2, 1]).unwrap()),
            4
        );
        assert_eq!(independence_number(&cons::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&cons::cycle(8).unwrap()), 4);
        assert_eq!(independence_number(&Graph::empty(7).unwrap()), 7);
    }

    #[test]
    fn petersen_alpha_matches_brute_force() {
        let p = cons::petersen();
        let mut best = 0;
        for mask in 0u64..1 << 10 {
            let ok = BitIter(mask).all(|v| p.neighbors_mask(v) & mask == 0);
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        assert_eq!(best, 4);
        assert_eq!(independence_number(&p), 4);
    }

    #[test]
    fn clique_numbers() {
        let k5_minus = cons::complete(5).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!(clique_number(&k5_minus), 4);
        assert_eq!(clique_number(&cons::cycle(5).unwrap()), 2);
        let matching = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(clique_number(&matching), 2);
    }

    #[test]
    fn gamma_formulas() {
        // γ(K_{s1,...,sr}) = Σ_{i>=2} s_i − 1
        for parts in [vec![3, 2], vec![4, 2, 1], vec![5, 3, 3, 1]] {
            let h = cons::complete_multipartite_parts(&parts).unwrap();
            let expect = parts[1..].iter().sum::<usize>() as i64 - 1;
            assert_eq!(gamma(&h), expect, "parts {parts:?}");
        }
        // γ(W_{k+1}) = ⌈k/2⌉
        for k in 3..9 {
            let w = cons::wheel(k).unwrap();
            assert_eq!(gamma(&w), k.div_ceil(2) as i64, "wheel k={k}");
        }
        // γ(F_{s_1..s_t}) = Σ ⌈s_i/2⌉ − t
        for lengths in [vec![3, 3], vec![3, 4], vec![4, 4], vec![3, 3, 5]] {
            let f = cons::flower(&lengths).unwrap();
            let expect: i64 =
                lengths.iter().map(|&s| s.div_ceil(2) as i64).sum::<i64>() - lengths.len() as i64;
            assert_eq!(gamma(&f), expect, "flower {lengths:?}");
        }
        // Stars have γ = 0.
        assert_eq!(gamma(&cons::book(1, 4).unwrap()), 0);
    }

    #[test]
    fn family_normalization_and_stars() {
        let with_isolated = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
        let fam = FamilySpec::new(vec![with_isolated]).unwrap();
        assert!(fam.stripped_isolated());
        assert_eq!(fam.members()[0].n(), 3);
        assert!(FamilySpec::new(vec![Graph::empty(3).unwrap()]).is_err());
        assert!(FamilySpec::new(vec![]).is_err());

        let star_fam = FamilySpec::new(vec![cons::book(1, 4).unwrap()]).unwrap();
        assert!(star_fam.star_member().is_some());
        let k4_fam = FamilySpec::new(vec![cons::complete(4).unwrap()]).unwrap();
        assert!(k4_fam.star_member().is_none());
        // K2 is the degenerate star K_{1,1}.
        let k2_fam = FamilySpec::new(vec![cons::complete(2).unwrap()]).unwrap();
        assert!(k2_fam.star_member().is_some());
    }

    #[test]
    fn k5_family_invariants() {
        let fam = FamilySpec::new(vec![cons::complete(5).unwrap()]).unwrap();
        let inv = family_invariants(&fam);
        assert_eq!(inv.gamma_family, 3);
        assert_eq!(inv.alpha_family, 1);
        assert_eq!(inv.c_family, (1u128 << 6) * 10);
        assert_eq!(inv.minimal_ids, vec![0]);
    }

    #[test]
    fn minimal_members_share_alpha() {
        // {K_{2,3}, K_4}: γ_H = 1 and 2, the minimal member is K_{2,3}.
        let fam = FamilySpec::new(vec![
            cons::complete_multipartite_parts(&[3, 2]).unwrap(),
            cons::complete(4).unwrap(),
        ])
        .unwrap();
        let inv = family_invariants(&fam);
        assert_eq!(inv.gamma_family, 1);
        assert_eq!(inv.minimal_ids, vec![0]);
        assert_eq!(inv.alpha_family, 3);
        assert!((inv.gamma_family + inv.alpha_family) as u128 > 0);
        assert!(((inv.gamma_family + inv.alpha_family) as u128) < inv.c_family);
    }

    #[test]
    fn induced_families() {
        let k3 = cons::complete(3).unwrap();
        let g3 = induced_family(&k3, 3);
        assert_eq!(g3.len(), 1);
        assert!(is_isomorphic(&g3[0], &k3));

        let k23 = cons::complete_multipartite_parts(&[3, 2]).unwrap();
        let g4 = induced_family(&k23, 4);
        assert_eq!(g4.len(), 2);
        let star = cons::book(1, 3).unwrap();
        let c4 = cons::cycle(4).unwrap();
        assert!(g4.iter().any(|g| is_isomorphic(g, &star)));
        assert!(g4.iter().any(|g| is_isomorphic(g, &c4)));

        assert_eq!(induced_family(&Graph::empty(6).unwrap(), 3).len(), 1);
    }

    #[test]
    fn irreducible_families() {
        // Γ*_4(K_{2,3}) = {K_{1,3}, K_{2,2}}
        let k23 = cons::complete_multipartite_parts(&[3, 2]).unwrap();
        let fam = irreducible_family(&k23, 4);
        assert_eq!(fam.len(), 2);
        // Γ*_3(K_4) = {K_3}
        let fam = irreducible_family(&cons::complete(4).unwrap(), 3);
        assert_eq!(fam.len(), 1);
        assert!(is_isomorphic(&fam[0], &cons::complete(3).unwrap()));
        // Γ*_{s1+1}(K_{s1,1,...,1}) = {K_{s1,1}} for s1 = 3, r = 3.
        let h = cons::complete_multipartite_parts(&[3, 1, 1]).unwrap();
        let fam = irreducible_family(&h, 4);
        assert_eq!(fam.len(), 1);
        assert!(is_isomorphic(&fam[0], &cons::book(1, 3).unwrap()));
    }

    #[test]
    fn irreducibility_is_sound_and_complete() {
        // No Γ* member is a proper subgraph of another; every Γ member
        // contains some Γ* member as a spanning subgraph.
        for h in [
            cons::complete_multipartite_parts(&[3, 2]).unwrap(),
            cons::wheel(5).unwrap(),
            cons::petersen(),
        ] {
            for s in 2..=4.min(h.n()) {
                let all = induced_family(&h, s);
                let irr = irreducible_family(&h, s);
                for m in &irr {
                    for other in &irr {
                        assert!(
                            !(other.edge_count() < m.edge_count()
                                && spanning_subgraph_embeds(other, m)),
                            "Γ* member contained in another"
                        );
                    }
                }
                for m in &all {
                    assert!(
                        irr.iter()
                            .any(|r| r.edge_count() <= m.edge_count()
                                && spanning_subgraph_embeds(r, m)),
                        "Γ member with no Γ* subgraph"
                    );
                }
            }
        }
    }

    #[test]
    fn gamma_union_examples() {
        // ℍ = {K_{2,3}, K_4}: Γ(ℍ) = {K_{1,3}, K_{2,2}, K_3}
        let fam = FamilySpec::new(vec![
            cons::complete_multipartite_parts(&[3, 2]).unwrap(),
            cons::complete(4).unwrap(),
        ])
        .unwrap();
        let g = gamma_union_family(&fam);
        assert_eq!(g.len(), 3);
        let expect = [
            cons::book(1, 3).unwrap(),
            cons::cycle(4).unwrap(),
            cons::complete(3).unwrap(),
        ];
        for e in &expect {
            assert!(g.iter().any(|m| is_isomorphic(m, e)));
        }
        assert!(is_connected_family(&g));

        // Singleton family: Γ(ℍ) = Γ*_{α+1}(H).
        let w5 = cons::wheel(4).unwrap();
        let fam = FamilySpec::new(vec![w5.clone()]).unwrap();
        let g = gamma_union_family(&fam);
        let direct = irreducible_family(&w5, 3);
        assert_eq!(g.len(), direct.len());
        // Γ*_3(W_5) = {P_3}: K_3 reduces through P_3.
        assert_eq!(g.len(), 1);
        assert!(is_isomorphic(&g[0], &cons::path(3).unwrap()));
    }

    #[test]
    fn connected_family_check() {
        let fam = vec![
            cons::book(1, 3).unwrap(),
            cons::cycle(4).unwrap(),
            cons::complete(3).unwrap(),
        ];
        assert!(is_connected_family(&fam));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected_family(&[two_k2]));
    }

    #[test]
    fn alpha_brute_force_agreement_small() {
        // α and ω agree with exhaustive subset checks for all graphs n <= 5.
        for n in 1..=5usize {
            for code in 0u64..1 << (n * (n - 1) / 2) {
                let mut edges = Vec::new();
                let mut bit = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if code >> bit & 1 == 1 {
                            edges.push((u, v));
                        }
                        bit += 1;
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                let mut alpha = 0;
                for mask in 0u64..1 << n {
                    if BitIter(mask).all(|v| g.neighbors_mask(v) & mask == 0) {
                        alpha = alpha.max(mask.count_ones() as usize);
                    }
                }
                assert_eq!(independence_number(&g), alpha);
            }
        }
    }
}
