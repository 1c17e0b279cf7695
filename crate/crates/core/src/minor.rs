//! Exact minor containment with witness models, family minor-freeness, and
//! saturation testing.
//!
//! The decision procedure is a branch-and-bound over branch-set assignments:
//! pattern vertices are processed by decreasing degree, each branch set is
//! grown one host vertex at a time (every addition adjacent to the current
//! set, so connectivity holds by construction), and partial assignments are
//! pruned on vertex counts, edge counts, and host component capacity. A
//! separate brute-force oracle with no pruning beyond feasibility backs the
//! differential tests.

use crate::graph::BitIter;
use crate::invariants::FamilySpec;
use crate::{Error, Graph, Result, VertexSet};

/// Witness for an H minor in G: one branch set per pattern vertex.
///
/// `branch_sets[i]` is the host vertex set modeling pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn total_size(&self) -> usize {
        self.branch_sets.iter().map(|s| s.len()).sum()
    }
}

/// Validates the three model invariants: branch sets nonempty and pairwise
/// disjoint, each inducing a connected host subgraph, and a host edge
/// realizing every pattern edge.
pub fn verify_model(g: &Graph, h: &Graph, model: &MinorModel) -> bool {
    if model.branch_sets.len() != h.n() {
        return false;
    }
    let full = VertexSet::full(g.n()).0;
    let mut seen = 0u64;
    for set in &model.branch_sets {
        let mask = set.0;
        if mask == 0 || mask & !full != 0 || mask & seen != 0 {
            return false;
        }
        seen |= mask;
        let start = mask.trailing_zeros() as usize;
        if g.reach(start, mask) != mask {
            return false;
        }
    }
    let nbr: Vec<u64> = model
        .branch_sets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, v| acc | g.neighbors_mask(v)))
        .collect();
    for (a, b) in h.edges() {
        if nbr[a] & model.branch_sets[b].0 == 0 {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Exists,
    Minimize,
}

/// Position-ordered search tables for one pattern vertex order.
#[derive(Debug, Clone)]
struct Tables {
    /// Search position -> pattern vertex id; component-contiguous.
    order: Vec<usize>,
    /// For position i: mask over earlier *positions* that must receive a
    /// cross edge.
    required_prev: Vec<u64>,
    /// Pattern edges with both endpoints at positions >= i.
    pat_edges_rest: Vec<usize>,
    /// Pattern edges from position j to positions >= i, flattened [i][j].
    cross_needs: Vec<usize>,
    /// Pattern neighbors of position i at positions > i.
    future_need: Vec<usize>,
    /// Largest pattern component not yet started at position i.
    largest_rest_component: Vec<usize>,
}

impl Tables {
    /// `order` must list each component's vertices contiguously.
    #[allow(clippy::needless_range_loop)]
    fn new(h: &Graph, order: Vec<usize>) -> Self {
        let hn = h.n();
        let pos_of: Vec<usize> = {
            let mut p = vec![0; hn];
            for (i, &v) in order.iter().enumerate() {
                p[v] = i;
            }
            p
        };
        let mut required_prev = vec![0u64; hn];
        for (a, b) in h.edges() {
            let (pa, pb) = (pos_of[a], pos_of[b]);
            let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
            required_prev[hi] |= 1u64 << lo;
        }
        let mut pat_edges_rest = vec![0usize; hn + 1];
        for i in (0..hn).rev() {
            pat_edges_rest[i] = pat_edges_rest[i + 1]
                + required_prev[i + 1..]
                    .iter()
                    .filter(|&&m| m >> i & 1 == 1)
                    .count();
        }
        // cross_needs[i*hn + j]: pattern edges from position j (< i) to
        // positions >= i.
        let mut cross_needs = vec![0usize; (hn + 1) * hn.max(1)];
        for i in (0..hn).rev() {
            for j in 0..i {
                cross_needs[i * hn + j] =
                    cross_needs[(i + 1) * hn + j] + (required_prev[i] >> j & 1 == 1) as usize;
            }
        }
        let future_need: Vec<usize> = (0..hn)
            .map(|i| h.degree(order[i]) - (required_prev[i].count_ones() as usize))
            .collect();
        // First position of each component along the order.
        let comps = h.components();
        let mut largest_rest_component = vec![0usize; hn + 1];
        for c in &comps {
            let first = c.iter().map(|v| pos_of[v]).min().unwrap();
            for i in 0..=first {
                largest_rest_component[i] = largest_rest_component[i].max(c.len());
            }
        }
        Tables {
            order,
            required_prev,
            pat_edges_rest,
            cross_needs,
            future_need,
            largest_rest_component,
        }
    }

    fn cross_need(&self, i: usize, j: usize) -> usize {
        self.cross_needs[i * self.order.len() + j]
    }
}

/// Host-independent search tables for one pattern graph; building them once
/// per pattern and reusing across hosts keeps the per-call overhead small
/// when the enumeration tests hundreds of thousands of candidates.
///
/// Besides the base vertex order (components largest first, decreasing
/// degree inside), one reordered table set is precomputed per orbit of
/// pattern vertices under twin transpositions, with that vertex first: the
/// anchored searches (models through a fixed host vertex) then start
/// directly from the anchored branch set.
#[derive(Debug, Clone)]
pub struct CompiledPattern {
    hn: usize,
    edge_count: usize,
    connected: bool,
    base: Tables,
    anchored: Vec<Tables>,
}

fn degree_sorted(h: &Graph, mask: u64) -> Vec<usize> {
    let mut vs: Vec<usize> = BitIter(mask).collect();
    vs.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    vs
}

impl CompiledPattern {
    pub fn new(h: &Graph) -> Self {
        let hn = h.n();
        // Components sorted by decreasing order (tie: smallest id).
        let mut comps = h.components();
        comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.0.trailing_zeros()));
        let mut base_order = Vec::with_capacity(hn);
        for c in &comps {
            base_order.extend(degree_sorted(h, c.0));
        }
        let base = Tables::new(h, base_order);

        let twins = crate::canon::twin_masks(h);
        let mut anchored = Vec::new();
        let mut covered = 0u64;
        for &v in &base.order {
            if covered >> v & 1 == 1 {
                continue;
            }
            covered |= (1u64 << v) | twins[v];
            // v's component first with v leading; other components follow,
            // largest first.
            let mut order = Vec::with_capacity(hn);
            let own = comps.iter().find(|c| c.contains(v)).unwrap();
            order.push(v);
            order.extend(degree_sorted(h, own.0 & !(1u64 << v)));
            for c in &comps {
                if !c.contains(v) {
                    order.extend(degree_sorted(h, c.0));
                }
            }
            anchored.push(Tables::new(h, order));
        }
        CompiledPattern {
            hn,
            edge_count: h.edge_count(),
            connected: h.is_connected(),
            base,
            anchored,
        }
    }
}

struct ModelSearch<'a> {
    g: &'a Graph,
    pat: &'a CompiledPattern,
    t: &'a Tables,
    /// Host vertices by decreasing degree, then id.
    hosts: Vec<u8>,
    /// Host twin transpositions; existence search skips a candidate whose
    /// twin was already tried at the same choice point (the swap maps the
    /// skipped subtree onto an explored one).
    host_twins: Vec<u64>,
    avail_mask: u64,
    sets: Vec<u64>,
    set_nbrs: Vec<u64>,
    used: u64,
    mode: Mode,
    witness: Option<Vec<u64>>,
    best_total: usize,
    done: bool,
    /// When set, the branch set at position 0 of the current (anchored)
    /// table order must contain this host vertex.
    anchor_host: Option<usize>,
    /// Remaining node budget; when it runs out the search unwinds with
    /// `truncated` set and the answer is inconclusive.
    budget: usize,
    truncated: bool,
}

impl<'a> ModelSearch<'a> {
    fn new(g: &'a Graph, pat: &'a CompiledPattern, mode: Mode) -> Self {
        let mut hosts: Vec<u8> = (0..g.n() as u8).collect();
        hosts.sort_by_key(|&x| (std::cmp::Reverse(g.degree(x as usize)), x));
        let host_twins = if mode == Mode::Exists {
            crate::canon::twin_masks(g)
        } else {
            vec![0u64; g.n()]
        };
        ModelSearch {
            g,
            pat,
            t: &pat.base,
            hosts,
            host_twins,
            avail_mask: VertexSet::full(g.n()).0,
            sets: Vec::with_capacity(pat.hn),
            set_nbrs: Vec::with_capacity(pat.hn),
            used: 0,
            mode,
            witness: None,
            best_total: usize::MAX,
            done: false,
            anchor_host: None,
            budget: usize::MAX,
            truncated: false,
        }
    }

    fn avail(&self) -> u64 {
        self.avail_mask & !self.used
    }

    fn record(&mut self) {
        match self.mode {
            Mode::Exists => {
                self.witness = Some(self.sets.clone());
                self.done = true;
            }
            Mode::Minimize => {
                let total: usize = self.sets.iter().map(|s| s.count_ones() as usize).sum();
                if total < self.best_total {
                    self.best_total = total;
                    self.witness = Some(self.sets.clone());
                } else if total == self.best_total {
                    let cand = sorted_key(&self.sets);
                    let cur = sorted_key(self.witness.as_ref().unwrap());
                    if cand < cur {
                        self.witness = Some(self.sets.clone());
                    }
                }
            }
        }
    }

    fn place(&mut self, i: usize) {
        if self.done {
            return;
        }
        let hn = self.pat.hn;
        if i == hn {
            self.record();
            return;
        }
        let avail = self.avail();
        let avail_count = avail.count_ones() as usize;
        if avail_count < hn - i {
            return;
        }
        if self.mode == Mode::Minimize {
            let placed: usize = self.sets.iter().map(|s| s.count_ones() as usize).sum();
            if placed + (hn - i) > self.best_total {
                return;
            }
        }
        // Edge accounting: pattern edges still to realize among unplaced
        // positions need that many host edges inside the available set, and
        // each placed set j needs enough boundary edges for its future
        // pattern neighbors.
        let mut avail_edges = 0usize;
        for v in BitIter(avail) {
            avail_edges += (self.g.neighbors_mask(v) & avail).count_ones() as usize;
        }
        if avail_edges / 2 < self.t.pat_edges_rest[i] {
            return;
        }
        for (j, &nbr) in self.set_nbrs.iter().enumerate() {
            let need = self.t.cross_need(i, j);
            if need > 0 && ((nbr & avail).count_ones() as usize) < need {
                return;
            }
        }
        // Host component capacity for pattern components not yet started.
        if self.t.required_prev[i] == 0 {
            let need = self.t.largest_rest_component[i];
            if need > 1 {
                let mut rem = avail;
                let mut biggest = 0usize;
                while rem != 0 {
                    let start = rem.trailing_zeros() as usize;
                    let comp = self.g.reach(start, rem);
                    biggest = biggest.max(comp.count_ones() as usize);
                    rem &= !comp;
                }
                if biggest < need {
                    return;
                }
            }
        }

        if i == 0 {
            if let Some(v) = self.anchor_host {
                if avail >> v & 1 == 1 {
                    // Connected sets containing the anchor are exactly those
                    // grown from it.
                    self.grow(0, 1u64 << v, 1u64 << v);
                }
                return;
            }
        }
        let mut banned = 0u64;
        let mut tried = 0u64;
        for idx in 0..self.hosts.len() {
            if self.done {
                return;
            }
            let seed = self.hosts[idx] as usize;
            if avail >> seed & 1 == 0 {
                continue;
            }
            if self.host_twins[seed] & tried != 0 {
                continue;
            }
            tried |= 1u64 << seed;
            banned |= 1u64 << seed;
            self.grow(i, 1u64 << seed, banned);
        }
    }

    /// Grows branch set `set` for position `i`; `banned` are hosts excluded
    /// from this and any further extension (each connected set is enumerated
    /// exactly once).
    fn grow(&mut self, i: usize, set: u64, banned: u64) {
        if self.done {
            return;
        }
        if self.budget == 0 {
            self.truncated = true;
            self.done = true;
            return;
        }
        self.budget -= 1;
        let hn = self.pat.hn;
        let set_nbr = BitIter(set).fold(0u64, |acc, v| acc | self.g.neighbors_mask(v));
        // Unsatisfied required predecessors must stay reachable.
        let mut satisfied = true;
        let growth_room = set | (self.avail() & !banned & !set);
        for j in BitIter(self.t.required_prev[i]) {
            let nbr_j = self.set_nbrs[j];
            if nbr_j & set == 0 {
                satisfied = false;
                if nbr_j & growth_room == 0 {
                    return;
                }
            }
        }
        // Each future pattern neighbor of position i needs its own vertex
        // in this set's remaining boundary; extensions may still enlarge it.
        if satisfied
            && (set_nbr & self.avail() & !set).count_ones() as usize >= self.t.future_need[i]
        {
            self.sets.push(set);
            self.set_nbrs.push(set_nbr);
            self.used |= set;
            self.place(i + 1);
            self.used &= !set;
            self.set_nbrs.pop();
            self.sets.pop();
            if self.done {
                return;
            }
        }
        // Leave at least one host vertex per later pattern vertex.
        let avail_after = (self.avail() & !set).count_ones() as usize;
        if avail_after < hn - i - 1 {
            return;
        }
        if self.mode == Mode::Minimize {
            let placed: usize = self.sets.iter().map(|s| s.count_ones() as usize).sum();
            if placed + set.count_ones() as usize + 1 + (hn - i - 1) > self.best_total {
                return;
            }
        }
        let extensions = set_nbr & self.avail() & !set & !banned;
        let mut ext_banned = banned;
        let mut tried = 0u64;
        for idx in 0..self.hosts.len() {
            if self.done {
                return;
            }
            let u = self.hosts[idx] as usize;
            if extensions >> u & 1 == 0 {
                continue;
            }
            if self.host_twins[u] & tried != 0 {
                continue;
            }
            tried |= 1u64 << u;
            ext_banned |= 1u64 << u;
            self.grow(i, set | (1u64 << u), ext_banned);
        }
    }

    fn run_positions(&mut self) {
        match self.anchor_host {
            None => {
                self.t = &self.pat.base;
                self.place(0);
            }
            Some(_) => {
                // Models through the anchor are covered by anchoring one
                // pattern vertex per twin orbit, each with its own order.
                for t in &self.pat.anchored {
                    self.t = t;
                    self.place(0);
                    if self.done {
                        return;
                    }
                }
            }
        }
    }

    fn run(self) -> Option<MinorModel> {
        let (model, _) = self.run_with_truncation();
        model
    }

    fn run_with_truncation(mut self) -> (Option<MinorModel>, bool) {
        let hn = self.pat.hn;
        if hn == 0 {
            return (
                Some(MinorModel {
                    branch_sets: Vec::new(),
                }),
                false,
            );
        }
        if self.g.n() < hn {
            return (None, false);
        }
        if self.pat.connected && hn > 1 {
            // A connected pattern lives inside one host component.
            let comps = self.g.components();
            for comp in comps {
                if comp.len() < hn {
                    continue;
                }
                if let Some(v) = self.anchor_host {
                    if comp.0 >> v & 1 == 0 {
                        continue;
                    }
                }
                self.avail_mask = comp.0;
                self.run_positions();
                if self.mode == Mode::Exists && self.done {
                    break;
                }
            }
        } else {
            self.run_positions();
        }
        let order = self.t.order.clone();
        let truncated = self.truncated;
        let model = self.witness.map(|sets| {
            let mut branch_sets = vec![VertexSet::EMPTY; order.len()];
            for (pos, mask) in sets.into_iter().enumerate() {
                branch_sets[order[pos]] = VertexSet(mask);
            }
            MinorModel { branch_sets }
        });
        (model, truncated)
    }
}

fn sorted_key(sets: &[u64]) -> Vec<Vec<usize>> {
    let mut key: Vec<Vec<usize>> = sets.iter().map(|&m| BitIter(m).collect()).collect();
    key.sort();
    key
}

fn quick_impossible(g: &Graph, pat: &CompiledPattern) -> bool {
    g.n() < pat.hn || g.edge_count() < pat.edge_count
}

/// True iff `g` contains `h` as a minor.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    has_minor_compiled(g, &CompiledPattern::new(h))
}

/// [`has_minor`] against a precompiled pattern.
pub fn has_minor_compiled(g: &Graph, pat: &CompiledPattern) -> bool {
    if pat.hn == 0 {
        return true;
    }
    if quick_impossible(g, pat) {
        return false;
    }
    ModelSearch::new(g, pat, Mode::Exists).run().is_some()
}

/// True iff `g` has an `h` model with some branch set containing `v`.
/// When `g − v` is known minor-free this decides minor containment for `g`;
/// the enumeration uses it to test children incrementally.
pub fn has_minor_using(g: &Graph, h: &Graph, v: usize) -> bool {
    has_minor_compiled_using(g, &CompiledPattern::new(h), v)
}

/// [`has_minor_using`] against a precompiled pattern.
pub fn has_minor_compiled_using(g: &Graph, pat: &CompiledPattern, v: usize) -> bool {
    if pat.hn == 0 {
        return true;
    }
    if quick_impossible(g, pat) {
        return false;
    }
    let mut search = ModelSearch::new(g, pat, Mode::Exists);
    search.anchor_host = Some(v);
    search.run().is_some()
}

/// Compiles a member list for repeated freeness tests, cheapest member
/// first (small patterns decide fastest).
pub fn compile_members(members: &[Graph]) -> Vec<CompiledPattern> {
    let mut idx: Vec<usize> = (0..members.len()).collect();
    idx.sort_by_key(|&i| (members[i].n(), members[i].edge_count()));
    idx.into_iter()
        .map(|i| CompiledPattern::new(&members[i]))
        .collect()
}

/// Family minor-freeness for a graph whose `v`-deleted subgraph is already
/// known minor-free: only models through `v` can exist.
pub fn is_minor_free_of_all_using(g: &Graph, members: &[Graph], v: usize) -> bool {
    is_free_of_compiled_using(g, &compile_members(members), v)
}

/// Budgeted anchored probe: `Some(answer)` when conclusive within the node
/// budget, `None` otherwise.
fn probe_minor_using(g: &Graph, pat: &CompiledPattern, v: usize, budget: usize) -> Option<bool> {
    if pat.hn == 0 {
        return Some(true);
    }
    if quick_impossible(g, pat) {
        return Some(false);
    }
    let mut search = ModelSearch::new(g, pat, Mode::Exists);
    search.anchor_host = Some(v);
    search.budget = budget;
    let (model, truncated) = search.run_with_truncation();
    match (model, truncated) {
        (Some(_), _) => Some(true),
        (None, false) => Some(false),
        (None, true) => None,
    }
}

/// [`is_minor_free_of_all_using`] against precompiled members. Runs a cheap
/// budgeted probe per member first — most positives resolve immediately —
/// and completes the undecided ones exhaustively.
pub fn is_free_of_compiled_using(g: &Graph, pats: &[CompiledPattern], v: usize) -> bool {
    const PROBE_BUDGET: usize = 300;
    let mut undecided: Vec<&CompiledPattern> = Vec::new();
    for pat in pats {
        match probe_minor_using(g, pat, v, PROBE_BUDGET) {
            Some(true) => return false,
            Some(false) => {}
            None => undecided.push(pat),
        }
    }
    undecided
        .into_iter()
        .all(|pat| !has_minor_compiled_using(g, pat, v))
}

/// A witness model if one exists; deterministic (first in the fixed
/// branching order).
pub fn find_model(g: &Graph, h: &Graph) -> Option<MinorModel> {
    let pat = CompiledPattern::new(h);
    if quick_impossible(g, &pat) {
        return None;
    }
    let model = ModelSearch::new(g, &pat, Mode::Exists).run();
    debug_assert!(model.as_ref().is_none_or(|m| verify_model(g, h, m)));
    model
}

/// A model minimizing the total branch-set size; among minima the
/// lexicographically least by sorted branch sets.
pub fn minimal_model(g: &Graph, h: &Graph) -> Option<MinorModel> {
    let pat = CompiledPattern::new(h);
    if quick_impossible(g, &pat) {
        return None;
    }
    let model = ModelSearch::new(g, &pat, Mode::Minimize).run();
    debug_assert!(model.as_ref().is_none_or(|m| verify_model(g, h, m)));
    model
}

/// Conjunction of per-member freeness over a raw member list (members are
/// used exactly as given, isolated vertices included).
pub fn is_minor_free_of_all(g: &Graph, members: &[Graph]) -> bool {
    compile_members(members)
        .iter()
        .all(|pat| !has_minor_compiled(g, pat))
}

/// [`is_minor_free_of_all`] against precompiled members.
pub fn is_free_of_compiled(g: &Graph, pats: &[CompiledPattern]) -> bool {
    pats.iter().all(|pat| !has_minor_compiled(g, pat))
}

/// True iff `g` excludes every member of the family as a minor.
pub fn is_family_minor_free(g: &Graph, family: &FamilySpec) -> bool {
    is_minor_free_of_all(g, family.members())
}

/// True iff `g` is family-minor-free and every non-edge addition creates a
/// forbidden minor. Errors when `g` is not minor-free to begin with.
pub fn is_saturated(g: &Graph, family: &FamilySpec) -> Result<bool> {
    let pats = compile_members(family.members());
    if !is_free_of_compiled(g, &pats) {
        return Err(Error::NotMinorFree);
    }
    for (u, v) in g.non_edges() {
        let augmented = g.with_edge(u, v)?;
        // The base graph is minor-free, so any new model passes through an
        // endpoint of the added edge.
        if is_free_of_compiled_using(&augmented, &pats, u) {
            return Ok(false);
        }
    }
    Ok(true)
}

const ORACLE_HOST_CAP: usize = 9;
const ORACLE_PATTERN_CAP: usize = 6;

/// Independent naive oracle: exhaustive search over all assignments of host
/// vertices to pattern branch-set labels plus "unused", checking the model
/// conditions directly. No pruning beyond feasibility.
pub fn has_minor_oracle(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() > ORACLE_HOST_CAP || h.n() > ORACLE_PATTERN_CAP {
        return Err(Error::OracleCapExceeded {
            host: g.n(),
            host_cap: ORACLE_HOST_CAP,
            pattern: h.n(),
            pattern_cap: ORACLE_PATTERN_CAP,
        });
    }
    if h.n() == 0 {
        return Ok(true);
    }
    if g.n() < h.n() {
        return Ok(false);
    }
    let hn = h.n();
    let h_edges: Vec<(usize, usize)> = h.edges().collect();
    let mut classes = vec![0u64; hn];
    fn assign(g: &Graph, v: usize, classes: &mut [u64], h_edges: &[(usize, usize)]) -> bool {
        let n = g.n();
        if v == n {
            for &c in classes.iter() {
                if c == 0 {
                    return false;
                }
                let start = c.trailing_zeros() as usize;
                if g.reach(start, c) != c {
                    return false;
                }
            }
            for &(a, b) in h_edges {
                let nbr_a = BitIter(classes[a]).fold(0u64, |acc, x| acc | g.neighbors_mask(x));
                if nbr_a & classes[b] == 0 {
                    return false;
                }
            }
            return true;
        }
        // Feasibility: enough vertices must remain to fill empty classes.
        let empty = classes.iter().filter(|&&c| c == 0).count();
        if empty > n - v {
            return false;
        }
        for label in 0..=classes.len() {
            if label > 0 {
                classes[label - 1] |= 1u64 << v;
            }
            if assign(g, v + 1, classes, h_edges) {
                if label > 0 {
                    classes[label - 1] &= !(1u64 << v);
                }
                return true;
            }
            if label > 0 {
                classes[label - 1] &= !(1u64 << v);
            }
        }
        false
    }
    Ok(assign(g, 0, &mut classes, &h_edges))
}

/// Checks the dominating-set reduction on one instance: with `l` a set of
/// exactly γ_ℍ dominating vertices, `g` is ℍ-minor-free iff `g − l` is
/// Γ(ℍ)-minor-free. Both sides are computed independently.
pub fn dominating_reduction_check(g: &Graph, l: VertexSet, family: &FamilySpec) -> Result<bool> {
    let inv = crate::invariants::family_invariants(family);
    if l.len() != inv.gamma_family {
        return Err(Error::BadDominatingSet);
    }
    let full = VertexSet::full(g.n()).0;
    for v in l.iter() {
        if v >= g.n() || g.neighbors_mask(v) | (1u64 << v) != full {
            return Err(Error::BadDominatingSet);
        }
    }
    let lhs = is_family_minor_free(g, family);
    let rest = g.induced(&VertexSet(full & !l.0))?;
    let gamma_family_members = crate::invariants::gamma_union_family(family);
    let rhs = is_minor_free_of_all(&rest, &gamma_family_members);
    Ok(lhs == rhs)
}
