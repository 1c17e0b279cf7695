//! Canonical forms and isomorphism testing.
//!
//! The canonical labeling is the permutation minimizing a bit string built
//! position by position: an 8-bit vertex-invariant color followed by the
//! adjacency bits to the already-placed vertices (the graph6 column order).
//! Minimization is exhaustive over all permutations with sound
//! prefix-pruning; for n <= 8 the color is constant (pure permutation
//! minimization), for larger graphs it is an iterated degree-refinement rank,
//! which collapses the search to the automorphism-compatible branches.
//!
//! The same engine runs constrained variants (restricting which vertices may
//! occupy the last position); orderly generation in the search module uses
//! these to decide canonical-deletion acceptance.

use crate::graph::BitIter;
use crate::{Graph, MAX_VERTICES};

const WORDS: usize = (8 * MAX_VERTICES + MAX_VERTICES * (MAX_VERTICES - 1) / 2).div_ceil(64);

/// Fixed-capacity bit string, most significant bit first.
#[derive(Clone)]
pub(crate) struct BitBuf {
    words: [u64; WORDS],
    len: usize,
}

impl BitBuf {
    fn new() -> Self {
        BitBuf {
            words: [0; WORDS],
            len: 0,
        }
    }

    /// Appends the low `count` bits of `value`, most significant first.
    fn push(&mut self, value: u64, count: usize) {
        debug_assert!(count <= 64);
        let mut remaining = count;
        let mut value = if count == 64 {
            value
        } else {
            value & ((1u64 << count) - 1)
        };
        while remaining > 0 {
            let word = self.len / 64;
            let free = 64 - self.len % 64;
            let take = remaining.min(free);
            let chunk = value >> (remaining - take);
            self.words[word] |= (chunk << (free - take)) & mask_low(free);
            self.len += take;
            remaining -= take;
            if remaining < 64 {
                value &= (1u64 << remaining).wrapping_sub(1);
            }
        }
    }

    fn truncate(&mut self, len: usize) {
        debug_assert!(len <= self.len);
        let word = len / 64;
        let rem = len % 64;
        if rem > 0 {
            self.words[word] &= !mask_low(64 - rem);
            for w in self.words[word + 1..=(self.len / 64).min(WORDS - 1)].iter_mut() {
                *w = 0;
            }
        } else {
            for w in self.words[word..=(self.len / 64).min(WORDS - 1)].iter_mut() {
                *w = 0;
            }
        }
        self.len = len;
    }

    /// Compares the first `self.len` bits of `self` against the same prefix
    /// of `other` (which must be at least as long).
    fn cmp_prefix(&self, other: &BitBuf) -> std::cmp::Ordering {
        debug_assert!(self.len <= other.len);
        let full = self.len / 64;
        for w in 0..full {
            match self.words[w].cmp(&other.words[w]) {
                std::cmp::Ordering::Equal => {}
                ord => return ord,
            }
        }
        let rem = self.len % 64;
        if rem > 0 {
            let m = !mask_low(64 - rem);
            return (self.words[full] & m).cmp(&(other.words[full] & m));
        }
        std::cmp::Ordering::Equal
    }

    fn as_key(&self) -> CanonKey {
        let words = self.len.div_ceil(64);
        CanonKey {
            len: self.len,
            words: self.words[..words].to_vec(),
        }
    }
}

const fn mask_low(free: usize) -> u64 {
    if free == 64 {
        u64::MAX
    } else {
        (1u64 << free) - 1
    }
}

/// A comparable, hashable canonical string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct CanonKey {
    len: usize,
    words: Vec<u64>,
}

/// Iterated degree refinement; returns an isomorphism-invariant color rank
/// per vertex. Partitions only split, so the loop stops as soon as the class
/// count is stable.
fn refined_colors(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut colors: Vec<u8> = (0..n).map(|v| g.degree(v) as u8).collect();
    let mut classes = rank_in_place(&mut colors);
    loop {
        let mut sigs: Vec<(u8, Vec<u8>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u8> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u8; n];
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let new_classes = rank as usize + 1;
        colors = next;
        if new_classes == classes {
            return colors;
        }
        classes = new_classes;
    }
}

fn rank_in_place(values: &mut [u8]) -> usize {
    let mut sorted: Vec<u8> = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for v in values.iter_mut() {
        *v = sorted.binary_search(v).unwrap() as u8;
    }
    sorted.len()
}

struct Minimizer<'a> {
    g: &'a Graph,
    colors: Vec<u8>,
    /// twins[v]: vertices whose swap with v is an automorphism. Exploring
    /// one candidate per twin class at each level is sound and collapses the
    /// factorial tie blowup on empty graphs, cliques, and clique unions.
    twins: Vec<u64>,
    allowed_last: u64,
    cur: BitBuf,
    placed: Vec<usize>,
    /// Adjacency bits of each vertex against the placed prefix, maintained
    /// incrementally (shifted on push, unshifted on pop).
    prefix_bits: Vec<u64>,
    used: u64,
    best: Option<(BitBuf, Vec<usize>)>,
    /// When set, stop as soon as a permutation achieving exactly the seeded
    /// best is found (achievability check).
    stop_at_equal: bool,
    found_equal: bool,
}

/// twins[v]: vertices whose transposition with v is an automorphism.
pub(crate) fn twin_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut twins = vec![0u64; n];
    for u in 0..n {
        for w in (u + 1)..n {
            let mask = !((1u64 << u) | (1u64 << w));
            if g.neighbors_mask(u) & mask == g.neighbors_mask(w) & mask {
                twins[u] |= 1u64 << w;
                twins[w] |= 1u64 << u;
            }
        }
    }
    twins
}

impl<'a> Minimizer<'a> {
    fn new(g: &'a Graph, allowed_last: u64) -> Self {
        let n = g.n();
        let colors = if n <= 8 {
            vec![0u8; n]
        } else {
            refined_colors(g)
        };
        Minimizer {
            g,
            colors,
            twins: twin_masks(g),
            allowed_last,
            cur: BitBuf::new(),
            placed: Vec::with_capacity(n),
            prefix_bits: vec![0u64; n],
            used: 0,
            best: None,
            stop_at_equal: false,
            found_equal: false,
        }
    }

    fn descend(&mut self) {
        let n = self.g.n();
        let level = self.placed.len();
        if level == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.cur.cmp_prefix(b) == std::cmp::Ordering::Less,
            };
            if better {
                self.best = Some((self.cur.clone(), self.placed.clone()));
            } else if self.stop_at_equal {
                if let Some((b, _)) = &self.best {
                    if self.cur.cmp_prefix(b) == std::cmp::Ordering::Equal {
                        self.found_equal = true;
                    }
                }
            }
            return;
        }

        let unused = !self.used & crate::VertexSet::full(n).0;
        // A vertex from the allowed set must remain for the last slot.
        if unused & self.allowed_last == 0 {
            return;
        }

        let mut cands = [(0u8, 0u64, 0u8); 64];
        let mut count = 0usize;
        for v in BitIter(unused) {
            if level == n - 1 && self.allowed_last >> v & 1 == 0 {
                continue;
            }
            cands[count] = (self.colors[v], self.prefix_bits[v], v as u8);
            count += 1;
        }
        cands[..count].sort_unstable();

        let mark = self.cur.len;
        let mut tried = 0u64;
        for &(color, bits, v8) in &cands[..count] {
            if self.found_equal {
                return;
            }
            let v = v8 as usize;
            // Skip candidates that an already-tried twin covers; the swap
            // must also fix the allowed-last set.
            let interchangeable = self.twins[v]
                & tried
                & if self.allowed_last >> v & 1 == 1 {
                    self.allowed_last
                } else {
                    !self.allowed_last
                };
            tried |= 1u64 << v;
            if interchangeable != 0 {
                continue;
            }
            self.cur.push(color as u64, 8);
            self.cur.push(bits, level);
            let prune = match &self.best {
                None => false,
                Some((b, _)) => self.cur.cmp_prefix(b) == std::cmp::Ordering::Greater,
            };
            if !prune {
                self.placed.push(v);
                self.used |= 1u64 << v;
                let row = self.g.neighbors_mask(v);
                for u in 0..n {
                    self.prefix_bits[u] = self.prefix_bits[u] << 1 | (row >> u & 1);
                }
                self.descend();
                for u in 0..n {
                    self.prefix_bits[u] >>= 1;
                }
                self.used &= !(1u64 << v);
                self.placed.pop();
            }
            self.cur.truncate(mark);
        }
    }

    fn run(mut self) -> (CanonKey, Vec<usize>) {
        self.descend();
        let (buf, perm) = self.best.expect("at least one permutation exists");
        (buf.as_key(), perm)
    }
}

/// Canonical string and labeling with the last position restricted to
/// `allowed_last` (a nonempty vertex mask). `perm[pos]` is the original id
/// placed at canonical position `pos`.
pub(crate) fn min_string_constrained(g: &Graph, allowed_last: u64) -> (CanonKey, Vec<usize>) {
    debug_assert!(g.n() == 0 || allowed_last & crate::VertexSet::full(g.n()).0 != 0);
    Minimizer::new(g, allowed_last).run()
}

/// True iff some permutation with `v` in the last position achieves the
/// canonical string `target` (which must be the constrained minimum of a
/// superset restriction).
pub(crate) fn achieves_min_with_last(g: &Graph, target: &CanonKey, v: usize) -> bool {
    let mut m = Minimizer::new(g, 1u64 << v);
    m.best = Some((
        {
            let mut b = BitBuf::new();
            for (i, w) in target.words.iter().enumerate() {
                let take = (target.len - 64 * i).min(64);
                b.push(w >> (64 - take), take);
            }
            b
        },
        Vec::new(),
    ));
    m.stop_at_equal = true;
    m.descend();
    m.found_equal
}

/// Permutation to canonical order: `perm[pos]` is the original vertex id.
pub fn canonical_perm(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    min_string_constrained(g, crate::VertexSet::full(g.n()).0).1
}

/// Applies a position-to-id permutation.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let n = g.n();
    debug_assert_eq!(perm.len(), n);
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut inv = vec![0usize; n];
    for (pos, &orig) in perm.iter().enumerate() {
        inv[orig] = pos;
    }
    for (u, v) in g.edges() {
        edges.push((inv[u], inv[v]));
    }
    Graph::from_edges(n, &edges).expect("relabeling preserves validity")
}

/// The canonically labeled representative of the isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    relabel(g, &canonical_perm(g))
}

/// Canonical label as a byte string: the graph6 encoding of the canonical
/// representative. Equal labels iff isomorphic; stable across runs.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    crate::graph6::to_graph6(&canonical_graph(g)).into_bytes()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}
