//! Canonical forms.
//!
//! The canonical code of a graph is the lexicographically smallest
//! flattening of its pair entries over all `n!` vertex orders. Pairs are
//! flattened column by column (`01, 02, 12, 03, 13, 23, ...`), so column `j`
//! depends only on the vertices placed at positions `0..=j`. The search
//! places vertices one position at a time and keeps every partial order that
//! ties for the smallest prefix, which yields the exact minimum. Vertices
//! whose transposition is an automorphism ("twins") are expanded once with a
//! multiplicity, so fully symmetric graphs cost `O(n^2)` and the multiplicity
//! total at the end is `|Aut(g)|`.

use std::fmt;

use num::BigRational;

use crate::error::Result;
use crate::graph::{pair_count, pair_index, Digraph, LabeledGraph, Multigraph, Permutation, Relabel, WeightedGraph};

/// Flattened representation that is minimal over all relabelings.
///
/// Ordering compares `n` first, then the entries lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E> CanonicalCode<E> {
    /// Wraps raw entries; `entries.len()` must be `n(n-1)/2`.
    pub fn from_entries(n: usize, entries: Vec<E>) -> Self {
        assert_eq!(entries.len(), pair_count(n), "entry count does not match order");
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    /// Entry stored for positions `a < b`.
    pub fn entry(&self, a: usize, b: usize) -> &E {
        &self.entries[pair_index(a, b)]
    }

    pub fn map<F, T>(&self, f: F) -> CanonicalCode<T>
    where
        F: FnMut(&E) -> T,
    {
        CanonicalCode { n: self.n, entries: self.entries.iter().map(f).collect() }
    }
}

impl<E: fmt::Debug> fmt::Debug for CanonicalCode<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(n={}, {:?})", self.n, self.entries)
    }
}

/// Result of a canonical search.
#[derive(Clone, Debug)]
pub struct CanonicalForm<E> {
    pub code: CanonicalCode<E>,
    /// `labeling[p]` is the original vertex placed at position `p`.
    pub labeling: Vec<usize>,
    /// Size of the automorphism group.
    pub automorphisms: u128,
}

impl<E> CanonicalForm<E> {
    /// Permutation sending each original vertex to its canonical position.
    pub fn to_canonical(&self) -> Permutation {
        Permutation::new(self.labeling.clone()).expect("labeling is a bijection").inverse()
    }
}

/// A graph flavor whose structure is a value on each vertex pair.
pub trait PairGraph: Relabel + Clone {
    type Entry: Ord + Clone + fmt::Debug;

    fn order(&self) -> usize;

    /// Entry for the pair with `a` placed before `b`. Undirected flavors
    /// ignore the order.
    fn entry(&self, a: usize, b: usize) -> Self::Entry;

    /// Graph whose identity-order flattening is `code`.
    fn from_code(code: &CanonicalCode<Self::Entry>) -> Self;

    /// `G - k` with survivors compacted in order.
    fn remove_vertex(&self, k: usize) -> Result<Self>;

    /// Minimal flattening plus labeling and automorphism count.
    fn canonical_form(&self) -> CanonicalForm<Self::Entry> {
        generic_search(self)
    }
}

impl PairGraph for LabeledGraph {
    type Entry = bool;

    fn order(&self) -> usize {
        LabeledGraph::order(self)
    }

    fn entry(&self, a: usize, b: usize) -> bool {
        self.has_edge(a, b)
    }

    fn from_code(code: &CanonicalCode<bool>) -> Self {
        let mut g = LabeledGraph::empty(code.n).expect("code order within bounds");
        for b in 1..code.n {
            for a in 0..b {
                if *code.entry(a, b) {
                    g.add_edge(a, b).expect("valid pair");
                }
            }
        }
        g
    }

    fn remove_vertex(&self, k: usize) -> Result<Self> {
        self.delete_vertex(k)
    }

    fn canonical_form(&self) -> CanonicalForm<bool> {
        simple_search(self)
    }
}

/// Arc pattern on a pair `(a, b)`: bit 1 is `a -> b`, bit 0 is `b -> a`.
pub type ArcPair = u8;

impl PairGraph for Digraph {
    type Entry = ArcPair;

    fn order(&self) -> usize {
        Digraph::order(self)
    }

    fn entry(&self, a: usize, b: usize) -> ArcPair {
        (u8::from(self.has_arc(a, b)) << 1) | u8::from(self.has_arc(b, a))
    }

    fn from_code(code: &CanonicalCode<ArcPair>) -> Self {
        let mut arcs = Vec::new();
        for b in 1..code.n {
            for a in 0..b {
                let e = *code.entry(a, b);
                if e & 2 != 0 {
                    arcs.push((a, b));
                }
                if e & 1 != 0 {
                    arcs.push((b, a));
                }
            }
        }
        Digraph::from_arcs(code.n, &arcs).expect("code order within bounds")
    }

    fn remove_vertex(&self, k: usize) -> Result<Self> {
        self.delete_vertex(k)
    }
}

impl PairGraph for WeightedGraph {
    type Entry = BigRational;

    fn order(&self) -> usize {
        WeightedGraph::order(self)
    }

    fn entry(&self, a: usize, b: usize) -> BigRational {
        self.weight(a, b)
    }

    fn from_code(code: &CanonicalCode<BigRational>) -> Self {
        let mut triples = Vec::new();
        for b in 1..code.n {
            for a in 0..b {
                triples.push((a, b, code.entry(a, b).clone()));
            }
        }
        WeightedGraph::from_weights(code.n, triples).expect("code pairs are distinct")
    }

    fn remove_vertex(&self, k: usize) -> Result<Self> {
        self.delete_vertex(k)
    }
}

impl PairGraph for Multigraph {
    type Entry = u32;

    fn order(&self) -> usize {
        Multigraph::order(self)
    }

    fn entry(&self, a: usize, b: usize) -> u32 {
        self.multiplicity(a, b)
    }

    fn from_code(code: &CanonicalCode<u32>) -> Self {
        Multigraph::from_exponents(code.n, &code.entries).expect("entry count matches")
    }

    fn remove_vertex(&self, k: usize) -> Result<Self> {
        let mult = self
            .edges()
            .filter(|&(i, j, _)| i != k && j != k)
            .map(|(i, j, m)| (if i < k { i } else { i - 1 }, if j < k { j } else { j - 1 }, m));
        Multigraph::from_multiplicities(self.order() - 1, mult)
    }
}

/// Canonical code of any graph flavor.
pub fn canonical_code<G: PairGraph>(g: &G) -> CanonicalCode<G::Entry> {
    g.canonical_form().code
}

/// Isomorphism test by canonical code comparison (orders must match).
pub fn are_isomorphic<G: PairGraph>(g: &G, h: &G) -> bool {
    g.order() == h.order() && canonical_code(g) == canonical_code(h)
}

/// `|Aut(g)|`, read off the canonical search.
pub fn automorphism_count<G: PairGraph>(g: &G) -> u128 {
    g.canonical_form().automorphisms
}

/// Number of distinct labeled images of `g` under `S_n`, i.e. `n!/|Aut(g)|`.
///
/// # Panics
/// When `n!` does not fit in 128 bits (`n > 34`).
pub fn orbit_size<G: PairGraph>(g: &G) -> u128 {
    factorial(g.order()) / automorphism_count(g)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).expect("factorial overflows u128")
}

/// Twin classes: `rep[v]` is the smallest `u` such that the transposition
/// `(u v)` is an automorphism. The relation is an equivalence because a
/// product of automorphisms is one.
fn twin_classes<G: PairGraph>(g: &G) -> Vec<usize> {
    let n = g.order();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if rep[u] != u {
                continue;
            }
            let swap_ok = g.entry(u, v) == g.entry(v, u)
                && (0..n)
                    .filter(|&x| x != u && x != v)
                    .all(|x| g.entry(u, x) == g.entry(v, x) && g.entry(x, u) == g.entry(x, v));
            if swap_ok {
                rep[v] = u;
                break;
            }
        }
    }
    rep
}

/// Unused vertices that stand for their twin class, with class multiplicity.
fn candidates(rep: &[usize], used: u64) -> impl Iterator<Item = (usize, u128)> + '_ {
    let n = rep.len();
    let mut counts = vec![0u128; n];
    for v in 0..n {
        if used >> v & 1 == 0 {
            counts[rep[v]] += 1;
        }
    }
    let mut taken = vec![false; n];
    (0..n).filter_map(move |v| {
        if used >> v & 1 == 1 || taken[rep[v]] {
            return None;
        }
        taken[rep[v]] = true;
        Some((v, counts[rep[v]]))
    })
}

struct GenericState {
    seq: Vec<usize>,
    used: u64,
    weight: u128,
}

fn generic_search<G: PairGraph>(g: &G) -> CanonicalForm<G::Entry> {
    let n = g.order();
    let rep = twin_classes(g);
    let mut states = vec![GenericState { seq: Vec::with_capacity(n), used: 0, weight: 1 }];
    let mut entries = Vec::with_capacity(pair_count(n));
    for _ in 0..n {
        let mut best: Option<Vec<G::Entry>> = None;
        let mut next = Vec::new();
        for s in &states {
            for (v, mult) in candidates(&rep, s.used) {
                let col: Vec<G::Entry> = s.seq.iter().map(|&u| g.entry(u, v)).collect();
                let keep = match &best {
                    None => true,
                    Some(b) => match col.cmp(b) {
                        std::cmp::Ordering::Less => {
                            next.clear();
                            true
                        }
                        std::cmp::Ordering::Equal => true,
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if keep {
                    let mut seq = s.seq.clone();
                    seq.push(v);
                    next.push(GenericState { seq, used: s.used | 1 << v, weight: s.weight * mult });
                    if best.as_ref().is_none_or(|b| col < *b) {
                        best = Some(col);
                    }
                }
            }
        }
        entries.extend(best.unwrap_or_default());
        states = next;
    }
    finish(n, entries, states.iter().map(|s| (&s.seq, s.weight)))
}

fn finish<'a, E>(n: usize, entries: Vec<E>, leaves: impl Iterator<Item = (&'a Vec<usize>, u128)>) -> CanonicalForm<E> {
    let mut labeling = None;
    let mut automorphisms = 0;
    for (seq, w) in leaves {
        if labeling.is_none() {
            labeling = Some(seq.clone());
        }
        automorphisms += w;
    }
    CanonicalForm {
        code: CanonicalCode { n, entries },
        labeling: labeling.unwrap_or_default(),
        automorphisms: automorphisms.max(1),
    }
}

struct SimpleState {
    seq: Vec<usize>,
    used: u64,
    weight: u128,
    /// `cols[w]`: adjacency of `w` to the placed vertices, first position in
    /// the most significant bit.
    cols: Vec<u64>,
}

/// Bitmask specialization of [`generic_search`] for simple graphs.
fn simple_search(g: &LabeledGraph) -> CanonicalForm<bool> {
    let n = g.order();
    let adj = g.adjacency();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if rep[u] == u && (adj[u] & !(1 << v)) == (adj[v] & !(1 << u)) {
                rep[v] = u;
                break;
            }
        }
    }
    let mut states = vec![SimpleState { seq: Vec::with_capacity(n), used: 0, weight: 1, cols: vec![0; n] }];
    let mut entries = Vec::with_capacity(pair_count(n));
    for j in 0..n {
        let mut best = u64::MAX;
        let mut chosen: Vec<(usize, usize, u128)> = Vec::new();
        for (si, s) in states.iter().enumerate() {
            for (v, mult) in candidates(&rep, s.used) {
                let col = s.cols[v];
                if col < best {
                    best = col;
                    chosen.clear();
                }
                if col == best {
                    chosen.push((si, v, mult));
                }
            }
        }
        for p in (0..j).rev() {
            entries.push(best >> p & 1 == 1);
        }
        let next = chosen
            .into_iter()
            .map(|(si, v, mult)| {
                let s = &states[si];
                let used = s.used | 1 << v;
                let mut cols = s.cols.clone();
                let row = adj[v];
                for (w, c) in cols.iter_mut().enumerate() {
                    if used >> w & 1 == 0 {
                        *c = (*c << 1) | (row >> w & 1);
                    }
                }
                let mut seq = s.seq.clone();
                seq.push(v);
                SimpleState { seq, used, weight: s.weight * mult, cols }
            })
            .collect();
        states = next;
    }
    finish(n, entries, states.iter().map(|s| (&s.seq, s.weight)))
}

/// Reference canonical code: minimum flattening of `σ·g` over every
/// permutation σ, enumerated with Heap's algorithm. Exponential; intended as
/// a test oracle for `n <= 8`.
pub fn brute_force_code<G: PairGraph>(g: &G) -> CanonicalCode<G::Entry> {
    let n = g.order();
    let flatten = |h: &G| {
        let mut v = Vec::with_capacity(pair_count(n));
        for b in 1..n {
            for a in 0..b {
                v.push(h.entry(a, b));
            }
        }
        v
    };
    let mut best = flatten(g);
    for_each_permutation(n, |perm| {
        let sigma = Permutation::new(perm.to_vec()).expect("valid permutation");
        let image = g.relabel(&sigma).expect("sizes match");
        let flat = flatten(&image);
        if flat < best {
            best = flat;
        }
    });
    CanonicalCode { n, entries: best }
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm, iterative).
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn all_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
        let m = pair_count(n);
        (0u64..1 << m).map(move |mask| {
            let mut g = LabeledGraph::empty(n).unwrap();
            for idx in 0..m {
                if mask >> idx & 1 == 1 {
                    let (i, j) = crate::graph::pair_at(idx);
                    g.add_edge(i, j).unwrap();
                }
            }
            g
        })
    }

    #[test]
    fn heap_enumerates_every_permutation_once() {
        let mut seen = BTreeSet::new();
        for_each_permutation(5, |p| {
            assert!(seen.insert(p.to_vec()));
        });
        assert_eq!(seen.len(), 120);
        let mut count = 0;
        for_each_permutation(0, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn path_labelings_share_a_code() {
        let a = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = LabeledGraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let codes: BTreeSet<_> = all_graphs(4).map(|g| canonical_code(&g)).collect();
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn search_matches_brute_force_up_to_five() {
        for n in 0..=5 {
            for g in all_graphs(n) {
                assert_eq!(canonical_code(&g), brute_force_code(&g), "{g:?}");
                assert_eq!(generic_search(&g).code, brute_force_code(&g));
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&LabeledGraph::complete(6).unwrap()), 720);
        assert_eq!(automorphism_count(&LabeledGraph::empty(7).unwrap()), 5040);
        assert_eq!(automorphism_count(&LabeledGraph::cycle(6).unwrap()), 12);
        assert_eq!(automorphism_count(&LabeledGraph::path(5).unwrap()), 2);
        let star = LabeledGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(automorphism_count(&star), 24);
    }

    #[test]
    fn orbit_sizes() {
        let edge = LabeledGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(orbit_size(&edge), 3);
        for n in 1..=8 {
            assert_eq!(orbit_size(&LabeledGraph::complete(n).unwrap()), 1);
        }
        for n in 3..=8 {
            assert_eq!(orbit_size(&LabeledGraph::cycle(n).unwrap()), factorial(n - 1) / 2);
        }
    }

    #[test]
    fn labeling_realizes_code() {
        let g = LabeledGraph::from_edges(6, &[(0, 4), (4, 2), (2, 5), (1, 3)]).unwrap();
        let form = g.canonical_form();
        let image = g.relabel(&form.to_canonical()).unwrap();
        assert_eq!(LabeledGraph::from_code(&form.code), image);
    }

    #[test]
    fn digraph_directions_matter() {
        let source = Digraph::from_arcs(3, &[(0, 1), (0, 2)]).unwrap();
        let sink = Digraph::from_arcs(3, &[(1, 0), (2, 0)]).unwrap();
        assert!(!are_isomorphic(&source, &sink));
        let source2 = Digraph::from_arcs(3, &[(2, 1), (2, 0)]).unwrap();
        assert!(are_isomorphic(&source, &source2));
        assert_eq!(canonical_code(&source), brute_force_code(&source));
        assert_eq!(canonical_code(&sink), brute_force_code(&sink));
    }

    #[test]
    fn weighted_orders_numerically() {
        let r = |x: i64| BigRational::from_integer(x.into());
        let w = WeightedGraph::from_weights(3, [(0, 1, r(2)), (1, 2, r(-1))]).unwrap();
        let code = canonical_code(&w);
        assert_eq!(code, brute_force_code(&w));
        // negative weight sorts before an absent pair
        assert_eq!(code.entries()[0], r(-1));
    }
}
