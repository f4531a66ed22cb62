//! Graph value types: simple, directed, rational-weighted and
//! multiplicity-weighted graphs on vertices `0..n`, plus the permutation
//! action of the symmetric group on each of them.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Zero};

use crate::error::{Error, Result};

/// Exact rationals are the only field used for weights.
pub type Rational = BigRational;

/// Bitmask-backed types are limited to 64 vertices.
pub const MAX_VERTICES: usize = 64;

/// Position of the unordered pair `{i, j}` (`i < j`) in the column-major
/// upper triangle `x01, x02, x12, x03, x13, x23, ...`.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Inverse of [`pair_index`].
pub fn pair_at(index: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= index {
        j += 1;
    }
    (index - j * (j - 1) / 2, j)
}

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Argument(format!("at most {MAX_VERTICES} vertices are supported, got {n}")));
    }
    Ok(())
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i >= n || j >= n {
        return Err(Error::Argument(format!("endpoint out of range in ({i}, {j}) for {n} vertices")));
    }
    if i == j {
        return Err(Error::Argument(format!("loop at vertex {i}")));
    }
    Ok(())
}

/// Vertex index after deleting `k` and shifting later vertices down.
#[inline]
fn compact(v: usize, k: usize) -> usize {
    if v < k {
        v
    } else {
        v - 1
    }
}

/// A bijection on `0..n`; vertex `i` is sent to `images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Argument(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&v| self.images[v]).collect() }
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.images.len() != n {
            return Err(Error::SizeMismatch { expected: n, actual: self.images.len() });
        }
        Ok(())
    }
}

/// The action `σ·g` of a permutation on a graph: edge `{i,j}` goes to
/// `{σ(i), σ(j)}` with its weight or multiplicity unchanged.
pub trait Relabel: Sized {
    fn relabel(&self, sigma: &Permutation) -> Result<Self>;
}

/// Relabels `g` through `sigma`.
pub fn apply_permutation<G: Relabel>(sigma: &Permutation, g: &G) -> Result<G> {
    g.relabel(sigma)
}

/// Finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<u64>,
}

impl LabeledGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for j in 0..n {
            for i in 0..j {
                g.insert(i, j);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Argument(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Self::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            check_pair(n, i, j)?;
            g.insert(i, j);
        }
        Ok(g)
    }

    /// Graph from per-vertex neighbour bitmasks. The masks must be symmetric
    /// and loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        for (i, &row) in adj.iter().enumerate() {
            if n < 64 && row >> n != 0 {
                return Err(Error::Argument(format!("row {i} has bits beyond vertex {n}")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::Argument(format!("loop at vertex {i}")));
            }
            for (j, other) in adj.iter().enumerate() {
                if (row >> j & 1) != (other >> i & 1) {
                    return Err(Error::Argument(format!("asymmetric adjacency at ({i}, {j})")));
                }
            }
        }
        Ok(Self { n, adj })
    }

    #[inline]
    fn insert(&mut self, i: usize, j: usize) {
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        check_pair(self.n, i, j)?;
        self.insert(i, j);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<()> {
        check_pair(self.n, i, j)?;
        self.adj[i] &= !(1 << j);
        self.adj[j] &= !(1 << i);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i] >> j & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Connected, with the convention that graphs on 0 or 1 vertices are.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == all
    }

    /// The vertex-deleted subgraph `G - k`, survivors keeping their
    /// relative order.
    pub fn delete_vertex(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::Argument(format!("vertex {k} out of range for {} vertices", self.n)));
        }
        let low = (1u64 << k) - 1;
        let adj = (0..self.n)
            .filter(|&v| v != k)
            .map(|v| {
                let row = self.adj[v];
                (row & low) | ((row >> 1) & !low)
            })
            .collect();
        Ok(Self { n: self.n - 1, adj })
    }

    /// Adds one vertex joined to the vertices in `mask`; returns its index.
    pub fn add_vertex(&mut self, mask: u64) -> Result<usize> {
        check_order(self.n + 1)?;
        let v = self.n;
        if v < 64 && mask >> v != 0 {
            return Err(Error::Argument("neighbour mask refers to missing vertices".into()));
        }
        self.n += 1;
        self.adj.push(mask);
        for u in 0..v {
            if mask >> u & 1 == 1 {
                self.adj[u] |= 1 << v;
            }
        }
        Ok(v)
    }

    /// Same graph with `extra` isolated vertices appended.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::SizeMismatch { expected: n, actual: self.n });
        }
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Ok(Self { n, adj })
    }

    pub fn to_weighted(&self) -> WeightedGraph {
        let mut w = WeightedGraph::empty(self.n);
        for (i, j) in self.edges() {
            w.weights.insert((i, j), Rational::from_integer(1.into()));
        }
        w
    }
}

impl Relabel for LabeledGraph {
    fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        sigma.check_len(self.n)?;
        let mut out = Self { n: self.n, adj: vec![0; self.n] };
        for (i, j) in self.edges() {
            out.insert(sigma.apply(i), sigma.apply(j));
        }
        Ok(out)
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, {:?})", self.n, self.edges())
    }
}

/// Directed graph without self-arcs; at most one arc per ordered pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self { n, out: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in arcs {
            check_pair(n, i, j)?;
            g.out[i] |= 1 << j;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.out[i] >> j & 1 == 1
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.has_arc(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn delete_vertex(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::Argument(format!("vertex {k} out of range for {} vertices", self.n)));
        }
        let arcs: Vec<_> = self
            .arcs()
            .into_iter()
            .filter(|&(i, j)| i != k && j != k)
            .map(|(i, j)| (compact(i, k), compact(j, k)))
            .collect();
        Self::from_arcs(self.n - 1, &arcs)
    }
}

impl Relabel for Digraph {
    fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        sigma.check_len(self.n)?;
        let arcs: Vec<_> = self.arcs().into_iter().map(|(i, j)| (sigma.apply(i), sigma.apply(j))).collect();
        Self::from_arcs(self.n, &arcs)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, {:?})", self.n, self.arcs())
    }
}

/// A point of the edge space: a rational weight on every unordered pair,
/// stored sparsely (absent pairs have weight zero).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightedGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), Rational>,
}

impl WeightedGraph {
    pub fn empty(n: usize) -> Self {
        Self { n, weights: BTreeMap::new() }
    }

    /// Builds from `(i, j, w)` triples. Zero weights are dropped; a pair
    /// listed twice is an error.
    pub fn from_weights<I>(n: usize, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut g = Self::empty(n);
        for (i, j, w) in weights {
            check_pair(n, i, j)?;
            let key = ordered(i, j);
            if g.weights.contains_key(&key) {
                return Err(Error::Argument(format!("pair {key:?} given twice")));
            }
            if !w.is_zero() {
                g.weights.insert(key, w);
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Weight of `{i, j}`; zero when absent.
    pub fn weight(&self, i: usize, j: usize) -> Rational {
        if i == j {
            return Rational::zero();
        }
        self.weights.get(&ordered(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn weight_ref(&self, i: usize, j: usize) -> Option<&Rational> {
        self.weights.get(&ordered(i, j))
    }

    pub fn set_weight(&mut self, i: usize, j: usize, w: Rational) -> Result<()> {
        check_pair(self.n, i, j)?;
        if w.is_zero() {
            self.weights.remove(&ordered(i, j));
        } else {
            self.weights.insert(ordered(i, j), w);
        }
        Ok(())
    }

    /// Present edges with nonzero weight, `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.weights.iter().map(|(&(i, j), w)| (i, j, w))
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn delete_vertex(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::Argument(format!("vertex {k} out of range for {} vertices", self.n)));
        }
        let weights = self
            .weights
            .iter()
            .filter(|(&(i, j), _)| i != k && j != k)
            .map(|(&(i, j), w)| ((compact(i, k), compact(j, k)), w.clone()))
            .collect();
        Ok(Self { n: self.n - 1, weights })
    }
}

impl Relabel for WeightedGraph {
    fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        sigma.check_len(self.n)?;
        let weights =
            self.weights.iter().map(|(&(i, j), w)| (ordered(sigma.apply(i), sigma.apply(j)), w.clone())).collect();
        Ok(Self { n: self.n, weights })
    }
}

/// A graph with positive integer edge multiplicities; equivalently the
/// monomial `Π x_{ij}^{m_ij}` in the edge variables. Its degree is the
/// total multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Multigraph {
    n: usize,
    mult: BTreeMap<(usize, usize), u32>,
}

impl Multigraph {
    pub fn empty(n: usize) -> Self {
        Self { n, mult: BTreeMap::new() }
    }

    /// Builds from `(i, j, m)` triples; multiplicities of a repeated pair add
    /// up and zero multiplicities are dropped.
    pub fn from_multiplicities<I>(n: usize, mult: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut g = Self::empty(n);
        for (i, j, m) in mult {
            check_pair(n, i, j)?;
            if m > 0 {
                *g.mult.entry(ordered(i, j)).or_insert(0) += m;
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 0;
        }
        self.mult.get(&ordered(i, j)).copied().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.mult.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    /// Total multiplicity, the degree of the monomial.
    pub fn degree(&self) -> u32 {
        self.mult.values().sum()
    }

    /// Vertices not touched by any edge.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut touched = vec![false; self.n];
        for &(i, j) in self.mult.keys() {
            touched[i] = true;
            touched[j] = true;
        }
        (0..self.n).filter(|&v| !touched[v]).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    /// Adds `m` to the multiplicity of `{i, j}`.
    pub fn bump(&mut self, i: usize, j: usize, m: u32) -> Result<()> {
        check_pair(self.n, i, j)?;
        if m > 0 {
            *self.mult.entry(ordered(i, j)).or_insert(0) += m;
        }
        Ok(())
    }

    /// Edge-wise sum of multiplicities: the product of the two monomials.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: other.n });
        }
        let mut out = self.clone();
        for (&k, &m) in &other.mult {
            *out.mult.entry(k).or_insert(0) += m;
        }
        Ok(out)
    }

    /// Exponent vector in column-major pair order.
    pub fn exponents(&self) -> Vec<u32> {
        let mut v = vec![0; pair_count(self.n)];
        for (&(i, j), &m) in &self.mult {
            v[pair_index(i, j)] = m;
        }
        v
    }

    pub fn from_exponents(n: usize, exps: &[u32]) -> Result<Self> {
        if exps.len() != pair_count(n) {
            return Err(Error::Argument(format!(
                "{} exponents for {n} vertices, expected {}",
                exps.len(),
                pair_count(n)
            )));
        }
        let mult = exps.iter().enumerate().filter(|(_, &m)| m > 0).map(|(idx, &m)| (pair_at(idx), m)).collect();
        Ok(Self { n, mult })
    }

    /// Underlying simple graph (support of the monomial).
    pub fn support(&self) -> LabeledGraph {
        let edges: Vec<_> = self.mult.keys().copied().collect();
        LabeledGraph::from_edges(self.n, &edges).expect("multigraph pairs are valid")
    }

    /// Same multigraph with isolated vertices appended up to `n`.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::SizeMismatch { expected: n, actual: self.n });
        }
        Ok(Self { n, mult: self.mult.clone() })
    }
}

impl Relabel for Multigraph {
    fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        sigma.check_len(self.n)?;
        let mult = self.mult.iter().map(|(&(i, j), &m)| (ordered(sigma.apply(i), sigma.apply(j)), m)).collect();
        Ok(Self { n: self.n, mult })
    }
}

impl From<&LabeledGraph> for Multigraph {
    fn from(g: &LabeledGraph) -> Self {
        Self { n: g.order(), mult: g.edges().into_iter().map(|e| (e, 1)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_round_trip() {
        for idx in 0..200 {
            let (i, j) = pair_at(idx);
            assert!(i < j);
            assert_eq!(pair_index(i, j), idx);
        }
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(1, 2), 2);
        assert_eq!(pair_index(0, 3), 3);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn identity_fixes_graph() {
        let g = LabeledGraph::from_edges(5, &[(0, 1), (1, 3), (2, 4)]).unwrap();
        assert_eq!(apply_permutation(&Permutation::identity(5), &g).unwrap(), g);
    }

    #[test]
    fn rotation_fixes_triangle() {
        let k3 = LabeledGraph::complete(3).unwrap();
        let sigma = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(apply_permutation(&sigma, &k3).unwrap(), k3);
    }

    #[test]
    fn swap_ends_of_path() {
        // {01,12} under 0<->2 becomes {21,10}, the same edge set.
        let p = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let sigma = Permutation::new(vec![2, 1, 0]).unwrap();
        let image = apply_permutation(&sigma, &p).unwrap();
        assert_eq!(image.edges(), vec![(0, 1), (1, 2)]);
        // and a non-trivial image: 0->1, 1->0 gives {10, 02}
        let tau = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(apply_permutation(&tau, &p).unwrap().edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn size_mismatch_is_reported() {
        let g = LabeledGraph::empty(4).unwrap();
        let sigma = Permutation::identity(3);
        assert_eq!(apply_permutation(&sigma, &g).unwrap_err(), Error::SizeMismatch { expected: 4, actual: 3 });
    }

    #[test]
    fn weighted_action_moves_weights() {
        let w = WeightedGraph::from_weights(3, [(0, 1, Rational::from_integer(5.into()))]).unwrap();
        let sigma = Permutation::new(vec![2, 0, 1]).unwrap();
        let image = apply_permutation(&sigma, &w).unwrap();
        assert_eq!(image.weight(0, 2), Rational::from_integer(5.into()));
        assert!(image.weight(0, 1).is_zero());
    }

    #[test]
    fn digraph_action_moves_arcs() {
        let d = Digraph::from_arcs(3, &[(0, 1)]).unwrap();
        let sigma = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(apply_permutation(&sigma, &d).unwrap().arcs(), vec![(2, 0)]);
    }

    #[test]
    fn delete_vertex_compacts() {
        let g = LabeledGraph::from_edges(4, &[(0, 2), (1, 2), (2, 3), (0, 3)]).unwrap();
        let card = g.delete_vertex(2).unwrap();
        assert_eq!(card.order(), 3);
        assert_eq!(card.edges(), vec![(0, 2)]);
        let card = g.delete_vertex(0).unwrap();
        assert_eq!(card.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn connectivity() {
        assert!(LabeledGraph::path(5).unwrap().is_connected());
        assert!(!LabeledGraph::empty(2).unwrap().is_connected());
        assert!(LabeledGraph::empty(1).unwrap().is_connected());
        assert!(LabeledGraph::complete(64).unwrap().is_connected());
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(LabeledGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(LabeledGraph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Digraph::from_arcs(2, &[(0, 0)]).is_err());
        assert!(LabeledGraph::empty(65).is_err());
    }

    #[test]
    fn weighted_drops_zero_and_rejects_duplicates() {
        let z = Rational::zero();
        let one = Rational::from_integer(1.into());
        let w = WeightedGraph::from_weights(3, [(0, 1, z), (1, 2, one.clone())]).unwrap();
        assert_eq!(w.edge_count(), 1);
        assert!(WeightedGraph::from_weights(3, [(0, 1, one.clone()), (1, 0, one)]).is_err());
    }

    #[test]
    fn multigraph_isolated_and_degree() {
        let m = Multigraph::from_multiplicities(4, [(0, 1, 2), (1, 2, 1)]).unwrap();
        assert_eq!(m.degree(), 3);
        assert_eq!(m.isolated_vertices(), vec![3]);
        let e = Multigraph::from_exponents(4, &m.exponents()).unwrap();
        assert_eq!(e, m);
    }
}
