//! Graded pieces of the invariant ring: orbit-sum classes of a given degree,
//! products re-expressed in the orbit-sum basis, span ranks, and separation
//! of weighted graphs by isolated-vertex orbit sums.

use std::collections::{BTreeSet, HashMap};

use num::{BigInt, Zero};
use rayon::prelude::*;

use super::{orbit_exponents, ExpandedOrbit, InvariantLimits, InvariantPolynomial, OrbitSum, ScaledWeights};
use crate::canon::{canonical_code, orbit_size, CanonicalCode, PairGraph};
use crate::enumerate::enumerate_nonisomorphic;
use crate::error::{Error, Result};
use crate::graph::{pair_count, LabeledGraph, Multigraph, Rational, WeightedGraph};
use crate::linalg::rational_rank;

/// Canonical codes of the multigraph classes on `n` vertices with total
/// multiplicity `d`, sorted. Their count is the dimension of the degree-`d`
/// invariants.
pub fn multigraph_classes(n: usize, d: u32) -> Vec<CanonicalCode<u32>> {
    let pairs = pair_count(n);
    let mut layer = vec![canonical_code(&Multigraph::empty(n))];
    if pairs == 0 {
        return if d == 0 { layer } else { Vec::new() };
    }
    for _ in 0..d {
        layer = layer
            .par_iter()
            .fold(BTreeSet::new, |mut acc, code| {
                for p in 0..pairs {
                    let mut e = code.entries().to_vec();
                    e[p] += 1;
                    acc.insert(canonical_code(&Multigraph::from_code(&CanonicalCode::from_entries(n, e))));
                }
                acc
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
            .into_iter()
            .collect();
    }
    layer
}

/// Dimension of the degree-`d` part of the invariant ring on `n` vertices.
pub fn invariant_space_dimension(n: usize, d: u32) -> usize {
    multigraph_classes(n, d).len()
}

fn orbit_sums_where(n: usize, max_degree: u32, keep: impl Fn(&Multigraph) -> bool) -> Vec<OrbitSum> {
    (1..=max_degree)
        .flat_map(|d| multigraph_classes(n, d))
        .map(OrbitSum::from_code)
        .filter(|o| keep(&o.rep()))
        .collect()
}

/// One orbit sum per multigraph class with an isolated vertex and degree in
/// `1..=max_degree`, in (degree, representative) order.
pub fn isolated_vertex_orbit_sums(n: usize, max_degree: u32) -> Vec<OrbitSum> {
    if n == 0 {
        return Vec::new();
    }
    // Classes with an isolated vertex are the classes on n - 1 vertices, padded.
    let mut out: Vec<OrbitSum> = (1..=max_degree)
        .flat_map(|d| multigraph_classes(n - 1, d))
        .map(|c| OrbitSum::new(&Multigraph::from_code(&c).padded(n).expect("padding grows the order")))
        .collect();
    out.sort();
    out
}

/// Orbit sums of simple graphs (all multiplicities one) with `1..=max_degree`
/// edges.
pub fn simple_graph_orbit_sums(n: usize, max_degree: u32) -> Result<Vec<OrbitSum>> {
    let mut out: Vec<OrbitSum> = enumerate_nonisomorphic(n, false)?
        .into_iter()
        .map(|c| LabeledGraph::from_code(&c))
        .filter(|g| (1..=max_degree as usize).contains(&g.edge_count()))
        .map(|g| OrbitSum::new(&Multigraph::from(&g)))
        .collect();
    out.sort();
    Ok(out)
}

/// Every orbit sum of degree `1..=max_degree`.
pub fn all_orbit_sums(n: usize, max_degree: u32) -> Vec<OrbitSum> {
    orbit_sums_where(n, max_degree, |_| true)
}

type Expansion = Vec<(CanonicalCode<u32>, Rational)>;

/// Memoized products `O(A)·O(B)` in the orbit-sum basis.
#[derive(Default)]
struct ProductTable {
    cache: HashMap<(CanonicalCode<u32>, CanonicalCode<u32>), Expansion>,
}

impl ProductTable {
    /// `O(A)·O(B) = Σ_C c_C O(C)`. Fix `A` and let `B'` run over the orbit of
    /// `B`: the pairs `(A', B')` summing into the orbit of `C` number
    /// `|O(A)| · N_C`, where `N_C` counts the `B'` with `A + B' ~ C`, and they
    /// spread evenly over the `|O(C)|` monomials of that orbit.
    fn orbit_product(
        &mut self,
        a: &CanonicalCode<u32>,
        b: &CanonicalCode<u32>,
        limits: &InvariantLimits,
    ) -> Result<&[(CanonicalCode<u32>, Rational)]> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let key = (a.clone(), b.clone());
        if !self.cache.contains_key(&key) {
            let value = orbit_product_uncached(a, b, limits)?;
            self.cache.insert(key.clone(), value);
        }
        Ok(&self.cache[&key])
    }
}

fn orbit_product_uncached(
    a: &CanonicalCode<u32>,
    b: &CanonicalCode<u32>,
    limits: &InvariantLimits,
) -> Result<Vec<(CanonicalCode<u32>, Rational)>> {
    let n = a.n();
    let (ma, mb) = (Multigraph::from_code(a), Multigraph::from_code(b));
    // Walk the smaller orbit.
    let (fixed, walked) = if orbit_size(&ma) >= orbit_size(&mb) { (ma, mb) } else { (mb, ma) };
    limits.check_orbit(&walked)?;
    let base = fixed.exponents();
    let mut counts: HashMap<CanonicalCode<u32>, u128> = HashMap::new();
    for e in orbit_exponents(&walked) {
        let sum: Vec<u32> = base.iter().zip(&e).map(|(x, y)| x + y).collect();
        let c = canonical_code(&Multigraph::from_code(&CanonicalCode::from_entries(n, sum)));
        *counts.entry(c).or_default() += 1;
    }
    let fixed_orbit = orbit_size(&fixed);
    let mut out: Vec<_> = counts
        .into_iter()
        .map(|(c, n_c)| {
            let total = fixed_orbit * n_c;
            let size = orbit_size(&Multigraph::from_code(&c));
            debug_assert_eq!(total % size, 0);
            (c, Rational::from_integer(BigInt::from(total / size)))
        })
        .collect();
    out.sort();
    Ok(out)
}

impl ProductTable {
    fn multiply(
        &mut self,
        p: &InvariantPolynomial,
        q: &InvariantPolynomial,
        limits: &InvariantLimits,
    ) -> Result<InvariantPolynomial> {
        if p.n != q.n {
            return Err(Error::SizeMismatch { expected: p.n, actual: q.n });
        }
        let mut out = InvariantPolynomial::zero(p.n);
        for (ca, qa) in &p.terms {
            for (cb, qb) in &q.terms {
                let coeff = qa * qb;
                for (c, k) in self.orbit_product(ca, cb, limits)? {
                    out.add_code(c.clone(), &coeff * k);
                }
            }
        }
        Ok(out)
    }
}

/// Exact product of two invariants, collected in the orbit-sum basis.
pub fn expand_product(a: &InvariantPolynomial, b: &InvariantPolynomial) -> Result<InvariantPolynomial> {
    ProductTable::default().multiply(a, b, &InvariantLimits::default())
}

/// Rank of a family's degree-`d` products against the full degree-`d` space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanRank {
    pub rank: usize,
    pub dimension: usize,
}

impl SpanRank {
    pub fn deficiency(&self) -> usize {
        self.dimension - self.rank
    }
}

/// Forms every product of family members whose degrees sum to `d`, writes
/// each in the orbit-sum basis and returns the exact rank of the result.
///
/// Products are added in order of increasing factor count; once the rank
/// reaches the dimension the remaining products cannot raise it.
pub fn span_rank(family: &[OrbitSum], n: usize, d: u32, limits: &InvariantLimits) -> Result<SpanRank> {
    limits.check_algebra(n, d)?;
    if let Some(o) = family.iter().find(|o| o.n() != n) {
        return Err(Error::SizeMismatch { expected: n, actual: o.n() });
    }
    let basis = multigraph_classes(n, d);
    let dimension = basis.len();
    let column: HashMap<&CanonicalCode<u32>, usize> = basis.iter().enumerate().map(|(i, c)| (c, i)).collect();

    let mut members: Vec<&OrbitSum> = family.iter().filter(|o| (1..=d).contains(&o.degree())).collect();
    members.sort();
    members.dedup();

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rank = 0;
    for factors in 1..=d as usize {
        let batch: Vec<Vec<Rational>> = (0..members.len())
            .into_par_iter()
            .map(|first| -> Result<Vec<Vec<Rational>>> {
                let mut table = ProductTable::default();
                let mut polys = Vec::new();
                let start = InvariantPolynomial::from_orbit_sum(members[first]);
                extend_products(
                    &members,
                    first,
                    start,
                    members[first].degree(),
                    factors - 1,
                    d,
                    &mut table,
                    limits,
                    &mut polys,
                )?;
                Ok(polys.into_iter().map(|p| to_row(&p, &column, dimension)).collect())
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if batch.is_empty() {
            continue;
        }
        rows.extend(batch);
        rank = rational_rank(&rows);
        if rank == dimension {
            break;
        }
    }
    Ok(SpanRank { rank, dimension })
}

/// Depth-first walk over non-decreasing index sequences, so each multiset of
/// factors is produced once.
#[allow(clippy::too_many_arguments)]
fn extend_products(
    members: &[&OrbitSum],
    last: usize,
    acc: InvariantPolynomial,
    degree: u32,
    remaining: usize,
    d: u32,
    table: &mut ProductTable,
    limits: &InvariantLimits,
    out: &mut Vec<InvariantPolynomial>,
) -> Result<()> {
    if remaining == 0 {
        if degree == d {
            out.push(acc);
        }
        return Ok(());
    }
    for next in last..members.len() {
        let nd = degree + members[next].degree();
        // Members are sorted by degree; the remaining factors need at least
        // one degree each.
        if nd + (remaining as u32 - 1) > d {
            break;
        }
        let prod = table.multiply(&acc, &InvariantPolynomial::from_orbit_sum(members[next]), limits)?;
        extend_products(members, next, prod, nd, remaining - 1, d, table, limits, out)?;
    }
    Ok(())
}

fn to_row(p: &InvariantPolynomial, column: &HashMap<&CanonicalCode<u32>, usize>, dim: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); dim];
    for (c, q) in &p.terms {
        row[column[c]] = q.clone();
    }
    row
}

/// A witness that two weighted graphs lie in different orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub orbit_sum: OrbitSum,
    pub value1: Rational,
    pub value2: Rational,
}

/// Isolated-vertex orbit sums on `n` vertices, pre-expanded for repeated
/// evaluation.
#[derive(Clone, Debug)]
pub struct IsolatedFamily {
    n: usize,
    orbits: Vec<ExpandedOrbit>,
}

impl IsolatedFamily {
    pub fn new(n: usize, max_degree: u32, limits: &InvariantLimits) -> Result<Self> {
        let orbits = isolated_vertex_orbit_sums(n, max_degree)
            .par_iter()
            .map(|o| ExpandedOrbit::new(o, limits))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, orbits })
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit_sums(&self) -> impl Iterator<Item = &OrbitSum> {
        self.orbits.iter().map(ExpandedOrbit::orbit_sum)
    }

    /// All values at `w`, in family order.
    pub fn values(&self, w: &WeightedGraph) -> Result<Vec<Rational>> {
        if w.order() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: w.order() });
        }
        let s = ScaledWeights::new(w);
        self.orbits.iter().map(|o| o.eval_scaled(&s)).collect()
    }

    /// First member, in (degree, representative) order, on which `w1` and
    /// `w2` differ.
    pub fn separate(&self, w1: &WeightedGraph, w2: &WeightedGraph) -> Result<Option<Separation>> {
        for w in [w1, w2] {
            if w.order() != self.n {
                return Err(Error::SizeMismatch { expected: self.n, actual: w.order() });
            }
        }
        let (s1, s2) = (ScaledWeights::new(w1), ScaledWeights::new(w2));
        for o in &self.orbits {
            let (v1, v2) = (o.eval_scaled(&s1)?, o.eval_scaled(&s2)?);
            if v1 != v2 {
                return Ok(Some(Separation { orbit_sum: o.orbit_sum().clone(), value1: v1, value2: v2 }));
            }
        }
        Ok(None)
    }
}

/// Searches the isolated-vertex orbit sums up to `max_degree` for one that
/// takes different values on `w1` and `w2`.
pub fn separate_by_isolated(w1: &WeightedGraph, w2: &WeightedGraph, max_degree: u32) -> Result<Option<Separation>> {
    if w1.order() != w2.order() {
        return Err(Error::SizeMismatch { expected: w1.order(), actual: w2.order() });
    }
    IsolatedFamily::new(w1.order(), max_degree, &InvariantLimits::default())?.separate(w1, w2)
}
