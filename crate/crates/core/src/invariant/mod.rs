//! The polynomial ring in the edge variables `x_{ij}`, the `S_n` action on
//! it, and orbit sums.
//!
//! A monomial `Π x_{ij}^{m_ij}` is a [`Multigraph`]; its orbit sum is the sum
//! of the distinct monomials obtained by relabeling vertices. Orbit sums are a
//! basis of the invariant ring, so an invariant polynomial is stored as a
//! sparse map from canonical orbit representatives to rational coefficients.

mod algebra;
mod counting;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num::{BigInt, BigRational, Integer, One, ToPrimitive, Zero};

use crate::canon::{canonical_code, factorial, for_each_permutation, orbit_size, CanonicalCode, PairGraph};
use crate::error::{Error, Result};
use crate::graph::{pair_at, pair_count, pair_index, LabeledGraph, Multigraph, Rational, WeightedGraph};

pub use algebra::{
    all_orbit_sums, expand_product, invariant_space_dimension, isolated_vertex_orbit_sums, multigraph_classes,
    separate_by_isolated, simple_graph_orbit_sums, span_rank, IsolatedFamily, Separation, SpanRank,
};
pub use counting::{
    count_hamiltonian_cycles_backtracking, count_subgraphs, count_subgraphs_brute, count_subgraphs_orbit,
    hamiltonian_cycle_count,
};

/// Size guards for the invariant computations. Every field can be raised
/// by the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantLimits {
    /// Orbits are expanded freely up to this many vertices...
    pub max_orbit_n: usize,
    /// ...and beyond it only when the orbit has at most this many monomials.
    pub max_orbit_size: u128,
    /// Largest `n` for graded linear algebra.
    pub max_algebra_n: usize,
    /// Largest degree for graded linear algebra.
    pub max_algebra_degree: u32,
}

impl Default for InvariantLimits {
    fn default() -> Self {
        Self { max_orbit_n: 8, max_orbit_size: 1_000_000, max_algebra_n: 6, max_algebra_degree: 8 }
    }
}

impl InvariantLimits {
    pub fn unbounded() -> Self {
        Self {
            max_orbit_n: usize::MAX,
            max_orbit_size: u128::MAX,
            max_algebra_n: usize::MAX,
            max_algebra_degree: u32::MAX,
        }
    }

    pub(crate) fn check_orbit(&self, m: &Multigraph) -> Result<()> {
        if m.order() <= self.max_orbit_n {
            return Ok(());
        }
        let size = orbit_size(m);
        if size > self.max_orbit_size {
            return Err(Error::ResourceGuard(format!(
                "orbit of {size} monomials on {} vertices exceeds the guard",
                m.order()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_algebra(&self, n: usize, d: u32) -> Result<()> {
        if n > self.max_algebra_n || d > self.max_algebra_degree {
            return Err(Error::ResourceGuard(format!(
                "graded computation at n = {n}, degree {d} exceeds the guard (n <= {}, degree <= {})",
                self.max_algebra_n, self.max_algebra_degree
            )));
        }
        Ok(())
    }
}

/// `O_{S_n}(x^M)` identified by the canonical representative of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitSum {
    code: CanonicalCode<u32>,
    degree: u32,
}

impl OrbitSum {
    pub fn new(m: &Multigraph) -> Self {
        Self { code: canonical_code(m), degree: m.degree() }
    }

    pub(crate) fn from_code(code: CanonicalCode<u32>) -> Self {
        let degree = code.entries().iter().sum();
        Self { code, degree }
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn code(&self) -> &CanonicalCode<u32> {
        &self.code
    }

    /// The canonical (lex-minimal) monomial of the orbit.
    pub fn rep(&self) -> Multigraph {
        Multigraph::from_code(&self.code)
    }

    /// Number of distinct monomials in the orbit.
    pub fn len(&self) -> u128 {
        orbit_size(&self.rep())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rep().has_isolated_vertex()
    }
}

impl PartialOrd for OrbitSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then canonical representative.
impl Ord for OrbitSum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, &self.code).cmp(&(other.degree, &other.code))
    }
}

/// The monomial of a simple graph: multiplicity one on each edge.
pub fn monomial_of_graph(g: &LabeledGraph) -> Multigraph {
    Multigraph::from(g)
}

/// For each adjacent transposition `(t t+1)`, the induced permutation of
/// pair indices.
fn transposition_pair_maps(n: usize) -> Vec<Vec<usize>> {
    (0..n.saturating_sub(1))
        .map(|t| {
            let swap = |v: usize| match v {
                v if v == t => t + 1,
                v if v == t + 1 => t,
                v => v,
            };
            (0..pair_count(n))
                .map(|idx| {
                    let (i, j) = pair_at(idx);
                    let (a, b) = (swap(i), swap(j));
                    pair_index(a.min(b), a.max(b))
                })
                .collect()
        })
        .collect()
}

/// Distinct exponent vectors in the orbit of `m`, by breadth-first search
/// over adjacent transpositions.
fn orbit_exponents(m: &Multigraph) -> Vec<Vec<u32>> {
    let n = m.order();
    let maps = transposition_pair_maps(n);
    let start = m.exponents();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start];
    while let Some(cur) = queue.pop() {
        for map in &maps {
            let mut next = vec![0; cur.len()];
            for (idx, &e) in cur.iter().enumerate() {
                next[map[idx]] = e;
            }
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// All distinct images of `m` under `S_n`, sorted by exponent vector.
pub fn orbit_monomials(m: &Multigraph, limits: &InvariantLimits) -> Result<Vec<Multigraph>> {
    limits.check_orbit(m)?;
    orbit_exponents(m).into_iter().map(|e| Multigraph::from_exponents(m.order(), &e)).collect()
}

/// A weighted graph scaled to integers: `w_ij = ints[pair] / denom`.
/// Orbit sums are homogeneous, so a degree-`d` value is the integer value
/// divided by `denom^d`.
#[derive(Clone, Debug)]
pub struct ScaledWeights {
    n: usize,
    ints: Vec<BigInt>,
    small: Option<Vec<i64>>,
    denom: BigInt,
}

impl ScaledWeights {
    pub fn new(w: &WeightedGraph) -> Self {
        let n = w.order();
        let denom = w.edges().fold(BigInt::one(), |acc, (_, _, x)| acc.lcm(x.denom()));
        let mut ints = vec![BigInt::zero(); pair_count(n)];
        for (i, j, x) in w.edges() {
            ints[pair_index(i, j)] = x.numer() * (&denom / x.denom());
        }
        let small = ints.iter().map(ToPrimitive::to_i64).collect();
        Self { n, ints, small, denom }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn scale(&self, total: BigInt, degree: u32) -> Rational {
        BigRational::new(total, num::pow(self.denom.clone(), degree as usize))
    }
}

/// An orbit sum with its monomials listed, ready for repeated evaluation.
#[derive(Clone, Debug)]
pub struct ExpandedOrbit {
    sum: OrbitSum,
    /// Each monomial as `(pair index, exponent)` factors.
    monomials: Vec<Vec<(usize, u32)>>,
}

impl ExpandedOrbit {
    pub fn new(sum: &OrbitSum, limits: &InvariantLimits) -> Result<Self> {
        let rep = sum.rep();
        limits.check_orbit(&rep)?;
        let monomials = orbit_exponents(&rep)
            .into_iter()
            .map(|e| e.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, &m)| (i, m)).collect())
            .collect();
        Ok(Self { sum: sum.clone(), monomials })
    }

    pub fn orbit_sum(&self) -> &OrbitSum {
        &self.sum
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn eval(&self, w: &WeightedGraph) -> Result<Rational> {
        self.eval_scaled(&ScaledWeights::new(w))
    }

    /// Direct summation of every distinct monomial.
    pub fn eval_scaled(&self, w: &ScaledWeights) -> Result<Rational> {
        if w.n != self.sum.n() {
            return Err(Error::SizeMismatch { expected: self.sum.n(), actual: w.n });
        }
        let total = self.small_total(w).unwrap_or_else(|| self.big_total(w));
        Ok(w.scale(total, self.sum.degree()))
    }

    fn small_total(&self, w: &ScaledWeights) -> Option<BigInt> {
        let small = w.small.as_ref()?;
        let mut total: i128 = 0;
        for mono in &self.monomials {
            let mut term: i128 = 1;
            for &(idx, e) in mono {
                let x = small[idx] as i128;
                if x == 0 {
                    term = 0;
                    break;
                }
                term = term.checked_mul(x.checked_pow(e)?)?;
            }
            total = total.checked_add(term)?;
        }
        Some(BigInt::from(total))
    }

    fn big_total(&self, w: &ScaledWeights) -> BigInt {
        self.monomials
            .iter()
            .map(|mono| mono.iter().map(|&(idx, e)| num::pow(w.ints[idx].clone(), e as usize)).product::<BigInt>())
            .sum()
    }
}

/// Value of an orbit sum at a weighted graph, by direct summation over the
/// distinct monomials of the orbit.
pub fn orbit_sum_eval(o: &OrbitSum, w: &WeightedGraph) -> Result<Rational> {
    ExpandedOrbit::new(o, &InvariantLimits::default())?.eval(w)
}

/// Second evaluation route: sum the representative monomial over every
/// `σ ∈ S_n` and divide by the stabilizer size, counted in the same pass.
/// Each coset of the stabilizer contributes one orbit monomial
/// `|Stab|` times. Costs `n!` products; meant for cross-checking.
pub fn orbit_sum_eval_by_group(o: &OrbitSum, w: &WeightedGraph) -> Result<Rational> {
    let n = o.n();
    if w.order() != n {
        return Err(Error::SizeMismatch { expected: n, actual: w.order() });
    }
    if n > 9 {
        return Err(Error::ResourceGuard(format!("group summation over {n}! permutations")));
    }
    let rep = o.rep();
    let factors: Vec<(usize, usize, u32)> = rep.edges().collect();
    let mut total = Rational::zero();
    let mut stabilizer: u128 = 0;
    for_each_permutation(n, |sigma| {
        let mut term = Rational::one();
        let mut fixes = true;
        for &(i, j, m) in &factors {
            let (a, b) = (sigma[i], sigma[j]);
            term *= num::pow(w.weight(a, b), m as usize);
            fixes &= rep.multiplicity(a, b) == m;
        }
        total += term;
        if fixes {
            stabilizer += 1;
        }
    });
    debug_assert_eq!(factorial(n) % stabilizer, 0);
    Ok(total / Rational::from_integer(BigInt::from(stabilizer)))
}

/// Sparse element of the invariant ring in the orbit-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPolynomial {
    n: usize,
    terms: BTreeMap<CanonicalCode<u32>, Rational>,
}

impl InvariantPolynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// The constant 1 (orbit sum of the empty monomial).
    pub fn one(n: usize) -> Self {
        Self::from_orbit_sum(&OrbitSum::new(&Multigraph::empty(n)))
    }

    pub fn from_orbit_sum(o: &OrbitSum) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(o.code.clone(), Rational::one());
        Self { n: o.n(), terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (OrbitSum, &Rational)> {
        self.terms.iter().map(|(c, q)| (OrbitSum::from_code(c.clone()), q))
    }

    pub fn coefficient(&self, o: &OrbitSum) -> Rational {
        self.terms.get(&o.code).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · O(code)`, dropping the term if it cancels.
    pub fn add_term(&mut self, o: &OrbitSum, coeff: Rational) -> Result<()> {
        if o.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: o.n() });
        }
        self.add_code(o.code.clone(), coeff);
        Ok(())
    }

    pub(crate) fn add_code(&mut self, code: CanonicalCode<u32>, coeff: Rational) {
        let slot = self.terms.entry(code.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&code);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: other.n });
        }
        let mut out = self.clone();
        for (c, q) in &other.terms {
            out.add_code(c.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, terms: self.terms.iter().map(|(c, q)| (c.clone(), q * k)).collect() }
    }

    /// Degrees present among the terms.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|c| c.entries().iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn eval(&self, w: &WeightedGraph) -> Result<Rational> {
        if w.order() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: w.order() });
        }
        let scaled = ScaledWeights::new(w);
        let limits = InvariantLimits::default();
        let mut total = Rational::zero();
        for (o, q) in self.terms() {
            total += q * ExpandedOrbit::new(&o, &limits)?.eval_scaled(&scaled)?;
        }
        Ok(total)
    }
}
