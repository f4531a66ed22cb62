//! Exhaustive generation of isomorphism classes at small `n`, brute-force
//! verification of reconstructibility, and deck preimage search.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode, PairGraph};
use crate::deck::{deck, SimpleDeck};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::recognize::{card_edge_count, num_vertices};

/// Largest `n` enumerated without an explicit override.
pub const DEFAULT_MAX_N: usize = 8;
/// Largest `n` reachable with the override (about 275k classes).
pub const OVERRIDE_MAX_N: usize = 9;

/// Size guard for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_n: DEFAULT_MAX_N }
    }
}

impl Limits {
    pub fn with_override() -> Self {
        Self { max_n: OVERRIDE_MAX_N }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::ResourceGuard(format!("n = {n} exceeds the enumeration cap of {}", self.max_n)));
        }
        Ok(())
    }
}

/// Outcome of checking every class on `n` vertices for shared decks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub graph_count: usize,
    pub connected_count: usize,
    pub distinct_deck_count: usize,
    /// Pairs of non-isomorphic classes with equal decks.
    pub collisions: Vec<(CanonicalCode<bool>, CanonicalCode<bool>)>,
}

impl VerificationReport {
    pub fn reconstructible(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// One canonical code per isomorphism class on `n` vertices, sorted.
pub fn enumerate_nonisomorphic(n: usize, connected_only: bool) -> Result<Vec<CanonicalCode<bool>>> {
    enumerate_nonisomorphic_with(n, connected_only, Limits::default())
}

pub fn enumerate_nonisomorphic_with(
    n: usize,
    connected_only: bool,
    limits: Limits,
) -> Result<Vec<CanonicalCode<bool>>> {
    limits.check(n)?;
    let mut classes = vec![canonical_code(&LabeledGraph::empty(0)?)];
    for _ in 0..n {
        classes = extend_by_one_vertex(&classes);
    }
    if connected_only {
        classes.retain(|c| LabeledGraph::from_code(c).is_connected());
    }
    Ok(classes)
}

/// Adds a vertex with every possible neighbourhood to each class and keeps
/// one code per resulting class.
fn extend_by_one_vertex(classes: &[CanonicalCode<bool>]) -> Vec<CanonicalCode<bool>> {
    classes
        .par_iter()
        .fold(BTreeSet::new, |mut acc, code| {
            let base = LabeledGraph::from_code(code);
            let k = base.order();
            for mask in 0u64..1 << k {
                let mut g = base.clone();
                g.add_vertex(mask).expect("order stays within bounds");
                acc.insert(canonical_code(&g));
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        })
        .into_iter()
        .collect()
}

/// Checks that distinct classes on `n` vertices have distinct decks,
/// for `3 <= n <= limits.max_n`.
pub fn verify_reconstruction(n: usize) -> Result<VerificationReport> {
    verify_reconstruction_with(n, Limits::default())
}

pub fn verify_reconstruction_with(n: usize, limits: Limits) -> Result<VerificationReport> {
    if n < 3 {
        return Err(Error::Argument(format!("verification covers n >= 3, got {n}")));
    }
    collision_report(n, limits)
}

/// Same computation as [`verify_reconstruction_with`] without the `n >= 3`
/// gate, so the `n = 2` failure can be shown.
pub fn collision_report(n: usize, limits: Limits) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::Argument("graphs on 0 vertices have no deck".into()));
    }
    let classes = enumerate_nonisomorphic_with(n, false, limits)?;
    let mut keyed: Vec<(SimpleDeck, CanonicalCode<bool>, bool)> = classes
        .into_par_iter()
        .map(|code| {
            let g = LabeledGraph::from_code(&code);
            let d = deck(&g).expect("n >= 1");
            (d, code, g.is_connected())
        })
        .collect();
    keyed.sort();
    let graph_count = keyed.len();
    let connected_count = keyed.iter().filter(|k| k.2).count();
    let mut collisions = Vec::new();
    let mut distinct_deck_count = 0;
    let mut start = 0;
    while start < keyed.len() {
        let mut end = start + 1;
        while end < keyed.len() && keyed[end].0 == keyed[start].0 {
            end += 1;
        }
        distinct_deck_count += 1;
        for a in start..end {
            for b in a + 1..end {
                collisions.push((keyed[a].1.clone(), keyed[b].1.clone()));
            }
        }
        start = end;
    }
    Ok(VerificationReport { n, graph_count, connected_count, distinct_deck_count, collisions })
}

/// Every class whose deck is `d`. An empty result means the deck is not
/// legitimate.
pub fn find_preimages(d: &SimpleDeck) -> Result<Vec<CanonicalCode<bool>>> {
    find_preimages_with(d, Limits::default())
}

pub fn find_preimages_with(d: &SimpleDeck, limits: Limits) -> Result<Vec<CanonicalCode<bool>>> {
    let n = num_vertices(d)?;
    limits.check(n)?;
    let wanted_edges = if n >= 3 {
        let total: usize = d.cards().iter().map(card_edge_count).sum();
        if !total.is_multiple_of(n - 2) {
            return Ok(Vec::new());
        }
        Some(total / (n - 2))
    } else {
        None
    };
    let classes = enumerate_nonisomorphic_with(n, false, limits)?;
    Ok(classes
        .into_par_iter()
        .filter(|code| wanted_edges.is_none_or(|m| card_edge_count(code) == m))
        .filter(|code| deck(&LabeledGraph::from_code(code)).is_ok_and(|dk| dk == *d))
        .collect())
}

/// Cheap necessary conditions for a multiset of cards to be a deck: the
/// edge total is divisible by `n - 2`, every implied degree lies in
/// `0..=n-1`, and the implied degrees sum to twice the edge count.
pub fn legit_deck_necessary(d: &SimpleDeck) -> Result<bool> {
    let n = num_vertices(d)?;
    if n < 3 {
        return Err(Error::Argument(format!("legitimacy test needs n >= 3, got {n}")));
    }
    let counts: Vec<usize> = d.cards().iter().map(card_edge_count).collect();
    let total: usize = counts.iter().sum();
    if !total.is_multiple_of(n - 2) {
        return Ok(false);
    }
    let m = total / (n - 2);
    let mut degree_sum = 0;
    for &e in &counts {
        let Some(deg) = m.checked_sub(e) else { return Ok(false) };
        if deg > n - 1 {
            return Ok(false);
        }
        degree_sum += deg;
    }
    Ok(degree_sum == 2 * m)
}
