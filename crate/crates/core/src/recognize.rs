//! Properties that can be read off a simple deck, and weak reconstruction
//! of Eulerian and regular graphs.

use serde::Serialize;

use crate::canon::{CanonicalCode, PairGraph};
use crate::deck::{deck, SimpleDeck};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// Everything recognizable about a deck in one bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeckReport {
    pub n: usize,
    pub edge_count: usize,
    /// Degree of the vertex deleted to form each card, in sorted card order.
    pub deleted_degrees: Vec<usize>,
    /// The same degrees, sorted.
    pub degree_multiset: Vec<usize>,
    pub is_regular: bool,
    pub regular_degree: Option<usize>,
    pub is_connected: bool,
    pub is_two_connected: bool,
    pub is_eulerian: bool,
}

pub(crate) fn card_edge_count(card: &CanonicalCode<bool>) -> usize {
    card.entries().iter().filter(|&&b| b).count()
}

fn require_three(d: &SimpleDeck) -> Result<usize> {
    let n = num_vertices(d)?;
    if n < 3 {
        return Err(Error::Argument(format!("deck recognition needs n >= 3, got n = {n}")));
    }
    Ok(n)
}

/// Number of vertices of any graph with this deck.
pub fn num_vertices(d: &SimpleDeck) -> Result<usize> {
    let n = d.n();
    if n == 0 {
        return Err(Error::MalformedDeck("empty deck".into()));
    }
    if let Some(c) = d.cards().iter().find(|c| c.n() + 1 != n) {
        return Err(Error::MalformedDeck(format!("card on {} vertices in a deck of {n}", c.n())));
    }
    Ok(n)
}

/// `|E| = Σ|E(card)| / (n - 2)`; every edge misses exactly two cards.
pub fn edge_count(d: &SimpleDeck) -> Result<usize> {
    let n = require_three(d)?;
    let total: usize = d.cards().iter().map(card_edge_count).sum();
    if !total.is_multiple_of(n - 2) {
        return Err(Error::IllegitimateDeck(format!("card edges sum to {total}, not a multiple of n - 2 = {}", n - 2)));
    }
    Ok(total / (n - 2))
}

/// `deg(v_k) = |E| - |E(G_k)|` for each card, in deck order.
pub fn deleted_vertex_degrees(d: &SimpleDeck) -> Result<Vec<usize>> {
    let m = edge_count(d)?;
    d.cards()
        .iter()
        .map(|c| {
            let e = card_edge_count(c);
            m.checked_sub(e)
                .ok_or_else(|| Error::IllegitimateDeck(format!("a card has {e} edges but the graph only {m}")))
        })
        .collect()
}

/// The common degree when the deck belongs to a regular graph.
pub fn is_regular_deck(d: &SimpleDeck) -> Result<Option<usize>> {
    let degrees = deleted_vertex_degrees(d)?;
    let first = degrees[0];
    Ok(degrees.iter().all(|&x| x == first).then_some(first))
}

/// At least two connected cards.
pub fn is_connected_deck(d: &SimpleDeck) -> Result<bool> {
    require_three(d)?;
    let connected = d.cards().iter().filter(|c| LabeledGraph::from_code(c).is_connected()).count();
    Ok(connected >= 2)
}

/// Every card connected (no cut vertex, given `n >= 3`).
pub fn is_two_connected_deck(d: &SimpleDeck) -> Result<bool> {
    require_three(d)?;
    Ok(d.cards().iter().all(|c| LabeledGraph::from_code(c).is_connected()))
}

/// Connected with every degree even.
pub fn is_eulerian_deck(d: &SimpleDeck) -> Result<bool> {
    let degrees = deleted_vertex_degrees(d)?;
    Ok(is_connected_deck(d)? && degrees.iter().all(|x| x % 2 == 0))
}

pub fn report(d: &SimpleDeck) -> Result<DeckReport> {
    let n = require_three(d)?;
    let deleted_degrees = deleted_vertex_degrees(d)?;
    let mut degree_multiset = deleted_degrees.clone();
    degree_multiset.sort_unstable();
    let regular_degree = is_regular_deck(d)?;
    Ok(DeckReport {
        n,
        edge_count: edge_count(d)?,
        deleted_degrees,
        degree_multiset,
        is_regular: regular_degree.is_some(),
        regular_degree,
        is_connected: is_connected_deck(d)?,
        is_two_connected: is_two_connected_deck(d)?,
        is_eulerian: is_eulerian_deck(d)?,
    })
}

fn extend_and_check(d: &SimpleDeck, card: &CanonicalCode<bool>, keep: impl Fn(usize) -> bool) -> Result<LabeledGraph> {
    let mut g = LabeledGraph::from_code(card);
    let mask = (0..g.order()).filter(|&v| keep(g.degree(v))).fold(0u64, |m, v| m | 1 << v);
    g.add_vertex(mask)?;
    if deck(&g)? != *d {
        return Err(Error::ReconstructionFailed(format!("rebuilt graph {g:?} does not reproduce the deck")));
    }
    Ok(g)
}

fn card_at(d: &SimpleDeck, index: usize) -> Result<&CanonicalCode<bool>> {
    d.cards().get(index).ok_or_else(|| Error::Argument(format!("card index {index} out of range for {} cards", d.n())))
}

/// Rebuilds an Eulerian graph from its deck using the first card.
pub fn reconstruct_eulerian(d: &SimpleDeck) -> Result<LabeledGraph> {
    reconstruct_eulerian_from(d, 0)
}

/// As [`reconstruct_eulerian`], starting from card `index` (sorted order):
/// the new vertex is joined to every odd-degree vertex of the card.
pub fn reconstruct_eulerian_from(d: &SimpleDeck, index: usize) -> Result<LabeledGraph> {
    if !is_eulerian_deck(d)? {
        return Err(Error::NotInClass("deck is not the deck of an Eulerian graph".into()));
    }
    extend_and_check(d, card_at(d, index)?, |deg| deg % 2 == 1)
}

/// Rebuilds an `r`-regular graph from its deck using the first card.
pub fn reconstruct_regular(d: &SimpleDeck) -> Result<LabeledGraph> {
    reconstruct_regular_from(d, 0)
}

/// The new vertex is joined to every card vertex of degree `r - 1`.
pub fn reconstruct_regular_from(d: &SimpleDeck, index: usize) -> Result<LabeledGraph> {
    let r = is_regular_deck(d)?.ok_or_else(|| Error::NotInClass("deck is not the deck of a regular graph".into()))?;
    extend_and_check(d, card_at(d, index)?, |deg| deg + 1 == r)
}
