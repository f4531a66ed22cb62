//! Cards and decks.

use num::BigRational;

use crate::canon::{canonical_code, ArcPair, CanonicalCode, PairGraph};
use crate::error::{Error, Result};

/// The multiset of cards of an `n`-vertex graph, kept as a sorted list of
/// canonical codes on `n - 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Deck<E> {
    cards: Vec<CanonicalCode<E>>,
}

pub type SimpleDeck = Deck<bool>;
pub type DirectedDeck = Deck<ArcPair>;
pub type WeightedDeck = Deck<BigRational>;

impl<E: Ord> Deck<E> {
    /// Sorts `cards` into a deck. Fails unless there is at least one card and
    /// every card has one vertex fewer than the number of cards.
    pub fn from_cards(mut cards: Vec<CanonicalCode<E>>) -> Result<Self> {
        if cards.is_empty() {
            return Err(Error::MalformedDeck("a deck has at least one card".into()));
        }
        let n = cards.len();
        if let Some(bad) = cards.iter().find(|c| c.n() + 1 != n) {
            return Err(Error::MalformedDeck(format!(
                "{n} cards need {} vertices each, found a card on {}",
                n - 1,
                bad.n()
            )));
        }
        cards.sort();
        Ok(Self { cards })
    }

    /// Vertex count of the original graph (= number of cards).
    pub fn n(&self) -> usize {
        self.cards.len()
    }

    pub fn cards(&self) -> &[CanonicalCode<E>] {
        &self.cards
    }

    /// Distinct cards with their multiplicities, in sorted order.
    pub fn multiplicities(&self) -> Vec<(&CanonicalCode<E>, usize)> {
        let mut out: Vec<(&CanonicalCode<E>, usize)> = Vec::new();
        for c in &self.cards {
            match out.last_mut() {
                Some((last, k)) if *last == c => *k += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }

    pub fn contains(&self, card: &CanonicalCode<E>) -> bool {
        self.cards.binary_search(card).is_ok()
    }
}

/// Canonical code of `G - k`.
pub fn card<G: PairGraph>(g: &G, k: usize) -> Result<CanonicalCode<G::Entry>> {
    if k >= g.order() {
        return Err(Error::Argument(format!("vertex {k} out of range for {} vertices", g.order())));
    }
    Ok(canonical_code(&g.remove_vertex(k)?))
}

/// `𝒟(G)`: the sorted multiset of all `n` cards.
pub fn deck<G: PairGraph>(g: &G) -> Result<Deck<G::Entry>> {
    if g.order() == 0 {
        return Err(Error::Argument("the empty graph has no cards".into()));
    }
    let cards = (0..g.order()).map(|k| card(g, k)).collect::<Result<Vec<_>>>()?;
    Deck::from_cards(cards)
}

pub fn decks_equal<E: Ord>(a: &Deck<E>, b: &Deck<E>) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{LabeledGraph, Permutation, Relabel};

    fn example_graph() -> LabeledGraph {
        LabeledGraph::from_edges(4, &[(0, 2), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn card_of_hub_is_single_edge() {
        let single = LabeledGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(card(&example_graph(), 2).unwrap(), canonical_code(&single));
    }

    #[test]
    fn first_and_last_cards_agree() {
        let g = example_graph();
        assert_eq!(card(&g, 0).unwrap(), card(&g, 3).unwrap());
    }

    #[test]
    fn card_out_of_range() {
        assert!(matches!(card(&example_graph(), 4), Err(Error::Argument(_))));
    }

    #[test]
    fn complete_graph_cards() {
        for n in 2..=7 {
            let k = LabeledGraph::complete(n).unwrap();
            let smaller = canonical_code(&LabeledGraph::complete(n - 1).unwrap());
            for v in 0..n {
                assert_eq!(card(&k, v).unwrap(), smaller);
            }
        }
    }

    #[test]
    fn example_deck_edge_counts() {
        let d = deck(&example_graph()).unwrap();
        let mut counts: Vec<_> = d.cards().iter().map(|c| c.entries().iter().filter(|&&b| b).count()).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![1, 2, 2, 3]);
        assert_eq!(d.multiplicities().len(), 3);
    }

    #[test]
    fn two_vertex_graphs_share_a_deck() {
        let with_edge = LabeledGraph::complete(2).unwrap();
        let without = LabeledGraph::empty(2).unwrap();
        assert!(decks_equal(&deck(&with_edge).unwrap(), &deck(&without).unwrap()));
    }

    #[test]
    fn deck_is_label_independent() {
        let g = example_graph();
        let sigma = Permutation::new(vec![3, 1, 0, 2]).unwrap();
        assert!(decks_equal(&deck(&g).unwrap(), &deck(&g.relabel(&sigma).unwrap()).unwrap()));
    }

    #[test]
    fn malformed_decks_are_rejected() {
        let c3 = canonical_code(&LabeledGraph::empty(3).unwrap());
        let c2 = canonical_code(&LabeledGraph::empty(2).unwrap());
        assert!(matches!(Deck::from_cards(vec![c3.clone(), c3.clone()]), Err(Error::MalformedDeck(_))));
        assert!(matches!(Deck::from_cards(vec![c3.clone(), c3.clone(), c3.clone(), c2]), Err(Error::MalformedDeck(_))));
        assert!(Deck::<bool>::from_cards(vec![]).is_err());
        assert!(Deck::from_cards(vec![c3.clone(), c3.clone(), c3.clone(), c3]).is_ok());
    }

    #[test]
    fn empty_graph_has_no_deck() {
        assert!(deck(&LabeledGraph::empty(0).unwrap()).is_err());
    }
}
