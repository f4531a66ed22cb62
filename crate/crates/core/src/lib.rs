//! Graph reconstruction toolkit: decks of simple, directed and weighted
//! graphs, exact canonical forms, exhaustive verification at small orders,
//! orbit-sum invariants of the symmetric group acting on edge variables, and
//! reconstruction of distinct-weight graphs from three cards.

pub mod canon;
pub mod deck;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod invariant;
pub mod io;
pub mod known;
pub mod linalg;
pub mod recognize;
pub mod weighted;

pub use canon::{are_isomorphic, automorphism_count, canonical_code, orbit_size, ArcPair, CanonicalCode, PairGraph};
pub use deck::{card, deck, decks_equal, Deck, DirectedDeck, SimpleDeck, WeightedDeck};
pub use enumerate::{enumerate_nonisomorphic, find_preimages, verify_reconstruction, Limits, VerificationReport};
pub use error::{Error, Result};
pub use graph::{apply_permutation, Digraph, LabeledGraph, Multigraph, Permutation, Rational, Relabel, WeightedGraph};
pub use invariant::{InvariantLimits, InvariantPolynomial, OrbitSum};
pub use recognize::DeckReport;
pub use weighted::{has_distinct_weights, reconstruct_from_three_cards, Genericity, GenericityCertificate};
