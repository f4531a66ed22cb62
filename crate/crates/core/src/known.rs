//! Fixed small graphs with notable decks.

use crate::graph::{Digraph, LabeledGraph};

/// Two 4-vertex digraphs with equal decks that are not isomorphic: a cyclic
/// triangle `0 -> 2 -> 1 -> 0` plus a source, and the reverse cyclic
/// triangle `0 -> 1 -> 2 -> 0` plus a sink.
pub fn stockmeyer_pair() -> (Digraph, Digraph) {
    let source = Digraph::from_arcs(4, &[(1, 0), (0, 2), (2, 1), (3, 1), (3, 0), (3, 2)]).expect("valid arcs");
    let sink = Digraph::from_arcs(4, &[(2, 0), (0, 1), (1, 2), (1, 3), (0, 3), (2, 3)]).expect("valid arcs");
    (source, sink)
}

/// The 5-cycle `0 1 2 3 4` with chords `02` and `14`.
pub fn five_vertex_puzzle() -> LabeledGraph {
    LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)]).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, canonical_code, PairGraph};
    use crate::deck::{deck, decks_equal};

    #[test]
    fn directed_pair_shares_a_deck() {
        let (a, b) = stockmeyer_pair();
        assert!(decks_equal(&deck(&a).unwrap(), &deck(&b).unwrap()));
        assert!(!are_isomorphic(&a, &b));
        let d = deck(&a).unwrap();
        let cyclic = canonical_code(&Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
        let transitive = canonical_code(&Digraph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_eq!(d.cards().iter().filter(|c| **c == cyclic).count(), 1);
        assert_eq!(d.cards().iter().filter(|c| **c == transitive).count(), 3);
        assert_eq!(a.remove_vertex(3).unwrap().arc_count(), 3);
    }

    #[test]
    fn puzzle_degrees() {
        let mut d = five_vertex_puzzle().degrees();
        d.sort();
        assert_eq!(d, vec![2, 3, 3, 3, 3]);
    }
}
