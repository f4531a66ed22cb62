use serde::{Deserialize, Serialize};

use super::graph6::{code_to_graph6, parse_graph6};
use crate::canon::canonical_code;
use crate::deck::SimpleDeck;
use crate::enumerate::VerificationReport;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Rational, WeightedGraph};
use crate::invariant::{InvariantPolynomial, OrbitSum, Separation};

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = num.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let q: num::BigInt = den.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if q == 0.into() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

#[derive(Serialize, Deserialize)]
struct DeckJson {
    n: usize,
    cards: Vec<String>,
}

/// `{"n": N, "cards": [graph6, ...]}`; cards in canonical deck order.
pub fn deck_to_json(d: &SimpleDeck) -> Result<String> {
    let cards = d.cards().iter().map(code_to_graph6).collect::<Result<_>>()?;
    Ok(to_json(&DeckJson { n: d.n(), cards }))
}

/// Cards may be any labeling; they are canonicalized on the way in.
pub fn deck_from_json(text: &str) -> Result<SimpleDeck> {
    let raw: DeckJson = from_json(text)?;
    if raw.cards.len() != raw.n {
        return Err(Error::MalformedDeck(format!("n = {} but {} cards", raw.n, raw.cards.len())));
    }
    let cards = raw.cards.iter().map(|s| parse_graph6(s).map(|g| canonical_code(&g))).collect::<Result<_>>()?;
    SimpleDeck::from_cards(cards)
}

#[derive(Serialize)]
struct VerificationJson {
    n: usize,
    graph_count: usize,
    connected_count: usize,
    distinct_deck_count: usize,
    reconstructible: bool,
    collisions: Vec<[String; 2]>,
}

pub fn verification_to_json(r: &VerificationReport) -> Result<String> {
    let collisions =
        r.collisions.iter().map(|(a, b)| Ok([code_to_graph6(a)?, code_to_graph6(b)?])).collect::<Result<_>>()?;
    Ok(to_json(&VerificationJson {
        n: r.n,
        graph_count: r.graph_count,
        connected_count: r.connected_count,
        distinct_deck_count: r.distinct_deck_count,
        reconstructible: r.reconstructible(),
        collisions,
    }))
}

#[derive(Serialize, Deserialize)]
struct WeightedJson {
    n: usize,
    edges: Vec<(usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
struct WeightedCardJson {
    n_minus_1: usize,
    edges: Vec<(usize, usize, String)>,
}

fn weighted_edges(w: &WeightedGraph) -> Vec<(usize, usize, String)> {
    w.edges().map(|(i, j, x)| (i, j, format_rational(x))).collect()
}

fn build_weighted(n: usize, edges: &[(usize, usize, String)]) -> Result<WeightedGraph> {
    let triples = edges.iter().map(|(i, j, x)| Ok((*i, *j, parse_rational(x)?))).collect::<Result<Vec<_>>>()?;
    WeightedGraph::from_weights(n, triples).map_err(|e| Error::Parse(e.to_string()))
}

/// `{"n": N, "edges": [[i, j, "p/q"], ...]}`
pub fn weighted_to_json(w: &WeightedGraph) -> String {
    to_json(&WeightedJson { n: w.order(), edges: weighted_edges(w) })
}

pub fn weighted_from_json(text: &str) -> Result<WeightedGraph> {
    let raw: WeightedJson = from_json(text)?;
    build_weighted(raw.n, &raw.edges)
}

/// `{"n_minus_1": m, "edges": [[i, j, "p/q"], ...]}`
pub fn weighted_card_to_json(card: &WeightedGraph) -> String {
    to_json(&WeightedCardJson { n_minus_1: card.order(), edges: weighted_edges(card) })
}

/// A JSON array of exactly three weighted cards.
pub fn three_cards_from_json(text: &str) -> Result<[WeightedGraph; 3]> {
    let raw: Vec<WeightedCardJson> = from_json(text)?;
    let cards = raw.iter().map(|c| build_weighted(c.n_minus_1, &c.edges)).collect::<Result<Vec<_>>>()?;
    cards.try_into().map_err(|v: Vec<_>| Error::Parse(format!("expected 3 cards, got {}", v.len())))
}

pub fn three_cards_to_json(cards: &[WeightedGraph; 3]) -> String {
    let raw: Vec<WeightedCardJson> =
        cards.iter().map(|c| WeightedCardJson { n_minus_1: c.order(), edges: weighted_edges(c) }).collect();
    to_json(&raw)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    edges: Vec<(usize, usize, u32)>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    terms: Vec<TermJson>,
}

fn polynomial_value(p: &InvariantPolynomial) -> PolynomialJson {
    let terms =
        p.terms().map(|(o, q)| TermJson { edges: o.rep().edges().collect(), coeff: format_rational(q) }).collect();
    PolynomialJson { n: p.n(), terms }
}

/// `{"n": N, "terms": [{"edges": [[i, j, mult], ...], "coeff": "p/q"}, ...]}`;
/// each term's edges are the canonical representative of its orbit.
pub fn polynomial_to_json(p: &InvariantPolynomial) -> String {
    to_json(&polynomial_value(p))
}

/// Term monomials may be any member of their orbit.
pub fn polynomial_from_json(text: &str) -> Result<InvariantPolynomial> {
    let raw: PolynomialJson = from_json(text)?;
    let mut p = InvariantPolynomial::zero(raw.n);
    for t in &raw.terms {
        let m =
            Multigraph::from_multiplicities(raw.n, t.edges.iter().copied()).map_err(|e| Error::Parse(e.to_string()))?;
        p.add_term(&OrbitSum::new(&m), parse_rational(&t.coeff)?)?;
    }
    Ok(p)
}

#[derive(Serialize)]
struct SeparationJson {
    #[serde(flatten)]
    polynomial: PolynomialJson,
    degree: u32,
    values: [String; 2],
}

/// The separating orbit sum as a one-term polynomial, with its degree and
/// its two values.
pub fn separation_to_json(s: &Separation) -> String {
    to_json(&SeparationJson {
        polynomial: polynomial_value(&InvariantPolynomial::from_orbit_sum(&s.orbit_sum)),
        degree: s.orbit_sum.degree(),
        values: [format_rational(&s.value1), format_rational(&s.value2)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::deck;
    use crate::graph::LabeledGraph;

    #[test]
    fn deck_round_trip() {
        let g = LabeledGraph::from_edges(4, &[(0, 2), (1, 2), (2, 3), (0, 3)]).unwrap();
        let d = deck(&g).unwrap();
        let text = deck_to_json(&d).unwrap();
        assert_eq!(deck_from_json(&text).unwrap(), d);
        assert!(matches!(deck_from_json(r#"{"n": 3, "cards": ["A_"]}"#), Err(Error::MalformedDeck(_))));
        assert!(matches!(deck_from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("4").unwrap(), Rational::from_integer(4.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&Rational::new(6.into(), (-4).into())), "-3/2");
    }

    #[test]
    fn weighted_round_trip() {
        let w = WeightedGraph::from_weights(
            3,
            [(0, 1, parse_rational("1/2").unwrap()), (1, 2, parse_rational("-7").unwrap())],
        )
        .unwrap();
        assert_eq!(weighted_from_json(&weighted_to_json(&w)).unwrap(), w);
        let cards = [w.delete_vertex(0).unwrap(), w.delete_vertex(1).unwrap(), w.delete_vertex(2).unwrap()];
        assert_eq!(three_cards_from_json(&three_cards_to_json(&cards)).unwrap(), cards);
        assert!(three_cards_from_json("[]").is_err());
    }

    #[test]
    fn polynomial_round_trip() {
        let o = OrbitSum::new(&Multigraph::from_multiplicities(4, [(2, 3, 2), (1, 3, 1)]).unwrap());
        let p = InvariantPolynomial::from_orbit_sum(&o).scale(&parse_rational("5/3").unwrap());
        let text = polynomial_to_json(&p);
        assert_eq!(polynomial_from_json(&text).unwrap(), p);
    }
}
