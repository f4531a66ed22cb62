//! Reconstruction of a weighted graph with pairwise distinct weights from
//! three of its cards.

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::{canonical_code, for_each_permutation, CanonicalCode, PairGraph};
use crate::error::{Error, Result};
use crate::graph::{pair_at, pair_count, Rational, WeightedGraph};

/// Which coordinates must be pairwise distinct.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Genericity {
    /// All `C(n,2)` coordinates, zeros included; at most one edge may be absent.
    #[default]
    Strict,
    /// Only the weights of present edges.
    Relaxed,
}

type Pair = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityCertificate {
    pub distinct: bool,
    pub colliding_pair: Option<(Pair, Pair)>,
}

/// Finds the first two coordinates (in pair order) with equal values.
pub fn has_distinct_weights(w: &WeightedGraph, mode: Genericity) -> GenericityCertificate {
    let mut first_seen: BTreeMap<Rational, Pair> = BTreeMap::new();
    for idx in 0..pair_count(w.order()) {
        let (i, j) = pair_at(idx);
        let x = w.weight(i, j);
        if mode == Genericity::Relaxed && x == Rational::from_integer(0.into()) {
            continue;
        }
        if let Some(&p) = first_seen.get(&x) {
            return GenericityCertificate { distinct: false, colliding_pair: Some((p, (i, j))) };
        }
        first_seen.insert(x, (i, j));
    }
    GenericityCertificate { distinct: true, colliding_pair: None }
}

/// Largest number of vertex matchings tried before giving up.
const CANDIDATE_LIMIT: u64 = 2_000_000;

/// Rebuilds a graph on `n = card order + 1` vertices whose deck contains the
/// three given cards.
///
/// The first two cards, `G - a` and `G - b`, share every edge avoiding both
/// `a` and `b`, and weights identify those edges. Vertices are matched across
/// the two cards by their incident shared weights; the matching is forced
/// except among vertices with no shared edge and the two ends of an isolated
/// shared edge, and those ambiguities are enumerated. The edge `{a, b}` lies
/// in neither card and is the one weight of the third card not seen before.
/// Each candidate is accepted only if its deck contains all three cards.
pub fn reconstruct_from_three_cards(cards: &[WeightedGraph; 3], mode: Genericity) -> Result<WeightedGraph> {
    let m = cards[0].order();
    if cards.iter().any(|c| c.order() != m) {
        return Err(Error::InvalidCards("cards have different orders".into()));
    }
    if m < 2 {
        return Err(Error::Argument(format!("cards need at least 2 vertices, got {m}")));
    }
    for c in cards {
        let cert = has_distinct_weights(c, mode);
        if let Some((p, q)) = cert.colliding_pair {
            return Err(Error::Genericity(format!("pairs {p:?} and {q:?} carry the same weight")));
        }
    }
    let [c1, c2, c3] = cards;
    let w1: BTreeSet<&Rational> = c1.edges().map(|e| e.2).collect();
    let w2: BTreeSet<&Rational> = c2.edges().map(|e| e.2).collect();
    let shared: BTreeSet<&Rational> = w1.intersection(&w2).copied().collect();

    let ab: Vec<&Rational> = c3.edges().map(|e| e.2).filter(|x| !w1.contains(x) && !w2.contains(x)).collect();
    if ab.len() > 1 {
        return Err(Error::InvalidCards(format!("third card has {} unexplained weights", ab.len())));
    }
    let ab = ab.first().map(|x| (*x).clone());

    let plan = MatchPlan::new(c1, c2, &shared)?;
    let wanted: Vec<CanonicalCode<Rational>> = cards.iter().map(canonical_code).collect();

    let mut found = None;
    let mut tried = 0u64;
    plan.for_each(|psi, b| {
        tried += 1;
        if tried > CANDIDATE_LIMIT {
            return false;
        }
        let Some(h) = glue(c1, c2, psi, b, ab.as_ref()) else { return true };
        if mode == Genericity::Strict && !has_distinct_weights(&h, mode).distinct {
            return true;
        }
        if deck_contains(&h, &wanted) {
            found = Some(h);
            return false;
        }
        true
    });
    if tried > CANDIDATE_LIMIT {
        return Err(Error::ResourceGuard(format!("more than {CANDIDATE_LIMIT} vertex matchings")));
    }
    found.ok_or_else(|| Error::InvalidCards("no graph has all three cards in its deck".into()))
}

/// Forced and ambiguous parts of the vertex matching from the second card
/// into the first.
struct MatchPlan {
    m: usize,
    forced: Vec<(usize, usize)>,
    /// Ends of isolated shared edges: second-card pair, first-card pair.
    swaps: Vec<([usize; 2], [usize; 2])>,
    /// Vertices without shared edges in each card; `b` is among `loose1`,
    /// `a` among `loose2`.
    loose1: Vec<usize>,
    loose2: Vec<usize>,
}

impl MatchPlan {
    fn new(c1: &WeightedGraph, c2: &WeightedGraph, shared: &BTreeSet<&Rational>) -> Result<Self> {
        let m = c1.order();
        let groups = |c: &WeightedGraph| {
            let mut t: Vec<BTreeSet<&Rational>> = vec![BTreeSet::new(); m];
            for (i, j, x) in c.edges() {
                if let Some(&s) = shared.get(x) {
                    t[i].insert(s);
                    t[j].insert(s);
                }
            }
            let mut by_t: BTreeMap<BTreeSet<&Rational>, Vec<usize>> = BTreeMap::new();
            for (v, set) in t.into_iter().enumerate() {
                by_t.entry(set).or_default().push(v);
            }
            by_t
        };
        let (g1, g2) = (groups(c1), groups(c2));
        if g1.len() != g2.len() {
            return Err(Error::InvalidCards("shared edges do not match up".into()));
        }
        let mut plan = Self { m, forced: Vec::new(), swaps: Vec::new(), loose1: Vec::new(), loose2: Vec::new() };
        for ((t1, v1), (t2, v2)) in g1.into_iter().zip(g2) {
            if t1 != t2 || v1.len() != v2.len() {
                return Err(Error::InvalidCards("shared edges do not match up".into()));
            }
            match (t1.is_empty(), v1.len()) {
                (true, _) => {
                    plan.loose1 = v1;
                    plan.loose2 = v2;
                }
                (false, 1) => plan.forced.push((v2[0], v1[0])),
                (false, 2) => plan.swaps.push(([v2[0], v2[1]], [v1[0], v1[1]])),
                _ => return Err(Error::InvalidCards("weights repeat inside a card".into())),
            }
        }
        if plan.loose1.is_empty() {
            return Err(Error::InvalidCards("no vertex of the first card can be the second deleted vertex".into()));
        }
        Ok(plan)
    }

    /// Calls `f(psi, b)` for each matching, where `psi` maps second-card
    /// vertices to vertices of the glued graph (vertex `m` is `a`) and `b` is
    /// the first-card vertex deleted in the second card. Stops when `f`
    /// returns false.
    fn for_each(&self, mut f: impl FnMut(&[usize], usize) -> bool) {
        let k = self.loose1.len();
        let mut psi = vec![usize::MAX; self.m];
        for &(y, x) in &self.forced {
            psi[y] = x;
        }
        for mask in 0u64..1 << self.swaps.len() {
            for (s, (ys, xs)) in self.swaps.iter().enumerate() {
                let flip = (mask >> s & 1) as usize;
                psi[ys[0]] = xs[flip];
                psi[ys[1]] = xs[1 - flip];
            }
            for bi in 0..k {
                for ai in 0..k {
                    let rest1: Vec<usize> = (0..k).filter(|&i| i != bi).map(|i| self.loose1[i]).collect();
                    let rest2: Vec<usize> = (0..k).filter(|&i| i != ai).map(|i| self.loose2[i]).collect();
                    psi[self.loose2[ai]] = self.m;
                    let mut go = true;
                    for_each_permutation(k - 1, |p| {
                        if !go {
                            return;
                        }
                        for (idx, &y) in rest2.iter().enumerate() {
                            psi[y] = rest1[p[idx]];
                        }
                        go = f(&psi, self.loose1[bi]);
                    });
                    if !go {
                        return;
                    }
                }
            }
        }
    }
}

/// First card on vertices `0..m`, new vertex `m`, edges of the second card
/// carried over by `psi`, and the `{a, b}` edge. `None` when a shared weight
/// lands on a different pair.
fn glue(
    c1: &WeightedGraph,
    c2: &WeightedGraph,
    psi: &[usize],
    b: usize,
    ab: Option<&Rational>,
) -> Option<WeightedGraph> {
    let m = c1.order();
    let mut h = WeightedGraph::empty(m + 1);
    for (i, j, x) in c1.edges() {
        h.set_weight(i, j, x.clone()).ok()?;
    }
    for (i, j, x) in c2.edges() {
        let (u, v) = (psi[i], psi[j]);
        match h.weight_ref(u, v) {
            Some(y) if y == x => {}
            Some(_) => return None,
            None => h.set_weight(u, v, x.clone()).ok()?,
        }
    }
    if let Some(x) = ab {
        if h.weight_ref(b, m).is_some() {
            return None;
        }
        h.set_weight(b, m, x.clone()).ok()?;
    }
    Some(h)
}

/// Whether the multiset `wanted` is contained in the deck of `h`.
fn deck_contains(h: &WeightedGraph, wanted: &[CanonicalCode<Rational>]) -> bool {
    let mut deck: Vec<CanonicalCode<Rational>> =
        (0..h.order()).map(|k| canonical_code(&h.remove_vertex(k).expect("k < n"))).collect();
    for w in wanted {
        match deck.iter().position(|c| c == w) {
            Some(pos) => {
                deck.swap_remove(pos);
            }
            None => return false,
        }
    }
    true
}
