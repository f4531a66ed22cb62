//! Subgraph counts as orbit-sum values at 0/1 points, with independent
//! combinatorial counters for cross-checking.

use num::ToPrimitive;

use super::{ExpandedOrbit, InvariantLimits, OrbitSum};
use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Multigraph};

/// Above this many edge subsets the brute-force cross-check is skipped.
const BRUTE_CHECK_LIMIT: u128 = 200_000;

fn padded_pattern(pattern: &LabeledGraph, host: &LabeledGraph) -> Result<LabeledGraph> {
    if pattern.order() > host.order() {
        return Err(Error::SizeMismatch { expected: host.order(), actual: pattern.order() });
    }
    pattern.padded(host.order())
}

/// Copies of `pattern` in `host`: the orbit sum of the (padded) pattern's
/// monomial evaluated at the host's 0/1 weights.
pub fn count_subgraphs_orbit(pattern: &LabeledGraph, host: &LabeledGraph) -> Result<u64> {
    let p = padded_pattern(pattern, host)?;
    let o = OrbitSum::new(&Multigraph::from(&p));
    let value = ExpandedOrbit::new(&o, &InvariantLimits::default())?.eval(&host.to_weighted())?;
    debug_assert!(value.is_integer());
    value.to_integer().to_u64().ok_or_else(|| Error::Argument("count does not fit in 64 bits".into()))
}

/// Copies of `pattern` in `host` by testing every edge subset of the right
/// size for isomorphism with the padded pattern.
pub fn count_subgraphs_brute(pattern: &LabeledGraph, host: &LabeledGraph) -> Result<u64> {
    let p = padded_pattern(pattern, host)?;
    let target = canonical_code(&p);
    let edges = host.edges();
    let k = p.edge_count();
    if k > edges.len() {
        return Ok(0);
    }
    let mut count = 0;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let chosen: Vec<(usize, usize)> = idx.iter().map(|&i| edges[i]).collect();
        if canonical_code(&LabeledGraph::from_edges(host.order(), &chosen)?) == target {
            count += 1;
        }
        // Next k-combination in lexicographic order.
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < edges.len() - k + i) else { break };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
    Ok(count)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Orbit-sum count, cross-checked by brute force whenever the number of
/// edge subsets is at most 200 000.
pub fn count_subgraphs(pattern: &LabeledGraph, host: &LabeledGraph) -> Result<u64> {
    let orbit = count_subgraphs_orbit(pattern, host)?;
    if binomial(host.edge_count(), pattern.edge_count()) <= BRUTE_CHECK_LIMIT {
        let brute = count_subgraphs_brute(pattern, host)?;
        if brute != orbit {
            return Err(Error::CountMismatch { orbit, brute });
        }
    }
    Ok(orbit)
}

/// Hamiltonian cycles by depth-first search from vertex 0; each cycle is
/// found once per direction.
pub fn count_hamiltonian_cycles_backtracking(host: &LabeledGraph) -> Result<u64> {
    let n = host.order();
    if n < 3 {
        return Err(Error::Argument(format!("Hamiltonian cycles need n >= 3, got {n}")));
    }
    fn walk(g: &LabeledGraph, v: usize, visited: u64, n: usize) -> u64 {
        if visited.count_ones() as usize == n {
            return u64::from(g.has_edge(v, 0));
        }
        let mut next = g.neighbors(v) & !visited;
        let mut total = 0;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            total += walk(g, u, visited | 1 << u, n);
        }
        total
    }
    Ok(walk(host, 0, 1, n) / 2)
}

/// Number of Hamiltonian cycles. Up to 8 vertices this is the orbit sum of
/// the `n`-cycle at the host, checked against backtracking; beyond that only
/// the backtracking counter runs.
pub fn hamiltonian_cycle_count(host: &LabeledGraph) -> Result<u64> {
    let n = host.order();
    let brute = count_hamiltonian_cycles_backtracking(host)?;
    if n > InvariantLimits::default().max_orbit_n {
        return Ok(brute);
    }
    let orbit = count_subgraphs_orbit(&LabeledGraph::cycle(n)?, host)?;
    if orbit != brute {
        return Err(Error::CountMismatch { orbit, brute });
    }
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(hamiltonian_cycle_count(&LabeledGraph::complete(4).unwrap()).unwrap(), 3);
        assert_eq!(hamiltonian_cycle_count(&LabeledGraph::complete(5).unwrap()).unwrap(), 12);
        assert_eq!(hamiltonian_cycle_count(&LabeledGraph::cycle(5).unwrap()).unwrap(), 1);
        assert_eq!(hamiltonian_cycle_count(&LabeledGraph::path(5).unwrap()).unwrap(), 0);
        assert_eq!(hamiltonian_cycle_count(&LabeledGraph::complete(9).unwrap()).unwrap(), 20160);
        assert!(hamiltonian_cycle_count(&LabeledGraph::complete(2).unwrap()).is_err());
    }

    #[test]
    fn pattern_padding() {
        let edge = LabeledGraph::from_edges(2, &[(0, 1)]).unwrap();
        let path = LabeledGraph::path(3).unwrap();
        assert_eq!(count_subgraphs(&edge, &path).unwrap(), 2);
        assert!(matches!(count_subgraphs(&path, &edge), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn triangles_in_k5() {
        let k3 = LabeledGraph::complete(3).unwrap();
        assert_eq!(count_subgraphs(&k3, &LabeledGraph::complete(5).unwrap()).unwrap(), 10);
        let p3 = LabeledGraph::path(3).unwrap();
        assert_eq!(count_subgraphs(&p3, &k3).unwrap(), 3);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(21, 10), 352716);
    }
}
