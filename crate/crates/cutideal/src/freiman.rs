//! Freiman testing of cut ideals.
//!
//! An equigenerated monomial ideal with analytic spread l satisfies
//! mu(I^2) >= l*mu(I) - C(l,2), and more generally
//! mu(I^k) >= C(l+k-2, k-1)*mu(I) - (k-1)*C(l+k-2, k); it is Freiman when
//! the first bound is attained, in which case every higher bound is too.
//! For a cut ideal the analytic spread is |E(G)| + 1, a cited closed
//! formula, so the test reduces to exact power expansion and counting.

use serde::Serialize;

use crate::cut::cut_ideal;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Analytic spread of I(G): the edge count plus one (cited formula).
pub fn analytic_spread(g: &Graph) -> u64 {
    g.edge_count() as u64 + 1
}

fn binomial(r: u64, k: u64) -> u64 {
    if k > r {
        return 0;
    }
    let k = k.min(r - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (r - i) / (i + 1);
    }
    acc
}

/// Lower bound for mu(I^k) in terms of spread and mu.
pub fn power_bound(spread: u64, mu: u64, k: u64) -> u64 {
    binomial(spread + k - 2, k - 1) * mu - (k - 1) * binomial(spread + k - 2, k)
}

/// One exact power measurement against its lower bound.
#[derive(Debug, Clone, Serialize)]
pub struct PowerRecord {
    pub k: u32,
    pub mu: u64,
    pub bound: u64,
}

/// Exact Freiman data for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct FreimanReport {
    pub vertices: u32,
    pub edges: Vec<(u32, u32)>,
    pub m: usize,
    /// Analytic spread, from the cited closed formula.
    pub spread: u64,
    pub mu: u64,
    pub mu_square: u64,
    /// spread * mu - C(spread, 2).
    pub bound: u64,
    /// mu_square - bound; zero exactly for Freiman ideals.
    pub defect: u64,
    pub is_freiman: bool,
    /// Records for k = 2..=max_power.
    pub powers: Vec<PowerRecord>,
}

/// Default cap on candidate monomials per power expansion step.
pub const DEFAULT_POWER_BUDGET: usize = 1_000_000;

/// Computes mu(I(G)^k) exactly for k up to `max_power` and compares each
/// value against its binomial lower bound.
pub fn freiman_report(g: &Graph, max_power: u32, budget: usize) -> Result<FreimanReport> {
    if max_power < 2 {
        return Err(Error::InvalidExponent(max_power as usize));
    }
    let ideal = cut_ideal(g);
    let mu = ideal.mu() as u64;
    let spread = analytic_spread(g);

    let mut powers = Vec::new();
    let mut acc = ideal.clone();
    for k in 2..=max_power {
        let candidates = acc.mu() * ideal.mu();
        if candidates > budget {
            return Err(Error::BudgetExceeded(format!(
                "power {k} needs {candidates} candidate monomials (budget {budget})"
            )));
        }
        acc = acc.product(&ideal)?;
        powers.push(PowerRecord {
            k,
            mu: acc.mu() as u64,
            bound: power_bound(spread, mu, k as u64),
        });
    }

    let mu_square = powers[0].mu;
    let bound = powers[0].bound;
    if mu_square < bound {
        return Err(Error::Internal(format!(
            "mu(I^2) = {mu_square} fell below the lower bound {bound}"
        )));
    }
    Ok(FreimanReport {
        vertices: g.vertex_count(),
        edges: g.edges().to_vec(),
        m: g.edge_count(),
        spread,
        mu,
        mu_square,
        bound,
        defect: mu_square - bound,
        is_freiman: mu_square == bound,
        powers,
    })
}

/// Enumerates all labeled graphs with 2..=max_vertices vertices, no
/// isolated vertices, and 1..=max_edges edges, reporting the Freiman flag
/// for each. No isomorphism reduction is attempted: labeled copies appear
/// as-is.
pub fn classify_small(
    max_vertices: u32,
    max_edges: usize,
    budget: usize,
) -> Result<Vec<(Graph, FreimanReport)>> {
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                pairs.push((u, v));
            }
        }
        for mask in 1u64..1 << pairs.len() {
            if (mask.count_ones() as usize) > max_edges {
                continue;
            }
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut covered = vec![false; n as usize + 1];
            for &(u, v) in &edges {
                covered[u as usize] = true;
                covered[v as usize] = true;
            }
            if !covered[1..].iter().all(|&c| c) {
                continue;
            }
            let g = Graph::new(n, edges)?;
            let report = freiman_report(&g, 2, budget)?;
            out.push((g, report));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexPairing;

    fn report(g: &Graph, max_power: u32) -> FreimanReport {
        freiman_report(g, max_power, DEFAULT_POWER_BUDGET).unwrap()
    }

    #[test]
    fn single_edge_is_freiman() {
        let r = report(&Graph::complete(2).unwrap(), 2);
        assert_eq!((r.mu, r.spread, r.mu_square, r.bound), (2, 2, 3, 3));
        assert_eq!(r.defect, 0);
        assert!(r.is_freiman);
    }

    #[test]
    fn two_edge_path_is_freiman() {
        let r = report(&Graph::path(3).unwrap(), 2);
        assert_eq!((r.mu, r.spread, r.mu_square, r.bound), (4, 3, 9, 9));
        assert!(r.is_freiman);
    }

    #[test]
    fn three_edge_path_misses_by_one() {
        let r = report(&Graph::path(4).unwrap(), 2);
        assert_eq!((r.mu, r.spread, r.mu_square, r.bound), (8, 4, 27, 26));
        assert_eq!(r.defect, 1);
        assert!(!r.is_freiman);
    }

    #[test]
    fn spreads() {
        assert_eq!(analytic_spread(&Graph::complete(2).unwrap()), 2);
        assert_eq!(analytic_spread(&Graph::cycle(4).unwrap()), 5);
        let k2k3 = Graph::complete(2)
            .unwrap()
            .clique_sum(&Graph::complete(3).unwrap(), &VertexPairing::disjoint())
            .unwrap();
        assert_eq!(analytic_spread(&k2k3), 5);
    }

    #[test]
    fn edge_pair_higher_powers_count_k_plus_one() {
        let r = report(&Graph::complete(2).unwrap(), 10);
        for rec in &r.powers {
            assert_eq!(rec.mu, rec.k as u64 + 1);
            assert_eq!(rec.bound, rec.mu);
        }
    }

    #[test]
    fn power_counts_never_decrease() {
        for g in [
            Graph::path(4).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::complete(3).unwrap(),
        ] {
            let r = report(&g, 4);
            let mut last = r.mu;
            for rec in &r.powers {
                assert!(rec.mu >= last);
                last = rec.mu;
            }
        }
    }

    #[test]
    fn matching_and_path_give_identical_reports() {
        let matching = Graph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        let path = Graph::path(3).unwrap();
        let a = report(&matching, 3);
        let b = report(&path, 3);
        assert_eq!(a.mu, b.mu);
        assert_eq!(a.mu_square, b.mu_square);
        assert_eq!(a.defect, b.defect);
    }

    #[test]
    fn budget_produces_resource_error() {
        let g = Graph::cycle(4).unwrap();
        assert!(matches!(
            freiman_report(&g, 3, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn classify_covers_only_spanning_graphs() {
        let all = classify_small(3, 3, DEFAULT_POWER_BUDGET).unwrap();
        // n=2: one graph; n=3: three paths and the triangle
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|(_, r)| r.is_freiman));
    }
}
