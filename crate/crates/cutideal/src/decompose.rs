//! Minimal primes of squarefree monomial ideals by minimal transversal
//! enumeration.
//!
//! A minimal prime of a squarefree monomial ideal is generated by an
//! inclusion-minimal set of variables meeting every generator's support.
//! Enumeration branches over the support of the first uncovered generator,
//! with a visited-state memo to prune repeated subtrees; candidates are
//! filtered to the inclusion-minimal antichain afterwards.

use std::collections::HashSet;

use crate::cut::cut_ideal;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPairing};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Variable};

/// A monomial prime ideal generated by variables, stored sorted by slot.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VariablePrime {
    m: usize,
    slots: Vec<u32>,
}

impl VariablePrime {
    fn from_mask(m: usize, mask: u64) -> Self {
        VariablePrime {
            m,
            slots: (0..2 * m as u32).filter(|&s| mask >> s & 1 == 1).collect(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn variables(&self) -> Vec<Variable> {
        self.slots
            .iter()
            .map(|&s| Variable::from_slot(s as usize))
            .collect()
    }

    /// The prime as a monomial ideal generated by its variables.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .slots
            .iter()
            .map(|&s| Monomial::variable(self.m, Variable::from_slot(s as usize)))
            .collect();
        MonomialIdeal::new(self.m, gens).expect("a prime has at least one variable")
    }

    /// Re-embeds into a larger ring with shifted edge labels.
    pub fn embed(&self, new_m: usize, shift: usize) -> VariablePrime {
        VariablePrime {
            m: new_m,
            slots: self.slots.iter().map(|&s| s + 2 * shift as u32).collect(),
        }
    }

    fn mask(&self) -> u64 {
        self.slots.iter().fold(0u64, |acc, &s| acc | 1 << s)
    }
}

impl std::fmt::Display for VariablePrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.variables().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn transversals(supports: &[u64]) -> Vec<u64> {
    let mut found: Vec<u64> = Vec::new();
    let mut visited: HashSet<(usize, u64)> = HashSet::new();

    fn recurse(
        supports: &[u64],
        k: usize,
        selection: u64,
        found: &mut Vec<u64>,
        visited: &mut HashSet<(usize, u64)>,
    ) {
        if !visited.insert((k, selection)) {
            return;
        }
        match supports[k..].iter().position(|&s| s & selection == 0) {
            None => found.push(selection),
            Some(offset) => {
                let support = supports[k + offset];
                let mut rest = support;
                while rest != 0 {
                    let slot = rest.trailing_zeros();
                    rest &= rest - 1;
                    recurse(
                        supports,
                        k + offset + 1,
                        selection | 1 << slot,
                        found,
                        visited,
                    );
                }
            }
        }
    }

    recurse(supports, 0, 0, &mut found, &mut visited);
    found.sort_unstable();
    found.dedup();

    // keep the inclusion-minimal antichain
    let mut by_size = found;
    by_size.sort_by_key(|m| m.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for cand in by_size {
        if !minimal.iter().any(|&m| m & cand == m) {
            minimal.push(cand);
        }
    }
    minimal
}

/// The minimal primes of a squarefree monomial ideal, canonically ordered
/// by size then lexicographically by slots.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    if !ideal.is_squarefree() {
        return Err(Error::Unsupported(
            "primary decomposition is only available for squarefree ideals".into(),
        ));
    }
    let m = ideal.edge_count();
    if 2 * m > 64 {
        return Err(Error::Unsupported(format!(
            "transversal enumeration supports at most 32 edges, got {m}"
        )));
    }
    if ideal.is_unit() {
        return Err(Error::Unsupported(
            "the unit ideal has no minimal primes".into(),
        ));
    }
    let supports: Vec<u64> = ideal.gens().iter().map(Monomial::support_mask).collect();
    let mut primes: Vec<VariablePrime> = transversals(&supports)
        .into_iter()
        .map(|mask| VariablePrime::from_mask(m, mask))
        .collect();
    primes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.slots.cmp(&b.slots)));
    Ok(primes)
}

/// Height of the ideal: the smallest minimal-prime cardinality.
pub fn height(primes: &[VariablePrime]) -> usize {
    primes.iter().map(VariablePrime::len).min().unwrap_or(0)
}

/// Verifies that the minimal primes of the glued graph's cut ideal are the
/// disjoint union of the factors' embedded prime sets and that the minimal
/// prime size agrees with the smallest factor height. `pairings[i]` glues
/// `graphs[i+1]` onto the accumulated sum.
pub fn dim_formula_check(graphs: &[Graph], pairings: &[VertexPairing]) -> Result<bool> {
    if graphs.is_empty() {
        return Err(Error::InvalidDecomposition("no graphs given".into()));
    }
    if pairings.len() + 1 != graphs.len() {
        return Err(Error::InvalidDecomposition(format!(
            "{} graphs need {} pairings, got {}",
            graphs.len(),
            graphs.len() - 1,
            pairings.len()
        )));
    }
    let mut glued = graphs[0].clone();
    for (g, pairing) in graphs[1..].iter().zip(pairings) {
        glued = glued
            .clique_sum(g, pairing)
            .map_err(|e| Error::InvalidDecomposition(e.to_string()))?;
    }
    let m = glued.edge_count();

    let combined = minimal_primes(&cut_ideal(&glued))?;

    let mut per_factor: Vec<Vec<VariablePrime>> = Vec::new();
    let mut shift = 0usize;
    let mut factor_heights = Vec::new();
    for g in graphs {
        let primes = minimal_primes(&cut_ideal(g))?;
        factor_heights.push(height(&primes));
        per_factor.push(primes.into_iter().map(|p| p.embed(m, shift)).collect());
        shift += g.edge_count();
    }

    // primes of different factors live on disjoint variable sets
    for (i, left) in per_factor.iter().enumerate() {
        for right in &per_factor[i + 1..] {
            for a in left {
                for b in right {
                    if a.mask() & b.mask() != 0 {
                        return Ok(false);
                    }
                }
            }
        }
    }

    let mut expected: Vec<VariablePrime> = per_factor.into_iter().flatten().collect();
    expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.slots.cmp(&b.slots)));

    // the union must stay an antichain under inclusion
    for (i, a) in expected.iter().enumerate() {
        for b in &expected[i + 1..] {
            let (ma, mb) = (a.mask(), b.mask());
            if ma & mb == ma || ma & mb == mb {
                return Ok(false);
            }
        }
    }

    let heights_agree =
        height(&combined) == factor_heights.iter().copied().min().unwrap_or(0);
    Ok(combined == expected && heights_agree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&str], m: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            m,
            gens.iter().map(|s| Monomial::parse(s, m).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn prime_of_the_edge_pair() {
        let primes = minimal_primes(&ideal(&["s1", "t1"], 1)).unwrap();
        assert_eq!(primes.len(), 1);
        assert_eq!(primes[0].to_string(), "(s1, t1)");
    }

    #[test]
    fn non_squarefree_is_rejected() {
        assert!(matches!(
            minimal_primes(&ideal(&["s1^2"], 1)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn primes_are_incomparable_transversals() {
        let i = cut_ideal(&Graph::cycle(3).unwrap());
        let primes = minimal_primes(&i).unwrap();
        for p in &primes {
            for g in i.gens() {
                assert!(g.support_mask() & p.mask() != 0);
            }
        }
        for (a, x) in primes.iter().enumerate() {
            for y in &primes[a + 1..] {
                let (mx, my) = (x.mask(), y.mask());
                assert!(mx & my != mx && mx & my != my);
            }
        }
    }

    #[test]
    fn primes_intersect_back_to_the_ideal() {
        for g in [Graph::cycle(3).unwrap(), Graph::path(4).unwrap()] {
            let i = cut_ideal(&g);
            let primes = minimal_primes(&i).unwrap();
            let mut meet = primes[0].to_ideal();
            for p in &primes[1..] {
                meet = meet.intersection(&p.to_ideal()).unwrap();
            }
            assert_eq!(meet, i);
        }
    }

    #[test]
    fn connected_graphs_have_height_two() {
        for g in [
            Graph::complete(2).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::path(5).unwrap(),
        ] {
            let primes = minimal_primes(&cut_ideal(&g)).unwrap();
            assert_eq!(height(&primes), 2);
        }
    }

    #[test]
    fn union_property_for_disjoint_factors() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert!(dim_formula_check(
            &[k2.clone(), k3.clone()],
            &[VertexPairing::disjoint()]
        )
        .unwrap());
        assert!(dim_formula_check(&[k2.clone(), k3], &[VertexPairing::shared(1, 1)]).unwrap());
        assert!(dim_formula_check(&[k2], &[]).unwrap());
    }

    #[test]
    fn bad_decomposition_inputs() {
        let k2 = Graph::complete(2).unwrap();
        assert!(matches!(
            dim_formula_check(&[], &[]),
            Err(Error::InvalidDecomposition(_))
        ));
        assert!(matches!(
            dim_formula_check(&[k2.clone(), k2], &[]),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
