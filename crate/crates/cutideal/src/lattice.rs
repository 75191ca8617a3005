//! The lcm lattice of a monomial ideal.
//!
//! Elements are the lcms of nonempty subsets of the minimal generators,
//! ordered by divisibility, together with an implicit bottom element 1.
//! The closure is computed by joining against the atoms until saturation.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// All joins of nonempty generator subsets, sorted by (degree, exponents).
/// The bottom element is implicit and never stored.
#[derive(Debug, Clone)]
pub struct LcmLattice {
    elements: Vec<Monomial>,
}

impl LcmLattice {
    /// Builds the lattice of `ideal`, aborting if it would exceed
    /// `max_elements` elements.
    pub fn build(ideal: &MonomialIdeal, max_elements: usize) -> Result<LcmLattice> {
        let atoms = ideal.gens();
        let mut seen: HashSet<Monomial> = atoms.iter().cloned().collect();
        let mut queue: Vec<Monomial> = atoms.to_vec();
        while let Some(x) = queue.pop() {
            for a in atoms {
                let j = x.lcm(a)?;
                if !seen.contains(&j) {
                    if seen.len() + 1 > max_elements {
                        return Err(Error::BudgetExceeded(format!(
                            "lcm lattice exceeds {max_elements} elements"
                        )));
                    }
                    seen.insert(j.clone());
                    queue.push(j);
                }
            }
        }
        let mut elements: Vec<Monomial> = seen.into_iter().collect();
        elements.sort();
        Ok(LcmLattice { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    /// Indices of the elements strictly below element `b`, in sorted order.
    /// The implicit bottom is excluded.
    pub fn open_interval_below(&self, b: usize) -> Vec<u32> {
        let top = &self.elements[b];
        (0..self.elements.len())
            .filter(|&i| i != b && self.elements[i].divides(top))
            .map(|i| i as u32)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::cut_ideal;
    use crate::graph::Graph;

    fn ideal(gens: &[&str], m: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            m,
            gens.iter().map(|s| Monomial::parse(s, m).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn koszul_pair_lattice() {
        let l = LcmLattice::build(&ideal(&["s1", "t1"], 1), 100).unwrap();
        // s1, t1, s1*t1
        assert_eq!(l.len(), 3);
        assert_eq!(l.open_interval_below(2).len(), 2);
        assert!(l.open_interval_below(0).is_empty());
    }

    #[test]
    fn triangle_lattice_shape() {
        let l = LcmLattice::build(&cut_ideal(&Graph::cycle(3).unwrap()), 100).unwrap();
        // 4 atoms, 6 pairwise lcms of degree 5, one top of degree 6
        assert_eq!(l.len(), 11);
        let degrees: Vec<u32> = l.elements().iter().map(|e| e.degree()).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 4);
        assert_eq!(degrees.iter().filter(|&&d| d == 5).count(), 6);
        assert_eq!(degrees.iter().filter(|&&d| d == 6).count(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let i = cut_ideal(&Graph::cycle(5).unwrap());
        assert!(matches!(
            LcmLattice::build(&i, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
