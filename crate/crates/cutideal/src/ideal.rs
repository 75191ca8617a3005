//! Monomial ideals with canonical minimal generating sets.
//!
//! Every ideal is stored minimalized: no generator divides another, no
//! duplicates, and the list is sorted by (degree, exponent vector). Two
//! ideals are equal exactly when their canonical forms coincide.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Candidate-count threshold above which pairwise expansions run in parallel.
const PAR_THRESHOLD: usize = 1 << 12;

/// A nonzero monomial ideal in the 2m-variable edge ring, held in canonical
/// minimal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    m: usize,
    gens: Vec<Monomial>,
}

/// Removes duplicates and every monomial strictly divisible by another.
///
/// Uses a support-bitmask prefilter: if supp(a) is not contained in supp(b)
/// then a cannot divide b, and for squarefree monomials the mask test alone
/// decides divisibility.
fn minimalize_vec(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let masks: Vec<u64> = gens.iter().map(Monomial::support_mask).collect();
    let squarefree: Vec<bool> = gens.iter().map(Monomial::is_squarefree).collect();
    let mut keep = vec![true; gens.len()];
    // gens are sorted by degree, so a strict divisor always sits earlier
    for j in 0..gens.len() {
        for i in 0..j {
            if !keep[i] || masks[i] & masks[j] != masks[i] {
                continue;
            }
            if (squarefree[i] && squarefree[j]) || gens[i].divides(&gens[j]) {
                keep[j] = false;
                break;
            }
        }
    }
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing the set.
    pub fn new(m: usize, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if g.edge_count() != m {
                return Err(Error::RingMismatch(g.edge_count(), m));
            }
        }
        Ok(MonomialIdeal {
            m,
            gens: minimalize_vec(gens),
        })
    }

    /// The unit ideal, generated by 1.
    pub fn unit(m: usize) -> Self {
        MonomialIdeal {
            m,
            gens: vec![Monomial::unit(m)],
        }
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Whether all generators share one degree; returns it if so.
    pub fn generation_degree(&self) -> Option<u32> {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// Ideal membership: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.m != other.m {
            return Err(Error::RingMismatch(self.m, other.m));
        }
        Ok(())
    }

    fn pairwise<F>(&self, other: &MonomialIdeal, op: F) -> Result<MonomialIdeal>
    where
        F: Fn(&Monomial, &Monomial) -> Result<Monomial> + Sync,
    {
        self.check_ambient(other)?;
        let n = self.gens.len() * other.gens.len();
        let products: Result<Vec<Monomial>> = if n >= PAR_THRESHOLD {
            self.gens
                .par_iter()
                .flat_map_iter(|a| other.gens.iter().map(move |b| (a, b)))
                .map(|(a, b)| op(a, b))
                .collect()
        } else {
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| (a, b)))
                .map(|(a, b)| op(a, b))
                .collect()
        };
        MonomialIdeal::new(self.m, products?)
    }

    /// Ideal product: minimalization of all pairwise monomial products.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.pairwise(other, |a, b| a.mul(b))
    }

    /// Ideal intersection, generated by the pairwise lcms of generators.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.pairwise(other, |a, b| a.lcm(b))
    }

    /// Colon ideal I : v, generated by the colons of the generators.
    pub fn colon(&self, v: &Monomial) -> Result<MonomialIdeal> {
        if v.edge_count() != self.m {
            return Err(Error::RingMismatch(v.edge_count(), self.m));
        }
        let colons: Result<Vec<Monomial>> = self.gens.iter().map(|g| g.colon(v)).collect();
        MonomialIdeal::new(self.m, colons?)
    }

    /// k-th power by iterated product, minimalizing after each step.
    pub fn power(&self, k: usize) -> Result<MonomialIdeal> {
        self.power_budgeted(k, usize::MAX)
    }

    /// Like [`MonomialIdeal::power`] but aborts once an intermediate
    /// pairwise expansion would exceed `max_candidates` monomials.
    pub fn power_budgeted(&self, k: usize, max_candidates: usize) -> Result<MonomialIdeal> {
        if k < 1 {
            return Err(Error::InvalidExponent(k));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            let candidates = acc.mu() * self.mu();
            if candidates > max_candidates {
                return Err(Error::BudgetExceeded(format!(
                    "power expansion needs {candidates} candidate monomials (budget {max_candidates})"
                )));
            }
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Ideal sum: union of the generating sets, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.m, gens)
    }

    /// Principal scaling I * v.
    pub fn scale(&self, v: &Monomial) -> Result<MonomialIdeal> {
        if v.edge_count() != self.m {
            return Err(Error::RingMismatch(v.edge_count(), self.m));
        }
        let gens: Result<Vec<Monomial>> = self.gens.iter().map(|g| g.mul(v)).collect();
        MonomialIdeal::new(self.m, gens?)
    }

    /// Re-embeds every generator into a ring with `new_m` edges, shifting
    /// edge indices by `shift`.
    pub fn embed(&self, new_m: usize, shift: usize) -> Result<MonomialIdeal> {
        let gens: Result<Vec<Monomial>> =
            self.gens.iter().map(|g| g.embed(new_m, shift)).collect();
        MonomialIdeal::new(new_m, gens?)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    m: usize,
    gens: Vec<String>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            m: self.m,
            gens: self.gens.iter().map(Monomial::to_string).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJson::deserialize(de)?;
        let gens: Result<Vec<Monomial>> = raw
            .gens
            .iter()
            .map(|s| Monomial::parse(s, raw.m))
            .collect();
        let gens = gens.map_err(serde::de::Error::custom)?;
        MonomialIdeal::new(raw.m, gens).map_err(serde::de::Error::custom)
    }
}
