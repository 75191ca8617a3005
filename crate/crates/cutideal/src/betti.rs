//! Graded Betti numbers of monomial ideals via lcm-lattice homology.
//!
//! For each lattice element b, the multigraded Betti number in homological
//! degree i equals the dimension of reduced homology in degree i-1 of the
//! order complex of the open interval between the bottom element and b,
//! computed over F_p. Summing over elements of equal total degree gives the
//! graded table. Atoms have an empty interval, which is exactly where the
//! reduced-homology convention for the empty complex places the generators.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{is_prime, order_complex_homology};
use crate::ideal::MonomialIdeal;
use crate::lattice::LcmLattice;

/// Resource limits for the oracle.
#[derive(Debug, Clone, Copy)]
pub struct BettiBudget {
    /// Maximum number of lcm-lattice elements.
    pub max_lattice_elements: usize,
    /// Maximum number of order-complex simplices per open interval.
    pub max_interval_simplices: u64,
}

impl Default for BettiBudget {
    fn default() -> Self {
        BettiBudget {
            max_lattice_elements: 20_000,
            max_interval_simplices: 10_000_000,
        }
    }
}

/// A finitely supported table of graded Betti numbers over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    p: u64,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn from_entries(p: u64, entries: BTreeMap<(u32, u32), u64>) -> Self {
        let entries = entries.into_iter().filter(|&(_, b)| b != 0).collect();
        BettiTable { p, entries }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn entries(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.entries
    }

    pub fn beta(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti number in homological degree i.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(bi, _), _)| bi == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Totals as a dense vector indexed by homological degree.
    pub fn totals(&self) -> Vec<u64> {
        match self.entries.keys().map(|&(i, _)| i).max() {
            Some(max_i) => (0..=max_i).map(|i| self.total(i)).collect(),
            None => Vec::new(),
        }
    }

    /// Projective dimension: the largest homological degree present.
    pub fn pd(&self) -> Result<u32> {
        self.entries
            .keys()
            .map(|&(i, _)| i)
            .max()
            .ok_or(Error::EmptyTable)
    }

    /// Castelnuovo-Mumford regularity: the largest j - i present.
    pub fn reg(&self) -> Result<u32> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .ok_or(Error::EmptyTable)
    }

    /// The generating polynomial of the table in (x, y) = (homological
    /// degree, internal degree), with generators at x^0.
    pub fn poincare(&self) -> BivariatePoly {
        BivariatePoly {
            coeffs: self.entries.clone(),
        }
    }
}

/// An exact polynomial in x and y with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl BivariatePoly {
    pub fn one() -> Self {
        BivariatePoly {
            coeffs: [((0, 0), 1)].into_iter().collect(),
        }
    }

    pub fn from_coeffs<I: IntoIterator<Item = ((u32, u32), u64)>>(coeffs: I) -> Self {
        BivariatePoly {
            coeffs: coeffs.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.coeffs
    }

    pub fn coeff(&self, x: u32, y: u32) -> u64 {
        self.coeffs.get(&(x, y)).copied().unwrap_or(0)
    }

    /// Ordinary convolution product.
    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut coeffs = BTreeMap::new();
        for (&(xa, ya), &ca) in &self.coeffs {
            for (&(xb, yb), &cb) in &other.coeffs {
                *coeffs.entry((xa + xb, ya + yb)).or_insert(0) += ca * cb;
            }
        }
        BivariatePoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> BivariatePoly {
        let mut acc = BivariatePoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl std::fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // highest homological degree first, matching hand-written tables
        for (k, (&(x, y), &c)) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c != 1 || (x == 0 && y == 0) {
                write!(f, "{c}")?;
            }
            match x {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{x}")?,
            }
            match y {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{y}")?,
            }
        }
        Ok(())
    }
}

/// Convolution product of two Poincare polynomials.
pub fn poly_mul(a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
    a.mul(b)
}

/// Graded Betti numbers of `ideal` over F_p with default budgets.
pub fn betti(ideal: &MonomialIdeal, p: u64) -> Result<BettiTable> {
    betti_with_budget(ideal, p, &BettiBudget::default())
}

/// Graded Betti numbers of `ideal` over F_p.
pub fn betti_with_budget(
    ideal: &MonomialIdeal,
    p: u64,
    budget: &BettiBudget,
) -> Result<BettiTable> {
    if !is_prime(p) {
        return Err(Error::InvalidField(p));
    }
    if ideal.is_unit() {
        return Ok(BettiTable::from_entries(p, [((0, 0), 1)].into_iter().collect()));
    }

    let lattice = LcmLattice::build(ideal, budget.max_lattice_elements)?;
    let elements = lattice.elements();

    let per_element: Result<Vec<(u32, Vec<u64>)>> = (0..elements.len())
        .into_par_iter()
        .map(|b| {
            let below = lattice.open_interval_below(b);
            let succ: Vec<Vec<u32>> = below
                .iter()
                .map(|&x| {
                    below
                        .iter()
                        .enumerate()
                        .filter(|&(_, &y)| {
                            x != y && elements[x as usize].divides(&elements[y as usize])
                        })
                        .map(|(yi, _)| yi as u32)
                        .collect()
                })
                .collect();
            let h = order_complex_homology(&succ, p, budget.max_interval_simplices)?;
            Ok((elements[b].degree(), h))
        })
        .collect();

    let mut entries: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for (j, h) in per_element? {
        for (i, &dim) in h.iter().enumerate() {
            if dim > 0 {
                *entries.entry((i as u32, j)).or_insert(0) += dim;
            }
        }
    }
    let table = BettiTable::from_entries(p, entries);

    // the degree-0 row must replay the generator degree distribution, and
    // the alternating sum of total Betti numbers of an ideal is 1
    let mut gen_degrees: BTreeMap<u32, u64> = BTreeMap::new();
    for g in ideal.gens() {
        *gen_degrees.entry(g.degree()).or_insert(0) += 1;
    }
    for (&j, &count) in &gen_degrees {
        if table.beta(0, j) != count {
            return Err(Error::Internal(format!(
                "beta_0,{j} = {} but the ideal has {count} generators of degree {j}",
                table.beta(0, j)
            )));
        }
    }
    if table.total(0) != ideal.mu() as u64 {
        return Err(Error::Internal("beta_0 does not match mu".into()));
    }
    let alternating: i64 = table
        .totals()
        .iter()
        .enumerate()
        .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    if alternating != 1 {
        return Err(Error::Internal(format!(
            "alternating Betti sum is {alternating}, expected 1"
        )));
    }
    Ok(table)
}

/// True when every nonzero entry sits on the line j = i + d; requires the
/// table's ideal to be generated in the single degree d.
pub fn linear_resolution_check(table: &BettiTable, d: u32) -> Result<bool> {
    let gen_degrees: Vec<u32> = table
        .entries()
        .keys()
        .filter(|&&(i, _)| i == 0)
        .map(|&(_, j)| j)
        .collect();
    if gen_degrees.len() > 1 {
        return Err(Error::NotEquigenerated);
    }
    Ok(table.entries().keys().all(|&(i, j)| j == i + d))
}

#[derive(Serialize, Deserialize)]
struct BettiEntryJson {
    i: u32,
    j: u32,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    p: u64,
    entries: Vec<BettiEntryJson>,
    pd: u32,
    reg: u32,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        BettiJson {
            p: self.p,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| BettiEntryJson { i, j, beta })
                .collect(),
            pd: self.pd().map_err(serde::ser::Error::custom)?,
            reg: self.reg().map_err(serde::ser::Error::custom)?,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = BettiJson::deserialize(de)?;
        let mut entries = BTreeMap::new();
        for e in raw.entries {
            entries.insert((e.i, e.j), e.beta);
        }
        Ok(BettiTable::from_entries(raw.p, entries))
    }
}
