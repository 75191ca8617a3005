//! Monomials in the edge-indexed polynomial ring K[s_1..s_m, t_1..t_m].
//!
//! Exponent vectors are stored in slot order s_1, t_1, s_2, t_2, ..., s_m, t_m,
//! so a ring with m edges has 2m slots. Exponents are small nonnegative
//! integers; cut monomials are squarefree but powers of ideals are not.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two letters of an edge variable pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    S,
    T,
}

/// A single variable s_e or t_e, with a 1-based edge index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variable {
    pub edge: usize,
    pub letter: Letter,
}

impl Variable {
    pub fn new(edge: usize, letter: Letter) -> Self {
        Variable { edge, letter }
    }

    /// Slot index of this variable in the exponent vector.
    pub fn slot(&self) -> usize {
        2 * (self.edge - 1)
            + match self.letter {
                Letter::S => 0,
                Letter::T => 1,
            }
    }

    /// Inverse of [`Variable::slot`].
    pub fn from_slot(slot: usize) -> Self {
        Variable {
            edge: slot / 2 + 1,
            letter: if slot % 2 == 0 { Letter::S } else { Letter::T },
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter {
            Letter::S => write!(f, "s{}", self.edge),
            Letter::T => write!(f, "t{}", self.edge),
        }
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.slot().cmp(&other.slot())
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial as an exponent vector over the 2m slots of an m-edge ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    /// The unit monomial 1 in an m-edge ring.
    pub fn unit(m: usize) -> Self {
        Monomial { exps: vec![0; 2 * m] }
    }

    /// A single variable as a monomial.
    pub fn variable(m: usize, var: Variable) -> Self {
        debug_assert!(var.edge >= 1 && var.edge <= m);
        let mut exps = vec![0; 2 * m];
        exps[var.slot()] = 1;
        Monomial { exps }
    }

    /// Builds a monomial from a raw exponent vector (length 2m).
    pub fn from_exps(exps: Vec<u8>) -> Self {
        assert!(exps.len() % 2 == 0, "exponent vector must have even length");
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    /// Number of edges of the ambient ring (half the slot count).
    pub fn edge_count(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn exp(&self, var: Variable) -> u8 {
        self.exps[var.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Support as a bitmask over slots. Only usable for rings with at most
    /// 32 edges, which covers every desk-scale input here.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Variables appearing in this monomial, in slot order.
    pub fn support(&self) -> Vec<Variable> {
        self.exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(slot, _)| Variable::from_slot(slot))
            .collect()
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::RingMismatch(self.edge_count(), other.edge_count()));
        }
        Ok(())
    }

    /// Whether `self` divides `other` slotwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Slotwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(Monomial { exps })
    }

    /// Slotwise sum of exponents.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    /// The monomial colon u : v = lcm(u, v) / v, i.e. slotwise max(a - b, 0).
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Ok(Monomial { exps })
    }

    /// Exchanges the s and t exponents of the given 1-based edge slot.
    pub fn swap_edge_letters(&self, edge: usize) -> Result<Monomial> {
        if edge < 1 || edge > self.edge_count() {
            return Err(Error::RingMismatch(edge, self.edge_count()));
        }
        let mut exps = self.exps.clone();
        exps.swap(2 * (edge - 1), 2 * (edge - 1) + 1);
        Ok(Monomial { exps })
    }

    /// Re-embeds into a ring with `new_m` edges, mapping edge i to
    /// edge i + shift.
    pub fn embed(&self, new_m: usize, shift: usize) -> Result<Monomial> {
        let m = self.edge_count();
        if m + shift > new_m {
            return Err(Error::RingMismatch(m + shift, new_m));
        }
        let mut exps = vec![0; 2 * new_m];
        exps[2 * shift..2 * shift + 2 * m].copy_from_slice(&self.exps);
        Ok(Monomial { exps })
    }

    /// Parses the text form produced by [`fmt::Display`], e.g. `s1*t2^3`
    /// or `1`, against an ambient ring with m edges.
    pub fn parse(text: &str, m: usize) -> Result<Monomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial::unit(m));
        }
        let mut exps = vec![0u8; 2 * m];
        for factor in text.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: u8 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                    (b, e)
                }
                None => (factor, 1),
            };
            let letter = match base.as_bytes().first() {
                Some(b's') => Letter::S,
                Some(b't') => Letter::T,
                _ => return Err(Error::Parse(format!("bad variable `{factor}`"))),
            };
            let edge: usize = base[1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge index in `{factor}`")))?;
            if edge < 1 || edge > m {
                return Err(Error::Parse(format!(
                    "edge index {edge} out of range for {m} edges"
                )));
            }
            let slot = Variable::new(edge, letter).slot();
            exps[slot] = exps[slot]
                .checked_add(exp)
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (slot, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", Variable::from_slot(slot))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical order: total degree first, ties by the exponent vector in
/// descending lexicographic order, so that s_1 precedes t_1 and the
/// variable words read in slot order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(text: &str, m: usize) -> Monomial {
        Monomial::parse(text, m).unwrap()
    }

    #[test]
    fn lcm_is_slotwise_max() {
        let a = mono("s1*t2", 2);
        let b = mono("s1*s2", 2);
        assert_eq!(a.lcm(&b).unwrap(), mono("s1*s2*t2", 2));
    }

    #[test]
    fn lcm_idempotent() {
        let u = mono("s1*t1^2*s3", 3);
        assert_eq!(u.lcm(&u).unwrap(), u);
    }

    #[test]
    fn lcm_disagreement_degree() {
        // lcm of two degree-3 monomials differing in two slots has degree 5
        let a = mono("t1*t2*t3", 3);
        let b = mono("s1*t2*s3", 3);
        let l = a.lcm(&b).unwrap();
        assert_eq!(l, mono("s1*t1*t2*s3*t3", 3));
        assert_eq!(l.degree(), 5);
    }

    #[test]
    fn colon_examples() {
        let u = mono("s1*t1", 1);
        assert_eq!(u.colon(&u).unwrap(), Monomial::unit(1));
        let a = mono("s1*s2", 2);
        let b = mono("t1", 2);
        assert_eq!(a.colon(&b).unwrap(), a);
    }

    #[test]
    fn mul_and_overflow() {
        let a = mono("s1", 1);
        let b = mono("t1", 1);
        assert_eq!(a.mul(&b).unwrap(), mono("s1*t1", 1));
        let big = Monomial::from_exps(vec![255, 0]);
        assert!(matches!(big.mul(&a), Err(Error::ExponentOverflow)));
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let a = mono("s1", 1);
        let b = mono("s1", 2);
        assert!(matches!(a.lcm(&b), Err(Error::RingMismatch(1, 2))));
    }

    #[test]
    fn swap_is_involution() {
        let u = mono("s1*t2*s3", 3);
        let swapped = u.swap_edge_letters(3).unwrap();
        assert_eq!(swapped, mono("s1*t2*t3", 3));
        assert_eq!(swapped.swap_edge_letters(3).unwrap(), u);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for text in ["1", "s1", "t1^2", "s1*t1*t2", "s1^3*s2*t2^2"] {
            let u = mono(text, 2);
            assert_eq!(u.to_string(), text);
            assert_eq!(Monomial::parse(&u.to_string(), 2).unwrap(), u);
        }
    }

    #[test]
    fn canonical_order_degree_then_lex() {
        let mut v = vec![mono("t1*t2", 2), mono("s1", 2), mono("s1*s2", 2)];
        v.sort();
        assert_eq!(v[0], mono("s1", 2));
        assert_eq!(v[1], mono("s1*s2", 2));
        assert_eq!(v[2], mono("t1*t2", 2));
    }

    #[test]
    fn embed_shifts_edges() {
        let u = mono("s1*t2", 2);
        assert_eq!(u.embed(4, 2).unwrap(), mono("s3*t4", 4));
    }
}
