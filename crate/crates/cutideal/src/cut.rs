//! Cut monomials and monomial cut ideals.
//!
//! For a vertex subset A the cut monomial u_A picks, per edge e_i, the
//! variable s_i when e_i crosses the bipartition (A, A^c) and t_i when it
//! does not. The cut ideal I(G) is generated by all u_A; since
//! u_A = u_{A^c}, enumeration ranges over the 2^(n-1) subsets avoiding a
//! pivot vertex (the highest label).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A vertex subset defining a cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutAssignment {
    vertices: BTreeSet<u32>,
}

impl CutAssignment {
    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        CutAssignment {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn vertices(&self) -> &BTreeSet<u32> {
        &self.vertices
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.contains(&v)
    }

    /// Canonical representative of the pair {A, A^c} in a graph with n
    /// vertices: the side not containing the pivot vertex n.
    pub fn canonicalize(&self, n: u32) -> CutAssignment {
        if self.contains(n) {
            CutAssignment::new((1..=n).filter(|v| !self.contains(*v)))
        } else {
            self.clone()
        }
    }
}

/// The cut monomial u_A of `a` with respect to `g`.
pub fn cut_monomial(g: &Graph, a: &CutAssignment) -> Result<Monomial> {
    if let Some(&v) = a.vertices().iter().find(|&&v| v < 1 || v > g.vertex_count()) {
        return Err(Error::InvalidSubset(v));
    }
    let mut exps = vec![0u8; 2 * g.edge_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let crosses = a.contains(u) != a.contains(v);
        exps[2 * i + if crosses { 0 } else { 1 }] = 1;
    }
    Ok(Monomial::from_exps(exps))
}

fn cut_monomial_of_mask(g: &Graph, mask: u64) -> Monomial {
    let mut exps = vec![0u8; 2 * g.edge_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let crosses = (mask >> (u - 1)) & 1 != (mask >> (v - 1)) & 1;
        exps[2 * i + if crosses { 0 } else { 1 }] = 1;
    }
    Monomial::from_exps(exps)
}

/// The monomial cut ideal I(G), minimally generated.
pub fn cut_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.vertex_count();
    assert!(n <= 32, "cut enumeration supports at most 32 vertices");
    // subsets of 1..n-1; the pivot vertex n is always on the complement side
    let gens: Vec<Monomial> = (0u64..1 << (n - 1))
        .map(|mask| cut_monomial_of_mask(g, mask))
        .collect();
    MonomialIdeal::new(g.edge_count(), gens).expect("cut enumeration is never empty")
}

/// The parity description of the generators of I(C_n): all monomials
/// s_I t_J with I and J partitioning the n edge labels and |J| = n mod 2.
pub fn cycle_generators_formula(n: u32) -> Result<MonomialIdeal> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let m = n as usize;
    let mut gens = Vec::new();
    for mask in 0u64..1 << m {
        // mask bit i set means edge i+1 contributes t_{i+1}
        if (mask.count_ones() % 2) != (n % 2) {
            continue;
        }
        let mut exps = vec![0u8; 2 * m];
        for i in 0..m {
            exps[2 * i + ((mask >> i) & 1) as usize] = 1;
        }
        gens.push(Monomial::from_exps(exps));
    }
    MonomialIdeal::new(m, gens)
}

/// Applies the substitution exchanging s_e and t_e to every generator.
pub fn swap_last_edge(ideal: &MonomialIdeal, edge: usize) -> Result<MonomialIdeal> {
    if edge < 1 || edge > ideal.edge_count() {
        return Err(Error::RingMismatch(edge, ideal.edge_count()));
    }
    let gens: Result<Vec<Monomial>> = ideal
        .gens()
        .iter()
        .map(|g| g.swap_edge_letters(edge))
        .collect();
    MonomialIdeal::new(ideal.edge_count(), gens?)
}

/// The two halves of the cycle decomposition, embedded in the 2n-slot
/// ring of C_n: I(C_{n-1}) * t_n and I'(C_{n-1}) * s_n.
pub fn cycle_split(n: u32) -> Result<(MonomialIdeal, MonomialIdeal)> {
    if n < 4 {
        return Err(Error::InvalidFamily(format!(
            "the cycle decomposition needs n >= 4, got {n}"
        )));
    }
    let m = n as usize;
    let smaller = cut_ideal(&Graph::cycle(n - 1)?);
    let swapped = swap_last_edge(&smaller, m - 1)?;
    let t_n = Monomial::variable(m, crate::monomial::Variable::new(m, crate::monomial::Letter::T));
    let s_n = Monomial::variable(m, crate::monomial::Variable::new(m, crate::monomial::Letter::S));
    let left = smaller.embed(m, 0)?.scale(&t_n)?;
    let right = swapped.embed(m, 0)?.scale(&s_n)?;
    Ok((left, right))
}

/// Checks I(C_n) = I(C_{n-1}) t_n + I'(C_{n-1}) s_n as an equality of
/// canonical generating sets.
pub fn smaller_cycle_identity(n: u32) -> Result<bool> {
    let (left, right) = cycle_split(n)?;
    let combined = left.sum(&right)?;
    Ok(combined == cut_ideal(&Graph::cycle(n)?))
}

/// The intersection L(C_n) = I(C_{n-1}) meet I'(C_{n-1}), an ideal of the
/// 2(n-1)-slot ring.
pub fn l_ideal(n: u32) -> Result<MonomialIdeal> {
    if n < 4 {
        return Err(Error::InvalidFamily(format!(
            "L(C_n) needs n >= 4, got {n}"
        )));
    }
    let smaller = cut_ideal(&Graph::cycle(n - 1)?);
    let swapped = swap_last_edge(&smaller, (n - 1) as usize)?;
    smaller.intersection(&swapped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexPairing;

    fn mono(text: &str, m: usize) -> Monomial {
        Monomial::parse(text, m).unwrap()
    }

    #[test]
    fn triangle_cut_monomials() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(
            cut_monomial(&c3, &CutAssignment::new([])).unwrap(),
            mono("t1*t2*t3", 3)
        );
        // A = {1}: edges {1,2} and {1,3} cross, edge {2,3} does not
        assert_eq!(
            cut_monomial(&c3, &CutAssignment::new([1])).unwrap(),
            mono("s1*t2*s3", 3)
        );
    }

    #[test]
    fn cut_monomial_complement_symmetry() {
        let g = Graph::new(5, vec![(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 4)]).unwrap();
        let a = CutAssignment::new([1, 3]);
        let ac = CutAssignment::new([2, 4, 5]);
        assert_eq!(cut_monomial(&g, &a).unwrap(), cut_monomial(&g, &ac).unwrap());
        assert_eq!(a.canonicalize(5), a);
        assert_eq!(ac.canonicalize(5), a);
    }

    #[test]
    fn unknown_vertex_is_rejected() {
        let c3 = Graph::cycle(3).unwrap();
        assert!(matches!(
            cut_monomial(&c3, &CutAssignment::new([7])),
            Err(Error::InvalidSubset(7))
        ));
    }

    #[test]
    fn generator_counts() {
        assert_eq!(cut_ideal(&Graph::cycle(3).unwrap()).mu(), 4);
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(cut_ideal(&k2).gens(), &[mono("s1", 1), mono("t1", 1)]);
        // K2 disjoint K3: n = 5, c = 2, so 2^3 generators
        let g = k2
            .clique_sum(&Graph::complete(3).unwrap(), &VertexPairing::disjoint())
            .unwrap();
        assert_eq!(cut_ideal(&g).mu(), 8);
    }

    #[test]
    fn cut_generators_are_squarefree_degree_m() {
        let g = Graph::cycle(5).unwrap();
        let ideal = cut_ideal(&g);
        for gen in ideal.gens() {
            assert!(gen.is_squarefree());
            assert_eq!(gen.degree() as usize, g.edge_count());
            for e in 1..=g.edge_count() {
                let s = gen.exps()[2 * (e - 1)];
                let t = gen.exps()[2 * (e - 1) + 1];
                assert_eq!(s + t, 1);
            }
        }
    }

    #[test]
    fn parity_formula_matches_enumeration() {
        for n in 3..=8 {
            let formula = cycle_generators_formula(n).unwrap();
            let direct = cut_ideal(&Graph::cycle(n).unwrap());
            assert_eq!(formula, direct, "parity description fails at n={n}");
            assert_eq!(formula.mu() as u64, 1 << (n - 1));
        }
    }

    #[test]
    fn triangle_parity_generators() {
        let i = cycle_generators_formula(3).unwrap();
        let expected = ["s1*s2*t3", "s1*t2*s3", "t1*s2*s3", "t1*t2*t3"];
        let got: Vec<String> = i.gens().iter().map(|g| g.to_string()).collect();
        let mut expected: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
        expected.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, expected);
    }

    #[test]
    fn swap_last_edge_behaviour() {
        let i = cut_ideal(&Graph::cycle(3).unwrap());
        let swapped = swap_last_edge(&i, 3).unwrap();
        assert_eq!(swapped.mu(), i.mu());
        assert_eq!(swap_last_edge(&swapped, 3).unwrap(), i);
        assert!(swapped.gens().contains(&mono("t1*t2*s3", 3)));
        assert!(swap_last_edge(&i, 9).is_err());
    }

    #[test]
    fn smaller_cycle_identity_small_cases() {
        for n in 4..=7 {
            assert!(smaller_cycle_identity(n).unwrap(), "identity fails at n={n}");
        }
        assert!(smaller_cycle_identity(3).is_err());
    }

    #[test]
    fn cycle_split_halves_have_equal_size() {
        let (left, right) = cycle_split(6).unwrap();
        assert_eq!(left.mu(), 1 << 4);
        assert_eq!(right.mu(), 1 << 4);
    }

    #[test]
    fn l_ideal_counts_and_degrees() {
        for n in 4..=6u32 {
            let l = l_ideal(n).unwrap();
            assert_eq!(l.mu() as u64, (n as u64 - 1) << (n - 2));
            for g in l.gens() {
                assert_eq!(g.degree(), n);
            }
        }
    }

    #[test]
    fn l_ideal_scaled_equals_split_intersection() {
        for n in 4..=6u32 {
            let m = n as usize;
            let (left, right) = cycle_split(n).unwrap();
            let st = mono(&format!("s{m}*t{m}"), m);
            let scaled = l_ideal(n).unwrap().embed(m, 0).unwrap().scale(&st).unwrap();
            assert_eq!(left.intersection(&right).unwrap(), scaled);
        }
    }

    #[test]
    fn clique_sum_factorization() {
        let k3 = Graph::complete(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        for pairing in [VertexPairing::disjoint(), VertexPairing::shared(2, 1)] {
            let g = k3.clique_sum(&c4, &pairing).unwrap();
            let m = g.edge_count();
            let left = cut_ideal(&k3).embed(m, 0).unwrap();
            let right = cut_ideal(&c4).embed(m, k3.edge_count()).unwrap();
            assert_eq!(cut_ideal(&g), left.product(&right).unwrap());
        }
    }
}
