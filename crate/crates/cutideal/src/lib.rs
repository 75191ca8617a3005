//! Monomial cut ideals of finite simple graphs.
//!
//! For a graph G with edges e_1..e_m, each vertex subset A yields a
//! squarefree degree-m cut monomial u_A in K[s_1..s_m, t_1..t_m], picking
//! s_i when e_i crosses the bipartition (A, A^c) and t_i otherwise. The cut
//! ideal I(G) is generated by all u_A. This crate builds those ideals,
//! performs exact minimal-generator arithmetic on them (products,
//! intersections, colons, powers), computes graded Betti numbers through an
//! independent lcm-lattice homology oracle, and checks the structural
//! identities that hold across clique sums, along cycles, and for Freiman
//! ideals.
//!
//! The [`verify`] module packages every checked identity into a ledger of
//! pass/fail/adjudicated records, which the `cutscope` CLI exposes.

pub mod betti;
pub mod cut;
pub mod cycle;
pub mod decompose;
pub mod error;
pub mod freiman;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod lattice;
pub mod monomial;
pub mod verify;

pub use betti::{betti, betti_with_budget, poly_mul, BettiBudget, BettiTable, BivariatePoly};
pub use cut::{
    cut_ideal, cut_monomial, cycle_generators_formula, l_ideal, smaller_cycle_identity,
    swap_last_edge, CutAssignment,
};
pub use cycle::{
    betti_closed, betti_recursion, lambda_betti, quotient_colon_check, quotient_order, r_value,
    QuotientGenerator,
};
pub use decompose::{dim_formula_check, height, minimal_primes, VariablePrime};
pub use error::{Error, Result};
pub use freiman::{analytic_spread, classify_small, freiman_report, FreimanReport};
pub use graph::{Graph, VertexPairing};
pub use ideal::MonomialIdeal;
pub use monomial::{Letter, Monomial, Variable};
