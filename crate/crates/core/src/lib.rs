//! Exact symbolic powers of edge ideals of finite simple graphs.
//!
//! The crate computes `I(G)^(t)` through minimal vertex covers, decides
//! membership in ordinary powers through optimal edge factorizations, and
//! checks the structure results and asymptotic invariants (least degree,
//! Waldschmidt constant, resurgence, symbolic defect) known for clique-sums of
//! two odd cycles and for complete graphs.

pub mod error;
pub mod graphs;
pub mod invariants;
pub mod monomials;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
pub use graphs::{
    build_family, cover_number, is_decomposable, minimal_vertex_covers, parallelize,
    parse_edge_list, rees_generators_01, BuiltFamily, CliqueSumSpec, CoverSet, Decomposition,
    FamilyId, FamilyKind, ParallelizationVector, ReesGenerator, SimpleGraph,
};
pub use monomials::{Monomial, MonomialIdeal};
pub use num_rational::Rational64 as Rational;
pub use symbolic::{
    dmin_clique_sum, vertex_weight, Budget, EdgeIdealContext, LdSplit, OptimalFactorization,
};
