//! The quotient ring `B^(k)[t] = Z[b, t] / J^(k)`.

mod basis;
mod rewrite;

pub use basis::{
    b_lambda, expand_in_b_basis, expand_in_eta_basis, expand_triangular, leading_monomial,
    monomial_partition, reduced_monomials, typed_partition_count, BasisExpansion, SolveOrder,
};
pub use rewrite::{eq_mod_ideal, normal_form, Redex, RewriteSystem};
