//! Exact arithmetic in `Z[b, t]`: the polynomial type, the named families
//! `c^r_p`, `a^s_p`, `ĉ^r_p`, ..., the Weyl group action and divided
//! differences.

mod action;
mod families;
mod poly;

pub use action::{divide_by_linear, divided_difference, s0_generator, weyl_action};
pub use families::{
    a_s, b_s, btilde_s, c, c_hat, c_r, e_sym, f, f_s, ftilde, ftilde_s, h_sym, two_a_s, two_f, FVariant,
};
pub use poly::{Monomial, Polynomial, Var};
