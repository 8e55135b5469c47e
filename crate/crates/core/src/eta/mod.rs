//! Raising-operator construction of double eta polynomials.

mod construct;
mod identities;
mod raising;
mod star;

pub use construct::{
    double_eta, double_eta_hat, double_eta_hat_with, eta_via_divided_differences, eta_with_context,
    expand_raising, single_eta, top_class,
};
pub use identities::{composition_sum, elementary_sum, nonzero_count};
pub use raising::{expand_raising_parts, RaisingMonomial};
pub use star::{factors, star_apply, star_sum, Factor, HatRule, MiddleRow, StarContext};
