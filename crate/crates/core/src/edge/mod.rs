//! The equivariant edge measure and the Jack-Plancherel measure on
//! partitions, their one-box ratio formulas, and the sweeps that compare them.

mod character;
mod measures;
mod ratios;
mod swap;
mod verify;

pub use character::{corner_poly, corner_poly_closed, f_edge, gen_q, gen_qbar, EdgeCharacter};
pub use measures::{w_jack, w_mnop};
pub use ratios::{
    a_removed_eq12, ratio_a, ratio_a_factors, ratio_b, ratio_b_factors, ratio_b_factors_with,
    ratio_b_with, BReading,
    RatioCase, RatioFactor,
};
pub use swap::swap2;
pub(crate) use swap::swap_with;
pub use verify::{
    check_lemma1, check_ratios, check_signed_identity, check_theorem1, random_constant_free,
    verify_lemma1, verify_ratios, verify_signed_identity, verify_swap_quotient, verify_theorem1,
    RatioReports,
};
