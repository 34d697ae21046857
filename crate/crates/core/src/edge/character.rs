use num_bigint::BigInt;

use crate::arith::LaurentPoly;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `Q`, `Q̄` and `F` of a partition, as Laurent polynomials in `r, s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCharacter {
    /// `Q = Σ r^i s^j` over cells.
    pub q_poly: LaurentPoly,
    /// `Q̄ = Σ r^{-i} s^{-j}` over cells.
    pub qbar_poly: LaurentPoly,
    /// `F = -Q - Q̄/(rs) + Q Q̄ (1-r)(1-s)/(rs)`.
    pub f_poly: LaurentPoly,
}

impl EdgeCharacter {
    /// Builds all three polynomials; fails if `F` has a constant term.
    pub fn of(lambda: &Partition) -> Result<Self> {
        let q = gen_q(lambda);
        let qbar = q.invert_variables();
        let inv_rs = [-1, -1, 0];
        let f = q
            .neg()
            .sub(&qbar.shift(inv_rs))?
            .add(&q.mul(&qbar)?.mul(&one_minus_r_one_minus_s())?.shift(inv_rs))?;
        if !f.constant_term().eq(&BigInt::from(0)) {
            return Err(Error::ConstantTermPresent);
        }
        Ok(EdgeCharacter {
            q_poly: q,
            qbar_poly: qbar,
            f_poly: f,
        })
    }
}

fn one_minus_r_one_minus_s() -> LaurentPoly {
    LaurentPoly::one_minus_var(2, 0)
        .mul(&LaurentPoly::one_minus_var(2, 1))
        .expect("same axes")
}

/// `Q(λ) = Σ_{(i,j) ∈ λ} r^i s^j`.
pub fn gen_q(lambda: &Partition) -> LaurentPoly {
    LaurentPoly::from_terms(
        2,
        lambda.cells().map(|c| ([c.row as i64, c.col as i64, 0], 1)),
    )
}

/// `Q̄(λ) = Σ_{(i,j) ∈ λ} r^{-i} s^{-j}`.
pub fn gen_qbar(lambda: &Partition) -> LaurentPoly {
    gen_q(lambda).invert_variables()
}

/// The edge character `F(λ)`.
pub fn f_edge(lambda: &Partition) -> Result<LaurentPoly> {
    EdgeCharacter::of(lambda).map(|c| c.f_poly)
}

/// `C(λ) = Q(1-r)(1-s)`, multiplied out.
pub fn corner_poly(lambda: &Partition) -> LaurentPoly {
    gen_q(lambda)
        .mul(&one_minus_r_one_minus_s())
        .expect("same axes")
}

/// `1 + Σ_{k=1}^{m} r^{ρ_k+1} s^{γ_k+1} - Σ_{k=1}^{m+1} r^{ρ_k+1} s^{γ_{k-1}+1}`,
/// built from the corner labels. Zero for the empty partition.
pub fn corner_poly_closed(lambda: &Partition) -> LaurentPoly {
    let c = lambda.corner_data();
    let m = c.m();
    let mut poly = LaurentPoly::one(2);
    for k in 1..=m {
        poly.add_term([c.rho(k) + 1, c.gamma(k) + 1, 0], BigInt::from(1));
    }
    for k in 1..=m + 1 {
        poly.add_term([c.rho(k) + 1, c.gamma(k - 1) + 1, 0], BigInt::from(-1));
    }
    poly
}
