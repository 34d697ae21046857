//! One-box ratio formulas: `A(k)` for the Jack-Plancherel weight and `B(k)`
//! for the edge weight, built literally from the corner labels of `λ`.

use alloc::vec::Vec;

use crate::arith::FactoredForm;
use crate::error::Result;
use crate::partitions::{CornerData, Partition};

/// Position of corner `k` relative to the removed corner `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RatioCase {
    /// `k < ℓ`
    Before,
    /// `k > ℓ`
    After,
    /// `k = ℓ`
    Removed,
}

/// One factor of a ratio product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioFactor {
    /// Corner index `1..=m`.
    pub k: usize,
    /// Which case of the formula produced it.
    pub case: RatioCase,
    /// The factor.
    pub value: FactoredForm,
}

/// Which printed form of `B(ℓ)` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BReading {
    /// The `k = ℓ` case exactly as stated with the proposition:
    /// `-uv / ((γ_ℓ-γ_{ℓ-1})v · ((ρ_ℓ-ρ_{ℓ+1}-1)u + v) · (ρ_ℓ u - (γ_ℓ-γ_m)v) ·
    /// ((ρ_ℓ-ρ_1-1)u - (γ_ℓ-1)v))`.
    Stated,
    /// The `k = ℓ` factors read off the swapped difference `swap(F(λ) - F(μ))`
    /// before it is split into cases: the last two linear forms are
    /// `(ρ_{m+1}-ρ_ℓ)u - (γ_m-γ_ℓ)v` and `(ρ_ℓ-ρ_1-1)u - (γ_ℓ-γ_0-1)v`.
    Expansion,
}

/// `(a·u + b·v)`.
type Uv = (i64, i64);

fn quotient(unit: i64, num: &[Uv], den: &[Uv]) -> Result<FactoredForm> {
    let mut out = FactoredForm::constant(crate::Rational::from_integer(unit.into()))?;
    for &(a, b) in num {
        out = out.mul(&FactoredForm::form(a, b, 0, 1)?);
    }
    for &(a, b) in den {
        out = out.mul(&FactoredForm::form(a, b, 0, -1)?);
    }
    Ok(out)
}

struct Labels<'a> {
    c: &'a CornerData,
    l: usize,
}

impl Labels<'_> {
    fn rho(&self, k: usize) -> i64 {
        self.c.rho(k)
    }
    fn gamma(&self, k: usize) -> i64 {
        self.c.gamma(k)
    }
    fn dr(&self, k: usize) -> i64 {
        self.rho(self.l) - self.rho(k)
    }
    fn dg(&self, k: usize) -> i64 {
        self.gamma(self.l) - self.gamma(k)
    }
}

fn case_of(k: usize, l: usize) -> RatioCase {
    match k.cmp(&l) {
        core::cmp::Ordering::Less => RatioCase::Before,
        core::cmp::Ordering::Greater => RatioCase::After,
        core::cmp::Ordering::Equal => RatioCase::Removed,
    }
}

fn labels(lambda: &Partition, l: usize) -> Result<(CornerData, usize)> {
    let c = lambda.corner_data();
    c.corner(l)?;
    Ok((c, l))
}

/// `A(ℓ)` exactly as given by the three-case formula, without the
/// short-circuit used when both the row and column products are empty.
pub fn a_removed_eq12(lambda: &Partition, l: usize) -> Result<FactoredForm> {
    let (c, l) = labels(lambda, l)?;
    let x = Labels { c: &c, l };
    let dr = x.rho(l) - x.rho(l + 1);
    let dg = x.gamma(l) - x.gamma(l - 1);
    quotient(1, &[(1, 0), (0, 1)], &[(dr, 0), (dr - 1, 1), (1, dg - 1), (0, dg)])
}

/// Factors `A(1), …, A(m)` of `w_Jack(λ) / w_Jack(μ)`, `μ = λ` minus corner `ℓ`.
pub fn ratio_a_factors(lambda: &Partition, l: usize) -> Result<Vec<RatioFactor>> {
    let (c, l) = labels(lambda, l)?;
    let x = Labels { c: &c, l };
    (1..=c.m())
        .map(|k| {
            let case = case_of(k, l);
            let value = match case {
                RatioCase::Before => quotient(
                    1,
                    &[(x.dr(k) - 1, -(x.dg(k) - 1)), (x.dr(k), -x.dg(k))],
                    &[(x.dr(k) - 1, -(x.dg(k - 1) - 1)), (x.dr(k), -x.dg(k - 1))],
                )?,
                RatioCase::After => quotient(
                    1,
                    &[(x.dr(k), -x.dg(k)), (x.dr(k) - 1, -(x.dg(k) - 1))],
                    &[(x.dr(k + 1), -x.dg(k)), (x.dr(k + 1) - 1, -(x.dg(k) - 1))],
                )?,
                RatioCase::Removed => {
                    let row_empty = x.rho(l + 1) == x.rho(l) - 1;
                    let col_empty = x.gamma(l - 1) == x.gamma(l) - 1;
                    if row_empty && col_empty {
                        quotient(1, &[], &[(1, 0), (0, 1)])?
                    } else {
                        a_removed_eq12(lambda, l)?
                    }
                }
            };
            Ok(RatioFactor { k, case, value })
        })
        .collect()
}

/// `∏_k A(k)`.
pub fn ratio_a(lambda: &Partition, l: usize) -> Result<FactoredForm> {
    Ok(ratio_a_factors(lambda, l)?.into_iter().map(|f| f.value).product())
}

/// Factors `B(1), …, B(m)` of `w_MNOP(λ) / w_MNOP(μ)` under the given
/// reading of `B(ℓ)`. The `k ≠ ℓ` cases share one expression.
pub fn ratio_b_factors_with(
    lambda: &Partition,
    l: usize,
    reading: BReading,
) -> Result<Vec<RatioFactor>> {
    let (c, l) = labels(lambda, l)?;
    let m = c.m();
    let x = Labels { c: &c, l };
    (1..=m)
        .map(|k| {
            let case = case_of(k, l);
            let value = match case {
                RatioCase::Before | RatioCase::After => quotient(
                    1,
                    &[(x.dr(k), -x.dg(k)), (x.dr(k) - 1, -(x.dg(k) - 1))],
                    &[(x.dr(k), -x.dg(k - 1)), (x.dr(k + 1) - 1, -(x.dg(k) - 1))],
                )?,
                RatioCase::Removed => {
                    let shared = [(0, x.dg(l - 1)), (x.dr(l + 1) - 1, 1)];
                    let tail = match reading {
                        BReading::Stated => {
                            [(x.rho(l), -x.dg(m)), (x.dr(1) - 1, -(x.gamma(l) - 1))]
                        }
                        BReading::Expansion => [
                            (x.rho(m + 1) - x.rho(l), -(x.gamma(m) - x.gamma(l))),
                            (x.dr(1) - 1, -(x.dg(0) - 1)),
                        ],
                    };
                    quotient(-1, &[(1, 0), (0, 1)], &[shared[0], shared[1], tail[0], tail[1]])?
                }
            };
            Ok(RatioFactor { k, case, value })
        })
        .collect()
}

/// `∏_k B(k)` under the given reading of `B(ℓ)`.
pub fn ratio_b_with(lambda: &Partition, l: usize, reading: BReading) -> Result<FactoredForm> {
    Ok(ratio_b_factors_with(lambda, l, reading)?
        .into_iter()
        .map(|f| f.value)
        .product())
}

/// Factors of `w_MNOP(λ) / w_MNOP(μ)`; `B(ℓ)` uses [`BReading::Expansion`].
pub fn ratio_b_factors(lambda: &Partition, l: usize) -> Result<Vec<RatioFactor>> {
    ratio_b_factors_with(lambda, l, BReading::Expansion)
}

/// `∏_k B(k)` with `B(ℓ)` read from the swapped difference.
pub fn ratio_b(lambda: &Partition, l: usize) -> Result<FactoredForm> {
    ratio_b_with(lambda, l, BReading::Expansion)
}
