use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Point, Rational};

/// An integer linear form `a·u + b·v + c·w`.
///
/// Values built through [`LinearForm::canonical`] or [`lf_canonicalize`] are
/// primitive (coefficient gcd 1) with a positive leading coefficient, which is
/// what makes [`super::FactoredForm`] equality structural. The derived
/// ordering is lexicographic in `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: [BigInt; 3],
}

/// A linear form split as `scalar · form` with `form` primitive and
/// canonically signed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledForm {
    /// Integer content including sign. `1` for the zero form.
    pub scalar: BigInt,
    /// Primitive canonical form.
    pub form: LinearForm,
}

impl ScaledForm {
    /// True when the original raw form was zero.
    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    /// Reassembles `scalar · form` as raw coefficients.
    pub fn raw(&self) -> [BigInt; 3] {
        self.form.coeffs.clone().map(|c| c * &self.scalar)
    }
}

/// Splits a raw coefficient triple into sign/content and a primitive
/// canonical form. Zero maps to the zero form with scalar `1`.
pub fn lf_canonicalize(raw: [BigInt; 3]) -> ScaledForm {
    let g = raw.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return ScaledForm {
            scalar: BigInt::from(1),
            form: LinearForm::zero(),
        };
    }
    let leading_negative = raw.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    let scalar = if leading_negative { -g } else { g };
    let coeffs = raw.map(|c| c / &scalar);
    ScaledForm {
        scalar,
        form: LinearForm { coeffs },
    }
}

impl LinearForm {
    /// The zero form.
    pub fn zero() -> Self {
        LinearForm {
            coeffs: [BigInt::zero(), BigInt::zero(), BigInt::zero()],
        }
    }

    /// Canonical primitive part of `a·u + b·v + c·w`, discarding the scalar.
    pub fn canonical(a: i64, b: i64, c: i64) -> Self {
        lf_canonicalize([a.into(), b.into(), c.into()]).form
    }

    /// `u`.
    pub fn u() -> Self {
        Self::canonical(1, 0, 0)
    }

    /// `v`.
    pub fn v() -> Self {
        Self::canonical(0, 1, 0)
    }

    /// `w`.
    pub fn w() -> Self {
        Self::canonical(0, 0, 1)
    }

    /// Whether every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Whether the form is primitive with a positive leading coefficient.
    pub fn is_canonical(&self) -> bool {
        !self.is_zero() && lf_canonicalize(self.coeffs.clone()).scalar == BigInt::from(1)
    }

    /// Coefficients `(a, b, c)`.
    pub fn coeffs(&self) -> &[BigInt; 3] {
        &self.coeffs
    }

    /// Exact value at a point.
    pub fn eval(&self, point: &Point) -> Rational {
        self.coeffs
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (c, x)| acc + x * c)
    }

    /// Reorders coefficients: the new coefficient at position `i` is the old
    /// coefficient at position `perm[i]`, then re-canonicalizes.
    pub fn permuted(&self, perm: [usize; 3]) -> ScaledForm {
        lf_canonicalize(perm.map(|i| self.coeffs[i].clone()))
    }
}

impl fmt::Display for LinearForm {
    /// `a*u+b*v+c*w`, with each sign folded into the separator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, var)) in self.coeffs.iter().zip(["u", "v", "w"]).enumerate() {
            match (i, c.sign()) {
                (0, _) => write!(f, "{c}*{var}")?,
                (_, num_bigint::Sign::Minus) => write!(f, "-{}*{var}", c.abs())?,
                _ => write!(f, "+{c}*{var}")?,
            }
        }
        Ok(())
    }
}
