use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Div, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::linear::{lf_canonicalize, LinearForm, ScaledForm};
use super::{Point, Rational};
use crate::error::{Error, Result};

/// Overall sign of a factored value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// `+1`
    Plus,
    /// `-1`
    Minus,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn of(negative: bool) -> Self {
        if negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::of(self != rhs)
    }
}

/// `unit · content · ∏ formᵉ` with every form primitive and canonical and
/// every exponent nonzero. Equality is structural, which on this canonical
/// representation coincides with equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredForm {
    unit: Sign,
    content: Rational,
    factors: BTreeMap<LinearForm, i64>,
}

impl Default for FactoredForm {
    fn default() -> Self {
        Self::one()
    }
}

impl FactoredForm {
    /// The value `1`.
    pub fn one() -> Self {
        FactoredForm {
            unit: Sign::Plus,
            content: Rational::one(),
            factors: BTreeMap::new(),
        }
    }

    /// A nonzero rational constant.
    pub fn constant(value: Rational) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::ZeroFactor);
        }
        Ok(FactoredForm {
            unit: Sign::of(value.is_negative()),
            content: value.abs(),
            factors: BTreeMap::new(),
        })
    }

    /// `(a·u + b·v + c·w)^exp` for a raw (not necessarily canonical) form.
    pub fn power_of(raw: [BigInt; 3], exp: i64) -> Result<Self> {
        let scaled = lf_canonicalize(raw);
        Self::scaled_power(&scaled, exp)
    }

    /// Integer-coefficient shortcut for [`FactoredForm::power_of`].
    pub fn form(a: i64, b: i64, c: i64, exp: i64) -> Result<Self> {
        Self::power_of([a.into(), b.into(), c.into()], exp)
    }

    /// `(scalar · form)^exp`.
    pub fn scaled_power(scaled: &ScaledForm, exp: i64) -> Result<Self> {
        if scaled.is_zero() {
            return Err(Error::ZeroFactor);
        }
        let mut out = Self::constant(Rational::from_integer(scaled.scalar.clone()))?.pow(exp);
        if exp != 0 {
            out.factors.insert(scaled.form.clone(), exp);
        }
        Ok(out)
    }

    /// Overall sign.
    pub fn unit(&self) -> Sign {
        self.unit
    }

    /// Positive rational content.
    pub fn content(&self) -> &Rational {
        &self.content
    }

    /// Factors in lexicographic `(a, b, c)` order with their exponents.
    pub fn factors(&self) -> impl Iterator<Item = (&LinearForm, i64)> + '_ {
        self.factors.iter().map(|(f, e)| (f, *e))
    }

    /// Exponent of a canonical form, `0` when absent.
    pub fn exponent(&self, form: &LinearForm) -> i64 {
        self.factors.get(form).copied().unwrap_or(0)
    }

    /// Number of distinct forms.
    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Whether this is the value `1`.
    pub fn is_one(&self) -> bool {
        self.unit == Sign::Plus && self.content.is_one() && self.factors.is_empty()
    }

    fn accumulate(&mut self, form: &LinearForm, exp: i64) {
        if exp == 0 {
            return;
        }
        let e = self.factors.entry(form.clone()).or_insert(0);
        *e += exp;
        if *e == 0 {
            self.factors.remove(form);
        }
    }

    /// Product.
    pub fn mul(&self, other: &FactoredForm) -> FactoredForm {
        let mut out = self.clone();
        out.unit = self.unit * other.unit;
        out.content = &self.content * &other.content;
        for (f, e) in other.factors() {
            out.accumulate(f, e);
        }
        out
    }

    /// Formal quotient; exponents may go negative.
    pub fn div(&self, other: &FactoredForm) -> FactoredForm {
        self.mul(&other.recip())
    }

    /// Reciprocal.
    pub fn recip(&self) -> FactoredForm {
        self.pow(-1)
    }

    /// Integer power.
    pub fn pow(&self, k: i64) -> FactoredForm {
        if k == 0 {
            return Self::one();
        }
        let odd = k % 2 != 0;
        let magnitude = u32::try_from(k.unsigned_abs()).expect("exponent too large");
        let mut content = num_traits::pow(self.content.clone(), magnitude as usize);
        if k < 0 {
            content = content.recip();
        }
        FactoredForm {
            unit: if odd { self.unit } else { Sign::Plus },
            content,
            factors: self.factors.iter().map(|(f, e)| (f.clone(), e * k)).collect(),
        }
    }

    /// Flips the sign.
    pub fn negate(&self) -> FactoredForm {
        let mut out = self.clone();
        out.unit = -out.unit;
        out
    }

    /// Exact value at a point. Fails if a negative-exponent factor vanishes.
    pub fn eval(&self, point: &Point) -> Result<Rational> {
        let mut num = Rational::from_integer(self.unit.to_i64().into()) * &self.content;
        let mut den = Rational::one();
        for (form, e) in self.factors() {
            let x = form.eval(point);
            let p = num_traits::pow(x, e.unsigned_abs() as usize);
            if e > 0 {
                num *= p;
            } else {
                den *= p;
            }
        }
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(num / den)
    }

    /// Whether any factor (of either exponent sign) vanishes at the point.
    pub fn touches_zero_at(&self, point: &Point) -> bool {
        self.factors.keys().any(|f| f.eval(point).is_zero())
    }

    /// Applies a coefficient permutation to every form; see
    /// [`LinearForm::permuted`].
    pub fn permuted(&self, perm: [usize; 3]) -> FactoredForm {
        let mut out = FactoredForm {
            unit: self.unit,
            content: self.content.clone(),
            factors: BTreeMap::new(),
        };
        for (f, e) in self.factors() {
            let scaled = f.permuted(perm);
            let piece = Self::scaled_power(&scaled, e).expect("permutation of a nonzero form");
            out = out.mul(&piece);
        }
        out
    }

    /// Exchanges the roles of `u` and `v`.
    pub fn swap_uv(&self) -> FactoredForm {
        self.permuted([1, 0, 2])
    }
}

impl Mul for &FactoredForm {
    type Output = FactoredForm;
    fn mul(self, rhs: &FactoredForm) -> FactoredForm {
        FactoredForm::mul(self, rhs)
    }
}

impl Div for &FactoredForm {
    type Output = FactoredForm;
    fn div(self, rhs: &FactoredForm) -> FactoredForm {
        FactoredForm::div(self, rhs)
    }
}

impl Neg for &FactoredForm {
    type Output = FactoredForm;
    fn neg(self) -> FactoredForm {
        self.negate()
    }
}

impl core::iter::Product for FactoredForm {
    fn product<I: Iterator<Item = FactoredForm>>(iter: I) -> Self {
        iter.fold(FactoredForm::one(), |acc, x| acc.mul(&x))
    }
}

impl fmt::Display for FactoredForm {
    /// `unit * content * (a*u+b*v+c*w)^e * ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", self.unit.to_i64(), self.content)?;
        for (form, e) in self.factors() {
            write!(f, " * ({form})^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int_point;
    use alloc::string::ToString;

    fn u() -> FactoredForm {
        FactoredForm::form(1, 0, 0, 1).unwrap()
    }
    fn v() -> FactoredForm {
        FactoredForm::form(0, 1, 0, 1).unwrap()
    }
    fn inv_uv() -> FactoredForm {
        u().mul(&v()).recip()
    }

    #[test]
    fn self_quotient_is_one() {
        let x = FactoredForm::form(2, -3, 0, 5).unwrap().mul(&inv_uv());
        assert!(x.div(&x).is_one());
    }

    #[test]
    fn mul_and_pow() {
        let x = u().mul(&v().recip());
        assert_eq!(x.exponent(&LinearForm::u()), 1);
        assert_eq!(x.exponent(&LinearForm::v()), -1);
        let y = FactoredForm::form(1, 1, 0, 1).unwrap().pow(2);
        assert_eq!(y.exponent(&LinearForm::canonical(1, 1, 0)), 2);
        assert_eq!(y.num_factors(), 1);
    }

    #[test]
    fn content_and_sign_absorbed() {
        // (2u+2v) = 2(u+v); (-u) = -1·u
        let a = FactoredForm::form(2, 2, 0, 1).unwrap();
        let b = FactoredForm::form(1, 1, 0, 1).unwrap();
        assert_ne!(a, b);
        assert_eq!(a, b.mul(&FactoredForm::constant(Rational::from_integer(2.into())).unwrap()));
        let m = FactoredForm::form(-1, 0, 0, 1).unwrap();
        assert_eq!(m, u().negate());
        assert_eq!(FactoredForm::form(-1, 0, 0, 2).unwrap(), u().pow(2));
    }

    #[test]
    fn equality_and_negation() {
        assert_eq!(inv_uv(), inv_uv());
        assert_ne!(inv_uv(), inv_uv().negate());
        assert_eq!(inv_uv().negate().negate(), inv_uv());
    }

    #[test]
    fn evaluation() {
        let p = int_point(2, 3, 1);
        assert_eq!(inv_uv().eval(&p).unwrap(), Rational::new(1.into(), 6.into()));
        let pole = FactoredForm::form(1, -1, 0, -1).unwrap();
        assert_eq!(pole.eval(&int_point(1, 1, 0)), Err(Error::PoleAtPoint));
        // a vanishing numerator is fine
        let zero = FactoredForm::form(1, -1, 0, 1).unwrap();
        assert!(zero.eval(&int_point(1, 1, 0)).unwrap().is_zero());
    }

    #[test]
    fn zero_forms_are_rejected() {
        assert_eq!(FactoredForm::form(0, 0, 0, 1), Err(Error::ZeroFactor));
        assert_eq!(FactoredForm::constant(Rational::zero()), Err(Error::ZeroFactor));
    }

    #[test]
    fn swap_uv_recanonicalizes() {
        // u - 2v  ->  v - 2u = -(2u - v)
        let x = FactoredForm::form(1, -2, 0, 1).unwrap();
        assert_eq!(x.swap_uv(), FactoredForm::form(2, -1, 0, 1).unwrap().negate());
        assert_eq!(x.swap_uv().swap_uv(), x);
    }

    #[test]
    fn text_rendering() {
        let x = FactoredForm::form(-2, 0, 0, -1).unwrap().mul(&FactoredForm::form(1, -1, 0, 2).unwrap());
        assert_eq!(x.to_string(), "-1 * 1/2 * (1*u-1*v+0*w)^2 * (1*u+0*v+0*w)^-1");
        assert_eq!(FactoredForm::one().to_string(), "1 * 1");
    }
}
