use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Power series in `q` truncated after `q^order`, with exact rational
/// coefficients. Binary operations on series of different orders truncate to
/// the smaller order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// From coefficients of `q^0 .. q^order`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least q^0");
        PowerSeries { coeffs }
    }

    /// From integer coefficients.
    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant `1`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients of `q^0 ..= q^N`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Drops coefficients past `order`.
    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// Sum.
    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        PowerSeries::new((0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Substitutes `q -> c·q`.
    pub fn scale_variable(&self, c: &Rational) -> PowerSeries {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x * &factor);
            factor *= c;
        }
        PowerSeries::new(out)
    }

    /// Truncated product.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries::new(out)
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<PowerSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::BadConstantTerm("recip"));
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let s = (1..=n).fold(Rational::zero(), |s, k| s + &self.coeffs[k] * &out[n - k]);
            out.push(-s * &inv0);
        }
        Ok(PowerSeries::new(out))
    }

    /// Formal derivative, one order lower (order 0 stays at the zero series).
    fn derivative(&self) -> PowerSeries {
        if self.order() == 0 {
            return PowerSeries::zero(0);
        }
        PowerSeries::new(
            (1..=self.order())
                .map(|n| &self.coeffs[n] * Rational::from_integer(BigInt::from(n)))
                .collect(),
        )
    }

    /// Logarithm; needs constant term `1`.
    pub fn log(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("log"));
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        if n > 0 {
            let quotient = self.derivative().mul(&self.truncate(n - 1).recip()?);
            for k in 1..=n {
                out[k] = &quotient.coeffs[k - 1] / Rational::from_integer(BigInt::from(k));
            }
        }
        Ok(PowerSeries::new(out))
    }

    /// Exponential; needs constant term `0`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("exp"));
        }
        // n·b_n = Σ_{k=1..n} k·a_k·b_{n-k}
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(Rational::one());
        for n in 1..=self.order() {
            let s = (1..=n).fold(Rational::zero(), |s, k| {
                s + &self.coeffs[k] * &out[n - k] * Rational::from_integer(BigInt::from(k))
            });
            out.push(s / Rational::from_integer(BigInt::from(n)));
        }
        Ok(PowerSeries::new(out))
    }

    /// `self^alpha` as `exp(alpha · log self)`; needs constant term `1`.
    pub fn pow(&self, alpha: &Rational) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("pow"));
        }
        self.log()?.scale(alpha).exp()
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{n}")?,
            }
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// MacMahon's function `∏_{i≥1} (1 - q^i)^{-i}` through `q^order`.
pub fn macmahon_series(order: usize) -> PowerSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    for i in 1..=order {
        // i-fold multiplication by 1/(1 - q^i), each a running sum with stride i
        for _ in 0..i {
            for n in i..=order {
                let prev = coeffs[n - i].clone();
                coeffs[n] += prev;
            }
        }
    }
    PowerSeries::new(coeffs.into_iter().map(Rational::from_integer).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn square_of_binomial() {
        let a = PowerSeries::from_integers([1, 1, 0, 0]);
        assert_eq!(a.pow(&int(2)).unwrap(), PowerSeries::from_integers([1, 2, 1, 0]));
    }

    #[test]
    fn half_power_squares_back() {
        let a = PowerSeries::from_integers([1, 3, -2, 5, 7]);
        let h = a.pow(&Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(h.mul(&h), a);
    }

    #[test]
    fn macmahon_first_terms() {
        assert_eq!(macmahon_series(0), PowerSeries::from_integers([1]));
        assert_eq!(macmahon_series(4), PowerSeries::from_integers([1, 1, 3, 6, 13]));
        // OEIS A000219
        assert_eq!(
            macmahon_series(10),
            PowerSeries::from_integers([1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500])
        );
    }

    #[test]
    fn reciprocal_of_macmahon() {
        // long division: b_n = -(a_1 b_{n-1} + ... + a_n b_0)
        let m = macmahon_series(4);
        assert_eq!(m.recip().unwrap(), PowerSeries::from_integers([1, -1, -2, -1, 0]));
    }

    #[test]
    fn constant_term_errors() {
        let z = PowerSeries::from_integers([0, 1]);
        assert_eq!(z.recip(), Err(Error::BadConstantTerm("recip")));
        assert_eq!(z.log(), Err(Error::BadConstantTerm("log")));
        assert_eq!(PowerSeries::from_integers([1, 1]).exp(), Err(Error::BadConstantTerm("exp")));
        assert_eq!(
            PowerSeries::from_integers([2, 1]).pow(&int(3)),
            Err(Error::BadConstantTerm("pow"))
        );
    }

    #[test]
    fn variable_scaling() {
        let m = macmahon_series(3).scale_variable(&int(-1));
        assert_eq!(m, PowerSeries::from_integers([1, -1, 3, -6]));
    }

    #[test]
    fn order_zero_is_supported() {
        let one = PowerSeries::one(0);
        assert_eq!(one.log().unwrap(), PowerSeries::zero(0));
        assert_eq!(PowerSeries::zero(0).exp().unwrap(), one);
    }
}
