use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent tuple; unused trailing axes are zero.
pub type Exponent = [i64; 3];

/// Sparse Laurent polynomial in two (`r, s`) or three (`r, s, t`) variables
/// with big-integer coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    axes: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    ///
    /// # Panics
    /// If `axes` is not 2 or 3.
    pub fn zero(axes: usize) -> Self {
        assert!(axes == 2 || axes == 3, "LaurentPoly supports 2 or 3 axes");
        LaurentPoly {
            axes,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`.
    pub fn one(axes: usize) -> Self {
        Self::monomial(axes, [0; 3], BigInt::one())
    }

    /// `coeff · r^e0 s^e1 (t^e2)`.
    pub fn monomial(axes: usize, exp: Exponent, coeff: BigInt) -> Self {
        let mut p = Self::zero(axes);
        p.add_term(exp, coeff);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I, C>(axes: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(axes);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `1 - x_axis`.
    pub fn one_minus_var(axes: usize, axis: usize) -> Self {
        let mut e = [0; 3];
        e[axis] = 1;
        Self::from_terms(axes, [([0; 3], 1), (e, -1)])
    }

    /// Adds `coeff` to the coefficient at `exp`.
    ///
    /// # Panics
    /// If `exp` is nonzero on an axis this polynomial does not have.
    pub fn add_term(&mut self, exp: Exponent, coeff: BigInt) {
        assert!(
            exp[self.axes..].iter().all(|&e| e == 0),
            "exponent uses an absent axis"
        );
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Number of variables.
    pub fn axes(&self) -> usize {
        self.axes
    }

    /// Nonzero terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> + '_ {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at `exp`.
    pub fn coeff(&self, exp: Exponent) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial with all exponents zero.
    pub fn constant_term(&self) -> BigInt {
        self.coeff([0; 3])
    }

    fn check_axes(&self, other: &LaurentPoly) -> Result<()> {
        if self.axes == other.axes {
            Ok(())
        } else {
            Err(Error::AxesMismatch(self.axes, other.axes))
        }
    }

    /// Sum.
    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_axes(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            axes: self.axes,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_axes(other)?;
        let mut out = Self::zero(self.axes);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(add_exp(ea, eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by `coeff`.
    pub fn scale(&self, coeff: &BigInt) -> LaurentPoly {
        let mut out = Self::zero(self.axes);
        for (e, c) in self.terms() {
            out.add_term(*e, c * coeff);
        }
        out
    }

    /// Multiplies by the monomial with exponent `shift`.
    pub fn shift(&self, shift: Exponent) -> LaurentPoly {
        LaurentPoly {
            axes: self.axes,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(e, &shift), c.clone()))
                .collect(),
        }
    }

    /// Substitutes every variable by its inverse.
    pub fn invert_variables(&self) -> LaurentPoly {
        LaurentPoly {
            axes: self.axes,
            terms: self.terms.iter().map(|(e, c)| (e.map(|x| -x), c.clone())).collect(),
        }
    }

    /// Permutes variables: the new exponent on axis `i` is the old exponent on
    /// axis `perm[i]`.
    pub fn permute_axes(&self, perm: [usize; 3]) -> LaurentPoly {
        LaurentPoly {
            axes: self.axes,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (perm.map(|i| e[i]), c.clone()))
                .collect(),
        }
    }
}

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            write!(f, "{sign}{}", c.abs())?;
            for (x, var) in e.iter().zip(["r", "s", "t"]).take(self.axes) {
                if *x != 0 {
                    write!(f, "*{var}^{x}")?;
                }
            }
        }
        Ok(())
    }
}
