use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{lf_canonicalize, Exponent, FactoredForm, LaurentPoly};
use crate::error::{Error, Result};

/// Exchanges addition and multiplication: each term `c·x^e` becomes
/// `form(e)^(multiplier·c)`. The constant term has no form and is rejected.
pub(crate) fn swap_with(
    poly: &LaurentPoly,
    multiplier: i64,
    form: impl Fn(&Exponent) -> [BigInt; 3],
) -> Result<FactoredForm> {
    let mut out = FactoredForm::one();
    for (exp, coeff) in poly.terms() {
        if exp.iter().all(|&e| e == 0) {
            return Err(Error::ConstantTermPresent);
        }
        let c = coeff.to_i64().expect("swap exponent fits i64");
        let scaled = lf_canonicalize(form(exp));
        out = out.mul(&FactoredForm::scaled_power(&scaled, multiplier * c)?);
    }
    Ok(out)
}

/// `swap(Σ c_{ij} r^i s^j) = ∏ (i·u - j·v)^{c_{ij}}`.
pub fn swap2(g: &LaurentPoly) -> Result<FactoredForm> {
    if g.axes() != 2 {
        return Err(Error::AxesMismatch(g.axes(), 2));
    }
    swap_with(g, 1, |e| [e[0].into(), (-e[1]).into(), 0.into()])
}
