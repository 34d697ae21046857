//! The equivariant vertex measure on plane partitions and the pointwise check
//! of its partition function against a power of MacMahon's function.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int_point, macmahon_series, FactoredForm, LaurentPoly, LinearForm, Point, PowerSeries, Rational, Sign};
use crate::edge::swap_with;
use crate::error::{Error, Result};
use crate::partitions::plane_partitions_by_size;
use crate::partitions::PlanePartition;

/// `Q`, `Q̄` and `F` of a plane partition, in `r, s, t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCharacter {
    /// `Q = Σ r^i s^j t^k` over boxes.
    pub q_poly: LaurentPoly,
    /// `Q̄ = Σ r^{-i} s^{-j} t^{-k}` over boxes.
    pub qbar_poly: LaurentPoly,
    /// `F = Q - Q̄/(rst) + Q Q̄ (1-r)(1-s)(1-t)/(rst)`.
    pub f_poly: LaurentPoly,
}

impl VertexCharacter {
    /// Builds all three polynomials; fails if `F` has a constant term.
    pub fn of(pi: &PlanePartition) -> Result<Self> {
        let q = LaurentPoly::from_terms(3, pi.boxes().map(|b| (b.map(|x| x as i64), 1)));
        let qbar = q.invert_variables();
        let inv_rst = [-1, -1, -1];
        let mut cube = LaurentPoly::one(3);
        for axis in 0..3 {
            cube = cube.mul(&LaurentPoly::one_minus_var(3, axis))?;
        }
        let f = q
            .sub(&qbar.shift(inv_rst))?
            .add(&q.mul(&qbar)?.mul(&cube)?.shift(inv_rst))?;
        if !f.constant_term().is_zero() {
            return Err(Error::ConstantTermPresent);
        }
        Ok(VertexCharacter {
            q_poly: q,
            qbar_poly: qbar,
            f_poly: f,
        })
    }
}

/// The vertex character `F(π)`.
pub fn f_vertex(pi: &PlanePartition) -> Result<LaurentPoly> {
    VertexCharacter::of(pi).map(|c| c.f_poly)
}

/// `w(π) = ∏ (i·u + j·v + k·w)^{-c_{ijk}}`; `w(∅) = 1`.
pub fn w_vertex(pi: &PlanePartition) -> Result<FactoredForm> {
    let f = f_vertex(pi)?;
    swap_with(&f, -1, |e| e.map(Into::into))
}

/// `(u+v)(v+w)(w+u)/(uvw)` at a point.
pub fn closed_form_exponent(point: &Point) -> Result<Rational> {
    let [u, v, w] = point;
    let den = u * v * w;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok((u + v) * (v + w) * (w + u) / den)
}

/// `M(σq)^{-E}` through `q^order`, `E` as in [`closed_form_exponent`].
pub fn closed_form_at_point(order: usize, point: &Point, sign: Sign) -> Result<PowerSeries> {
    let e = closed_form_exponent(point)?;
    let sigma = Rational::from_integer(sign.to_i64().into());
    macmahon_series(order).scale_variable(&sigma).pow(&-e)
}

/// Vertex weights of every plane partition up to a given size, with the set
/// of linear forms occurring in any of them.
#[derive(Clone, Debug)]
pub struct VertexTable {
    by_size: Vec<Vec<(PlanePartition, FactoredForm)>>,
    forms: BTreeSet<LinearForm>,
}

impl VertexTable {
    /// Enumerates and weighs all plane partitions of size `0..=order`.
    pub fn new(order: usize) -> Result<Self> {
        let mut forms = BTreeSet::new();
        let by_size = plane_partitions_by_size(order)
            .into_iter()
            .map(|level| {
                level
                    .into_iter()
                    .map(|pi| {
                        let w = w_vertex(&pi)?;
                        forms.extend(w.factors().map(|(f, _)| f.clone()));
                        Ok((pi, w))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexTable { by_size, forms })
    }

    /// Largest size covered.
    pub fn order(&self) -> usize {
        self.by_size.len() - 1
    }

    /// `(π, w(π))` pairs of size `n`.
    pub fn level(&self, n: usize) -> &[(PlanePartition, FactoredForm)] {
        &self.by_size[n]
    }

    /// Every linear form that occurs in some weight.
    pub fn forms(&self) -> impl Iterator<Item = &LinearForm> + '_ {
        self.forms.iter()
    }

    /// Whether some occurring form vanishes at the point.
    pub fn is_degenerate(&self, point: &Point) -> bool {
        self.forms.iter().any(|f| f.eval(point).is_zero())
    }

    /// `Σ_π w(π) q^{|π|}` evaluated exactly at a point.
    pub fn z_series(&self, point: &Point) -> Result<PowerSeries> {
        if self.is_degenerate(point) {
            return Err(Error::PoleAtPoint);
        }
        let coeffs = self
            .by_size
            .iter()
            .map(|level| {
                level
                    .iter()
                    .try_fold(Rational::zero(), |acc, (_, w)| Ok(acc + w.eval(point)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries::new(coeffs))
    }
}

/// `Σ_{|π| ≤ order} w(π)(point) q^{|π|}`.
pub fn z_series_at_point(order: usize, point: &Point) -> Result<PowerSeries> {
    VertexTable::new(order)?.z_series(point)
}

/// Draws a point with integer coordinates in `[1, 97]`, resampling until no
/// occurring linear form vanishes.
pub fn draw_point<R: Rng>(rng: &mut R, table: &VertexTable) -> Point {
    loop {
        let point = int_point(rng.gen_range(1..=97), rng.gen_range(1..=97), rng.gen_range(1..=97));
        if !table.is_degenerate(&point) {
            return point;
        }
    }
}

/// The Calabi-Yau point recorded in vertex reports (`u + v + w = 0`).
pub fn calabi_yau_point() -> Point {
    int_point(1, 2, -3)
}

/// Outcome of the pointwise partition-function check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZReport {
    /// Truncation order.
    pub order: usize,
    /// Sampled points.
    pub points: Vec<Point>,
    /// The substitution `q -> σq` under which every point matched, if any.
    pub sign: Option<Sign>,
    /// Per point: matched under `sign`, or under either sign when `sign` is
    /// `None`.
    pub per_point: Vec<bool>,
    /// Per point, the result under `σ = +1` and `σ = -1`.
    pub per_sign: [(Sign, Vec<bool>); 2],
    /// `w(π)` at [`calabi_yau_point`] for small `π`; `None` where a vanishing
    /// denominator makes the value undefined.
    pub calabi_yau: Vec<(PlanePartition, Option<Rational>)>,
}

impl ZReport {
    /// Whether a single sign matched at every point.
    pub fn passed(&self) -> bool {
        self.sign.is_some() && self.per_point.iter().all(|&b| b)
    }
}

/// Largest size for which Calabi-Yau values are recorded.
pub const CALABI_YAU_MAX_SIZE: usize = 4;

/// Compares `Z` with `M(σq)^{-E}` for both signs at `num_points` seeded
/// random points.
pub fn verify_vertex(order: usize, num_points: usize, seed: u64) -> Result<ZReport> {
    let table = VertexTable::new(order.max(CALABI_YAU_MAX_SIZE))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let signs = [Sign::Plus, Sign::Minus];
    let mut points = Vec::with_capacity(num_points);
    let mut per_sign = signs.map(|s| (s, Vec::with_capacity(num_points)));
    for _ in 0..num_points {
        let point = draw_point(&mut rng, &table);
        let z = table.z_series(&point)?.truncate(order);
        for (sign, matches) in per_sign.iter_mut() {
            matches.push(z == closed_form_at_point(order, &point, *sign)?);
        }
        points.push(point);
    }
    let unanimous: Vec<Sign> = per_sign
        .iter()
        .filter(|(_, m)| m.iter().all(|&b| b))
        .map(|(s, _)| *s)
        .collect();
    let sign = match unanimous.as_slice() {
        [s] => Some(*s),
        _ => None,
    };
    let per_point = match sign {
        Some(s) => per_sign.iter().find(|(t, _)| *t == s).expect("sign present").1.clone(),
        None => (0..num_points).map(|i| per_sign.iter().any(|(_, m)| m[i])).collect(),
    };
    let cy = calabi_yau_point();
    let calabi_yau = (1..=CALABI_YAU_MAX_SIZE)
        .flat_map(|n| table.level(n).iter())
        .map(|(pi, w)| (pi.clone(), w.eval(&cy).ok()))
        .collect();
    Ok(ZReport {
        order,
        points,
        sign,
        per_point,
        per_sign,
        calabi_yau,
    })
}

/// First `q` exponent where `Z` and `M(σq)^{-E}` disagree at a point.
pub fn first_mismatch(table: &VertexTable, point: &Point, order: usize, sign: Sign) -> Result<Option<usize>> {
    let z = table.z_series(point)?.truncate(order);
    let closed = closed_form_at_point(order, point, sign)?;
    Ok((0..=order).find(|&n| z.coeff(n) != closed.coeff(n)))
}

impl Default for ZReport {
    fn default() -> Self {
        ZReport {
            order: 0,
            points: Vec::new(),
            sign: None,
            per_point: Vec::new(),
            per_sign: [(Sign::Plus, Vec::new()), (Sign::Minus, Vec::new())],
            calabi_yau: Vec::new(),
        }
    }
}
