use alloc::format;
use alloc::string::ToString;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{corner_poly, corner_poly_closed, ratio_a, ratio_b, swap2, w_jack, w_mnop};
use crate::arith::{FactoredForm, LaurentPoly};
use crate::error::Result;
use crate::partitions::{enumerate_partitions, Partition};
use crate::report::{Failure, Value, VerificationReport};

fn factored(r: Result<FactoredForm>) -> Value {
    match r {
        Ok(f) => Value::Factored(f),
        Err(e) => Value::Error(e),
    }
}

fn compare(subject: impl FnOnce() -> alloc::string::String, lhs: Result<FactoredForm>, rhs: Result<FactoredForm>) -> Option<Failure> {
    match (&lhs, &rhs) {
        (Ok(a), Ok(b)) if a == b => None,
        _ => Some(Failure {
            subject: subject(),
            lhs: factored(lhs),
            rhs: factored(rhs),
        }),
    }
}

/// `w_Jack(λ) = -w_MNOP(λ)` for one partition. This fails for every
/// partition of even size; see [`check_signed_identity`].
pub fn check_theorem1(lambda: &Partition) -> Option<Failure> {
    compare(
        || lambda.to_string(),
        Ok(w_jack(lambda)),
        w_mnop(lambda).map(|w| w.negate()),
    )
}

/// `w_Jack(λ) = (-1)^{|λ|+1} w_MNOP(λ)`, the sign-corrected form of
/// [`check_theorem1`]: the two agree on odd sizes.
pub fn check_signed_identity(lambda: &Partition) -> Option<Failure> {
    compare(
        || lambda.to_string(),
        Ok(w_jack(lambda)),
        w_mnop(lambda).map(|w| if lambda.size() % 2 == 0 { w } else { w.negate() }),
    )
}

/// [`check_signed_identity`] over every nonempty partition of size at most
/// `max_n`.
pub fn verify_signed_identity(max_n: usize) -> VerificationReport {
    (1..=max_n)
        .flat_map(enumerate_partitions)
        .map(|lambda| check_signed_identity(&lambda))
        .collect()
}

/// Every nonempty partition of size at most `max_n`; `∅` is listed as
/// excluded since both of its empty products are `+1`.
pub fn verify_theorem1(max_n: usize) -> VerificationReport {
    let mut report: VerificationReport = (1..=max_n)
        .flat_map(enumerate_partitions)
        .map(|lambda| check_theorem1(&lambda))
        .collect();
    report
        .excluded
        .push(("".to_string(), "empty partition: both weights are the empty product 1"));
    report
}

/// Multiplied-out `Q(1-r)(1-s)` against the corner-label closed form.
pub fn check_lemma1(lambda: &Partition) -> Option<Failure> {
    let expanded = corner_poly(lambda);
    let closed = corner_poly_closed(lambda);
    (expanded != closed).then(|| Failure {
        subject: lambda.to_string(),
        lhs: Value::Laurent(expanded),
        rhs: Value::Laurent(closed),
    })
}

/// All partitions of size `0..=max_n`.
pub fn verify_lemma1(max_n: usize) -> VerificationReport {
    (0..=max_n)
        .flat_map(enumerate_partitions)
        .map(|lambda| check_lemma1(&lambda))
        .collect()
}

/// The ratio checks for one `(λ, ℓ)`: the `A` product against the direct
/// Jack quotient, the `B` product against the direct edge quotient, `A`
/// against `B`, and `A` against `-B`.
pub fn check_ratios(lambda: &Partition, l: usize) -> [Option<Failure>; 4] {
    let subject = || format!("{lambda} corner {l}");
    let mu = lambda.remove_corner(l);
    let jack_quotient = mu.as_ref().map(|mu| w_jack(lambda).div(&w_jack(mu))).map_err(Clone::clone);
    let mnop_quotient = mu
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|mu| Ok(w_mnop(lambda)?.div(&w_mnop(mu)?)));
    let a = ratio_a(lambda, l);
    let b = ratio_b(lambda, l);
    [
        compare(subject, a.clone(), jack_quotient),
        compare(subject, b.clone(), mnop_quotient),
        compare(subject, a.clone(), b.clone()),
        compare(subject, a, b.map(|b| b.negate())),
    ]
}

/// Reports for the `A`, `B` and `A = B` sweeps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatioReports {
    /// `∏ A(k)` against `w_Jack(λ)/w_Jack(μ)`.
    pub jack: VerificationReport,
    /// `∏ B(k)` against `w_MNOP(λ)/w_MNOP(μ)`.
    pub mnop: VerificationReport,
    /// `∏ A(k)` against `∏ B(k)`.
    pub equal: VerificationReport,
    /// `∏ A(k)` against `-∏ B(k)`.
    pub negated: VerificationReport,
}

impl RatioReports {
    /// Records one `(λ, ℓ)` outcome.
    pub fn record(&mut self, outcome: [Option<Failure>; 4]) {
        let [a, b, c, d] = outcome;
        self.jack.record(a);
        self.mnop.record(b);
        self.equal.record(c);
        self.negated.record(d);
    }

    /// Whether the `A`, `B` and `A = B` sweeps all passed.
    pub fn all_passed(&self) -> bool {
        self.jack.all_passed() && self.mnop.all_passed() && self.equal.all_passed()
    }
}

/// Every nonempty `λ` with `|λ| ≤ max_n` and every removable corner.
pub fn verify_ratios(max_n: usize) -> RatioReports {
    let mut reports = RatioReports::default();
    for lambda in (1..=max_n).flat_map(enumerate_partitions) {
        for l in lambda.removable_corners() {
            reports.record(check_ratios(&lambda, l));
        }
    }
    reports
}

/// A random constant-term-free polynomial in `r, s` with up to eight terms,
/// exponents in `[-4, 4]²` and coefficients in `[-5, 5]`.
pub fn random_constant_free<R: Rng>(rng: &mut R) -> LaurentPoly {
    let mut p = LaurentPoly::zero(2);
    for _ in 0..rng.gen_range(1..=8) {
        let e = loop {
            let e = [rng.gen_range(-4..=4), rng.gen_range(-4..=4), 0];
            if e != [0, 0, 0] {
                break e;
            }
        };
        p.add_term(e, rng.gen_range(-5i64..=5).into());
    }
    p
}

/// `swap(F - G) = swap(F) / swap(G)` on seeded random pairs. Every third
/// `G` is built from `F` with some terms kept, so that cancellation in
/// `F - G` is exercised.
pub fn verify_swap_quotient(trials: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|t| {
            let f = random_constant_free(&mut rng);
            let g = if t % 3 == 2 {
                let mut g = random_constant_free(&mut rng);
                for (e, c) in f.terms() {
                    if rng.gen_bool(0.5) {
                        g.add_term(*e, c.clone());
                    }
                }
                g
            } else {
                random_constant_free(&mut rng)
            };
            let lhs = f.sub(&g).and_then(|d| swap2(&d));
            let rhs = swap2(&f).and_then(|sf| Ok(sf.div(&swap2(&g)?)));
            compare(|| format!("F = {f}; G = {g}"), lhs, rhs)
        })
        .collect()
}
