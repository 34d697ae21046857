use eqmeas_core::edge::*;
use eqmeas_core::partitions::{enumerate_partitions, partition_count};
use eqmeas_core::{Error, FactoredForm, Partition};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn inv_uv() -> FactoredForm {
    FactoredForm::form(1, 0, 0, -1)
        .unwrap()
        .mul(&FactoredForm::form(0, 1, 0, -1).unwrap())
}

fn all_nonempty(max_n: usize) -> impl Iterator<Item = Partition> {
    (1..=max_n).flat_map(enumerate_partitions)
}

#[test]
fn corner_polynomial_matches_closed_form_through_ten() {
    let report = verify_lemma1(10);
    assert_eq!(report.checked, (0..=10).map(partition_count).sum::<u64>() as usize);
    assert!(report.all_passed(), "{:?}", report.failures.first());
}

#[test]
fn jack_ratio_formula_matches_direct_quotient() {
    let reports = verify_ratios(10);
    assert!(reports.jack.all_passed(), "{:?}", reports.jack.failures.first());
    assert!(reports.mnop.all_passed(), "{:?}", reports.mnop.failures.first());
}

#[test]
fn ratio_base_cases() {
    assert_eq!(ratio_a(&p(&[1]), 1).unwrap(), inv_uv());
    assert_eq!(ratio_b(&p(&[1]), 1).unwrap(), inv_uv().negate());
    assert_eq!(ratio_a(&p(&[1]), 2), Err(Error::BadCornerIndex { index: 2, m: 1 }));
    assert_eq!(ratio_b(&p(&[3, 2]), 0), Err(Error::BadCornerIndex { index: 0, m: 2 }));
}

#[test]
fn empty_row_and_column_case_reduces_to_inverse_uv() {
    // middle corner of the staircase: arm and leg both zero
    let factors = ratio_a_factors(&p(&[3, 2, 1]), 2).unwrap();
    assert_eq!(factors.len(), 3);
    assert_eq!(factors[1].case, RatioCase::Removed);
    assert_eq!(factors[1].value, inv_uv());
    assert_eq!(
        ratio_a_factors(&p(&[2, 2]), 1).unwrap()[0].value,
        FactoredForm::constant(eqmeas_core::Rational::new(1.into(), 4.into()))
            .unwrap()
            .mul(&FactoredForm::form(1, 1, 0, -2).unwrap())
    );

    // the three-case formula's k = ℓ expression gives the same value
    // wherever both products are empty
    let mut seen = 0;
    for lambda in all_nonempty(10) {
        let c = lambda.corner_data();
        for l in lambda.removable_corners() {
            if c.rho(l + 1) == c.rho(l) - 1 && c.gamma(l - 1) == c.gamma(l) - 1 {
                seen += 1;
                assert_eq!(a_removed_eq12(&lambda, l).unwrap(), inv_uv(), "{lambda} corner {l}");
            }
        }
    }
    assert_eq!(seen, 80);
}

#[test]
fn single_corner_shapes_carry_everything_in_the_removed_factor() {
    for lambda in [p(&[1]), p(&[3]), p(&[1, 1, 1]), p(&[2, 2]), p(&[4, 4, 4])] {
        assert_eq!(lambda.corner_data().m(), 1);
        let a = ratio_a_factors(&lambda, 1).unwrap();
        let b = ratio_b_factors(&lambda, 1).unwrap();
        assert_eq!((a.len(), b.len()), (1, 1));
        let mu = lambda.remove_corner(1).unwrap();
        assert_eq!(a[0].value, w_jack(&lambda).div(&w_jack(&mu)));
        assert_eq!(b[0].value, w_mnop(&lambda).unwrap().div(&w_mnop(&mu).unwrap()));
    }
}

#[test]
fn stated_removed_corner_factor_of_b_is_wrong() {
    // ρ_ℓ u - (γ_ℓ - γ_m) v vanishes for ℓ = m with ρ_m = 0
    assert_eq!(ratio_b_with(&p(&[1]), 1, BReading::Stated), Err(Error::ZeroFactor));
    assert_eq!(ratio_b_with(&p(&[3, 2]), 2, BReading::Stated), Err(Error::ZeroFactor));
    // and elsewhere it disagrees with the direct quotient
    let lambda = p(&[1, 1]);
    let mu = lambda.remove_corner(1).unwrap();
    let direct = w_mnop(&lambda).unwrap().div(&w_mnop(&mu).unwrap());
    assert_ne!(ratio_b_with(&lambda, 1, BReading::Stated).unwrap(), direct);
    assert_eq!(ratio_b_with(&lambda, 1, BReading::Expansion).unwrap(), direct);
}

#[test]
fn jack_and_edge_ratios_differ_by_exactly_a_sign() {
    let reports = verify_ratios(10);
    assert!(reports.negated.all_passed());
    assert_eq!(reports.equal.passed, 0);
    assert_eq!(reports.equal.failures.len(), reports.equal.checked);
}

#[test]
fn jack_equals_edge_weight_with_parity_sign() {
    let report = verify_signed_identity(12);
    assert_eq!(report.checked, 271);
    assert!(report.all_passed());
}

#[test]
fn stated_main_identity_holds_exactly_on_odd_sizes() {
    for lambda in all_nonempty(9) {
        assert_eq!(
            check_theorem1(&lambda).is_none(),
            lambda.size() % 2 == 1,
            "{lambda}"
        );
    }
    assert!(verify_theorem1(1).all_passed());
}

#[test]
fn conjugation_exchanges_u_and_v() {
    for lambda in (0..=10).flat_map(enumerate_partitions) {
        let conj = lambda.conjugate();
        assert_eq!(w_jack(&conj), w_jack(&lambda).swap_uv(), "{lambda}");
        assert_eq!(w_mnop(&conj).unwrap(), w_mnop(&lambda).unwrap().swap_uv(), "{lambda}");
    }
}

#[test]
fn edge_character_has_no_constant_term() {
    for lambda in (0..=8).flat_map(enumerate_partitions) {
        let ch = EdgeCharacter::of(&lambda).unwrap();
        assert_eq!(ch.qbar_poly, ch.q_poly.invert_variables());
        assert!(ch.q_poly.terms().all(|(e, _)| e.iter().all(|&x| x >= 0)));
        assert_eq!(ch.f_poly.constant_term(), 0.into());
    }
}

#[test]
fn swap_quotient_on_seeded_pairs() {
    let report = verify_swap_quotient(200, 0x5eed);
    assert_eq!(report.checked, 200);
    assert!(report.all_passed(), "{:?}", report.failures.first());
}

#[test]
fn swap_quotient_hand_cases() {
    use eqmeas_core::LaurentPoly;
    let r = LaurentPoly::monomial(2, [1, 0, 0], 1.into());
    let s = LaurentPoly::monomial(2, [0, 1, 0], 1.into());
    let lhs = swap2(&r.sub(&s).unwrap()).unwrap();
    assert_eq!(lhs, swap2(&r).unwrap().div(&swap2(&s).unwrap()));
    // -u/v
    let expected = FactoredForm::form(1, 0, 0, 1)
        .unwrap()
        .mul(&FactoredForm::form(0, 1, 0, -1).unwrap())
        .negate();
    assert_eq!(lhs, expected);
    assert!(swap2(&r.sub(&r).unwrap()).unwrap().is_one());
}
