use eqmeas_core::arith::int_point;
use eqmeas_core::partitions::{enumerate_plane_partitions, plane_partitions_by_size};
use eqmeas_core::vertex::*;
use eqmeas_core::{macmahon_series, PlanePartition, PowerSeries, Rational, Sign};
use num_traits::Zero;

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[test]
fn plane_partition_counts_match_macmahon() {
    let levels = plane_partitions_by_size(8);
    let counts: Vec<Rational> = levels.iter().map(|l| Rational::from_integer(l.len().into())).collect();
    assert_eq!(PowerSeries::new(counts), macmahon_series(8));
    assert_eq!(enumerate_plane_partitions(6).len(), 48);
    let total: usize = levels.iter().take(7).map(Vec::len).sum();
    assert_eq!(total, 96);
}

#[test]
fn vertex_character_has_no_constant_term() {
    for level in plane_partitions_by_size(6) {
        for pi in level {
            let ch = VertexCharacter::of(&pi).unwrap();
            assert!(ch.f_poly.constant_term().is_zero(), "{pi}");
            assert_eq!(ch.qbar_poly, ch.q_poly.invert_variables());
        }
    }
}

#[test]
fn weight_is_symmetric_under_axis_permutations() {
    for level in plane_partitions_by_size(5) {
        for pi in level {
            let w = w_vertex(&pi).unwrap();
            for perm in PERMS {
                assert_eq!(w_vertex(&pi.permute_axes(perm)).unwrap(), w.permuted(perm), "{pi} {perm:?}");
            }
        }
    }
}

#[test]
fn single_box_weight() {
    let one: PlanePartition = "1".parse().unwrap();
    // (u+v)(u+w)(v+w) / (uvw)
    let w = w_vertex(&one).unwrap();
    let p = int_point(2, 3, 5);
    assert_eq!(w.eval(&p).unwrap(), Rational::new((5 * 7 * 8).into(), 30.into()));
}

#[test]
fn partition_function_matches_closed_form_with_one_sign() {
    let report = verify_vertex(6, 5, 2024).unwrap();
    assert!(report.passed());
    assert_eq!(report.sign, Some(Sign::Minus));
    assert!(report.per_sign[0].1.iter().all(|&b| !b));
    assert_eq!(report.calabi_yau.len(), 1 + 3 + 6 + 13);
}

#[test]
fn opposite_sign_first_disagrees_in_degree_one() {
    let table = VertexTable::new(5).unwrap();
    for point in [int_point(2, 13, 59), int_point(7, 31, 101), int_point(11, 47, 173)] {
        assert!(!table.is_degenerate(&point));
        assert_eq!(first_mismatch(&table, &point, 5, Sign::Minus).unwrap(), None);
        assert_eq!(first_mismatch(&table, &point, 5, Sign::Plus).unwrap(), Some(1));
    }
}

#[test]
fn calabi_yau_values_are_parity_signs_or_poles() {
    let report = verify_vertex(1, 1, 1).unwrap();
    let mut defined = 0;
    for (pi, value) in &report.calabi_yau {
        if let Some(v) = value {
            defined += 1;
            let sign = if pi.size() % 2 == 0 { 1 } else { -1 };
            assert_eq!(*v, Rational::from_integer(sign.into()), "{pi}");
        }
    }
    assert!(defined > 0);
}

#[test]
fn summation_order_does_not_matter() {
    let table = VertexTable::new(5).unwrap();
    let point = int_point(5, 23, 71);
    assert!(!table.is_degenerate(&point));
    let forward = table.z_series(&point).unwrap();
    for n in 0..=5 {
        let reversed = table
            .level(n)
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, (_, w)| acc + w.eval(&point).unwrap());
        assert_eq!(reversed, forward.coeff(n));
    }
}
