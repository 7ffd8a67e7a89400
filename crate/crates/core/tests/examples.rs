//! Worked values through the public API.

use std::f64::consts::{FRAC_PI_2, PI};

use sot_core::clifford::{
    gamma, matrix_to_vector, quadratic_form_check, rotate_spinor, rotate_vector, verify_b,
    verify_clifford, Matrix16, Rotor, Spinor16, Vector8,
};
use sot_core::octonion::identities::compare_tables;
use sot_core::octonion::{
    associator, generate_basis_from_j, is_timelike_vector_part, jacobiator, verify_associators,
    verify_moufang, SignedUnit, SplitOctonion, StructureConstants, Unit,
};
use sot_core::triality::{
    correspondence_check, double_cover_check, trilinear_agreement_check,
    trilinear_equivalence_oracle, trilinear_oct, xi_convention_oracle, XiConvention,
};
use sot_core::{Rational, Scalar};

type Q = Rational;
type Oct = SplitOctonion<Q>;

fn u(unit: Unit) -> Oct {
    Oct::unit(unit)
}

#[test]
fn selected_table_entries() {
    let t = StructureConstants::canonical();
    assert_eq!(t.product(Unit::J1, Unit::J2), SignedUnit::new(Unit::j3, 1));
    assert_eq!(t.product(Unit::I, Unit::I), SignedUnit::new(Unit::One, 1));
    assert_eq!(t.product(Unit::j1, Unit::j1), SignedUnit::new(Unit::One, -1));
    assert_eq!(t.entries().count(), 64);
}

#[test]
fn generated_table_matches_hard_coded() {
    let generated = generate_basis_from_j().unwrap();
    let check = compare_tables("generated", &generated, StructureConstants::canonical());
    assert_eq!((check.cases, check.failures), (64, 0));
    assert_eq!(&generated, StructureConstants::canonical());
}

#[test]
fn associator_and_jacobiator_examples() {
    assert_eq!(associator(&u(Unit::J1), &u(Unit::J2), &u(Unit::J3)), -u(Unit::I));
    assert_eq!(associator(&u(Unit::j1), &u(Unit::j2), &u(Unit::I)), u(Unit::J3));
    assert_eq!(jacobiator(&u(Unit::J1), &u(Unit::J2), &u(Unit::J3)), -u(Unit::I));
    for a in Unit::ALL {
        for b in Unit::ALL {
            assert!(associator(&u(a), &u(a), &u(b)).is_zero());
        }
    }
}

#[test]
fn timelike_examples() {
    assert!(is_timelike_vector_part(&(&Oct::one() + &u(Unit::I))));
    assert!(!is_timelike_vector_part(&u(Unit::j1)));
    assert!(!is_timelike_vector_part(&(&u(Unit::J1) + &u(Unit::j1))));
}

#[test]
fn sweeps_have_stated_sizes() {
    let m = verify_moufang::<Q>(0.0);
    assert_eq!((m.cases, m.failures), (343 * 3 + 49 * 3, 0));
    let c = verify_clifford::<Q>(0.0);
    assert_eq!((c.cases, c.failures), (64, 0));
    assert!(verify_associators::<Q>(0.0).passed());
    assert!(verify_b::<Q>(0.0).passed());
    assert!(quadratic_form_check(200, 3).passed());
}

#[test]
fn grade_one_round_trip() {
    let m = &gamma::<Q>(0).unwrap() + &gamma::<Q>(7).unwrap().scale_real(&Q::from_int(2));
    assert_eq!(matrix_to_vector(&m, 0.0).unwrap(), Vector8::from_ints([1, 0, 0, 0, 0, 0, 0, 2]));
    assert!(matrix_to_vector(&Matrix16::<Q>::identity(), 0.0).is_err());
}

#[test]
fn compact_rotation_and_boost() {
    let e4 = Vector8::<f64>::basis(4);
    let r = rotate_vector(&e4, &Rotor::plane(4, 5, FRAC_PI_2).unwrap());
    assert!(r.max_abs_diff(&Vector8::new([0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0])) < 1e-12);
    assert!((r.quadratic_form() + 1.0).abs() < 1e-12);

    let b = rotate_vector(&Vector8::basis(0), &Rotor::plane(0, 4, 1.0).unwrap());
    assert!((b.x[0] - 1f64.cosh()).abs() < 1e-12);
    assert!((b.x[4] - 1f64.sinh()).abs() < 1e-12);
}

#[test]
fn spinors_flip_at_two_pi() {
    let eta = Spinor16::new([1.0, 2.0, 0.0, -1.0, 3.0, 0.0, 1.0, 1.0], [0.5; 8]);
    let flipped = rotate_spinor(&eta, &Rotor::plane(1, 2, 2.0 * PI).unwrap());
    assert!(flipped.max_abs_diff(&eta.scale(&-1.0)) < 1e-12);
    let back = rotate_spinor(&eta, &Rotor::plane(1, 2, 4.0 * PI).unwrap());
    assert!(back.max_abs_diff(&eta) < 1e-12);
    assert!(double_cover_check(1e-12).passed());
}

#[test]
fn oracles_pin_conventions() {
    assert_eq!(xi_convention_oracle().unwrap(), XiConvention::Transpose);
    let map = trilinear_equivalence_oracle().unwrap();
    assert!(map.is_identity());
    assert_eq!(map.scale, Q::from_int(1));
    assert_eq!(map.max_residual, 0.0);
    assert_eq!(trilinear_oct(&Oct::one(), &Oct::one(), &Oct::one()), Q::from_int(-1));
}

#[test]
fn correspondence_and_agreement_are_exact() {
    assert!(correspondence_check(200, 11).passed());
    let r = trilinear_agreement_check(200, 11);
    assert!(r.passed(), "{r:#?}");
    assert_eq!(r.max_residual, 0.0);
}

#[test]
fn reports_serialize() {
    let json = serde_json::to_value(verify_clifford::<Q>(0.0)).unwrap();
    assert_eq!(json["suite"], "clifford");
    assert_eq!(json["cases"], 64);
    assert_eq!(json["mode"], "exact");
}
