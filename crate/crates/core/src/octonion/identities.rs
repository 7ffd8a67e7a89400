//! Exhaustive identity sweeps over the basis units.
//!
//! Each sweep is generic over the coefficient field. Run it with
//! [`Rational`](crate::scalar::Rational) and every residual is an exact zero
//! or an exact failure; with `f64` the tolerance applies.

use super::element::{associator, commutator, jacobiator_by, SplitOctonion};
use super::unit::{delta, epsilon, StructureConstants, Unit};
use crate::report::{IdentityCheck, VerificationReport};
use crate::scalar::Scalar;

type Oct<T> = SplitOctonion<T>;

fn units<T: Scalar>() -> Vec<(Unit, Oct<T>)> {
    Unit::IMAGINARY.iter().map(|&u| (u, Oct::unit(u))).collect()
}

fn compare<T: Scalar>(
    check: &mut IdentityCheck,
    lhs: &Oct<T>,
    rhs: &Oct<T>,
    tol: f64,
    label: impl FnOnce() -> String,
) {
    let diff = lhs - rhs;
    check.record(diff.is_negligible(tol), diff.max_abs(), || {
        format!("{}: lhs = {lhs}, rhs = {rhs}", label())
    });
}

/// Moufang identities over all 343 ordered unit triples, plus the three
/// mild associative laws over all 49 ordered pairs.
pub fn verify_moufang<T: Scalar>(tol: f64) -> VerificationReport {
    let us = units::<T>();
    let mut report = VerificationReport::new("moufang", T::EXACT);

    let mut m1 = IdentityCheck::new("(xy)(zx) = (x(yz))x");
    let mut m2 = IdentityCheck::new("((zy)z)x = z(y(zx))");
    let mut m3 = IdentityCheck::new("x((yz)y) = ((xy)z)y");
    for (ux, x) in &us {
        for (uy, y) in &us {
            for (uz, z) in &us {
                let name = || format!("({ux},{uy},{uz})");
                compare(&mut m1, &((x * y) * (z * x)), &((x * &(y * z)) * x.clone()), tol, name);
                compare(&mut m2, &(&((z * y) * z.clone()) * x), &(z * &(y * &(z * x))), tol, name);
                compare(&mut m3, &(x * &((y * z) * y.clone())), &(((x * y) * z.clone()) * y.clone()), tol, name);
            }
        }
    }

    let mut a1 = IdentityCheck::new("(xy)y = x(y²)");
    let mut a2 = IdentityCheck::new("x(xy) = (x²)y");
    let mut a3 = IdentityCheck::new("(xy)x = x(yx)");
    for (ux, x) in &us {
        for (uy, y) in &us {
            let name = || format!("({ux},{uy})");
            compare(&mut a1, &((x * y) * y.clone()), &(x * &(y * y)), tol, name);
            compare(&mut a2, &(x * &(x * y)), &((x * x) * y.clone()), tol, name);
            compare(&mut a3, &((x * y) * x.clone()), &(x * &(y * x)), tol, name);
        }
    }

    for c in [m1, m2, m3, a1, a2, a3] {
        report.push(c);
    }
    report
}

/// Malcev relation and the 4- and 5-element Jacobiator identities.
///
/// All products inside these identities are taken in the commutator algebra
/// `[x,y] = ½(xy - yx)`, which is the Malcev algebra of the split octonions.
/// For two distinct imaginary units `[x,y] = xy`; the distinction matters once
/// nested products produce commuting pairs (e.g. `z = ±xy`). Each identity is
/// homogeneous in the product, so the ½ does not affect any verdict.
pub fn verify_malcev<T: Scalar>(tol: f64) -> VerificationReport {
    let us = units::<T>();
    let p = |a: &Oct<T>, b: &Oct<T>| commutator(a, b);
    let jac = |a: &Oct<T>, b: &Oct<T>, c: &Oct<T>| jacobiator_by(a, b, c, p);
    let mut report = VerificationReport::new("malcev", T::EXACT);
    report.note("products evaluated in the commutator algebra [x,y] = (xy - yx)/2");

    let mut sagle = IdentityCheck::new("(xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y");
    let mut jform = IdentityCheck::new("J(x,y,xz) = J(x,y,z)x");
    for (ux, x) in &us {
        for (uy, y) in &us {
            for (uz, z) in &us {
                let name = || format!("({ux},{uy},{uz})");
                let xy = p(x, y);
                let lhs = p(&xy, &p(x, z));
                let rhs = &(&p(&p(&xy, z), x) + &p(&p(&p(y, z), x), x)) + &p(&p(&p(z, x), x), y);
                compare(&mut sagle, &lhs, &rhs, tol, name);
                compare(&mut jform, &jac(x, y, &p(x, z)), &p(&jac(x, y, z), x), tol, name);
            }
        }
    }

    let mut cyc = IdentityCheck::new("J(xy,z,w) + J(yz,x,w) + J(zx,y,w) = 0");
    let mut der = IdentityCheck::new("J(x,y,zw) = J(x,y,z)w + zJ(x,y,w)");
    for (ux, x) in &us {
        for (uy, y) in &us {
            for (uz, z) in &us {
                for (uw, w) in &us {
                    let name = || format!("({ux},{uy},{uz},{uw})");
                    let lhs = &(&jac(&p(x, y), z, w) + &jac(&p(y, z), x, w)) + &jac(&p(z, x), y, w);
                    compare(&mut cyc, &lhs, &Oct::zero(), tol, name);
                    let rhs = &p(&jac(x, y, z), w) + &p(z, &jac(x, y, w));
                    compare(&mut der, &jac(x, y, &p(z, w)), &rhs, tol, name);
                }
            }
        }
    }

    let mut five = IdentityCheck::new(
        "J(x,y,J(z,u,v)) = J(J(x,y,z),u,v) + J(z,J(x,y,u),v) + J(z,u,J(x,y,v))",
    );
    for (ux, x) in &us {
        for (uy, y) in &us {
            for (uz, z) in &us {
                let jxyz = jac(x, y, z);
                for (uu, u) in &us {
                    let jxyu = jac(x, y, u);
                    for (uv, v) in &us {
                        let name = || format!("({ux},{uy},{uz},{uu},{uv})");
                        let lhs = jac(x, y, &jac(z, u, v));
                        let rhs = &(&jac(&jxyz, u, v) + &jac(z, &jxyu, v)) + &jac(z, u, &jac(x, y, v));
                        compare(&mut five, &lhs, &rhs, tol, name);
                    }
                }
            }
        }
    }

    for c in [sagle, jform, cyc, der, five] {
        report.push(c);
    }
    report
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Small(usize),
    Big(usize),
    I,
}

fn kind(u: Unit) -> Option<Kind> {
    match u {
        Unit::j1 => Some(Kind::Small(1)),
        Unit::j2 => Some(Kind::Small(2)),
        Unit::j3 => Some(Kind::Small(3)),
        Unit::J1 => Some(Kind::Big(1)),
        Unit::J2 => Some(Kind::Big(2)),
        Unit::J3 => Some(Kind::Big(3)),
        Unit::I => Some(Kind::I),
        Unit::One => None,
    }
}

fn eps_sum<T: Scalar>(n: usize, m: usize, sign: i64, unit: fn(usize) -> Unit) -> Oct<T> {
    (1..=3).fold(Oct::zero(), |acc, k| {
        let c = sign * i64::from(epsilon(n, m, k));
        &acc + &Oct::unit(unit(k)).scale(&T::from_int(c))
    })
}

fn unit_scaled<T: Scalar>(u: Unit, c: i64) -> Oct<T> {
    Oct::unit(u).scale(&T::from_int(c))
}

/// The six printed associator families, evaluated on an ordered triple that
/// matches one of their argument patterns. `None` if no pattern matches.
pub fn associator_family<T: Scalar>(a: Unit, b: Unit, c: Unit) -> Option<Oct<T>> {
    use Kind::*;
    let d = |x, y| i64::from(delta(x, y));
    let e = |x, y, z| i64::from(epsilon(x, y, z));
    Some(match (kind(a)?, kind(b)?, kind(c)?) {
        // 𝒜(jₙ,jₘ,Jₖ) = -εₙₘₖI - δₙₖJₘ + δₘₖJₙ
        (Small(n), Small(m), Big(k)) => {
            &(&unit_scaled(Unit::I, -e(n, m, k)) + &unit_scaled(Unit::big(m), -d(n, k)))
                + &unit_scaled(Unit::big(n), d(m, k))
        }
        // 𝒜(jₙ,jₘ,I) = εₙₘₖJᵏ
        (Small(n), Small(m), I) => eps_sum(n, m, 1, Unit::big),
        // 𝒜(jₙ,Jₘ,Jₖ) = δₙₘjₖ - δₙₖjₘ
        (Small(n), Big(m), Big(k)) => {
            &unit_scaled(Unit::small(k), d(n, m)) + &unit_scaled(Unit::small(m), -d(n, k))
        }
        // 𝒜(jₙ,Jₘ,I) = -εₙₘₖjᵏ
        (Small(n), Big(m), I) => eps_sum(n, m, -1, Unit::small),
        // 𝒜(Jₙ,Jₘ,Jₖ) = -εₙₘₖI
        (Big(n), Big(m), Big(k)) => unit_scaled(Unit::I, -e(n, m, k)),
        // 𝒜(Jₙ,Jₘ,I) = εₙₘₖJᵏ
        (Big(n), Big(m), I) => eps_sum(n, m, 1, Unit::big),
        _ => return None,
    })
}

const PERMUTATIONS: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

/// Expected associator of any unit triple: the signed family value of the
/// first argument permutation matching a family, or zero.
pub fn expected_associator<T: Scalar>(a: Unit, b: Unit, c: Unit) -> Oct<T> {
    let args = [a, b, c];
    PERMUTATIONS
        .iter()
        .find_map(|(perm, sign)| {
            associator_family::<T>(args[perm[0]], args[perm[1]], args[perm[2]])
                .map(|v| v.scale(&T::from_int(*sign)))
        })
        .unwrap_or_else(Oct::zero)
}

/// Multiplication-table structure and the associator table.
///
/// Covers unit squares, anticommutativity, the six associator families, the
/// remaining triples via total antisymmetry, and the associator–commutator
/// relation.
pub fn verify_associators<T: Scalar>(tol: f64) -> VerificationReport {
    let us = units::<T>();
    let mut report = VerificationReport::new("associators", T::EXACT);

    let mut squares = IdentityCheck::new("J_n² = 1, j_n² = -1, I² = 1");
    for (u, x) in &us {
        let expected = Oct::scalar(T::from_int(u.square_sign().into()));
        compare(&mut squares, &(x * x), &expected, tol, || u.to_string());
    }

    let mut anti = IdentityCheck::new("xy = -yx for distinct imaginary units");
    for (i, (ux, x)) in us.iter().enumerate() {
        for (uy, y) in &us[i + 1..] {
            compare(&mut anti, &(x * y), &-(y * x), tol, || format!("({ux},{uy})"));
        }
    }

    let mut families = IdentityCheck::new("associator families");
    for (ua, a) in &us {
        for (ub, b) in &us {
            for (uc, c) in &us {
                if let Some(expected) = associator_family::<T>(*ua, *ub, *uc) {
                    compare(&mut families, &associator(a, b, c), &expected, tol, || {
                        format!("A({ua},{ub},{uc})")
                    });
                }
            }
        }
    }

    let mut table = IdentityCheck::new("associator table (families + antisymmetry, else 0)");
    let mut antisym = IdentityCheck::new("A(x,y,z) = -A(y,x,z) = -A(x,z,y)");
    let mut bridge = IdentityCheck::new("A(x,y,z) = ([[x,y],z] + [[y,z],x] + [[z,x],y])/3");
    for (ua, a) in &us {
        for (ub, b) in &us {
            for (uc, c) in &us {
                let name = || format!("({ua},{ub},{uc})");
                let assoc = associator(a, b, c);
                compare(&mut table, &assoc, &expected_associator::<T>(*ua, *ub, *uc), tol, name);

                let swap12 = -associator(b, a, c);
                let swap23 = -associator(a, c, b);
                let d = (&assoc - &swap12).max_abs().max((&assoc - &swap23).max_abs());
                let ok = (&assoc - &swap12).is_negligible(tol) && (&assoc - &swap23).is_negligible(tol);
                antisym.record(ok, d, || format!("{}: {assoc}, {swap12}, {swap23}", name()));

                let nested = &(&commutator(&commutator(a, b), c) + &commutator(&commutator(b, c), a))
                    + &commutator(&commutator(c, a), b);
                compare(&mut bridge, &assoc, &nested.scale(&T::third()), tol, name);
            }
        }
    }

    for c in [squares, anti, families, table, antisym, bridge] {
        report.push(c);
    }
    report
}

/// Entry-by-entry comparison of two tables (all 64 ordered pairs).
pub fn compare_tables(
    name: &str,
    actual: &StructureConstants,
    expected: &StructureConstants,
) -> IdentityCheck {
    let mut check = IdentityCheck::new(name);
    for (a, b, got) in actual.entries() {
        let want = expected.product(a, b);
        let ok = got == want;
        check.record(ok, if ok { 0.0 } else { 2.0 }, || {
            format!("{a}·{b}: got {got}, expected {want}")
        });
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::element::jacobiator;
    use crate::scalar::Rational;

    type Q = Oct<Rational>;

    #[test]
    fn moufang_sweep_is_clean() {
        let r = verify_moufang::<Rational>(0.0);
        assert_eq!(r.cases, 343 * 3 + 49 * 3);
        assert_eq!(r.failures, 0, "{r:#?}");
    }

    #[test]
    fn moufang_single_triples() {
        let (x, y, z) = (Q::unit(Unit::J1), Q::unit(Unit::J2), Q::unit(Unit::J3));
        assert_eq!((&x * &y) * (&z * &x), (&x * &(&y * &z)) * x.clone());
        let j = Q::unit(Unit::J1);
        assert_eq!((&j * &j) * (&j * &j), (&j * &(&j * &j)) * j.clone());
    }

    #[test]
    fn associator_sweep_is_clean() {
        let r = verify_associators::<Rational>(0.0);
        assert_eq!(r.failures, 0, "{r:#?}");
        // three families carry three indices, three carry two
        assert_eq!(r.check("associator families").unwrap().cases, 3 * 27 + 3 * 9);
        assert_eq!(r.check("xy = -yx for distinct imaginary units").unwrap().cases, 21);
        assert_eq!(r.check("A(x,y,z) = -A(y,x,z) = -A(x,z,y)").unwrap().cases, 343);
    }

    #[test]
    fn right_nested_commutator_sum_is_minus_associator() {
        // The right-nested form [x,[y,z]] + ... carries the opposite sign.
        for a in Unit::IMAGINARY {
            for b in Unit::IMAGINARY {
                for c in Unit::IMAGINARY {
                    let (x, y, z) = (Q::unit(a), Q::unit(b), Q::unit(c));
                    let s = &(&commutator(&x, &commutator(&y, &z))
                        + &commutator(&y, &commutator(&z, &x)))
                        + &commutator(&z, &commutator(&x, &y));
                    assert_eq!(s.scale(&Rational::third()), -associator(&x, &y, &z));
                }
            }
        }
    }

    #[test]
    fn associator_is_nonzero_on_exactly_168_triples() {
        let n = Unit::IMAGINARY
            .iter()
            .flat_map(|&a| Unit::IMAGINARY.iter().flat_map(move |&b| Unit::IMAGINARY.iter().map(move |&c| (a, b, c))))
            .filter(|&(a, b, c)| !associator(&Q::unit(a), &Q::unit(b), &Q::unit(c)).is_zero())
            .count();
        assert_eq!(n, 168);
    }

    #[test]
    fn malcev_three_element_relations_hold() {
        let r = verify_malcev::<f64>(1e-12);
        assert_eq!(r.check("(xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y").unwrap().failures, 0);
        assert_eq!(r.check("J(x,y,xz) = J(x,y,z)x").unwrap().failures, 0);
    }

    #[test]
    fn malcev_printed_multi_element_identities_do_not_hold() {
        // Characterizes the algebra: the printed 4- and 5-element identities
        // fail on a fixed set of unit tuples in the commutator algebra.
        let r = verify_malcev::<Rational>(0.0);
        assert_eq!(r.check("J(xy,z,w) + J(yz,x,w) + J(zx,y,w) = 0").unwrap().failures, 1008);
        assert_eq!(r.check("J(x,y,zw) = J(x,y,z)w + zJ(x,y,w)").unwrap().failures, 1008);
        let five = r
            .checks
            .iter()
            .find(|c| c.identity.starts_with("J(x,y,J(z,u,v))"))
            .unwrap();
        assert_eq!(five.cases, 16807);
        assert_eq!(five.failures, 4032);
    }

    #[test]
    fn sagle_four_element_identity_holds() {
        // J(wx,y,z) = wJ(x,y,z) + J(w,y,z)x - 2J(yz,w,x): the linearized Malcev
        // identity, confirming the commutator algebra is Malcev.
        let p = |a: &Q, b: &Q| commutator(a, b);
        let jac = |a: &Q, b: &Q, c: &Q| jacobiator_by(a, b, c, p);
        for a in Unit::IMAGINARY {
            for b in Unit::IMAGINARY {
                for c in Unit::IMAGINARY {
                    for d in Unit::IMAGINARY {
                        let (w, x, y, z) = (Q::unit(a), Q::unit(b), Q::unit(c), Q::unit(d));
                        let lhs = jac(&p(&w, &x), &y, &z);
                        let rhs = &(&p(&w, &jac(&x, &y, &z)) + &p(&jac(&w, &y, &z), &x))
                            - &jac(&p(&y, &z), &w, &x).scale(&Rational::from_int(2));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn jacobiator_matches_associator_on_non_associative_triples() {
        for a in Unit::IMAGINARY {
            for b in Unit::IMAGINARY {
                for c in Unit::IMAGINARY {
                    let (x, y, z) = (Q::unit(a), Q::unit(b), Q::unit(c));
                    let assoc = associator(&x, &y, &z);
                    if !assoc.is_zero() {
                        assert_eq!(jacobiator(&x, &y, &z), assoc);
                    }
                }
            }
        }
    }
}
