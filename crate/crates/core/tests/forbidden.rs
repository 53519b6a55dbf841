use braidcluster::algebra::Rational;
use braidcluster::braid::{BraidWord, GroupKind};
use braidcluster::checker::{check_forbidden, Variant};
use braidcluster::representation::{apply_word, EvalError, Point};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Variant (a) at n = 3, i = 1: the two sides agree at a point exactly
/// when (1+z1)(1+z4)(1+z6) = 0. Grid over z1, z4, z6; the other
/// coordinates are fixed generic values.
#[test]
fn agreement_iff_factor_vanishes() {
    let axis = ["-1", "2", "1/3", "-3/2", "5"].map(r);
    let lhs = BraidWord::parse("r1 s2 s1", 3, GroupKind::Virtual).unwrap();
    let rhs = BraidWord::parse("s2 s1 r2", 3, GroupKind::Virtual).unwrap();
    let minus_one = r("-1");
    let (mut checked, mut skipped, mut agreeing) = (0, 0, 0);
    for z1 in &axis {
        for z4 in &axis {
            for z6 in &axis {
                let p = Point::new(vec![z1.clone(), r("2"), r("3"), z4.clone(), r("5/7"), z6.clone()]);
                let (a, b) = match (apply_word(&lhs, &p), apply_word(&rhs, &p)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(EvalError::SingularPoint { .. }), _) | (_, Err(EvalError::SingularPoint { .. })) => {
                        skipped += 1;
                        continue;
                    }
                    (Err(e), _) | (_, Err(e)) => panic!("{e}"),
                };
                let on_slice = [z1, z4, z6].iter().any(|z| **z == minus_one);
                assert_eq!(a == b, on_slice, "at {p}: {a} vs {b}");
                checked += 1;
                agreeing += usize::from(on_slice);
            }
        }
    }
    assert_eq!(checked + skipped, 125);
    // 61 of the 125 grid points have some coordinate equal to -1
    assert!(agreeing > 0 && checked > 100, "checked {checked}, skipped {skipped}");
}

#[test]
fn refutation_is_stable_under_index_shift() {
    for n in 3..=5 {
        for i in 1..=n - 2 {
            for v in Variant::BOTH {
                let vb = check_forbidden(GroupKind::Virtual, n, i, v).unwrap();
                assert!(vb.refuted_as_expected(), "VB{n} i={i} ({v}): {vb:?}");
                assert_eq!(vb.slices.as_ref().unwrap().len(), 3);
                let fvb = check_forbidden(GroupKind::FlatVirtual, n, i, v).unwrap();
                assert!(!fvb.holds, "FVB{n} i={i} ({v})");
            }
        }
    }
}

#[test]
fn slice_variables_follow_the_index() {
    let r = check_forbidden(GroupKind::Virtual, 5, 2, Variant::B).unwrap();
    let vars: Vec<&str> = r.slices.as_ref().unwrap().iter().map(|s| s.var.as_str()).collect();
    assert_eq!(vars, ["z3", "z5", "z8"]);
}
