//! Explicit operators on the 7-vertex quiver (two strands): `Φ` and its
//! inverse `Ψ` in x-variables, `φ` and its inverse `ψ` in y-variables.

use super::ClusterError;
use crate::algebra::{AlgebraError, Scalar};

fn check_len<F>(v: &[F]) -> Result<(), ClusterError> {
    if v.len() != 7 {
        return Err(ClusterError::LengthMismatch {
            expected: 7,
            found: v.len(),
        });
    }
    Ok(())
}

/// Product of the listed 1-based variables (repeat an index for a power).
fn mono<F: Scalar>(v: &[F], idx: &[usize]) -> F {
    idx.iter().fold(F::one(), |acc, &i| acc.mul(&v[i - 1]))
}

/// Sum of monomials with unit coefficients; `&[]` is the constant 1.
fn sum<F: Scalar>(v: &[F], terms: &[&[usize]]) -> F {
    terms.iter().fold(F::zero(), |acc, t| acc.add(&mono(v, t)))
}

fn div<F: Scalar>(a: F, b: F) -> Result<F, ClusterError> {
    a.div(&b)
        .map_err(|_| ClusterError::Algebra(AlgebraError::SingularPoint))
}

/// `Φ` on `(x₁, …, x₇)`.
///
/// The fifth component is `(x₂x₆x₇ + x₃x₄x₅ + x₃x₅x₇)/(x₄x₆)`; this is the
/// form for which `Ψ` is a two-sided inverse.
pub fn phi_n2<F: Scalar>(x: &[F]) -> Result<Vec<F>, ClusterError> {
    check_len(x)?;
    let c = |i: usize| x[i - 1].clone();
    Ok(vec![
        c(1),
        c(5),
        div(sum(x, &[&[1, 3, 5], &[3, 4, 5], &[1, 2, 6]]), mono(x, &[2, 4]))?,
        div(
            sum(
                x,
                &[
                    &[1, 3, 4, 5],
                    &[3, 4, 4, 5],
                    &[1, 3, 5, 7],
                    &[3, 4, 5, 7],
                    &[1, 2, 6, 7],
                ],
            ),
            mono(x, &[2, 4, 6]),
        )?,
        div(sum(x, &[&[2, 6, 7], &[3, 4, 5], &[3, 5, 7]]), mono(x, &[4, 6]))?,
        c(3),
        c(7),
    ])
}

/// `Ψ = Φ⁻¹`.
pub fn psi_n2<F: Scalar>(x: &[F]) -> Result<Vec<F>, ClusterError> {
    check_len(x)?;
    let c = |i: usize| x[i - 1].clone();
    Ok(vec![
        c(1),
        div(sum(x, &[&[1, 3, 5], &[1, 2, 6], &[2, 4, 6]]), mono(x, &[3, 4]))?,
        c(6),
        div(
            sum(
                x,
                &[
                    &[1, 2, 4, 6],
                    &[2, 4, 4, 6],
                    &[1, 3, 5, 7],
                    &[1, 2, 6, 7],
                    &[2, 4, 6, 7],
                ],
            ),
            mono(x, &[3, 4, 5]),
        )?,
        c(2),
        div(sum(x, &[&[2, 4, 6], &[3, 5, 7], &[2, 6, 7]]), mono(x, &[4, 5]))?,
        c(7),
    ])
}

/// `φ` on `(y₁, …, y₇)`.
///
/// The third component is `(1 + y₂ + y₆ + y₂y₆ + y₂y₄y₆)/(y₂y₄)`, sharing its
/// numerator with components 2, 5 and 6; with it `ψ` is a two-sided inverse.
pub fn phi_y_n2<F: Scalar>(y: &[F]) -> Result<Vec<F>, ClusterError> {
    check_len(y)?;
    let n = || sum(y, &[&[], &[2], &[6], &[2, 6], &[2, 4, 6]]);
    let left = sum(y, &[&[], &[2], &[2, 4]]);
    let right = sum(y, &[&[], &[6], &[4, 6]]);
    Ok(vec![
        y[0].mul(&left),
        div(mono(y, &[2, 4, 5, 6]), n())?,
        div(n(), mono(y, &[2, 4]))?,
        div(y[3].clone(), left.mul(&right))?,
        div(n(), mono(y, &[4, 6]))?,
        div(mono(y, &[2, 3, 4, 6]), n())?,
        right.mul(&y[6]),
    ])
}

/// `ψ = φ⁻¹`.
pub fn psi_y_n2<F: Scalar>(y: &[F]) -> Result<Vec<F>, ClusterError> {
    check_len(y)?;
    let e = || sum(y, &[&[], &[4], &[3, 4], &[4, 5], &[3, 4, 5]]);
    let left = sum(y, &[&[], &[4], &[3, 4]]);
    let right = sum(y, &[&[], &[4], &[4, 5]]);
    Ok(vec![
        div(mono(y, &[1, 3, 4]), left.clone())?,
        div(y[4].clone(), e())?,
        e().mul(&y[5]),
        div(left.mul(&right), mono(y, &[3, 4, 5]))?,
        y[1].mul(&e()),
        div(y[2].clone(), e())?,
        div(mono(y, &[4, 5, 7]), right)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_expression, Rational, RationalFunction};
    use crate::cluster::{build_quiver, Seed};

    fn vars() -> Vec<RationalFunction> {
        (1..=7).map(RationalFunction::var).collect()
    }

    fn same(a: &[RationalFunction], b: &[RationalFunction]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(p, q)| p.equals(q))
    }

    fn e(s: &str) -> RationalFunction {
        parse_expression(s).unwrap()
    }

    #[test]
    fn phi_psi_are_inverse() {
        let x = vars();
        assert!(same(&psi_n2(&phi_n2(&x).unwrap()).unwrap(), &x));
        assert!(same(&phi_n2(&psi_n2(&x).unwrap()).unwrap(), &x));
    }

    #[test]
    fn phi_fixed_components_and_unit_point() {
        let x = vars();
        let p = phi_n2(&x).unwrap();
        for (i, j) in [(0, 0), (1, 4), (5, 2), (6, 6)] {
            assert!(p[i].equals(&x[j]));
        }
        let ones = vec![Rational::one(); 7];
        let img: Vec<String> = phi_n2(&ones).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(img, ["1", "1", "3", "5", "3", "1", "1"]);
    }

    #[test]
    fn y_operators_are_inverse() {
        let y = vars();
        assert!(same(&psi_y_n2(&phi_y_n2(&y).unwrap()).unwrap(), &y));
        assert!(same(&phi_y_n2(&psi_y_n2(&y).unwrap()).unwrap(), &y));
    }

    fn slice(v: &mut [RationalFunction]) {
        for i in [0, 3, 6] {
            v[i] = RationalFunction::constant(Rational::from(-1));
        }
    }

    #[test]
    fn minus_one_slice_is_preserved() {
        let mut y = vars();
        slice(&mut y);
        let m1 = RationalFunction::constant(Rational::from(-1));
        for img in [phi_y_n2(&y).unwrap(), psi_y_n2(&y).unwrap()] {
            for i in [0, 3, 6] {
                assert!(img[i].equals(&m1));
            }
        }
    }

    #[test]
    fn slice_restricts_to_the_local_operator() {
        // S(z1..z4) = (-z1z3z4/D, -D/z1, -D/z4, -z1z2z4/D), D = 1 + z1 + z4,
        // under (z1, z2, z3, z4) = (y2, y3, y5, y6)
        let mut y = vars();
        slice(&mut y);
        let img = phi_y_n2(&y).unwrap();
        let want = [
            "-y2*y5*y6/(1+y2+y6)",
            "-(1+y2+y6)/y2",
            "-(1+y2+y6)/y6",
            "-y2*y3*y6/(1+y2+y6)",
        ];
        for (k, w) in [1, 2, 4, 5].into_iter().zip(want) {
            assert!(img[k].equals(&e(w)), "component {}", k + 1);
        }
        // ψ there is S⁻¹ = (-z3/E, -E z4, -z1 E, -z2/E), E = z2 + z3 + z2z3
        let img = psi_y_n2(&y).unwrap();
        let want = [
            "-y5/(y3+y5+y3*y5)",
            "-(y3+y5+y3*y5)*y6",
            "-y2*(y3+y5+y3*y5)",
            "-y3/(y3+y5+y3*y5)",
        ];
        for (k, w) in [1, 2, 4, 5].into_iter().zip(want) {
            assert!(img[k].equals(&e(w)), "component {}", k + 1);
        }
    }

    #[test]
    fn singular_points() {
        let zeros = vec![Rational::zero(); 7];
        assert_eq!(
            phi_n2(&zeros).unwrap_err(),
            ClusterError::Algebra(AlgebraError::SingularPoint)
        );
        assert!(matches!(phi_n2(&zeros[..3]), Err(ClusterError::LengthMismatch { .. })));
    }

    /// The generic mutation machinery reproduces Ψ up to relabelling
    /// vertices: mutating the quiver at 3, 4, 5, 3 yields Ψ's seven
    /// components as a multiset.
    #[test]
    fn mutation_sequence_reaches_psi() {
        let x = vars();
        let seed = Seed::new(x.clone(), build_quiver(2).unwrap()).unwrap();
        let target = psi_n2(&x).unwrap();
        for script in [[3, 4, 5, 3], [4, 3, 5, 4], [4, 5, 3, 4], [5, 4, 3, 5]] {
            let got = seed.mutate_sequence(&script).unwrap();
            let mut unused: Vec<&RationalFunction> = got.x().iter().collect();
            for t in &target {
                let pos = unused
                    .iter()
                    .position(|g| g.equals(t))
                    .unwrap_or_else(|| panic!("{script:?}: missing {t}"));
                unused.swap_remove(pos);
            }
        }
    }
}
