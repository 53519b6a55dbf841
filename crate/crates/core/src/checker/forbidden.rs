use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{compare_points, CheckError, RelationVerdict, SliceResult};
use crate::algebra::{Polynomial, Rational, RationalFunction};
use crate::braid::{BraidWord, Generator, GroupKind, RelationTag};
use crate::representation::{apply_word, Point};

/// The two forbidden relations:
/// (a) `ρ_i σ_{i+1} σ_i = σ_{i+1} σ_i ρ_{i+1}`,
/// (b) `ρ_{i+1} σ_i σ_{i+1} = σ_i σ_{i+1} ρ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    A,
    B,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::A, Variant::B];

    pub fn tag(self) -> RelationTag {
        match self {
            Variant::A => RelationTag::ForbiddenA,
            Variant::B => RelationTag::ForbiddenB,
        }
    }

    fn words(self, group: GroupKind, n: usize, i: usize) -> (BraidWord, BraidWord) {
        let (s, r) = (Generator::sigma, Generator::rho);
        let (lhs, rhs) = match self {
            Variant::A => ([r(i), s(i + 1), s(i)], [s(i + 1), s(i), r(i + 1)]),
            Variant::B => ([r(i + 1), s(i), s(i + 1)], [s(i), s(i + 1), r(i)]),
        };
        let word = |g: [Generator; 3]| BraidWord::new(group, n, g).expect("index checked by caller");
        (word(lhs), word(rhs))
    }

    /// Coordinates whose value `-1` makes the two sides agree (B/VB point).
    pub fn slice_coordinates(self, i: usize) -> [usize; 3] {
        match self {
            Variant::A => [2 * i - 1, 2 * i + 2, 2 * i + 4],
            Variant::B => [2 * i - 1, 2 * i + 1, 2 * i + 4],
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "a",
            Variant::B => "b",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(Variant::A),
            "b" | "B" => Ok(Variant::B),
            _ => Err(format!("unknown variant {s:?}")),
        }
    }
}

/// Checks a forbidden relation at index `i` on `n` strands.
///
/// In VB the two sides must differ for independent variables, and must agree
/// on each of the three hyperplanes `z_j = -1` from
/// [`Variant::slice_coordinates`]; the verdict carries all of it. In FVB
/// only the generic refutation is checked.
pub fn check_forbidden(group: GroupKind, n: usize, i: usize, variant: Variant) -> Result<RelationVerdict, CheckError> {
    if !group.has_virtual() {
        return Err(CheckError::NoVirtualGenerators(group));
    }
    if i == 0 || i + 2 > n {
        return Err(CheckError::IndexOutOfRange { i, n });
    }
    let (lhs, rhs) = variant.words(group, n, i);
    let mut verdict = super::verdict(Some(variant.tag()), &lhs, &rhs)?;
    if !group.is_flat() {
        let minus_one = Rational::from(-1);
        let mut slices = Vec::new();
        for j in variant.slice_coordinates(i) {
            let mut coords = Point::symbolic(group.arity(n)).into_coords();
            coords[j - 1] = RationalFunction::constant(minus_one.clone());
            let p = Point::new(coords);
            let equal = compare_points(&apply_word(&lhs, &p)?, &apply_word(&rhs, &p)?).is_none();
            slices.push(SliceResult {
                var: format!("z{j}"),
                value: minus_one.to_string(),
                equal,
            });
        }
        verdict.slices = Some(slices);
    }
    Ok(verdict)
}

/// A claimed polynomial identity `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationIdentity {
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl FactorizationIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn one_plus(vars: &[u32]) -> Polynomial {
    vars.iter()
        .fold(Polynomial::one(), |acc, &v| acc.add(&Polynomial::var(v)))
}

/// The identity behind each forbidden relation's slice condition:
/// (a) `(1+z₁+z₄)(1+z₁+z₆) − z₁(1+z₁−z₄z₆) = (1+z₁)(1+z₄)(1+z₆)`,
/// (b) `(1+z₃+z₆)(1+z₁+z₆) − z₆(1−z₁z₃+z₆) = (1+z₁)(1+z₃)(1+z₆)`.
pub fn factorization_identity(variant: Variant) -> FactorizationIdentity {
    let z = Polynomial::var;
    match variant {
        Variant::A => {
            let inner = one_plus(&[1]).sub(&z(4).mul(&z(6)));
            FactorizationIdentity {
                lhs: one_plus(&[1, 4]).mul(&one_plus(&[1, 6])).sub(&z(1).mul(&inner)),
                rhs: one_plus(&[1]).mul(&one_plus(&[4])).mul(&one_plus(&[6])),
            }
        }
        Variant::B => {
            let inner = one_plus(&[6]).sub(&z(1).mul(&z(3)));
            FactorizationIdentity {
                lhs: one_plus(&[3, 6]).mul(&one_plus(&[1, 6])).sub(&z(6).mul(&inner)),
                rhs: one_plus(&[1]).mul(&one_plus(&[3])).mul(&one_plus(&[6])),
            }
        }
    }
}

pub fn check_factorization(variant: Variant) -> bool {
    factorization_identity(variant).holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    #[test]
    fn lemma_slices_n3() {
        for v in Variant::BOTH {
            let r = check_forbidden(GroupKind::Virtual, 3, 1, v).unwrap();
            assert!(!r.holds, "{v}");
            assert!(r.witness.is_some());
            let slices = r.slices.as_ref().unwrap();
            assert_eq!(slices.len(), 3);
            assert!(slices.iter().all(|s| s.equal), "{v}: {slices:?}");
            assert!(r.refuted_as_expected());
        }
        let a = check_forbidden(GroupKind::Virtual, 3, 1, Variant::A).unwrap();
        let vars: Vec<&str> = a.slices.as_ref().unwrap().iter().map(|s| s.var.as_str()).collect();
        assert_eq!(vars, ["z1", "z4", "z6"]);
    }

    #[test]
    fn slice_images_match_the_proof() {
        let (lhs, _) = Variant::A.words(GroupKind::Virtual, 3, 1);
        let mut c = Point::symbolic(6).into_coords();
        c[0] = RationalFunction::constant(Rational::from(-1));
        let img = apply_word(&lhs, &Point::new(c)).unwrap();
        let shown: Vec<String> = img.coords().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["z5", "z6", "z3", "z4", "-1", "z2"]);

        let (lhs, _) = Variant::B.words(GroupKind::Virtual, 3, 1);
        let mut c = Point::symbolic(6).into_coords();
        c[5] = RationalFunction::constant(Rational::from(-1));
        let img = apply_word(&lhs, &Point::new(c)).unwrap();
        let shown: Vec<String> = img.coords().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["z5", "-1", "z3", "z4", "z1", "z2"]);
    }

    #[test]
    fn flat_virtual_is_generic_only() {
        for v in Variant::BOTH {
            let r = check_forbidden(GroupKind::FlatVirtual, 3, 1, v).unwrap();
            assert!(!r.holds);
            assert!(r.slices.is_none());
        }
    }

    #[test]
    fn bad_index_and_group() {
        assert_eq!(
            check_forbidden(GroupKind::Virtual, 3, 2, Variant::A).unwrap_err(),
            CheckError::IndexOutOfRange { i: 2, n: 3 }
        );
        assert!(check_forbidden(GroupKind::Virtual, 3, 0, Variant::A).is_err());
        assert_eq!(
            check_forbidden(GroupKind::Braid, 3, 1, Variant::A).unwrap_err(),
            CheckError::NoVirtualGenerators(GroupKind::Braid)
        );
    }

    #[test]
    fn factorizations() {
        assert!(check_factorization(Variant::A));
        assert!(check_factorization(Variant::B));
        // changing the z1*z4*z6 coefficient breaks it
        let mut id = factorization_identity(Variant::A);
        let m = Monomial::from_pairs([(1, 1), (4, 1), (6, 1)]);
        id.lhs = id.lhs.add(&Polynomial::term(Rational::from(1), m));
        assert!(!id.holds());
    }

    #[test]
    fn factorization_against_expansion() {
        // (1+z1)(1+z4)(1+z6) expanded by hand: all eight squarefree monomials
        let id = factorization_identity(Variant::A);
        assert_eq!(id.rhs.len(), 8);
        assert!(id.rhs.terms().all(|(_, c)| c.is_one()));
    }
}
