//! Symbolic verification of group relations: equality of two words as
//! birational maps, the defining presentations, and the forbidden relations.

mod audit;
mod forbidden;

pub use audit::{display_audit, AuditEntry, TranscribedDisplay, DISPLAYS};
pub use forbidden::{check_factorization, check_forbidden, factorization_identity, FactorizationIdentity, Variant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::RationalFunction;
use crate::braid::{relation_table, BraidWord, GroupKind, RelationTag, TagFilter, WordError};
use crate::representation::{apply_word, EvalError, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("combined word length {len} exceeds the symbolic limit {max}")]
    LengthLimitExceeded { len: usize, max: usize },
    #[error("{n} strands exceeds the symbolic limit {max}")]
    StrandLimitExceeded { n: usize, max: usize },
    #[error("forbidden-relation index {i} out of range for {n} strands")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("forbidden relations need virtual generators; {0} has none")]
    NoVirtualGenerators(GroupKind),
}

/// Cost guards for symbolic comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Limits {
    pub max_n: usize,
    pub max_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 6, max_len: 12 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// 1-based coordinate where the images differ.
    pub coordinate: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceResult {
    pub var: String,
    pub value: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationVerdict {
    pub tag: Option<RelationTag>,
    pub relation: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slices: Option<Vec<SliceResult>>,
}

impl RelationVerdict {
    /// For a forbidden relation: refuted generically, and equal on every
    /// slice that was checked.
    pub fn refuted_as_expected(&self) -> bool {
        !self.holds && self.slices.iter().flatten().all(|s| s.equal)
    }
}

fn side(w: &BraidWord) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.to_string()
    }
}

/// Componentwise comparison; the witness is the first unequal coordinate.
pub(crate) fn compare_points(a: &Point<RationalFunction>, b: &Point<RationalFunction>) -> Option<Witness> {
    a.first_difference(b).map(|k| Witness {
        coordinate: k,
        lhs: a.coords()[k - 1].to_string(),
        rhs: b.coords()[k - 1].to_string(),
    })
}

fn same_space(lhs: &BraidWord, rhs: &BraidWord) -> Result<(), CheckError> {
    if lhs.group() != rhs.group() {
        return Err(WordError::KindMismatch(rhs.to_string(), lhs.group()).into());
    }
    if lhs.strands() != rhs.strands() {
        return Err(WordError::StrandMismatch {
            expected: lhs.strands(),
            found: rhs.strands(),
        }
        .into());
    }
    Ok(())
}

fn verdict(tag: Option<RelationTag>, lhs: &BraidWord, rhs: &BraidWord) -> Result<RelationVerdict, CheckError> {
    same_space(lhs, rhs)?;
    let p = Point::symbolic(lhs.group().arity(lhs.strands()));
    let (a, b) = (apply_word(lhs, &p)?, apply_word(rhs, &p)?);
    let witness = compare_points(&a, &b);
    Ok(RelationVerdict {
        tag,
        relation: format!("{} = {}", side(lhs), side(rhs)),
        holds: witness.is_none(),
        witness,
        slices: None,
    })
}

/// Applies both words to independent variables and compares the images.
pub fn verify_relation(tag: RelationTag, lhs: &BraidWord, rhs: &BraidWord) -> Result<RelationVerdict, CheckError> {
    verdict(Some(tag), lhs, rhs)
}

/// Every defining relation of `group` on `n` strands, checked in parallel;
/// verdicts come back in table order.
pub fn verify_presentation(group: GroupKind, n: usize, limits: Limits) -> Result<Vec<RelationVerdict>, CheckError> {
    if n < 2 {
        return Err(WordError::InvalidStrandCount(n).into());
    }
    if n > limits.max_n {
        return Err(CheckError::StrandLimitExceeded { n, max: limits.max_n });
    }
    relation_table(group, n, TagFilter::Defining)
        .entries
        .par_iter()
        .map(|r| verify_relation(r.tag, &r.lhs, &r.rhs))
        .collect()
}

/// Decides whether two words give the same birational map.
pub fn compare_operators(w1: &BraidWord, w2: &BraidWord, limits: Limits) -> Result<RelationVerdict, CheckError> {
    same_space(w1, w2)?;
    if w1.strands() > limits.max_n {
        return Err(CheckError::StrandLimitExceeded {
            n: w1.strands(),
            max: limits.max_n,
        });
    }
    let len = w1.len() + w2.len();
    if len > limits.max_len {
        return Err(CheckError::LengthLimitExceeded {
            len,
            max: limits.max_len,
        });
    }
    verdict(None, w1, w2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize, g: GroupKind) -> BraidWord {
        BraidWord::parse(text, n, g).unwrap()
    }

    #[test]
    fn braid_relation_and_mixed_relation() {
        let v = verify_relation(
            RelationTag::Braid,
            &w("s1 s2 s1", 3, GroupKind::Virtual),
            &w("s2 s1 s2", 3, GroupKind::Virtual),
        )
        .unwrap();
        assert!(v.holds && v.witness.is_none());
        let v = verify_relation(
            RelationTag::MixedBraid,
            &w("r1 r2 s1", 3, GroupKind::Virtual),
            &w("s2 r1 r2", 3, GroupKind::Virtual),
        )
        .unwrap();
        assert!(v.holds);
        let v = verify_relation(
            RelationTag::VirtualBraid,
            &w("r1 r2 r1", 3, GroupKind::FlatVirtual),
            &w("r2 r1 r2", 3, GroupKind::FlatVirtual),
        )
        .unwrap();
        assert!(v.holds);
    }

    #[test]
    fn mixed_braid_image_is_shifted_s() {
        let p = Point::symbolic(6);
        let img = apply_word(&w("r1 r2 s1", 3, GroupKind::Virtual), &p).unwrap();
        let s = crate::representation::LocalOperators::s(&crate::representation::Standard, &p.coords()[..4]).unwrap();
        assert!(img.coords()[0].equals(&p.coords()[4]));
        assert!(img.coords()[1].equals(&p.coords()[5]));
        for (got, want) in img.coords()[2..].iter().zip(&s) {
            assert!(got.equals(want));
        }
    }

    #[test]
    fn presentations_small() {
        let v = verify_presentation(GroupKind::Virtual, 3, Limits::default()).unwrap();
        assert_eq!(v.len(), 5);
        assert!(v.iter().all(|r| r.holds));
        assert!(verify_presentation(GroupKind::Braid, 2, Limits::default())
            .unwrap()
            .is_empty());
        let fb = verify_presentation(GroupKind::FlatBraid, 4, Limits::default()).unwrap();
        assert!(fb.iter().any(|r| r.relation == "s1 s3 = s3 s1" && r.holds));
        assert!(fb.iter().all(|r| r.holds));
        assert_eq!(
            verify_presentation(GroupKind::Braid, 7, Limits::default()).unwrap_err(),
            CheckError::StrandLimitExceeded { n: 7, max: 6 }
        );
    }

    #[test]
    fn compare_known_words() {
        let lim = Limits::default();
        let e2 = BraidWord::empty(GroupKind::Virtual, 2).unwrap();
        assert!(
            compare_operators(&w("s1 S1", 2, GroupKind::Virtual), &e2, lim)
                .unwrap()
                .holds
        );
        let v = compare_operators(&w("s1 r1 s1", 2, GroupKind::Virtual), &e2, lim).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().coordinate, 1);
        let v = compare_operators(
            &w("r1 s2 s1", 3, GroupKind::Virtual),
            &w("s2 s1 r2", 3, GroupKind::Virtual),
            lim,
        )
        .unwrap();
        assert!(!v.holds);
        let long = w(&["s1"; 13].join(" "), 2, GroupKind::Virtual);
        assert_eq!(
            compare_operators(&long, &e2, lim).unwrap_err(),
            CheckError::LengthLimitExceeded { len: 13, max: 12 }
        );
        assert!(compare_operators(&long, &e2, Limits { max_n: 6, max_len: 20 }).is_ok());
        assert!(compare_operators(&e2, &BraidWord::empty(GroupKind::Virtual, 3).unwrap(), lim).is_err());
    }

    #[test]
    fn verdict_json() {
        let e2 = BraidWord::empty(GroupKind::Virtual, 2).unwrap();
        let v = compare_operators(&w("s1 S1", 2, GroupKind::Virtual), &e2, Limits::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"tag":null,"relation":"s1 S1 = 1","holds":true}"#
        );
    }
}
