use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{apply_word_with, default_base, EvalError, LocalOperators, Point, Standard};
use crate::algebra::Rational;
use crate::braid::{BraidWord, GroupKind};

/// How many pseudo-random bases are tried after the requested one turns out
/// to be singular.
pub const MAX_BASE_RETRIES: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub word: String,
    pub group: GroupKind,
    pub n: usize,
    pub base: Point<Rational>,
    pub image: Point<Rational>,
    /// 0 when the requested base worked.
    pub base_retries: usize,
}

/// A nonzero rational `±p/q` with `1 ≤ p ≤ 9`, `1 ≤ q ≤ 5`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(1..=9);
    let q: i64 = rng.gen_range(1..=5);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new(sign * p, q).expect("q >= 1")
}

/// The image of `base` (or the default base) under `word`. A singular base
/// is replaced by up to [`MAX_BASE_RETRIES`] bases drawn from a ChaCha
/// stream seeded with `seed`; the report names the base actually used.
pub fn invariant(word: &BraidWord, base: Option<&Point<Rational>>, seed: u64) -> Result<InvariantReport, EvalError> {
    invariant_with(&Standard, word, base, seed)
}

/// `first`, then [`MAX_BASE_RETRIES`] pseudo-random bases of the same arity
/// drawn from a ChaCha stream seeded with `seed`.
pub fn candidate_bases(first: Point<Rational>, seed: u64) -> impl Iterator<Item = Point<Rational>> {
    let arity = first.arity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::once(first)
        .chain((0..MAX_BASE_RETRIES).map(move |_| Point::new((0..arity).map(|_| small_rational(&mut rng)).collect())))
}

pub fn invariant_with<O: LocalOperators>(
    ops: &O,
    word: &BraidWord,
    base: Option<&Point<Rational>>,
    seed: u64,
) -> Result<InvariantReport, EvalError> {
    let base = base
        .cloned()
        .unwrap_or_else(|| default_base(word.group(), word.strands()));
    let report = |base: Point<Rational>, image, retries| InvariantReport {
        word: word.to_string(),
        group: word.group(),
        n: word.strands(),
        base,
        image,
        base_retries: retries,
    };
    for (retry, candidate) in candidate_bases(base, seed).enumerate() {
        match apply_word_with(ops, word, &candidate) {
            Ok(image) => return Ok(report(candidate, image, retry)),
            Err(EvalError::SingularPoint { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Err(EvalError::Exhausted(MAX_BASE_RETRIES))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[&str]) -> Point<Rational> {
        Point::new(v.iter().map(|s| s.parse().unwrap()).collect())
    }

    #[test]
    fn empty_word_returns_base() {
        let w = BraidWord::empty(GroupKind::Virtual, 3).unwrap();
        let r = invariant(&w, None, 0).unwrap();
        assert_eq!(r.image, r.base);
        assert_eq!(r.base_retries, 0);
    }

    #[test]
    fn singular_base_is_retried_deterministically() {
        let w = BraidWord::parse("s1", 2, GroupKind::Virtual).unwrap();
        let bad = q(&["-2", "1", "1", "1"]);
        let a = invariant(&w, Some(&bad), 7).unwrap();
        let b = invariant(&w, Some(&bad), 7).unwrap();
        assert!(a.base_retries >= 1);
        assert_ne!(a.base, bad);
        assert_eq!(a, b);
    }

    #[test]
    fn report_json_shape() {
        let w = BraidWord::parse("s1 r1 s1", 2, GroupKind::Virtual).unwrap();
        let r = invariant(&w, None, 0).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"word":"s1 r1 s1","group":"VB","n":2,"base":["1","2","2","1"],"image":["-6/5","-5/3","-5/3","-6/5"],"base_retries":0}"#
        );
    }

    #[test]
    fn wrong_arity_is_not_retried() {
        let w = BraidWord::parse("s1", 2, GroupKind::Virtual).unwrap();
        assert!(matches!(
            invariant(&w, Some(&q(&["1", "2"])), 0),
            Err(EvalError::ArityMismatch { .. })
        ));
    }
}
