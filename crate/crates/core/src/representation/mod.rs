//! The representations of B_n, VB_n, FB_n and FVB_n by birational maps,
//! evaluated at numeric or symbolic points.
//!
//! A word acts by composition with the rightmost letter applied first, so
//! `F(g₁ g₂ ⋯ g_k) = F(g₁) ∘ F(g₂) ∘ ⋯ ∘ F(g_k)`.

mod invariant;
mod kernels;

pub use invariant::{candidate_bases, invariant, invariant_with, InvariantReport, MAX_BASE_RETRIES};
pub use kernels::{LocalOperators, Standard};

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Rational, RationalFunction, Scalar};
use crate::braid::{BraidWord, Generator, GeneratorKind, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// `letter` is the 1-based position of the offending letter in the word.
    #[error("singular point reached at letter {letter} ({generator})")]
    SingularPoint { letter: usize, generator: String },
    #[error("point has {found} coordinates, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("no nonsingular base point found after {0} retries")]
    Exhausted(usize),
    #[error("bad point: {0}")]
    BadPoint(String),
}

/// A tuple of field values the operators act on.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<F> {
    coords: Vec<F>,
}

impl<F: Scalar> Point<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Point { coords }
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F> {
        self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn constant(value: F, arity: usize) -> Self {
        Point {
            coords: vec![value; arity],
        }
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.arity() == other.arity() && self.coords.iter().zip(&other.coords).all(|(a, b)| a.equals(b))
    }

    /// 1-based index of the first coordinate where the two points differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coords
            .iter()
            .zip(&other.coords)
            .position(|(a, b)| !a.equals(b))
            .map(|i| i + 1)
    }
}

impl Point<RationalFunction> {
    /// `(z₁, …, z_m)` as independent variables.
    pub fn symbolic(arity: usize) -> Self {
        Point::new((1..=arity as u32).map(RationalFunction::var).collect())
    }
}

impl fmt::Display for Point<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Comma-separated `p/q` values, e.g. `"1,2,2,1"`.
impl FromStr for Point<Rational> {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<Rational>()
                    .map_err(|_| EvalError::BadPoint(format!("bad value {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Point::new)
    }
}

impl Serialize for Point<Rational> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(Point::new)
    }
}

/// Which local operator a letter becomes and which coordinates it touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    S,
    SInv,
    T,
    R,
    V,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorAction {
    pub group: GroupKind,
    pub generator: Generator,
    pub kernel: Kernel,
    /// 0-based coordinate range of the window.
    pub window: Range<usize>,
}

impl GeneratorAction {
    /// `σ_i^{±1} ↦ S_i^{±1}`, `ρ_i ↦ T_i` on coordinates `2i-1..=2i+2` for
    /// B/VB; `σ_i ↦ R_i`, `ρ_i ↦ V_i` on `(i, i+1)` for FB/FVB.
    pub fn new(group: GroupKind, generator: Generator) -> Self {
        let i = generator.index;
        let generator = generator.normalize(group);
        let (kernel, window) = if group.is_flat() {
            let k = match generator.kind {
                GeneratorKind::Classical => Kernel::R,
                GeneratorKind::Virtual => Kernel::V,
            };
            (k, i - 1..i + 1)
        } else {
            let k = match (generator.kind, generator.inverse) {
                (GeneratorKind::Virtual, _) => Kernel::T,
                (GeneratorKind::Classical, false) => Kernel::S,
                (GeneratorKind::Classical, true) => Kernel::SInv,
            };
            (k, 2 * i - 2..2 * i + 2)
        };
        GeneratorAction {
            group,
            generator,
            kernel,
            window,
        }
    }
}

/// Applies one generator's operator to its window, leaving the other
/// coordinates untouched.
pub fn apply_generator<F: Scalar, O: LocalOperators>(
    ops: &O,
    point: &Point<F>,
    action: &GeneratorAction,
) -> Result<Point<F>, EvalError> {
    if action.window.end > point.arity() {
        return Err(EvalError::ArityMismatch {
            expected: action.window.end,
            found: point.arity(),
        });
    }
    let mut coords = point.coords.clone();
    apply_in_place(ops, &mut coords, action).map_err(|_| EvalError::SingularPoint {
        letter: 0,
        generator: action.generator.to_string(),
    })?;
    Ok(Point { coords })
}

fn apply_in_place<F: Scalar, O: LocalOperators>(
    ops: &O,
    coords: &mut [F],
    action: &GeneratorAction,
) -> Result<(), AlgebraError> {
    let w = &mut coords[action.window.clone()];
    let out = match action.kernel {
        Kernel::S => ops.s(w)?,
        Kernel::SInv => ops.s_inv(w)?,
        Kernel::T => ops.t(w)?,
        Kernel::R => ops.r(w)?,
        Kernel::V => ops.v(w)?,
    };
    for (slot, v) in w.iter_mut().zip(out) {
        *slot = v;
    }
    Ok(())
}

/// Evaluates `word` at `point` with the standard kernels.
pub fn apply_word<F: Scalar>(word: &BraidWord, point: &Point<F>) -> Result<Point<F>, EvalError> {
    apply_word_with(&Standard, word, point)
}

/// Evaluates `word` at `point`, rightmost letter first.
pub fn apply_word_with<F: Scalar, O: LocalOperators>(
    ops: &O,
    word: &BraidWord,
    point: &Point<F>,
) -> Result<Point<F>, EvalError> {
    let expected = word.group().arity(word.strands());
    if point.arity() != expected {
        return Err(EvalError::ArityMismatch {
            expected,
            found: point.arity(),
        });
    }
    let mut coords = point.coords.clone();
    for (pos, g) in word.letters().iter().enumerate().rev() {
        let action = GeneratorAction::new(word.group(), *g);
        apply_in_place(ops, &mut coords, &action).map_err(|_| EvalError::SingularPoint {
            letter: pos + 1,
            generator: g.to_string(),
        })?;
    }
    Ok(Point { coords })
}

/// Base point used when none is given: for B/VB the pairs alternate
/// `(1,2), (2,1), (1,2), …`; for FB/FVB it is `(1, 2, 2, …, 2)`.
pub fn default_base(group: GroupKind, strands: usize) -> Point<Rational> {
    let (one, two) = (Rational::from(1), Rational::from(2));
    let coords = if group.is_flat() {
        (0..strands)
            .map(|k| if k == 0 { one.clone() } else { two.clone() })
            .collect()
    } else {
        (0..strands)
            .flat_map(|k| {
                if k % 2 == 0 {
                    [one.clone(), two.clone()]
                } else {
                    [two.clone(), one.clone()]
                }
            })
            .collect()
    };
    Point::new(coords)
}

/// Whether every coordinate of the symbolic image of `word` is a nonzero
/// rational function (numerator and denominator both nonzero).
pub fn image_is_nondegenerate(word: &BraidWord) -> Result<bool, EvalError> {
    let p = Point::symbolic(word.group().arity(word.strands()));
    let img = apply_word(word, &p)?;
    Ok(img
        .coords()
        .iter()
        .all(|c| !c.numer().is_zero() && !c.denom().is_zero()))
}
