//! Braid words for the braid, flat, virtual and flat virtual braid groups.

mod corpus;
mod parse;
mod relations;

pub use corpus::{parse_corpus, word_file_lines, CorpusEntry};
pub use relations::{relation_table, Relation, RelationTable, RelationTag, TagFilter};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error: bad token {0:?}")]
    Syntax(String),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("virtual generator {0:?} is not allowed in {1}")]
    KindMismatch(String, GroupKind),
    #[error("strand count must be at least 2, got {0}")]
    InvalidStrandCount(usize),
    #[error("word on {found} strands where {expected} were expected")]
    StrandMismatch { expected: usize, found: usize },
    #[error("unknown group kind {0:?}")]
    UnknownGroup(String),
    #[error("malformed corpus: {0}")]
    Corpus(String),
}

/// Which group a word lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    /// Classical braid group.
    #[serde(rename = "B")]
    Braid,
    /// Flat braid group: classical generators are involutions.
    #[serde(rename = "FB")]
    FlatBraid,
    /// Virtual braid group.
    #[serde(rename = "VB")]
    Virtual,
    /// Flat virtual braid group.
    #[serde(rename = "FVB")]
    FlatVirtual,
}

impl GroupKind {
    pub const ALL: [GroupKind; 4] = [
        GroupKind::Braid,
        GroupKind::FlatBraid,
        GroupKind::Virtual,
        GroupKind::FlatVirtual,
    ];

    pub fn is_flat(self) -> bool {
        matches!(self, GroupKind::FlatBraid | GroupKind::FlatVirtual)
    }

    pub fn has_virtual(self) -> bool {
        matches!(self, GroupKind::Virtual | GroupKind::FlatVirtual)
    }

    /// Number of coordinates the representation acts on.
    pub fn arity(self, strands: usize) -> usize {
        if self.is_flat() {
            strands
        } else {
            2 * strands
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GroupKind::Braid => "B",
            GroupKind::FlatBraid => "FB",
            GroupKind::Virtual => "VB",
            GroupKind::FlatVirtual => "FVB",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GroupKind {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "b" => Ok(GroupKind::Braid),
            "fb" => Ok(GroupKind::FlatBraid),
            "vb" => Ok(GroupKind::Virtual),
            "fvb" => Ok(GroupKind::FlatVirtual),
            _ => Err(WordError::UnknownGroup(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    Classical,
    Virtual,
}

/// `σ_i^{±1}` or `ρ_i`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub index: usize,
    pub inverse: bool,
}

impl Generator {
    pub fn sigma(index: usize) -> Self {
        Generator {
            kind: GeneratorKind::Classical,
            index,
            inverse: false,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Generator {
            kind: GeneratorKind::Classical,
            index,
            inverse: true,
        }
    }

    pub fn rho(index: usize) -> Self {
        Generator {
            kind: GeneratorKind::Virtual,
            index,
            inverse: false,
        }
    }

    pub fn is_virtual(&self) -> bool {
        self.kind == GeneratorKind::Virtual
    }

    pub fn power(&self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverse(&self) -> Self {
        match self.kind {
            GeneratorKind::Virtual => *self,
            GeneratorKind::Classical => Generator {
                inverse: !self.inverse,
                ..*self
            },
        }
    }

    /// Canonical form inside `group`: `ρ` is always positive, and classical
    /// generators are positive in flat groups.
    pub fn normalize(self, group: GroupKind) -> Self {
        match self.kind {
            GeneratorKind::Virtual => Generator { inverse: false, ..self },
            GeneratorKind::Classical if group.is_flat() => Generator { inverse: false, ..self },
            GeneratorKind::Classical => self,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.inverse) {
            (GeneratorKind::Virtual, _) => write!(f, "r{}", self.index),
            (GeneratorKind::Classical, false) => write!(f, "s{}", self.index),
            (GeneratorKind::Classical, true) => write!(f, "S{}", self.index),
        }
    }
}

/// A word in one of the four groups on a fixed number of strands.
///
/// Letters are stored in canonical form for the group (see
/// [`Generator::normalize`]), so a word built through [`BraidWord::new`] is
/// always valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    group: GroupKind,
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn new(
        group: GroupKind,
        strands: usize,
        letters: impl IntoIterator<Item = Generator>,
    ) -> Result<Self, WordError> {
        if strands < 2 {
            return Err(WordError::InvalidStrandCount(strands));
        }
        let mut out = Vec::new();
        for g in letters {
            if g.index == 0 || g.index >= strands {
                return Err(WordError::IndexOutOfRange {
                    index: g.index,
                    strands,
                });
            }
            if g.is_virtual() && !group.has_virtual() {
                return Err(WordError::KindMismatch(g.to_string(), group));
            }
            out.push(g.normalize(group));
        }
        Ok(BraidWord {
            strands,
            group,
            letters: out,
        })
    }

    pub fn empty(group: GroupKind, strands: usize) -> Result<Self, WordError> {
        Self::new(group, strands, [])
    }

    /// Parses the ASCII/unicode word grammar, see [`parse_word`].
    pub fn parse(text: &str, strands: usize, group: GroupKind) -> Result<Self, WordError> {
        parse::parse_word(text, strands, group)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group inverse: reversed word with inverted letters.
    pub fn inverse(&self) -> Self {
        BraidWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|g| g.inverse().normalize(self.group))
                .collect(),
            ..self.clone()
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self, WordError> {
        if other.group != self.group {
            return Err(WordError::KindMismatch(other.to_string(), self.group));
        }
        if other.strands != self.strands {
            return Err(WordError::StrandMismatch {
                expected: self.strands,
                found: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            letters,
            ..self.clone()
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        BraidWord {
            letters: self.letters.iter().copied().cycle().take(self.len() * k).collect(),
            ..self.clone()
        }
    }

    /// Cancels adjacent `σσ⁻¹`, `σ⁻¹σ`, `ρρ` and, in flat groups, `σσ`,
    /// until no such pair remains.
    pub fn free_reduce(&self) -> Self {
        let flat = self.group.is_flat();
        let cancels = |a: &Generator, b: &Generator| {
            a.kind == b.kind
                && a.index == b.index
                && match a.kind {
                    GeneratorKind::Virtual => true,
                    GeneratorKind::Classical => flat || a.inverse != b.inverse,
                }
        };
        // a single stack pass reaches the fixed point
        let mut stack: Vec<Generator> = Vec::with_capacity(self.len());
        for g in &self.letters {
            if stack.last().is_some_and(|top| cancels(top, g)) {
                stack.pop();
            } else {
                stack.push(*g);
            }
        }
        BraidWord {
            letters: stack,
            ..self.clone()
        }
    }
}

/// Parses a word: whitespace-separated tokens `s3` (σ₃), `s3'` or `S3`
/// (σ₃⁻¹), `r2` (ρ₂); unicode `σ3`, `σ3^-1`, `ρ2` are also accepted.
pub fn parse_word(text: &str, strands: usize, group: GroupKind) -> Result<BraidWord, WordError> {
    parse::parse_word(text, strands, group)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize, g: GroupKind) -> BraidWord {
        BraidWord::parse(text, n, g).unwrap()
    }

    #[test]
    fn inverse_pair_cancels() {
        assert!(w("s1 S1", 2, GroupKind::Virtual).free_reduce().is_empty());
        assert!(w("S1 s1", 2, GroupKind::Braid).free_reduce().is_empty());
    }

    #[test]
    fn virtual_involution_cancels() {
        let r = w("r2 r2 s1", 3, GroupKind::Virtual).free_reduce();
        assert_eq!(r.to_string(), "s1");
    }

    #[test]
    fn flat_square_cancels_only_in_flat_groups() {
        assert!(w("s1 s1", 2, GroupKind::FlatBraid).free_reduce().is_empty());
        assert_eq!(w("s1 s1", 2, GroupKind::Braid).free_reduce().len(), 2);
    }

    #[test]
    fn nested_cancellation() {
        let r = w("s1 s2 r1 r1 S2 S1 s2", 3, GroupKind::Virtual).free_reduce();
        assert_eq!(r.to_string(), "s2");
    }

    #[test]
    fn inverse_word() {
        let x = w("s1 r2 S2", 3, GroupKind::Virtual);
        assert_eq!(x.inverse().to_string(), "s2 r2 S1");
        assert!(x.concat(&x.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn group_kind_parsing() {
        assert_eq!("fvb".parse::<GroupKind>().unwrap(), GroupKind::FlatVirtual);
        assert_eq!("VB".parse::<GroupKind>().unwrap(), GroupKind::Virtual);
        assert!("xb".parse::<GroupKind>().is_err());
    }
}
