use serde::{Deserialize, Serialize};

use super::{BraidWord, GroupKind, WordError};

/// One entry of a corpus file:
/// `{"name": "w1", "n": 2, "group": "VB", "word": "s1 r1 s1"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub n: usize,
    pub group: GroupKind,
    pub word: String,
}

impl CorpusEntry {
    pub fn parse(&self) -> Result<BraidWord, WordError> {
        BraidWord::parse(&self.word, self.n, self.group)
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, WordError> {
    serde_json::from_str(text).map_err(|e| WordError::Corpus(e.to_string()))
}

/// Lines of a word file with comments and blank lines dropped, paired with
/// their 1-based line numbers. A line holding only `1` is the empty word.
pub fn word_file_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, if body == "1" { "" } else { body }))
        })
        .collect()
}
