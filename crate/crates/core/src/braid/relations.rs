use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BraidWord, Generator, GroupKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationTag {
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
    Braid,
    /// `σ_i σ_j = σ_j σ_i`, `|i - j| >= 2`
    FarCommute,
    /// `ρ_i ρ_{i+1} ρ_i = ρ_{i+1} ρ_i ρ_{i+1}`
    VirtualBraid,
    /// `ρ_i ρ_j = ρ_j ρ_i`, `|i - j| >= 2`
    VirtualFarCommute,
    /// `ρ_i² = 1`
    VirtualInvolution,
    /// `σ_i ρ_j = ρ_j σ_i`, `|i - j| >= 2`
    MixedCommute,
    /// `ρ_i ρ_{i+1} σ_i = σ_{i+1} ρ_i ρ_{i+1}`
    MixedBraid,
    /// `σ_i² = 1`
    FlatInvolution,
    /// `ρ_i σ_{i+1} σ_i = σ_{i+1} σ_i ρ_{i+1}` (does not hold)
    ForbiddenA,
    /// `ρ_{i+1} σ_i σ_{i+1} = σ_i σ_{i+1} ρ_i` (does not hold)
    ForbiddenB,
}

impl RelationTag {
    pub fn is_forbidden(self) -> bool {
        matches!(self, RelationTag::ForbiddenA | RelationTag::ForbiddenB)
    }

    pub fn label(self) -> &'static str {
        match self {
            RelationTag::Braid => "braid",
            RelationTag::FarCommute => "far-commute",
            RelationTag::VirtualBraid => "virtual-braid",
            RelationTag::VirtualFarCommute => "virtual-far-commute",
            RelationTag::VirtualInvolution => "virtual-involution",
            RelationTag::MixedCommute => "mixed-commute",
            RelationTag::MixedBraid => "mixed-braid",
            RelationTag::FlatInvolution => "flat-involution",
            RelationTag::ForbiddenA => "forbidden-a",
            RelationTag::ForbiddenB => "forbidden-b",
        }
    }
}

impl fmt::Display for RelationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: BraidWord,
    pub rhs: BraidWord,
    pub tag: RelationTag,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &BraidWord| if w.is_empty() { "1".to_string() } else { w.to_string() };
        write!(f, "[{}] {} = {}", self.tag, side(&self.lhs), side(&self.rhs))
    }
}

/// Which entries of a relation table to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TagFilter {
    #[default]
    Defining,
    Forbidden,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    pub group: GroupKind,
    pub strands: usize,
    pub entries: Vec<Relation>,
}

impl RelationTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, tag: RelationTag) -> usize {
        self.entries.iter().filter(|r| r.tag == tag).count()
    }
}

struct Builder {
    group: GroupKind,
    strands: usize,
    entries: Vec<Relation>,
}

impl Builder {
    fn push(&mut self, tag: RelationTag, lhs: &[Generator], rhs: &[Generator]) {
        let word = |g: &[Generator]| {
            BraidWord::new(self.group, self.strands, g.iter().copied()).expect("indices enumerated in range")
        };
        let rel = Relation {
            lhs: word(lhs),
            rhs: word(rhs),
            tag,
        };
        self.entries.push(rel);
    }
}

/// Enumerates the defining relations of `group` on `strands` strands (and/or
/// the two forbidden families, which only make sense with virtual
/// generators) over every valid index.
pub fn relation_table(group: GroupKind, strands: usize, filter: TagFilter) -> RelationTable {
    use Generator as G;
    let n = strands;
    let mut b = Builder {
        group,
        strands,
        entries: Vec::new(),
    };
    let (s, r) = (G::sigma, G::rho);
    let defining = matches!(filter, TagFilter::Defining | TagFilter::All);
    let forbidden = matches!(filter, TagFilter::Forbidden | TagFilter::All);

    if defining {
        for i in 1..n.saturating_sub(1) {
            b.push(RelationTag::Braid, &[s(i), s(i + 1), s(i)], &[s(i + 1), s(i), s(i + 1)]);
        }
        for i in 1..n {
            for j in (i + 2)..n {
                b.push(RelationTag::FarCommute, &[s(i), s(j)], &[s(j), s(i)]);
            }
        }
        if group.has_virtual() {
            for i in 1..n.saturating_sub(1) {
                b.push(
                    RelationTag::VirtualBraid,
                    &[r(i), r(i + 1), r(i)],
                    &[r(i + 1), r(i), r(i + 1)],
                );
            }
            for i in 1..n {
                for j in (i + 2)..n {
                    b.push(RelationTag::VirtualFarCommute, &[r(i), r(j)], &[r(j), r(i)]);
                }
            }
            for i in 1..n {
                b.push(RelationTag::VirtualInvolution, &[r(i), r(i)], &[]);
            }
            for i in 1..n {
                for j in 1..n {
                    if i.abs_diff(j) >= 2 {
                        b.push(RelationTag::MixedCommute, &[s(i), r(j)], &[r(j), s(i)]);
                    }
                }
            }
            for i in 1..n.saturating_sub(1) {
                b.push(
                    RelationTag::MixedBraid,
                    &[r(i), r(i + 1), s(i)],
                    &[s(i + 1), r(i), r(i + 1)],
                );
            }
        }
        if group.is_flat() {
            for i in 1..n {
                b.push(RelationTag::FlatInvolution, &[s(i), s(i)], &[]);
            }
        }
    }
    if forbidden && group.has_virtual() {
        for i in 1..n.saturating_sub(1) {
            b.push(
                RelationTag::ForbiddenA,
                &[r(i), s(i + 1), s(i)],
                &[s(i + 1), s(i), r(i + 1)],
            );
            b.push(
                RelationTag::ForbiddenB,
                &[r(i + 1), s(i), s(i + 1)],
                &[s(i), s(i + 1), r(i)],
            );
        }
    }
    RelationTable {
        group,
        strands,
        entries: b.entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vb3_has_five_defining_entries() {
        let t = relation_table(GroupKind::Virtual, 3, TagFilter::Defining);
        assert_eq!(t.len(), 5);
        assert_eq!(t.count(RelationTag::Braid), 1);
        assert_eq!(t.count(RelationTag::VirtualBraid), 1);
        assert_eq!(t.count(RelationTag::VirtualInvolution), 2);
        assert_eq!(t.count(RelationTag::MixedBraid), 1);
        assert_eq!(t.count(RelationTag::FarCommute), 0);
    }

    #[test]
    fn b2_is_empty() {
        assert!(relation_table(GroupKind::Braid, 2, TagFilter::Defining).is_empty());
    }

    #[test]
    fn forbidden_entries_n3() {
        let t = relation_table(GroupKind::Virtual, 3, TagFilter::Forbidden);
        let shown: Vec<String> = t.entries.iter().map(|r| format!("{} = {}", r.lhs, r.rhs)).collect();
        assert_eq!(shown, ["r1 s2 s1 = s2 s1 r2", "r2 s1 s2 = s1 s2 r1"]);
        assert!(relation_table(GroupKind::Braid, 3, TagFilter::Forbidden).is_empty());
        assert_eq!(relation_table(GroupKind::Virtual, 3, TagFilter::All).len(), 7);
    }

    #[test]
    fn fb2_single_involution() {
        let t = relation_table(GroupKind::FlatBraid, 2, TagFilter::Defining);
        assert_eq!(t.len(), 1);
        assert_eq!(t.entries[0].to_string(), "[flat-involution] s1 s1 = 1");
    }
}
