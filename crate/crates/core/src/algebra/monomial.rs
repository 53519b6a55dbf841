use std::cmp::Ordering;
use std::fmt;

/// A power product of variables. Variables are 1-based indices; only
/// positive exponents are stored, sorted by variable. The empty monomial is 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { powers: Vec::new() }
    }

    pub fn var(index: u32) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: u32, exp: u32) -> Self {
        assert!(index >= 1, "variables are 1-based");
        if exp == 0 {
            return Self::one();
        }
        Monomial {
            powers: vec![(index, exp)],
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut powers: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        assert!(powers.iter().all(|&(v, _)| v >= 1), "variables are 1-based");
        powers.sort_unstable_by_key(|&(v, _)| v);
        powers.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Monomial { powers }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.powers
            .binary_search_by_key(&var, |&(v, _)| v)
            .map_or(0, |i| self.powers[i].1)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.powers
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.powers.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(v, e) in &self.powers {
            let mut e = e;
            if j < other.powers.len() && other.powers[j].0 < v {
                return None;
            }
            if j < other.powers.len() && other.powers[j].0 == v {
                let d = other.powers[j].1;
                if d > e {
                    return None;
                }
                e -= d;
                j += 1;
            }
            if e > 0 {
                out.push((v, e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial { powers: out })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (a, b) = (&self.powers, &other.powers);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.min(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { powers: out }
    }

    /// Splits off the variables listed in `keep` (by predicate); returns
    /// `(kept, removed)`.
    pub(crate) fn partition(&self, mut removed: impl FnMut(u32) -> bool) -> (Monomial, Vec<(u32, u32)>) {
        let mut kept = Vec::new();
        let mut gone = Vec::new();
        for &p in &self.powers {
            if removed(p.0) {
                gone.push(p);
            } else {
                kept.push(p);
            }
        }
        (Monomial { powers: kept }, gone)
    }

    pub(crate) fn write_with(&self, f: &mut impl fmt::Write, symbol: char) -> fmt::Result {
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_char('*')?;
            }
            write!(f, "{symbol}{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Graded lexicographic order: total degree first, then the exponent of the
/// lowest-indexed variable where the two differ (larger exponent is larger).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.powers, &other.powers);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if va > vb {
                        return Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        self.write_with(f, 'z')
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(p.iter().copied())
    }

    #[test]
    fn grlex_order() {
        // degree dominates
        assert!(m(&[(3, 2)]) > m(&[(1, 1)]));
        // same degree: lower-indexed variable wins
        assert!(m(&[(1, 1), (4, 1)]) > m(&[(2, 2)]));
        assert!(m(&[(1, 2)]) > m(&[(1, 1), (2, 1)]));
        assert!(m(&[(1, 1), (2, 1)]) > m(&[(1, 1), (3, 1)]));
        assert_eq!(m(&[(2, 1), (1, 1)]), m(&[(1, 1), (2, 1)]));
        assert!(Monomial::one() < m(&[(9, 1)]));
    }

    #[test]
    fn merge_and_divide() {
        let a = m(&[(1, 2), (3, 1)]);
        let b = m(&[(3, 1), (4, 5)]);
        let ab = a.mul(&b);
        assert_eq!(ab, m(&[(1, 2), (3, 2), (4, 5)]));
        assert_eq!(ab.checked_div(&b), Some(a.clone()));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.gcd(&b), m(&[(3, 1)]));
        assert_eq!(m(&[(1, 1), (1, 2), (2, 0)]), m(&[(1, 3)]));
    }
}
