use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Monomial, Rational};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by graded-lex order, so two equal
/// polynomials have identical term sequences. Zero coefficients are never
/// stored; the empty map is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(index: u32) -> Self {
        Self::term(Rational::one(), Monomial::var(index))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                acc.entry(m).and_modify(|v| *v = &*v + &c).or_insert(c);
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            terms.insert(k.checked_div(m)?, v.clone());
        }
        Some(Polynomial { terms })
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Greatest common monomial divisor of all terms (1 for zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    /// Least common multiple of the coefficient denominators and gcd of the
    /// numerators, as `(lcm_den, gcd_num)`.
    pub(crate) fn coefficient_content(&self) -> (BigInt, BigInt) {
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
            g = g.gcd(c.numer());
        }
        (l, g)
    }

    /// If `self == c * other` for a nonzero rational `c`, returns `c`.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Rational> {
        if self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (lm, lc) = self.leading()?;
        let (om, oc) = other.leading()?;
        if lm != om {
            return None;
        }
        let c = lc.checked_div(oc).ok()?;
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if ma != mb || ca != &(cb * &c) {
                return None;
            }
        }
        Some(c)
    }

    /// Substitutes rational values for the variables in `assignment`; the
    /// remaining variables stay symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<u32, Rational>) -> Polynomial {
        let mut out = Polynomial::zero();
        let mut powers: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (kept, gone) = m.partition(|v| assignment.contains_key(&v));
            let mut coeff = c.clone();
            for (v, e) in gone {
                let val = powers
                    .entry((v, e))
                    .or_insert_with(|| assignment[&v].pow(e as i32).expect("nonnegative power"));
                coeff = &coeff * val;
                if coeff.is_zero() {
                    break;
                }
            }
            out.add_term(kept, coeff);
        }
        out
    }

    /// Evaluates at a full assignment; `None` if some variable is unassigned.
    pub fn evaluate(&self, assignment: &BTreeMap<u32, Rational>) -> Option<Rational> {
        self.substitute(assignment).as_constant()
    }

    /// Replaces each variable `v` by `images[v - 1]` (polynomial composition).
    pub fn compose(&self, images: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.pairs() {
                t = t.mul(&images[v as usize - 1].pow(e));
            }
            out = out.add(&t);
        }
        out
    }

    pub(crate) fn is_single_term_unit(&self) -> bool {
        self.len() == 1 && self.leading().is_some_and(|(_, c)| c.is_one())
    }

    /// Renders with the given variable letter, e.g. `z1^2*z3 - 2*z4 + 1/2`.
    pub fn display_with(&self, symbol: char) -> String {
        let mut s = String::new();
        self.write_with(&mut s, symbol).expect("writing to a String");
        s
    }

    pub(crate) fn write_with(&self, f: &mut impl fmt::Write, symbol: char) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write_with(f, symbol)?;
            }
        }
        Ok(())
    }

    pub(crate) fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, 'z')
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: u32) -> Polynomial {
        Polynomial::var(i)
    }

    fn c(v: i64) -> Polynomial {
        Polynomial::constant(v.into())
    }

    #[test]
    fn distributivity_expansion() {
        let lhs = c(1).add(&z(1)).mul(&c(1).add(&z(4))).mul(&c(1).add(&z(6)));
        let rhs = [
            c(1),
            z(1),
            z(4),
            z(6),
            z(1).mul(&z(4)),
            z(1).mul(&z(6)),
            z(4).mul(&z(6)),
            z(1).mul(&z(4)).mul(&z(6)),
        ]
        .iter()
        .fold(Polynomial::zero(), |a, b| a.add(b));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 8);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = z(1).add(&z(2));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.sub(&z(2)), z(1));
    }

    #[test]
    fn display_is_descending_grlex() {
        let p = c(1)
            .sub(&z(1).mul(&z(3)))
            .add(&z(6))
            .add(&z(2).pow(2).scale(&"1/2".parse().unwrap()));
        assert_eq!(p.to_string(), "-z1*z3 + 1/2*z2^2 + z6 + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(c(-3).to_string(), "-3");
    }

    #[test]
    fn substitution_partial_and_full() {
        let p = z(1).mul(&z(2)).add(&z(3)).add(&c(1));
        let mut a = BTreeMap::new();
        a.insert(1, Rational::from(2));
        assert_eq!(p.substitute(&a), c(2).mul(&z(2)).add(&z(3)).add(&c(1)));
        assert_eq!(p.evaluate(&a), None);
        a.insert(2, Rational::from(-1));
        a.insert(3, "1/2".parse().unwrap());
        assert_eq!(p.evaluate(&a), Some("-1/2".parse().unwrap()));
    }

    #[test]
    fn monomial_content_and_ratio() {
        let p = z(1).pow(2).mul(&z(2)).add(&z(1).mul(&z(2)).mul(&z(3)));
        assert_eq!(p.monomial_content(), Monomial::from_pairs([(1, 1), (2, 1)]));
        let q = p.scale(&Rational::from(-3));
        assert_eq!(q.ratio_to(&p), Some(Rational::from(-3)));
        assert_eq!(q.ratio_to(&p.add(&c(1))), None);
    }

    #[test]
    fn compose_substitutes_polynomials() {
        // (z1 + z2) with z1 -> z2^2, z2 -> 1
        let p = z(1).add(&z(2));
        let out = p.compose(&[z(2).pow(2), c(1)]);
        assert_eq!(out, z(2).pow(2).add(&c(1)));
    }
}
