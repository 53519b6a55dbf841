//! Multivariate gcd over the integers.
//!
//! Modular images bound the gcd degree in each variable, which proves most
//! pairs coprime. The rest go through the heuristic evaluation/interpolation
//! gcd. A candidate is accepted only if it divides both inputs and meets
//! every degree bound, so it is the gcd; otherwise the heuristic gives up.
//! Giving up only costs cancellation, never correctness.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, Polynomial, Rational};

/// Integer polynomial over dense exponent vectors, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ZPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

const HEU_TRIES: usize = 6;
/// Evaluation points beyond this many bits are not worth the cost.
const MAX_XI_BITS: u64 = 20_000;
const MAX_DIV_STEPS: usize = 200_000;
const PRIME: u64 = 0x1fff_ffff_ffff_ffff; // 2^61 - 1

impl ZPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(|e| e.iter().all(|&x| x == 0))
    }

    fn nvars(&self) -> usize {
        self.terms.keys().next().map_or(0, Vec::len)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    fn present(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    s.insert(i);
                }
            }
        }
        s
    }

    fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    fn div_int(&self, c: &BigInt) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v / c)).collect(),
        }
    }

    fn mul_int(&self, c: &BigInt) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn leading_negative(&self) -> bool {
        self.terms.values().next_back().is_some_and(|c| c.is_negative())
    }

    fn primitive(&self) -> ZPoly {
        let mut c = self.content();
        if self.leading_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_int(&c)
        }
    }

    fn eval(&self, v: usize, xi: &BigInt) -> ZPoly {
        let mut powers: BTreeMap<u32, BigInt> = BTreeMap::new();
        let mut out = ZPoly { terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let p = powers
                .entry(e[v])
                .or_insert_with(|| num_traits::pow(xi.clone(), e[v] as usize));
            let mut k = e.clone();
            k[v] = 0;
            out.add_term(k, c * &*p);
        }
        out
    }

    /// Rebuilds a polynomial in `v` from its image at `v = xi`, reading the
    /// coefficients as balanced residues.
    fn interpolate(&self, v: usize, xi: &BigInt) -> ZPoly {
        let half = xi / 2;
        let mut h = self.clone();
        let mut out = ZPoly { terms: BTreeMap::new() };
        let mut i = 0u32;
        while !h.is_zero() {
            let mut next = ZPoly { terms: BTreeMap::new() };
            for (e, c) in &h.terms {
                let mut g = c.mod_floor(xi);
                if g > half {
                    g -= xi;
                }
                if !g.is_zero() {
                    let mut k = e.clone();
                    k[v] = i;
                    out.add_term(k, g.clone());
                }
                next.add_term(e.clone(), (c - g) / xi);
            }
            h = next;
            i += 1;
        }
        out
    }

    fn mul_term(&self, e: &[u32], c: &BigInt) -> Vec<(Vec<u32>, BigInt)> {
        self.terms
            .iter()
            .map(|(k, v)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), v * c))
            .collect()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    fn exact_div(&self, d: &ZPoly) -> Option<ZPoly> {
        if d.is_zero() {
            return None;
        }
        for v in 0..self.nvars().max(d.nvars()) {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (dl, dc) = d.terms.iter().next_back()?;
        let mut r = self.clone();
        let mut q = ZPoly { terms: BTreeMap::new() };
        let mut steps = 0;
        while let Some((rl, rc)) = r.terms.iter().next_back() {
            steps += 1;
            if steps > MAX_DIV_STEPS {
                return None;
            }
            let mut e = Vec::with_capacity(rl.len());
            for (a, b) in rl.iter().zip(dl) {
                e.push(a.checked_sub(*b)?);
            }
            let (c, rem) = rc.div_rem(dc);
            if !rem.is_zero() {
                return None;
            }
            for (k, v) in d.mul_term(&e, &c) {
                r.add_term(k, -v);
            }
            q.add_term(e, c);
        }
        Some(q)
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(PRIME)).to_u64().expect("reduced")
}

/// Dense univariate image in variable `v`, all others replaced by `point`.
fn univariate_image(f: &ZPoly, v: usize, point: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; f.degree_in(v) as usize + 1];
    for (e, c) in &f.terms {
        let mut t = to_mod(c);
        for (j, &x) in e.iter().enumerate() {
            if j != v && x > 0 {
                t = mulmod(t, powmod(point[j], x as u64));
            }
        }
        let slot = &mut out[e[v] as usize];
        *slot = (*slot + t) % PRIME;
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of the gcd of two univariate polynomials mod the prime.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let inv = powmod(*b.last().expect("nonempty"), PRIME - 2);
        while a.len() >= b.len() {
            let f = mulmod(*a.last().expect("nonempty"), inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let s = mulmod(f, bc);
                a[i + shift] = (a[i + shift] + PRIME - s) % PRIME;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Upper bound on the degree in `v` of the gcd. The gcd of a modular image
/// bounds it once both leading coefficients in `v` survive; otherwise fall
/// back to the smaller degree.
fn degree_bound(f: &ZPoly, g: &ZPoly, v: usize, state: &mut u64) -> u32 {
    let n = f.nvars();
    let (df, dg) = (f.degree_in(v) as usize, g.degree_in(v) as usize);
    for _ in 0..3 {
        let point: Vec<u64> = (0..n).map(|_| splitmix(state) % PRIME).collect();
        let (a, b) = (univariate_image(f, v, &point), univariate_image(g, v, &point));
        if a[df] == 0 || b[dg] == 0 {
            continue;
        }
        return gcd_degree_mod(a, b) as u32;
    }
    df.min(dg) as u32
}

fn heu_gcd(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let n = f.nvars();
    let (pf, pg) = (f.present(), g.present());
    let common: Vec<usize> = pf.intersection(&pg).copied().collect();
    let (cf, cg) = (f.content(), g.content());
    let c = cf.gcd(&cg);
    if common.is_empty() {
        // no shared variable: only an integer divides both
        return Some(ZPoly {
            terms: BTreeMap::from([(vec![0; n], c)]),
        });
    }
    let f = f.div_int(&cf);
    let g = g.div_int(&cg);
    // A common divisor reaching every degree bound is the gcd up to a
    // constant. Divisibility alone is not enough: an image of the gcd can
    // collapse to a constant, and a constant divides everything.
    let mut state = 0x5eed_u64;
    let bounds: Vec<(usize, u32)> = common
        .iter()
        .map(|&v| (v, degree_bound(&f, &g, v, &mut state)))
        .collect();
    let is_gcd = |h: &ZPoly| {
        bounds.iter().all(|&(v, d)| h.degree_in(v) == d) && f.exact_div(h).is_some() && g.exact_div(h).is_some()
    };
    let v = *common.last().expect("shared variable");
    let b: BigInt = f.norm().min(g.norm()) * 2u32 + 29u32;
    let mut xi = b.clone().min(b.sqrt() * 99);
    for _ in 0..HEU_TRIES {
        if xi.bits() > MAX_XI_BITS {
            return None;
        }
        let (ff, gg) = (f.eval(v, &xi), g.eval(v, &xi));
        if !ff.is_zero() && !gg.is_zero() {
            if let Some(h) = heu_gcd(&ff, &gg) {
                let whole = h.interpolate(v, &xi).primitive();
                if !whole.is_zero() && is_gcd(&whole) {
                    return Some(whole.mul_int(&c));
                }
                // the gcd may have coefficients too large for this xi while a
                // cofactor does not; recover it from either cofactor instead
                for (img, p) in [(&ff, &f), (&gg, &g)] {
                    let Some(cof) = img.exact_div(&h) else { continue };
                    let cof = cof.interpolate(v, &xi);
                    if cof.is_zero() {
                        continue;
                    }
                    if let Some(cand) = p.exact_div(&cof).map(|q| q.primitive()) {
                        if is_gcd(&cand) {
                            return Some(cand.mul_int(&c));
                        }
                    }
                }
            }
        }
        xi = &xi * 73794u32 * xi.sqrt().sqrt() / 27011u32;
    }
    None
}

/// Primitive integer gcd with positive leading coefficient, or `None` when
/// the heuristic gives up.
fn gcd(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let common: Vec<usize> = f.present().intersection(&g.present()).copied().collect();
    let mut state = 0x5eed_u64;
    if common.iter().all(|&v| degree_bound(f, g, v, &mut state) == 0) {
        return Some(ZPoly {
            terms: BTreeMap::from([(vec![0; f.nvars()], BigInt::one())]),
        });
    }
    heu_gcd(&f.primitive(), &g.primitive()).map(|h| h.primitive())
}

struct Frame {
    vars: Vec<u32>,
}

impl Frame {
    fn new(a: &Polynomial, b: &Polynomial) -> Frame {
        let mut s = a.variables();
        s.extend(b.variables());
        Frame {
            vars: s.into_iter().collect(),
        }
    }

    /// `p` times the lcm of its denominators, as an integer polynomial.
    fn to_z(&self, p: &Polynomial) -> (ZPoly, BigInt) {
        let (l, _) = p.coefficient_content();
        let mut out = ZPoly { terms: BTreeMap::new() };
        for (m, c) in p.terms() {
            let mut e = vec![0u32; self.vars.len()];
            for &(v, x) in m.pairs() {
                let i = self.vars.binary_search(&v).expect("variable in frame");
                e[i] = x;
            }
            out.add_term(e, c.numer() * (&l / c.denom()));
        }
        (out, l)
    }

    fn polynomial(&self, z: &ZPoly, scale: &BigInt) -> Polynomial {
        Polynomial::from_terms(z.terms.iter().map(|(e, c)| {
            let m = Monomial::from_pairs(
                e.iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| (self.vars[i], x)),
            );
            (m, Rational::from(c * scale))
        }))
    }
}

/// Divides `num` and `den` by their greatest common divisor, when it is
/// found; the returned pair has the same ratio. `None` means there was
/// nothing to cancel, or the heuristic gave up.
pub(crate) fn cancel_common(num: &Polynomial, den: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    let frame = Frame::new(num, den);
    let (nz, sn) = frame.to_z(num);
    let (dz, sd) = frame.to_z(den);
    let g = gcd(&nz, &dz)?;
    if g.is_constant() {
        return None;
    }
    let qn = nz.exact_div(&g)?;
    let qd = dz.exact_div(&g)?;
    // num/den = (N/sn)/(D/sd) = (qn*sd)/(qd*sn)
    Some((frame.polynomial(&qn, &sd), frame.polynomial(&qd, &sn)))
}
