//! Small finite fields `F_q`, `q = p^e`, and the root-pattern histogram used
//! to count minimal vectors of Craig-type lattices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Irreducible moduli (ascending coefficients, monic) for the extension
/// fields supported without an explicit modulus.
const BUILTIN_MODULI: &[(u64, usize, &[u64])] = &[
    (2, 2, &[1, 1, 1]),       // x^2+x+1
    (2, 3, &[1, 1, 0, 1]),    // x^3+x+1
    (3, 2, &[1, 0, 1]),       // x^2+1
    (2, 4, &[1, 1, 0, 0, 1]), // x^4+x+1
    (5, 2, &[2, 1, 1]),       // x^2+x+2
    (3, 3, &[1, 2, 0, 1]),    // x^3+2x+1
    (7, 2, &[1, 0, 1]),       // x^2+1
];

/// `F_q` realised as `F_p[x]/(f)` with `f` monic irreducible of degree `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    e: usize,
    /// Ascending coefficients of the monic modulus, length `e + 1`.
    modulus: Vec<u64>,
}

/// Element of a [`FiniteField`] as a coefficient vector of length `e` over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    pub coeffs: Vec<u64>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `q = p^e` with `p` prime, if it is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    // b monic
    let db = b.len() - 1;
    while a.len() > db {
        let lead = a.pop().unwrap() % p;
        if lead != 0 {
            let shift = a.len() - db;
            for (i, &bi) in b[..db].iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - lead * bi % p) % p;
            }
        }
    }
    a
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    for deg in 1..=e / 2 {
        // every monic polynomial of degree `deg`
        let count = p.pow(deg as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(f.to_vec(), &g, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(FiniteField { p, e: 1, modulus: alloc::vec![0, 1] })
    }

    /// `F_p[x]/(modulus)`; the modulus is given with ascending coefficients
    /// and must be monic and irreducible.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidParameter("modulus must be monic of degree >= 1".into()));
        }
        let e = modulus.len() - 1;
        if e > 1 && !is_irreducible(&modulus, p) {
            return Err(Error::InvalidParameter(format!("modulus is reducible over F_{p}")));
        }
        if e == 1 {
            return Self::prime(p);
        }
        Ok(FiniteField { p, e, modulus })
    }

    /// The field of order `q`, using the built-in modulus table for
    /// proper prime powers.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        if e == 1 {
            return Self::prime(p);
        }
        let &(_, _, m) = BUILTIN_MODULI
            .iter()
            .find(|&&(bp, be, _)| bp == p && be == e)
            .ok_or_else(|| Error::InvalidParameter(format!("no built-in modulus for GF({q}); give one explicitly")))?;
        Self::new(p, m.to_vec())
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.e as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: alloc::vec![0; self.e] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut z = self.zero();
        z.coeffs[0] = n.rem_euclid(self.p as i64) as u64;
        z
    }

    /// Element with base-`p` digits of `index` as coefficients (constant first).
    pub fn element_at(&self, mut index: u64) -> FieldElement {
        let mut coeffs = alloc::vec![0; self.e];
        for c in coeffs.iter_mut() {
            *c = index % self.p;
            index /= self.p;
        }
        FieldElement { coeffs }
    }

    pub fn index_of(&self, a: &FieldElement) -> u64 {
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % self.p).collect() }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().map(|x| (self.p - x) % self.p).collect() }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        let mut prod = alloc::vec![0u64; 2 * self.e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut r = poly_rem(prod, &self.modulus, p);
        r.resize(self.e, 0);
        FieldElement { coeffs: r }
    }

    pub fn pow(&self, a: &FieldElement, mut k: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.coeffs.iter().all(|&c| c == 0) {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    /// Polynomial notation in `x`, e.g. `2x+1`; plain integers for prime fields.
    pub fn label(&self, a: &FieldElement) -> String {
        if self.e == 1 {
            return format!("{}", a.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (i, &c) in a.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { format!("{c}") };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            return write!(f, "GF({})", self.p);
        }
        let m = FieldElement { coeffs: self.modulus[..self.e].to_vec() };
        write!(f, "GF({};x^{}+{})", self.order(), self.e, self.label(&m))
    }
}

fn parse_poly(s: &str, p: u64) -> Result<Vec<u64>> {
    let bad = || Error::Parse(format!("bad polynomial '{s}'"));
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs: Vec<i64> = Vec::new();
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body[1..].find(['+', '-']).map_or(body.len(), |i| i + 1);
        let term = &body[..end];
        rest = &body[end..];
        let (coef, power) = match term.find('x') {
            None => (term.parse::<i64>().map_err(|_| bad())?, 0),
            Some(ix) => {
                let c = &term[..ix];
                let c = c.strip_suffix('*').unwrap_or(c);
                let coef = if c.is_empty() { 1 } else { c.parse::<i64>().map_err(|_| bad())? };
                let after = &term[ix + 1..];
                let power = if after.is_empty() {
                    1
                } else {
                    after.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
                };
                (coef, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += sign * coef;
    }
    Ok(coeffs.into_iter().map(|c| c.rem_euclid(p as i64) as u64).collect())
}

impl FromStr for FiniteField {
    type Err = Error;

    /// `"GF(7)"`, `"GF(25)"` (built-in modulus) or `"GF(25;x^2+x+2)"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad field spec '{s}'")))?;
        let (q, poly) = match inner.split_once(';') {
            Some((q, poly)) => (q, Some(poly)),
            None => (inner, None),
        };
        let q: u64 = q.trim().parse().map_err(|_| Error::Parse(format!("bad field order in '{s}'")))?;
        let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        match poly {
            None => Self::with_order(q),
            Some(poly) => {
                let m = parse_poly(poly, p)?;
                if m.len() != e + 1 {
                    return Err(Error::InvalidParameter(format!("modulus degree must be {e} for GF({q})")));
                }
                Self::new(p, m)
            }
        }
    }
}

/// Calls `f` on every `t`-subset of `0..n` in revolving-door order: each
/// subset differs from its predecessor by exchanging one element.
pub fn revolving_door(n: usize, t: usize, mut f: impl FnMut(&[usize])) {
    fn walk(n: usize, t: usize, reversed: bool, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if t == 0 {
            f(chosen);
            return;
        }
        if t == n {
            let mark = chosen.len();
            chosen.extend(0..n);
            f(chosen);
            chosen.truncate(mark);
            return;
        }
        if !reversed {
            walk(n - 1, t, false, chosen, f);
            chosen.push(n - 1);
            walk(n - 1, t - 1, true, chosen, f);
            chosen.pop();
        } else {
            chosen.push(n - 1);
            walk(n - 1, t - 1, false, chosen, f);
            chosen.pop();
            walk(n - 1, t, true, chosen, f);
        }
    }
    if t > n {
        return;
    }
    let mut chosen = Vec::with_capacity(t);
    walk(n, t, false, &mut chosen, &mut f);
}

/// For every `(a_1, ..., a_k)` in `F_q^k`, the number `N(a_1..a_k)` of
/// constants `a_0` such that `x^{k+1} + a_k x^k + ... + a_1 x + a_0` has
/// `k + 1` distinct roots in `F_q`. Buckets with `N = 0` are omitted.
///
/// Every `(k+1)`-subset of `F_q` contributes to exactly one bucket (its
/// elementary symmetric functions), so the values sum to `C(q, k+1)`.
pub fn distinct_root_histogram(field: &FiniteField, k: usize) -> Result<BTreeMap<Vec<FieldElement>, u64>> {
    if k as u64 >= field.characteristic() {
        return Err(Error::PowerSumsDegenerate { k, p: field.characteristic() });
    }
    let elements: Vec<FieldElement> = field.elements().collect();
    let mut hist: BTreeMap<Vec<FieldElement>, u64> = BTreeMap::new();
    revolving_door(elements.len(), k + 1, |subset| {
        // prod (x - r), ascending coefficients
        let mut poly = alloc::vec![field.one()];
        for &i in subset {
            let r = field.neg(&elements[i]);
            let mut next = alloc::vec![field.zero(); poly.len() + 1];
            for (j, c) in poly.iter().enumerate() {
                next[j + 1] = field.add(&next[j + 1], c);
                next[j] = field.add(&next[j], &field.mul(c, &r));
            }
            poly = next;
        }
        *hist.entry(poly[1..=k].to_vec()).or_insert(0) += 1;
    });
    Ok(hist)
}
