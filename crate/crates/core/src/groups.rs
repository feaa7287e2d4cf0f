//! Finite abelian groups `Z/m_1 + ... + Z/m_r` with componentwise arithmetic.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A finite abelian group given by cyclic factors, each of order at least 2.
///
/// The factors are kept in the order given; they need not form a
/// divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbelianGroup {
    factors: Vec<u64>,
}

/// An element of a [`FinAbelianGroup`]; component `i` lies in `0..m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub components: Vec<u64>,
}

impl FinAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&m) = factors.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidParameter(format!("cyclic factor Z/{m} must have order >= 2")));
        }
        Ok(FinAbelianGroup { factors })
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(alloc::vec![n]).expect("cyclic group order >= 2")
    }

    /// `F_2^c` as an additive group.
    pub fn elementary_two(c: usize) -> Self {
        FinAbelianGroup { factors: alloc::vec![2; c] }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { components: alloc::vec![0; self.factors.len()] }
    }

    /// Builds an element, reducing every component.
    pub fn element(&self, components: &[i64]) -> Result<GroupElement> {
        if components.len() != self.factors.len() {
            return Err(Error::Shape(format!(
                "{} components for a group with {} factors",
                components.len(),
                self.factors.len()
            )));
        }
        Ok(GroupElement {
            components: components.iter().zip(&self.factors).map(|(&x, &m)| x.rem_euclid(m as i64) as u64).collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            components: a.components.iter().zip(&b.components).zip(&self.factors).map(|((x, y), m)| (x + y) % m).collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement { components: a.components.iter().zip(&self.factors).map(|(x, m)| (m - x) % m).collect() }
    }

    /// `k * a` for an integer `k`.
    pub fn scale(&self, k: i64, a: &GroupElement) -> GroupElement {
        GroupElement {
            components: a
                .components
                .iter()
                .zip(&self.factors)
                .map(|(&x, &m)| ((k.rem_euclid(m as i64) as u128 * x as u128) % m as u128) as u64)
                .collect(),
        }
    }

    /// Position of `a` in the lexicographic element order.
    pub fn index_of(&self, a: &GroupElement) -> usize {
        a.components.iter().zip(&self.factors).fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut components = alloc::vec![0; self.factors.len()];
        for (c, &m) in components.iter_mut().zip(&self.factors).rev() {
            *c = (index % m as usize) as u64;
            index /= m as usize;
        }
        GroupElement { components }
    }

    /// All elements, lexicographic on component tuples.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// Largest `c` with `F_2^c` a subgroup: the number of even factors.
    pub fn two_torsion_rank(&self) -> usize {
        self.factors.iter().filter(|&&m| m % 2 == 0).count()
    }

    /// Direct sum.
    pub fn sum(&self, other: &FinAbelianGroup) -> FinAbelianGroup {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        FinAbelianGroup { factors }
    }

    /// One representative per orbit `{a, -a}`, the lexicographically smaller
    /// one, in lexicographic order (so the identity comes first).
    pub fn mod_negation_reps(&self) -> Vec<GroupElement> {
        self.elements().filter(|a| *a <= self.neg(a)).collect()
    }

    /// Multiset Sidon property: `x1 + y1 = x2 + y2` forces `{x1, y1} = {x2, y2}`.
    pub fn is_sidon(&self, set: &[GroupElement]) -> bool {
        let mut sums = BTreeSet::new();
        for (i, x) in set.iter().enumerate() {
            for y in &set[i..] {
                if !sums.insert(self.add(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Coordinate label of an element: the digits run together when every
    /// factor is at most 10 (`011`), otherwise dot-separated.
    pub fn label(&self, a: &GroupElement) -> String {
        if a.components.len() == 1 {
            return a.components[0].to_string();
        }
        if self.factors.iter().all(|&m| m <= 10) {
            a.components.iter().map(|c| c.to_string()).collect()
        } else {
            a.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
        }
    }

    /// Parses an element written as in [`FinAbelianGroup::label`], or with
    /// dot-separated components.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let s = s.trim();
        let parts: Vec<i64> = if s.contains('.') || self.factors.len() == 1 {
            s.split('.')
                .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad group element '{s}'"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| ch.to_digit(10).map(i64::from).ok_or_else(|| Error::Parse(format!("bad group element '{s}'"))))
                .collect::<Result<_>>()?
        };
        if parts.len() != self.factors.len() {
            return Err(Error::Parse(format!("element '{s}' does not match group {self}")));
        }
        if parts.iter().zip(&self.factors).any(|(&x, &m)| x < 0 || x as u64 >= m) {
            return Err(Error::InvalidParameter(format!("element '{s}' out of range for {self}")));
        }
        self.element(&parts)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factorization(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian group of order `n` up to isomorphism, as invariant-factor
/// chains `m_1 | m_2 | ...` (ascending).
pub fn abelian_groups_of_order(n: u64) -> Vec<FinAbelianGroup> {
    if n < 2 {
        return Vec::new();
    }
    let primes = prime_factorization(n);
    let mut choices: Vec<Vec<u64>> = alloc::vec![Vec::new()];
    for &(p, e) in &primes {
        let mut next = Vec::new();
        for part in partitions(e, e) {
            for prev in &choices {
                let len = prev.len().max(part.len());
                let mut merged = alloc::vec![1u64; len];
                // Align largest parts with largest factors (descending order).
                for (i, m) in prev.iter().enumerate() {
                    merged[i] *= m;
                }
                for (i, &k) in part.iter().enumerate() {
                    merged[i] *= p.pow(k);
                }
                next.push(merged);
            }
        }
        choices = next;
    }
    let mut groups: Vec<FinAbelianGroup> = choices
        .into_iter()
        .map(|mut f| {
            f.reverse();
            FinAbelianGroup { factors: f }
        })
        .collect();
    groups.sort();
    groups
}

impl fmt::Display for FinAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "Z/{m}")?;
        }
        Ok(())
    }
}

impl FromStr for FinAbelianGroup {
    type Err = Error;

    /// `"Z/9"`, `"Z/3+Z/3"`, `"F2^3"` (and mixtures such as `"F3^2+Z/4"`).
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let bad = || Error::Parse(format!("bad group term '{term}' in '{s}'"));
            if let Some(m) = term.strip_prefix("Z/") {
                factors.push(m.parse::<u64>().map_err(|_| bad())?);
            } else if let Some(rest) = term.strip_prefix('F') {
                let (p, e) = match rest.split_once('^') {
                    Some((p, e)) => (p, e.parse::<usize>().map_err(|_| bad())?),
                    None => (rest, 1),
                };
                let p = p.parse::<u64>().map_err(|_| bad())?;
                if !is_prime(p) {
                    return Err(Error::Parse(format!("F{p}: {p} is not prime")));
                }
                factors.extend(core::iter::repeat_n(p, e));
            } else {
                return Err(bad());
            }
        }
        FinAbelianGroup::new(factors)
    }
}
