//! Short-vector enumeration directly in the ambient coordinates.
//!
//! Integer rows are pruned with a suffix bound: after fixing a prefix with
//! remaining norm `R`, the rest of the row sum is at most `R * max|w_j|` in
//! absolute value. Congruence rows are only checked on complete vectors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{ToPrimitive, Zero};

use super::{ConstraintRow, ConstraintSystem, MinimalVectorSet};

struct Search<'a> {
    n: usize,
    z_weights: Vec<Vec<i128>>,
    z_suffix_max: Vec<Vec<i128>>,
    m_weights: Vec<Vec<i64>>,
    m_moduli: Vec<i64>,
    oversized: Vec<&'a ConstraintRow>,
    current: Vec<i64>,
    z_sums: Vec<i128>,
    m_sums: Vec<i64>,
    found: Vec<Vec<i64>>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(c: &'a ConstraintSystem) -> Self {
        let n = c.ambient_dim();
        let mut s = Search {
            n,
            z_weights: Vec::new(),
            z_suffix_max: Vec::new(),
            m_weights: Vec::new(),
            m_moduli: Vec::new(),
            oversized: Vec::new(),
            current: vec![0; n],
            z_sums: Vec::new(),
            m_sums: Vec::new(),
            found: Vec::new(),
            nodes: 0,
        };
        for row in c.rows() {
            if row.modulus.is_zero() {
                let w: Option<Vec<i128>> = row.weights.iter().map(|x| x.to_i64().map(i128::from)).collect();
                match w {
                    Some(w) => {
                        let mut suffix = vec![0i128; n + 1];
                        for j in (0..n).rev() {
                            suffix[j] = suffix[j + 1].max(w[j].abs());
                        }
                        s.z_weights.push(w);
                        s.z_suffix_max.push(suffix);
                    }
                    None => s.oversized.push(row),
                }
            } else {
                match row.modulus.to_i64().filter(|&m| m <= i64::from(u32::MAX)) {
                    Some(m) => {
                        let w = row
                            .weights
                            .iter()
                            .map(|x| (x % &row.modulus).to_i64().unwrap_or(0).rem_euclid(m))
                            .collect();
                        s.m_weights.push(w);
                        s.m_moduli.push(m);
                    }
                    None => s.oversized.push(row),
                }
            }
        }
        s.z_sums = vec![0; s.z_weights.len()];
        s.m_sums = vec![0; s.m_weights.len()];
        s
    }

    fn accept(&mut self) {
        if self.z_sums.iter().any(|&x| x != 0) || self.m_sums.iter().any(|&x| x != 0) {
            return;
        }
        if !self.oversized.is_empty() {
            let big: Vec<BigInt> = self.current.iter().map(|&x| BigInt::from(x)).collect();
            if !self.oversized.iter().all(|r| r.holds(&big)) {
                return;
            }
        }
        self.found.push(self.current.clone());
    }

    fn shift(&mut self, i: usize, x: i64) {
        let xi = i128::from(x);
        for (s, w) in self.z_sums.iter_mut().zip(&self.z_weights) {
            *s += w[i] * xi;
        }
        for ((s, w), &m) in self.m_sums.iter_mut().zip(&self.m_weights).zip(&self.m_moduli) {
            *s = (*s + w[i] * x).rem_euclid(m);
        }
    }

    fn dfs(&mut self, i: usize, remaining: u64, started: bool) {
        self.nodes += 1;
        if remaining == 0 {
            if started {
                self.accept();
            }
            return;
        }
        if i == self.n {
            return;
        }
        let r = i128::from(remaining);
        if self.z_sums.iter().zip(&self.z_suffix_max).any(|(&s, mx)| s.abs() > r * mx[i]) {
            return;
        }
        let t = remaining.sqrt() as i64;
        let lo = if started { -t } else { 0 };
        for x in lo..=t {
            if x != 0 {
                self.current[i] = x;
                self.shift(i, x);
            }
            self.dfs(i + 1, remaining - (x * x) as u64, started || x != 0);
            if x != 0 {
                self.shift(i, -x);
                self.current[i] = 0;
            }
        }
    }
}

/// All vectors of squared norm `m` satisfying the constraints.
pub fn enumerate_norm(c: &ConstraintSystem, m: u64) -> MinimalVectorSet {
    let mut s = Search::new(c);
    s.dfs(0, m, false);
    MinimalVectorSet::canonical(m, s.found)
}

/// Number of search nodes visited for norm `m`.
pub fn norm_search_stats(c: &ConstraintSystem, m: u64) -> u64 {
    let mut s = Search::new(c);
    s.dfs(0, m, false);
    s.nodes
}
