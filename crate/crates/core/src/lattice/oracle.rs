//! Fincke–Pohst enumeration over a basis Gram matrix.
//!
//! An independent route to the short vectors: it never looks at the
//! constraint rows, only at the basis. Bounds are computed with exact
//! rationals and integer square roots.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Lattice, MinimalVectorSet};
use crate::error::{Error, Result};

/// Quadratic form `Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`.
struct Decomposition {
    diag: Vec<BigRational>,
    mu: Vec<Vec<BigRational>>,
}

fn decompose(gram: &[Vec<BigInt>]) -> Result<Decomposition> {
    let d = gram.len();
    let mut q: Vec<Vec<BigRational>> =
        gram.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    for i in 0..d {
        if !q[i][i].is_positive() {
            return Err(Error::SingularGram);
        }
        for j in i + 1..d {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..d {
            for l in k..d {
                let t = &q[k][i] * &q[i][l];
                q[k][l] -= t;
            }
        }
    }
    let diag = (0..d).map(|i| q[i][i].clone()).collect();
    let mu = (0..d).map(|i| (0..d).map(|j| if j > i { q[i][j].clone() } else { BigRational::zero() }).collect()).collect();
    Ok(Decomposition { diag, mu })
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Integers `x` with `d (x + c)^2 <= t`.
fn level_range(d: &BigRational, c: &BigRational, t: &BigRational) -> Option<(i64, i64)> {
    if t.is_negative() {
        return None;
    }
    let s = t / d;
    let (cn, cd) = (c.numer(), c.denom());
    let (sn, sd) = (s.numer(), s.denom());
    let u = ((sn * cd * cd).div_floor(sd)).sqrt();
    let lo = ceil_div(&(-cn - &u), cd);
    let hi = (-cn + &u).div_floor(cd);
    Some((lo.to_i64()?, hi.to_i64()?))
}

struct Walk<'a> {
    dec: &'a Decomposition,
    bound: BigRational,
    x: Vec<i64>,
    hits: Vec<(Vec<i64>, u64)>,
}

impl Walk<'_> {
    fn level(&mut self, i: usize, used: BigRational) {
        let d = self.dec;
        let mut c = BigRational::zero();
        for j in i + 1..self.x.len() {
            if self.x[j] != 0 {
                c += &d.mu[i][j] * BigRational::from_integer(BigInt::from(self.x[j]));
            }
        }
        let Some((lo, hi)) = level_range(&d.diag[i], &c, &(&self.bound - &used)) else { return };
        for v in lo..=hi {
            self.x[i] = v;
            let y = &c + BigRational::from_integer(BigInt::from(v));
            let next = &used + &d.diag[i] * &y * &y;
            if i == 0 {
                if self.x.iter().any(|&t| t != 0) {
                    let norm = next.to_integer().to_u64().unwrap_or(u64::MAX);
                    self.hits.push((self.x.clone(), norm));
                }
            } else {
                self.level(i - 1, next);
            }
        }
        self.x[i] = 0;
    }
}

/// Short vectors of norms `1..=bound` found from the basis alone; entry
/// `k` of the result holds norm `k + 1`.
pub fn enumerate_by_basis_oracle(lattice: &Lattice, bound: u64) -> Result<Vec<MinimalVectorSet>> {
    let basis = lattice.basis();
    let gram: Vec<Vec<BigInt>> = lattice.gram().row_iter().map(<[BigInt]>::to_vec).collect();
    let dec = decompose(&gram)?;
    let rank = basis.rows();
    let mut walk = Walk { dec: &dec, bound: BigRational::from_integer(BigInt::from(bound)), x: vec![0; rank], hits: Vec::new() };
    walk.level(rank - 1, BigRational::zero());

    let mut buckets: Vec<Vec<Vec<i64>>> = vec![Vec::new(); bound as usize];
    for (coeffs, norm) in walk.hits {
        let mut v = vec![BigInt::zero(); basis.cols()];
        for (k, &a) in coeffs.iter().enumerate() {
            if a != 0 {
                let a = BigInt::from(a);
                for (vj, bj) in v.iter_mut().zip(basis.row(k)) {
                    *vj += &a * bj;
                }
            }
        }
        let v: Option<Vec<i64>> = v.iter().map(ToPrimitive::to_i64).collect();
        let v = v.ok_or_else(|| Error::Construction("short vector does not fit in i64".into()))?;
        debug_assert_eq!(super::norm_i64(&v), norm);
        buckets[(norm - 1) as usize].push(v);
    }
    Ok(buckets.into_iter().enumerate().map(|(k, vs)| MinimalVectorSet::canonical(k as u64 + 1, vs)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ConstraintRow, ConstraintSystem};

    #[test]
    fn range_is_exact() {
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        // 2 (x + 1/3)^2 <= 5  =>  |x + 1/3| <= 1.58..  =>  x in [-1, 1]
        assert_eq!(level_range(&r(2, 1), &r(1, 3), &r(5, 1)), Some((-1, 1)));
        // (x - 1/2)^2 <= 1/4  =>  x in {0, 1}
        assert_eq!(level_range(&r(1, 1), &r(-1, 2), &r(1, 4)), Some((0, 1)));
        assert_eq!(level_range(&r(1, 1), &r(0, 1), &r(-1, 1)), None);
    }

    #[test]
    fn a2_counts() {
        let c = ConstraintSystem::unlabelled(3, vec![ConstraintRow::new([1, 1, 1], 0)]).unwrap();
        let lat = Lattice::build(c).unwrap();
        let sets = enumerate_by_basis_oracle(&lat, 8).unwrap();
        let counts: Vec<usize> = sets.iter().map(MinimalVectorSet::pairs).collect();
        for (k, set) in sets.iter().enumerate() {
            assert_eq!(set.vectors, lat.vectors_of_norm(k as u64 + 1).vectors);
        }
        // A2 has 6 roots, 6 vectors of norm 6 and 6 of norm 8 (2 x roots).
        assert_eq!(counts, [0, 3, 0, 0, 0, 3, 0, 3]);
    }
}
