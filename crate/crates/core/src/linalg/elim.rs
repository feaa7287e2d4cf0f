use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Fraction-free (Bareiss) forward elimination. Returns the rank and, for
/// square input of full rank, the determinant.
fn bareiss(m: &IntMatrix) -> (usize, BigInt) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut negate = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else { continue };
        if p != r {
            a.swap_rows(p, r);
            negate = !negate;
        }
        let pivot = a[(r, c)].clone();
        for i in r + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let v = &a[(i, j)] * &pivot - &lead * &a[(r, j)];
                // Bareiss: the division is exact.
                a[(i, j)] = if prev.is_one() { v } else { v / &prev };
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    let det = if m.is_square() && r == rows {
        if negate {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (r, det)
}

/// Exact rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    bareiss(m).0
}

/// Exact determinant of a square matrix.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Shape(alloc::format!("determinant of {}x{} matrix", m.rows(), m.cols())));
    }
    if m.rows() == 0 {
        return Ok(BigInt::one());
    }
    Ok(bareiss(m).1)
}

/// `det(B * B^t)` for a basis `B`; errors when the rows are dependent.
pub fn gram_det(b: &IntMatrix) -> Result<BigInt> {
    let d = det(&b.gram())?;
    if d.is_zero() {
        Err(Error::SingularGram)
    } else {
        Ok(d)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Rank over `F_p`; a lower bound for the rank over `Q`.
pub fn rank_mod_prime(m: &IntMatrix, p: u64) -> usize {
    let big_p = BigInt::from(p);
    let cols = m.cols();
    let mut rows: Vec<Vec<u64>> = m
        .row_iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&big_p).to_u64().expect("reduced entry")).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, pr);
        let inv = powmod(rows[rank][c], p - 2, p);
        for x in rows[rank][c..].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mulmod(f, pivot_row[j], p);
                row[j] = if row[j] >= sub { row[j] - sub } else { row[j] + p - sub };
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

const RANK_PRIME: u64 = (1 << 61) - 1;

/// Exact rank when an a-priori upper bound is known: the modular rank is a
/// lower bound, so reaching `upper` certifies it; otherwise fall back to
/// fraction-free elimination.
pub fn rank_bounded(m: &IntMatrix, upper: usize) -> usize {
    let upper = upper.min(m.rows()).min(m.cols());
    if rank_mod_prime(m, RANK_PRIME) == upper {
        return upper;
    }
    rank(m)
}

/// Characteristic polynomial `det(tI - M)` by Faddeev-LeVerrier; the
/// coefficient of `t^i` is at index `i`, so the last entry is 1.
pub fn char_poly(m: &IntMatrix) -> Result<Vec<BigInt>> {
    if !m.is_square() {
        return Err(Error::Shape(alloc::format!("characteristic polynomial of {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // acc <- M * acc + c_{n-k+1} I
        let mut next = m.mul(&acc)?;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let tr = m.mul(&next)?.trace();
        let (q, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        coeffs[n - k] = q;
        acc = next;
    }
    Ok(coeffs)
}

/// Evaluates an integer polynomial (ascending coefficients) at a matrix.
#[cfg(test)]
pub(crate) fn eval_poly_at(coeffs: &[BigInt], m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in coeffs.iter().rev() {
        acc = m.mul(&acc).unwrap();
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}


#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntMatrix::identity(4)), 4);
        assert_eq!(rank(&IntMatrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&IntMatrix::zeros(3, 5)), 0);
        assert_eq!(rank_mod_prime(&IntMatrix::from_i64(&[&[1, 2], &[3, 4]]), 2), 1);
        assert_eq!(rank_bounded(&IntMatrix::from_i64(&[&[1, 2], &[3, 4]]), 2), 2);
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(det(&IntMatrix::from_i64(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])).unwrap(), BigInt::from(4));
        assert_eq!(gram_det(&IntMatrix::identity(3)).unwrap(), BigInt::from(1));
        assert_eq!(gram_det(&IntMatrix::from_i64(&[&[1, 1], &[2, 2]])), Err(Error::SingularGram));
        assert!(det(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&IntMatrix::zeros(2, 2)).unwrap(), poly(&[0, 0, 1]));
        assert_eq!(char_poly(&IntMatrix::identity(2)).unwrap(), poly(&[1, -2, 1]));
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
        let m = IntMatrix::from_i64(&[&[2, 1], &[1, 2]]);
        assert_eq!(char_poly(&m).unwrap(), poly(&[3, -4, 1]));
    }

    #[test]
    fn cayley_hamilton_small() {
        let m = IntMatrix::from_i64(&[&[1, 2, 0], &[-1, 3, 4], &[5, 0, -2]]);
        let p = char_poly(&m).unwrap();
        assert!(eval_poly_at(&p, &m).is_zero());
    }
}
