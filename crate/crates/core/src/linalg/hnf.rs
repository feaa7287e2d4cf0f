use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// One congruence `<weights, v> = 0 (mod modulus)`; modulus zero means
/// equality over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstraintRow {
    pub weights: Vec<BigInt>,
    pub modulus: BigInt,
}

impl ConstraintRow {
    pub fn new<T: Into<BigInt>>(weights: impl IntoIterator<Item = T>, modulus: impl Into<BigInt>) -> Self {
        ConstraintRow { weights: weights.into_iter().map(Into::into).collect(), modulus: modulus.into() }
    }

    pub fn is_integral(&self) -> bool {
        self.modulus.is_zero()
    }

    /// Whether `<weights, v>` satisfies the congruence.
    pub fn holds(&self, v: &[BigInt]) -> bool {
        let s = super::matrix::dot(&self.weights, v);
        if self.modulus.is_zero() {
            s.is_zero()
        } else {
            s.mod_floor(&self.modulus).is_zero()
        }
    }
}

/// The lattice `{v in Z^n : <w_i, v> = 0 (mod m_i) for all i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelProblem {
    pub ambient_dim: usize,
    pub rows: Vec<ConstraintRow>,
}

/// `row[target] -= q * row[source]`, touching only columns `from..`.
fn sub_mul_row(a: &mut IntMatrix, target: usize, source: usize, q: &BigInt, from: usize) {
    if q.is_zero() {
        return;
    }
    for j in from..a.cols() {
        let s = &a[(source, j)];
        if !s.is_zero() {
            let delta = q * s;
            a[(target, j)] -= delta;
        }
    }
}

fn negate_row(a: &mut IntMatrix, i: usize) {
    for x in a.row_mut(i) {
        *x = -core::mem::take(x);
    }
}

/// Reduces `a` to row-style Hermite normal form in place and returns its rank.
///
/// Pivots are positive, entries above a pivot lie in `[0, pivot)`, and the
/// zero rows end up at the bottom.
pub(crate) fn hnf_in_place(a: &mut IntMatrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut found = false;
        loop {
            let pivot = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].magnitude().cmp(a[(j, c)].magnitude()));
            let Some(p) = pivot else { break };
            found = true;
            a.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = a[(i, c)].div_floor(&a[(r, c)]);
                sub_mul_row(a, i, r, &q, c);
                if !a[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if a[(r, c)].is_negative() {
            negate_row(a, r);
        }
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            sub_mul_row(a, i, r, &q, c);
        }
        r += 1;
    }
    r
}

/// Row-style Hermite normal form; the row span over `Z` is preserved and
/// the shape is unchanged (zero rows last).
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    hnf_in_place(&mut a);
    a
}

/// Membership of `v` in the row span of a matrix already in Hermite normal form.
pub fn in_row_span(hnf_basis: &IntMatrix, v: &[BigInt]) -> bool {
    debug_assert_eq!(hnf_basis.cols(), v.len());
    let mut v = v.to_vec();
    for row in hnf_basis.row_iter() {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else { continue };
        if v[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, rem) = v[c].div_mod_floor(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for (x, b) in v.iter_mut().zip(row).skip(c) {
                *x -= &q * b;
            }
        }
    }
    v.iter().all(Zero::is_zero)
}

/// A `Z`-basis of the kernel lattice, in Hermite normal form.
///
/// Works on the augmented matrix whose `j`-th row is `(phi(e_j) | e_j)`,
/// stacked with `(m_i e_i | 0)` for every nonzero modulus; rows of its HNF
/// with vanishing image part are exactly a basis of the kernel.
pub fn kernel_basis(p: &KernelProblem) -> IntMatrix {
    let n = p.ambient_dim;
    let r = p.rows.len();
    let moduli: Vec<usize> = (0..r).filter(|&i| !p.rows[i].modulus.is_zero()).collect();
    let mut aug = IntMatrix::zeros(n + moduli.len(), r + n);
    for j in 0..n {
        for (i, row) in p.rows.iter().enumerate() {
            let w = &row.weights[j];
            aug[(j, i)] = if row.modulus.is_zero() { w.clone() } else { w.mod_floor(&row.modulus) };
        }
        aug[(j, r + j)] = BigInt::from(1);
    }
    for (k, &i) in moduli.iter().enumerate() {
        aug[(n + k, i)] = p.rows[i].modulus.abs();
    }
    hnf_in_place(&mut aug);

    let mut data = Vec::new();
    let mut count = 0;
    for row in aug.row_iter() {
        if row[..r].iter().all(Zero::is_zero) && row[r..].iter().any(|x| !x.is_zero()) {
            data.extend(row[r..].iter().cloned());
            count += 1;
        }
    }
    let mut k = IntMatrix::from_vec(count, n, data).expect("kernel block shape");
    hnf_in_place(&mut k);
    k.without_zero_rows()
}
