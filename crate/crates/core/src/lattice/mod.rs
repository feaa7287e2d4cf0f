//! Lattices given as kernels of congruence systems on `Z^n`.

mod enumerate;
mod oracle;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::{gram_det, kernel_basis, IntMatrix, KernelProblem};

pub use crate::linalg::ConstraintRow;
pub use enumerate::{enumerate_norm, norm_search_stats};
pub use oracle::enumerate_by_basis_oracle;

/// Default cap on the norm searched for a minimum.
pub const DEFAULT_SEARCH_CAP: u64 = 12;

/// Congruence rows over labelled ambient coordinates; the lattice is the
/// set of `v in Z^n` satisfying every row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    ambient_dim: usize,
    labels: Vec<String>,
    rows: Vec<ConstraintRow>,
}

impl ConstraintSystem {
    pub fn new(labels: Vec<String>, rows: Vec<ConstraintRow>) -> Result<Self> {
        let n = labels.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.weights.len() != n) {
            return Err(Error::Shape(format!("constraint row {i} has {} weights for {n} coordinates", r.weights.len())));
        }
        if let Some((i, _)) = rows.iter().enumerate().find(|(_, r)| r.modulus.is_negative()) {
            return Err(Error::InvalidParameter(format!("constraint row {i} has a negative modulus")));
        }
        Ok(ConstraintSystem { ambient_dim: n, labels, rows })
    }

    /// Coordinates labelled `0..n`.
    pub fn unlabelled(n: usize, rows: Vec<ConstraintRow>) -> Result<Self> {
        Self::new((0..n).map(|i| format!("{i}")).collect(), rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[ConstraintRow] {
        &self.rows
    }

    pub fn kernel_problem(&self) -> KernelProblem {
        KernelProblem { ambient_dim: self.ambient_dim, rows: self.rows.clone() }
    }

    /// Whether `v` satisfies every row.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::Shape(format!("vector of length {} in Z^{}", v.len(), self.ambient_dim)));
        }
        Ok(self.rows.iter().all(|r| r.holds(v)))
    }

    pub fn contains_i64(&self, v: &[i64]) -> Result<bool> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains(&big)
    }

    /// The same rows restricted to a subset of the coordinates.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let rows = self
            .rows
            .iter()
            .map(|r| ConstraintRow { weights: keep.iter().map(|&i| r.weights[i].clone()).collect(), modulus: r.modulus.clone() })
            .collect();
        Self::new(labels, rows)
    }
}

/// A lattice with its canonical (Hermite normal form) basis.
#[derive(Clone, Debug)]
pub struct Lattice {
    constraints: ConstraintSystem,
    basis: IntMatrix,
    gram: IntMatrix,
    determinant: BigInt,
}

impl Lattice {
    pub fn build(constraints: ConstraintSystem) -> Result<Self> {
        let basis = kernel_basis(&constraints.kernel_problem());
        if basis.rows() == 0 {
            return Err(Error::Construction("trivial lattice".into()));
        }
        let gram = basis.gram();
        let determinant = gram_det(&basis)?;
        Ok(Lattice { constraints, basis, gram, determinant })
    }

    pub fn constraints(&self) -> &ConstraintSystem {
        &self.constraints
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn determinant(&self) -> &BigInt {
        &self.determinant
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.constraints.ambient_dim()
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        self.constraints.contains(v)
    }

    pub fn contains_i64(&self, v: &[i64]) -> Result<bool> {
        self.constraints.contains_i64(v)
    }

    /// Every lattice vector of squared norm exactly `m`, one per sign pair.
    pub fn vectors_of_norm(&self, m: u64) -> MinimalVectorSet {
        enumerate_norm(&self.constraints, m)
    }

    /// The smallest norm `<= cap` carrying nonzero vectors.
    pub fn minimum(&self, cap: u64) -> Minimum {
        minimum_of(&self.constraints, cap)
    }

    /// Basis rows as small integers, if they fit.
    pub fn basis_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.basis.row_iter().map(|r| r.iter().map(ToPrimitive::to_i64).collect()).collect()
    }
}

/// Vectors of one norm, one representative per `{v, -v}` with the first
/// nonzero coordinate positive, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalVectorSet {
    pub norm: u64,
    pub vectors: Vec<Vec<i64>>,
}

impl MinimalVectorSet {
    pub fn pairs(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Normalises signs, drops duplicates and sorts.
    pub fn canonical(norm: u64, vectors: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut vectors: Vec<Vec<i64>> = vectors.into_iter().map(sign_canonical).collect();
        vectors.sort();
        vectors.dedup();
        MinimalVectorSet { norm, vectors }
    }

    /// Both signs of every vector.
    pub fn signed_vectors(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.vectors.iter().flat_map(|v| [v.clone(), v.iter().map(|x| -x).collect()])
    }
}

/// Flips `v` so that its first nonzero coordinate is positive.
pub fn sign_canonical(mut v: Vec<i64>) -> Vec<i64> {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
    v
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_i64(v: &[i64]) -> u64 {
    v.iter().map(|x| (x * x) as u64).sum()
}

/// Outcome of a bounded minimum search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimum {
    Found(MinimalVectorSet),
    ExceedsCap(u64),
}

impl Minimum {
    pub fn found(self) -> Result<MinimalVectorSet> {
        match self {
            Minimum::Found(s) => Ok(s),
            Minimum::ExceedsCap(cap) => Err(Error::ExceedsCap(cap)),
        }
    }
}

/// Minimum search directly on a constraint system (no basis needed).
pub fn minimum_of(constraints: &ConstraintSystem, cap: u64) -> Minimum {
    for m in 1..=cap {
        let set = enumerate_norm(constraints, m);
        if !set.is_empty() {
            return Minimum::Found(set);
        }
    }
    Minimum::ExceedsCap(cap)
}

/// Whether every nonzero vector has norm at least `2(m + 1)`.
pub fn has_m_lattice_sidon_property(constraints: &ConstraintSystem, m: u64) -> bool {
    matches!(minimum_of(constraints, 2 * (m + 1) - 1), Minimum::ExceedsCap(_))
}
