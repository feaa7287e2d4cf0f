//! Perfection defaults, symmetric-power ranks, and invariants of minimal
//! vector configurations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::{binomial, ld_constraints, FamilySpec};
use crate::groups::FinAbelianGroup;
use crate::lattice::{dot_i64, enumerate_norm, sign_canonical, Lattice, MinimalVectorSet, Minimum};
use crate::linalg::{char_poly, rank_bounded, IntMatrix};

fn small_binomial(n: usize, k: usize) -> usize {
    binomial(n as u64, k as u64).to_usize().unwrap_or(usize::MAX)
}

fn matrix_of(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows.iter()).expect("rows of equal length")
}

/// Rank of a set of integer vectors.
pub fn vector_rank(vectors: &[Vec<i64>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    rank_bounded(&matrix_of(vectors, first.len()), vectors.len().min(first.len()))
}

/// Rank of `{v v^t}` using the products `v_i v_j`, `i <= j`.
pub fn sym_square_rank(vectors: &[Vec<i64>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let n = first.len();
    let rows: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| (0..n).flat_map(|i| (i..n).map(move |j| v[i] * v[j])).collect())
        .collect();
    let r = vector_rank(vectors);
    rank_bounded(&matrix_of(&rows, n * (n + 1) / 2), r * (r + 1) / 2)
}

/// Dimension, determinant, minimum and perfection default of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectionReport {
    pub d: usize,
    pub det: BigInt,
    pub min_norm: u64,
    pub mp: usize,
    pub sym_rank: usize,
    pub pd: usize,
}

impl PerfectionReport {
    pub fn is_perfect(&self) -> bool {
        self.pd == 0
    }
}

pub fn perfection_report(lattice: &Lattice, min_cap: u64) -> Result<PerfectionReport> {
    let mins = lattice.minimum(min_cap).found()?;
    Ok(report_from_minimum(lattice, &mins))
}

/// Report for a lattice whose minimal vectors are already known.
pub fn report_from_minimum(lattice: &Lattice, mins: &MinimalVectorSet) -> PerfectionReport {
    let d = lattice.rank();
    let sym_rank = sym_square_rank(&mins.vectors);
    PerfectionReport {
        d,
        det: lattice.determinant().clone(),
        min_norm: mins.norm,
        mp: mins.pairs(),
        sym_rank,
        pd: d * (d + 1) / 2 - sym_rank,
    }
}

/// Ranks `alpha_k` of the `k`-th symmetric powers for `k = 0..=kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaSeries {
    pub dims: Vec<usize>,
    /// Whether the last rank equals the number of distinct lines.
    pub stabilized: bool,
}

/// Exponent vectors of the monomials of degree `k` in `n` variables.
fn monomials(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `alpha_k` for `k <= kmax`; the monomial count `C(n+k-1, k)` must not
/// exceed `budget`.
pub fn alpha_series(vectors: &[Vec<i64>], kmax: usize, budget: usize) -> Result<AlphaSeries> {
    if kmax == 0 {
        return Err(Error::InvalidParameter("kmax must be at least 1".into()));
    }
    let Some(first) = vectors.first() else {
        return Err(Error::InvalidParameter("empty vector set".into()));
    };
    let n = first.len();
    let needed = small_binomial(n + kmax - 1, kmax);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut lines: Vec<Vec<i64>> = vectors.iter().filter(|v| v.iter().any(|&x| x != 0)).cloned().map(sign_canonical).collect();
    lines.sort();
    lines.dedup();
    let r = vector_rank(&lines);
    let mut dims = vec![1];
    for k in 1..=kmax {
        let monos = monomials(n, k);
        let rows: Vec<Vec<BigInt>> =
            lines.iter().map(|v| monos.iter().map(|m| m.iter().map(|&i| BigInt::from(v[i])).product()).collect()).collect();
        let m = IntMatrix::from_rows(monos.len(), rows.iter())?;
        dims.push(rank_bounded(&m, small_binomial(r + k - 1, k).min(lines.len())));
    }
    let stabilized = *dims.last().unwrap() == lines.len();
    Ok(AlphaSeries { dims, stabilized })
}

/// Outcome of the hyperplane splitting test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneSplit {
    /// Rank of the symmetric squares of the vectors orthogonal to `w`.
    pub section_sym_rank: usize,
    /// Rank of the vectors not orthogonal to `w`.
    pub complement_rank: usize,
    pub hypotheses_hold: bool,
    /// The sufficient condition applies.
    pub implies_perfect: bool,
    /// When it applies, whether the full symmetric-square rank is maximal.
    pub confirmed: Option<bool>,
}

/// Tests whether the vectors in `w^⊥` are perfect in the hyperplane and the
/// others span the whole `dim`-dimensional space.
pub fn hyperplane_split_check(vectors: &[Vec<i64>], w: &[i64], dim: usize) -> Result<HyperplaneSplit> {
    if w.iter().all(|&x| x == 0) {
        return Err(Error::InvalidParameter("normal vector must be nonzero".into()));
    }
    if vectors.iter().any(|v| v.len() != w.len()) {
        return Err(Error::Shape("normal vector length differs from the vectors".into()));
    }
    let (section, rest): (Vec<Vec<i64>>, Vec<Vec<i64>>) = vectors.iter().cloned().partition(|v| dot_i64(v, w) == 0);
    let section_sym_rank = sym_square_rank(&section);
    let complement_rank = vector_rank(&rest);
    let hypotheses_hold = dim >= 1 && section_sym_rank == dim * (dim - 1) / 2 && complement_rank == dim;
    let confirmed = hypotheses_hold.then(|| sym_square_rank(vectors) == dim * (dim + 1) / 2);
    Ok(HyperplaneSplit { section_sym_rank, complement_rank, hypotheses_hold, implies_perfect: hypotheses_hold, confirmed })
}

/// Membership of `L_d(excl)` in the set of perfect minimum-4 lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DScanEntry {
    pub d: usize,
    pub min_norm: Option<u64>,
    pub pd: Option<usize>,
    pub in_p: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DScan {
    pub entries: Vec<DScanEntry>,
    /// `max(7, 2(k+1)^3 - 1)`: beyond this every `L_d(excl)` is perfect.
    pub tail_bound: usize,
    /// Successor of the largest `d <= d_max` outside the set, when the
    /// scan reaches the tail bound.
    pub value: Option<usize>,
}

pub fn d_tail_bound(k: usize) -> usize {
    (2 * (k + 1).pow(3) - 1).max(7)
}

/// Perfection and minimum of a single `L_d(excl)`.
pub fn scan_entry(d: usize, excl: &[u64]) -> Result<DScanEntry> {
    let c = ld_constraints(d, excl)?;
    let lattice = Lattice::build(c)?;
    let below = (1..4).any(|m| !enumerate_norm(lattice.constraints(), m).is_empty());
    let fours = enumerate_norm(lattice.constraints(), 4);
    if below || fours.is_empty() {
        let min_norm = match lattice.minimum(crate::lattice::DEFAULT_SEARCH_CAP) {
            Minimum::Found(s) => Some(s.norm),
            Minimum::ExceedsCap(_) => None,
        };
        return Ok(DScanEntry { d, min_norm, pd: None, in_p: false });
    }
    let report = report_from_minimum(&lattice, &fours);
    Ok(DScanEntry { d, min_norm: Some(4), pd: Some(report.pd), in_p: report.pd == 0 })
}

/// Assembles the scan result from entries for `d = 1..=d_max`.
pub fn summarize_scan(k: usize, entries: Vec<DScanEntry>) -> DScan {
    let tail_bound = d_tail_bound(k);
    let d_max = entries.iter().map(|e| e.d).max().unwrap_or(0);
    let value = (d_max >= tail_bound).then(|| entries.iter().filter(|e| !e.in_p).map(|e| e.d).max().unwrap_or(0) + 1);
    DScan { entries, tail_bound, value }
}

#[allow(non_snake_case)]
pub fn scan_D(excl: &[u64], d_max: usize) -> Result<DScan> {
    let entries = (1..=d_max).map(|d| scan_entry(d, excl)).collect::<Result<Vec<_>>>()?;
    Ok(summarize_scan(excl.len(), entries))
}

/// Neighbour statistics of a minimal vector of `L_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborStats {
    pub count: usize,
    pub gamma: BigRational,
    pub delta: BigRational,
    /// `2d (min(gamma, 1 - gamma) + 2 - delta)`.
    pub main_term: BigRational,
}

/// `(i, alpha, beta)` with `v = ±(e_i - e_{i+a} - e_{i+a+b} + e_{i+2a+b})`,
/// coordinates numbered from 1.
pub fn ld_pattern(v: &[i64]) -> Option<(usize, usize, usize)> {
    let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    let [p1, p2, p3, p4] = support[..] else { return None };
    let s = v[p1];
    let signs = [v[p1], v[p2], v[p3], v[p4]];
    if s.abs() != 1 || signs != [s, -s, -s, s] || p1 + p4 != p2 + p3 {
        return None;
    }
    Some((p1 + 1, p2 - p1, p3 - p2))
}

/// Neighbours of `v` among the minimal vectors `mins` of `L_d`.
pub fn neighbor_stats(d: usize, mins: &MinimalVectorSet, v: &[i64]) -> Result<NeighborStats> {
    let (i, alpha, beta) = ld_pattern(v).ok_or_else(|| Error::InvalidParameter(format!("{v:?} is not a minimal vector pattern")))?;
    let count = mins
        .vectors
        .iter()
        .filter(|w| {
            let s: i64 = w.iter().zip(v).filter(|(&x, _)| x != 0).map(|(x, y)| x * y).sum();
            s.abs() == 2
        })
        .count();
    let r = |n: usize, m: usize| BigRational::new(BigInt::from(n), BigInt::from(m));
    // Centre measured from the first coordinate as position 0.
    let gamma = r(2 * (i - 1 + alpha) + beta, 2 * (d + 1));
    let delta = r(2 * alpha + beta, d + 1);
    let one = BigRational::one();
    let near = if gamma < &one - &gamma { gamma.clone() } else { &one - &gamma };
    let main_term = BigRational::from_integer(BigInt::from(2 * d)) * (near + BigRational::from_integer(BigInt::from(2)) - &delta);
    Ok(NeighborStats { count, gamma, delta, main_term })
}

/// Graph on pair representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinVectorGraph {
    pub vertices: Vec<Vec<i64>>,
    pub adjacency: IntMatrix,
}

impl MinVectorGraph {
    /// Edges between representatives whose scalar product equals `value`.
    pub fn from_predicate(vertices: Vec<Vec<i64>>, value: i64) -> Self {
        let n = vertices.len();
        let mut adjacency = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j && dot_i64(&vertices[i], &vertices[j]) == value {
                    adjacency[(i, j)] = BigInt::one();
                }
            }
        }
        MinVectorGraph { vertices, adjacency }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    fn degree(&self, i: usize) -> usize {
        self.adjacency.row(i).iter().filter(|x| !x.is_zero()).count()
    }

    /// `(v, k, lambda, mu)` if `A^2 = kI + lambda A + mu (J - I - A)`.
    pub fn srg_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.order();
        if n < 2 {
            return None;
        }
        let k = self.degree(0);
        if (1..n).any(|i| self.degree(i) != k) {
            return None;
        }
        let a = &self.adjacency;
        let sq = a.mul(a).ok()?;
        let mut lambda = None;
        let mut mu = None;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let slot = if a[(i, j)].is_one() { &mut lambda } else { &mut mu };
                let v = sq[(i, j)].to_usize()?;
                if *slot.get_or_insert(v) != v {
                    return None;
                }
            }
        }
        if (0..n).any(|i| sq[(i, i)] != BigInt::from(k)) {
            return None;
        }
        Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
    }

    pub fn char_poly(&self) -> Result<Vec<BigInt>> {
        char_poly(&self.adjacency)
    }

    /// Integer eigenvalues with multiplicities, and the degree of the part
    /// of the characteristic polynomial left without integer roots.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let poly = self.char_poly()?;
        let bound = (0..self.order()).map(|i| self.degree(i)).max().unwrap_or(0) as i64;
        Ok(integer_roots(poly, bound))
    }

    /// For each vertex, the number of other vertices orthogonal to it,
    /// tallied as `count -> number of vertices`.
    pub fn orthogonality_profile(&self) -> BTreeMap<usize, usize> {
        orthogonality_profile(&self.vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub roots: BTreeMap<i64, usize>,
    pub residual_degree: usize,
}

/// Synthetic division; `None` if `r` is not a root.
fn divide_root(poly: &[BigInt], r: i64) -> Option<Vec<BigInt>> {
    let n = poly.len() - 1;
    if n == 0 {
        return None;
    }
    let r = BigInt::from(r);
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        carry = &poly[i] + &carry * &r;
        out[i - 1] = carry.clone();
    }
    (&poly[0] + &carry * &r).is_zero().then_some(out)
}

/// Integer roots in `[-bound, bound]` of a polynomial with ascending coefficients.
pub fn integer_roots(mut poly: Vec<BigInt>, bound: i64) -> Spectrum {
    let mut roots = BTreeMap::new();
    for r in -bound..=bound {
        while let Some(q) = divide_root(&poly, r) {
            poly = q;
            *roots.entry(r).or_insert(0) += 1;
        }
    }
    Spectrum { roots, residual_degree: poly.len() - 1 }
}

pub fn orthogonality_profile(vectors: &[Vec<i64>]) -> BTreeMap<usize, usize> {
    let mut profile = BTreeMap::new();
    for (i, v) in vectors.iter().enumerate() {
        let c = vectors.iter().enumerate().filter(|&(j, w)| j != i && dot_i64(v, w) == 0).count();
        *profile.entry(c).or_insert(0) += 1;
    }
    profile
}

/// The graph on minimal pairs other than `±w`, with representatives
/// oriented so that `<w, v> = 1` and edges where `<v_i, v_j> = -1`.
/// Pairs with `<w, v>` not `±1` are left out.
pub fn base_vector_graph(mins: &MinimalVectorSet, w: &[i64]) -> Result<MinVectorGraph> {
    let canon = sign_canonical(w.to_vec());
    if !mins.vectors.contains(&canon) {
        return Err(Error::InvalidParameter(format!("{w:?} is not a minimal vector")));
    }
    let vertices: Vec<Vec<i64>> = mins
        .vectors
        .iter()
        .filter(|v| **v != canon)
        .filter_map(|v| match dot_i64(v, w) {
            1 => Some(v.clone()),
            -1 => Some(v.iter().map(|x| -x).collect()),
            _ => None,
        })
        .collect();
    Ok(MinVectorGraph::from_predicate(vertices, -1))
}

/// The default base vector of the `T(F_2^3)` construction: the line `{001, 010, 011}`.
pub const SCHLAFLI_BASE: [i64; 7] = [1, 1, 1, 0, 0, 0, 0];

/// Whether all scalar products between minimal vectors of `L(F_2^k)` are even.
#[allow(non_snake_case)]
pub fn parity_check_LF2k(k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let spec = FamilySpec::LA { group: FinAbelianGroup::elementary_two(k) };
    let mins = spec.lattice()?.minimum(crate::lattice::DEFAULT_SEARCH_CAP).found()?;
    let vs = &mins.vectors;
    Ok(vs.iter().enumerate().all(|(i, v)| vs[i + 1..].iter().all(|w| dot_i64(v, w) % 2 == 0)))
}
