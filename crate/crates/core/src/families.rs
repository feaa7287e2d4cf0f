//! Lattice families: constructors, the textual family grammar, and the
//! closed-form determinant and minimal-pair counts used for verification.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{distinct_root_histogram, is_prime, prime_power, FiniteField};
use crate::groups::{FinAbelianGroup, GroupElement};
use crate::lattice::{ConstraintRow, ConstraintSystem, Lattice};
use crate::linalg::{hnf, IntMatrix};

/// A named member of one of the supported lattice families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Orthogonal to `(1,..,1)` and to the first `d+2` integers `>= 1` not in `excl`.
    Ld { d: usize, excl: Vec<u64> },
    /// Orthogonal to the first `d+1` odd integers not in `excl`.
    Od { d: usize, excl: Vec<u64> },
    /// Even coordinate sum, orthogonal to the first `d+1` integers `>= 0` not in `excl`.
    Md { d: usize, excl: Vec<u64> },
    /// `L(A)`: zero sum and `sum v_a a = 0` in `A`.
    LA { group: FinAbelianGroup },
    /// `L(A)` restricted to `A` minus the dropped elements.
    LASub { group: FinAbelianGroup, drop: Vec<GroupElement> },
    /// `M(A/±1)`: even sum and `sum v_a a = 0` over representatives of `A/±1`.
    Mneg { group: FinAbelianGroup },
    /// `T(F_2^c)` on the nonzero vectors of `F_2^c`.
    T { c: usize },
    /// `C_{q-1,k}`: zero sum and vanishing power sums of degree `1..=k` over `F_q`.
    Craig { q: u64, k: usize },
    /// The lattice of a Sidon set: zero sum and `sum v_s s = 0`.
    Sidon { group: FinAbelianGroup, set: Vec<GroupElement> },
    /// The lattice of `{(x, 1/x)}` over `F_q^*`.
    SidonInv { q: u64 },
}

/// Closed form against enumeration for one family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub family: String,
    pub quantity: String,
    pub formula_value: BigInt,
    pub enumerated_value: BigInt,
    pub agree: bool,
}

impl FormulaReport {
    fn new(family: &FamilySpec, quantity: String, formula_value: BigInt, enumerated_value: BigInt) -> Self {
        let agree = formula_value == enumerated_value;
        FormulaReport { family: family.to_string(), quantity, formula_value, enumerated_value, agree }
    }
}

fn parse_err(s: &str, why: impl fmt::Display) -> Error {
    Error::Parse(format!("bad family '{s}': {why}"))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad {what} '{t}'"))))
        .collect()
}

fn strictly_increasing(v: &[u64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// `key=value` pairs separated by commas, as in `q=11,k=2`.
fn parse_kv(s: &str) -> Result<Vec<(String, String)>> {
    s.split(',')
        .map(|t| {
            let (k, v) = t.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got '{t}'")))?;
            Ok((k.trim().to_owned(), v.trim().to_owned()))
        })
        .collect()
}

fn lookup<'a>(kv: &'a [(String, String)], key: &str) -> Result<&'a str> {
    kv.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str()).ok_or_else(|| Error::Parse(format!("missing '{key}='")))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let tag = parts[0];
        let arg = |i: usize| parts.get(i).copied().ok_or_else(|| parse_err(s, "missing parameter"));
        let option = |prefix: &str| -> Result<Option<&str>> {
            match parts.get(2) {
                None => Ok(None),
                Some(t) => t.strip_prefix(prefix).map(Some).ok_or_else(|| parse_err(s, format!("expected '{prefix}'"))),
            }
        };
        if parts.len() > 3 {
            return Err(parse_err(s, "too many ':' sections"));
        }
        let spec = match tag {
            "Ld" | "Od" | "Md" => {
                let d: usize = arg(1)?.parse().map_err(|_| parse_err(s, "dimension must be a positive integer"))?;
                let excl = match option("excl=")? {
                    Some(list) => parse_list(list, "exclusion")?,
                    None => Vec::new(),
                };
                match tag {
                    "Ld" => FamilySpec::Ld { d, excl },
                    "Od" => FamilySpec::Od { d, excl },
                    _ => FamilySpec::Md { d, excl },
                }
            }
            "LA" | "Mneg" => {
                if parts.len() > 2 {
                    return Err(parse_err(s, "unexpected options"));
                }
                let group: FinAbelianGroup = arg(1)?.parse().map_err(|e| parse_err(s, e))?;
                if tag == "LA" {
                    FamilySpec::LA { group }
                } else {
                    FamilySpec::Mneg { group }
                }
            }
            "LAsub" | "Sidon" => {
                let group: FinAbelianGroup = arg(1)?.parse().map_err(|e| parse_err(s, e))?;
                let key = if tag == "LAsub" { "drop=" } else { "set=" };
                let list = option(key)?.ok_or_else(|| parse_err(s, format!("missing '{key}'")))?;
                let elems = list
                    .split(',')
                    .map(|t| group.parse_element(t).map_err(|e| parse_err(s, e)))
                    .collect::<Result<Vec<_>>>()?;
                if tag == "LAsub" {
                    FamilySpec::LASub { group, drop: elems }
                } else {
                    FamilySpec::Sidon { group, set: elems }
                }
            }
            "T" => {
                if parts.len() > 2 {
                    return Err(parse_err(s, "unexpected options"));
                }
                FamilySpec::T { c: arg(1)?.parse().map_err(|_| parse_err(s, "c must be a positive integer"))? }
            }
            "Craig" | "SidonInv" => {
                if parts.len() > 2 {
                    return Err(parse_err(s, "unexpected options"));
                }
                let kv = parse_kv(arg(1)?)?;
                let q: u64 = lookup(&kv, "q")?.parse().map_err(|_| parse_err(s, "q must be a positive integer"))?;
                if tag == "Craig" {
                    let k: usize = lookup(&kv, "k")?.parse().map_err(|_| parse_err(s, "k must be a positive integer"))?;
                    FamilySpec::Craig { q, k }
                } else {
                    FamilySpec::SidonInv { q }
                }
            }
            _ => return Err(parse_err(s, format!("unknown family '{tag}'"))),
        };
        spec.validate().map_err(|e| match e {
            Error::Parse(m) | Error::InvalidParameter(m) => parse_err(s, m),
            other => other,
        })?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let elems = |g: &FinAbelianGroup, v: &[GroupElement]| {
            v.iter().map(|a| if g.rank() > 1 { dotted(a) } else { g.label(a) }).collect::<Vec<_>>().join(",")
        };
        match self {
            FamilySpec::Ld { d, excl } | FamilySpec::Od { d, excl } | FamilySpec::Md { d, excl } => {
                let tag = match self {
                    FamilySpec::Ld { .. } => "Ld",
                    FamilySpec::Od { .. } => "Od",
                    _ => "Md",
                };
                if excl.is_empty() {
                    write!(f, "{tag}:{d}")
                } else {
                    write!(f, "{tag}:{d}:excl={}", list(excl))
                }
            }
            FamilySpec::LA { group } => write!(f, "LA:{group}"),
            FamilySpec::LASub { group, drop } => write!(f, "LAsub:{group}:drop={}", elems(group, drop)),
            FamilySpec::Mneg { group } => write!(f, "Mneg:{group}"),
            FamilySpec::T { c } => write!(f, "T:{c}"),
            FamilySpec::Craig { q, k } => write!(f, "Craig:q={q},k={k}"),
            FamilySpec::Sidon { group, set } => write!(f, "Sidon:{group}:set={}", elems(group, set)),
            FamilySpec::SidonInv { q } => write!(f, "SidonInv:q={q}"),
        }
    }
}

fn dotted(a: &GroupElement) -> String {
    a.components.iter().map(u64::to_string).collect::<Vec<_>>().join(".")
}

impl FamilySpec {
    /// Checks that parameters are in range; exclusions must lie in the
    /// window of values the construction can reach.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        match self {
            FamilySpec::Ld { d, excl } | FamilySpec::Od { d, excl } | FamilySpec::Md { d, excl } => {
                if *d == 0 {
                    return bad("dimension must be at least 1".into());
                }
                if !strictly_increasing(excl) {
                    return bad("exclusions must be strictly increasing".into());
                }
                let k = excl.len() as u64;
                let d = *d as u64;
                let (lo, hi) = match self {
                    FamilySpec::Ld { .. } => (1, d + 2 + k),
                    FamilySpec::Od { .. } => (1, 2 * (d + k) + 1),
                    _ => (0, d + k),
                };
                if let Some(a) = excl.iter().find(|&&a| a < lo || a > hi) {
                    return bad(format!("exclusion {a} outside {lo}..={hi}"));
                }
                if matches!(self, FamilySpec::Od { .. }) {
                    if let Some(a) = excl.iter().find(|&&a| a % 2 == 0) {
                        return bad(format!("exclusion {a} is not odd"));
                    }
                }
                Ok(())
            }
            FamilySpec::LASub { group, drop } => {
                let mut sorted = drop.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != drop.len() {
                    return bad("dropped elements must be distinct".into());
                }
                if drop.len() as u64 + 1 >= group.order() {
                    return bad("too many dropped elements".into());
                }
                Ok(())
            }
            FamilySpec::Sidon { set, .. } => {
                let mut sorted = set.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != set.len() {
                    return bad("set elements must be distinct".into());
                }
                if set.len() < 2 {
                    return bad("a Sidon set needs at least two elements".into());
                }
                Ok(())
            }
            FamilySpec::T { c } => {
                if !(2..=12).contains(c) {
                    return bad(format!("c = {c} outside 2..=12"));
                }
                Ok(())
            }
            FamilySpec::Craig { q, k } => {
                if *q < 2 || *k == 0 {
                    return bad("need q >= 2 and k >= 1".into());
                }
                Ok(())
            }
            FamilySpec::SidonInv { q } => {
                if *q < 3 {
                    return bad("need q >= 3".into());
                }
                Ok(())
            }
            FamilySpec::LA { .. } | FamilySpec::Mneg { .. } => Ok(()),
        }
    }

    /// The constraint system of this family member.
    pub fn make(&self) -> Result<ConstraintSystem> {
        self.validate()?;
        match self {
            FamilySpec::Ld { d, excl } => ld_constraints(*d, excl),
            FamilySpec::Od { d, excl } => {
                let w = first_missing((0..).map(|i| 2 * i + 1), excl, d + 1);
                system_from_weights(&w, vec![ConstraintRow::new(w.clone(), 0)])
            }
            FamilySpec::Md { d, excl } => {
                let w = first_missing(0.., excl, d + 1);
                system_from_weights(&w, vec![ConstraintRow::new(w.clone(), 0), ConstraintRow::new(vec![1; d + 1], 2)])
            }
            FamilySpec::LA { group } => {
                let elems: Vec<GroupElement> = group.elements().collect();
                group_system(group, &elems, 0)
            }
            FamilySpec::LASub { group, drop } => {
                let elems: Vec<GroupElement> = group.elements().filter(|a| !drop.contains(a)).collect();
                group_system(group, &elems, 0)
            }
            FamilySpec::Mneg { group } => group_system(group, &group.mod_negation_reps(), 2),
            FamilySpec::T { c } => {
                let group = FinAbelianGroup::elementary_two(*c);
                let elems: Vec<GroupElement> = group.elements().skip(1).collect();
                let labels = elems.iter().map(|a| a.components.iter().map(u64::to_string).collect()).collect();
                ConstraintSystem::new(labels, component_rows(&group, &elems))
            }
            FamilySpec::Craig { q, k } => craig_constraints(&craig_field(*q, *k)?, *k),
            FamilySpec::Sidon { group, set } => {
                if !group.is_sidon(set) {
                    return Err(Error::Construction(format!("not a Sidon set in {group}")));
                }
                group_system(group, set, 0)
            }
            FamilySpec::SidonInv { q } => {
                let field = FiniteField::with_order(*q)?;
                if field.characteristic() == 2 {
                    return Err(Error::Construction("inverse-pair Sidon set needs odd characteristic".into()));
                }
                let elems: Vec<_> = field.elements().skip(1).collect();
                let labels = elems.iter().map(|x| field.label(x)).collect();
                let mut rows = vec![ConstraintRow::new(vec![1; elems.len()], 0)];
                let inverses: Vec<_> = elems.iter().map(|x| field.inv(x).expect("nonzero")).collect();
                for values in [&elems, &inverses] {
                    for c in 0..field.degree() {
                        rows.push(ConstraintRow::new(values.iter().map(|x| x.coeffs[c]), field.characteristic()));
                    }
                }
                ConstraintSystem::new(labels, rows)
            }
        }
    }

    /// Builds the lattice of this family member.
    pub fn lattice(&self) -> Result<Lattice> {
        Lattice::build(self.make()?)
    }

    /// Norm at which [`FamilySpec::minpair_formula`] counts vectors.
    pub fn formula_norm(&self) -> u64 {
        match self {
            FamilySpec::T { .. } => 3,
            FamilySpec::Craig { k, .. } => 2 * (*k as u64 + 1),
            FamilySpec::Sidon { .. } | FamilySpec::SidonInv { .. } => 6,
            _ => 4,
        }
    }

    /// Closed-form determinant.
    pub fn det_formula(&self) -> Result<BigInt> {
        let b = |x: u64| BigInt::from(x);
        match self {
            FamilySpec::Ld { d, excl } if excl.is_empty() => {
                let d = *d as u64;
                Ok(b(d + 1) * b(d + 2) * b(d + 2) * b(d + 3) / 12)
            }
            FamilySpec::Od { d, excl } if excl.is_empty() => {
                let d = *d as u64;
                Ok(b(d + 1) * b(2 * d + 1) * b(2 * d + 3) / 3)
            }
            FamilySpec::Md { d, excl } if excl.is_empty() => {
                let d = *d as u64;
                Ok(b(2) * b(d) * b(d + 1) * b(2 * d + 1) / 3)
            }
            FamilySpec::LA { group } => Ok(b(group.order()).pow(3)),
            FamilySpec::Mneg { group } => Ok(b(4) * b(group.order()).pow(2)),
            FamilySpec::T { c } => Ok(b(4).pow(*c as u32)),
            FamilySpec::Craig { q, k } => {
                craig_field(*q, *k)?;
                Ok(b(*q).pow(2 * *k as u32 + 1))
            }
            _ => Err(Error::NoClosedForm(format!("no determinant formula for {self}"))),
        }
    }

    /// Closed-form number of vector pairs at [`FamilySpec::formula_norm`].
    pub fn minpair_formula(&self) -> Result<BigInt> {
        let b = |x: u64| BigInt::from(x);
        match self {
            FamilySpec::Ld { d, excl } if excl.is_empty() => {
                let d = *d as u64;
                Ok(if d.is_multiple_of(2) {
                    b(d) * b(d + 2) * b(2 * d - 1) / 24
                } else {
                    b(d - 1) * b(d + 1) * b(2 * d + 3) / 24
                })
            }
            FamilySpec::Od { d, excl } if excl.is_empty() => {
                const C: [i64; 3] = [0, 4, 2];
                let d = BigInt::from(*d);
                let c = C[(&d % 3u8).to_usize().unwrap()];
                Ok((BigInt::from(2) * d.pow(3) - 3 * d.pow(2) - 3 * &d + c) / 18)
            }
            FamilySpec::Md { d, excl } if excl.is_empty() => {
                const C: [i64; 6] = [36, 41, 28, 45, 32, 37];
                let d = BigInt::from(*d);
                let c = C[(&d % 6u8).to_usize().unwrap()];
                Ok((BigInt::from(4) * d.pow(3) - 3 * d.pow(2) - 6 * &d + c) / 36)
            }
            FamilySpec::LA { group } => la_pair_formula(group),
            FamilySpec::LASub { group, drop } if drop.len() == 1 => la_one_missing_formula(group),
            FamilySpec::T { c } => {
                let n = b((1u64 << c) - 1);
                Ok(BigInt::from(4) * binom2_int(&n) / 3)
            }
            FamilySpec::Craig { q, k } => {
                let field = craig_field(*q, *k)?;
                match k {
                    2 if matches!(q % 6, 1 | 5) => craig_count_k2_closed(*q),
                    3 if is_prime(*q) && *q > 5 => craig_count_k3_closed(*q),
                    _ => craig_pair_count(&field, *k),
                }
            }
            _ => Err(Error::NoClosedForm(format!("no pair-count formula for {self}"))),
        }
    }
}

fn first_missing(candidates: impl Iterator<Item = u64>, excl: &[u64], n: usize) -> Vec<u64> {
    candidates.filter(|a| !excl.contains(a)).take(n).collect()
}

fn system_from_weights(w: &[u64], rows: Vec<ConstraintRow>) -> Result<ConstraintSystem> {
    ConstraintSystem::new(w.iter().map(u64::to_string).collect(), rows)
}

/// `L_d(excl)` for any exclusion list, including values past the window
/// (which then have no effect).
pub fn ld_constraints(d: usize, excl: &[u64]) -> Result<ConstraintSystem> {
    let w = first_missing(1.., excl, d + 2);
    system_from_weights(&w, vec![ConstraintRow::new(vec![1; d + 2], 0), ConstraintRow::new(w.clone(), 0)])
}

/// One row per invariant factor: `sum v_a a_j = 0 mod m_j`.
fn component_rows(group: &FinAbelianGroup, elems: &[GroupElement]) -> Vec<ConstraintRow> {
    group
        .factors()
        .iter()
        .enumerate()
        .map(|(j, &m)| ConstraintRow::new(elems.iter().map(|a| a.components[j]), m))
        .collect()
}

/// Sum row with the given modulus (0 for zero sum, 2 for even sum) plus the
/// group rows, over the listed coordinates.
fn group_system(group: &FinAbelianGroup, elems: &[GroupElement], sum_modulus: u64) -> Result<ConstraintSystem> {
    let labels = elems.iter().map(|a| group.label(a)).collect();
    let mut rows = vec![ConstraintRow::new(vec![1; elems.len()], sum_modulus)];
    rows.extend(component_rows(group, elems));
    ConstraintSystem::new(labels, rows)
}

fn craig_field(q: u64, k: usize) -> Result<FiniteField> {
    let field = FiniteField::with_order(q)?;
    if k as u64 >= field.characteristic() {
        return Err(Error::PowerSumsDegenerate { k, p: field.characteristic() });
    }
    Ok(field)
}

/// `C_{q-1,k}` over the coordinates of `F_q` (in field index order).
pub fn craig_constraints(field: &FiniteField, k: usize) -> Result<ConstraintSystem> {
    let elems: Vec<_> = field.elements().collect();
    let labels = elems.iter().map(|x| field.label(x)).collect();
    let mut rows = vec![ConstraintRow::new(vec![1; elems.len()], 0)];
    for i in 1..=k {
        let powers: Vec<_> = elems.iter().map(|x| field.pow(x, i as u64)).collect();
        for c in 0..field.degree() {
            rows.push(ConstraintRow::new(powers.iter().map(|x| x.coeffs[c]), field.characteristic()));
        }
    }
    ConstraintSystem::new(labels, rows)
}

fn binom2(x: &BigRational) -> BigRational {
    x * (x - BigRational::one()) / BigInt::from(2)
}

fn binom2_int(n: &BigInt) -> BigInt {
    n * (n - 1) / 2
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn integral(x: BigRational, what: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::Construction(format!("{what} is not an integer: {x}")))
    }
}

/// Pairs of norm-4 vectors in `L(A)`.
pub fn la_pair_formula(group: &FinAbelianGroup) -> Result<BigInt> {
    let n = rat(group.order());
    let t = rat(1 << group.two_torsion_rank());
    let two = rat(2);
    let v = &n * (BigRational::one() - t.recip()) * binom2(&(&n / &two)) + &n / &t * binom2(&((&n - &t) / &two));
    integral(v, "pair count")
}

/// Pairs of norm-4 vectors in `L(A)` restricted to `A` minus one element.
pub fn la_one_missing_formula(group: &FinAbelianGroup) -> Result<BigInt> {
    let n = rat(group.order());
    let t = rat(1 << group.two_torsion_rank());
    let one = BigRational::one();
    let two = rat(2);
    let v = &n * (&one - t.recip()) * binom2(&(&n / &two - &one))
        + (&n - &t) / &t * binom2(&((&n - &t) / &two - &one))
        + binom2(&((&n - &t) / &two));
    integral(v, "pair count")
}

/// Pairs of minimal vectors of `C_{q-1,k}` from the root-pattern histogram.
pub fn craig_pair_count(field: &FiniteField, k: usize) -> Result<BigInt> {
    let hist = distinct_root_histogram(field, k)?;
    Ok(hist.values().map(|&n| binom2_int(&BigInt::from(n))).sum())
}

/// The convexity lower bound `q^k B(C(q,k+1)/q^k)` with `B(x) = x(x-1)/2`.
pub fn craig_lower_bound(q: u64, k: usize) -> BigRational {
    let qk = BigInt::from(q).pow(k as u32);
    let subsets = binomial(q, k as u64 + 1);
    let x = BigRational::new(subsets, qk.clone());
    BigRational::from_integer(qk) * binom2(&x)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Closed form for `k = 2`; defined for prime powers `q = 1, 5 mod 6`.
pub fn craig_count_k2_closed(q: u64) -> Result<BigInt> {
    if prime_power(q).is_none() || !matches!(q % 6, 1 | 5) {
        return Err(Error::OutsideTheorem(format!("q = {q} is not a prime power congruent to 1 or 5 mod 6")));
    }
    let b = BigInt::from(q);
    let tail = if q % 6 == 1 { &b * &b - 10 * &b + 33 } else { (&b - 5) * (&b - 5) };
    Ok(&b * (&b - 1) * tail / 72)
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs odd n");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut s = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                s = -s;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            s = -s;
        }
        a %= n;
    }
    if n == 1 {
        s
    } else {
        0
    }
}

/// `q = m^2 + 2 n^2` with `m, n >= 1`, by search.
pub fn two_square_form(q: u64) -> Option<(u64, u64)> {
    (1..).take_while(|n| 2 * n * n < q).find_map(|n| {
        let r = q - 2 * n * n;
        let m = num_integer::Roots::sqrt(&r);
        (m * m == r && m > 0).then_some((m, n))
    })
}

/// The constant `c_q` of the `k = 3` closed form.
pub fn craig_k3_constant(q: u64) -> Result<i64> {
    if !is_prime(q) || q <= 5 {
        return Err(Error::OutsideTheorem(format!("q = {q} is not a prime greater than 5")));
    }
    let l1 = i64::from(jacobi(-1, q));
    let l3 = i64::from(jacobi(-3, q));
    let delta = if jacobi(-2, q) == -1 {
        0
    } else {
        let (m, n) = two_square_form(q).ok_or_else(|| Error::Construction(format!("no m^2 + 2n^2 form for {q}")))?;
        24 * (m as i64 * m as i64 - 2 * n as i64 * n as i64) + 192 + 72 * l1
    };
    Ok(483 + 36 * l1 + 64 * l3 + delta)
}

/// Closed form for `k = 3`; defined for primes `q > 5`.
pub fn craig_count_k3_closed(q: u64) -> Result<BigInt> {
    let c = craig_k3_constant(q)?;
    let b = BigInt::from(q);
    let cubic = b.pow(3) - 21 * b.pow(2) + 171 * &b - c;
    let v: BigInt = &b * (&b - 1) * cubic;
    let (quot, rem) = v.div_rem(&BigInt::from(1152));
    if !rem.is_zero() {
        return Err(Error::Construction(format!("k = 3 closed form not integral at q = {q}")));
    }
    Ok(quot)
}

/// Closed-form determinant against the built lattice.
pub fn verify_det(spec: &FamilySpec) -> Result<FormulaReport> {
    let formula = spec.det_formula()?;
    let lattice = spec.lattice()?;
    Ok(FormulaReport::new(spec, "det".into(), formula, lattice.determinant().clone()))
}

/// Closed-form pair count against enumeration at the formula's norm.
pub fn verify_formula(spec: &FamilySpec) -> Result<FormulaReport> {
    let formula = spec.minpair_formula()?;
    let c = spec.make()?;
    let norm = spec.formula_norm();
    let found = crate::lattice::enumerate_norm(&c, norm).pairs();
    Ok(FormulaReport::new(spec, format!("pairs of norm {norm}"), formula, BigInt::from(found)))
}

/// Compares the lattice generated by `L(A)` vectors of norm `<= 4`
/// supported on the kept coordinates with the restricted kernel.
pub fn supported_span_matches(group: &FinAbelianGroup, drop: &[GroupElement]) -> Result<bool> {
    let spec = FamilySpec::LASub { group: group.clone(), drop: drop.to_vec() };
    let restricted = spec.lattice()?;
    let c = restricted.constraints();
    let vectors: Vec<Vec<i64>> = (1..=4).flat_map(|m| crate::lattice::enumerate_norm(c, m).vectors).collect();
    if vectors.is_empty() {
        return Ok(false);
    }
    let span = hnf(&IntMatrix::from_rows(c.ambient_dim(), vectors.iter())?).without_zero_rows();
    Ok(&span == restricted.basis())
}
