use latlab_core::families::{
    craig_count_k2_closed, craig_count_k3_closed, craig_lower_bound, craig_pair_count, la_one_missing_formula, la_pair_formula,
    ld_constraints, supported_span_matches, verify_det, verify_formula,
};
use latlab_core::groups::abelian_groups_of_order;
use latlab_core::lattice::enumerate_norm;
use latlab_core::{FamilySpec, FinAbelianGroup, FiniteField, Lattice};
use num_bigint::BigInt;
use num_rational::BigRational;

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

#[derive(Clone, Copy)]
enum SumRow {
    Zero,
    Even,
    Absent,
}

/// Norm-4 pairs of `{v : sum v_i w_i = 0}` with the given sum condition,
/// counted from `+-2 e_i` and four `+-1` entries.
fn norm4_pairs(w: &[i64], sum: SumRow) -> usize {
    let sum_ok = |s: i64| match sum {
        SumRow::Zero => s == 0,
        SumRow::Even => s % 2 == 0,
        SumRow::Absent => true,
    };
    let mut count = w.iter().filter(|&&x| x == 0 && sum_ok(2)).count();
    let n = w.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for signs in 0..8u32 {
                        let e = [1, if signs & 1 == 0 { 1 } else { -1 }, if signs & 2 == 0 { 1 } else { -1 }, if signs & 4 == 0 { 1 } else { -1 }];
                        let s: i64 = e.iter().sum();
                        let dot = e[0] * w[a] + e[1] * w[b] + e[2] * w[c] + e[3] * w[d];
                        if dot == 0 && sum_ok(s) {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

fn ld_weights(d: usize) -> Vec<i64> {
    (1..=d as i64 + 2).collect()
}

fn od_weights(d: usize) -> Vec<i64> {
    (0..=d as i64).map(|i| 2 * i + 1).collect()
}

fn md_weights(d: usize) -> Vec<i64> {
    (0..=d as i64).collect()
}

#[test]
fn determinant_formulas_hold() {
    for d in 3..=20 {
        for s in [format!("Ld:{d}"), format!("Od:{d}"), format!("Md:{d}")] {
            let r = verify_det(&spec(&s)).unwrap();
            assert!(r.agree, "{s}: {} vs {}", r.formula_value, r.enumerated_value);
        }
    }
    for n in 2..=12 {
        for g in abelian_groups_of_order(n) {
            for s in [format!("LA:{g}"), format!("Mneg:{g}")] {
                assert!(verify_det(&spec(&s)).unwrap().agree, "{s}");
            }
        }
    }
    for c in 2..=4 {
        assert!(verify_det(&spec(&format!("T:{c}"))).unwrap().agree);
    }
    for (q, k) in [(5, 2), (7, 2), (7, 3), (8, 1), (9, 2), (11, 3)] {
        assert!(verify_det(&spec(&format!("Craig:q={q},k={k}"))).unwrap().agree, "q={q} k={k}");
    }
}

#[test]
fn pair_formulas_match_subset_oracle() {
    for d in 4..=16 {
        let ld = verify_formula(&spec(&format!("Ld:{d}"))).unwrap();
        assert_eq!(ld.formula_value, BigInt::from(norm4_pairs(&ld_weights(d), SumRow::Zero)), "L_{d}");
        assert!(ld.agree, "L_{d}");
        let od = verify_formula(&spec(&format!("Od:{d}"))).unwrap();
        assert_eq!(od.formula_value, BigInt::from(norm4_pairs(&od_weights(d), SumRow::Absent)), "O_{d}");
        assert!(od.agree, "O_{d}");
        let md = verify_formula(&spec(&format!("Md:{d}"))).unwrap();
        assert_eq!(md.formula_value, BigInt::from(norm4_pairs(&md_weights(d), SumRow::Even)), "M_{d}");
        assert!(md.agree, "M_{d}");
    }
}

/// Pairs of norm-4 vectors supported on `kept`, from the number of
/// unordered pairs `{x, y}` of kept elements with each sum.
fn group_pair_oracle(g: &FinAbelianGroup, kept: &[bool]) -> usize {
    let mut by_sum = vec![0usize; g.order() as usize];
    let elems: Vec<_> = g.elements().collect();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate().skip(i + 1) {
            if kept[i] && kept[j] {
                by_sum[g.index_of(&g.add(x, y))] += 1;
            }
        }
    }
    by_sum.iter().map(|&n| n * n.saturating_sub(1) / 2).sum()
}

#[test]
fn group_pair_formulas_match_oracle_and_enumeration() {
    for n in 3..=16 {
        for g in abelian_groups_of_order(n) {
            let all = vec![true; n as usize];
            let expected = BigInt::from(group_pair_oracle(&g, &all));
            assert_eq!(la_pair_formula(&g).unwrap(), expected, "{g}");
            assert!(verify_formula(&spec(&format!("LA:{g}"))).unwrap().agree, "{g}");

            let mut kept = all.clone();
            kept[g.index_of(&g.zero())] = false;
            let expected = BigInt::from(group_pair_oracle(&g, &kept));
            assert_eq!(la_one_missing_formula(&g).unwrap(), expected, "{g} minus 0");
            let s = spec(&format!("LAsub:{g}:drop={}", g.label(&g.zero())));
            assert!(verify_formula(&s).unwrap().agree, "{s}");
        }
    }
}

#[test]
fn dropping_any_single_element_gives_the_same_count() {
    for g in [FinAbelianGroup::cyclic(9), FinAbelianGroup::new(vec![4, 2]).unwrap()] {
        let counts: Vec<usize> = g
            .elements()
            .map(|x| {
                let s = FamilySpec::LASub { group: g.clone(), drop: vec![x] };
                enumerate_norm(&s.make().unwrap(), 4).pairs()
            })
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{g}: {counts:?}");
    }
}

#[test]
fn restricted_kernel_is_spanned_by_short_vectors() {
    // Z/5 minus 0 has the single short pair e_1 + e_4 - e_2 - e_3 in a rank-2 kernel.
    let z5 = FinAbelianGroup::cyclic(5);
    assert!(!supported_span_matches(&z5, &[z5.zero()]).unwrap());
    for n in 6..=12 {
        for g in abelian_groups_of_order(n) {
            assert!(supported_span_matches(&g, &[g.zero()]).unwrap(), "{g}");
        }
    }
}

#[test]
fn t_pair_formula() {
    for c in 2..=4 {
        assert!(verify_formula(&spec(&format!("T:{c}"))).unwrap().agree, "c = {c}");
    }
    let min = spec("T:3").lattice().unwrap().minimum(12).found().unwrap();
    assert_eq!((min.norm, min.pairs()), (3, 28));
}

#[test]
fn reflected_exclusions_give_isometric_invariants() {
    // x -> d + 3 + k - x permutes the window 1..=d+2+k.
    for d in 6..=9 {
        let k = 1;
        for a in 1..=(d + 2 + k) as u64 {
            let b = (d + 3 + k) as u64 - a;
            let la = Lattice::build(ld_constraints(d, &[a]).unwrap()).unwrap();
            let lb = Lattice::build(ld_constraints(d, &[b]).unwrap()).unwrap();
            assert_eq!(la.determinant(), lb.determinant(), "d={d} a={a}");
            assert_eq!(la.vectors_of_norm(4).pairs(), lb.vectors_of_norm(4).pairs(), "d={d} a={a}");
        }
    }
    let d = 7;
    let la = Lattice::build(ld_constraints(d, &[2, 5]).unwrap()).unwrap();
    let lb = Lattice::build(ld_constraints(d, &[d as u64 + 5 - 5, d as u64 + 5 - 2]).unwrap()).unwrap();
    assert_eq!(la.determinant(), lb.determinant());
    assert_eq!(la.vectors_of_norm(4).pairs(), lb.vectors_of_norm(4).pairs());
}

#[test]
fn exclusion_past_window_is_inert() {
    let a = ld_constraints(7, &[]).unwrap();
    let b = ld_constraints(7, &[20]).unwrap();
    assert_eq!(a.rows(), b.rows());
}

#[test]
fn craig_closed_forms_match_histogram() {
    for q in [7, 11, 13, 17, 19, 23] {
        let field = FiniteField::with_order(q).unwrap();
        assert_eq!(craig_count_k2_closed(q).unwrap(), craig_pair_count(&field, 2).unwrap(), "k=2 q={q}");
        assert_eq!(craig_count_k3_closed(q).unwrap(), craig_pair_count(&field, 3).unwrap(), "k=3 q={q}");
    }
    for q in [25, 29, 31] {
        let field = FiniteField::with_order(q).unwrap();
        assert_eq!(craig_count_k2_closed(q).unwrap(), craig_pair_count(&field, 2).unwrap(), "k=2 q={q}");
    }
    assert!(craig_count_k2_closed(9).is_err());
    assert!(craig_count_k3_closed(25).is_err());
}

#[test]
fn craig_histogram_matches_enumeration() {
    for q in [5u64, 7, 8, 9, 11] {
        for k in 1..=3 {
            let field = FiniteField::with_order(q).unwrap();
            if k >= field.characteristic() as usize {
                continue;
            }
            let s = spec(&format!("Craig:q={q},k={k}"));
            let r = verify_formula(&s).unwrap();
            assert_eq!(r.enumerated_value, craig_pair_count(&field, k).unwrap(), "{s}");
        }
    }
}

#[test]
fn craig_minimum_respects_bound() {
    for q in [5u64, 7, 8, 9, 11, 13] {
        for k in 1..=3usize {
            let p = FiniteField::with_order(q).unwrap().characteristic() as usize;
            if k >= p {
                continue;
            }
            let s = spec(&format!("Craig:q={q},k={k}"));
            let c = s.make().unwrap();
            for m in 1..2 * (k as u64 + 1) {
                assert!(enumerate_norm(&c, m).is_empty(), "{s} has norm {m}");
            }
        }
    }
}

#[test]
fn craig_counts_exceed_convexity_bound() {
    for q in [7u64, 11, 13, 17] {
        for k in 2..=3 {
            let field = FiniteField::with_order(q).unwrap();
            let count = BigRational::from_integer(craig_pair_count(&field, k).unwrap());
            assert!(count >= craig_lower_bound(q, k), "q={q} k={k}");
        }
    }
}
