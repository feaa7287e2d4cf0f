use latlab_core::lattice::dot_i64;
use latlab_core::perfection::{
    alpha_series, base_vector_graph, d_tail_bound, hyperplane_split_check, neighbor_stats, orthogonality_profile,
    parity_check_LF2k, perfection_report, scan_D, sym_square_rank, SCHLAFLI_BASE,
};
use latlab_core::{FamilySpec, MinimalVectorSet, PerfectionReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::collections::BTreeMap;

fn report(s: &str) -> PerfectionReport {
    let l = s.parse::<FamilySpec>().unwrap().lattice().unwrap();
    perfection_report(&l, 12).unwrap()
}

fn mins(s: &str) -> MinimalVectorSet {
    s.parse::<FamilySpec>().unwrap().lattice().unwrap().minimum(12).found().unwrap()
}

#[test]
fn perfect_families() {
    for d in 7..=14 {
        assert!(report(&format!("Ld:{d}")).is_perfect(), "L_{d}");
    }
    for d in 8..=12 {
        assert!(report(&format!("Od:{d}")).is_perfect(), "O_{d}");
        assert!(report(&format!("Md:{d}")).is_perfect(), "M_{d}");
    }
    for s in ["LA:Z/9", "LA:Z/3+Z/3", "LA:Z/10", "LA:Z/11", "LA:Z/12", "LA:Z/2+Z/6", "Mneg:Z/15", "Mneg:Z/16", "Mneg:Z/17", "T:3"] {
        assert!(report(s).is_perfect(), "{s}");
    }
}

#[test]
fn imperfect_examples() {
    for (s, pd) in [("Ld:6", 1), ("Od:7", 1), ("Md:7", 1), ("LA:Z/4+Z/2", 2)] {
        let r = report(s);
        assert_eq!(r.pd, pd, "{s}");
        assert_eq!(r.d * (r.d + 1) / 2, r.sym_rank + r.pd);
    }
    let r = report("Ld:6");
    assert_eq!((r.d, r.min_norm, r.mp, r.sym_rank), (6, 4, 22, 20));
}

#[test]
fn small_groups_give_perfect_lattices_except_one() {
    for s in ["LA:Z/7", "LA:Z/8", "LA:Z/2+Z/2+Z/2"] {
        assert!(report(s).is_perfect(), "{s}");
    }
}

#[test]
fn hyperplane_criterion_is_sound() {
    let mut applied = 0;
    for d in 4..=14 {
        // L_{d+1} against e_1, O_d against (1, .., 1).
        let ld = mins(&format!("Ld:{}", d + 1));
        let mut e1 = vec![0; d + 3];
        e1[0] = 1;
        let od = mins(&format!("Od:{d}"));
        for (vectors, w, dim) in [(&ld.vectors, e1, d + 1), (&od.vectors, vec![1; d + 1], d)] {
            let split = hyperplane_split_check(vectors, &w, dim).unwrap();
            if split.hypotheses_hold {
                applied += 1;
                assert_eq!(split.confirmed, Some(true), "d = {d}");
                assert_eq!(sym_square_rank(vectors), dim * (dim + 1) / 2);
            } else {
                assert_eq!(split.confirmed, None);
            }
        }
    }
    assert!(applied >= 14);
    // L_6 is not perfect, so the section test fails on L_7.
    let l7 = mins("Ld:7");
    let mut e1 = vec![0; 9];
    e1[0] = 1;
    assert!(!hyperplane_split_check(&l7.vectors, &e1, 7).unwrap().hypotheses_hold);
}

#[test]
fn alpha_series_is_monotone() {
    for s in ["Ld:7", "Od:8", "LA:Z/7", "T:3"] {
        let m = mins(s);
        let a = alpha_series(&m.vectors, 3, 100_000).unwrap();
        assert!(a.dims.windows(2).all(|w| w[0] <= w[1]), "{s}: {:?}", a.dims);
        assert!(*a.dims.last().unwrap() <= m.pairs());
    }
    let l7 = alpha_series(&mins("Ld:7").vectors, 2, 100_000).unwrap();
    assert_eq!(l7.dims, [1, 7, 28]);
}

#[test]
fn planar_lines_follow_dimension_two_law() {
    let lines: Vec<Vec<i64>> = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1], vec![1, 2], vec![2, 1]];
    for a in 1..=6 {
        let s = alpha_series(&lines[..a], 8, 10_000).unwrap();
        let expected: Vec<usize> = (0..=8).map(|k| (k + 1).min(a)).collect();
        assert_eq!(s.dims, expected);
    }
}

#[test]
fn d_scan_examples() {
    assert_eq!(d_tail_bound(0), 7);
    assert_eq!(d_tail_bound(1), 15);
    assert_eq!(d_tail_bound(2), 53);
    assert_eq!(scan_D(&[], 7).unwrap().value, Some(7));
    assert_eq!(scan_D(&[4], 15).unwrap().value, Some(7));
    let s = scan_D(&[6], 15).unwrap();
    assert_eq!(s.value, Some(9));
    assert!(!s.entries[7].in_p && s.entries[8].in_p);
    assert_eq!(scan_D(&[6], 10).unwrap().value, None);
}

#[test]
fn neighbour_counts_track_main_term() {
    let d = 16;
    let m = mins(&format!("Ld:{d}"));
    let three_d = BigRational::from_integer(BigInt::from(3 * d));
    let five_d = BigRational::from_integer(BigInt::from(5 * d));
    for v in &m.vectors {
        let s = neighbor_stats(d, &m, v).unwrap();
        assert!(s.main_term >= three_d && s.main_term <= five_d);
        let dev = (BigRational::from_integer(BigInt::from(s.count)) - &s.main_term).abs();
        assert!(dev <= BigRational::from_integer(BigInt::from(20)), "{v:?}");
        let direct = m.vectors.iter().filter(|w| dot_i64(v, w).abs() == 2).count();
        assert_eq!(s.count, direct);
    }
    assert!(neighbor_stats(d, &m, &vec![1; d + 2]).is_err());
}

#[test]
fn schlafli_graph() {
    let m = mins("T:3");
    let g = base_vector_graph(&m, &SCHLAFLI_BASE).unwrap();
    assert_eq!(g.srg_parameters(), Some((27, 10, 1, 5)));
    let spec = g.spectrum().unwrap();
    assert_eq!(spec.roots, BTreeMap::from([(-5, 6), (1, 20), (10, 1)]));
    assert_eq!(spec.residual_degree, 0);
    assert!(base_vector_graph(&m, &[1, 0, 0, 0, 0, 0, 0]).is_err());
}

/// Norm-4 vectors of `L(Z/a + Z/b)` as `e_x + e_y - e_z - e_w` with
/// `x + y = z + w`, over coordinates indexed `x = (x_1, x_2)`.
fn group_norm4(a: usize, b: usize) -> Vec<Vec<i64>> {
    let n = a * b;
    let add = |x: usize, y: usize| ((x / b + y / b) % a) * b + (x % b + y % b) % b;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for &(z, w) in &pairs[i + 1..] {
            if add(x, y) == add(z, w) && x != z && x != w && y != z && y != w {
                let mut v = vec![0; n];
                v[x] += 1;
                v[y] += 1;
                v[z] -= 1;
                v[w] -= 1;
                out.push(v);
            }
        }
    }
    out
}

#[test]
fn orthogonality_profiles() {
    let z9 = orthogonality_profile(&mins("LA:Z/9").vectors);
    assert_eq!(z9, orthogonality_profile(&group_norm4(1, 9)));
    assert_eq!(z9, BTreeMap::from([(9, 27), (15, 27)]));
    let z33 = orthogonality_profile(&mins("LA:Z/3+Z/3").vectors);
    assert_eq!(z33, orthogonality_profile(&group_norm4(3, 3)));
    assert_eq!(z33, BTreeMap::from([(9, 54)]));
}

#[test]
fn parity_of_elementary_two_groups() {
    assert!(parity_check_LF2k(2).unwrap());
    assert!(parity_check_LF2k(3).unwrap());
    assert!(!parity_check_LF2k(4).unwrap());
    assert!(parity_check_LF2k(1).is_err());
}
