use latlab_core::field::{distinct_root_histogram, prime_power, revolving_door};
use latlab_core::groups::abelian_groups_of_order;
use latlab_core::{FinAbelianGroup, FiniteField};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn group_counts_by_order() {
    // Number of abelian groups: product of partition numbers of the exponents.
    let expected = [(2, 1), (4, 2), (8, 3), (12, 2), (16, 5), (36, 4), (32, 7), (72, 6)];
    for (n, k) in expected {
        let groups = abelian_groups_of_order(n);
        assert_eq!(groups.len(), k, "order {n}");
        assert!(groups.iter().all(|g| g.order() == n));
    }
}

#[test]
fn negation_representatives() {
    for n in 2..=24 {
        for g in abelian_groups_of_order(n) {
            let t = 1usize << g.two_torsion_rank();
            let involutions = g.elements().filter(|a| g.add(a, a) == g.zero()).count();
            assert_eq!(involutions, t, "{g}");
            let reps = g.mod_negation_reps();
            assert_eq!(reps.len(), (n as usize + t) / 2, "{g}");
            assert_eq!(reps[0], g.zero());
            let orbits: BTreeSet<_> = g.elements().map(|a| std::cmp::min(a.clone(), g.neg(&a))).collect();
            assert_eq!(orbits.len(), reps.len());
        }
    }
}

#[test]
fn labels_round_trip() {
    for g in [FinAbelianGroup::cyclic(12), FinAbelianGroup::new(vec![2, 4]).unwrap(), FinAbelianGroup::new(vec![3, 12]).unwrap()] {
        for a in g.elements() {
            assert_eq!(g.parse_element(&g.label(&a)).unwrap(), a);
        }
    }
    assert_eq!(FinAbelianGroup::elementary_two(3).label(&FinAbelianGroup::elementary_two(3).element(&[0, 1, 1]).unwrap()), "011");
}

#[test]
fn sidon_sets() {
    let g = FinAbelianGroup::cyclic(7);
    let s: Vec<_> = [0, 1, 3].iter().map(|&x| g.element(&[x]).unwrap()).collect();
    assert!(g.is_sidon(&s));
    let s: Vec<_> = [0, 1, 2].iter().map(|&x| g.element(&[x]).unwrap()).collect();
    assert!(!g.is_sidon(&s));
    let g = FinAbelianGroup::cyclic(13);
    let s: Vec<_> = [0, 1, 3, 9].iter().map(|&x| g.element(&[x]).unwrap()).collect();
    assert!(g.is_sidon(&s));
}

#[test]
fn field_axioms_exhaustive() {
    for q in [4u64, 8, 9, 16, 25, 27] {
        let f = FiniteField::with_order(q).unwrap();
        let els: Vec<_> = f.elements().collect();
        assert_eq!(els.len() as u64, q);
        for a in &els {
            assert_eq!(f.add(a, &f.neg(a)), f.zero());
            if !f.is_zero(a) {
                assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
                assert_eq!(f.pow(a, q - 1), f.one());
            }
            for b in &els {
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
        }
    }
}

#[test]
fn prime_powers() {
    assert_eq!(prime_power(27), Some((3, 3)));
    assert_eq!(prime_power(12), None);
    assert_eq!(prime_power(1), None);
}

#[test]
fn histogram_totals() {
    for q in [5u64, 7, 8, 9, 11, 13] {
        let f = FiniteField::with_order(q).unwrap();
        for k in 1..=3usize {
            if k as u64 >= f.characteristic() {
                assert!(distinct_root_histogram(&f, k).is_err());
                continue;
            }
            let h = distinct_root_histogram(&f, k).unwrap();
            assert_eq!(h.values().sum::<u64>(), binom(q, k as u64 + 1), "q={q} k={k}");
        }
    }
}

proptest! {
    #[test]
    fn revolving_door_is_gray(n in 1usize..=10, t in 0usize..=10) {
        let mut seen = BTreeSet::new();
        let mut prev: Option<BTreeSet<usize>> = None;
        revolving_door(n, t, |s| {
            let cur: BTreeSet<usize> = s.iter().copied().collect();
            if let Some(p) = &prev {
                assert_eq!(p.symmetric_difference(&cur).count(), 2);
            }
            seen.insert(cur.clone());
            prev = Some(cur);
        });
        let expected = if t > n { 0 } else { binom(n as u64, t as u64) };
        prop_assert_eq!(seen.len() as u64, expected);
    }

    #[test]
    fn group_operations(factors in prop::collection::vec(2u64..=6, 1..=3), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let g = FinAbelianGroup::new(factors).unwrap();
        let pick = |s: u64| g.element_at((s % g.order()) as usize);
        let (x, y, z) = (pick(a), pick(b), pick(c));
        prop_assert_eq!(g.add(&g.add(&x, &y), &z), g.add(&x, &g.add(&y, &z)));
        prop_assert_eq!(g.add(&x, &y), g.add(&y, &x));
        prop_assert_eq!(g.scale(3, &x), g.add(&x, &g.add(&x, &x)));
        prop_assert_eq!(g.element_at(g.index_of(&x)), x);
    }
}
