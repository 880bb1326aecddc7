use std::collections::BTreeMap;

use num_bigint::BigUint;
use petaluma::budget::Budget;
use petaluma::diagrams::{PetalLink, Permutation};
use petaluma::linking::{self, LatticeWalk, Step};
use proptest::prelude::*;

/// Area counts over every distinct ordering of the given steps.
fn brute_force(l: usize, r: usize, u: usize, d: usize) -> BTreeMap<i64, BigUint> {
    fn rec(left: [usize; 4], y: i64, a: i64, out: &mut BTreeMap<i64, u64>) {
        if left == [0; 4] {
            *out.entry(a).or_default() += 1;
            return;
        }
        let moves = [(-1i64, 0i64), (1, 0), (0, 1), (0, -1)];
        for (i, &(dx, dy)) in moves.iter().enumerate() {
            if left[i] > 0 {
                let mut next = left;
                next[i] -= 1;
                rec(next, y + dy, a - y * dx, out);
            }
        }
    }
    let mut out = BTreeMap::new();
    rec([l, r, u, d], 0, 0, &mut out);
    out.into_iter().map(|(a, c)| (a, BigUint::from(c))).collect()
}

#[test]
fn dp_matches_brute_force() {
    let budget = Budget::default();
    for n in 1..=3 {
        let z = linking::z_table(n, n, n, n, &budget).unwrap();
        assert_eq!(z.counts, brute_force(n, n, n, n), "n={n}");
    }
    for (l, r, u, d) in [(0, 0, 0, 0), (2, 0, 0, 2), (0, 2, 2, 0), (1, 2, 3, 0), (3, 1, 0, 2), (2, 2, 1, 3)] {
        let z = linking::z_table(l, r, u, d, &budget).unwrap();
        assert_eq!(z.counts, brute_force(l, r, u, d), "{l} {r} {u} {d}");
    }
}

#[test]
fn n1_distribution() {
    let dist = linking::exact_lk_distribution(1, &Budget::default()).unwrap();
    let want: BTreeMap<i64, BigUint> =
        [(-1, 4u32), (0, 16), (1, 4)].into_iter().map(|(a, c)| (a, BigUint::from(c))).collect();
    assert_eq!(dist.counts, want);
    // Same counts from the 24 height orders of a 4-petal link.
    let mut by_lk: BTreeMap<i64, BigUint> = BTreeMap::new();
    for p in permutations(4) {
        let l = PetalLink::new(Permutation::new(p).unwrap()).unwrap();
        *by_lk.entry(linking::linking_number(&l)).or_default() += 1u32;
    }
    assert_eq!(by_lk, want);
}

#[test]
fn n2_matches_all_links() {
    let dist = linking::exact_lk_distribution(2, &Budget::default()).unwrap();
    let mut by_lk: BTreeMap<i64, BigUint> = BTreeMap::new();
    for p in permutations(8) {
        let l = PetalLink::new(Permutation::new(p).unwrap()).unwrap();
        *by_lk.entry(linking::linking_number(&l)).or_default() += 1u32;
    }
    // Each walk arises from (n!)^4 height orders.
    let scale = BigUint::from(16u32);
    let scaled: BTreeMap<i64, BigUint> = dist.counts.into_iter().map(|(a, c)| (a, c * &scale)).collect();
    assert_eq!(by_lk, scaled);
}

#[test]
fn totals_and_symmetry() {
    let budget = Budget::default();
    for n in 1..=8 {
        let d = linking::exact_lk_distribution(n, &budget).unwrap();
        assert_eq!(d.total(), linking::multinomial4(n));
        assert!(d.is_symmetric());
        let max = d.counts.keys().map(|a| a.abs()).max().unwrap();
        assert!(max <= (n * n) as i64);
    }
}

#[test]
fn tiny_budget_is_refused() {
    let budget = Budget { memory_bytes: 1024, ..Budget::default() };
    assert!(matches!(
        linking::exact_lk_distribution(6, &budget),
        Err(petaluma::Error::BudgetExceeded(_))
    ));
}

#[test]
fn walk_letters() {
    let w: LatticeWalk = "RULD".parse().unwrap();
    assert_eq!(w.steps, vec![Step::Right, Step::Up, Step::Left, Step::Down]);
    assert_eq!(linking::area(&w), 1);
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..m).collect();
    heap(m, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

fn arb_link() -> impl Strategy<Value = PetalLink> {
    (1usize..=64)
        .prop_flat_map(|n| Just((0..4 * n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| PetalLink::new(Permutation::new(v).unwrap()).unwrap())
}

proptest! {
    #[test]
    fn lk_is_minus_area(l in arb_link()) {
        let w = linking::walk_from(&l);
        prop_assert!(w.is_closed());
        prop_assert_eq!(linking::linking_number(&l), -linking::area(&w));
        prop_assert_eq!(linking::area(&w.reflect_y()), -linking::area(&w));
    }
}

#[test]
fn second_moment_is_quadratic_in_n() {
    let budget = Budget::default();
    let pts: Vec<_> = (1..=6)
        .map(|n| {
            let d = linking::exact_lk_distribution(n, &budget).unwrap();
            (petaluma::rational::int(n as i64), d.moment(2, 1))
        })
        .collect();
    let fit = petaluma::moments::interpolate_polynomial(&pts).unwrap();
    assert!(fit.degree().unwrap() <= 2, "{fit}");
}

#[test]
fn normalised_second_moment_approaches_limit() {
    let d = linking::exact_lk_distribution(16, &Budget::default()).unwrap();
    let m = petaluma::rational::to_f64(&d.moment(2, 32));
    let lim = petaluma::rational::to_f64(&linking::limit_lk_moment_2n(2));
    assert!((m - lim).abs() <= 0.01, "{m} vs {lim}");
    let m4n = petaluma::rational::to_f64(&d.moment(2, 64));
    assert!((m4n - petaluma::rational::to_f64(&linking::limit_lk_moment_4n(2))).abs() <= 0.0025);
}
