use petaluma::diagrams::{star_crossing_order, GaussDiagram, GridDiagram, PetalKnot, Permutation, StarSkeleton};
use petaluma::gauss;
use proptest::prelude::*;

/// Strictly interior vertical/horizontal intersections, counted directly
/// from the corner coordinates.
fn geometric_crossings(sigma: &[usize], pi: &[usize]) -> usize {
    let m = sigma.len();
    let mut count = 0;
    for i in 0..m {
        let x = sigma[i];
        let (y0, y1) = (pi[i].min(pi[(i + 1) % m]), pi[i].max(pi[(i + 1) % m]));
        for j in 0..m {
            let y = pi[j];
            let (a, b) = (sigma[(j + m - 1) % m], sigma[j]);
            let (x0, x1) = (a.min(b), a.max(b));
            if x0 < x && x < x1 && y0 < y && y < y1 {
                count += 1;
            }
        }
    }
    count
}

fn perm_strategy(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (2usize..=max).prop_flat_map(|m| Just((0..m).collect::<Vec<_>>()).prop_shuffle())
}

#[test]
fn star_orders_are_symmetric_and_complete() {
    for n in 1..12 {
        let segs = 2 * n + 1;
        let lists: Vec<Vec<usize>> = (0..segs).map(|a| star_crossing_order(n, a).unwrap()).collect();
        for (a, list) in lists.iter().enumerate() {
            assert_eq!(list.len(), 2 * n - 2);
            for &g in list {
                assert!(lists[g].contains(&a));
                assert_ne!((g + 1) % segs, a);
                assert_ne!((a + 1) % segs, g);
            }
        }
        let sk = StarSkeleton::new(n);
        assert_eq!(sk.len(), segs * (n - 1));
    }
    assert!(star_crossing_order(2, 5).is_err());
}

#[test]
fn gauss_code_round_trip() {
    let d = PetalKnot::new(Permutation::new(vec![0, 3, 1, 4, 2]).unwrap()).unwrap().star_gauss_diagram();
    let text = d.to_string();
    let back: GaussDiagram = text.parse().unwrap();
    assert_eq!(gauss::c2(&back), 1);
    assert_eq!(back.to_string(), text);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn grid_crossings_match_geometry(sigma in perm_strategy(30), seed in any::<u64>()) {
        // Second permutation of the same length from the seed.
        let m = sigma.len();
        let mut pi: Vec<usize> = (0..m).collect();
        let mut s = seed;
        for i in (1..m).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            pi.swap(i, (s >> 33) as usize % (i + 1));
        }
        let g = GridDiagram::new(Permutation::new(sigma.clone()).unwrap(), Permutation::new(pi.clone()).unwrap()).unwrap();
        prop_assert_eq!(g.gauss_diagram().len(), geometric_crossings(&sigma, &pi));
    }

    #[test]
    fn star_and_grid_invariants_agree(p in (0usize..=6).prop_flat_map(|n| Just((0..2 * n + 1).collect::<Vec<_>>()).prop_shuffle())) {
        let k = PetalKnot::new(Permutation::new(p).unwrap()).unwrap();
        let s = k.star_gauss_diagram();
        let g = k.to_grid().gauss_diagram();
        prop_assert_eq!(gauss::c2(&s), gauss::c2(&g));
        prop_assert_eq!(gauss::v3(&s), gauss::v3(&g));
    }
}
