use num_bigint::{BigInt, BigUint};
use petaluma::budget::Budget;
use petaluma::diagrams::{PetalKnot, Permutation};
use petaluma::gauss;
use petaluma::moments::{self, Invariant};
use petaluma::rational::{self, Rational};

fn all_permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=i).map(move |at| {
                    let mut q = p.clone();
                    q.insert(at, i);
                    q
                })
            })
            .collect();
    }
    out
}

#[test]
fn enumeration_matches_direct_evaluation() {
    // Plain-changes enumeration against evaluating every knot from scratch.
    for n in 0..=3 {
        let dists = moments::exact_distributions(n, &[Invariant::C2, Invariant::V3], &Budget::default()).unwrap();
        let mut c2 = std::collections::BTreeMap::<i64, BigUint>::new();
        let mut v3 = std::collections::BTreeMap::<i64, BigUint>::new();
        for p in all_permutations(2 * n + 1) {
            let d = PetalKnot::new(Permutation::new(p).unwrap()).unwrap().star_gauss_diagram();
            *c2.entry(gauss::c2(&d)).or_default() += 1u32;
            *v3.entry(gauss::v3(&d)).or_default() += 1u32;
        }
        assert_eq!(dists[0].counts, c2, "c2 n={n}");
        assert_eq!(dists[1].counts, v3, "v3 n={n}");
    }
}

#[test]
fn small_cases() {
    let b = Budget::default();
    let d0 = moments::exact_distribution(Invariant::C2, 0, &b).unwrap();
    assert_eq!(d0.counts.len(), 1);
    assert_eq!(d0.counts[&0], BigUint::from(1u8));
    let v1 = moments::exact_distribution(Invariant::V3, 1, &b).unwrap();
    assert_eq!(v1.counts.keys().copied().collect::<Vec<_>>(), vec![0]);
    let d2 = moments::exact_distribution(Invariant::C2, 2, &b).unwrap();
    assert_eq!(d2.sum(), BigInt::from(10));
    assert_eq!(moments::moment(&d2, 1), rational::frac(1, 12));
    assert_eq!(moments::moment(&d2, 0), rational::int(1));
}

#[test]
fn moments_match_reference_polynomials() {
    let b = Budget::default();
    let p = moments::paper_polynomials();
    let mut c2_second = Vec::new();
    for n in 0..=4usize {
        let d = moments::exact_distributions(n, &[Invariant::C2, Invariant::V3], &b).unwrap();
        let x = n as i64;
        assert_eq!(d[0].moment(1), p.c2_mean.eval_int(x), "n={n}");
        assert_eq!(d[0].moment(2), p.c2_second.eval_int(x), "n={n}");
        assert_eq!(d[0].moment(3), p.c2_third.eval_int(x), "n={n}");
        assert_eq!(d[1].moment(2), p.v3_second.eval_int(x), "n={n}");
        assert_eq!(d[1].moment(1), Rational::from_integer(0.into()));
        assert_eq!(d[1].moment(3), Rational::from_integer(0.into()));
        assert_eq!(d[0].total(), rational::factorial(2 * n as u64 + 1).to_biguint().unwrap());
        c2_second.push((rational::int(x), d[0].moment(2)));
    }
    let fit = moments::interpolate_polynomial(&c2_second).unwrap();
    assert_eq!(fit, p.c2_second);
    assert_eq!(fit.leading(), rational::frac(7, 960));
}

#[test]
fn budget_refuses_large_enumerations() {
    let small = Budget { max_permutations: 1000, ..Budget::default() };
    assert!(matches!(
        moments::exact_distribution(Invariant::C2, 3, &small),
        Err(petaluma::Error::BudgetExceeded(_))
    ));
    assert!(matches!(moments::limit_moment_c2(3, &small), Err(petaluma::Error::BudgetExceeded(_))));
}

#[test]
fn limit_moments_and_census() {
    let b = Budget::default();
    let m2 = moments::limit_moment_c2(2, &b).unwrap();
    assert_eq!(m2.value, rational::frac(7, 960));
    assert_eq!(m2.census.patterns(), 70);
    assert_eq!(m2.census.count(&[(2, 1), (2, 1)]), 6);
    assert_eq!(m2.census.count(&[(2, -1), (2, -1)]), 16);
    assert_eq!(m2.census.count(&[(4, 1)]), 32);
    assert_eq!(m2.census.count(&[(4, -1)]), 16);
    let m3 = moments::limit_moment_c2(3, &b).unwrap();
    assert_eq!(m3.value, rational::frac(5119, 2419200));
    assert_eq!(m3.census.patterns(), 34650);
}

#[test]
fn fourier_vanishing() {
    let r = moments::fourier_vanishing_check();
    assert_eq!(r.preflight[&4], 102);
    assert_eq!(r.preflight[&5], 50);
    assert_eq!(r.preflight[&6], 10);
    assert_eq!(r.cases, 24 + 120 + 720);
    assert!(r.passes(), "{:?}", &r.violations[..r.violations.len().min(5)]);
}

#[test]
fn fourier_check_catches_a_wrong_formula() {
    // Dropping one signed term breaks the cancellation.
    let f = gauss::gpv_formula();
    let broken = gauss::GaussFormula::new(f.terms()[..13].to_vec()).unwrap();
    assert!(!moments::fourier_vanishing_check_with(&broken).unwrap().passes());
}

#[test]
fn star_model_closed_forms() {
    assert_eq!(moments::star_model_expectation_c2(1), rational::int(0));
    assert_eq!(moments::star_model_expectation_c2(2), rational::frac(1, 2));
    assert_eq!(moments::star_model_variance_c2(2), rational::frac(5, 8));
}
