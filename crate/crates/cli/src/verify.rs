//! Verification suites.

use num_traits::Zero;
use petaluma::budget::Budget;
use petaluma::diagrams::{PetalKnot, Permutation, StarSkeleton};
use petaluma::gauss::{self, GaussFormula};
use petaluma::moments::{self, Invariant};
use petaluma::rational::{self, Rational};
use petaluma::sampling::sample_rng;
use petaluma::{linking, Result};
use rand::seq::SliceRandom;
use rand::Rng;

pub struct Report {
    pub lines: Vec<(bool, String)>,
}

impl Report {
    fn new() -> Self {
        Report { lines: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl Into<String>) {
        self.lines.push((ok, what.into()));
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.0)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (ok, what) in &self.lines {
            s.push_str(if *ok { "PASS " } else { "FAIL " });
            s.push_str(what);
            s.push('\n');
        }
        s
    }
}

fn v3_with(f: &GaussFormula, d: &petaluma::diagrams::GaussDiagram) -> Option<i64> {
    gauss::evaluate_integer(f, d).ok()
}

/// Exact moments from enumeration against the reference polynomials.
pub fn formulas(v3: &GaussFormula, max_n: usize, budget: &Budget) -> Result<Report> {
    let mut r = Report::new();
    let p = moments::paper_polynomials();
    for n in 0..=max_n {
        let c2 = moments::exact_distribution(Invariant::C2, n, budget)?;
        let x = n as i64;
        for (k, poly) in [(1, &p.c2_mean), (2, &p.c2_second), (3, &p.c2_third)] {
            r.record(c2.moment(k) == poly.eval_int(x), format!("E[c2^{k}] at n={n}"));
        }
    }
    for n in 0..=max_n.min(4) {
        let dist = v3_distribution(v3, n, budget)?;
        let x = n as i64;
        r.record(moments::moment(&dist, 2) == p.v3_second.eval_int(x), format!("E[v3^2] at n={n}"));
        r.record(moments::moment(&dist, 1).is_zero() && moments::moment(&dist, 3).is_zero(), format!("odd v3 moments at n={n}"));
    }
    for (k, num, den) in [(1, 1, 24), (2, 7, 960), (3, 5119, 2419200)] {
        let m = moments::limit_moment_c2(k, budget)?;
        r.record(m.value == rational::frac(num, den), format!("lambda_{k} = {}", rational::to_string(&m.value)));
    }
    let lam = linking::limit_lk_moments(4);
    r.record(lam[2] == rational::frac(1, 12) && lam[4] == rational::frac(7, 240), "Lambda_2 = 1/12, Lambda_4 = 7/240");
    Ok(r)
}

fn v3_distribution(v3: &GaussFormula, n: usize, budget: &Budget) -> Result<moments::ValueDistribution> {
    let pairs = [(Invariant::V3, v3.clone())];
    Ok(moments::exact_distributions_with(n, &pairs, budget)?.pop().expect("one formula"))
}

/// Fourier vanishing for a `v3` formula, scaled to integer coefficients.
pub fn fourier(v3: &GaussFormula) -> Result<Report> {
    let denom = v3.terms().iter().fold(num_bigint::BigInt::from(1), |acc, t| {
        num_integer::Integer::lcm(&acc, t.coefficient().denom())
    });
    let scaled = v3.scaled(&Rational::from_integer(denom));
    let rep = moments::fourier_vanishing_check_with(&scaled)?;
    let mut r = Report::new();
    for (j, count) in &rep.preflight {
        r.record(true, format!("|U_J| = {count} numbered diagrams for j={j}"));
    }
    r.record(
        rep.passes(),
        format!("{} (j, sigma) cases, {} nonvanishing low-order coefficients", rep.cases, rep.violations.len()),
    );
    for v in rep.violations.iter().take(10) {
        r.record(false, format!("j={} sigma={:?} I={:#b} coefficient {}", v.j, v.sigma, v.subset, v.coefficient));
    }
    Ok(r)
}

/// Knot-invariance properties of `c2` and the given `v3` formula.
pub fn invariance(v3: &GaussFormula, knots: usize, seed: u64) -> Result<Report> {
    let mut r = Report::new();
    let tref = PetalKnot::new(Permutation::new(vec![0, 3, 1, 4, 2])?)?;
    let d = tref.star_gauss_diagram();
    let m = tref.mirror().star_gauss_diagram();
    r.record(gauss::c2(&d) == 1, "c2(trefoil) = 1");
    r.record(v3_with(v3, &d) == Some(1), "v3(trefoil) = 1");
    r.record(v3_with(v3, &m) == Some(-1), "v3(mirror trefoil) = -1");
    for n in 2..=6u64 {
        let c2 = gauss::c2(&PetalKnot::torus(n as usize).star_gauss_diagram());
        r.record(num_bigint::BigInt::from(c2) == rational::binomial(n + 2, 4), format!("c2(torus n={n}) = {c2}"));
    }
    let mut rng = sample_rng(seed, 0);
    let (mut grid_bad, mut base_bad, mut mirror_bad) = (0, 0, 0);
    for _ in 0..knots {
        let n = rng.gen_range(0..=6);
        let mut v: Vec<usize> = (0..2 * n + 1).collect();
        v.shuffle(&mut rng);
        let k = PetalKnot::new(Permutation::new(v)?)?;
        let s = k.star_gauss_diagram();
        let want = (gauss::c2(&s), v3_with(v3, &s));
        let g = k.to_grid().gauss_diagram();
        grid_bad += ((gauss::c2(&g), v3_with(v3, &g)) != want) as usize;
        let sk = StarSkeleton::new(n);
        for &start in sk.segment_start() {
            let rot = s.rotate_basepoint(start);
            base_bad += ((gauss::c2(&rot), v3_with(v3, &rot)) != want) as usize;
        }
        let mr = k.mirror().star_gauss_diagram();
        mirror_bad += (gauss::c2(&mr) != want.0 || v3_with(v3, &mr) != want.1.map(|x| -x)) as usize;
    }
    r.record(grid_bad == 0, format!("star and grid agree on {knots} knots ({grid_bad} mismatches)"));
    r.record(base_bad == 0, format!("base point independence ({base_bad} mismatches)"));
    r.record(mirror_bad == 0, format!("mirror symmetry ({mirror_bad} mismatches)"));
    Ok(r)
}
