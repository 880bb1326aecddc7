//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use petaluma::budget::Budget;
use petaluma::diagrams::{PetalKnot, PetalLink, Permutation, StarSkeleton};
use petaluma::gauss;
use petaluma::linking;
use petaluma::moments::{self, Invariant, ValueDistribution};
use petaluma::rational::{self, Rational};
use petaluma::sampling::{self, Model, SampleConfig};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn knot(v: Vec<usize>) -> PetalKnot {
    PetalKnot::new(Permutation::new(v).unwrap()).unwrap()
}

fn random_perm(m: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..m).collect();
    v.shuffle(rng);
    v
}

struct Distributions {
    c2: Vec<ValueDistribution>,
    v3: Vec<ValueDistribution>,
}

static DISTRIBUTIONS: std::sync::OnceLock<Distributions> = std::sync::OnceLock::new();

fn distributions() -> &'static Distributions {
    DISTRIBUTIONS.get_or_init(enumerate_all)
}

fn enumerate_all() -> Distributions {
    let budget = Budget::default();
    let mut c2 = Vec::new();
    let mut v3 = Vec::new();
    for n in 0..=4 {
        let mut d = moments::exact_distributions(n, &[Invariant::C2, Invariant::V3], &budget).unwrap();
        v3.push(d.pop().unwrap());
        c2.push(d.pop().unwrap());
    }
    c2.push(moments::exact_distribution(Invariant::C2, 5, &budget).unwrap());
    Distributions { c2, v3 }
}

fn trefoil() -> Outcome {
    let t = knot(vec![0, 3, 1, 4, 2]).star_gauss_diagram();
    let m = knot(vec![4, 1, 3, 0, 2]).star_gauss_diagram();
    let got = (gauss::c2(&t), gauss::v3(&t), gauss::v3(&m));
    check(got == (1, 1, -1), format!("(c2, v3, v3 mirror) = {got:?}"))?;
    Ok("c2=1, v3=1, mirror v3=-1".into())
}

fn torus() -> Outcome {
    let mut seen = Vec::new();
    for n in 2..=6u64 {
        let c2 = gauss::c2(&PetalKnot::torus(n as usize).star_gauss_diagram());
        check(BigInt::from(c2) == rational::binomial(n + 2, 4), format!("n={n}: c2={c2}"))?;
        seen.push(c2);
    }
    Ok(format!("c2 = {seen:?}"))
}

fn first_moment() -> Outcome {
    let d = distributions();
    for (n, dist) in d.c2.iter().enumerate() {
        let want = Rational::from_integer(rational::factorial(2 * n as u64 + 1)) * rational::frac((n * n.saturating_sub(1) / 2) as i64, 12);
        check(Rational::from_integer(dist.sum()) == want, format!("n={n}: sum {} vs {want}", dist.sum()))?;
    }
    Ok("sum of c2 over S_(2n+1) = (2n+1)! C(n,2)/12 for n=0..5".into())
}

fn moment_polynomials() -> Outcome {
    let d = distributions();
    let p = moments::paper_polynomials();
    for (n, dist) in d.c2.iter().enumerate() {
        check(dist.moment(2) == p.c2_second.eval_int(n as i64), format!("E[c2^2] at n={n}"))?;
        check(dist.moment(3) == p.c2_third.eval_int(n as i64), format!("E[c2^3] at n={n}"))?;
    }
    for (n, dist) in d.v3.iter().enumerate() {
        check(dist.moment(2) == p.v3_second.eval_int(n as i64), format!("E[v3^2] at n={n}"))?;
        for k in [1, 3, 5] {
            check(dist.moment(k) == rational::int(0), format!("E[v3^{k}] at n={n}"))?;
        }
    }
    let pts: Vec<_> = d.c2.iter().enumerate().map(|(n, x)| (rational::int(n as i64), x.moment(2))).collect();
    let fit = moments::interpolate_polynomial(&pts).map_err(|e| e.to_string())?;
    check(fit == p.c2_second, format!("fitted E[c2^2] = {fit}"))?;
    Ok("E[c2^2], E[c2^3] at n=0..5 and E[v3^2] at n=0..4 exact; odd v3 moments 0".into())
}

fn limit_moments() -> Outcome {
    let b = Budget::default();
    let want = [(1, 1, 24), (2, 7, 960), (3, 5119, 2419200), (4, 812143, 677376000)];
    for (k, p, q) in want {
        let got = moments::limit_moment_c2(k, &b).map_err(|e| e.to_string())?;
        check(got.value == rational::frac(p, q), format!("lambda_{k} = {}", got.value))?;
        if k == 2 {
            let c = &got.census;
            let census = [c.count(&[(2, 1), (2, 1)]), c.count(&[(2, -1), (2, -1)]), c.count(&[(4, 1)]), c.count(&[(4, -1)])];
            check(census == [6, 16, 32, 16] && c.patterns() == 70, format!("census {census:?}"))?;
        }
    }
    let lam = linking::limit_lk_moments(4);
    check(lam[2] == rational::frac(1, 12) && lam[4] == rational::frac(7, 240), "Lambda_2, Lambda_4")?;
    Ok("lambda_1..4 exact, census 6/16/32/16, Lambda_2=1/12, Lambda_4=7/240".into())
}

fn fourier() -> Outcome {
    let r = moments::fourier_vanishing_check();
    let pre = (r.preflight[&4], r.preflight[&5], r.preflight[&6]);
    check(pre == (102, 50, 10), format!("preflight {pre:?}"))?;
    check(r.passes(), format!("{} violations, first {:?}", r.violations.len(), r.violations.first()))?;
    Ok(format!("{} (j, sigma) cases, preflight 102/50/10", r.cases))
}

fn brute_force_areas(n: usize) -> BTreeMap<i64, BigUint> {
    fn rec(left: [usize; 4], y: i64, a: i64, out: &mut BTreeMap<i64, u64>) {
        if left == [0; 4] {
            *out.entry(a).or_default() += 1;
            return;
        }
        for (i, (dx, dy)) in [(-1i64, 0i64), (1, 0), (0, 1), (0, -1)].into_iter().enumerate() {
            if left[i] > 0 {
                let mut next = left;
                next[i] -= 1;
                rec(next, y + dy, a - y * dx, out);
            }
        }
    }
    let mut out = BTreeMap::new();
    rec([n; 4], 0, 0, &mut out);
    out.into_iter().map(|(a, c)| (a, BigUint::from(c))).collect()
}

fn linking_dp() -> Outcome {
    let b = Budget::default();
    let one = linking::exact_lk_distribution(1, &b).map_err(|e| e.to_string())?;
    let want: BTreeMap<i64, BigUint> = [(-1, 4u32), (0, 16), (1, 4)].into_iter().map(|(a, c)| (a, c.into())).collect();
    check(one.counts == want, "n=1 distribution")?;
    for n in 1..=3 {
        let z = linking::z_table(n, n, n, n, &b).map_err(|e| e.to_string())?;
        check(z.counts == brute_force_areas(n), format!("brute force n={n}"))?;
    }
    for n in 1..=16 {
        let d = linking::exact_lk_distribution(n, &b).map_err(|e| e.to_string())?;
        check(d.is_symmetric(), format!("symmetry n={n}"))?;
        check(d.total() == linking::multinomial4(n), format!("total n={n}"))?;
    }
    Ok("n=1 {-1:4, 0:16, 1:4}; brute force n<=3; symmetric with multinomial totals n<=16".into())
}

fn limit_law() -> Outcome {
    let d = linking::exact_lk_distribution(16, &Budget::default()).map_err(|e| e.to_string())?;
    let atoms: Vec<(f64, f64)> = d.atoms().into_iter().map(|(v, p)| (v as f64 / 64.0, p)).collect();
    let exact = sampling::cdf_distance_atoms(&atoms, linking::limit_cdf);
    check(exact <= 0.05, format!("exact n=16 distance {exact}"))?;
    let values = sampling::sample(&SampleConfig::new(Model::PetalumaLink, 64, 100_000, 2024)).map_err(|e| e.to_string())?;
    let scaled: Vec<f64> = values.iter().map(|&v| v as f64 / 256.0).collect();
    let mc = sampling::cdf_distance(&scaled, linking::limit_cdf);
    check(mc <= 0.03, format!("Monte Carlo n=64 distance {mc}"))?;
    Ok(format!("sup distance: exact n=16 {exact:.4}, sampled n=64 {mc:.4}"))
}

fn walk_identity() -> Outcome {
    let mut rng = sampling::sample_rng(9, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=64);
        let l = PetalLink::new(Permutation::new(random_perm(4 * n, &mut rng)).unwrap()).unwrap();
        let lk = linking::linking_number(&l);
        let a = linking::area(&linking::walk_from(&l));
        check(lk == -a, format!("lk {lk} vs area {a}"))?;
    }
    Ok("lk = -area on 1000 random links, n<=64".into())
}

fn invariance() -> Outcome {
    let mut rng = sampling::sample_rng(10, 0);
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
        let n = rng.gen_range(0..=6);
        knot(random_perm(2 * n + 1, rng))
    };
    for _ in 0..500 {
        let k = draw(&mut rng);
        let s = k.star_gauss_diagram();
        let g = k.to_grid().gauss_diagram();
        check((gauss::c2(&s), gauss::v3(&s)) == (gauss::c2(&g), gauss::v3(&g)), format!("star/grid {:?}", k.perm().values()))?;
    }
    for _ in 0..200 {
        let k = draw(&mut rng);
        let s = k.star_gauss_diagram();
        let want = (gauss::c2(&s), gauss::v3(&s));
        let sk = StarSkeleton::new(k.n());
        for &start in sk.segment_start() {
            let r = s.rotate_basepoint(start);
            check((gauss::c2(&r), gauss::v3(&r)) == want, format!("base point {:?} at {start}", k.perm().values()))?;
        }
    }
    for _ in 0..500 {
        let k = draw(&mut rng);
        let s = k.star_gauss_diagram();
        let m = k.mirror().star_gauss_diagram();
        check(gauss::c2(&m) == gauss::c2(&s) && gauss::v3(&m) == -gauss::v3(&s), format!("mirror {:?}", k.perm().values()))?;
    }
    Ok("star/grid 500, base point 200, mirror 500".into())
}

fn model_comparison() -> Outcome {
    let values = sampling::sample(&SampleConfig::new(Model::PetalumaKnot, 50, 100_000, 50)).map_err(|e| e.to_string())?;
    let p = sampling::positivity_ratio(&values);
    let ratio = p.ratio().unwrap_or(f64::INFINITY);
    check((2.5..=3.5).contains(&ratio), format!("pos/neg = {ratio:.3} ({p:?})"))?;
    let counts = sampling::star_exact_c2(2, &Budget::default()).map_err(|e| e.to_string())?;
    let total: u64 = counts.values().sum();
    let sum: i64 = counts.iter().map(|(&v, &c)| v * c as i64).sum();
    let mean = rational::frac(sum, total as i64);
    check(total == 32 && mean == rational::frac(1, 2), format!("star mean {mean}"))?;
    check(mean == moments::star_model_expectation_c2(2), "closed form")?;
    Ok(format!("pos/neg at n=50 = {ratio:.3}; star E[c2] at n=2 = 1/2 over 32 cases"))
}

fn main() {
    let mut failed = 0;
    let mut run = |id: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let out = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {id:>2} PASS {name} ({secs:.1}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name} ({secs:.1}s): {msg}");
            }
        }
    };
    run(1, "trefoil values", &mut trefoil);
    run(2, "torus knot c2", &mut torus);
    run(3, "first moment", &mut first_moment);
    run(4, "moment polynomials", &mut moment_polynomials);
    run(5, "limiting moments", &mut limit_moments);
    run(6, "Fourier vanishing", &mut fourier);
    run(7, "linking DP", &mut linking_dp);
    run(8, "limit law", &mut limit_law);
    run(9, "walk-link identity", &mut walk_identity);
    run(10, "invariance suite", &mut invariance);
    run(11, "model comparison", &mut model_comparison);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
