//! Limiting moments of `c2 / n^2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::budget::Budget;
use crate::rational::{self, Rational};
use crate::Result;

/// Bernoulli numbers `B_0..=B_m` with `B_1 = -1/2`.
pub fn bernoulli(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    for i in 0..=m {
        if i == 0 {
            b.push(rational::int(1));
            continue;
        }
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(rational::binomial(i as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / rational::int(i as i64 + 1));
    }
    b
}

/// `beta_l = (-1)^(l/2+1) B_l / l!` for even `l >= 2`, zero otherwise.
pub fn beta(l: usize) -> Rational {
    if l < 2 || l % 2 == 1 {
        return Rational::zero();
    }
    let b = bernoulli(l).pop().expect("nonempty");
    let v = b / Rational::from_integer(rational::factorial(l as u64));
    if (l / 2) % 2 == 1 {
        v
    } else {
        -v
    }
}

/// Patterns grouped by their signed cycle type: sorted `(length, sign)`
/// pairs, sign `0` for odd cycles.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleCensus {
    pub classes: BTreeMap<Vec<(usize, i8)>, u64>,
}

impl CycleCensus {
    pub fn patterns(&self) -> u64 {
        self.classes.values().sum()
    }

    pub fn count(&self, class: &[(usize, i8)]) -> u64 {
        let mut key = class.to_vec();
        key.sort_unstable();
        self.classes.get(&key).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct LimitMoment {
    pub k: usize,
    pub value: Rational,
    pub census: CycleCensus,
}

/// Signed cycle type of the graph on `2k` vertices obtained by merging
/// `2i, 2i+1` and adding edges `t3 -> t1`, `t2 -> t4` per quadruple.
fn cycle_type(quads: &[[u8; 4]]) -> Vec<(usize, i8)> {
    let size = quads.len() * 4;
    let mut other = [0u8; 32];
    let mut is_tail = [false; 32];
    for q in quads {
        let [t1, t2, t3, t4] = *q;
        other[t3 as usize] = t1;
        other[t1 as usize] = t3;
        other[t2 as usize] = t4;
        other[t4 as usize] = t2;
        is_tail[t3 as usize] = true;
        is_tail[t2 as usize] = true;
    }
    let mut seen = [false; 32];
    let mut cycles = Vec::new();
    for start in 0..size {
        if seen[start] {
            continue;
        }
        let (mut x, mut len, mut forward) = (start, 0usize, 0usize);
        loop {
            seen[x] = true;
            forward += is_tail[x] as usize;
            len += 1;
            let y = other[x] as usize;
            seen[y] = true;
            x = y ^ 1;
            if x == start {
                break;
            }
        }
        let sign = if len % 2 == 1 {
            0
        } else if forward % 2 == 0 {
            1
        } else {
            -1
        };
        cycles.push((len, sign));
    }
    cycles.sort_unstable();
    cycles
}

fn partitions(free: u32, quads: &mut Vec<[u8; 4]>, visit: &mut dyn FnMut(&[[u8; 4]])) {
    if free == 0 {
        visit(quads);
        return;
    }
    let a = free.trailing_zeros();
    let rest = free & !(1 << a);
    let items: Vec<u32> = (0..32).filter(|&i| rest >> i & 1 == 1).collect();
    for x in 0..items.len() {
        for y in x + 1..items.len() {
            for z in y + 1..items.len() {
                let q = [a as u8, items[x] as u8, items[y] as u8, items[z] as u8];
                quads.push(q);
                partitions(rest & !(1 << items[x] | 1 << items[y] | 1 << items[z]), quads, visit);
                quads.pop();
            }
        }
    }
}

/// `lambda_k = lim E[(c2 / n^2)^k]` by the cycle formula over all ordered
/// partitions of `{1..4k}` into sorted quadruples.
pub fn limit_moment_c2(k: usize, budget: &Budget) -> Result<LimitMoment> {
    if k == 0 {
        return Ok(LimitMoment { k, value: rational::int(1), census: CycleCensus::default() });
    }
    let unordered = rational::factorial(4 * k as u64)
        / (rational::factorial(4).pow(k as u32) * rational::factorial(k as u64));
    budget.check_permutations(unordered.to_u64().unwrap_or(u64::MAX), "pattern enumeration")?;
    if k > 8 {
        return Err(crate::Error::InvalidSize("at most 8 quadruples".into()));
    }
    // Each unordered partition stands for k! orderings.
    let mut classes: BTreeMap<Vec<(usize, i8)>, u64> = BTreeMap::new();
    let mut quads = Vec::with_capacity(k);
    partitions((1u32 << (4 * k)) - 1, &mut quads, &mut |q| {
        *classes.entry(cycle_type(q)).or_insert(0) += 1;
    });
    let orderings = rational::factorial(k as u64).to_u64().expect("small");
    let betas: Vec<Rational> = (0..=2 * k).map(beta).collect();
    let mut sum = Rational::zero();
    for (class, count) in classes.iter_mut() {
        *count *= orderings;
        let mut term = Rational::from_integer(BigInt::from(*count));
        for &(len, sign) in class.iter() {
            term *= &betas[len] * rational::int(sign as i64);
        }
        sum += term;
    }
    let value = sum / Rational::from_integer(rational::factorial(2 * k as u64));
    Ok(LimitMoment { k, value, census: CycleCensus { classes } })
}
