//! Exact distribution of the signed area of lattice walks.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::budget::Budget;
use crate::rational::{self, Rational};
use crate::Result;

/// Exact counts of an integer-valued statistic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AreaDistribution {
    pub counts: BTreeMap<i64, BigUint>,
}

impl AreaDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn count(&self, value: i64) -> BigUint {
        self.counts.get(&value).cloned().unwrap_or_default()
    }

    pub fn probability(&self, value: i64) -> Rational {
        Rational::new(self.count(value).into(), self.total().into())
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().all(|(&a, c)| self.counts.get(&-a) == Some(c))
    }

    /// `E[(value / scale)^k]`.
    pub fn moment(&self, k: u32, scale: i64) -> Rational {
        let mut sum = BigInt::zero();
        for (&v, c) in &self.counts {
            sum += BigInt::from(v).pow(k) * BigInt::from(c.clone());
        }
        let denom = BigInt::from(self.total()) * BigInt::from(scale).pow(k);
        Rational::new(sum, denom)
    }

    /// `(value, probability)` pairs in increasing order, as floats.
    pub fn atoms(&self) -> Vec<(i64, f64)> {
        let total = self.total();
        self.counts
            .iter()
            .map(|(&v, c)| (v, rational::to_f64(&Rational::new(c.clone().into(), total.clone().into()))))
            .collect()
    }
}

trait Count: Clone + Zero {
    fn one() -> Self;
    /// `self += other`; false on overflow.
    fn add_from(&mut self, other: &Self) -> bool;
    fn into_big(self) -> BigUint;
}

impl Count for u128 {
    fn one() -> Self {
        1
    }

    fn add_from(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }

    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Count for BigUint {
    fn one() -> Self {
        BigUint::from(1u8)
    }

    fn add_from(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }

    fn into_big(self) -> BigUint {
        self
    }
}

struct Dims {
    l: usize,
    r: usize,
    u: usize,
    d: usize,
}

impl Dims {
    fn index(&self, l: usize, r: usize, u: usize) -> usize {
        (l * (self.r + 1) + r) * (self.u + 1) + u
    }

    fn cell_count(&self) -> usize {
        (self.l + 1) * (self.r + 1) * (self.u + 1)
    }

    // |A| <= (l + r) * max(u, d)
    fn bound(l: usize, r: usize, u: usize, d: usize) -> usize {
        (l + r) * u.max(d)
    }
}

// Layers by number of steps; a layer is a dense table over (l, r, u) with d
// implied, each cell an area row centred at zero.
fn run<T: Count>(dims: &Dims) -> Option<Vec<T>> {
    let total = dims.l + dims.r + dims.u + dims.d;
    let mut prev: Vec<Option<Vec<T>>> = vec![None; dims.cell_count()];
    prev[dims.index(0, 0, 0)] = Some(vec![T::one()]);
    for s in 1..=total {
        let mut next: Vec<Option<Vec<T>>> = vec![None; dims.cell_count()];
        for l in 0..=dims.l.min(s) {
            for r in 0..=dims.r.min(s - l) {
                for u in 0..=dims.u.min(s - l - r) {
                    let d = s - l - r - u;
                    if d > dims.d {
                        continue;
                    }
                    let b = Dims::bound(l, r, u, d);
                    let mut row = vec![T::zero(); 2 * b + 1];
                    let y = u as i64 - d as i64;
                    // Last step: L adds y to the area, R subtracts it, U and D add nothing.
                    let mut sources = Vec::with_capacity(4);
                    if l > 0 {
                        sources.push((dims.index(l - 1, r, u), y));
                    }
                    if r > 0 {
                        sources.push((dims.index(l, r - 1, u), -y));
                    }
                    if u > 0 {
                        sources.push((dims.index(l, r, u - 1), 0));
                    }
                    if d > 0 {
                        sources.push((dims.index(l, r, u), 0));
                    }
                    for (cell, shift) in sources {
                        let Some(src) = prev[cell].as_ref() else { continue };
                        let offset = b as i64 - (src.len() / 2) as i64 + shift;
                        for (i, c) in src.iter().enumerate() {
                            if !c.is_zero() && !row[(i as i64 + offset) as usize].add_from(c) {
                                return None;
                            }
                        }
                    }
                    next[dims.index(l, r, u)] = Some(row);
                }
            }
        }
        prev = next;
    }
    prev[dims.index(dims.l, dims.r, dims.u)].take()
}

fn peak_layer_bytes(dims: &Dims, word: u64) -> u64 {
    let total = dims.l + dims.r + dims.u + dims.d;
    let mut peak = 0u64;
    for s in 0..=total {
        let mut bytes = 0u64;
        for l in 0..=dims.l.min(s) {
            for r in 0..=dims.r.min(s - l) {
                for u in 0..=dims.u.min(s - l - r) {
                    let d = s - l - r - u;
                    if d <= dims.d {
                        bytes += (2 * Dims::bound(l, r, u, d) as u64 + 1) * word;
                    }
                }
            }
        }
        peak = peak.max(bytes);
    }
    2 * peak
}

/// Number of walks with `l` left, `r` right, `u` up and `d` down steps, by
/// signed area.
pub fn z_table(l: usize, r: usize, u: usize, d: usize, budget: &Budget) -> Result<AreaDistribution> {
    let dims = Dims { l, r, u, d };
    budget.check_memory(peak_layer_bytes(&dims, 16), "area dynamic program")?;
    let row: Vec<BigUint> = match run::<u128>(&dims) {
        Some(row) => row.into_iter().map(Count::into_big).collect(),
        None => {
            budget.check_memory(peak_layer_bytes(&dims, 48), "area dynamic program")?;
            run::<BigUint>(&dims).expect("big integers do not overflow")
        }
    };
    let b = (row.len() / 2) as i64;
    let counts = row
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i64 - b, c))
        .collect();
    Ok(AreaDistribution { counts })
}

/// Exact distribution of the linking number of a random link with `4n`
/// petals. The linking number is minus the area, and the distribution is
/// symmetric.
pub fn exact_lk_distribution(n: usize, budget: &Budget) -> Result<AreaDistribution> {
    if n == 0 {
        return Err(crate::Error::InvalidSize("links need n >= 1".into()));
    }
    let area = z_table(n, n, n, n, budget)?;
    let counts = area.counts.into_iter().map(|(a, c)| (-a, c)).collect();
    Ok(AreaDistribution { counts })
}

/// `(4n)! / (n!)^4`.
pub fn multinomial4(n: usize) -> BigUint {
    let f = |k: usize| rational::factorial(k as u64);
    (f(4 * n) / f(n).pow(4)).to_biguint().expect("positive")
}

