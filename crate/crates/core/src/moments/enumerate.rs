//! Exhaustive enumeration over all height permutations.
//!
//! Permutations are visited in plain-changes order on the list of segments
//! sorted by height, so consecutive visits differ by exchanging two adjacent
//! heights. That exchange flips at most one crossing, and the compiled
//! formulas update in time proportional to the matches through it.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{Invariant, ValueDistribution};
use crate::budget::Budget;
use crate::gauss::{c2_formula, v3_formula, CompiledFormula, GaussFormula, StarEvaluator};
use crate::rational;
use crate::{Error, Result};

/// Adjacent transpositions generating all permutations of `m` items
/// (Knuth's Algorithm P). Each item is the left index `k` of a swap of
/// positions `k` and `k + 1`; there are `m! - 1` of them.
#[derive(Debug, Clone)]
pub struct PlainChanges {
    m: usize,
    c: Vec<i64>,
    o: Vec<i64>,
    done: bool,
}

impl PlainChanges {
    pub fn new(m: usize) -> Self {
        PlainChanges { m, c: vec![0; m + 1], o: vec![1; m + 1], done: m < 2 }
    }
}

impl Iterator for PlainChanges {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        let mut j = self.m;
        let mut s = 0;
        loop {
            let q = self.c[j] + self.o[j];
            if q == j as i64 {
                if j == 1 {
                    self.done = true;
                    return None;
                }
                s += 1;
            }
            if q < 0 || q == j as i64 {
                self.o[j] = -self.o[j];
                j -= 1;
                continue;
            }
            let a = j as i64 - self.c[j] + s;
            let b = j as i64 - q + s;
            self.c[j] = q;
            return Some(a.min(b) as usize - 1);
        }
    }
}

fn run_block(ev: &StarEvaluator, formulas: &[CompiledFormula], m: usize, lowest: usize) -> Result<Vec<HashMap<i64, u64>>> {
    let sk = ev.skeleton();
    let mut crossing_of = vec![usize::MAX; m * m];
    for (c, &(lo, hi)) in sk.crossings().iter().enumerate() {
        crossing_of[lo * m + hi] = c;
        crossing_of[hi * m + lo] = c;
    }
    let mut order: Vec<usize> = std::iter::once(lowest).chain((0..m).filter(|&s| s != lowest)).collect();
    let mut height = vec![0; m];
    for (h, &s) in order.iter().enumerate() {
        height[s] = h;
    }
    let asc: Vec<bool> = sk.crossings().iter().map(|&(lo, hi)| height[lo] < height[hi]).collect();
    let mut state = ev.state(&asc);
    let mut values: Vec<i64> = formulas.iter().map(|f| f.value(&state)).collect();
    let mut counts = vec![HashMap::new(); formulas.len()];
    let mut record = |values: &[i64]| -> Result<()> {
        for ((f, v), cnt) in formulas.iter().zip(values).zip(counts.iter_mut()) {
            if v % f.denominator() != 0 {
                return Err(Error::NotInteger(format!("{v}/{}", f.denominator())));
            }
            *cnt.entry(v / f.denominator()).or_insert(0) += 1;
        }
        Ok(())
    };
    record(&values)?;
    for k in PlainChanges::new(m - 1) {
        let (a, b) = (order[k + 1], order[k + 2]);
        order.swap(k + 1, k + 2);
        let c = crossing_of[a * m + b];
        if c != usize::MAX {
            // `a` is now above `b`.
            let ascending = b < a;
            let new = (!ascending, sk.sign(c, ascending));
            for (f, v) in formulas.iter().zip(values.iter_mut()) {
                *v += f.delta(&mut state, c, new);
            }
            state[c] = new;
        }
        record(&values)?;
    }
    Ok(counts)
}

/// Joint enumeration of several invariants over `S_{2n+1}`.
pub fn exact_distributions(n: usize, invariants: &[Invariant], budget: &Budget) -> Result<Vec<ValueDistribution>> {
    let pairs: Vec<(Invariant, GaussFormula)> = invariants
        .iter()
        .map(|&i| match i {
            Invariant::C2 => (i, c2_formula()),
            Invariant::V3 => (i, v3_formula()),
        })
        .collect();
    exact_distributions_with(n, &pairs, budget)
}

/// Like [`exact_distributions`], with an explicit formula for each label.
/// Fails with `NotInteger` if a formula takes a non-integer value.
pub fn exact_distributions_with(
    n: usize,
    formulas: &[(Invariant, GaussFormula)],
    budget: &Budget,
) -> Result<Vec<ValueDistribution>> {
    let m = 2 * n + 1;
    let count = rational::factorial(m as u64).to_u64().unwrap_or(u64::MAX);
    budget.check_permutations(count, "exhaustive enumeration")?;
    let ev = StarEvaluator::new(n, false);
    let chords = ev.skeleton().positions().to_vec();
    let invariants: Vec<Invariant> = formulas.iter().map(|p| p.0).collect();
    let formulas = formulas
        .iter()
        .map(|(_, f)| CompiledFormula::new(f, &chords))
        .collect::<Result<Vec<_>>>()?;
    let blocks = (0..m)
        .into_par_iter()
        .map(|lowest| run_block(&ev, &formulas, m, lowest))
        .collect::<Result<Vec<_>>>()?;
    let mut merged: Vec<BTreeMap<i64, BigUint>> = vec![BTreeMap::new(); invariants.len()];
    for block in blocks {
        for (acc, counts) in merged.iter_mut().zip(block) {
            for (v, c) in counts {
                *acc.entry(v).or_default() += c;
            }
        }
    }
    Ok(invariants
        .iter()
        .zip(merged)
        .map(|(&invariant, counts)| ValueDistribution { invariant, n, counts })
        .collect())
}

/// Exact distribution of `c2` or `v3` over all `(2n+1)!` petal knots.
pub fn exact_distribution(invariant: Invariant, n: usize, budget: &Budget) -> Result<ValueDistribution> {
    Ok(exact_distributions(n, &[invariant], budget)?.pop().expect("one invariant"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn plain_changes_visits_everything() {
        for m in 0..=6 {
            let mut a: Vec<usize> = (0..m).collect();
            let mut seen = HashSet::from([a.clone()]);
            for k in PlainChanges::new(m) {
                a.swap(k, k + 1);
                assert!(seen.insert(a.clone()), "repeat at m={m}");
            }
            let fact: usize = (1..=m).product();
            assert_eq!(seen.len(), fact);
        }
    }
}
