//! Fourier vanishing of the `v3` contributions of numbered arrow diagrams.
//!
//! A numbered arrow diagram labels the endpoints of one of the formula's
//! arrow diagrams with segment numbers, non-decreasing from the base point.
//! Given parities `eps` of the segments it either cannot occur in a star
//! diagram or it becomes a signed Gauss diagram with a coefficient in the
//! formula. Summed against a height order `sigma`, these coefficients form a
//! function of `eps` whose low Walsh coefficients must vanish.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::gauss::{gpv_formula, GaussFormula, SignConstraint};
use crate::{Error, Result};

/// Arrow `(first, second, tail_first)` in position order.
type Arrow = (usize, usize, bool);

struct Diagram {
    arrows: Vec<Arrow>,
    // Signed terms sharing this diagram: per-arrow constraints and coefficient.
    terms: Vec<(Vec<SignConstraint>, i64)>,
}

struct Numbered<'a> {
    diagram: &'a Diagram,
    labels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierViolation {
    pub j: usize,
    pub sigma: Vec<usize>,
    /// Bit `i` set when label `i` is in `I`.
    pub subset: u32,
    pub coefficient: i64,
}

#[derive(Debug, Clone, Default)]
pub struct FourierReport {
    /// Numbered diagrams per `j` before admissibility and `sigma` filtering.
    pub preflight: BTreeMap<usize, usize>,
    /// `(j, sigma)` cases checked.
    pub cases: usize,
    pub violations: Vec<FourierViolation>,
}

impl FourierReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

fn diagrams(f: &GaussFormula) -> Result<Vec<Diagram>> {
    let mut out: Vec<Diagram> = Vec::new();
    for t in f.terms() {
        let norm = t.normalized();
        let arrows: Vec<Arrow> = norm.iter().map(|a| (a.0, a.1, a.2)).collect();
        let cons = norm.iter().map(|a| a.3).collect();
        if !t.coefficient().is_integer() {
            return Err(Error::Formula("the Fourier check needs integer coefficients".into()));
        }
        let coef = t.coefficient().to_integer().to_i64().ok_or_else(|| Error::Formula("coefficient too large".into()))?;
        match out.iter_mut().find(|d| d.arrows == arrows) {
            Some(d) => d.terms.push((cons, coef)),
            None => out.push(Diagram { arrows, terms: vec![(cons, coef)] }),
        }
    }
    Ok(out)
}

/// Non-decreasing labellings of `len` positions onto `0..j`.
fn labellings(len: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if j == 0 || j > len {
        return out;
    }
    // Choose which of the len-1 gaps increase the label.
    for mask in 0u32..1 << (len - 1) {
        if mask.count_ones() as usize != j - 1 {
            continue;
        }
        let mut labels = vec![0; len];
        for p in 1..len {
            labels[p] = labels[p - 1] + (mask >> (p - 1) & 1) as usize;
        }
        out.push(labels);
    }
    out
}

// Position of segment y among the crossings along segment x, given parities:
// four runs, each in decreasing order of y.
fn crossing_key(x: usize, y: usize, eps: u32) -> (u8, i64) {
    let same = (eps >> x & 1) == (eps >> y & 1);
    let run = match (y < x, same) {
        (true, false) => 0,
        (false, true) => 1,
        (true, true) => 2,
        (false, false) => 3,
    };
    (run, -(y as i64))
}

impl Numbered<'_> {
    /// `(tail, head)` labels per arrow, or `None` when two ends share a
    /// label or two arrows join the same labels.
    fn ends(&self) -> Option<Vec<(usize, usize)>> {
        let mut ends = Vec::with_capacity(self.diagram.arrows.len());
        for &(f, s, tail_first) in &self.diagram.arrows {
            let (a, b) = (self.labels[f], self.labels[s]);
            if a == b {
                return None;
            }
            let e = if tail_first { (a, b) } else { (b, a) };
            let pair = (a.min(b), a.max(b));
            if ends.iter().any(|&(t, h): &(usize, usize)| (t.min(h), t.max(h)) == pair) {
                return None;
            }
            ends.push(e);
        }
        Some(ends)
    }

    fn coefficient(&self, ends: &[(usize, usize)], eps: u32) -> i64 {
        let arrows = &self.diagram.arrows;
        let mut partner = vec![0; self.labels.len()];
        for &(f, s, _) in arrows {
            partner[f] = self.labels[s];
            partner[s] = self.labels[f];
        }
        for p in 1..self.labels.len() {
            let x = self.labels[p];
            if x == self.labels[p - 1] && crossing_key(x, partner[p - 1], eps) >= crossing_key(x, partner[p], eps) {
                return 0;
            }
        }
        let e = |l: usize| if eps >> l & 1 == 1 { -1i8 } else { 1 };
        let signs: Vec<i8> = ends
            .iter()
            .map(|&(t, h)| e(t) * e(h) * if h < t { 1 } else { -1 })
            .collect();
        self.diagram
            .terms
            .iter()
            .map(|(cons, coef)| {
                coef * cons.iter().zip(&signs).map(|(c, &s)| c.weight(s) as i64).product::<i64>()
            })
            .sum()
    }
}

fn walsh_hadamard(v: &mut [i64]) {
    let mut h = 1;
    while h < v.len() {
        for i in (0..v.len()).step_by(2 * h) {
            for k in i..i + h {
                let (a, b) = (v[k], v[k + h]);
                v[k] = a + b;
                v[k + h] = a - b;
            }
        }
        h *= 2;
    }
}

fn permutations(j: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 0..j {
        out = out
            .into_iter()
            .flat_map(|p| (0..=i).map(move |at| {
                let mut q = p.clone();
                q.insert(at, i);
                q
            }))
            .collect();
    }
    out
}

/// Smallest `|I|` allowed a nonzero coefficient for `|J| = j`.
fn threshold(j: usize) -> usize {
    match j {
        6 => 6,
        5 => 4,
        4 => 2,
        _ => 0,
    }
}

/// Runs the check for `j = 4, 5, 6` with a given formula.
pub fn fourier_vanishing_check_with(f: &GaussFormula) -> Result<FourierReport> {
    let diagrams = diagrams(f)?;
    let mut report = FourierReport::default();
    for j in 4..=6 {
        let numbered: Vec<Numbered> = diagrams
            .iter()
            .flat_map(|d| {
                labellings(2 * d.arrows.len(), j).into_iter().map(move |labels| Numbered { diagram: d, labels })
            })
            .collect();
        report.preflight.insert(j, numbered.len());
        let admissible: Vec<(&Numbered, Vec<(usize, usize)>)> =
            numbered.iter().filter_map(|s| s.ends().map(|e| (s, e))).collect();
        for sigma in permutations(j) {
            report.cases += 1;
            let mut values = vec![0i64; 1 << j];
            for (s, ends) in &admissible {
                if ends.iter().all(|&(t, h)| sigma[t] > sigma[h]) {
                    for (eps, v) in values.iter_mut().enumerate() {
                        *v += s.coefficient(ends, eps as u32);
                    }
                }
            }
            walsh_hadamard(&mut values);
            for (subset, &c) in values.iter().enumerate() {
                if c != 0 && (subset.count_ones() as usize) < threshold(j) {
                    report.violations.push(FourierViolation {
                        j,
                        sigma: sigma.clone(),
                        subset: subset as u32,
                        coefficient: c,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Runs the check for the built-in `v3` formula.
pub fn fourier_vanishing_check() -> FourierReport {
    fourier_vanishing_check_with(&gpv_formula()).expect("integer coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelling_counts() {
        assert_eq!(labellings(6, 6).len(), 1);
        assert_eq!(labellings(6, 5).len(), 5);
        assert_eq!(labellings(6, 4).len(), 10);
        assert_eq!(labellings(4, 4).len(), 1);
        assert!(labellings(4, 5).is_empty());
    }

    #[test]
    fn walsh_of_a_character() {
        // f(eps) = eps(0) eps(1) on two labels.
        let mut v: Vec<i64> = (0..4u32).map(|e| if (e & 3).count_ones() % 2 == 0 { 1 } else { -1 }).collect();
        walsh_hadamard(&mut v);
        assert_eq!(v, vec![0, 0, 0, 4]);
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(4).len(), 24);
    }
}
