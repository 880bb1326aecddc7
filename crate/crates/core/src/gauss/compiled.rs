//! A formula compiled against a fixed chord skeleton.
//!
//! Every star diagram with `2n+1` petals has the same chords; only arrow
//! directions and signs vary with the permutation. Subdiagram matches are
//! found once, after which a value costs one pass over the matches and a
//! single flipped crossing costs only the matches through it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::formula::{GaussFormula, SignConstraint};
use super::pairing::embeddings;
use crate::{Error, Result};

#[derive(Debug, Clone)]
struct CompiledTerm {
    tail_first: Vec<bool>,
    constraints: Vec<SignConstraint>,
    coefficient: i64,
}

#[derive(Debug, Clone)]
struct Match {
    crossings: Vec<u32>,
    term: u32,
}

/// Per-crossing state: `(tail_first, sign)`.
pub type ChordState = (bool, i8);

#[derive(Debug, Clone)]
pub struct CompiledFormula {
    terms: Vec<CompiledTerm>,
    matches: Vec<Match>,
    through: Vec<Vec<u32>>,
    denominator: i64,
}

impl CompiledFormula {
    /// `chords[c]` gives the `(first, second)` positions of crossing `c`.
    /// Coefficients are brought to a common denominator, which must fit in
    /// an `i64` along with the scaled numerators.
    pub fn new(f: &GaussFormula, chords: &[(usize, usize)]) -> Result<Self> {
        let mut order: Vec<usize> = (0..chords.len()).collect();
        order.sort_unstable_by_key(|&c| chords[c].0);
        let sorted: Vec<(usize, usize)> = order.iter().map(|&c| chords[c]).collect();

        let denom = f
            .terms()
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coefficient().denom()));
        let denominator = denom
            .to_i64()
            .ok_or_else(|| Error::Formula("coefficient denominators too large".into()))?;
        let mut terms = Vec::new();
        let mut by_shape: HashMap<Vec<u8>, Vec<u32>> = HashMap::new();
        for t in f.terms() {
            let scaled = t.coefficient() * crate::rational::Rational::from_integer(denom.clone());
            let coefficient = scaled
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Formula("coefficient too large".into()))?;
            let norm = t.normalized();
            by_shape.entry(t.shape()).or_default().push(terms.len() as u32);
            terms.push(CompiledTerm {
                tail_first: norm.iter().map(|a| a.2).collect(),
                constraints: norm.iter().map(|a| a.3).collect(),
                coefficient,
            });
        }
        let mut matches = Vec::new();
        for (word, ids) in by_shape {
            for e in embeddings(&word, &sorted) {
                let crossings: Vec<u32> = e.iter().map(|&i| order[i] as u32).collect();
                for &term in &ids {
                    matches.push(Match { crossings: crossings.clone(), term });
                }
            }
        }
        let mut through = vec![Vec::new(); chords.len()];
        for (i, m) in matches.iter().enumerate() {
            for &c in &m.crossings {
                through[c as usize].push(i as u32);
            }
        }
        Ok(CompiledFormula { terms, matches, through, denominator })
    }

    /// Common denominator of the coefficients; [`value`](Self::value) and
    /// [`update`](Self::update) return multiples of `1/denominator`.
    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn match_count(&self) -> usize {
        self.matches.len()
    }

    fn contribution(&self, m: &Match, state: &[ChordState]) -> i64 {
        let t = &self.terms[m.term as usize];
        let mut w = t.coefficient;
        for (k, &c) in m.crossings.iter().enumerate() {
            let (tf, s) = state[c as usize];
            if tf != t.tail_first[k] {
                return 0;
            }
            w *= t.constraints[k].weight(s) as i64;
            if w == 0 {
                return 0;
            }
        }
        w
    }

    /// The formula value times [`denominator`](Self::denominator).
    pub fn value(&self, state: &[ChordState]) -> i64 {
        self.matches.iter().map(|m| self.contribution(m, state)).sum()
    }

    /// Replaces the state of crossing `c` and returns the change in value.
    pub fn update(&self, state: &mut [ChordState], c: usize, new: ChordState) -> i64 {
        let ms = &self.through[c];
        let before: i64 = ms.iter().map(|&i| self.contribution(&self.matches[i as usize], state)).sum();
        state[c] = new;
        let after: i64 = ms.iter().map(|&i| self.contribution(&self.matches[i as usize], state)).sum();
        after - before
    }

    /// The change in value if crossing `c` took state `new`; `state` is
    /// left as it was.
    pub fn delta(&self, state: &mut [ChordState], c: usize, new: ChordState) -> i64 {
        let old = state[c];
        let d = self.update(state, c, new);
        state[c] = old;
        d
    }
}
