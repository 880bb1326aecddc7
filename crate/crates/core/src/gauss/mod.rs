//! Gauss diagram formulas.
//!
//! A Gauss diagram formula is a linear combination of arrow diagrams; its
//! value on a knot diagram is the weighted count of matching subdiagrams of
//! the knot's Gauss diagram.

mod compiled;
mod fast;
mod formula;
mod pairing;

use num_traits::ToPrimitive;

pub use compiled::{ChordState, CompiledFormula};
pub use fast::{c2_fast, c2_star};
pub use formula::{
    c2_formula, gpv_formula, v3_arrow_diagrams, v3_formula, ArrowTerm, GaussFormula, SignConstraint,
};
pub use pairing::{evaluate, pairing, pairing_count};

use crate::diagrams::GaussDiagram;
use crate::rational::Rational;
use crate::{Error, Result};

fn to_int(v: Rational, what: &str) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::NotInteger(format!("{what} evaluated to {v}")));
    }
    v.to_integer().to_i64().ok_or_else(|| Error::NotInteger(format!("{what} overflows i64")))
}

/// Evaluates a formula that must produce an integer.
pub fn evaluate_integer(f: &GaussFormula, d: &GaussDiagram) -> Result<i64> {
    to_int(evaluate(f, d), "formula")
}

/// The Casson invariant: the coefficient of `z^2` in the Conway polynomial.
pub fn c2(d: &GaussDiagram) -> i64 {
    to_int(evaluate(&c2_formula(), d), "c2").expect("c2 has integer coefficients")
}

/// The order-3 invariant, normalised to `v3(trefoil) = 1` on the trefoil
/// closed by the permutation `0 3 1 4 2`.
pub fn v3(d: &GaussDiagram) -> i64 {
    to_int(evaluate(&v3_formula(), d), "v3").expect("v3 has integer coefficients")
}

/// Evaluators for `c2` and `v3` compiled for the star diagrams with `2n+1`
/// petals. Values of the compiled formulas are scaled by their
/// [`CompiledFormula::denominator`].
#[derive(Debug, Clone)]
pub struct StarEvaluator {
    skeleton: crate::diagrams::StarSkeleton,
    c2: CompiledFormula,
    v3: Option<CompiledFormula>,
}

impl StarEvaluator {
    pub fn new(n: usize, with_v3: bool) -> Self {
        Self::with_formulas(n, &c2_formula(), with_v3.then(v3_formula).as_ref())
            .expect("built-in formulas have small coefficients")
    }

    pub fn with_formulas(n: usize, c2f: &GaussFormula, v3f: Option<&GaussFormula>) -> Result<Self> {
        let skeleton = crate::diagrams::StarSkeleton::new(n);
        let chords = skeleton.positions().to_vec();
        Ok(StarEvaluator {
            c2: CompiledFormula::new(c2f, &chords)?,
            v3: v3f.map(|f| CompiledFormula::new(f, &chords)).transpose()?,
            skeleton,
        })
    }

    pub fn skeleton(&self) -> &crate::diagrams::StarSkeleton {
        &self.skeleton
    }

    pub fn state(&self, ascending: &[bool]) -> Vec<ChordState> {
        ascending
            .iter()
            .enumerate()
            .map(|(c, &a)| (!a, self.skeleton.sign(c, a)))
            .collect()
    }

    pub fn c2(&self) -> &CompiledFormula {
        &self.c2
    }

    pub fn v3(&self) -> Option<&CompiledFormula> {
        self.v3.as_ref()
    }
}
