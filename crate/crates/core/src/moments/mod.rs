//! Exact distributions and moments of knot invariants.

mod enumerate;
mod fourier;
mod limit;
mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

pub use enumerate::{exact_distribution, exact_distributions, exact_distributions_with, PlainChanges};
pub use fourier::{fourier_vanishing_check, fourier_vanishing_check_with, FourierReport, FourierViolation};
pub use limit::{bernoulli, beta, limit_moment_c2, CycleCensus, LimitMoment};
pub use poly::{interpolate_polynomial, paper_polynomials, PaperPolynomials, Polynomial};

use crate::rational::{self, Rational};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    C2,
    V3,
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "c2" => Ok(Invariant::C2),
            "v3" => Ok(Invariant::V3),
            _ => Err(Error::InvalidSize(format!("unknown invariant {s:?}"))),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::C2 => "c2",
            Invariant::V3 => "v3",
        })
    }
}

/// Exact counts of invariant values over all `(2n+1)!` permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueDistribution {
    pub invariant: Invariant,
    pub n: usize,
    pub counts: BTreeMap<i64, BigUint>,
}

impl ValueDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `sum value * count`.
    pub fn sum(&self) -> BigInt {
        self.counts.iter().map(|(&v, c)| BigInt::from(v) * BigInt::from(c.clone())).sum()
    }

    pub fn moment(&self, k: u32) -> Rational {
        moment(self, k)
    }
}

/// `E[X^k]` under the counting measure of `dist`.
pub fn moment(dist: &ValueDistribution, k: u32) -> Rational {
    let mut sum = BigInt::zero();
    for (&v, c) in &dist.counts {
        sum += BigInt::from(v).pow(k) * BigInt::from(c.clone());
    }
    Rational::new(sum, dist.total().into())
}

/// `E[c2]` in the star model with `2n+1` segments: `(n^3 - n) / 12`.
pub fn star_model_expectation_c2(n: usize) -> Rational {
    let n = n as i64;
    rational::frac(n * n * n - n, 12)
}

/// Variance of `c2` in the star model: `(2n^4 + n^3 - 2n^2 - n) / 48`.
pub fn star_model_variance_c2(n: usize) -> Rational {
    let n = n as i64;
    rational::frac(2 * n.pow(4) + n.pow(3) - 2 * n * n - n, 48)
}
