//! Reproducible Monte Carlo sampling of random knots and links.
//!
//! Sample `i` under seed `s` draws from a ChaCha8 stream keyed by `(s, i)`,
//! so a run gives the same values whatever the number of worker threads.

mod stats;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use stats::{cdf_distance, cdf_distance_atoms, positivity_ratio, Histogram, Positivity, Summary};

use crate::budget::Budget;
use crate::diagrams::{GridDiagram, PetalKnot, PetalLink, Permutation, StarSkeleton};
use crate::gauss::{self, CompiledFormula};
use crate::linking;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// Uniform height permutation of a `(2n+1)`-petal knot.
    PetalumaKnot,
    /// Uniform height permutation of a `4n`-petal two-component link.
    PetalumaLink,
    /// Independent fair over/under choice at every crossing of the `(2n+1)`-star.
    Star,
    /// Independent uniform `sigma`, `pi` of size `m`.
    Grid,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "petaluma-knot" => Ok(Model::PetalumaKnot),
            "petaluma-link" => Ok(Model::PetalumaLink),
            "star" => Ok(Model::Star),
            "grid" => Ok(Model::Grid),
            _ => Err(Error::InvalidSize(format!("unknown model {s:?}"))),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::PetalumaKnot => "petaluma-knot",
            Model::PetalumaLink => "petaluma-link",
            Model::Star => "star",
            Model::Grid => "grid",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    C2,
    V3,
    Lk,
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c2" => Ok(Statistic::C2),
            "v3" => Ok(Statistic::V3),
            "lk" => Ok(Statistic::Lk),
            _ => Err(Error::InvalidSize(format!("unknown invariant {s:?}"))),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistic::C2 => "c2",
            Statistic::V3 => "v3",
            Statistic::Lk => "lk",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConfig {
    pub model: Model,
    /// `n` for petal and star models, `m` for the grid model.
    pub size: usize,
    pub samples: usize,
    pub seed: u64,
    pub statistic: Statistic,
}

impl SampleConfig {
    pub fn new(model: Model, size: usize, samples: usize, seed: u64) -> Self {
        let statistic = if model == Model::PetalumaLink { Statistic::Lk } else { Statistic::C2 };
        SampleConfig { model, size, samples, seed, statistic }
    }

    pub fn with_statistic(mut self, statistic: Statistic) -> Self {
        self.statistic = statistic;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidSize("at least one sample".into()));
        }
        let link = self.model == Model::PetalumaLink;
        if link != (self.statistic == Statistic::Lk) {
            return Err(Error::InvalidSize(format!("{} is not defined on {}", self.statistic, self.model)));
        }
        match self.model {
            Model::PetalumaLink if self.size == 0 => Err(Error::InvalidSize("links need n >= 1".into())),
            Model::Grid if self.size < 2 => Err(Error::InvalidSize("grids need m >= 2".into())),
            _ => Ok(()),
        }
    }
}

/// The random generator for sample `index`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn shuffled(m: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut v: Vec<usize> = (0..m).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle of 0..m")
}

struct Sampler {
    config: SampleConfig,
    skeleton: Option<StarSkeleton>,
    v3: Option<CompiledFormula>,
}

impl Sampler {
    fn new(config: &SampleConfig) -> Result<Self> {
        config.validate()?;
        let star = matches!(config.model, Model::PetalumaKnot | Model::Star);
        let skeleton = star.then(|| StarSkeleton::new(config.size));
        let v3 = match (&skeleton, config.statistic) {
            (Some(sk), Statistic::V3) => Some(CompiledFormula::new(&gauss::v3_formula(), sk.positions())?),
            _ => None,
        };
        Ok(Sampler { config: config.clone(), skeleton, v3 })
    }

    fn star_value(&self, bits: &[bool]) -> i64 {
        let sk = self.skeleton.as_ref().expect("star model");
        match &self.v3 {
            Some(f) => {
                let state: Vec<_> = bits.iter().enumerate().map(|(c, &a)| (!a, sk.sign(c, a))).collect();
                f.value(&state) / f.denominator()
            }
            None => gauss::c2_star(sk, bits),
        }
    }

    fn draw(&self, index: u64) -> i64 {
        let mut rng = sample_rng(self.config.seed, index);
        let n = self.config.size;
        match self.config.model {
            Model::PetalumaKnot => {
                let k = PetalKnot::new(shuffled(2 * n + 1, &mut rng)).expect("odd length");
                let bits = k.ascending_bits(self.skeleton.as_ref().expect("star model"));
                self.star_value(&bits)
            }
            Model::Star => {
                let len = self.skeleton.as_ref().expect("star model").len();
                let bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
                self.star_value(&bits)
            }
            Model::PetalumaLink => {
                let l = PetalLink::new(shuffled(4 * n, &mut rng)).expect("length 4n");
                linking::linking_number(&l)
            }
            Model::Grid => {
                let sigma = shuffled(n, &mut rng);
                let pi = shuffled(n, &mut rng);
                let d = GridDiagram::new(sigma, pi).expect("same sizes").gauss_diagram();
                match self.config.statistic {
                    Statistic::V3 => gauss::v3(&d),
                    _ => gauss::c2_fast(&d),
                }
            }
        }
    }
}

/// Draws `config.samples` values of the configured statistic, in sample order.
pub fn sample(config: &SampleConfig) -> Result<Vec<i64>> {
    let sampler = Sampler::new(config)?;
    Ok((0..config.samples as u64).into_par_iter().map(|i| sampler.draw(i)).collect())
}

/// Exact `c2` distribution of the star model by running over all `2^m`
/// over/under assignments.
pub fn star_exact_c2(n: usize, budget: &Budget) -> Result<std::collections::BTreeMap<i64, u64>> {
    let sk = StarSkeleton::new(n);
    let m = sk.len();
    if m >= 63 {
        return Err(Error::BudgetExceeded(format!("2^{m} star assignments")));
    }
    budget.check_permutations(1u64 << m, "star model enumeration")?;
    let mut counts = std::collections::BTreeMap::new();
    for mask in 0u64..1 << m {
        let bits: Vec<bool> = (0..m).map(|c| mask >> c & 1 == 1).collect();
        *counts.entry(gauss::c2_star(&sk, &bits)).or_insert(0) += 1;
    }
    Ok(counts)
}
