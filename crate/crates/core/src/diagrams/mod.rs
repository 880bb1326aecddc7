//! Petal knots and links, their star and grid diagrams, and Gauss diagrams.
//!
//! Indexing is 0-based throughout: segments of a `2n+1`-petal knot are
//! `0..=2n` in traversal order from the base point, and heights are `0..=2n`
//! with larger values passing above smaller ones.

mod code;
mod grid;
mod star;

pub use grid::{grid_gauss_diagram, petal_to_grid, GridDiagram};
pub use star::{star_crossing_order, StarSkeleton};

use crate::{Error, Result};

/// A bijection of `0..m`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let len = values.len();
        let mut seen = vec![false; len];
        for &v in &values {
            if v >= len {
                return Err(Error::InvalidPermutation { len, reason: format!("value {v} out of range") });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation { len, reason: format!("value {v} repeated") });
            }
        }
        Ok(Permutation(values))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }
}

impl std::ops::Index<usize> for Permutation {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Comma- or whitespace-separated list, e.g. `"0,3,1,4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::InvalidPermutation {
                    len: 0,
                    reason: format!("cannot parse {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A knot given by a `2n+1`-petal diagram and the heights of its strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PetalKnot {
    n: usize,
    perm: Permutation,
}

impl PetalKnot {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.len() % 2 == 0 {
            return Err(Error::InvalidSize(format!(
                "a petal knot needs an odd number of petals, got {}",
                perm.len()
            )));
        }
        Ok(PetalKnot { n: perm.len() / 2, perm })
    }

    /// The torus-knot permutation `k -> n*k mod 2n+1`.
    pub fn torus(n: usize) -> Self {
        let m = 2 * n + 1;
        let perm = Permutation((0..m).map(|k| (n * k) % m).collect());
        PetalKnot { n, perm }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn petals(&self) -> usize {
        2 * self.n + 1
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Reflection through the projection plane: every height `h` becomes `2n - h`.
    pub fn mirror(&self) -> PetalKnot {
        let top = 2 * self.n;
        PetalKnot { n: self.n, perm: Permutation(self.perm.0.iter().map(|&h| top - h).collect()) }
    }

    /// Which crossings of the star diagram are ascending, indexed like
    /// [`StarSkeleton::crossings`].
    pub fn ascending_bits(&self, skeleton: &StarSkeleton) -> Vec<bool> {
        skeleton
            .crossings()
            .iter()
            .map(|&(lo, hi)| self.perm[lo] < self.perm[hi])
            .collect()
    }

    pub fn star_crossings(&self) -> Vec<Crossing> {
        let sk = StarSkeleton::new(self.n);
        let asc = self.ascending_bits(&sk);
        sk.crossings()
            .iter()
            .zip(sk.positions())
            .zip(asc)
            .map(|((&(seg_lo, seg_hi), &(pos_lo, pos_hi)), ascending)| Crossing {
                seg_lo,
                seg_hi,
                pos_lo,
                pos_hi,
                ascending,
                sign: star::crossing_sign(seg_lo, seg_hi, ascending),
            })
            .collect()
    }

    pub fn star_gauss_diagram(&self) -> GaussDiagram {
        let sk = StarSkeleton::new(self.n);
        sk.gauss_diagram(&self.ascending_bits(&sk))
    }

    pub fn to_grid(&self) -> GridDiagram {
        petal_to_grid(self)
    }
}

/// A two-component link on a `4n`-petal diagram. Strands `0..2n` form the
/// first component, strands `2n..4n` the second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PetalLink {
    n: usize,
    perm: Permutation,
}

impl PetalLink {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_empty() || perm.len() % 4 != 0 {
            return Err(Error::InvalidSize(format!(
                "a two-component petal link needs 4n strands with n >= 1, got {}",
                perm.len()
            )));
        }
        Ok(PetalLink { n: perm.len() / 4, perm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }
}

/// One crossing of a star diagram, between segments `seg_lo < seg_hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub seg_lo: usize,
    pub seg_hi: usize,
    /// Traversal position of the passage along `seg_lo`.
    pub pos_lo: usize,
    /// Traversal position of the passage along `seg_hi`.
    pub pos_hi: usize,
    /// The under-passage is met first.
    pub ascending: bool,
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub crossing: usize,
    pub role: Role,
}

/// A chord of a Gauss diagram, with its two endpoint positions in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chord {
    pub first: usize,
    pub second: usize,
    /// The over-passage (arrow tail) comes first, i.e. the crossing is descending.
    pub tail_first: bool,
    pub sign: i8,
}

/// Based Gauss diagram: the crossing endpoints in the order they are met
/// when travelling from the base point, plus one sign per crossing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    endpoints: Vec<Endpoint>,
    signs: Vec<i8>,
}

impl GaussDiagram {
    pub fn new(endpoints: Vec<Endpoint>, signs: Vec<i8>) -> Result<Self> {
        let m = signs.len();
        if endpoints.len() != 2 * m {
            return Err(Error::GaussCode(format!(
                "{} endpoints for {m} crossings",
                endpoints.len()
            )));
        }
        if let Some(s) = signs.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::GaussCode(format!("sign {s} is not +-1")));
        }
        let mut over = vec![false; m];
        let mut under = vec![false; m];
        for e in &endpoints {
            if e.crossing >= m {
                return Err(Error::GaussCode(format!("crossing {} out of range", e.crossing)));
            }
            let slot = match e.role {
                Role::Over => &mut over[e.crossing],
                Role::Under => &mut under[e.crossing],
            };
            if std::mem::replace(slot, true) {
                return Err(Error::GaussCode(format!(
                    "crossing {} has two {:?} endpoints",
                    e.crossing, e.role
                )));
            }
        }
        Ok(GaussDiagram { endpoints, signs })
    }

    pub fn empty() -> Self {
        GaussDiagram { endpoints: Vec::new(), signs: Vec::new() }
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn endpoints(&self) -> &[Endpoint] {
        &self.endpoints
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Chords indexed by crossing id.
    pub fn chords(&self) -> Vec<Chord> {
        let m = self.len();
        let mut first = vec![usize::MAX; m];
        let mut chords = vec![Chord { first: 0, second: 0, tail_first: false, sign: 1 }; m];
        for (pos, e) in self.endpoints.iter().enumerate() {
            let c = e.crossing;
            if first[c] == usize::MAX {
                first[c] = pos;
                chords[c] = Chord {
                    first: pos,
                    second: 0,
                    tail_first: e.role == Role::Over,
                    sign: self.signs[c],
                };
            } else {
                chords[c].second = pos;
            }
        }
        chords
    }

    /// Moves the base point forward by `steps` endpoints.
    pub fn rotate_basepoint(&self, steps: usize) -> GaussDiagram {
        let len = self.endpoints.len();
        if len == 0 {
            return self.clone();
        }
        let s = steps % len;
        let mut endpoints = Vec::with_capacity(len);
        endpoints.extend_from_slice(&self.endpoints[s..]);
        endpoints.extend_from_slice(&self.endpoints[..s]);
        GaussDiagram { endpoints, signs: self.signs.clone() }
    }

    /// Swaps over and under at every crossing and negates every sign.
    pub fn mirror(&self) -> GaussDiagram {
        GaussDiagram {
            endpoints: self
                .endpoints
                .iter()
                .map(|e| Endpoint {
                    crossing: e.crossing,
                    role: match e.role {
                        Role::Over => Role::Under,
                        Role::Under => Role::Over,
                    },
                })
                .collect(),
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }
}

pub fn rotate_basepoint(d: &GaussDiagram, steps: usize) -> GaussDiagram {
    d.rotate_basepoint(steps)
}

pub fn mirror(k: &PetalKnot) -> PetalKnot {
    k.mirror()
}
