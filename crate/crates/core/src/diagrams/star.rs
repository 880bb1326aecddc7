//! Star diagrams: the petal arcs straightened into `2n+1` chords.
//!
//! The underlying curve depends only on `n`; the permutation only decides
//! which strand is on top at each crossing. [`StarSkeleton`] caches the
//! fixed part so that many permutations can reuse it.

use std::collections::HashMap;

use super::{Endpoint, GaussDiagram, Role};
use crate::{Error, Result};

/// Segments met by segment `alpha` of the `2n+1`-star, in order along `alpha`.
///
/// The crossings along a segment come in four runs: lower segments of the
/// other parity, higher segments of the same parity, lower segments of the
/// same parity, higher segments of the other parity. Each run is decreasing
/// and the two neighbours `alpha +- 1 (mod 2n+1)` are skipped.
pub fn star_crossing_order(n: usize, alpha: usize) -> Result<Vec<usize>> {
    let segments = 2 * n + 1;
    if alpha >= segments {
        return Err(Error::SegmentOutOfRange { alpha, segments });
    }
    let adjacent = |x: usize| x == (alpha + 1) % segments || (x + 1) % segments == alpha;
    let same = |x: usize| (x + alpha) % 2 == 0;
    let run = |lower: bool, same_parity: bool| {
        (0..segments)
            .rev()
            .filter(move |&x| x != alpha && (x < alpha) == lower && same(x) == same_parity)
    };
    Ok(run(true, false)
        .chain(run(false, true))
        .chain(run(true, true))
        .chain(run(false, false))
        .filter(|&x| !adjacent(x))
        .collect())
}

/// Sign of the crossing between segments `lo < hi` of a star diagram.
pub(crate) fn crossing_sign(lo: usize, hi: usize, ascending: bool) -> i8 {
    let even = (lo + hi) % 2 == 0;
    if even == ascending {
        1
    } else {
        -1
    }
}

/// The crossing structure of the `2n+1`-star that does not depend on heights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSkeleton {
    n: usize,
    /// `(seg_lo, seg_hi)` per crossing, ordered by first traversal position.
    crossings: Vec<(usize, usize)>,
    /// `(pos_lo, pos_hi)` per crossing.
    positions: Vec<(usize, usize)>,
    /// Crossing id at each traversal position.
    at: Vec<usize>,
    /// Position where each segment starts.
    segment_start: Vec<usize>,
}

impl StarSkeleton {
    pub fn new(n: usize) -> Self {
        let segments = 2 * n + 1;
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut crossings = Vec::new();
        let mut positions: Vec<(usize, usize)> = Vec::new();
        let mut at = Vec::new();
        let mut segment_start = Vec::with_capacity(segments);
        for alpha in 0..segments {
            segment_start.push(at.len());
            for x in star_crossing_order(n, alpha).expect("alpha in range") {
                let key = (alpha.min(x), alpha.max(x));
                let pos = at.len();
                let id = *ids.entry(key).or_insert_with(|| {
                    crossings.push(key);
                    positions.push((pos, usize::MAX));
                    crossings.len() - 1
                });
                if positions[id].0 != pos {
                    positions[id].1 = pos;
                }
                at.push(id);
            }
        }
        StarSkeleton { n, crossings, positions, at, segment_start }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn crossings(&self) -> &[(usize, usize)] {
        &self.crossings
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// Traversal position of the first crossing on each segment.
    pub fn segment_start(&self) -> &[usize] {
        &self.segment_start
    }

    /// Crossing ids incident to each segment.
    pub fn crossings_by_segment(&self) -> Vec<Vec<usize>> {
        let mut by = vec![Vec::new(); 2 * self.n + 1];
        for (id, &(lo, hi)) in self.crossings.iter().enumerate() {
            by[lo].push(id);
            by[hi].push(id);
        }
        by
    }

    pub fn sign(&self, crossing: usize, ascending: bool) -> i8 {
        let (lo, hi) = self.crossings[crossing];
        crossing_sign(lo, hi, ascending)
    }

    /// Gauss diagram for a choice of ascending/descending at every crossing.
    ///
    /// For a petal knot the choice comes from the heights; in the star model
    /// it is an independent fair bit per crossing.
    pub fn gauss_diagram(&self, ascending: &[bool]) -> GaussDiagram {
        assert_eq!(ascending.len(), self.len(), "one bit per crossing");
        let endpoints = self
            .at
            .iter()
            .enumerate()
            .map(|(pos, &c)| {
                let first = self.positions[c].0 == pos;
                // Ascending: the under-passage is met first.
                let role = if first == ascending[c] { Role::Under } else { Role::Over };
                Endpoint { crossing: c, role }
            })
            .collect();
        let signs = (0..self.len()).map(|c| self.sign(c, ascending[c])).collect();
        GaussDiagram::new(endpoints, signs).expect("star skeleton yields a valid Gauss diagram")
    }
}
