//! Grid diagrams: `m` vertical and `m` horizontal edges, vertical always on top.

use super::{Endpoint, GaussDiagram, PetalKnot, Permutation, Role};
use crate::{Error, Result};

/// Corners `(sigma(i), pi(i)) -> (sigma(i), pi(i+1)) -> (sigma(i+1), pi(i+1))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    sigma: Permutation,
    pi: Permutation,
}

impl GridDiagram {
    pub fn new(sigma: Permutation, pi: Permutation) -> Result<Self> {
        if sigma.len() != pi.len() {
            return Err(Error::InvalidSize(format!(
                "grid permutations differ in length: {} vs {}",
                sigma.len(),
                pi.len()
            )));
        }
        if sigma.len() < 2 {
            return Err(Error::InvalidSize("a grid diagram needs m >= 2".into()));
        }
        Ok(GridDiagram { sigma, pi })
    }

    pub fn m(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    /// Traversal-ordered edges as `(start, end)` corner pairs, starting at
    /// `(sigma(0), pi(0))`: vertical 0, horizontal 1, vertical 1, ..., horizontal 0.
    pub fn edges(&self) -> Vec<((i64, i64), (i64, i64))> {
        let m = self.m();
        let s = |i: usize| self.sigma[i % m] as i64;
        let p = |i: usize| self.pi[i % m] as i64;
        let mut out = Vec::with_capacity(2 * m);
        for i in 0..m {
            out.push(((s(i), p(i)), (s(i), p(i + 1))));
            out.push(((s(i), p(i + 1)), (s(i + 1), p(i + 1))));
        }
        out
    }

    pub fn gauss_diagram(&self) -> GaussDiagram {
        grid_gauss_diagram(self)
    }
}

/// The grid diagram of the same knot: `sigma(k) = n*k mod 2n+1`, same heights.
pub fn petal_to_grid(k: &PetalKnot) -> GridDiagram {
    let m = k.petals();
    let n = k.n();
    let sigma = Permutation::new((0..m).map(|i| (n * i) % m).collect()).expect("n is a unit mod 2n+1");
    // For n = 0 the grid would have one corner; pad to the trivial 2-grid unknot.
    if m < 2 {
        return GridDiagram { sigma: Permutation::identity(2), pi: Permutation::identity(2) };
    }
    GridDiagram { sigma, pi: k.perm().clone() }
}

struct Passage {
    edge: usize,
    /// Distance from the edge's start corner.
    offset: i64,
    crossing: usize,
    role: Role,
}

/// Gauss diagram of a grid diagram, based at corner `(sigma(0), pi(0))`.
pub fn grid_gauss_diagram(g: &GridDiagram) -> GaussDiagram {
    let edges = g.edges();
    let mut passages = Vec::new();
    let mut signs = Vec::new();
    let between = |v: i64, a: i64, b: i64| a.min(b) < v && v < a.max(b);
    for (ve, &((x, y0), (_, y1))) in edges.iter().enumerate().step_by(2) {
        for (he, &((x0, y), (x1, _))) in edges.iter().enumerate().skip(1).step_by(2) {
            if !(between(x, x0, x1) && between(y, y0, y1)) {
                continue;
            }
            let id = signs.len();
            // Vertical is over; the sign is det(over, under) = -dx*dy.
            let dy = (y1 - y0).signum();
            let dx = (x1 - x0).signum();
            signs.push((-dx * dy) as i8);
            passages.push(Passage { edge: ve, offset: (y - y0).abs(), crossing: id, role: Role::Over });
            passages.push(Passage { edge: he, offset: (x - x0).abs(), crossing: id, role: Role::Under });
        }
    }
    passages.sort_by_key(|p| (p.edge, p.offset));
    // Renumber crossings by first appearance.
    let mut relabel = vec![usize::MAX; signs.len()];
    let mut new_signs = Vec::with_capacity(signs.len());
    let endpoints = passages
        .iter()
        .map(|p| {
            if relabel[p.crossing] == usize::MAX {
                relabel[p.crossing] = new_signs.len();
                new_signs.push(signs[p.crossing]);
            }
            Endpoint { crossing: relabel[p.crossing], role: p.role }
        })
        .collect();
    GaussDiagram::new(endpoints, new_signs).expect("grid yields a valid Gauss diagram")
}
