//! Linking numbers of two-component petal links.
//!
//! Sweeping the heights of a link from bottom to top and stepping
//! horizontally for the first component and vertically for the second gives
//! a closed lattice walk whose signed area is minus the linking number.

mod dp;
mod limit;

use std::fmt;
use std::str::FromStr;

pub use dp::{exact_lk_distribution, multinomial4, z_table, AreaDistribution};
pub use limit::{limit_cdf, limit_density, limit_lk_moment_2n, limit_lk_moment_4n, limit_lk_moments};

use crate::diagrams::PetalLink;
use crate::{Error, Result};

/// Heights and signs of the strands of a petal link.
///
/// Heights are `0..4n`. Strand `i` has sign `(-1)^i`; strands `0..2n` form
/// the first component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkStrandData {
    /// `sign[h]` is the sign of the strand at height `h`.
    pub sign: Vec<i8>,
    /// `in_x[h]` holds when height `h` belongs to the first component.
    pub in_x: Vec<bool>,
}

impl LinkStrandData {
    pub fn new(link: &PetalLink) -> Self {
        let perm = link.perm().values();
        let half = perm.len() / 2;
        let mut sign = vec![0; perm.len()];
        let mut in_x = vec![false; perm.len()];
        for (i, &h) in perm.iter().enumerate() {
            sign[h] = if i % 2 == 0 { 1 } else { -1 };
            in_x[h] = i < half;
        }
        LinkStrandData { sign, in_x }
    }

    pub fn x_heights(&self) -> Vec<usize> {
        (0..self.in_x.len()).filter(|&h| self.in_x[h]).collect()
    }

    pub fn y_heights(&self) -> Vec<usize> {
        (0..self.in_x.len()).filter(|&h| !self.in_x[h]).collect()
    }
}

/// `sum S(x) S(y)` over `x` in the first component and `y` in the second
/// with `x > y`.
pub fn linking_number(link: &PetalLink) -> i64 {
    let data = LinkStrandData::new(link);
    let mut below_y = 0i64;
    let mut lk = 0i64;
    for (h, &s) in data.sign.iter().enumerate() {
        if data.in_x[h] {
            lk += s as i64 * below_y;
        } else {
            below_y += s as i64;
        }
    }
    lk
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Left,
    Up,
    Down,
}

impl Step {
    fn delta(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Left => (-1, 0),
            Step::Up => (0, 1),
            Step::Down => (0, -1),
        }
    }
}

/// A walk on the integer lattice starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticeWalk {
    pub steps: Vec<Step>,
}

impl LatticeWalk {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticeWalk { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> (i64, i64) {
        self.steps.iter().fold((0, 0), |(x, y), s| {
            let (dx, dy) = s.delta();
            (x + dx, y + dy)
        })
    }

    pub fn is_closed(&self) -> bool {
        self.end() == (0, 0)
    }

    /// The walk reflected in the x-axis.
    pub fn reflect_y(&self) -> LatticeWalk {
        let steps = self
            .steps
            .iter()
            .map(|&s| match s {
                Step::Up => Step::Down,
                Step::Down => Step::Up,
                s => s,
            })
            .collect();
        LatticeWalk { steps }
    }
}

/// `-sum y dx` along the walk; for a closed walk, the sum of winding numbers
/// over all unit squares.
pub fn area(w: &LatticeWalk) -> i64 {
    let mut y = 0i64;
    let mut a = 0i64;
    for s in &w.steps {
        let (dx, dy) = s.delta();
        a -= y * dx;
        y += dy;
    }
    a
}

/// The walk of a link: for heights in increasing order, a horizontal step of
/// the strand's sign for the first component, a vertical one for the second.
pub fn walk_from(link: &PetalLink) -> LatticeWalk {
    let data = LinkStrandData::new(link);
    let steps = data
        .sign
        .iter()
        .zip(&data.in_x)
        .map(|(&s, &x)| match (x, s > 0) {
            (true, true) => Step::Right,
            (true, false) => Step::Left,
            (false, true) => Step::Up,
            (false, false) => Step::Down,
        })
        .collect();
    LatticeWalk { steps }
}

impl FromStr for LatticeWalk {
    type Err = Error;

    /// Letters `R`, `L`, `U`, `D`; whitespace and commas are ignored.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c.to_ascii_uppercase() {
                'R' => Ok(Step::Right),
                'L' => Ok(Step::Left),
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                _ => Err(Error::InvalidSize(format!("bad walk step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticeWalk::new)
    }
}

impl fmt::Display for LatticeWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let c = match s {
                Step::Right => 'R',
                Step::Left => 'L',
                Step::Up => 'U',
                Step::Down => 'D',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Permutation;

    fn walk(s: &str) -> LatticeWalk {
        s.parse().unwrap()
    }

    #[test]
    fn unit_square_areas() {
        assert_eq!(area(&walk("RULD")), 1);
        assert_eq!(area(&walk("URDL")), -1);
        assert_eq!(area(&walk("RLUD")), 0);
        assert_eq!(area(&walk("UURR")), -4);
        assert_eq!(area(&walk("RULD").reflect_y()), -1);
        assert_eq!(walk("RULD").to_string(), "RULD");
        assert!("RX".parse::<LatticeWalk>().is_err());
    }

    #[test]
    fn identity_link_is_unlinked() {
        for n in 1..6 {
            let l = PetalLink::new(Permutation::identity(4 * n)).unwrap();
            assert_eq!(linking_number(&l), 0);
            assert!(walk_from(&l).is_closed());
            assert_eq!(area(&walk_from(&l)), 0);
        }
    }

    #[test]
    fn strand_data_is_balanced() {
        let l = PetalLink::new(Permutation::new(vec![3, 6, 0, 5, 7, 1, 2, 4]).unwrap()).unwrap();
        let d = LinkStrandData::new(&l);
        assert_eq!(d.x_heights(), vec![0, 3, 5, 6]);
        let sx: i64 = d.x_heights().iter().map(|&h| d.sign[h] as i64).sum();
        let sy: i64 = d.y_heights().iter().map(|&h| d.sign[h] as i64).sum();
        assert_eq!((sx, sy), (0, 0));
    }
}
