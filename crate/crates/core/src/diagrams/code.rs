//! Text interchange format for Gauss diagrams.
//!
//! One diagram per line: tokens `O<id><sign>` or `U<id><sign>` in order from
//! the base point, e.g. `O1+ U2- O3+ U1+ O2- U3+`. Crossing ids run `1..=m`.

use std::fmt;
use std::str::FromStr;

use super::{Endpoint, GaussDiagram, Role};
use crate::{Error, Result};

impl FromStr for GaussDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::GaussCode(format!("bad token {tok:?}"));
            let role = match tok.as_bytes().first() {
                Some(b'O') | Some(b'o') => Role::Over,
                Some(b'U') | Some(b'u') => Role::Under,
                _ => return Err(bad()),
            };
            let sign = match tok.as_bytes().last() {
                Some(b'+') => 1i8,
                Some(b'-') => -1,
                _ => return Err(bad()),
            };
            let id: usize = tok[1..tok.len() - 1].parse().map_err(|_| bad())?;
            if id == 0 {
                return Err(Error::GaussCode("crossing ids start at 1".into()));
            }
            raw.push((id - 1, role, sign));
        }
        if raw.len() % 2 != 0 {
            return Err(Error::GaussCode(format!("odd number of tokens ({})", raw.len())));
        }
        let m = raw.len() / 2;
        let mut signs = vec![0i8; m];
        for &(c, _, sign) in &raw {
            if c >= m {
                return Err(Error::GaussCode(format!("crossing id {} exceeds {m}", c + 1)));
            }
            if signs[c] != 0 && signs[c] != sign {
                return Err(Error::GaussCode(format!("crossing {} has inconsistent signs", c + 1)));
            }
            signs[c] = sign;
        }
        let endpoints = raw.into_iter().map(|(crossing, role, _)| Endpoint { crossing, role }).collect();
        GaussDiagram::new(endpoints, signs)
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.endpoints().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let r = if e.role == Role::Over { 'O' } else { 'U' };
            let s = if self.signs()[e.crossing] > 0 { '+' } else { '-' };
            write!(f, "{r}{}{s}", e.crossing + 1)?;
        }
        Ok(())
    }
}
