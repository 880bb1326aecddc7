use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// A polynomial with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// From integer coefficients (lowest degree first) over a common denominator.
    pub fn from_ints(coeffs: &[i64], denominator: i64) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rational::frac(c, denominator)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rational::int(x))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}", rational::to_string(c))?;
            match i {
                0 => {}
                1 => f.write_str(" n")?,
                _ => write!(f, " n^{i}")?,
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree below `points.len()` through the points.
pub fn interpolate_polynomial(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::DuplicateAbscissa(rational::to_string(x)));
        }
    }
    let mut total = vec![Rational::zero(); points.len()];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Basis polynomial prod_{j != i} (x - xj) / (xi - xj).
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (k, b) in basis.into_iter().enumerate() {
            total[k] += b * &scale;
        }
    }
    Ok(Polynomial::new(total))
}

/// Reference moment polynomials in `n`.
#[derive(Debug, Clone)]
pub struct PaperPolynomials {
    pub c2_mean: Polynomial,
    pub c2_second: Polynomial,
    pub c2_third: Polynomial,
    pub v3_second: Polynomial,
    pub star_c2_mean: Polynomial,
    pub star_c2_variance: Polynomial,
}

pub fn paper_polynomials() -> PaperPolynomials {
    PaperPolynomials {
        c2_mean: Polynomial::from_ints(&[0, -1, 1], 24),
        c2_second: Polynomial::from_ints(&[0, -2, -3, -2, 7], 960),
        c2_third: Polynomial::from_ints(&[0, -1512, -914, 3465, -3125, -3033, 5119], 2419200),
        v3_second: Polynomial::from_ints(&[0, -1794, -1433, 2175, -7145, -1101, 9298], 5443200),
        star_c2_mean: Polynomial::from_ints(&[0, -1, 0, 1], 12),
        star_c2_variance: Polynomial::from_ints(&[0, -1, -2, 1, 2], 48),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, Rational)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|(x, y)| (rational::int(*x), y.clone())).collect()
    }

    #[test]
    fn recovers_mean_polynomial() {
        let p = paper_polynomials().c2_mean;
        let data = pts(&(0..3).map(|n| (n, p.eval_int(n))).collect::<Vec<_>>());
        assert_eq!(interpolate_polynomial(&data).unwrap(), p);
        assert_eq!(p.eval_int(2), rational::frac(1, 12));
    }

    #[test]
    fn constants_and_duplicates() {
        let c = interpolate_polynomial(&pts(&[(1, rational::int(5)), (4, rational::int(5))])).unwrap();
        assert_eq!(c.degree(), Some(0));
        let dup = pts(&[(1, rational::int(1)), (1, rational::int(2))]);
        assert!(matches!(interpolate_polynomial(&dup), Err(Error::DuplicateAbscissa(_))));
        assert_eq!(interpolate_polynomial(&[]).unwrap().degree(), None);
    }

    #[test]
    fn reference_values() {
        let p = paper_polynomials();
        assert!(p.c2_third.eval_int(1).is_zero());
        assert!(p.v3_second.eval_int(1).is_zero());
        assert_eq!(p.star_c2_mean.eval_int(2), rational::frac(1, 2));
        assert_eq!(p.c2_second.leading(), rational::frac(7, 960));
        assert_eq!(p.c2_mean.to_string(), "1/24 n^2 + -1/24 n");
    }
}
