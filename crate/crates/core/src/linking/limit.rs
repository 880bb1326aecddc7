//! The limiting law of the normalised linking number.

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

/// Limiting density of `lk / 4n`: `pi / cosh^2(2 pi x)`.
pub fn limit_density(x: f64) -> f64 {
    let c = (2.0 * std::f64::consts::PI * x).cosh();
    std::f64::consts::PI / (c * c)
}

/// Limiting distribution function of `lk / 4n`: `(1 + tanh(2 pi x)) / 2`.
pub fn limit_cdf(x: f64) -> f64 {
    0.5 * (1.0 + (2.0 * std::f64::consts::PI * x).tanh())
}

/// Taylor coefficients `c_0..=c_k` of `(z/2) / sin(z/2)`.
fn series(k: usize) -> Vec<Rational> {
    // sin(z/2)/(z/2) = sum_j (-1)^j z^{2j} / (4^j (2j+1)!)
    let mut s = vec![Rational::zero(); k + 1];
    for j in 0..=k / 2 {
        let denom = rational::factorial(2 * j as u64 + 1) * num_bigint::BigInt::from(4).pow(j as u32);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        s[2 * j] = Rational::new(sign.into(), denom);
    }
    // Invert: c * s = 1.
    let mut c = vec![Rational::zero(); k + 1];
    c[0] = Rational::one();
    for i in 1..=k {
        let mut acc = Rational::zero();
        for j in 1..=i {
            acc += &s[j] * &c[i - j];
        }
        c[i] = -acc;
    }
    c
}

/// Limiting moments `Lambda_0..=Lambda_k` of `lk / 2n`.
pub fn limit_lk_moments(k: usize) -> Vec<Rational> {
    series(k)
        .into_iter()
        .enumerate()
        .map(|(i, c)| c * Rational::from_integer(rational::factorial(i as u64)))
        .collect()
}

/// `lim E[(lk / 2n)^k]`.
pub fn limit_lk_moment_2n(k: usize) -> Rational {
    limit_lk_moments(k).pop().expect("nonempty")
}

/// `lim E[(lk / 4n)^k]`, the moments of the density [`limit_density`].
pub fn limit_lk_moment_4n(k: usize) -> Rational {
    limit_lk_moment_2n(k) / Rational::from_integer(num_bigint::BigInt::from(2).pow(k as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_moments() {
        let m = limit_lk_moments(6);
        assert_eq!(m[0], rational::int(1));
        assert!(m[1].is_zero() && m[3].is_zero() && m[5].is_zero());
        assert_eq!(m[2], rational::frac(1, 12));
        assert_eq!(m[4], rational::frac(7, 240));
    }

    #[test]
    fn density_moments_match_series() {
        // Second moment of pi/cosh^2(2 pi x) by the midpoint rule.
        let h = 1e-4;
        let mut m0 = 0.0;
        let mut m2 = 0.0;
        let mut x = -6.0 + h / 2.0;
        while x < 6.0 {
            let f = limit_density(x) * h;
            m0 += f;
            m2 += f * x * x;
            x += h;
        }
        assert!((m0 - 1.0).abs() < 1e-9);
        assert!((m2 - rational::to_f64(&limit_lk_moment_4n(2))).abs() < 1e-9);
    }

    #[test]
    fn cdf_shape() {
        assert_eq!(limit_cdf(0.0), 0.5);
        assert!((limit_cdf(10.0) - 1.0).abs() < 1e-15);
        assert_eq!(limit_density(0.0), std::f64::consts::PI);
    }
}
