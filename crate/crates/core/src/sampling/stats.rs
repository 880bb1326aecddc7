//! Summary statistics, histograms, and distribution distances.

/// Counts of positive, negative and zero values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Positivity {
    pub pos: u64,
    pub neg: u64,
    pub zero: u64,
}

impl Positivity {
    /// `pos / neg`, undefined without negatives.
    pub fn ratio(&self) -> Option<f64> {
        (self.neg > 0).then(|| self.pos as f64 / self.neg as f64)
    }
}

pub fn positivity_ratio(values: &[i64]) -> Positivity {
    let mut p = Positivity::default();
    for &v in values {
        match v.signum() {
            1 => p.pos += 1,
            -1 => p.neg += 1,
            _ => p.zero += 1,
        }
    }
    p
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    pub positivity: Positivity,
}

impl Summary {
    pub fn of(values: &[i64]) -> Summary {
        let count = values.len();
        let mean = values.iter().map(|&v| v as f64).sum::<f64>() / count.max(1) as f64;
        let ss: f64 = values.iter().map(|&v| (v as f64 - mean).powi(2)).sum();
        let variance = if count > 1 { ss / (count - 1) as f64 } else { 0.0 };
        Summary { count, mean, variance, positivity: positivity_ratio(values) }
    }

    pub fn standard_error(&self) -> f64 {
        (self.variance / self.count as f64).sqrt()
    }
}

/// Fixed-width bins over `[-max, max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub width: f64,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

impl Histogram {
    /// Bin width `2 IQR / N^(1/3)`, symmetric range covering all values.
    pub fn freedman_diaconis(values: &[f64]) -> Histogram {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let max = sorted.iter().fold(0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
        let iqr = if sorted.is_empty() { 0.0 } else { quantile(&sorted, 0.75) - quantile(&sorted, 0.25) };
        let mut width = 2.0 * iqr / (sorted.len().max(1) as f64).cbrt();
        if !(width > 0.0) {
            width = 2.0 * max;
        }
        Histogram::with_width(values, max, width)
    }

    pub fn with_width(values: &[f64], max: f64, width: f64) -> Histogram {
        let bins = ((2.0 * max / width).ceil() as usize).max(1);
        let edges: Vec<f64> = (0..=bins).map(|i| -max + i as f64 * 2.0 * max / bins as f64).collect();
        let mut counts = vec![0; bins];
        for &v in values {
            let i = (((v + max) / (2.0 * max)) * bins as f64).floor() as isize;
            counts[i.clamp(0, bins as isize - 1) as usize] += 1;
        }
        Histogram { width: 2.0 * max / bins as f64, edges, counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(lo, hi, count)` rows.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, u64)> + '_ {
        self.counts.iter().enumerate().map(|(i, &c)| (self.edges[i], self.edges[i + 1], c))
    }
}

/// Sup-norm distance between a discrete law, given as `(value, mass)` atoms,
/// and a continuous distribution function. Both one-sided limits at each
/// atom are compared.
pub fn cdf_distance_atoms(atoms: &[(f64, f64)], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut sorted = atoms.to_vec();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let total: f64 = sorted.iter().map(|a| a.1).sum();
    let mut below = 0.0;
    let mut worst = 0f64;
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i].0;
        let f = cdf(x);
        worst = worst.max((below / total - f).abs());
        while i < sorted.len() && sorted[i].0 == x {
            below += sorted[i].1;
            i += 1;
        }
        worst = worst.max((below / total - f).abs());
    }
    worst
}

/// Kolmogorov distance between the empirical law of `values` and `cdf`.
pub fn cdf_distance(values: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let atoms: Vec<(f64, f64)> = values.iter().map(|&v| (v, 1.0)).collect();
    cdf_distance_atoms(&atoms, cdf)
}
