//! Cyclic quotient singularities of weighted-bundle charts.

use std::fmt;

use num_integer::Integer;

use crate::error::{CoxError, Result};
use crate::galefan::WeightedBundleSpec;

/// The cyclic type `1/r(w_1, ..., w_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientSingularity {
    pub index: u64,
    pub weights: Vec<u64>,
}

impl QuotientSingularity {
    pub fn new(index: u64, weights: Vec<u64>) -> Result<Self> {
        if index == 0 {
            return Err(CoxError::invalid("index must be positive"));
        }
        Ok(QuotientSingularity { index, weights })
    }

    pub fn is_smooth(&self) -> bool {
        normalize_type(self).index == 1
    }

    /// Short verdict used in reports: smooth, terminal, non-terminal or undecided.
    pub fn verdict(&self) -> &'static str {
        if self.is_smooth() {
            "smooth"
        } else {
            match is_terminal_cyclic(self) {
                Ok(true) => "terminal",
                Ok(false) => "non-terminal",
                Err(_) => "undecided",
            }
        }
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        write!(f, "1/{}({})", self.index, w.join(","))
    }
}

/// The type of the chart `U_ij = (x_i y_j != 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartReport {
    pub chart: (usize, usize),
    pub singularity: QuotientSingularity,
}

impl fmt::Display for ChartReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "U({},{}): {} [{}]",
            self.chart.0,
            self.chart.1,
            self.singularity,
            self.singularity.verdict()
        )
    }
}

/// Residues reduced mod the index, common factors with the index removed,
/// weights sorted. Zero slots are kept.
pub fn normalize_type(q: &QuotientSingularity) -> QuotientSingularity {
    let r = q.index.max(1);
    let mut w: Vec<u64> = q.weights.iter().map(|x| x % r).collect();
    let g = w.iter().fold(r, |acc, x| acc.gcd(x));
    let index = r / g;
    for x in w.iter_mut() {
        *x /= g;
    }
    if index == 1 {
        w.iter_mut().for_each(|x| *x = 0);
    }
    w.sort_unstable();
    QuotientSingularity { index, weights: w }
}

/// Reid–Tai criterion for an isolated cyclic quotient singularity; zero
/// slots (trivial factors) are ignored.
pub fn is_terminal_cyclic(q: &QuotientSingularity) -> Result<bool> {
    let q = normalize_type(q);
    let r = q.index;
    if r == 1 {
        return Ok(true);
    }
    let w: Vec<u64> = q.weights.iter().copied().filter(|&x| x != 0).collect();
    if w.iter().any(|x| x.gcd(&r) != 1) {
        return Err(CoxError::Unsupported(format!("{q} is not an isolated singularity")));
    }
    Ok((1..r).all(|j| w.iter().map(|x| (j * x) % r).sum::<u64>() > r))
}

/// One report per chart `(i, j)`, `0 <= i <= n`, `0 <= j <= m`, in row-major order.
pub fn weighted_bundle_charts(spec: &WeightedBundleSpec) -> Result<Vec<ChartReport>> {
    let mut out = Vec::with_capacity((spec.n + 1) * (spec.m + 1));
    for i in 0..=spec.n {
        for j in 0..=spec.m {
            out.push(ChartReport {
                chart: (i, j),
                singularity: fixed_point_type(spec, i, j)?,
            });
        }
    }
    Ok(out)
}

/// Type at the torus-fixed point `x_i = y_j = 1`, others zero: the residual
/// stabiliser is `mu_{a_j}`, trivial on the other `x` and of weight `a_l` on `y_l`.
pub fn fixed_point_type(spec: &WeightedBundleSpec, i: usize, j: usize) -> Result<QuotientSingularity> {
    if i > spec.n || j > spec.m {
        return Err(CoxError::invalid(format!(
            "chart ({i},{j}) out of range for n = {}, m = {}",
            spec.n, spec.m
        )));
    }
    let a = spec.fiber_weights()?;
    let r = a[j] as u64;
    let mut weights = vec![0u64; spec.n];
    weights.extend(
        a.iter()
            .enumerate()
            .filter(|&(l, _)| l != j)
            .map(|(_, &x)| x as u64 % r),
    );
    Ok(normalize_type(&QuotientSingularity { index: r, weights }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(r: u64, w: &[u64]) -> QuotientSingularity {
        QuotientSingularity::new(r, w.to_vec()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_type(&q(2, &[1, 1, 1])), q(2, &[1, 1, 1]));
        assert_eq!(normalize_type(&q(4, &[2, 2, 2])), q(2, &[1, 1, 1]));
        assert_eq!(normalize_type(&q(3, &[1, 4, 2])), q(3, &[1, 1, 2]));
    }

    #[test]
    fn terminality() {
        assert!(is_terminal_cyclic(&q(2, &[1, 1, 1])).unwrap());
        assert!(is_terminal_cyclic(&q(3, &[1, 1, 2])).unwrap());
        assert!(!is_terminal_cyclic(&q(2, &[1, 1])).unwrap());
        assert!(is_terminal_cyclic(&q(4, &[2, 1, 1])).is_err());
        assert!(is_terminal_cyclic(&q(1, &[0, 0])).unwrap());
    }

    #[test]
    fn scroll_is_smooth() {
        let spec = WeightedBundleSpec::new(1, 4, vec![0, 1, 2, 3, 3], vec![1, 1, 1, 1]).unwrap();
        let charts = weighted_bundle_charts(&spec).unwrap();
        assert_eq!(charts.len(), 10);
        assert!(charts.iter().all(|c| c.singularity.is_smooth()));
    }

    #[test]
    fn weighted_fibre_charts() {
        let spec = WeightedBundleSpec::new(1, 4, vec![0, 1, 2, 1, 1], vec![1, 2, 3, 1, 1]).unwrap();
        assert_eq!(fixed_point_type(&spec, 0, 1).unwrap(), q(2, &[0, 1, 1, 1, 1]));
        assert_eq!(fixed_point_type(&spec, 1, 2).unwrap(), q(3, &[0, 1, 1, 1, 2]));
        assert!(fixed_point_type(&spec, 2, 0).is_err());
    }

    #[test]
    fn weighted_projective_space_as_bundle_over_a_point() {
        let spec = WeightedBundleSpec::new(0, 3, vec![0, 0, 0, 0], vec![1, 1, 2]).unwrap();
        assert_eq!(fixed_point_type(&spec, 0, 3).unwrap(), q(2, &[1, 1, 1]));
        let m0 = WeightedBundleSpec::new(2, 0, vec![0], vec![]).unwrap();
        let charts = weighted_bundle_charts(&m0).unwrap();
        assert_eq!(charts.len(), 3);
        assert!(charts.iter().all(|c| c.singularity.is_smooth()));
    }

    #[test]
    fn report_line() {
        let c = ChartReport {
            chart: (0, 2),
            singularity: q(3, &[0, 1, 1, 1, 2]),
        };
        assert_eq!(c.to_string(), "U(0,2): 1/3(0,1,1,1,2) [terminal]");
    }
}
