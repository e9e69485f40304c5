//! Power-law fits in log-log space, counting functions and running moments.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `y = a * x^b`, fitted by least squares on `(log10 x, log10 y)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
	pub a: f64,
	pub b: f64,
	/// Coefficient of determination in log space.
	pub r2: f64,
	pub n_points: usize,
	/// Points dropped because x or y was not positive.
	pub dropped: usize,
}

impl PowerLawFit {
	pub fn predict(&self, x: f64) -> f64 {
		self.a * x.powf(self.b)
	}
}

pub fn fit_power_law(points: &[(f64, f64)]) -> Result<PowerLawFit> {
	let logs: Vec<(f64, f64)> = points
		.iter()
		.filter(|(x, y)| *x > 0.0 && *y > 0.0)
		.map(|(x, y)| (x.log10(), y.log10()))
		.collect();
	let dropped = points.len() - logs.len();
	let n = logs.len();
	if n < 2 {
		return Err(Error::Fit(format!("need at least 2 positive points, have {n}")));
	}
	let mx = logs.iter().map(|p| p.0).sum::<f64>() / n as f64;
	let my = logs.iter().map(|p| p.1).sum::<f64>() / n as f64;
	let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
	for &(x, y) in &logs {
		let (dx, dy) = (x - mx, y - my);
		sxx += dx * dx;
		sxy += dx * dy;
		syy += dy * dy;
	}
	if sxx == 0.0 {
		return Err(Error::Fit("all x values are equal".into()));
	}
	let b = sxy / sxx;
	let intercept = my - b * mx;
	let sse: f64 = logs.iter().map(|&(x, y)| (y - intercept - b * x).powi(2)).sum();
	let r2 = if syy == 0.0 { 1.0 } else { 1.0 - sse / syy };
	Ok(PowerLawFit { a: 10f64.powf(intercept), b, r2, n_points: n, dropped })
}

/// Sample points `m` on a logarithmic grid over `[1, x_max]`, deduplicated,
/// always ending at `x_max`.
pub fn log_grid(x_max: u64, per_decade: u32) -> Vec<u64> {
	if x_max == 0 {
		return Vec::new();
	}
	let steps = ((x_max as f64).log10() * per_decade as f64).ceil() as u32;
	let mut grid: Vec<u64> = (0..=steps)
		.map(|j| 10f64.powf(j as f64 / per_decade as f64).round() as u64)
		.filter(|&m| m >= 1 && m <= x_max)
		.collect();
	grid.push(x_max);
	grid.dedup();
	grid
}

/// `(m, #{v <= m})` for `m` on a log grid up to `x_max`; `values` sorted.
pub fn counting_function_of(values: &[u64], x_max: u64, per_decade: u32) -> Vec<(u64, u64)> {
	log_grid(x_max, per_decade)
		.into_iter()
		.map(|m| (m, values.partition_point(|&v| v <= m) as u64))
		.collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Moment {
	pub n: usize,
	pub mean: f64,
	/// Population variance (divides by n).
	pub variance: f64,
}

/// Mean and variance of the first `n` values at `n = step, 2 step, ...`,
/// from exact integer power sums.
pub fn moment_series(values: &[u64], step: usize) -> Result<Vec<Moment>> {
	if step == 0 {
		return Err(Error::Param("moment step must be positive".into()));
	}
	let mut out = Vec::with_capacity(values.len() / step);
	let (mut s1, mut s2) = (0u128, 0u128);
	for (i, &v) in values.iter().enumerate() {
		s1 += v as u128;
		s2 += v as u128 * v as u128;
		let n = i + 1;
		if n % step == 0 {
			let nn = n as u128;
			// n^2 Var = n S2 - S1^2, exact in integers.
			let num = nn * s2 - s1 * s1;
			out.push(Moment {
				n,
				mean: s1 as f64 / n as f64,
				variance: num as f64 / (n as f64 * n as f64),
			});
		}
	}
	Ok(out)
}

/// `(mean, variance)` pairs of a moment series.
pub fn variance_function(series: &[Moment]) -> Vec<(f64, f64)> {
	series.iter().map(|m| (m.mean, m.variance)).collect()
}

#[cfg(test)]
mod tests {
	use super::*;

	#[test]
	fn exact_power_law() {
		let pts: Vec<(f64, f64)> = (1..=10).map(|x| (x as f64, 2.0 * (x as f64).powi(2))).collect();
		let fit = fit_power_law(&pts).unwrap();
		assert!((fit.a - 2.0).abs() < 1e-12 * 2.0);
		assert!((fit.b - 2.0).abs() < 1e-12 * 2.0);
		assert!((fit.r2 - 1.0).abs() < 1e-12);
		assert_eq!(fit.dropped, 0);
	}

	#[test]
	fn drops_and_errors() {
		let fit = fit_power_law(&[(1.0, 1.0), (2.0, 0.0), (4.0, 4.0)]).unwrap();
		assert_eq!((fit.n_points, fit.dropped), (2, 1));
		assert!(fit_power_law(&[(1.0, 1.0)]).is_err());
		assert!(fit_power_law(&[(2.0, 1.0), (2.0, 3.0)]).is_err());
	}

	#[test]
	fn grid_and_counting() {
		let g = log_grid(1000, 1);
		assert_eq!(g, [1, 10, 100, 1000]);
		assert_eq!(*log_grid(1234, 20).last().unwrap(), 1234);
		let cf = counting_function_of(&[1, 7, 11, 17, 18, 26], 26, 10);
		assert_eq!(cf.first(), Some(&(1, 1)));
		assert_eq!(cf.last(), Some(&(26, 6)));
	}

	#[test]
	fn moments() {
		let s = moment_series(&[2, 4, 4, 4, 5, 5, 7, 9], 4).unwrap();
		assert_eq!(s.len(), 2);
		assert_eq!((s[0].mean, s[0].variance), (3.5, 0.75));
		assert_eq!((s[1].mean, s[1].variance), (5.0, 4.0));
		assert!(moment_series(&[1], 0).is_err());
	}
}
