//! Bounds on consecutive differences `a_{n+1} - a_n`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::isqrt;
use crate::error::{Error, Result};

use super::report::Exception;

/// A rational in lowest terms is not required; `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
	pub num: u64,
	pub den: u64,
}

impl Ratio {
	pub fn new(num: u64, den: u64) -> Result<Self> {
		if den == 0 || num == 0 {
			return Err(Error::Param(format!("ratio {num}/{den} must be positive")));
		}
		Ok(Ratio { num, den })
	}

	/// Parses `p/q` or a decimal such as `0.25`.
	pub fn parse(s: &str) -> Result<Self> {
		let bad = || Error::Param(format!("cannot parse `{s}` as a ratio"));
		if let Some((p, q)) = s.split_once('/') {
			return Ratio::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
		}
		let (int, frac) = s.trim().split_once('.').unwrap_or((s.trim(), ""));
		if frac.len() > 12 {
			return Err(bad());
		}
		let den = 10u64.pow(frac.len() as u32);
		let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
		let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
		Ratio::new(int * den + frac, den)
	}

	pub fn value(self) -> f64 {
		self.num as f64 / self.den as f64
	}
}

impl std::fmt::Display for Ratio {
	fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
		write!(f, "{}/{}", self.num, self.den)
	}
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GapBoundSpec {
	/// `gap <= sqrt(a)`
	SqrtAtMost,
	/// `gap <= (log a)^2`
	LogSquaredAtMost,
	/// `gap <= 2 log a`
	TwoLogAtMost,
	/// `gap < sqrt(a) + k`
	SqrtPlusK(i64),
	/// `gap < (22/25) sqrt(a) log a`, only claimed for `a > 3`
	Carneiro,
	/// `sqrt(b) - sqrt(a) < eps`
	DeltaSqrt(Ratio),
}

impl GapBoundSpec {
	/// True when the pair `(a, b)` with `a < b` satisfies the bound. Integer
	/// arithmetic wherever the bound is algebraic.
	pub fn holds(self, a: u64, b: u64) -> bool {
		let gap = b - a;
		match self {
			GapBoundSpec::SqrtAtMost => (gap as u128) * (gap as u128) <= a as u128,
			GapBoundSpec::LogSquaredAtMost => {
				let l = (a as f64).ln();
				(gap as f64) <= l * l
			}
			GapBoundSpec::TwoLogAtMost => (gap as f64) <= 2.0 * (a as f64).ln(),
			GapBoundSpec::SqrtPlusK(k) => {
				let d = gap as i128 - k as i128;
				d <= 0 || d * d < a as i128
			}
			GapBoundSpec::Carneiro => {
				let a = a as f64;
				(gap as f64) < 22.0 / 25.0 * a.sqrt() * a.ln()
			}
			GapBoundSpec::DeltaSqrt(eps) => {
				// q sqrt(b) < q sqrt(a) + p  <=>  q^2 (b - a) - p^2 < 2 p q sqrt(a)
				let (p, q) = (eps.num as i128, eps.den as i128);
				let lhs = q * q * gap as i128 - p * p;
				lhs < 0 || lhs * lhs < 4 * p * p * q * q * a as i128
			}
		}
	}

	/// Whether the statement applies to the pair starting at `a`.
	pub fn applies(self, a: u64) -> bool {
		match self {
			GapBoundSpec::Carneiro => a > 3,
			_ => true,
		}
	}
}

/// Every index n (1-based) where `(a_n, a_{n+1})` violates the bound.
pub fn gap_violations(values: impl Iterator<Item = u64>, bound: GapBoundSpec) -> Vec<Exception> {
	let mut out = Vec::new();
	let mut it = values;
	let Some(mut a) = it.next() else {
		return out;
	};
	for (i, b) in it.enumerate() {
		if bound.applies(a) && !bound.holds(a, b) {
			out.push(Exception::at(i as u64 + 1, a, format!("next member {b}, gap {}", b - a)));
		}
		a = b;
	}
	out
}

/// For `gap < sqrt(a) + k`, the last violating index for each k in `ks`
/// (0 when there is none), in one pass.
pub fn sqrt_plus_k_thresholds(values: impl Iterator<Item = u64>, ks: &[i64]) -> BTreeMap<i64, u64> {
	let kmin = ks.iter().copied().min().unwrap_or(0);
	let mut last: BTreeMap<i64, u64> = ks.iter().map(|&k| (k, 0)).collect();
	let mut it = values;
	let Some(mut a) = it.next() else {
		return last;
	};
	for (i, b) in it.enumerate() {
		// Violated exactly for k <= gap - ceil(sqrt(a)).
		let r = isqrt(a);
		let ceil = if r * r == a { r } else { r + 1 };
		let worst = (b - a) as i64 - ceil as i64;
		if worst >= kmin {
			for (&k, n) in last.iter_mut() {
				if k <= worst {
					*n = i as u64 + 1;
				}
			}
		}
		a = b;
	}
	last
}

/// `b^t - a^t` for consecutive members, as `(n, value)`.
pub fn power_differences(values: impl Iterator<Item = u64>, t: f64) -> Vec<(u64, f64)> {
	let mut out = Vec::new();
	let mut it = values;
	let Some(mut a) = it.next() else {
		return out;
	};
	for (i, b) in it.enumerate() {
		out.push((i as u64 + 1, (b as f64).powf(t) - (a as f64).powf(t)));
		a = b;
	}
	out
}
