//! Ratios with limits (member over geometric mean, arithmetic over geometric
//! mean) and residue-class proportions.

use serde::{Deserialize, Serialize};

/// Neumaier's variant of compensated summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
	sum: f64,
	carry: f64,
}

impl CompensatedSum {
	pub fn add(&mut self, x: f64) {
		let t = self.sum + x;
		if self.sum.abs() >= x.abs() {
			self.carry += (self.sum - t) + x;
		} else {
			self.carry += (x - t) + self.sum;
		}
		self.sum = t;
	}

	pub fn value(&self) -> f64 {
		self.sum + self.carry
	}
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitRatio {
	pub n: u64,
	pub member: u64,
	/// `a_n / (a_1 ... a_n)^(1/n)`
	pub vrba: f64,
	/// `((a_1 + ... + a_n) / n) / (a_1 ... a_n)^(1/n)`
	pub hassani: f64,
}

/// Ratios at each checkpoint n (sorted, 1-based) reached by `values`.
pub fn limit_ratios(values: impl Iterator<Item = u64>, checkpoints: &[u64]) -> Vec<LimitRatio> {
	let mut out = Vec::with_capacity(checkpoints.len());
	let mut logs = CompensatedSum::default();
	let mut sum = 0u128;
	let mut cps = checkpoints.iter().copied().peekable();
	for (i, a) in values.enumerate() {
		let n = i as u64 + 1;
		logs.add((a as f64).ln());
		sum += a as u128;
		while cps.peek() == Some(&n) {
			cps.next();
			let mean_log = logs.value() / n as f64;
			out.push(LimitRatio {
				n,
				member: a,
				vrba: ((a as f64).ln() - mean_log).exp(),
				hassani: ((sum as f64 / n as f64).ln() - mean_log).exp(),
			});
		}
		if cps.peek().is_none() {
			break;
		}
	}
	out
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mod3Share {
	pub n: u64,
	/// Shares of members congruent to 1, 2 and 0 mod 3.
	pub one: f64,
	pub two: f64,
	pub zero: f64,
}

pub fn mod3_shares(values: impl Iterator<Item = u64>, checkpoints: &[u64]) -> Vec<Mod3Share> {
	let mut out = Vec::with_capacity(checkpoints.len());
	let mut counts = [0u64; 3];
	let mut cps = checkpoints.iter().copied().peekable();
	for (i, a) in values.enumerate() {
		let n = i as u64 + 1;
		counts[(a % 3) as usize] += 1;
		while cps.peek() == Some(&n) {
			cps.next();
			let f = |c: u64| c as f64 / n as f64;
			out.push(Mod3Share { n, one: f(counts[1]), two: f(counts[2]), zero: f(counts[0]) });
		}
		if cps.peek().is_none() {
			break;
		}
	}
	out
}
