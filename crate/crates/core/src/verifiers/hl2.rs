//! Subadditivity of a counting function: `C(m + n) <= C(m) + C(n)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::IndexedSequence;

/// Dense `C(x)` for `0 <= x <= hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct CountingTable {
	counts: Vec<u32>,
}

impl CountingTable {
	pub fn new(seq: &IndexedSequence, hi: u64) -> Result<Self> {
		if hi > seq.limit() {
			return Err(Error::InsufficientLimit { have: seq.limit(), need: hi });
		}
		let mut counts = vec![0u32; hi as usize + 1];
		for m in seq.iter_range(crate::sequences::Interval::Closed(1, hi)) {
			counts[m as usize] += 1;
		}
		for x in 1..counts.len() {
			counts[x] += counts[x - 1];
		}
		Ok(CountingTable { counts })
	}

	pub fn hi(&self) -> u64 {
		self.counts.len() as u64 - 1
	}

	pub fn at(&self, x: u64) -> u64 {
		self.counts[x as usize] as u64
	}
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hl2Mode {
	/// Every violating pair.
	Full,
	/// For each sum s, only the violating pair with the least m.
	PerSumFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hl2Violation {
	pub m: u64,
	pub n: u64,
	pub c_sum: u64,
	pub c_m: u64,
	pub c_n: u64,
}

/// Which pairs a scan visits: `lower <= m <= n`, `m <= m_max`, `n <= n_max`
/// and `m + n <= s_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hl2Bounds {
	pub lower: u64,
	pub m_max: u64,
	pub n_max: u64,
	pub s_max: u64,
}

impl Hl2Bounds {
	/// Every pair with `m + n <= s_max`.
	pub fn by_sum(lower: u64, s_max: u64) -> Self {
		Hl2Bounds { lower, m_max: s_max / 2, n_max: s_max.saturating_sub(lower), s_max }
	}

	/// Every pair with `m, n <= bound`.
	pub fn square(lower: u64, bound: u64) -> Self {
		Hl2Bounds { lower, m_max: bound, n_max: bound, s_max: 2 * bound }
	}

	/// Number of pairs the scan visits.
	pub fn pair_count(&self) -> u64 {
		let m_hi = self.m_max.min(self.n_max).min(self.s_max / 2);
		(self.lower..=m_hi).map(|m| (self.n_max.min(self.s_max - m) + 1).saturating_sub(m)).sum()
	}
}

/// Pairs within `bounds` with `C(m + n) > C(m) + C(n)`, ordered by
/// `(m + n, m)`.
pub fn hl2_scan(table: &CountingTable, bounds: Hl2Bounds, mode: Hl2Mode) -> Result<Vec<Hl2Violation>> {
	let Hl2Bounds { lower, m_max, n_max, s_max } = bounds;
	if lower == 0 || m_max < lower || n_max < lower || s_max < 2 * lower {
		return Err(Error::Param(format!("bad bounds {bounds:?}")));
	}
	let m_max = m_max.min(n_max);
	let need = (m_max + n_max).min(s_max);
	if need > table.hi() {
		return Err(Error::InsufficientLimit { have: table.hi(), need });
	}
	let c = |x: u64| table.at(x);
	let per_sum = |s: u64| -> Vec<Hl2Violation> {
		let mut out = Vec::new();
		let m_lo = lower.max(s.saturating_sub(n_max));
		let m_hi = m_max.min(s / 2);
		let cs = c(s);
		for m in m_lo..=m_hi {
			let n = s - m;
			if cs > c(m) + c(n) {
				out.push(Hl2Violation { m, n, c_sum: cs, c_m: c(m), c_n: c(n) });
				if mode == Hl2Mode::PerSumFirst {
					break;
				}
			}
		}
		out
	};
	Ok((2 * lower..=need).into_par_iter().flat_map_iter(per_sum).collect())
}

#[cfg(test)]
mod tests {
	use super::*;

	fn brute(values: &[u64], hi: u64, lower: u64, bound: u64) -> Vec<(u64, u64)> {
		let c = |x: u64| values.iter().filter(|&&v| v <= x).count();
		let mut out = Vec::new();
		for s in 2 * lower..=2 * bound {
			for m in lower..=s / 2 {
				let n = s - m;
				if n <= bound && n <= hi && c(s) > c(m) + c(n) {
					out.push((m, n));
				}
			}
		}
		out
	}

	#[test]
	fn matches_brute_force() {
		let values: Vec<u64> = vec![1, 2, 3, 5, 7, 11, 13, 15, 17, 19, 23, 29, 31, 33, 35, 37, 41, 43, 47];
		let seq = IndexedSequence::from_sorted("s", 50, values.clone()).unwrap();
		let t = CountingTable::new(&seq, 50).unwrap();
		let square = Hl2Bounds::square(1, 25);
		let got: Vec<(u64, u64)> =
			hl2_scan(&t, square, Hl2Mode::Full).unwrap().iter().map(|v| (v.m, v.n)).collect();
		assert_eq!(got, brute(&values, 50, 1, 25));
		let first = hl2_scan(&t, square, Hl2Mode::PerSumFirst).unwrap();
		let sums: Vec<u64> = first.iter().map(|v| v.m + v.n).collect();
		let mut distinct: Vec<u64> = got.iter().map(|(m, n)| m + n).collect();
		distinct.dedup();
		assert_eq!(sums, distinct);
		assert!(hl2_scan(&t, Hl2Bounds::square(1, 30), Hl2Mode::Full).is_err());
		assert_eq!(Hl2Bounds::square(1, 3).pair_count(), 6);
		// By sum: (1,1) (1,2) (1,3) (2,2) with m + n <= 4.
		assert_eq!(Hl2Bounds::by_sum(1, 4).pair_count(), 4);
		let by_sum = hl2_scan(&t, Hl2Bounds::by_sum(1, 50), Hl2Mode::Full).unwrap();
		assert!(by_sum.iter().all(|v| v.m + v.n <= 50 && v.m <= v.n));
		let expect: Vec<(u64, u64)> = brute(&values, 50, 1, 49).into_iter().filter(|(m, n)| m + n <= 50).collect();
		assert_eq!(by_sum.iter().map(|v| (v.m, v.n)).collect::<Vec<_>>(), expect);
	}
}
