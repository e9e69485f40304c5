//! Representations as sums of two members, and runs of members at fixed
//! offsets.

use rayon::prelude::*;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::sequences::IndexedSequence;

/// Largest n for which the full G(n) series is computed by convolution.
pub const GOLDBACH_FFT_CAP: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq)]
pub struct GoldbachScan {
	/// Even numbers `4 <= n <= hi` were searched for a representation.
	pub hi: u64,
	/// `g[n / 2]` = unordered representations of n for even `n <= series_hi`.
	pub g: Vec<u64>,
	pub series_hi: u64,
	/// Even n > 2 without a representation.
	pub failures: Vec<u64>,
}

impl GoldbachScan {
	pub fn representations(&self, n: u64) -> Option<u64> {
		if n % 2 == 1 || n > self.series_hi {
			return None;
		}
		self.g.get((n / 2) as usize).copied()
	}
}

/// `#{(a, b) : a <= b, a + b = n}` for every even `n <= hi`, via one real
/// convolution of the membership indicator.
pub fn representation_counts(seq: &IndexedSequence, hi: u64) -> Vec<u64> {
	let len = (2 * hi + 2).next_power_of_two() as usize;
	let mut buf = vec![Complex::new(0.0f64, 0.0); len];
	for m in seq.iter_range(crate::sequences::Interval::Closed(1, hi)) {
		buf[m as usize].re = 1.0;
	}
	let mut planner = FftPlanner::new();
	planner.plan_fft_forward(len).process(&mut buf);
	for z in buf.iter_mut() {
		*z = *z * *z;
	}
	planner.plan_fft_inverse(len).process(&mut buf);
	let scale = 1.0 / len as f64;
	(0..=hi / 2)
		.map(|h| {
			let n = 2 * h;
			let ordered = (buf[n as usize].re * scale).round() as u64;
			// Ordered pairs count (a, b) and (b, a) separately except a = b = h.
			(ordered + seq.contains(h) as u64) / 2
		})
		.collect()
}

/// Searches every even `4 <= n <= hi` for a representation, and computes the
/// G(n) series up to `min(hi, GOLDBACH_FFT_CAP)`.
pub fn goldbach_scan(seq: &IndexedSequence, hi: u64) -> Result<GoldbachScan> {
	if hi > seq.limit() {
		return Err(Error::InsufficientLimit { have: seq.limit(), need: hi });
	}
	let series_hi = hi.min(GOLDBACH_FFT_CAP);
	let g = representation_counts(seq, series_hi);
	let small: Vec<u64> = seq.iter_range(crate::sequences::Interval::Closed(1, hi / 2)).collect();
	let failures: Vec<u64> = (2..=hi / 2)
		.into_par_iter()
		.map(|h| 2 * h)
		.filter(|&n| !small.iter().take_while(|&&a| 2 * a <= n).any(|&a| seq.contains(n - a)))
		.collect();
	Ok(GoldbachScan { hi, g, series_hi, failures })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TupleScan {
	pub offsets: Vec<u64>,
	pub composite_only: bool,
	/// Bases b with every `b + offset` a member, below the scan bound.
	pub count: u64,
	pub first: Vec<u64>,
	/// `(x, matches with base <= x)` at each requested checkpoint.
	pub counting: Vec<(u64, u64)>,
}

/// Counts bases b such that every `b + offset` is a member (and composite,
/// if requested) with the whole tuple at most `seq.limit()`.
pub fn tuple_scan(
	seq: &IndexedSequence,
	offsets: &[u64],
	composite_only: bool,
	keep_first: usize,
	checkpoints: &[u64],
) -> Result<TupleScan> {
	if offsets.first() != Some(&0) || offsets.windows(2).any(|w| w[0] >= w[1]) {
		return Err(Error::Param("offsets must start at 0 and increase".into()));
	}
	let span = *offsets.last().unwrap();
	let composite = |v: u64| v != 1 && !is_prime(v);
	let mut scan = TupleScan {
		offsets: offsets.to_vec(),
		composite_only,
		count: 0,
		first: Vec::new(),
		counting: Vec::new(),
	};
	let mut cps = checkpoints.iter().copied().peekable();
	let top = seq.limit().saturating_sub(span);
	for b in seq.iter_range(crate::sequences::Interval::Closed(1, top)) {
		while let Some(&x) = cps.peek() {
			if x >= b {
				break;
			}
			scan.counting.push((x, scan.count));
			cps.next();
		}
		// Membership first: the primality test is the expensive part.
		if offsets.iter().all(|&o| seq.contains(b + o))
			&& (!composite_only || offsets.iter().all(|&o| composite(b + o)))
		{
			scan.count += 1;
			if scan.first.len() < keep_first {
				scan.first.push(b);
			}
		}
	}
	for x in cps {
		scan.counting.push((x, scan.count));
	}
	Ok(scan)
}

#[cfg(test)]
mod tests {
	use super::*;
	use std::sync::Arc;

	use crate::sieve::{build_cyclic_bitmap, SieveConfig};

	fn cyclics(limit: u64) -> IndexedSequence {
		IndexedSequence::from_bitmap("cyclic", Arc::new(build_cyclic_bitmap(&SieveConfig::new(limit)).unwrap()))
	}

	#[test]
	fn small_representations() {
		let c = cyclics(10_000);
		let s = goldbach_scan(&c, 10_000).unwrap();
		assert!(s.failures.is_empty());
		// 4 = 1 + 3 = 2 + 2; 6 = 1 + 5 = 3 + 3.
		assert_eq!(s.representations(4), Some(2));
		assert_eq!(s.representations(6), Some(2));
		assert_eq!(s.representations(2), Some(1));
		for n in (2..=400u64).step_by(2) {
			let direct = (1..=n / 2).filter(|&a| c.contains(a) && c.contains(n - a)).count() as u64;
			assert_eq!(s.representations(n), Some(direct), "n = {n}");
		}
	}

	#[test]
	fn tuples() {
		let c = cyclics(1000);
		let t = tuple_scan(&c, &[0, 2, 4], true, 4, &[]).unwrap();
		assert_eq!(t.first, [141, 213, 319, 391]);
		let q = tuple_scan(&c, &[0, 2, 4, 6, 8], false, 5, &[100]).unwrap();
		assert_eq!(q.first, [11, 29, 65, 83, 137]);
		assert_eq!(q.counting, [(100, 4)]);
		let nine: Vec<u64> = (0..9).map(|i| 2 * i).collect();
		assert_eq!(tuple_scan(&c, &nine, false, 1, &[]).unwrap().count, 0);
		assert!(tuple_scan(&c, &[2, 4], false, 1, &[]).is_err());
	}
}
