//! Member counts between successive powers (or squares of members), and the
//! existence checks built on them. Every interval here is open.

use crate::error::{Error, Result};
use crate::sequences::{IndexedSequence, Interval};

use super::report::{Allowed, ConjectureReport, Exception, ScanRange, Series};

#[derive(Clone, Copy)]
pub enum Boundary<'a> {
	Squares,
	Cubes,
	Quartics,
	/// `b(n) = s_n^2` for the members `s_n` of a sequence.
	MemberSquares(&'a IndexedSequence),
}

impl Boundary<'_> {
	pub fn at(&self, n: u64) -> Result<u64> {
		let v = match self {
			Boundary::Squares => n.checked_mul(n),
			Boundary::Cubes => n.checked_pow(3),
			Boundary::Quartics => n.checked_pow(4),
			Boundary::MemberSquares(s) => {
				let m = s.nth(n)?;
				m.checked_mul(m)
			}
		};
		v.ok_or_else(|| Error::Domain(format!("boundary overflows at n = {n}")))
	}

	/// Largest n with `b(n+1) <= limit`, so that the closing boundary itself
	/// lies inside the sieved range.
	pub fn max_index(&self, limit: u64) -> u64 {
		let fits = |n: u64| self.at(n + 1).is_ok_and(|b| b <= limit);
		if !fits(1) {
			return 0;
		}
		let (mut lo, mut hi) = (1u64, 2u64);
		while fits(hi) {
			lo = hi;
			hi *= 2;
		}
		while hi - lo > 1 {
			let mid = lo + (hi - lo) / 2;
			if fits(mid) {
				lo = mid;
			} else {
				hi = mid;
			}
		}
		lo
	}
}

/// `counts[n-1]` = members of `seq` in `(b(n), b(n+1))` for `n = 1..=n_max`.
/// With `pair_gap`, counts consecutive member pairs `(a, a + gap)` with both
/// ends inside the interval instead.
pub fn interval_counts(
	seq: &IndexedSequence,
	boundary: Boundary<'_>,
	pair_gap: Option<u64>,
	n_max: u64,
) -> Result<Vec<u64>> {
	let bounds: Vec<u64> = (1..=n_max + 1).map(|n| boundary.at(n)).collect::<Result<_>>()?;
	let top = bounds[n_max as usize];
	if top - 1 > seq.limit() {
		return Err(Error::InsufficientLimit { have: seq.limit(), need: top - 1 });
	}
	let Some(gap) = pair_gap else {
		return Ok(bounds
			.windows(2)
			.map(|w| seq.count_in(Interval::Open(w[0], w[1])))
			.collect());
	};
	let mut counts = vec![0u64; n_max as usize];
	let mut it = seq.iter_from(bounds[0] + 1).take_while(|&m| m < top);
	let Some(mut prev) = it.next() else {
		return Ok(counts);
	};
	let mut n = 0usize;
	for m in it {
		if m - prev == gap {
			while bounds[n + 1] <= prev {
				n += 1;
			}
			if bounds[n] < prev && m < bounds[n + 1] {
				counts[n] += 1;
			}
		}
		prev = m;
	}
	Ok(counts)
}

/// Counts of members in `[n^2 - n, n^2]` and `[n^2, n^2 + n]` for
/// `n = 2..=n_max`, evaluated as open intervals (the endpoints are never
/// members except `n^2 - n = 2`, which the open form excludes).
pub fn oppermann_counts(seq: &IndexedSequence, n_max: u64) -> Result<Vec<(u64, u64)>> {
	let need = n_max * n_max + n_max - 1;
	if need > seq.limit() {
		return Err(Error::InsufficientLimit { have: seq.limit(), need });
	}
	Ok((2..=n_max)
		.map(|n| {
			let sq = n * n;
			(seq.count_in(Interval::Open(sq - n, sq)), seq.count_in(Interval::Open(sq, sq + n)))
		})
		.collect())
}

/// Largest n with `n^2 + n <= limit`.
pub fn oppermann_max_index(limit: u64) -> u64 {
	let mut n = crate::arith::isqrt(limit);
	while n > 0 && n * n + n > limit {
		n -= 1;
	}
	n
}

/// Report listing every index whose count is below `required`.
pub fn existence_report(
	id: &str,
	title: &str,
	counts: &[u64],
	first_index: u64,
	required: u64,
	allowed: &Allowed,
) -> ConjectureReport {
	let hi = first_index + counts.len() as u64 - 1;
	let mut report = ConjectureReport::new(id, title, ScanRange { what: "n".into(), lo: first_index, hi });
	let found = counts
		.iter()
		.enumerate()
		.filter(|(_, &c)| c < required)
		.map(|(i, &c)| Exception::at(first_index + i as u64, c, format!("only {c} in interval")))
		.collect();
	report.judge(found, allowed);
	let mut series = Series::new(&["n", "count"]);
	for (i, &c) in counts.iter().enumerate() {
		series.push(vec![(first_index + i as u64) as f64, c as f64]);
	}
	report.stats.insert("counts".into(), series);
	if let Some(min) = counts.iter().min() {
		report.values.insert("min_count".into(), *min as f64);
	}
	report
}

/// Members in `(n^2, (n+1)^2)` for every n whose interval fits the sequence;
/// exceptions where fewer than `required` occur.
pub fn existence_in_squares(
	seq: &IndexedSequence,
	required: u64,
	n_max: Option<u64>,
) -> Result<ConjectureReport> {
	let n_max = n_max.unwrap_or_else(|| Boundary::Squares.max_index(seq.limit()));
	let counts = interval_counts(seq, Boundary::Squares, None, n_max)?;
	Ok(existence_report(
		"existence_in_squares",
		"members between successive squares",
		&counts,
		1,
		required,
		&Allowed::None,
	))
}

/// Near-square members in `(m^power, (m+1)^power)`; exceptions where fewer
/// than `min_required` occur.
pub fn near_square_intervals(
	near_squares: &IndexedSequence,
	power: u32,
	min_required: u64,
	m_max: Option<u64>,
) -> Result<ConjectureReport> {
	let boundary = match power {
		3 => Boundary::Cubes,
		4 => Boundary::Quartics,
		_ => return Err(Error::Param(format!("power must be 3 or 4, got {power}"))),
	};
	let m_max = m_max.unwrap_or_else(|| boundary.max_index(near_squares.limit()));
	let counts = interval_counts(near_squares, boundary, None, m_max)?;
	Ok(existence_report(
		"near_square_intervals",
		"near-square members between successive powers",
		&counts,
		1,
		min_required,
		&Allowed::None,
	))
}

#[cfg(test)]
mod tests {
	use super::*;
	use std::sync::Arc;

	use crate::sieve::{build_cyclic_bitmap, build_prime_bitmap, SieveConfig};

	fn seqs(limit: u64) -> (IndexedSequence, IndexedSequence) {
		let c = build_cyclic_bitmap(&SieveConfig::new(limit)).unwrap();
		let p = build_prime_bitmap(&SieveConfig::new(limit)).unwrap();
		(IndexedSequence::from_bitmap("cyclic", Arc::new(c)), IndexedSequence::from_bitmap("prime", Arc::new(p)))
	}

	#[test]
	fn square_counts() {
		let (c, p) = seqs(10_000);
		assert_eq!(interval_counts(&p, Boundary::Squares, None, 6).unwrap()[5], 4);
		assert_eq!(interval_counts(&c, Boundary::Squares, None, 7).unwrap(), [2, 2, 3, 3, 4, 4, 4]);
		let member_sq = interval_counts(&c, Boundary::MemberSquares(&c), None, 3).unwrap();
		assert_eq!(member_sq[2], 6);
	}

	#[test]
	fn consecutive_pairs_only() {
		let (_, p) = seqs(1000);
		// In (1, 8) the primes 3 and 7 differ by 4 but 5 sits between them.
		let cousins = interval_counts(&p, Boundary::Squares, Some(4), 4).unwrap();
		assert_eq!(cousins, [0, 0, 0, 1]);
		assert_eq!(interval_counts(&p, Boundary::Cubes, Some(4), 1).unwrap(), [0]);
		assert_eq!(interval_counts(&p, Boundary::Cubes, Some(2), 1).unwrap(), [2]);
	}

	#[test]
	fn limits_and_indices() {
		assert_eq!(Boundary::Squares.max_index(99_999_999), 9998);
		assert_eq!(Boundary::Squares.max_index(9_999_999), 3161);
		assert_eq!(Boundary::Cubes.max_index(9_999_999), 214);
		let (c, _) = seqs(100);
		assert!(matches!(
			interval_counts(&c, Boundary::Squares, None, 10),
			Err(Error::InsufficientLimit { .. })
		));
	}
}
