//! Index-power comparisons `a_n^(1/(n+k)) > a_{n+1}^(1/(n+k+1))`.

use num_bigint::BigUint;

use super::report::Exception;

/// Relative log difference below which a comparison is redone exactly.
pub const NEAR_TIE: f64 = 1e-12;

/// Exact comparisons are skipped when a power would exceed this many bits.
const EXACT_BIT_CAP: f64 = (1u64 << 24) as f64;

#[derive(Clone, Debug, PartialEq)]
pub struct IndexPowerScan {
	pub shift: i64,
	/// Indices n where the strict decrease fails.
	pub exceptions: Vec<Exception>,
	/// `max_n a_n^(1/(n+k))` and the n attaining it.
	pub maximum: f64,
	pub argmax: u64,
	/// Comparisons settled by exact integer powers.
	pub exact_checks: u64,
	/// Near-ties too large for an exact check, decided in floating point.
	pub unresolved_ties: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Decision {
	Holds,
	Fails,
	Unresolved(bool),
}

/// Decides `(e + 1) log a > e log b` for `e = n + k >= 0`.
fn decide(a: u64, b: u64, e: u64) -> (Decision, bool) {
	let (la, lb) = ((a as f64).ln(), (b as f64).ln());
	let lhs = (e + 1) as f64 * la;
	let rhs = e as f64 * lb;
	let scale = lhs.abs().max(rhs.abs());
	if scale == 0.0 || (lhs - rhs).abs() >= NEAR_TIE * scale {
		return (if lhs > rhs { Decision::Holds } else { Decision::Fails }, false);
	}
	let bits = (e + 1) as f64 * (a as f64).log2().max(1.0);
	if bits > EXACT_BIT_CAP {
		return (Decision::Unresolved(lhs > rhs), false);
	}
	let left = BigUint::from(a).pow((e + 1) as u32);
	let right = BigUint::from(b).pow(e as u32);
	(if left > right { Decision::Holds } else { Decision::Fails }, true)
}

/// Scans consecutive members with exponents `1/(n+k)` against `1/(n+k+1)`,
/// n counted from 1. With `k = -1` the first term is `a_1^(1/0)`, taken as 1
/// when `a_1 = 1`.
pub fn check_index_power(values: impl Iterator<Item = u64>, shift: i64) -> IndexPowerScan {
	assert!(shift >= -1, "index shift must be at least -1");
	let mut scan = IndexPowerScan {
		shift,
		exceptions: Vec::new(),
		maximum: f64::NEG_INFINITY,
		argmax: 0,
		exact_checks: 0,
		unresolved_ties: 0,
	};
	let mut it = values.enumerate().map(|(i, v)| (i as u64 + 1, v));
	let Some((mut n, mut a)) = it.next() else {
		return scan;
	};
	loop {
		let e = n as i64 + shift;
		if e > 0 {
			let r = (a as f64).ln() / e as f64;
			if r > scan.maximum {
				scan.maximum = r;
				scan.argmax = n;
			}
		}
		let Some((m, b)) = it.next() else {
			break;
		};
		let fails = if e == 0 {
			// a^(1/0) with a = 1 is 1, which never exceeds b^1.
			a == 1
		} else {
			let (d, exact) = decide(a, b, e as u64);
			scan.exact_checks += exact as u64;
			match d {
				Decision::Holds => false,
				Decision::Fails => true,
				Decision::Unresolved(holds) => {
					scan.unresolved_ties += 1;
					!holds
				}
			}
		};
		if fails {
			scan.exceptions.push(Exception::at(n, a, format!("next member {b}")));
		}
		n = m;
		a = b;
	}
	scan.maximum = scan.maximum.exp();
	scan
}

#[cfg(test)]
mod tests {
	use super::*;

	const CYCLICS: [u64; 24] = [1, 2, 3, 5, 7, 11, 13, 15, 17, 19, 23, 29, 31, 33, 35, 37, 41, 43, 47, 51, 53, 59, 61, 65];

	#[test]
	fn first_variant_exceptions() {
		let s = check_index_power(CYCLICS.iter().copied(), 0);
		let idx: Vec<u64> = s.exceptions.iter().map(|e| e.index).collect();
		assert_eq!(idx, [1, 2, 3, 5]);
		assert_eq!(s.argmax, 4);
		assert!((s.maximum - 5f64.powf(0.25)).abs() < 1e-15);
	}

	#[test]
	fn shifted_down_variant() {
		let s = check_index_power(CYCLICS.iter().copied(), -1);
		let idx: Vec<u64> = s.exceptions.iter().map(|e| e.index).collect();
		assert_eq!(idx, [1]);
	}

	#[test]
	fn exact_ties() {
		// 4^3 = 8^2: with e = 2 the strict inequality fails exactly.
		let (d, exact) = decide(4, 8, 2);
		assert_eq!(d, Decision::Fails);
		assert!(exact);
		let (d, _) = decide(4, 7, 2);
		assert_eq!(d, Decision::Holds);
	}
}
