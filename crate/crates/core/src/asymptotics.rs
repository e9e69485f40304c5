//! Closed-form approximations for cyclic and prime counts, evaluated in
//! binary64 with explicit domain guards on the iterated logarithms.

use crate::error::{Error, Result};
use crate::sieve::base_primes;

pub const GAMMA: f64 = 0.577_215_664_901_532_9;
pub const E_GAMMA: f64 = 1.781_072_417_990_198;
pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000;

/// `log log log x`, defined for `x > e`.
pub fn lll(x: f64) -> Result<f64> {
	let ll = x.ln().ln();
	if !(x > std::f64::consts::E) || !ll.is_finite() || ll <= 0.0 {
		return Err(Error::Domain(format!("logloglog undefined at {x}")));
	}
	Ok(ll.ln())
}

/// `log log log log x`, defined for `x > e^e`.
pub fn llll(x: f64) -> Result<f64> {
	let l3 = lll(x)?;
	if l3 <= 0.0 {
		return Err(Error::Domain(format!("loglogloglog undefined at {x}")));
	}
	Ok(l3.ln())
}

fn positive_lll(x: f64) -> Result<f64> {
	let l = lll(x)?;
	if l <= 0.0 {
		return Err(Error::Domain(format!("logloglog {x} = {l} is not positive")));
	}
	Ok(l)
}

/// `x / (e^gamma L) * (1 - gamma / L)` with `L = logloglog(arg)`.
fn two_term(scale: f64, arg: f64) -> Result<f64> {
	let l = positive_lll(arg)?;
	Ok(scale / (E_GAMMA * l) * (1.0 - GAMMA / l))
}

pub fn erdos_count(x: f64) -> Result<f64> {
	let l = positive_lll(x)?;
	Ok(x / (E_GAMMA * l))
}

pub fn pollack_count(x: f64) -> Result<f64> {
	two_term(x, x)
}

/// Estimate of the n-th cyclic number; `refined` adds the `+ gamma` term.
pub fn cn_estimate(n: f64, refined: bool) -> Result<f64> {
	let l = positive_lll(n)?;
	let l = if refined { l + GAMMA } else { l };
	Ok(E_GAMMA * n * l)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SumKind {
	/// Sum of `c_j^k` for `j <= n`.
	ByIndex(f64),
	/// Sum of `c^k` over cyclics `c <= x`.
	ByBound(f64),
}

pub fn sum_powers_estimate(kind: SumKind, k: u32) -> Result<f64> {
	if k == 0 {
		return Err(Error::Domain("power must be positive".into()));
	}
	let k1 = (k + 1) as f64;
	match kind {
		SumKind::ByIndex(n) => {
			let l = positive_lll(n)?;
			Ok(n.powi(k as i32 + 1) * (k as f64 * GAMMA).exp() * l.powi(k as i32) / k1)
		}
		SumKind::ByBound(x) => two_term(x.powi(k as i32 + 1) / k1, x),
	}
}

/// Expected primes between `n^2` and `(n+1)^2`.
pub fn deligne_square_interval(n: f64) -> Result<f64> {
	if !(n > 1.0) {
		return Err(Error::Domain(format!("n = {n} must exceed 1")));
	}
	Ok(n / n.ln())
}

/// Expected cyclics between `n^2` and `(n+1)^2`.
pub fn cyclic_square_interval(n: f64) -> Result<f64> {
	two_term(2.0 * n, (n + 1.0) * (n + 1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
	/// `[n^2 - n, n^2]`
	Left,
	/// `[n^2, n^2 + n]`
	Right,
}

/// Expected cyclics in one Oppermann half-interval.
pub fn oppermann_half(n: f64, side: Half) -> Result<f64> {
	let arg = match side {
		Half::Left => n * n,
		Half::Right => n * (n + 1.0),
	};
	two_term(n, arg)
}

/// Expected primes in one Oppermann half-interval.
pub fn oppermann_prime_half(n: f64) -> Result<f64> {
	if !(n > 1.0) {
		return Err(Error::Domain(format!("n = {n} must exceed 1")));
	}
	Ok(n / (2.0 * n.ln()))
}

/// Product over odd primes `p <= p_bound` of `1 - 1/(p-1)^2`.
pub fn twin_product_constant(p_bound: u64) -> f64 {
	let mut acc = 1.0f64;
	for &p in base_primes(p_bound).primes() {
		if p > 2 {
			let q = (p - 1) as f64;
			acc *= 1.0 - 1.0 / (q * q);
		}
	}
	acc
}

/// Expected number of cyclics `c <= x` with `c + 2` cyclic.
pub fn pomerance_twin_cyclic_count(x: f64, p_bound: u64) -> Result<f64> {
	let l = positive_lll(x)?;
	let d = E_GAMMA * l;
	Ok(2.0 * twin_product_constant(p_bound) * x / (d * d))
}

/// Product over odd primes `p | n` with `p < log log n` of `(p-1)/(p-2)`.
pub fn goldbach_correction(n: u64) -> f64 {
	let bound = (n as f64).ln().ln();
	let mut acc = 1.0;
	let mut p = 3u64;
	while (p as f64) < bound {
		if n.is_multiple_of(p) && crate::arith::is_prime(p) {
			acc *= (p - 1) as f64 / (p - 2) as f64;
		}
		p += 2;
	}
	acc
}

/// Expected number of unordered representations of even `n` as a sum of
/// two cyclics.
pub fn pomerance_goldbach_count(n: u64, p_bound: u64) -> Result<f64> {
	if !n.is_multiple_of(2) {
		return Err(Error::Domain(format!("{n} is odd")));
	}
	let l = positive_lll(n as f64)?;
	let d = E_GAMMA * l;
	Ok(twin_product_constant(p_bound) * 2.0 * n as f64 / (d * d) * goldbach_correction(n))
}

/// Expected number of Sophie Germain primes `<= x`.
pub fn sg_prime_count_estimate(x: f64, p_bound: u64) -> Result<f64> {
	if !(x > 1.0) {
		return Err(Error::Domain(format!("x = {x} must exceed 1")));
	}
	let lx = x.ln();
	Ok(2.0 * twin_product_constant(p_bound) * x / (lx * lx))
}
