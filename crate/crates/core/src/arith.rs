//! Word-sized number theory: gcd, modular powers, trial factorization and
//! a deterministic Miller-Rabin test.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
	if a == 0 {
		return b;
	}
	if b == 0 {
		return a;
	}
	let shift = (a | b).trailing_zeros();
	a >>= a.trailing_zeros();
	loop {
		b >>= b.trailing_zeros();
		if a > b {
			std::mem::swap(&mut a, &mut b);
		}
		b -= a;
		if b == 0 {
			return a << shift;
		}
	}
}

/// Floor of the square root, exact for every u64.
pub fn isqrt(n: u64) -> u64 {
	if n < 2 {
		return n;
	}
	let mut r = (n as f64).sqrt() as u64;
	while r.checked_mul(r).is_none_or(|sq| sq > n) {
		r -= 1;
	}
	while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
		r += 1;
	}
	r
}

/// Floor of the cube root, exact for every u64.
pub fn icbrt(n: u64) -> u64 {
	let mut r = (n as f64).cbrt() as u64;
	let cube = |x: u64| x.checked_mul(x).and_then(|s| s.checked_mul(x));
	while r > 0 && cube(r).is_none_or(|c| c > n) {
		r -= 1;
	}
	while cube(r + 1).is_some_and(|c| c <= n) {
		r += 1;
	}
	r
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
	((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod modulus` by square-and-multiply with 128-bit products.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> Result<u64> {
	if modulus == 0 {
		return Err(Error::Domain("modulus must be positive".into()));
	}
	if modulus == 1 {
		return Ok(0);
	}
	let mut acc = 1u64;
	let mut b = base % modulus;
	while exp > 0 {
		if exp & 1 == 1 {
			acc = mul_mod(acc, b, modulus);
		}
		b = mul_mod(b, b, modulus);
		exp >>= 1;
	}
	Ok(acc)
}

// Primes below 2^16, enough to trial-divide anything below 2^32 and a fast
// first pass for larger inputs.
fn small_primes() -> &'static [u32] {
	static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
	PRIMES.get_or_init(|| {
		let n = 1usize << 16;
		let mut composite = vec![false; n];
		let mut out = Vec::new();
		for i in 2..n {
			if !composite[i] {
				out.push(i as u32);
				let mut j = i * i;
				while j < n {
					composite[j] = true;
					j += i;
				}
			}
		}
		out
	})
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
	let mut out = Vec::new();
	if n < 2 {
		return out;
	}
	let mut push = |n: &mut u64, p: u64| {
		let mut e = 0;
		while (*n).is_multiple_of(p) {
			*n /= p;
			e += 1;
		}
		if e > 0 {
			out.push((p, e));
		}
	};
	for &p in small_primes() {
		let p = p as u64;
		if p * p > n {
			break;
		}
		push(&mut n, p);
	}
	// Past the table: odd candidates only.
	let mut d = (1u64 << 16) + 1;
	while d.checked_mul(d).is_some_and(|sq| sq <= n) {
		push(&mut n, d);
		d += 2;
	}
	if n > 1 {
		out.push((n, 1));
	}
	out
}

/// Euler's totient from the trial factorization of `n`.
pub fn totient_trial(n: u64) -> u64 {
	if n == 0 {
		return 0;
	}
	factorize(n)
		.into_iter()
		.fold(n, |phi, (p, _)| phi / p * (p - 1))
}

/// `gcd(n, phi(n)) == 1`, with phi from trial factorization.
pub fn is_cyclic_direct(n: u64) -> Result<bool> {
	if n == 0 {
		return Err(Error::Domain("cyclic test needs n >= 1".into()));
	}
	Ok(gcd(n, totient_trial(n)) == 1)
}

/// `phi(n)^phi(n) == 1 (mod n)`; holds for every cyclic n and is used as an
/// independent consistency check on the sieve.
pub fn lagneau_check(n: u64) -> Result<bool> {
	if n == 0 {
		return Err(Error::Domain("Lagneau check needs n >= 1".into()));
	}
	let phi = totient_trial(n);
	Ok(mod_pow(phi, phi, n)? == 1 % n)
}

/// Deterministic Miller-Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
	if n < 2 {
		return false;
	}
	for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
		if n.is_multiple_of(p) {
			return n == p;
		}
	}
	let s = (n - 1).trailing_zeros();
	let d = (n - 1) >> s;
	'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
		let mut x = mod_pow(a, d, n).expect("n > 1");
		if x == 1 || x == n - 1 {
			continue;
		}
		for _ in 1..s {
			x = mul_mod(x, x, n);
			if x == n - 1 {
				continue 'witness;
			}
		}
		return false;
	}
	true
}

#[cfg(test)]
mod tests {
	use super::*;

	#[test]
	fn gcd_basics() {
		assert_eq!(gcd(0, 0), 0);
		assert_eq!(gcd(0, 7), 7);
		assert_eq!(gcd(12, 18), 6);
		assert_eq!(gcd(15, 8), 1);
		assert_eq!(gcd(1 << 40, 1 << 12), 1 << 12);
	}

	#[test]
	fn roots() {
		assert_eq!(isqrt(0), 0);
		assert_eq!(isqrt(99_999_999), 9999);
		assert_eq!(isqrt(100_000_000), 10_000);
		assert_eq!(isqrt(u64::MAX), (1 << 32) - 1);
		assert_eq!(icbrt(26), 2);
		assert_eq!(icbrt(27), 3);
		assert_eq!(icbrt(9_999_999), 215);
		assert_eq!(icbrt(u64::MAX), 2_642_245);
	}

	#[test]
	fn mod_pow_small() {
		assert_eq!(mod_pow(2, 10, 1000).unwrap(), 24);
		assert_eq!(mod_pow(3, 0, 7).unwrap(), 1);
		assert_eq!(mod_pow(5, 3, 1).unwrap(), 0);
		assert!(mod_pow(2, 2, 0).is_err());
		// Fermat with a modulus near 2^63.
		let p = 9_223_372_036_854_775_783u64;
		assert_eq!(mod_pow(2, p - 1, p).unwrap(), 1);
	}

	#[test]
	fn totients() {
		let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
		for (i, &phi) in expected.iter().enumerate() {
			assert_eq!(totient_trial(i as u64 + 1), phi);
		}
		assert_eq!(totient_trial(1 << 20), 1 << 19);
	}

	#[test]
	fn cyclic_direct_small() {
		let cyclic: Vec<u64> = (1..=25).filter(|&n| is_cyclic_direct(n).unwrap()).collect();
		assert_eq!(cyclic, [1, 2, 3, 5, 7, 11, 13, 15, 17, 19, 23]);
		assert!(is_cyclic_direct(0).is_err());
	}

	#[test]
	fn lagneau_on_cyclics() {
		for n in 1..2000 {
			if is_cyclic_direct(n).unwrap() {
				assert!(lagneau_check(n).unwrap(), "n = {n}");
			}
		}
	}

	#[test]
	fn primality() {
		let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
		assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
		assert!(is_prime(1_000_000_007));
		assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
		assert!(is_prime(18_446_744_073_709_551_557));
	}
}
