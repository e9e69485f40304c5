//! Segmented sieves producing the cyclic and prime bitmaps.
//!
//! The cyclic sieve computes Euler's totient over each segment by the
//! remainder-cofactor method (multiply in `p - 1` and `p` for every prime
//! power found, recover the single large prime factor by one division at the
//! end) and keeps `n` when `gcd(n, phi(n)) = 1`.

use rayon::prelude::*;

use crate::arith::{gcd, isqrt};
use crate::bitmap::{word_count, Bitmap, BitmapKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SieveConfig {
	/// Inclusive upper bound of the sieved universe.
	pub limit: u64,
	/// Integers per segment; a positive multiple of 64.
	pub block_len: u64,
	pub worker_count: usize,
	/// Upper bound on bytes held at once (bitmap plus segment buffers).
	pub memory_budget: u64,
}

impl SieveConfig {
	pub fn new(limit: u64) -> Self {
		SieveConfig {
			limit,
			block_len: 1 << 17,
			worker_count: rayon::current_num_threads().max(1),
			memory_budget: 4 << 30,
		}
	}

	pub fn with_workers(mut self, workers: usize) -> Self {
		self.worker_count = workers;
		self
	}

	pub fn with_block_len(mut self, block_len: u64) -> Self {
		self.block_len = block_len;
		self
	}

	fn validate(&self, bytes_per_int: u64) -> Result<()> {
		if self.limit == 0 {
			return Err(Error::Config("limit must be at least 1".into()));
		}
		if self.block_len == 0 || !self.block_len.is_multiple_of(64) {
			return Err(Error::Config(format!(
				"block length {} is not a positive multiple of 64",
				self.block_len
			)));
		}
		if self.worker_count == 0 {
			return Err(Error::Config("worker count must be at least 1".into()));
		}
		let bitmap = word_count(self.limit) as u64 * 8 + (self.limit >> 16) * 8 + 16;
		let segments = self.worker_count as u64 * self.block_len.min(self.limit) * bytes_per_int;
		let need = bitmap + segments;
		if need > self.memory_budget {
			return Err(Error::MemoryBudget { need, budget: self.memory_budget });
		}
		Ok(())
	}
}

/// All primes up to `limit`, remembering the limit so callers can check
/// coverage.
#[derive(Clone, Debug)]
pub struct BasePrimes {
	limit: u64,
	primes: Vec<u64>,
}

impl BasePrimes {
	pub fn limit(&self) -> u64 {
		self.limit
	}

	pub fn primes(&self) -> &[u64] {
		&self.primes
	}
}

pub fn base_primes(limit: u64) -> BasePrimes {
	let n = limit as usize;
	let mut composite = vec![false; n + 1];
	let mut primes = Vec::new();
	for i in 2..=n {
		if !composite[i] {
			primes.push(i as u64);
			let mut j = i.saturating_mul(i);
			while j <= n {
				composite[j] = true;
				j += i;
			}
		}
	}
	BasePrimes { limit, primes }
}

/// Totients of `lo, lo + 1, ..., lo + phi.len() - 1`.
#[derive(Clone, Debug)]
pub struct TotientBlock {
	pub lo: u64,
	pub phi: Vec<u64>,
}

/// Totients over `[lo, lo + len)`. `base` must cover `sqrt(lo + len - 1)`.
pub fn totient_block(lo: u64, len: u64, base: &BasePrimes) -> Result<TotientBlock> {
	if lo == 0 {
		return Err(Error::Domain("totient block must start at 1 or later".into()));
	}
	if len == 0 {
		return Ok(TotientBlock { lo, phi: Vec::new() });
	}
	let hi = lo
		.checked_add(len - 1)
		.ok_or_else(|| Error::Domain("totient block overflows u64".into()))?;
	let root = isqrt(hi);
	if base.limit < root {
		return Err(Error::Config(format!(
			"base primes up to {} do not cover sqrt({hi}) = {root}",
			base.limit
		)));
	}
	let mut phi = vec![1u64; len as usize];
	let mut found = vec![1u64; len as usize];
	fill_totients(lo, hi, base, &mut phi, &mut found);
	Ok(TotientBlock { lo, phi })
}

fn first_multiple(m: u64, lo: u64) -> u64 {
	lo.div_ceil(m) * m
}

// Works on caller-provided buffers so segment workers can reuse them.
fn fill_totients(lo: u64, hi: u64, base: &BasePrimes, phi: &mut [u64], found: &mut [u64]) {
	let len = (hi - lo + 1) as usize;
	phi[..len].fill(1);
	found[..len].fill(1);
	for &p in &base.primes {
		if p * p > hi {
			break;
		}
		let mut i = (first_multiple(p, lo) - lo) as usize;
		while i < len {
			phi[i] *= p - 1;
			found[i] *= p;
			i += p as usize;
		}
		let mut pk = p * p;
		while pk <= hi {
			let mut i = (first_multiple(pk, lo) - lo) as usize;
			while i < len {
				phi[i] *= p;
				found[i] *= p;
				i += pk as usize;
			}
			match pk.checked_mul(p) {
				Some(next) => pk = next,
				None => break,
			}
		}
	}
	for i in 0..len {
		let n = lo + i as u64;
		if found[i] != n {
			// The cofactor is a single prime above sqrt(hi).
			phi[i] *= n / found[i] - 1;
		}
	}
}

fn check_base(limit: u64) -> BasePrimes {
	base_primes(isqrt(limit).max(1))
}

fn run_segments<F>(config: &SieveConfig, segment: F) -> Result<Vec<u64>>
where
	F: Fn(u64, u64, &mut [u64]) + Sync,
{
	let limit = config.limit;
	let seg_count = limit.div_ceil(config.block_len);
	let words_per_seg = (config.block_len / 64) as usize;
	let mut words = vec![0u64; word_count(limit)];
	let pool = rayon::ThreadPoolBuilder::new()
		.num_threads(config.worker_count)
		.build()
		.map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
	pool.install(|| {
		words
			.par_chunks_mut(words_per_seg)
			.enumerate()
			.for_each(|(s, out)| {
				debug_assert!((s as u64) < seg_count);
				let lo = s as u64 * config.block_len + 1;
				let hi = (lo + config.block_len - 1).min(limit);
				segment(lo, hi, out);
			});
	});
	Ok(words)
}

/// Bitmap of cyclic numbers in `[1, limit]`.
pub fn build_cyclic_bitmap(config: &SieveConfig) -> Result<Bitmap> {
	config.validate(16)?;
	let base = check_base(config.limit);
	let words = run_segments(config, |lo, hi, out| {
		let len = (hi - lo + 1) as usize;
		let mut phi = vec![0u64; len];
		let mut found = vec![0u64; len];
		fill_totients(lo, hi, &base, &mut phi, &mut found);
		for i in 0..len {
			let n = lo + i as u64;
			// phi(n) is even for n > 2, so even n > 2 never qualify.
			if (n & 1 == 1 || n == 2) && gcd(n, phi[i]) == 1 {
				out[i / 64] |= 1 << (i % 64);
			}
		}
	})?;
	Bitmap::from_words(BitmapKind::Cyclic, config.limit, words)
}

/// Bitmap of primes in `[1, limit]` by segmented Eratosthenes over odd
/// numbers.
pub fn build_prime_bitmap(config: &SieveConfig) -> Result<Bitmap> {
	config.validate(0)?;
	let base = check_base(config.limit);
	let words = run_segments(config, |lo, hi, out| {
		// lo is 1 mod 64, so odd integers sit on even bit positions.
		out.fill(0x5555_5555_5555_5555);
		let len = hi - lo + 1;
		for &p in &base.primes[1..] {
			if p * p > hi {
				break;
			}
			let mut m = first_multiple(p, lo).max(p * p);
			if m % 2 == 0 {
				m += p;
			}
			let mut i = m - lo;
			while i < len {
				out[(i / 64) as usize] &= !(1u64 << (i % 64));
				i += 2 * p;
			}
		}
		if lo == 1 {
			// 1 is not prime, 2 is.
			out[0] = (out[0] & !1) | 2;
		}
	})?;
	Bitmap::from_words(BitmapKind::Prime, config.limit, words)
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::arith::{is_cyclic_direct, totient_trial};

	#[test]
	fn base_primes_small() {
		assert_eq!(base_primes(30).primes(), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
		assert!(base_primes(1).primes().is_empty());
	}

	#[test]
	fn totient_block_matches_trial() {
		let base = base_primes(1000);
		let block = totient_block(999_000, 1000, &base).unwrap();
		for (i, &phi) in block.phi.iter().enumerate() {
			assert_eq!(phi, totient_trial(999_000 + i as u64));
		}
		assert!(totient_block(0, 10, &base).is_err());
		assert!(totient_block(2_000_000, 10, &base).is_err());
	}

	#[test]
	fn config_errors() {
		assert!(build_cyclic_bitmap(&SieveConfig::new(0)).is_err());
		assert!(build_cyclic_bitmap(&SieveConfig::new(100).with_block_len(100)).is_err());
		assert!(build_cyclic_bitmap(&SieveConfig::new(100).with_workers(0)).is_err());
		let mut tight = SieveConfig::new(1 << 30);
		tight.memory_budget = 1 << 20;
		assert!(matches!(build_prime_bitmap(&tight), Err(Error::MemoryBudget { .. })));
	}

	#[test]
	fn cyclic_small_prefix() {
		let b = build_cyclic_bitmap(&SieveConfig::new(20)).unwrap();
		let got: Vec<u64> = b.iter().collect();
		assert_eq!(got, [1, 2, 3, 5, 7, 11, 13, 15, 17, 19]);
	}

	#[test]
	fn small_segments_agree_with_direct() {
		let config = SieveConfig::new(50_000).with_block_len(640);
		let cyc = build_cyclic_bitmap(&config).unwrap();
		let pri = build_prime_bitmap(&config).unwrap();
		for n in 1..=50_000 {
			assert_eq!(cyc.contains(n), is_cyclic_direct(n).unwrap(), "cyclic {n}");
			assert_eq!(pri.contains(n), crate::arith::is_prime(n), "prime {n}");
		}
	}
}
