//! Membership bitmaps over `[1, limit]` with constant-time rank.
//!
//! Bit `i` of word `w` stands for the integer `64 * w + i + 1`. Cumulative
//! popcounts are kept at every 2^16 integers (1024 words), so `count_leq`
//! touches at most one block of words and `select` is a binary search over
//! blocks followed by a short scan.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const WORDS_PER_BLOCK: usize = 1024;
pub const INTS_PER_BLOCK: u64 = 64 * WORDS_PER_BLOCK as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BitmapKind {
	Cyclic,
	Prime,
}

impl BitmapKind {
	pub fn name(self) -> &'static str {
		match self {
			BitmapKind::Cyclic => "cyclic",
			BitmapKind::Prime => "prime",
		}
	}
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitmap {
	kind: BitmapKind,
	limit: u64,
	words: Vec<u64>,
	block_counts: Vec<u64>,
}

pub fn word_count(limit: u64) -> usize {
	limit.div_ceil(64) as usize
}

pub fn block_counts_of(words: &[u64]) -> Vec<u64> {
	let mut counts = Vec::with_capacity(words.len() / WORDS_PER_BLOCK + 2);
	let mut acc = 0u64;
	counts.push(0);
	for chunk in words.chunks(WORDS_PER_BLOCK) {
		acc += chunk.iter().map(|w| w.count_ones() as u64).sum::<u64>();
		counts.push(acc);
	}
	counts
}

impl Bitmap {
	/// Wraps raw words, clearing any bits past `limit` and building the
	/// rank directory.
	pub fn from_words(kind: BitmapKind, limit: u64, mut words: Vec<u64>) -> Result<Self> {
		if words.len() != word_count(limit) {
			return Err(Error::Config(format!(
				"{} words cannot hold limit {limit}",
				words.len()
			)));
		}
		let tail = (limit % 64) as u32;
		if tail != 0 {
			if let Some(last) = words.last_mut() {
				*last &= (1u64 << tail) - 1;
			}
		}
		let block_counts = block_counts_of(&words);
		Ok(Bitmap { kind, limit, words, block_counts })
	}

	pub(crate) fn from_parts(
		kind: BitmapKind,
		limit: u64,
		words: Vec<u64>,
		block_counts: Vec<u64>,
	) -> Self {
		Bitmap { kind, limit, words, block_counts }
	}

	/// Builds a bitmap from a membership predicate; meant for tests and
	/// small limits.
	pub fn from_fn(kind: BitmapKind, limit: u64, mut member: impl FnMut(u64) -> bool) -> Self {
		let mut words = vec![0u64; word_count(limit)];
		for n in 1..=limit {
			if member(n) {
				let i = (n - 1) as usize;
				words[i / 64] |= 1 << (i % 64);
			}
		}
		Bitmap::from_words(kind, limit, words).expect("sized from limit")
	}

	pub fn kind(&self) -> BitmapKind {
		self.kind
	}

	pub fn limit(&self) -> u64 {
		self.limit
	}

	pub fn words(&self) -> &[u64] {
		&self.words
	}

	pub fn block_counts(&self) -> &[u64] {
		&self.block_counts
	}

	/// Number of members in `[1, limit]`.
	pub fn len(&self) -> u64 {
		*self.block_counts.last().unwrap_or(&0)
	}

	pub fn is_empty(&self) -> bool {
		self.len() == 0
	}

	#[inline]
	pub fn contains(&self, n: u64) -> bool {
		if n == 0 || n > self.limit {
			return false;
		}
		let i = n - 1;
		self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
	}

	/// Number of members `<= x`; saturates at `limit`.
	pub fn count_leq(&self, x: u64) -> u64 {
		let x = x.min(self.limit);
		if x == 0 {
			return 0;
		}
		let full = (x / 64) as usize;
		let block = full / WORDS_PER_BLOCK;
		let mut count = self.block_counts[block];
		count += self.words[block * WORDS_PER_BLOCK..full]
			.iter()
			.map(|w| w.count_ones() as u64)
			.sum::<u64>();
		let rem = x % 64;
		if rem != 0 {
			count += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as u64;
		}
		count
	}

	/// The k-th member (1-based).
	pub fn select(&self, k: u64) -> Result<u64> {
		if k == 0 || k > self.len() {
			return Err(Error::OutOfRange { index: k, len: self.len() });
		}
		// Last block whose starting count is below k.
		let block = self.block_counts.partition_point(|&c| c < k) - 1;
		let mut remaining = k - self.block_counts[block];
		let start = block * WORDS_PER_BLOCK;
		for (offset, &w) in self.words[start..].iter().enumerate() {
			let ones = w.count_ones() as u64;
			if remaining <= ones {
				let bit = select_in_word(w, remaining as u32);
				return Ok(64 * (start + offset) as u64 + bit as u64 + 1);
			}
			remaining -= ones;
		}
		unreachable!("block counts are consistent with words")
	}

	/// The same bitmap cut down to `[1, limit]`.
	pub fn truncated(&self, limit: u64) -> Result<Bitmap> {
		if limit > self.limit {
			return Err(Error::InsufficientLimit { have: self.limit, need: limit });
		}
		Bitmap::from_words(self.kind, limit, self.words[..word_count(limit)].to_vec())
	}

	/// Members in increasing order.
	pub fn iter(&self) -> Ones<'_> {
		self.iter_from(1)
	}

	/// Members `>= lo` in increasing order.
	pub fn iter_from(&self, lo: u64) -> Ones<'_> {
		let lo = lo.max(1);
		if lo > self.limit {
			return Ones { words: &self.words, index: self.words.len(), current: 0 };
		}
		let i = lo - 1;
		let index = (i / 64) as usize;
		let current = self.words[index] & (!0u64 << (i % 64));
		Ones { words: &self.words, index, current }
	}
}

fn select_in_word(mut w: u64, k: u32) -> u32 {
	for _ in 1..k {
		w &= w - 1;
	}
	w.trailing_zeros()
}

pub struct Ones<'a> {
	words: &'a [u64],
	index: usize,
	current: u64,
}

impl Iterator for Ones<'_> {
	type Item = u64;

	#[inline]
	fn next(&mut self) -> Option<u64> {
		while self.current == 0 {
			self.index += 1;
			if self.index >= self.words.len() {
				return None;
			}
			self.current = self.words[self.index];
		}
		let bit = self.current.trailing_zeros();
		self.current &= self.current - 1;
		Some(64 * self.index as u64 + bit as u64 + 1)
	}
}

#[cfg(test)]
mod tests {
	use super::*;

	fn odd_bitmap(limit: u64) -> Bitmap {
		Bitmap::from_fn(BitmapKind::Prime, limit, |n| n % 2 == 1)
	}

	#[test]
	fn layout_and_rank() {
		let b = odd_bitmap(200_000);
		assert_eq!(b.words()[0], 0x5555_5555_5555_5555);
		assert_eq!(b.len(), 100_000);
		assert_eq!(b.count_leq(0), 0);
		assert_eq!(b.count_leq(1), 1);
		assert_eq!(b.count_leq(65_536), 32_768);
		assert_eq!(b.count_leq(131_073), 65_537);
		assert_eq!(b.count_leq(u64::MAX), 100_000);
		assert_eq!(b.select(1).unwrap(), 1);
		assert_eq!(b.select(32_769).unwrap(), 65_537);
		assert_eq!(b.select(100_000).unwrap(), 199_999);
		assert!(b.select(100_001).is_err());
		assert!(b.select(0).is_err());
	}

	#[test]
	fn trailing_bits_are_cleared() {
		let b = Bitmap::from_words(BitmapKind::Cyclic, 70, vec![!0, !0]).unwrap();
		assert_eq!(b.len(), 70);
		assert!(b.contains(70));
		assert!(!b.contains(71));
	}

	#[test]
	fn iteration() {
		let b = odd_bitmap(300);
		let all: Vec<u64> = b.iter().collect();
		assert_eq!(all.len(), 150);
		assert_eq!(all[149], 299);
		let from: Vec<u64> = b.iter_from(128).take(3).collect();
		assert_eq!(from, [129, 131, 133]);
		assert_eq!(b.iter_from(301).next(), None);
	}

	#[test]
	fn truncation() {
		let b = odd_bitmap(300);
		let t = b.truncated(100).unwrap();
		assert_eq!(t.limit(), 100);
		assert_eq!(t.len(), 50);
		assert_eq!(t.count_leq(99), b.count_leq(99));
		assert!(b.truncated(301).is_err());
	}
}
