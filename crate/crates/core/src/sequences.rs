//! Uniform indexed views over increasing integer sequences.
//!
//! A sequence is either backed by a bitmap (rank/select) or by an explicit
//! sorted array (binary search). Derived sequences (Sophie Germain members,
//! near-square members, composite cyclics) are explicit.

use std::io::Write;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{is_cyclic_direct, is_prime, isqrt};
use crate::bitmap::{Bitmap, BitmapKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
enum Source {
	Bitmap(Arc<Bitmap>),
	Explicit(Arc<Vec<u64>>),
}

/// A 1-indexed increasing sequence with members in `[1, limit]`.
#[derive(Clone, Debug)]
pub struct IndexedSequence {
	name: String,
	limit: u64,
	source: Source,
}

/// Interval endpoints. Between-bound intervals in the checks are open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interval {
	Open(u64, u64),
	Closed(u64, u64),
}

impl Interval {
	/// Inclusive integer bounds, or `None` when empty.
	pub fn inclusive(self) -> Option<(u64, u64)> {
		let (lo, hi) = match self {
			Interval::Open(a, b) => (a.checked_add(1)?, b.checked_sub(1)?),
			Interval::Closed(a, b) => (a, b),
		};
		(lo <= hi).then_some((lo, hi))
	}
}

/// One consecutive pair `(a, b)` with `b - a = gap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapEvent {
	pub index: u64,
	pub lower: u64,
	pub gap: u64,
}

impl IndexedSequence {
	pub fn from_bitmap(name: impl Into<String>, bitmap: Arc<Bitmap>) -> Self {
		IndexedSequence { name: name.into(), limit: bitmap.limit(), source: Source::Bitmap(bitmap) }
	}

	/// `values` must be strictly increasing, positive and `<= limit`.
	pub fn from_sorted(name: impl Into<String>, limit: u64, values: Vec<u64>) -> Result<Self> {
		if values.first() == Some(&0) {
			return Err(Error::Domain("sequence members must be positive".into()));
		}
		if values.windows(2).any(|w| w[0] >= w[1]) {
			return Err(Error::Domain("sequence must be strictly increasing".into()));
		}
		if values.last().is_some_and(|&v| v > limit) {
			return Err(Error::Domain(format!("member above limit {limit}")));
		}
		Ok(IndexedSequence { name: name.into(), limit, source: Source::Explicit(Arc::new(values)) })
	}

	pub fn name(&self) -> &str {
		&self.name
	}

	pub fn limit(&self) -> u64 {
		self.limit
	}

	pub fn bitmap(&self) -> Option<&Arc<Bitmap>> {
		match &self.source {
			Source::Bitmap(b) => Some(b),
			Source::Explicit(_) => None,
		}
	}

	pub fn len(&self) -> u64 {
		match &self.source {
			Source::Bitmap(b) => b.len(),
			Source::Explicit(v) => v.len() as u64,
		}
	}

	pub fn is_empty(&self) -> bool {
		self.len() == 0
	}

	pub fn contains(&self, n: u64) -> bool {
		match &self.source {
			Source::Bitmap(b) => b.contains(n),
			Source::Explicit(v) => v.binary_search(&n).is_ok(),
		}
	}

	/// Number of members `<= x`.
	pub fn count_leq(&self, x: u64) -> u64 {
		match &self.source {
			Source::Bitmap(b) => b.count_leq(x),
			Source::Explicit(v) => v.partition_point(|&m| m <= x) as u64,
		}
	}

	/// Members inside the interval.
	pub fn count_in(&self, interval: Interval) -> u64 {
		match interval.inclusive() {
			Some((lo, hi)) => self.count_leq(hi) - self.count_leq(lo - 1),
			None => 0,
		}
	}

	/// The k-th member, 1-based.
	pub fn nth(&self, k: u64) -> Result<u64> {
		match &self.source {
			Source::Bitmap(b) => b.select(k),
			Source::Explicit(v) => {
				if k == 0 || k > v.len() as u64 {
					Err(Error::OutOfRange { index: k, len: v.len() as u64 })
				} else {
					Ok(v[k as usize - 1])
				}
			}
		}
	}

	/// The first `n` members; fails when the sequence is shorter.
	pub fn prefix(&self, n: u64) -> Result<Vec<u64>> {
		if n > self.len() {
			return Err(Error::OutOfRange { index: n, len: self.len() });
		}
		Ok(self.iter().take(n as usize).collect())
	}

	pub fn to_vec(&self) -> Vec<u64> {
		match &self.source {
			Source::Bitmap(b) => b.iter().collect(),
			Source::Explicit(v) => v.as_ref().clone(),
		}
	}

	pub fn iter(&self) -> Box<dyn Iterator<Item = u64> + '_> {
		self.iter_from(1)
	}

	/// Members `>= lo`, increasing.
	pub fn iter_from(&self, lo: u64) -> Box<dyn Iterator<Item = u64> + '_> {
		match &self.source {
			Source::Bitmap(b) => Box::new(b.iter_from(lo)),
			Source::Explicit(v) => {
				let start = v.partition_point(|&m| m < lo);
				Box::new(v[start..].iter().copied())
			}
		}
	}

	/// Members inside the interval, increasing.
	pub fn iter_range(&self, interval: Interval) -> Box<dyn Iterator<Item = u64> + '_> {
		match interval.inclusive() {
			Some((lo, hi)) => Box::new(self.iter_from(lo).take_while(move |&m| m <= hi)),
			None => Box::new(std::iter::empty()),
		}
	}

	/// Consecutive differences, one event per adjacent pair.
	pub fn gaps(&self) -> impl Iterator<Item = GapEvent> + '_ {
		let mut it = self.iter();
		let mut prev = it.next();
		let mut index = 0u64;
		std::iter::from_fn(move || {
			let a = prev?;
			let b = it.next()?;
			prev = Some(b);
			index += 1;
			Some(GapEvent { index, lower: a, gap: b - a })
		})
	}

	/// Records of the gap function: each gap strictly larger than all before.
	pub fn maximal_gaps(&self) -> Vec<GapEvent> {
		let mut best = 0;
		self.gaps()
			.filter(|g| {
				let new = g.gap > best;
				best = best.max(g.gap);
				new
			})
			.collect()
	}

	/// Writes one member per line.
	pub fn write_text(&self, out: &mut dyn Write) -> Result<()> {
		let mut buf = String::with_capacity(1 << 16);
		for m in self.iter() {
			buf.push_str(&m.to_string());
			buf.push('\n');
			if buf.len() > (1 << 16) - 32 {
				out.write_all(buf.as_bytes())?;
				buf.clear();
			}
		}
		out.write_all(buf.as_bytes())?;
		Ok(())
	}

	/// Writes the member count, then the members, all as little-endian u64.
	pub fn write_binary(&self, out: &mut dyn Write) -> Result<()> {
		let mut buf = Vec::with_capacity(1 << 16);
		buf.extend_from_slice(&self.len().to_le_bytes());
		for m in self.iter() {
			buf.extend_from_slice(&m.to_le_bytes());
			if buf.len() >= 1 << 16 {
				out.write_all(&buf)?;
				buf.clear();
			}
		}
		out.write_all(&buf)?;
		Ok(())
	}
}

/// Which class the safe partner `2c + 1` must belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SgClass {
	Cyclic,
	Prime,
}

impl SgClass {
	fn member(self, n: u64) -> bool {
		match self {
			SgClass::Cyclic => is_cyclic_direct(n).expect("n >= 1"),
			SgClass::Prime => is_prime(n),
		}
	}
}

/// Sophie Germain members of a base sequence: `c` with `2c + 1` also in the
/// class.
#[derive(Clone, Debug)]
pub struct SgView {
	pub class: SgClass,
	pub sequence: IndexedSequence,
}

/// All base members `c <= limit` whose partner `2c + 1` is in `class`.
///
/// The partner is looked up in the base bitmap when it lies inside it and
/// decided by a direct test otherwise.
pub fn sg_members(base: &IndexedSequence, class: SgClass, limit: u64) -> Result<SgView> {
	let limit = limit.min(base.limit());
	let lookup = base.bitmap().filter(|b| {
		matches!((b.kind(), class), (BitmapKind::Cyclic, SgClass::Cyclic) | (BitmapKind::Prime, SgClass::Prime))
	});
	let members: Vec<u64> = base
		.iter()
		.take_while(|&c| c <= limit)
		.filter(|&c| {
			let partner = 2 * c + 1;
			match lookup {
				Some(b) if partner <= b.limit() => b.contains(partner),
				_ => class.member(partner),
			}
		})
		.collect();
	let name = format!("sg_{}", base.name());
	Ok(SgView { class, sequence: IndexedSequence::from_sorted(name, limit, members)? })
}

/// Base members of the form `k^2 + 1` up to `limit` (including `2 = 1 + 1`).
pub fn near_square_members(base: &IndexedSequence, limit: u64) -> Result<IndexedSequence> {
	let limit = limit.min(base.limit());
	let kmax = if limit == 0 { 0 } else { isqrt(limit - 1) };
	let members: Vec<u64> =
		(1..=kmax).map(|k| k * k + 1).filter(|&n| base.contains(n)).collect();
	IndexedSequence::from_sorted(format!("near_square_{}", base.name()), limit, members)
}

/// Cyclic numbers that are composite (so excluding 1 and the primes).
pub fn composite_members(cyclic: &IndexedSequence, primes: &IndexedSequence) -> Result<IndexedSequence> {
	let limit = cyclic.limit().min(primes.limit());
	let members: Vec<u64> = cyclic
		.iter()
		.take_while(|&c| c <= limit)
		.filter(|&c| c > 1 && !primes.contains(c))
		.collect();
	IndexedSequence::from_sorted("composite_cyclic", limit, members)
}
