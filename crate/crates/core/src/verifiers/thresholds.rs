//! Threshold tables and record sequences over a series of counts, both from
//! one backward suffix-minimum pass.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Share of the scan treated as its tail when deciding provisional entries.
pub const TAIL_FRACTION: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
	/// N(k) is the least index with every count from there on `>= k`.
	AtLeast,
	/// N(k) is the last index whose count is `< k` (the statement then holds
	/// for every index `> N(k)`); `first_index - 1` when there is none.
	Beyond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdEntry {
	/// `None` when even the last scanned count is below k.
	pub n: Option<u64>,
	/// Set when a later count just below the scanned tail minimum could
	/// move this entry.
	pub provisional: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdTable {
	pub first_index: u64,
	pub convention: Convention,
	pub scanned: usize,
	pub tail_min: u64,
	pub entries: BTreeMap<i64, ThresholdEntry>,
}

impl ThresholdTable {
	pub fn get(&self, k: i64) -> Option<u64> {
		self.entries.get(&k).and_then(|e| e.n)
	}

	pub fn is_provisional(&self, k: i64) -> bool {
		self.entries.get(&k).is_none_or(|e| e.provisional)
	}
}

/// `out[i] = min(values[i..])`.
pub fn suffix_min(values: &[u64]) -> Vec<u64> {
	let mut out = values.to_vec();
	for i in (0..out.len().saturating_sub(1)).rev() {
		out[i] = out[i].min(out[i + 1]);
	}
	out
}

pub fn tail_min(counts: &[u64]) -> u64 {
	let tail = (counts.len() / TAIL_FRACTION).max(1);
	counts[counts.len().saturating_sub(tail)..].iter().copied().min().unwrap_or(0)
}

/// N(k) for `k = 1..=k_max`, indices starting at 1, `AtLeast` convention.
pub fn threshold_table(counts: &[u64], k_max: u64) -> ThresholdTable {
	threshold_table_with(counts, 1..=k_max, 1, Convention::AtLeast)
}

pub fn threshold_table_with(
	counts: &[u64],
	ks: impl IntoIterator<Item = u64>,
	first_index: u64,
	convention: Convention,
) -> ThresholdTable {
	let mins = suffix_min(counts);
	let tail = tail_min(counts);
	let mut entries = BTreeMap::new();
	for k in ks {
		// mins is nondecreasing, so the first position reaching k is found by
		// binary search.
		let pos = mins.partition_point(|&m| m < k);
		let n = if pos == mins.len() {
			None
		} else {
			let at_least = first_index + pos as u64;
			Some(match convention {
				Convention::AtLeast => at_least,
				Convention::Beyond => at_least - 1,
			})
		};
		let provisional = n.is_none() || k >= tail;
		entries.insert(k as i64, ThresholdEntry { n, provisional });
	}
	ThresholdTable { first_index, convention, scanned: counts.len(), tail_min: tail, entries }
}

/// Last index (offset by `first_index`) flagged true, or `first_index - 1`.
pub fn last_violation(violations: &[bool], first_index: u64) -> u64 {
	match violations.iter().rposition(|&v| v) {
		Some(i) => first_index + i as u64,
		None => first_index - 1,
	}
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
	pub index: u64,
	pub count: u64,
	pub provisional: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecordSequence {
	pub first_index: u64,
	pub tail_min: u64,
	pub records: Vec<Record>,
}

impl RecordSequence {
	pub fn indices(&self) -> Vec<u64> {
		self.records.iter().map(|r| r.index).collect()
	}

	pub fn confirmed(&self) -> Vec<u64> {
		self.records.iter().filter(|r| !r.provisional).map(|r| r.index).collect()
	}

	pub fn provisional(&self) -> Vec<u64> {
		self.records.iter().filter(|r| r.provisional).map(|r| r.index).collect()
	}
}

/// Indices k whose count is `<=` every later count.
///
/// With `one_per_level`, only the first such index at each count level is
/// kept (so record counts strictly increase); this is the form in which the
/// k-fold Legendre sequences are usually listed.
pub fn record_lows_with(counts: &[u64], first_index: u64, one_per_level: bool) -> RecordSequence {
	let tail = tail_min(counts);
	let mut records: Vec<Record> = Vec::new();
	let mut later_min = u64::MAX;
	for i in (0..counts.len()).rev() {
		if counts[i] <= later_min {
			records.push(Record {
				index: first_index + i as u64,
				count: counts[i],
				provisional: counts[i] >= tail,
			});
		}
		later_min = later_min.min(counts[i]);
	}
	records.reverse();
	if one_per_level {
		let mut last = None;
		records.retain(|r| {
			let keep = last.is_none_or(|c| r.count > c);
			if keep {
				last = Some(r.count);
			}
			keep
		});
	}
	RecordSequence { first_index, tail_min: tail, records }
}

pub fn record_lows(counts: &[u64]) -> RecordSequence {
	record_lows_with(counts, 1, true)
}

/// `r[i] = max(values[i..])`.
pub fn reverse_cummax(values: &[f64]) -> Vec<f64> {
	let mut out = values.to_vec();
	for i in (0..out.len().saturating_sub(1)).rev() {
		out[i] = out[i].max(out[i + 1]);
	}
	out
}
