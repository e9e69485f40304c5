use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::thresholds::{RecordSequence, ThresholdTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
	/// Every scanned case agrees with the statement, including its listed
	/// exceptions.
	Consistent,
	/// A case outside the stated exceptions violates the statement.
	Refuted,
	/// No counterexample, but the scan disagrees with stated data (an
	/// announced exception that does not occur, or a confirmed threshold that
	/// differs from the announced one).
	Mixed,
}

/// One exceptional case. `index` is the position (n, m or k); `value` the
/// member or count involved; pairs carry both coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exception {
	pub index: u64,
	pub value: u64,
	#[serde(skip_serializing_if = "Option::is_none", default)]
	pub pair: Option<[u64; 2]>,
	pub detail: String,
}

impl Exception {
	pub fn at(index: u64, value: u64, detail: impl Into<String>) -> Self {
		Exception { index, value, pair: None, detail: detail.into() }
	}

	pub fn pair(m: u64, n: u64, detail: impl Into<String>) -> Self {
		Exception { index: m, value: n, pair: Some([m, n]), detail: detail.into() }
	}

	fn key(&self) -> (u64, u64) {
		match self.pair {
			Some([m, n]) => (m, n),
			None => (self.index, 0),
		}
	}
}

/// Exceptions the statement itself allows.
#[derive(Clone, Debug, PartialEq)]
pub enum Allowed {
	None,
	Indices(Vec<u64>),
	Pairs(Vec<[u64; 2]>),
	/// Finitely many exceptions are allowed (statements of the form "for all
	/// n > N"); the threshold is reported instead.
	Any,
}

impl Allowed {
	fn keys(&self) -> Option<Vec<(u64, u64)>> {
		match self {
			Allowed::None => Some(Vec::new()),
			Allowed::Indices(v) => Some(v.iter().map(|&i| (i, 0)).collect()),
			Allowed::Pairs(v) => Some(v.iter().map(|&[m, n]| (m, n)).collect()),
			Allowed::Any => None,
		}
	}
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRange {
	/// What the bounds refer to, e.g. "n" or "c_n < limit".
	pub what: String,
	pub lo: u64,
	pub hi: u64,
}

/// A table of numbers with named columns, written as CSV.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Series {
	pub columns: Vec<String>,
	pub rows: Vec<Vec<f64>>,
}

impl Series {
	pub fn new(columns: &[&str]) -> Self {
		Series { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
	}

	pub fn push(&mut self, row: Vec<f64>) {
		debug_assert_eq!(row.len(), self.columns.len());
		self.rows.push(row);
	}

	pub fn column(&self, name: &str) -> Option<Vec<f64>> {
		let i = self.columns.iter().position(|c| c == name)?;
		Some(self.rows.iter().map(|r| r[i]).collect())
	}

	pub fn to_csv(&self) -> String {
		let mut out = self.columns.join(",");
		out.push('\n');
		for row in &self.rows {
			let cells: Vec<String> = row.iter().map(|v| format_number(*v)).collect();
			out.push_str(&cells.join(","));
			out.push('\n');
		}
		out
	}
}

/// Integers print without a fractional part; other values use the shortest
/// round-trip representation. Locale-independent. NaN marks a missing value
/// and prints as an empty cell.
pub fn format_number(v: f64) -> String {
	if v.is_nan() {
		String::new()
	} else if v.is_finite() && v.fract() == 0.0 && v.abs() < 1e15 {
		format!("{}", v as i64)
	} else {
		format!("{v}")
	}
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
	pub id: String,
	pub title: String,
	pub range: ScanRange,
	pub verdict: Verdict,
	pub exceptions: Vec<Exception>,
	#[serde(skip_serializing_if = "Vec::is_empty", default)]
	pub counterexamples: Vec<Exception>,
	/// Threshold N(k) per k, confirmed and provisional alike.
	#[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
	pub thresholds: BTreeMap<i64, u64>,
	#[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
	pub provisional: BTreeMap<i64, bool>,
	#[serde(skip_serializing_if = "Vec::is_empty", default)]
	pub records: Vec<u64>,
	#[serde(skip_serializing_if = "Vec::is_empty", default)]
	pub provisional_records: Vec<u64>,
	/// Named scalar results (fitted exponents, maxima, counts).
	#[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
	pub values: BTreeMap<String, f64>,
	#[serde(skip)]
	pub stats: BTreeMap<String, Series>,
	/// Where the series were written, by series name.
	#[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
	pub stats_csv_ref: BTreeMap<String, String>,
	#[serde(skip_serializing_if = "Vec::is_empty", default)]
	pub notes: Vec<String>,
}

impl ConjectureReport {
	pub fn new(id: &str, title: &str, range: ScanRange) -> Self {
		ConjectureReport {
			id: id.to_string(),
			title: title.to_string(),
			range,
			verdict: Verdict::Consistent,
			exceptions: Vec::new(),
			counterexamples: Vec::new(),
			thresholds: BTreeMap::new(),
			provisional: BTreeMap::new(),
			records: Vec::new(),
			provisional_records: Vec::new(),
			values: BTreeMap::new(),
			stats: BTreeMap::new(),
			stats_csv_ref: BTreeMap::new(),
			notes: Vec::new(),
		}
	}

	/// Records the exceptions found and derives the verdict against the
	/// allowed set.
	pub fn judge(&mut self, found: Vec<Exception>, allowed: &Allowed) {
		match allowed.keys() {
			Some(keys) => {
				self.counterexamples =
					found.iter().filter(|e| !keys.contains(&e.key())).cloned().collect();
				let missing = keys.iter().filter(|k| !found.iter().any(|e| e.key() == **k)).count();
				self.verdict = if !self.counterexamples.is_empty() {
					Verdict::Refuted
				} else if missing > 0 {
					self.notes.push(format!("{missing} stated exception(s) did not occur"));
					Verdict::Mixed
				} else {
					Verdict::Consistent
				};
			}
			None => {
				self.counterexamples.clear();
				self.verdict = Verdict::Consistent;
			}
		}
		self.exceptions = found;
	}

	/// Copies a threshold table into the report and downgrades the verdict
	/// when a confirmed entry contradicts a stated value.
	pub fn set_thresholds(&mut self, table: &ThresholdTable, stated: &[(i64, u64)]) {
		for (k, entry) in &table.entries {
			if let Some(n) = entry.n {
				self.thresholds.insert(*k, n);
			}
			self.provisional.insert(*k, entry.provisional);
		}
		for &(k, expected) in stated {
			if let Some(entry) = table.entries.get(&k) {
				if let (Some(n), false) = (entry.n, entry.provisional) {
					if n != expected {
						self.notes.push(format!("N({k}) = {n} but the statement gives {expected}"));
						if self.verdict == Verdict::Consistent {
							self.verdict = Verdict::Mixed;
						}
					}
				}
			}
		}
	}

	pub fn set_records(&mut self, records: &RecordSequence, stated_prefix: &[u64]) {
		self.records = records.confirmed();
		self.provisional_records = records.provisional();
		// Provisional records may still move, so only confirmed ones are held
		// against the stated prefix.
		let agree = self.records.iter().zip(stated_prefix).all(|(a, b)| a == b);
		if !agree {
			self.notes.push("record sequence differs from the stated prefix".into());
			if self.verdict == Verdict::Consistent {
				self.verdict = Verdict::Mixed;
			}
		}
	}

	pub fn exception_indices(&self) -> Vec<u64> {
		self.exceptions.iter().map(|e| e.index).collect()
	}

	pub fn exception_values(&self) -> Vec<u64> {
		self.exceptions.iter().map(|e| e.value).collect()
	}
}
