//! Iterated absolute differences and the first element of each row.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SadsMode {
	/// Every row computed down to the requested depth.
	Naive,
	/// Stops once a row is 1 followed by values in {0, 2} far enough out
	/// that every deeper row must also start with 1.
	Shortcut,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SadsResult {
	pub mode: SadsMode,
	pub depth: u64,
	/// First element of rows `1..=rows_computed`.
	pub first_column: Vec<u64>,
	/// Rows beyond this point follow from the {0, 2} window argument.
	pub rows_computed: u64,
	/// True iff every row `1..=depth` starts with 1.
	pub all_ones: bool,
	/// First row whose leading element is not 1.
	pub first_failure: Option<u64>,
}

/// Rows `1..=depth` of the triangle whose row 0 is `values`. Needs
/// `depth + 1` values; row n only matters on positions `0..=depth - n`.
pub fn sads_verify(values: &[u64], depth: u64, mode: SadsMode) -> Result<SadsResult> {
	let need = depth as usize + 1;
	if values.len() < need {
		return Err(Error::InsufficientLimit { have: values.len() as u64, need: need as u64 });
	}
	let mut row: Vec<u64> = values[..need].to_vec();
	let mut first_column = Vec::new();
	let mut first_failure = None;
	let mut rows_computed = 0;
	for n in 1..=depth {
		let width = (depth - n) as usize + 1;
		// In place: position j only reads positions j and j + 1 of the old row.
		for j in 0..width {
			row[j] = row[j].abs_diff(row[j + 1]);
		}
		rows_computed = n;
		first_column.push(row[0]);
		if row[0] != 1 {
			first_failure = Some(n);
			break;
		}
		if mode == SadsMode::Shortcut && row[1..width].iter().all(|&v| v == 0 || v == 2) {
			// 1 followed by {0, 2} reproduces itself one position shorter, and
			// positions up to depth - n cover every remaining row.
			break;
		}
	}
	Ok(SadsResult {
		mode,
		depth,
		first_column,
		rows_computed,
		all_ones: first_failure.is_none(),
		first_failure,
	})
}

#[cfg(test)]
mod tests {
	use super::*;

	#[test]
	fn hand_triangle() {
		// 2 3 5 7 11 / 1 2 2 4 / 1 0 2 / 1 2 / 1
		let r = sads_verify(&[2, 3, 5, 7, 11], 4, SadsMode::Naive).unwrap();
		assert_eq!(r.first_column, [1, 1, 1, 1]);
		assert!(r.all_ones);
	}

	#[test]
	fn detects_failure() {
		let r = sads_verify(&[1, 4, 5, 6], 3, SadsMode::Naive).unwrap();
		assert_eq!(r.first_column, [3]);
		assert_eq!(r.first_failure, Some(1));
		assert!(!r.all_ones);
	}

	#[test]
	fn shortcut_stops_early() {
		// Row 1 of 2, 4, 6, ... is all 2s, so it fails immediately.
		let v: Vec<u64> = (1..=1000).map(|i| 2 * i).collect();
		assert!(!sads_verify(&v, 100, SadsMode::Shortcut).unwrap().all_ones);
		let odd: Vec<u64> = std::iter::once(2).chain((1..1000).map(|i| 2 * i + 1)).collect();
		let r = sads_verify(&odd, 500, SadsMode::Shortcut).unwrap();
		assert!(r.all_ones);
		assert_eq!(r.rows_computed, 1);
		assert!(sads_verify(&odd, 2000, SadsMode::Naive).is_err());
	}
}
