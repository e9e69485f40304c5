//! One function per registry entry: pick the sequence, run the scan, hold
//! the result against the stated data.

use std::collections::BTreeMap;

use crate::asymptotics::{
	cyclic_square_interval, deligne_square_interval, oppermann_prime_half, pomerance_goldbach_count,
	pomerance_twin_cyclic_count, DEFAULT_PRIME_BOUND,
};
use crate::error::{Error, Result};
use crate::sequences::IndexedSequence;
use crate::stats::{counting_function_of, fit_power_law, log_grid, moment_series, variance_function};
use crate::universe::Universe;

use super::additive::{check_additive, check_multiplicative, AdditiveForm};
use super::gaps::{gap_violations, power_differences, sqrt_plus_k_thresholds, GapBoundSpec, Ratio};
use super::hl2::{hl2_scan, CountingTable, Hl2Bounds, Hl2Mode};
use super::intervals::{
	existence_in_squares, existence_report, interval_counts, near_square_intervals, oppermann_counts,
	oppermann_max_index, Boundary,
};
use super::limits::{limit_ratios, mod3_shares};
use super::powers::check_index_power;
use super::registry::Params;
use super::report::{Allowed, ConjectureReport, Exception, ScanRange, Series, Verdict};
use super::sads::{sads_verify, SadsMode};
use super::thresholds::{
	record_lows, reverse_cummax, threshold_table_with, Convention, ThresholdEntry, ThresholdTable, TAIL_FRACTION,
};
use super::tuples::{goldbach_scan, tuple_scan};

/// Pair counts at most this large are scanned in full by default.
pub const HL2_FULL_SCAN_PAIRS: u64 = 5_000_000;
/// Default cap on `m + n` for subadditivity scans.
pub const HL2_DEFAULT_SUM: u64 = 20_000;
/// Growth indices between cubes are only judged over this many intervals.
pub const MIN_FIT_INTERVALS: u64 = 100;
/// Default depth of the difference triangle.
pub const SADS_DEFAULT_DEPTH: u64 = 10_000;

type Check = Result<ConjectureReport>;

fn blank(what: &str, lo: u64, hi: u64) -> ConjectureReport {
	ConjectureReport::new("", "", ScanRange { what: what.into(), lo, hi })
}

fn downgrade(r: &mut ConjectureReport, note: String) {
	r.notes.push(note);
	if r.verdict == Verdict::Consistent {
		r.verdict = Verdict::Mixed;
	}
}

/// Marks the report mixed at the first disagreement with a stated prefix.
fn compare_prefix(r: &mut ConjectureReport, what: &str, computed: &[u64], stated: &[u64]) {
	if let Some(i) = computed.iter().zip(stated).position(|(a, b)| a != b) {
		downgrade(r, format!("{what}: entry {} is {} but the statement gives {}", i + 1, computed[i], stated[i]));
	}
}

fn compare_value(r: &mut ConjectureReport, what: &str, computed: f64, stated: f64, tol: f64) {
	if (computed - stated).abs() > tol {
		downgrade(r, format!("{what} = {computed:.6} but the statement gives {stated}"));
	}
}

/// Limit claims: the mean distance to `target` over the last tenth of the
/// points must be below the mean over the first tenth.
fn trend(r: &mut ConjectureReport, name: &str, points: &[(f64, f64)], target: f64) {
	if points.len() < 2 {
		r.notes.push(format!("{name}: too few points to judge a trend"));
		return;
	}
	let d = (points.len() / TAIL_FRACTION).max(1);
	let err = |s: &[(f64, f64)]| s.iter().map(|p| (p.1 - target).abs()).sum::<f64>() / s.len() as f64;
	let head = err(&points[..d]);
	let tail = err(&points[points.len() - d..]);
	r.values.insert(format!("{name}_head_error"), head);
	r.values.insert(format!("{name}_tail_error"), tail);
	r.values.insert(format!("{name}_last"), points[points.len() - 1].1);
	if !(tail < head) {
		downgrade(r, format!("{name} is not approaching {target} over the scan"));
	}
}

fn counts_series(first_index: u64, counts: &[u64]) -> Series {
	let mut s = Series::new(&["n", "count"]);
	for (i, &c) in counts.iter().enumerate() {
		s.push(vec![(first_index + i as u64) as f64, c as f64]);
	}
	s
}

/// Fits `count ~ a n^b` over indices from 1, storing a, b, r2 under `name`.
fn fit_counts(r: &mut ConjectureReport, name: &str, counts: &[u64]) -> Option<f64> {
	let pts: Vec<(f64, f64)> = counts.iter().enumerate().map(|(i, &c)| ((i + 1) as f64, c as f64)).collect();
	match fit_power_law(&pts) {
		Ok(fit) => {
			r.values.insert(format!("{name}_a"), fit.a);
			r.values.insert(format!("{name}_b"), fit.b);
			r.values.insert(format!("{name}_r2"), fit.r2);
			Some(fit.b)
		}
		Err(e) => {
			r.notes.push(format!("{name}: {e}"));
			None
		}
	}
}

/// Threshold table from last-violation indices; an entry is provisional
/// when its violation lies in the last tenth of the scan.
fn last_violation_table(last: &BTreeMap<i64, u64>, scanned: u64) -> ThresholdTable {
	let tail_start = scanned - scanned / TAIL_FRACTION as u64;
	let entries = last
		.iter()
		.map(|(&k, &n)| (k, ThresholdEntry { n: Some(n), provisional: n > tail_start }))
		.collect();
	ThresholdTable { first_index: 1, convention: Convention::Beyond, scanned: scanned as usize, tail_min: 0, entries }
}

fn pairs(spec: &[(std::ops::RangeInclusive<i64>, u64)]) -> Vec<(i64, u64)> {
	spec.iter().flat_map(|(ks, n)| ks.clone().map(move |k| (k, *n))).collect()
}

// Sums, twins and tuples.

pub fn goldbach_cyclic(u: &Universe, p: &Params) -> Check {
	let seq = u.cyclic()?;
	let hi = p.bound.unwrap_or(seq.limit()).min(seq.limit());
	let scan = goldbach_scan(&seq, hi)?;
	let mut r = blank("even n", 4, hi);
	let found = scan.failures.iter().map(|&n| Exception::at(n, 0, "no representation")).collect();
	r.judge(found, &Allowed::None);
	let mut s = Series::new(&["n", "representations"]);
	let mut least = u64::MAX;
	for h in 2..=scan.series_hi / 2 {
		let n = 2 * h;
		let g = scan.g[h as usize];
		if n >= 6 {
			least = least.min(g);
		}
		if n <= 20_000 {
			s.push(vec![n as f64, g as f64]);
		}
	}
	// The estimate carries an Euler product, so it is sampled sparsely.
	let mut est = Series::new(&["n", "representations", "estimate"]);
	for n in log_grid(scan.series_hi, 4).into_iter().filter(|n| n % 2 == 0 && *n >= 16) {
		if let Ok(e) = pomerance_goldbach_count(n, DEFAULT_PRIME_BOUND) {
			est.push(vec![n as f64, scan.g[(n / 2) as usize] as f64, e]);
		}
	}
	r.stats.insert("estimate".into(), est);
	r.values.insert("series_hi".into(), scan.series_hi as f64);
	if least != u64::MAX {
		r.values.insert("min_representations_from_6".into(), least as f64);
	}
	r.stats.insert("representations".into(), s);
	Ok(r)
}

fn tuple_report(seq: &IndexedSequence, offsets: &[u64], composite_only: bool, stated_first: &[u64]) -> Check {
	let grid = log_grid(seq.limit(), 4);
	let scan = tuple_scan(seq, offsets, composite_only, 10, &grid)?;
	let mut r = blank("base", 1, seq.limit() - offsets[offsets.len() - 1]);
	r.values.insert("count".into(), scan.count as f64);
	r.records = scan.first.clone();
	if scan.count == 0 {
		downgrade(&mut r, "no tuple found in range".into());
	}
	compare_prefix(&mut r, "first tuples", &scan.first, stated_first);
	let mut s = Series::new(&["x", "count"]);
	for (x, c) in &scan.counting {
		s.push(vec![*x as f64, *c as f64]);
	}
	r.stats.insert("counting".into(), s);
	Ok(r)
}

pub fn twin_cyclic(u: &Universe, _: &Params) -> Check {
	let seq = u.cyclic()?;
	let mut r = tuple_report(&seq, &[0, 2], false, &[])?;
	let mut s = Series::new(&["x", "count", "estimate"]);
	let counting = r.stats.remove("counting").unwrap_or_default();
	for row in counting.rows {
		let est = pomerance_twin_cyclic_count(row[0], DEFAULT_PRIME_BOUND).unwrap_or(f64::NAN);
		s.push(vec![row[0], row[1], est]);
	}
	if let Some(last) = s.rows.last() {
		if last[2].is_finite() {
			r.values.insert("ratio_to_estimate".into(), last[1] / last[2]);
		}
	}
	r.stats.insert("counting".into(), s);
	Ok(r)
}

pub fn cyclic_triplets(u: &Universe, _: &Params) -> Check {
	tuple_report(&*u.cyclic()?, &[0, 2, 4], true, &[141, 213, 319, 391])
}

pub fn cyclic_quintuplets(u: &Universe, _: &Params) -> Check {
	tuple_report(&*u.cyclic()?, &[0, 2, 4, 6, 8], false, &[11, 29, 65, 83, 137, 209, 263])
}

/// Runs of eight exist; a ninth term is always ruled out by divisibility by 9.
pub fn cyclic_8tuples(u: &Universe, _: &Params) -> Check {
	let seq = u.cyclic()?;
	let eight: Vec<u64> = (0..8).map(|i| 2 * i).collect();
	let mut r = tuple_report(&seq, &eight, false, &[])?;
	let nine: Vec<u64> = (0..9).map(|i| 2 * i).collect();
	let nines = tuple_scan(&seq, &nine, false, 3, &[])?;
	r.values.insert("nine_term_count".into(), nines.count as f64);
	let found = nines.first.iter().map(|&b| Exception::at(b, b, "nine-term run")).collect();
	let verdict = r.verdict;
	r.judge(found, &Allowed::None);
	if r.verdict == Verdict::Consistent {
		r.verdict = verdict;
	}
	Ok(r)
}

// Intervals between squares.

fn verified_note(r: &mut ConjectureReport) {
	if r.verdict == Verdict::Consistent {
		r.notes.push(format!("verified n ≤ {}", r.range.hi));
	}
}

pub fn legendre_cyclic(u: &Universe, p: &Params) -> Check {
	let mut r = existence_in_squares(&*u.cyclic()?, 1, p.n_max)?;
	verified_note(&mut r);
	Ok(r)
}

pub fn desboves_cyclic(u: &Universe, p: &Params) -> Check {
	let mut r = existence_in_squares(&*u.cyclic()?, 2, p.n_max)?;
	verified_note(&mut r);
	Ok(r)
}

pub fn desboves_prime(u: &Universe, p: &Params) -> Check {
	let mut r = existence_in_squares(&*u.prime()?, 2, p.n_max)?;
	verified_note(&mut r);
	Ok(r)
}

fn square_counts(seq: &IndexedSequence, n_max: Option<u64>) -> Result<Vec<u64>> {
	let n_max = n_max.unwrap_or_else(|| Boundary::Squares.max_index(seq.limit()));
	interval_counts(seq, Boundary::Squares, None, n_max)
}

fn ratio_points(counts: &[u64], first_n: u64, estimate: impl Fn(f64) -> Result<f64>) -> Vec<(f64, f64)> {
	counts
		.iter()
		.enumerate()
		.filter_map(|(i, &c)| {
			let n = i as f64 + 1.0;
			if (i as u64 + 1) < first_n {
				return None;
			}
			estimate(n).ok().filter(|e| *e > 0.0).map(|e| (n, c as f64 / e))
		})
		.collect()
}

pub fn deligne_squares_prime(u: &Universe, p: &Params) -> Check {
	let counts = square_counts(&*u.prime()?, p.n_max)?;
	let mut r = blank("n", 1, counts.len() as u64);
	compare_prefix(
		&mut r,
		"prime counts",
		&counts,
		&[2, 2, 2, 3, 2, 4, 3, 4, 3, 5, 4, 5, 5, 4, 6, 7, 5, 6, 6, 7, 7, 7, 6, 9, 8],
	);
	let pts = ratio_points(&counts, 2, deligne_square_interval);
	trend(&mut r, "ratio", &pts, 1.0);
	r.stats.insert("counts".into(), counts_series(1, &counts));
	Ok(r)
}

pub fn squares_cyclic_count(u: &Universe, p: &Params) -> Check {
	let counts = square_counts(&*u.cyclic()?, p.n_max)?;
	let mut r = blank("n", 1, counts.len() as u64);
	compare_prefix(&mut r, "cyclic counts", &counts, &[2, 2, 3, 3, 4, 4, 4]);
	let pts = ratio_points(&counts, 1, cyclic_square_interval);
	trend(&mut r, "ratio", &pts, 1.0);
	r.stats.insert("counts".into(), counts_series(1, &counts));
	Ok(r)
}

/// Record lows of the square-interval counts, with their growth exponent
/// held to `b_range` (open below when `open_low`).
fn record_low_report(seq: &IndexedSequence, p: &Params, stated: &[u64], b_lo: f64, open_low: bool, b_hi: f64) -> Check {
	let counts = square_counts(seq, p.n_max)?;
	let mut r = blank("n", 1, counts.len() as u64);
	let rec = record_lows(&counts);
	r.set_records(&rec, stated);
	let confirmed = r.records.clone();
	let mut s = Series::new(&["k", "record"]);
	for (i, &v) in confirmed.iter().enumerate() {
		s.push(vec![(i + 1) as f64, v as f64]);
	}
	r.stats.insert("records".into(), s);
	r.stats.insert("counts".into(), counts_series(1, &counts));
	if confirmed.len() < 2 {
		r.notes.push("too few confirmed records to fit".into());
		return Ok(r);
	}
	let Some(b) = fit_counts(&mut r, "fit", &confirmed) else {
		return Ok(r);
	};
	let low_ok = if open_low { b > b_lo } else { b >= b_lo };
	if !(low_ok && b <= b_hi) {
		downgrade(&mut r, format!("fitted index {b:.4} lies outside the stated range"));
	}
	let top = *confirmed.last().unwrap();
	let counting: Vec<(f64, f64)> =
		counting_function_of(&confirmed, top, 10).into_iter().map(|(m, c)| (m as f64, c as f64)).collect();
	if let Ok(fit) = fit_power_law(&counting) {
		r.values.insert("counting_b".into(), fit.b);
		r.values.insert("inverse_of_fit_b".into(), 1.0 / b);
	}
	let step = if confirmed.len() >= 50 { 25 } else { 1 };
	if let Ok(moments) = moment_series(&confirmed, step) {
		let vf = variance_function(&moments);
		if let Ok(fit) = fit_power_law(&vf) {
			r.values.insert("variance_a".into(), fit.a);
			r.values.insert("variance_b".into(), fit.b);
		}
	}
	Ok(r)
}

pub fn kfold_legendre_prime(u: &Universe, p: &Params) -> Check {
	let stated = [1, 7, 11, 17, 18, 26, 27, 32, 46, 50, 56, 58, 85, 88, 92, 137, 143, 145];
	record_low_report(&*u.prime()?, p, &stated, 1.5, true, 2.0)
}

pub fn kfold_legendre_cyclic(u: &Universe, p: &Params) -> Check {
	let stated = [
		1, 3, 5, 8, 11, 14, 15, 16, 19, 21, 27, 29, 33, 38, 39, 46, 47, 51, 58, 61, 62, 66, 82, 86, 90, 104, 105,
		108, 110, 118, 126, 127, 129, 131, 138, 141, 149, 152, 159, 161, 167, 170, 172, 174, 180, 182, 185, 187,
	];
	record_low_report(&*u.cyclic()?, p, &stated, 1.0, false, 2.0)
}

// Near-square members.

pub fn near_square_cyclic(u: &Universe, _: &Params) -> Check {
	let ns = u.near_square_cyclic()?;
	let mut r = blank("k^2 + 1", 2, ns.limit());
	r.values.insert("count".into(), ns.len() as f64);
	r.records = ns.iter().take(10).collect();
	if let Ok(last) = ns.nth(ns.len()) {
		r.values.insert("last".into(), last as f64);
	}
	if ns.is_empty() {
		downgrade(&mut r, "no near-square member in range".into());
	}
	if u.limit() == 100_000_000 {
		compare_value(&mut r, "count below 10^8", ns.len() as f64, 3786.0, 0.0);
	}
	let values = ns.to_vec();
	let mut s = Series::new(&["x", "count"]);
	for (x, c) in counting_function_of(&values, ns.limit(), 4) {
		s.push(vec![x as f64, c as f64]);
	}
	r.stats.insert("counting".into(), s);
	Ok(r)
}

fn near_square_golubew(ns: &IndexedSequence, power: u32, min: u64, p: &Params) -> Check {
	near_square_intervals(ns, power, min, p.n_max)
}

pub fn golubew_near_square_prime_cube(u: &Universe, p: &Params) -> Check {
	near_square_golubew(&*u.near_square_prime()?, 3, 1, p)
}

pub fn golubew_near_square_prime_quartic(u: &Universe, p: &Params) -> Check {
	near_square_golubew(&*u.near_square_prime()?, 4, 1, p)
}

pub fn golubew_near_square_cyclic_cube(u: &Universe, p: &Params) -> Check {
	near_square_golubew(&*u.near_square_cyclic()?, 3, 1, p)
}

pub fn golubew_near_square_cyclic_quartic(u: &Universe, p: &Params) -> Check {
	near_square_golubew(&*u.near_square_cyclic()?, 4, 2, p)
}

// Half-intervals around squares.

fn oppermann(seq: &IndexedSequence, p: &Params) -> Result<Vec<(u64, u64)>> {
	let n_max = p.n_max.unwrap_or_else(|| oppermann_max_index(seq.limit()));
	if n_max < 2 {
		return Err(Error::InsufficientLimit { have: seq.limit(), need: 6 });
	}
	oppermann_counts(seq, n_max)
}

fn oppermann_series(counts: &[(u64, u64)]) -> Series {
	let mut s = Series::new(&["n", "left", "right"]);
	for (i, &(l, rr)) in counts.iter().enumerate() {
		s.push(vec![(i + 2) as f64, l as f64, rr as f64]);
	}
	s
}

pub fn oppermann_count_prime(u: &Universe, p: &Params) -> Check {
	let counts = oppermann(&*u.prime()?, p)?;
	let mut r = blank("n", 2, counts.len() as u64 + 1);
	for (side, pick) in [("left", 0usize), ("right", 1)] {
		let pts: Vec<(f64, f64)> = counts
			.iter()
			.enumerate()
			.filter_map(|(i, c)| {
				let n = (i + 2) as f64;
				let v = if pick == 0 { c.0 } else { c.1 };
				oppermann_prime_half(n).ok().map(|e| (n, v as f64 / e))
			})
			.collect();
		trend(&mut r, side, &pts, 1.0);
	}
	r.stats.insert("counts".into(), oppermann_series(&counts));
	Ok(r)
}

fn kfold_oppermann(seq: &IndexedSequence, p: &Params, stated: &[(i64, u64)]) -> Check {
	let counts = oppermann(seq, p)?;
	let mins: Vec<u64> = counts.iter().map(|&(l, r)| l.min(r)).collect();
	let mut r = blank("position (n - 1)", 1, mins.len() as u64);
	let k_max = p.k_max.unwrap_or(13);
	let table = threshold_table_with(&mins, 1..=k_max, 1, Convention::Beyond);
	r.set_thresholds(&table, stated);
	r.stats.insert("counts".into(), oppermann_series(&counts));
	Ok(r)
}

pub fn kfold_oppermann_prime(u: &Universe, p: &Params) -> Check {
	let stated = pairs(&[
		(2..=2, 16),
		(3..=3, 36),
		(4..=4, 46),
		(5..=5, 76),
		(6..=7, 79),
		(8..=8, 85),
		(9..=9, 118),
		(10..=10, 136),
		(11..=12, 155),
		(13..=13, 188),
	]);
	kfold_oppermann(&*u.prime()?, p, &stated)
}

pub fn kfold_oppermann_cyclic(u: &Universe, p: &Params) -> Check {
	let stated = pairs(&[
		(2..=2, 4),
		(3..=3, 7),
		(4..=4, 13),
		(5..=5, 16),
		(6..=6, 18),
		(7..=7, 21),
		(8..=8, 25),
		(9..=9, 31),
		(10..=11, 32),
		(12..=12, 40),
		(13..=13, 44),
	]);
	kfold_oppermann(&*u.cyclic()?, p, &stated)
}

pub fn oppermann_cyclic(u: &Universe, p: &Params) -> Check {
	let counts = oppermann(&*u.cyclic()?, p)?;
	let mins: Vec<u64> = counts.iter().map(|&(l, r)| l.min(r)).collect();
	let mut r = existence_report("", "", &mins, 2, 1, &Allowed::None);
	if mins[0] != 1 {
		downgrade(&mut r, format!("least half-interval count at n = 2 is {}, expected 1", mins[0]));
	}
	// From n = 27 on, every half-interval was stated to hold at least 8.
	if let Some(tail) = mins.get(25..).and_then(|t| t.iter().min()) {
		r.values.insert("min_from_27".into(), *tail as f64);
		if *tail < 8 {
			downgrade(&mut r, format!("a half-interval with n >= 27 holds only {tail}"));
		}
	}
	r.stats.insert("halves".into(), oppermann_series(&counts));
	Ok(r)
}

// Intervals between squares of consecutive members.

fn member_square_counts(seq: &IndexedSequence, p: &Params) -> Result<Vec<u64>> {
	let b = Boundary::MemberSquares(seq);
	let n_max = p.n_max.unwrap_or_else(|| b.max_index(seq.limit()));
	if n_max == 0 {
		return Err(Error::InsufficientLimit { have: seq.limit(), need: 9 });
	}
	interval_counts(seq, b, None, n_max)
}

pub fn brocard_kfold_prime(u: &Universe, p: &Params) -> Check {
	let seq = u.prime()?;
	let counts = member_square_counts(&seq, p)?;
	let mut r = blank("n", 1, counts.len() as u64);
	let stated = pairs(&[(4..=5, 2), (6..=6, 3), (7..=9, 5), (10..=11, 7), (12..=16, 10), (17..=20, 13)]);
	let table = threshold_table_with(&counts, 1..=p.k_max.unwrap_or(20), 1, Convention::AtLeast);
	r.set_thresholds(&table, &stated);
	r.stats.insert("counts".into(), counts_series(1, &counts));
	Ok(r)
}

pub fn brocard_cyclic(u: &Universe, p: &Params) -> Check {
	let counts = member_square_counts(&*u.cyclic()?, p)?;
	if counts.len() < 3 {
		return Err(Error::InsufficientLimit { have: u.limit(), need: 170 });
	}
	let mut r = existence_report("", "", &counts[2..], 3, 6, &Allowed::None);
	compare_prefix(
		&mut r,
		"counts",
		&counts,
		&[2, 2, 6, 8, 25, 16, 17, 21, 22, 56, 102, 36, 36, 45, 49, 96, 52, 113, 125, 65, 206, 80, 152, 83, 84],
	);
	r.stats.insert("counts".into(), counts_series(1, &counts));
	Ok(r)
}

pub fn brocard_kfold_cyclic(u: &Universe, p: &Params) -> Check {
	let counts = member_square_counts(&*u.cyclic()?, p)?;
	let mut r = blank("n", 1, counts.len() as u64);
	let table = threshold_table_with(&counts, 1..=p.k_max.unwrap_or(20), 1, Convention::AtLeast);
	r.set_thresholds(&table, &[(2, 1)]);
	r.stats.insert("counts".into(), counts_series(1, &counts));
	Ok(r)
}

// Gap bounds.

fn gap_report(seq: &IndexedSequence, bound: GapBoundSpec, allowed: Allowed) -> Check {
	let mut r = blank("n", 1, seq.len().saturating_sub(1));
	r.judge(gap_violations(seq.iter(), bound), &allowed);
	Ok(r)
}

pub fn schinzel_sqrt_cyclic(u: &Universe, _: &Params) -> Check {
	gap_report(&*u.cyclic()?, GapBoundSpec::SqrtAtMost, Allowed::Indices(vec![3, 5, 11]))
}

pub fn schinzel_log2_cyclic(u: &Universe, _: &Params) -> Check {
	gap_report(&*u.cyclic()?, GapBoundSpec::LogSquaredAtMost, Allowed::Indices(vec![1, 2, 3, 5]))
}

pub fn schinzel_2log_cyclic(u: &Universe, _: &Params) -> Check {
	gap_report(&*u.cyclic()?, GapBoundSpec::TwoLogAtMost, Allowed::Indices(vec![1, 5]))
}

pub fn carneiro_cyclic(u: &Universe, _: &Params) -> Check {
	gap_report(&*u.cyclic()?, GapBoundSpec::Carneiro, Allowed::None)
}

pub fn carneiro_sg(u: &Universe, _: &Params) -> Check {
	gap_report(&*u.sg_cyclic()?, GapBoundSpec::Carneiro, Allowed::None)
}

/// `sqrt(c_{n+1}) - sqrt(c_n)` and its reverse running maximum for the
/// first `n_max` differences.
pub fn delta_sqrt_series(seq: &IndexedSequence, n_max: usize) -> Series {
	let d: Vec<(u64, f64)> = power_differences(seq.iter().take(n_max + 1), 0.5);
	let values: Vec<f64> = d.iter().map(|p| p.1).collect();
	let rcm = reverse_cummax(&values);
	let mut s = Series::new(&["n", "delta_sqrt", "reverse_cummax"]);
	for (i, (n, v)) in d.iter().enumerate() {
		s.push(vec![*n as f64, *v, rcm[i]]);
	}
	s
}

pub fn andrica_cyclic(u: &Universe, _: &Params) -> Check {
	let seq = u.cyclic()?;
	let mut r = gap_report(&seq, GapBoundSpec::DeltaSqrt(Ratio::new(1, 1)?), Allowed::None)?;
	r.stats.insert("delta_sqrt".into(), delta_sqrt_series(&seq, 1000));
	Ok(r)
}

pub fn visser_cyclic(u: &Universe, p: &Params) -> Check {
	let seq = u.cyclic()?;
	let third = Ratio::new(1, 3)?;
	let half = Ratio::new(1, 2)?;
	let eps = p.epsilon.unwrap_or(third);
	if eps.value() <= 0.0 || eps.value() > 0.5 {
		return Err(Error::Param(format!("epsilon {eps} must lie in (0, 1/2]")));
	}
	let stated = |e: Ratio| -> Option<Vec<u64>> {
		let v = e.value();
		if v == third.value() {
			Some(vec![1, 3, 4, 5, 10, 11, 21, 70])
		} else if v == half.value() {
			Some(vec![3, 5, 11])
		} else {
			None
		}
	};
	let found = gap_violations(seq.iter(), GapBoundSpec::DeltaSqrt(eps));
	let mut r = blank("n", 1, seq.len().saturating_sub(1));
	r.values.insert("epsilon".into(), eps.value());
	r.values.insert("n_epsilon".into(), found.last().map_or(0, |e| e.index) as f64);
	match stated(eps) {
		Some(idx) => r.judge(found, &Allowed::Indices(idx)),
		None => r.judge(found, &Allowed::Any),
	}
	// The default run also checks the 1/2 case.
	if p.epsilon.is_none() {
		let at_half = gap_violations(seq.iter(), GapBoundSpec::DeltaSqrt(half));
		let got: Vec<u64> = at_half.iter().map(|e| e.index).collect();
		r.values.insert("n_half".into(), got.last().copied().unwrap_or(0) as f64);
		if got != [3, 5, 11] {
			let extra: Vec<Exception> = at_half.into_iter().filter(|e| ![3, 5, 11].contains(&e.index)).collect();
			if extra.is_empty() {
				downgrade(&mut r, format!("exceptions at 1/2 are {got:?}"));
			} else {
				r.counterexamples.extend(extra);
				r.verdict = Verdict::Refuted;
			}
		}
	}
	Ok(r)
}

fn ribenboim(seq: &IndexedSequence, p: &Params) -> Check {
	let t = p.t.unwrap_or(0.5);
	if !(t > 0.0 && t <= 0.5) {
		return Err(Error::Param(format!("t = {t} must lie in (0, 1/2]")));
	}
	let d = power_differences(seq.iter(), t);
	let mut r = blank("n", 1, d.len() as u64);
	r.values.insert("t".into(), t);
	if d.len() < 20 {
		r.notes.push("too few differences to judge a trend".into());
		return Ok(r);
	}
	let w = d.len() / TAIL_FRACTION;
	let max = |s: &[(u64, f64)]| s.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
	let (head, tail) = (max(&d[..w]), max(&d[d.len() - w..]));
	r.values.insert("head_max".into(), head);
	r.values.insert("tail_max".into(), tail);
	if !(tail < head) {
		downgrade(&mut r, "differences are not shrinking over the scan".into());
	}
	let values: Vec<f64> = d.iter().take(1000).map(|p| p.1).collect();
	let rcm = reverse_cummax(&values);
	let mut s = Series::new(&["n", "difference", "reverse_cummax"]);
	for (i, v) in values.iter().enumerate() {
		s.push(vec![(i + 1) as f64, *v, rcm[i]]);
	}
	r.stats.insert("differences".into(), s);
	Ok(r)
}

pub fn ribenboim_power_prime(u: &Universe, p: &Params) -> Check {
	ribenboim(&*u.prime()?, p)
}

pub fn ribenboim_power_cyclic(u: &Universe, p: &Params) -> Check {
	ribenboim(&*u.cyclic()?, p)
}

/// Universal from `universal_from` on; stated thresholds below that.
fn kmsz(seq: &IndexedSequence, p: &Params, stated: &[(i64, u64)], universal_from: i64) -> Check {
	let ks: Vec<i64> = match p.k {
		Some(k) => vec![k],
		None => (-20..=p.k_max.map_or(universal_from + 2, |k| k as i64)).collect(),
	};
	let last = sqrt_plus_k_thresholds(seq.iter(), &ks);
	let scanned = seq.len().saturating_sub(1);
	let mut r = blank("n", 1, scanned);
	let table = last_violation_table(&last, scanned);
	r.set_thresholds(&table, stated);
	for (&k, &n) in &last {
		if k >= universal_from && n > 0 {
			r.counterexamples.push(Exception::at(n, k as u64, format!("bound with k = {k} fails at n = {n}")));
		}
	}
	if !r.counterexamples.is_empty() {
		r.verdict = Verdict::Refuted;
	}
	Ok(r)
}

pub fn kmsz_prime(u: &Universe, p: &Params) -> Check {
	let stated = pairs(&[(-20..=-17, 263), (-16..=-3, 217), (-2..=-2, 34), (-1..=3, 30)]);
	kmsz(&*u.prime()?, p, &stated, 4)
}

pub fn kmsz_cyclic(u: &Universe, p: &Params) -> Check {
	let n = [216, 208, 176, 176, 159, 141, 127, 120, 109, 98, 83, 70, 70, 70, 70, 70, 23, 21, 21, 11, 11, 11];
	let stated: Vec<(i64, u64)> = n.iter().enumerate().map(|(i, &v)| (i as i64 - 20, v)).collect();
	kmsz(&*u.cyclic()?, p, &stated, 2)
}

// Index powers.

fn index_power(seq: &IndexedSequence, shift: i64, allowed: Allowed) -> Check {
	let scan = check_index_power(seq.iter(), shift);
	let mut r = blank("n", 1, seq.len().saturating_sub(1));
	r.values.insert("maximum".into(), scan.maximum);
	r.values.insert("argmax".into(), scan.argmax as f64);
	r.values.insert("exact_checks".into(), scan.exact_checks as f64);
	r.values.insert("unresolved_ties".into(), scan.unresolved_ties as f64);
	r.judge(scan.exceptions, &allowed);
	Ok(r)
}

pub fn firoozbakht1_cyclic(u: &Universe, _: &Params) -> Check {
	index_power(&*u.cyclic()?, 0, Allowed::Indices(vec![1, 2, 3, 5]))
}

pub fn firoozbakht_sg(u: &Universe, _: &Params) -> Check {
	index_power(&*u.sg_cyclic()?, 0, Allowed::Indices(vec![1, 2, 3, 5]))
}

pub fn firoozbakht2_cyclic(u: &Universe, _: &Params) -> Check {
	index_power(&*u.cyclic()?, -1, Allowed::Indices(vec![1]))
}

pub fn firoozbakht3_cyclic(u: &Universe, p: &Params) -> Check {
	let seq = u.cyclic()?;
	let ks: Vec<u64> = match p.k {
		Some(k) if k >= 1 => vec![k as u64],
		Some(k) => return Err(Error::Param(format!("k = {k} must be positive"))),
		None => (1..=p.k_max.unwrap_or(4)).collect(),
	};
	let mut last = BTreeMap::new();
	for &k in &ks {
		let scan = check_index_power(seq.iter(), k as i64);
		last.insert(k as i64, scan.exceptions.last().map_or(0, |e| e.index));
	}
	let scanned = seq.len().saturating_sub(1);
	let mut r = blank("n", 1, scanned);
	r.set_thresholds(&last_violation_table(&last, scanned), &[(1, 5), (2, 5), (3, 11), (4, 11)]);
	Ok(r)
}

pub fn firoozbakht4_cyclic(u: &Universe, p: &Params) -> Check {
	let seq = u.cyclic()?;
	let stated = [1.4953, 1.4085, 1.3495, 1.3053, 1.2710];
	let k_max = p.k_max.unwrap_or(4);
	let mut r = blank("n", 1, seq.len());
	let mut prev = f64::INFINITY;
	for k in 0..=k_max {
		let scan = check_index_power(seq.iter(), k as i64);
		r.values.insert(format!("max_k{k}"), scan.maximum);
		r.values.insert(format!("argmax_k{k}"), scan.argmax as f64);
		if let Some(&s) = stated.get(k as usize) {
			compare_value(&mut r, &format!("maximum for k = {k}"), scan.maximum, s, 1e-4);
		}
		if !(scan.maximum < prev) {
			r.counterexamples.push(Exception::at(k, scan.argmax, "maxima not decreasing"));
			r.verdict = Verdict::Refuted;
		}
		prev = scan.maximum;
	}
	Ok(r)
}

// Additive and multiplicative inequalities.

fn additive(seq: &IndexedSequence, form: AdditiveForm, allowed: Allowed) -> Check {
	let scan = check_additive(seq.iter(), form);
	let mut r = blank("n", 1 + scan.skipped, scan.skipped + scan.evaluated);
	r.values.insert("evaluated".into(), scan.evaluated as f64);
	r.judge(scan.exceptions, &allowed);
	Ok(r)
}

pub fn rosser_cyclic(u: &Universe, _: &Params) -> Check {
	additive(&*u.cyclic()?, AdditiveForm::RosserLower, Allowed::None)
}

pub fn dusart_cyclic(u: &Universe, _: &Params) -> Check {
	additive(&*u.cyclic()?, AdditiveForm::DusartLower, Allowed::None)
}

fn ishikawa(seq: &IndexedSequence) -> Check {
	let scan = check_additive(seq.iter(), AdditiveForm::Ishikawa);
	let equalities = scan.equalities.clone();
	let mut r = additive(seq, AdditiveForm::Ishikawa, Allowed::Indices(vec![1, 2]))?;
	if r.verdict == Verdict::Consistent && equalities != [1, 2] {
		downgrade(&mut r, format!("the stated exceptions should be equalities, found {equalities:?}"));
	}
	Ok(r)
}

pub fn ishikawa_cyclic(u: &Universe, _: &Params) -> Check {
	ishikawa(&*u.cyclic()?)
}

pub fn ishikawa_sg(u: &Universe, _: &Params) -> Check {
	ishikawa(&*u.sg_cyclic()?)
}

pub fn sum32_cyclic(u: &Universe, _: &Params) -> Check {
	additive(&*u.cyclic()?, AdditiveForm::Sum3VsSum2, Allowed::Indices(vec![1, 2, 3, 4, 5, 8, 9]))
}

pub fn dusart_mandl_cyclic(u: &Universe, _: &Params) -> Check {
	additive(&*u.cyclic()?, AdditiveForm::DusartMandl, Allowed::Indices((1..=5).collect()))
}

pub fn dusart_mandl_sg(u: &Universe, _: &Params) -> Check {
	additive(&*u.sg_cyclic()?, AdditiveForm::DusartMandl, Allowed::Indices((1..=5).collect()))
}

pub fn panaitopol_cyclic(u: &Universe, p: &Params) -> Check {
	let seq = u.cyclic()?;
	let n_max = p.n_max.unwrap_or(100);
	let scan = check_multiplicative(&seq, 3, n_max)?;
	let mut r = blank("m <= n", 3, n_max);
	r.values.insert("pairs_checked".into(), scan.pairs_checked as f64);
	let allowed = std::iter::once([3, 3]).chain((5..=10).map(|n| [5, n])).collect();
	r.judge(scan.exceptions, &Allowed::Pairs(allowed));
	Ok(r)
}

// Limits.

fn limit_checkpoints(len: u64, stated_at: u64) -> Vec<u64> {
	let mut cps = log_grid(len, 10);
	if stated_at <= len {
		cps.push(stated_at);
	}
	cps.sort_unstable();
	cps.dedup();
	cps
}

/// Index at which stated ratios were quoted.
const RATIO_STATED_AT: u64 = 28_488_167;

fn ratio_report(seq: &IndexedSequence, vrba: bool) -> Check {
	let cps = limit_checkpoints(seq.len(), RATIO_STATED_AT);
	let ratios = limit_ratios(seq.iter(), &cps);
	let mut r = blank("n", 1, seq.len());
	let (target, stated) = if vrba { (std::f64::consts::E, 2.7362) } else { (std::f64::consts::E / 2.0, 1.3638) };
	let pick = |x: &super::limits::LimitRatio| if vrba { x.vrba } else { x.hassani };
	let pts: Vec<(f64, f64)> = ratios.iter().map(|x| (x.n as f64, pick(x))).collect();
	trend(&mut r, "ratio", &pts, target);
	if let Some(at) = ratios.iter().find(|x| x.n == RATIO_STATED_AT) {
		compare_value(&mut r, "ratio at the quoted index", pick(at), stated, 1e-4);
	}
	let mut s = Series::new(&["n", "member", "ratio"]);
	for x in &ratios {
		s.push(vec![x.n as f64, x.member as f64, pick(x)]);
	}
	r.stats.insert("ratios".into(), s);
	Ok(r)
}

pub fn vrba_cyclic(u: &Universe, _: &Params) -> Check {
	ratio_report(&*u.cyclic()?, true)
}

pub fn hassani_cyclic(u: &Universe, _: &Params) -> Check {
	ratio_report(&*u.cyclic()?, false)
}

// Sophie Germain views.

pub fn sg_desboves(u: &Universe, p: &Params) -> Check {
	let mut r = existence_in_squares(&*u.sg_cyclic()?, 2, p.n_max)?;
	let counts = r.stats["counts"].column("count").unwrap_or_default();
	let counts: Vec<u64> = counts.iter().map(|&c| c as u64).collect();
	compare_prefix(
		&mut r,
		"counts",
		&counts,
		&[2, 2, 2, 2, 3, 3, 4, 4, 3, 3, 6, 5, 4, 7, 6, 5, 8, 9, 6, 10, 7, 8, 7, 8, 9],
	);
	verified_note(&mut r);
	Ok(r)
}

pub fn sg_mod3(u: &Universe, _: &Params) -> Check {
	let sg = u.sg_cyclic()?;
	let stated: [(u64, [f64; 3]); 2] =
		[(3_441_316, [0.1360, 0.7252, 0.1388]), (6_882_632, [0.1342, 0.7290, 0.1368])];
	let mut cps = log_grid(sg.len(), 10);
	cps.extend(stated.iter().map(|s| s.0).filter(|&n| n <= sg.len()));
	cps.sort_unstable();
	cps.dedup();
	let shares = mod3_shares(sg.iter(), &cps);
	let mut r = blank("n", 1, sg.len());
	r.values.insert("sg_count".into(), sg.len() as f64);
	let mut s = Series::new(&["n", "one", "two", "zero"]);
	for x in &shares {
		s.push(vec![x.n as f64, x.one, x.two, x.zero]);
	}
	r.stats.insert("shares".into(), s);
	for (n, [one, two, zero]) in stated {
		if let Some(x) = shares.iter().find(|x| x.n == n) {
			compare_value(&mut r, &format!("share of 1 mod 3 at {n}"), x.one, one, 5e-5);
			compare_value(&mut r, &format!("share of 2 mod 3 at {n}"), x.two, two, 5e-5);
			compare_value(&mut r, &format!("share of 0 mod 3 at {n}"), x.zero, zero, 5e-5);
		}
	}
	if let Some(last) = shares.last() {
		r.values.insert("one".into(), last.one);
		r.values.insert("two".into(), last.two);
		r.values.insert("zero".into(), last.zero);
		if last.one == 0.0 || last.two == 0.0 || last.zero == 0.0 {
			downgrade(&mut r, "a residue class is empty".into());
		}
	}
	let gap: Vec<(f64, f64)> = shares.iter().filter(|x| x.n >= 100).map(|x| (x.n as f64, x.one - x.zero)).collect();
	trend(&mut r, "one_minus_zero", &gap, 0.0);
	Ok(r)
}

// Consecutive-pair counts between cubes.

#[derive(Clone, Copy)]
enum Pair {
	Twin,
	Cousin,
	Sexy,
}

impl Pair {
	fn gap(self) -> u64 {
		match self {
			Pair::Twin => 2,
			Pair::Cousin => 4,
			Pair::Sexy => 6,
		}
	}

	fn name(self) -> &'static str {
		match self {
			Pair::Twin => "twin",
			Pair::Cousin => "cousin",
			Pair::Sexy => "sexy",
		}
	}
}

struct CubeClaim<'a> {
	from: u64,
	required: u64,
	stated: &'a [(i64, u64)],
	prefix: &'a [u64],
}

fn cube_counts(seq: &IndexedSequence, pair: Pair, p: &Params) -> Result<Vec<u64>> {
	let n_max = p.n_max.unwrap_or_else(|| Boundary::Cubes.max_index(seq.limit()));
	if n_max == 0 {
		return Err(Error::InsufficientLimit { have: seq.limit(), need: 26 });
	}
	interval_counts(seq, Boundary::Cubes, Some(pair.gap()), n_max)
}

fn golubew(seq: &IndexedSequence, pair: Pair, claim: CubeClaim, p: &Params) -> Check {
	let counts = cube_counts(seq, pair, p)?;
	let from = claim.from as usize;
	if counts.len() < from {
		return Err(Error::InsufficientLimit { have: seq.limit(), need: (claim.from + 1).pow(3) });
	}
	let mut r = existence_report("", "", &counts[from - 1..], claim.from, claim.required, &Allowed::None);
	r.range.lo = 1;
	let k_max = p.k_max.unwrap_or_else(|| claim.stated.iter().map(|s| s.0 as u64).max().unwrap_or(1));
	let table = threshold_table_with(&counts, 1..=k_max, 1, Convention::AtLeast);
	r.set_thresholds(&table, claim.stated);
	compare_prefix(&mut r, "counts", &counts, claim.prefix);
	fit_counts(&mut r, pair.name(), &counts);
	r.stats.insert("counts".into(), counts_series(1, &counts));
	Ok(r)
}

/// Fits the other two pair kinds and holds all three exponents to a range.
fn cube_indices(r: &mut ConjectureReport, seq: &IndexedSequence, p: &Params, lo: f64, hi: f64, lo_open: bool) -> Result<()> {
	for pair in [Pair::Cousin, Pair::Sexy] {
		let counts = cube_counts(seq, pair, p)?;
		fit_counts(r, pair.name(), &counts);
	}
	if r.range.hi < MIN_FIT_INTERVALS {
		r.notes.push("too few intervals to judge growth indices".into());
		return Ok(());
	}
	for pair in [Pair::Twin, Pair::Cousin, Pair::Sexy] {
		if let Some(&b) = r.values.get(&format!("{}_b", pair.name())) {
			let low_ok = if lo_open { b > lo } else { b >= lo };
			if !(low_ok && b < hi) {
				downgrade(r, format!("{} growth index {b:.4} lies outside the stated range", pair.name()));
			}
		}
	}
	Ok(())
}

/// Corrected counts of twin primes between cubes.
pub const GOLUBEW_CORRECTED: [(u64, u64); 5] = [(25, 26), (26, 32), (70, 119), (74, 131), (80, 161)];

pub fn golubew_twin_prime_cubes(u: &Universe, p: &Params) -> Check {
	let seq = u.prime()?;
	let stated = pairs(&[
		(1..=2, 1),
		(3..=3, 3),
		(4..=4, 5),
		(5..=5, 8),
		(6..=9, 10),
		(10..=10, 11),
		(11..=11, 13),
		(12..=16, 15),
		(17..=17, 20),
	]);
	let prefix = [2, 2, 3, 3, 5, 5, 4, 6, 5, 11, 9, 12, 11, 12, 17, 17, 16, 19, 16, 18, 24, 22, 17, 22, 26];
	let claim = CubeClaim { from: 1, required: 2, stated: &stated, prefix: &prefix };
	let mut r = golubew(&seq, Pair::Twin, claim, p)?;
	let counts = r.stats["counts"].column("count").unwrap_or_default();
	for (n, c) in GOLUBEW_CORRECTED {
		if let Some(&got) = counts.get(n as usize - 1) {
			compare_value(&mut r, &format!("twin primes between cubes at n = {n}"), got, c as f64, 0.0);
		}
	}
	cube_indices(&mut r, &seq, p, 1.5, 2.0, true)?;
	if let (Some(t), Some(c)) = (r.values.get("twin_b"), r.values.get("cousin_b")) {
		let (t, c) = (*t, *c);
		if r.range.hi >= MIN_FIT_INTERVALS && (t - c).abs() > 0.05 {
			downgrade(&mut r, format!("twin and cousin indices differ: {t:.4} vs {c:.4}"));
		}
	}
	Ok(r)
}

pub fn golubew_cousin_prime_cubes(u: &Universe, p: &Params) -> Check {
	let stated = pairs(&[(1..=2, 2), (3..=3, 8), (4..=7, 9), (8..=10, 12)]);
	let prefix = [0, 2, 2, 5, 3, 5, 8, 3, 11, 7, 12, 7, 15, 14, 13, 10, 19, 13, 20, 21, 22, 23, 24, 28, 31];
	let claim = CubeClaim { from: 2, required: 2, stated: &stated, prefix: &prefix };
	golubew(&*u.prime()?, Pair::Cousin, claim, p)
}

pub fn golubew_sexy_prime_cubes(u: &Universe, p: &Params) -> Check {
	let stated = pairs(&[(1..=2, 3), (3..=5, 5), (6..=6, 6), (7..=7, 7), (8..=11, 11)]);
	let prefix = [0, 0, 3, 2, 5, 6, 7, 11, 7, 15, 11, 12, 19, 15, 20, 21, 30, 27, 29, 33, 30, 37, 43, 36, 52];
	let claim = CubeClaim { from: 3, required: 2, stated: &stated, prefix: &prefix };
	golubew(&*u.prime()?, Pair::Sexy, claim, p)
}

pub fn golubew_twin_cyclic_cubes(u: &Universe, p: &Params) -> Check {
	let seq = u.cyclic()?;
	let stated = pairs(&[(1..=2, 1), (3..=4, 2), (5..=7, 3), (8..=13, 4)]);
	let prefix = [
		2, 4, 7, 13, 17, 22, 32, 41, 44, 57, 70, 80, 99, 107, 122, 132, 142, 171, 189, 220, 221, 239, 271, 292, 310,
	];
	let claim = CubeClaim { from: 1, required: 2, stated: &stated, prefix: &prefix };
	let mut r = golubew(&seq, Pair::Twin, claim, p)?;
	cube_indices(&mut r, &seq, p, 1.0, 2.5, false)?;
	Ok(r)
}

pub fn golubew_cousin_cyclic_cubes(u: &Universe, p: &Params) -> Check {
	let stated = pairs(&[(1..=1, 2), (2..=3, 3), (4..=8, 4), (9..=14, 6)]);
	let prefix = [0, 1, 3, 8, 8, 14, 15, 22, 29, 37, 36, 51, 50, 69, 71, 95, 92, 97, 120, 129, 142, 149, 177, 175, 194];
	let claim = CubeClaim { from: 2, required: 1, stated: &stated, prefix: &prefix };
	golubew(&*u.cyclic()?, Pair::Cousin, claim, p)
}

pub fn golubew_sexy_cyclic_cubes(u: &Universe, p: &Params) -> Check {
	let stated = pairs(&[(1..=2, 5), (3..=4, 6), (5..=7, 7), (8..=8, 10), (9..=13, 11)]);
	let prefix = [0, 0, 1, 0, 2, 4, 7, 7, 9, 8, 13, 13, 19, 17, 16, 23, 38, 44, 36, 42, 46, 58, 54, 67, 70];
	let claim = CubeClaim { from: 5, required: 2, stated: &stated, prefix: &prefix };
	golubew(&*u.cyclic()?, Pair::Sexy, claim, p)
}

// Difference triangles.

fn gilbreath(seq: &IndexedSequence, p: &Params) -> Check {
	// The leading 1 is left out.
	let available = seq.len().saturating_sub(2);
	let depth = p.depth.unwrap_or(SADS_DEFAULT_DEPTH.min(available));
	if depth == 0 {
		return Err(Error::InsufficientLimit { have: seq.limit(), need: 5 });
	}
	let values: Vec<u64> = seq.iter().skip(1).take(depth as usize + 1).collect();
	let mode = p.mode.unwrap_or(SadsMode::Naive);
	let res = sads_verify(&values, depth, mode)?;
	let mut r = blank("row", 1, depth);
	r.values.insert("rows_computed".into(), res.rows_computed as f64);
	let found = res
		.first_failure
		.map(|n| Exception::at(n, *res.first_column.last().unwrap(), "leading entry is not 1"))
		.into_iter()
		.collect();
	r.judge(found, &Allowed::None);
	if mode == SadsMode::Shortcut && res.all_ones && res.rows_computed < depth {
		r.notes.push(format!("rows past {} follow from the 0/2 window", res.rows_computed));
	}
	Ok(r)
}

pub fn gilbreath_cyclic(u: &Universe, p: &Params) -> Check {
	gilbreath(&*u.cyclic()?, p)
}

pub fn gilbreath_sg(u: &Universe, p: &Params) -> Check {
	gilbreath(&*u.sg_cyclic()?, p)
}

// Subadditivity of counting functions.

fn hl2(seq: &IndexedSequence, lower: u64, p: &Params) -> Check {
	let bounds = match p.bound {
		Some(b) => Hl2Bounds::square(lower, b),
		None => Hl2Bounds::by_sum(lower, seq.limit().min(HL2_DEFAULT_SUM)),
	};
	let need = (bounds.m_max.min(bounds.n_max) + bounds.n_max).min(bounds.s_max);
	let table = CountingTable::new(seq, need)?;
	let mode = match p.full_scan {
		Some(true) => Hl2Mode::Full,
		Some(false) => Hl2Mode::PerSumFirst,
		None if bounds.pair_count() <= HL2_FULL_SCAN_PAIRS => Hl2Mode::Full,
		None => Hl2Mode::PerSumFirst,
	};
	let violations = hl2_scan(&table, bounds, mode)?;
	let mut r = blank("m + n", 2 * lower, need);
	r.values.insert("pairs".into(), bounds.pair_count() as f64);
	r.values.insert("violations".into(), violations.len() as f64);
	if mode == Hl2Mode::PerSumFirst {
		r.notes.push("one violating pair per sum".into());
	}
	let found = violations
		.iter()
		.map(|v| {
			Exception::pair(v.m, v.n, format!("C({}) = {} > C({}) + C({}) = {}", v.m + v.n, v.c_sum, v.m, v.n, v.c_m + v.c_n))
		})
		.collect();
	r.judge(found, &Allowed::None);
	Ok(r)
}

pub fn hl2_cyclic(u: &Universe, p: &Params) -> Check {
	hl2(&*u.cyclic()?, 1, p)
}

pub fn hl2_sg_cyclic(u: &Universe, p: &Params) -> Check {
	hl2(&*u.sg_cyclic()?, 1, p)
}

pub fn hl2_sg_prime(u: &Universe, p: &Params) -> Check {
	hl2(&*u.sg_prime()?, 2, p)
}
