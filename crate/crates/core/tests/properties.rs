//! Randomised invariants checked against brute-force oracles.

use std::sync::OnceLock;

use cyclics_core::asymptotics::{erdos_count, pollack_count};
use cyclics_core::cache::{read_bitmap, write_bitmap};
use cyclics_core::stats::{fit_power_law, moment_series};
use cyclics_core::verifiers::hl2::{hl2_scan, CountingTable, Hl2Bounds, Hl2Mode};
use cyclics_core::verifiers::sads::{sads_verify, SadsMode};
use cyclics_core::verifiers::thresholds::{
	record_lows_with, suffix_min, threshold_table_with, Convention,
};
use cyclics_core::sequences::IndexedSequence;
use cyclics_core::{build_cyclic_bitmap, Bitmap, BitmapKind, SieveConfig};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn cyclics() -> &'static Bitmap {
	static B: OnceLock<Bitmap> = OnceLock::new();
	B.get_or_init(|| build_cyclic_bitmap(&SieveConfig::new(1_000_000)).unwrap())
}

proptest! {
	#![proptest_config(ProptestConfig::with_cases(256))]

	#[test]
	fn suffix_min_matches_brute(values in prop::collection::vec(0u64..50, 1..1000)) {
		let got = suffix_min(&values);
		for i in 0..values.len() {
			prop_assert_eq!(got[i], *values[i..].iter().min().unwrap());
		}
	}

	#[test]
	fn thresholds_match_brute(values in prop::collection::vec(0u64..30, 1..1000), first in 1u64..3) {
		let ks = 1..=32u64;
		let at_least = threshold_table_with(&values, ks.clone(), first, Convention::AtLeast);
		let beyond = threshold_table_with(&values, ks.clone(), first, Convention::Beyond);
		for k in ks {
			// Least position from which every count reaches k.
			let pos = (0..values.len()).find(|&i| values[i..].iter().all(|&v| v >= k));
			prop_assert_eq!(at_least.get(k as i64), pos.map(|p| first + p as u64));
			// Last position whose count is below k.
			let last = values.iter().rposition(|&v| v < k);
			let expect = pos.map(|_| last.map_or(first - 1, |l| first + l as u64));
			prop_assert_eq!(beyond.get(k as i64), expect);
		}
	}

	#[test]
	fn record_lows_match_brute(values in prop::collection::vec(0u64..20, 1..1000)) {
		let literal = record_lows_with(&values, 1, false);
		let expect: Vec<u64> = (0..values.len())
			.filter(|&i| values[i + 1..].iter().all(|&v| values[i] <= v))
			.map(|i| i as u64 + 1)
			.collect();
		prop_assert_eq!(literal.indices(), expect.clone());
		// One record per level: the first literal record at each new count.
		let mut level = None;
		let dedup: Vec<u64> = expect
			.into_iter()
			.filter(|&i| {
				let c = values[i as usize - 1];
				let keep = level.is_none_or(|l| c > l);
				if keep {
					level = Some(c);
				}
				keep
			})
			.collect();
		prop_assert_eq!(record_lows_with(&values, 1, true).indices(), dedup);
	}

	#[test]
	fn rank_select_on_random_words(words in prop::collection::vec(any::<u64>(), 1..40), cut in 0u64..64) {
		let limit = (64 * words.len() as u64).saturating_sub(cut).max(1);
		let b = Bitmap::from_fn(BitmapKind::Cyclic, limit, |n| {
			let i = n - 1;
			words[(i / 64) as usize] >> (i % 64) & 1 == 1
		});
		let mut count = 0;
		for n in 1..=limit {
			if b.contains(n) {
				count += 1;
				prop_assert_eq!(b.select(count).unwrap(), n);
			}
			prop_assert_eq!(b.count_leq(n), count);
		}
		prop_assert_eq!(b.len(), count);
		prop_assert!(b.select(count + 1).is_err());
	}

	#[test]
	fn fit_is_scale_equivariant(a in 0.01f64..100.0, b in -3.0f64..3.0, c in 0.001f64..1000.0,
		noise in prop::collection::vec(-0.2f64..0.2, 20)) {
		let pts: Vec<(f64, f64)> =
			noise.iter().enumerate().map(|(i, e)| { let x = (i + 2) as f64; (x, a * x.powf(b) * e.exp()) }).collect();
		let base = fit_power_law(&pts).unwrap();
		let scaled: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (x, c * y)).collect();
		let fit = fit_power_law(&scaled).unwrap();
		prop_assert!((fit.b - base.b).abs() < 1e-9);
		prop_assert!((fit.a / (c * base.a) - 1.0).abs() < 1e-9);
		prop_assert!((fit.r2 - base.r2).abs() < 1e-9);
	}

	#[test]
	fn exact_power_laws_are_recovered(a in 0.01f64..100.0, b in -3.0f64..3.0) {
		let pts: Vec<(f64, f64)> = (1..=50).map(|i| { let x = i as f64 * 7.0; (x, a * x.powf(b)) }).collect();
		let fit = fit_power_law(&pts).unwrap();
		prop_assert!((fit.a / a - 1.0).abs() < 1e-12);
		prop_assert!((fit.b - b).abs() < 1e-12 * b.abs().max(1.0));
	}

	#[test]
	fn moments_match_naive(values in prop::collection::vec(0u64..1_000_000, 1..300), step in 1usize..20) {
		for m in moment_series(&values, step).unwrap() {
			let xs: Vec<f64> = values[..m.n].iter().map(|&v| v as f64).collect();
			let mean = xs.iter().sum::<f64>() / m.n as f64;
			let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / m.n as f64;
			prop_assert!((m.mean - mean).abs() <= 1e-9 * mean.max(1.0));
			prop_assert!((m.variance - var).abs() <= 1e-6 * var.max(1.0));
		}
	}

	#[test]
	fn subadditivity_scan_matches_brute(raw in prop::collection::vec(1u64..200, 1..80), bound in 2u64..60) {
		let mut values = raw;
		values.sort_unstable();
		values.dedup();
		let seq = IndexedSequence::from_sorted("s", 200, values.clone()).unwrap();
		let table = CountingTable::new(&seq, 2 * bound).unwrap();
		let got: Vec<(u64, u64)> = hl2_scan(&table, Hl2Bounds::square(1, bound), Hl2Mode::Full)
			.unwrap().iter().map(|v| (v.m, v.n)).collect();
		let c = |x: u64| values.iter().filter(|&&v| v <= x).count();
		let mut expect = Vec::new();
		for s in 2..=2 * bound {
			for m in 1..=s / 2 {
				let n = s - m;
				if n <= bound && c(s) > c(m) + c(n) {
					expect.push((m, n));
				}
			}
		}
		prop_assert_eq!(got, expect);
	}

	#[test]
	fn sads_modes_agree(gaps in prop::collection::vec(prop::sample::select(vec![2u64, 4, 6, 8, 10, 12]), 40..200)) {
		// 2 followed by odd numbers with even gaps, like the primes.
		let mut values = vec![2, 3];
		for g in gaps {
			values.push(values.last().unwrap() + g);
		}
		let depth = values.len() as u64 - 1;
		let naive = sads_verify(&values, depth, SadsMode::Naive).unwrap();
		let short = sads_verify(&values, depth, SadsMode::Shortcut).unwrap();
		prop_assert_eq!(naive.all_ones, short.all_ones);
		prop_assert_eq!(naive.first_failure, short.first_failure);
	}

	#[test]
	fn erdos_exceeds_pollack(e in 16f64..300.0) {
		// Past e^(e^e) both estimates are positive and the correction lowers the count.
		let x = 10f64.powf(e);
		let (er, po) = (erdos_count(x).unwrap(), pollack_count(x).unwrap());
		prop_assert!(po > 0.0 && po < er);
		prop_assert!(erdos_count(x * 10.0).unwrap() > er);
	}
}

proptest! {
	#![proptest_config(ProptestConfig::with_cases(8))]

	#[test]
	fn cache_round_trip(limit in 1u64..200_000) {
		let dir = tempfile::tempdir().unwrap();
		let path = dir.path().join("c.bin");
		let b = cyclics().truncated(limit).unwrap();
		write_bitmap(&path, &b).unwrap();
		prop_assert_eq!(read_bitmap(&path, BitmapKind::Cyclic).unwrap(), b);
	}
}

#[test]
fn rank_select_duality_on_cyclics() {
	let b = cyclics();
	let mut runner = proptest::test_runner::TestRunner::deterministic();
	let len = b.len();
	for _ in 0..100_000 {
		let k = (1..=len).new_tree(&mut runner).unwrap().current();
		let x = (1..=b.limit()).new_tree(&mut runner).unwrap().current();
		let s = b.select(k).unwrap();
		assert!(b.contains(s));
		assert_eq!(b.count_leq(s), k);
		assert_eq!(b.count_leq(s - 1), k - 1);
		let r = b.count_leq(x);
		if r > 0 {
			assert!(b.select(r).unwrap() <= x);
		}
		if r < len {
			assert!(b.select(r + 1).unwrap() > x);
		}
	}
}
