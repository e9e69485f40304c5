//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Full-scale items (limits 10^8 and 10^9) run too; each takes seconds. A
//! criterion that cannot hold because the stated data is wrong is printed as
//! FAIL with the evidence, and the evidence itself is what gets asserted: the
//! process exits non-zero only when an attainable item fails or the evidence
//! stops holding.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use cyclics_core::arith::{gcd, is_cyclic_direct, lagneau_check};
use cyclics_core::sequences::{IndexedSequence, Interval};
use cyclics_core::stats::fit_power_law;
use cyclics_core::universe::Universe;
use cyclics_core::verifiers::hl2::{hl2_scan, CountingTable, Hl2Bounds, Hl2Mode};
use cyclics_core::verifiers::limits::mod3_shares;
use cyclics_core::verifiers::sads::SadsMode;
use cyclics_core::verifiers::thresholds::{suffix_min, threshold_table_with, Convention};
use cyclics_core::verifiers::{interval_counts, run_in, Boundary, ConjectureReport, Params, Verdict};
use cyclics_core::{build_cyclic_bitmap, build_prime_bitmap, SieveConfig};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

const E: f64 = std::f64::consts::E;

#[derive(Default)]
struct Outcome {
	failed: Vec<String>,
	unattainable: Vec<String>,
}

impl Outcome {
	fn check(&mut self, ok: bool, what: impl Into<String>) {
		if !ok {
			self.failed.push(what.into());
		}
	}

	fn eq<T: PartialEq + Debug>(&mut self, what: &str, got: T, want: T) {
		if got != want {
			self.failed.push(format!("{what}: got {got:?}, want {want:?}"));
		}
	}

	fn within(&mut self, what: &str, got: f64, lo: f64, hi: f64) {
		self.check((lo..=hi).contains(&got), format!("{what}: {got} outside [{lo}, {hi}]"));
	}

	fn fast(&mut self, what: &str, took: Duration, budget: Duration) {
		self.check(took < budget, format!("{what}: took {took:?}, budget {budget:?}"));
	}

	/// A stated value the data contradicts. `evidence` must hold; it is the
	/// independent confirmation that the statement, not the code, is wrong.
	fn unattainable(&mut self, what: &str, evidence: bool, why: String) {
		if evidence {
			self.unattainable.push(format!("{what}: {why}"));
		} else {
			self.failed.push(format!("{what}: evidence no longer holds ({why})"));
		}
	}
}

fn universe(limit: u64) -> &'static Universe {
	static U6: OnceLock<Universe> = OnceLock::new();
	static U7: OnceLock<Universe> = OnceLock::new();
	static U8: OnceLock<Universe> = OnceLock::new();
	let slot = match limit {
		1_000_000 => &U6,
		10_000_000 => &U7,
		100_000_000 => &U8,
		_ => unreachable!(),
	};
	slot.get_or_init(|| Universe::new(limit).unwrap())
}

fn report(limit: u64, id: &str, params: &Params) -> ConjectureReport {
	run_in(universe(limit), id, params).unwrap_or_else(|e| panic!("{id} at {limit}: {e}"))
}

fn values_of(r: &ConjectureReport) -> BTreeSet<u64> {
	r.exceptions.iter().map(|e| e.value).collect()
}

fn indices_of(r: &ConjectureReport) -> BTreeSet<u64> {
	r.exceptions.iter().map(|e| e.index).collect()
}

fn set(v: &[u64]) -> BTreeSet<u64> {
	v.iter().copied().collect()
}

// Trial-division oracles sharing no code with the library.
fn totient(n: u64) -> u64 {
	let (mut m, mut r, mut p) = (n, n, 2);
	while p * p <= m {
		if m % p == 0 {
			while m % p == 0 {
				m /= p;
			}
			r -= r / p;
		}
		p += 1;
	}
	if m > 1 {
		r -= r / m;
	}
	r
}

fn prime(n: u64) -> bool {
	n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn sieve_correctness() -> Outcome {
	let mut o = Outcome::default();
	let start = Instant::now();
	let fixture: Vec<u64> =
		include_str!("data/cyclic_prefix_10000.txt").lines().map(|l| l.parse().unwrap()).collect();
	let bitmap = build_cyclic_bitmap(&SieveConfig::new(100_000)).unwrap();
	let first: Vec<u64> = bitmap.iter().take(10_000).collect();
	o.check(first == fixture, "first 10^4 cyclics differ from the fixture");
	let mut disagreements = 0;
	for n in 1..=100_000 {
		let direct = is_cyclic_direct(n).unwrap();
		if bitmap.contains(n) != direct || lagneau_check(n).unwrap() != direct {
			disagreements += 1;
		}
	}
	o.eq("n <= 10^5 where sieve, gcd and mod-pow routes disagree", disagreements, 0);
	o.fast("fixture and three-way check", start.elapsed(), Duration::from_secs(10));
	o
}

fn counting_functions() -> Outcome {
	let mut o = Outcome::default();
	o.eq("C(10^8 - 1)", universe(100_000_000).cyclic().unwrap().len(), 28_488_167);
	let primes = build_prime_bitmap(&SieveConfig::new(999_999_999)).unwrap();
	o.eq("pi(10^9 - 1)", primes.len(), 50_847_534);
	drop(primes);
	let u = universe(1_000_000);
	let (c, p) = (1..1_000_000u64).fold((0, 0), |(c, p), n| {
		let is_prime = prime(n);
		(c + (is_prime || gcd(n, totient(n)) == 1) as u64, p + is_prime as u64)
	});
	o.eq("C(10^6 - 1) against trial division", u.cyclic().unwrap().len(), c);
	o.eq("pi(10^6 - 1) against trial division", u.prime().unwrap().len(), p);
	o
}

fn cyclic_subadditivity_fails() -> Outcome {
	let mut o = Outcome::default();
	let r = report(1_000_000, "hl2_cyclic", &Params { bound: Some(600), ..Params::default() });
	o.eq("verdict", r.verdict, Verdict::Refuted);
	match r.counterexamples.iter().find(|e| e.pair == Some([209, 389])) {
		Some(e) => o.eq("violation at (209, 389)", e.detail.as_str(), "C(598) = 200 > C(209) + C(389) = 199"),
		None => o.check(false, "pair (209, 389) not reported"),
	}
	o
}

fn exception_lists() -> Outcome {
	let mut o = Outcome::default();
	for limit in [1_000_000, 100_000_000] {
		let at = |id: &str| report(limit, id, &Params::default());
		let tag = |what: &str| format!("{what} at {limit}");
		o.eq(&tag("square-root gap exceptions"), values_of(&at("schinzel_sqrt_cyclic")), set(&[3, 7, 23]));
		o.eq(&tag("double-log gap exceptions"), values_of(&at("schinzel_2log_cyclic")), set(&[1, 7]));
		o.eq(&tag("root difference 1/3 exceptions"), values_of(&at("visser_cyclic")), set(&[1, 3, 5, 7, 19, 23, 53, 199]));
		o.eq(&tag("index root increases"), indices_of(&at("firoozbakht1_cyclic")), set(&[1, 2, 3, 5]));
		o.eq(&tag("three-vs-two failures"), indices_of(&at("sum32_cyclic")), set(&[1, 2, 3, 4, 5, 8, 9]));
		o.eq(&tag("mean-below-half reversals"), indices_of(&at("dusart_mandl_cyclic")), set(&[1, 2, 3, 4, 5]));

		let got: BTreeSet<[u64; 2]> = at("panaitopol_cyclic").exceptions.iter().filter_map(|e| e.pair).collect();
		let want: BTreeSet<[u64; 2]> = [[3, 3], [5, 5], [5, 6], [5, 7], [5, 8], [5, 9], [5, 10]].into();
		if got == want {
			continue;
		}
		// The pair (3, 4) alone rules out the stated set: c_12 > c_3 c_4.
		let c = universe(limit).cyclic().unwrap();
		let (c3, c4, c12) = (c.nth(3).unwrap(), c.nth(4).unwrap(), c.nth(12).unwrap());
		o.unattainable(
			&tag("index product pairs"),
			got.contains(&[3, 4]) && (c3, c4, c12) == (3, 5, 29) && c12 > c3 * c4,
			format!(
				"{} reversed pairs, not the stated 7; e.g. c_12 = {c12} > c_3 c_4 = {}",
				got.len(),
				c3 * c4
			),
		);
	}
	o
}

fn interval_fixtures() -> Outcome {
	let mut o = Outcome::default();
	let u = universe(1_000_000);
	let (c, p) = (u.cyclic().unwrap(), u.prime().unwrap());
	o.eq("primes in (36, 49)", interval_counts(&p, Boundary::Squares, None, 6).unwrap()[5], 4);
	o.eq("cyclics between squares, n = 1..7", interval_counts(&c, Boundary::Squares, None, 7).unwrap(), vec![
		2, 2, 3, 3, 4, 4, 4,
	]);
	o.eq("cyclics in (9, 25)", c.count_in(Interval::Open(9, 25)), 6);
	o.eq("twin cyclics between cubes, n = 1..5", interval_counts(&c, Boundary::Cubes, Some(2), 5).unwrap(), vec![
		2, 4, 7, 13, 17,
	]);
	o.eq("twin primes in (70^3, 71^3)", interval_counts(&p, Boundary::Cubes, Some(2), 70).unwrap()[69], 119);
	o
}

fn confirmed(r: &ConjectureReport, k: i64) -> Option<u64> {
	match r.provisional.get(&k) {
		Some(false) => r.thresholds.get(&k).copied(),
		_ => None,
	}
}

/// Confirmed entries must equal the stated ones; at full scale all must be confirmed.
fn compare_table(o: &mut Outcome, what: &str, r: &ConjectureReport, stated: &[(i64, u64)], full: bool) {
	for &(k, want) in stated {
		match confirmed(r, k) {
			Some(got) => o.eq(&format!("{what} N({k})"), got, want),
			None => o.check(!full, format!("{what} N({k}) not confirmed at full scale")),
		}
	}
}

fn threshold_tables() -> Outcome {
	let mut o = Outcome::default();
	let opp_cyclic: Vec<(i64, u64)> =
		(2..=13).zip([4, 7, 13, 16, 18, 21, 25, 31, 32, 32, 40, 44]).filter(|&(k, _)| k != 10).collect();
	let kmsz: Vec<(i64, u64)> = (-20..=1)
		.zip([216, 208, 176, 176, 159, 141, 127, 120, 109, 98, 83, 70, 70, 70, 70, 70, 23, 21, 21, 11, 11, 11])
		.collect();
	for (limit, full) in [(1_000_000, false), (100_000_000, true)] {
		let at = |id: &str| report(limit, id, &Params::default());
		let tag = |what: &str| format!("{what} at {limit}");
		compare_table(&mut o, &tag("Oppermann primes"), &at("kfold_oppermann_prime"), &[(2, 16), (3, 36)], full);
		let opp = at("kfold_oppermann_cyclic");
		compare_table(&mut o, &tag("Oppermann cyclics"), &opp, &opp_cyclic, full);
		let k = at("kmsz_cyclic");
		compare_table(&mut o, &tag("KMSZ cyclics"), &k, &kmsz, full);
		for k2 in 2..=4 {
			o.eq(&tag(&format!("KMSZ cyclics violations for k = {k2}")), k.thresholds.get(&k2).copied(), Some(0));
		}
		compare_table(&mut o, &tag("Brocard primes"), &at("brocard_kfold_prime"), &[(4, 2), (6, 3)], full);

		// Stated N(10) = 32; direct counts at n = 32 and 33 (positions 31 and 32).
		if confirmed(&opp, 10) != Some(32) {
			let c = universe(limit).cyclic().unwrap();
			let halves = |n: u64| {
				let sq = n * n;
				(c.count_in(Interval::Open(sq - n, sq)), c.count_in(Interval::Open(sq, sq + n)))
			};
			let (at32, at33) = (halves(32), halves(33));
			o.unattainable(
				&tag("Oppermann cyclics N(10)"),
				confirmed(&opp, 10) == Some(31) && at33 == (10, 11) && at32.0.min(at32.1) < 10,
				format!(
					"stated 32, but n = 33 already has {:?} cyclics in its halves and n = 32 has {at32:?}, so N(10) = 31",
					at33
				),
			);
		}
	}
	o
}

fn limit_ratios() -> Outcome {
	let mut o = Outcome::default();
	let ratio = |limit, id: &str| report(limit, id, &Params::default()).values["ratio_last"];
	o.within("member over geometric mean at 10^8", ratio(100_000_000, "vrba_cyclic"), 2.70, 2.78);
	o.within("arithmetic over geometric mean at 10^8", ratio(100_000_000, "hassani_cyclic"), 1.35, 1.38);
	o.within("member over geometric mean at 10^6", ratio(1_000_000, "vrba_cyclic"), 0.9 * E, 1.1 * E);
	o.within("arithmetic over geometric mean at 10^6", ratio(1_000_000, "hassani_cyclic"), 0.45 * E, 0.55 * E);
	o
}

fn sg_machinery() -> Outcome {
	let mut o = Outcome::default();
	let sg = universe(1_000_000).sg_cyclic().unwrap();
	o.eq("first 10 SG cyclics", sg.prefix(10).unwrap(), vec![1, 2, 3, 5, 7, 11, 15, 17, 23, 29]);
	let sg = universe(100_000_000).sg_cyclic().unwrap();
	o.eq("SG cyclics with partner below 10^8", sg.len(), 6_882_632);
	let n = 3_441_316;
	match mod3_shares(sg.iter(), &[n]).first() {
		Some(s) => {
			o.within("share of 1 mod 3", s.one, 0.1360 - 0.01, 0.1360 + 0.01);
			o.within("share of 2 mod 3", s.two, 0.7252 - 0.01, 0.7252 + 0.01);
			o.within("share of 0 mod 3", s.zero, 0.1388 - 0.01, 0.1388 + 0.01);
		}
		None => o.check(false, format!("fewer than {n} SG cyclics")),
	}
	o
}

fn fits() -> Outcome {
	let mut o = Outcome::default();
	let (a, b) = (0.8373, 1.9507);
	let pts: Vec<(f64, f64)> = (1..=200).map(|n| (n as f64, a * (n as f64).powf(b))).collect();
	let fit = fit_power_law(&pts).unwrap();
	o.check(((fit.a - a) / a).abs() < 1e-12, format!("synthetic a = {}", fit.a));
	o.check(((fit.b - b) / b).abs() < 1e-12, format!("synthetic b = {}", fit.b));
	let r = report(10_000_000, "golubew_twin_cyclic_cubes", &Params::default());
	o.eq("cube intervals fitted", r.range.hi, 214);
	for (name, want) in [("twin", 1.950), ("cousin", 1.983), ("sexy", 2.034)] {
		o.within(&format!("{name} index"), r.values[&format!("{name}_b")], want - 0.1, want + 0.1);
	}
	o
}

fn difference_triangles() -> Outcome {
	let mut o = Outcome::default();
	for id in ["gilbreath_cyclic", "gilbreath_sg"] {
		let naive = report(10_000_000, id, &Params { depth: Some(10_000), ..Params::default() });
		o.eq(&format!("{id} naive to 10^4"), (naive.verdict, naive.range.hi), (Verdict::Consistent, 10_000));
		let quick = Params { depth: Some(10_000), mode: Some(SadsMode::Shortcut), ..Params::default() };
		o.eq(&format!("{id} shortcut agrees"), report(10_000_000, id, &quick).verdict, naive.verdict);
		let start = Instant::now();
		let deep = Params { depth: Some(100_000), mode: Some(SadsMode::Shortcut), ..Params::default() };
		o.eq(&format!("{id} shortcut to 10^5"), report(10_000_000, id, &deep).verdict, Verdict::Consistent);
		o.fast(&format!("{id} shortcut to 10^5"), start.elapsed(), Duration::from_secs(60));
	}
	o
}

fn sg_count_oracle(upto: u64) -> u64 {
	(1..=upto).filter(|&s| is_cyclic_direct(s).unwrap() && is_cyclic_direct(2 * s + 1).unwrap()).count() as u64
}

fn property_suites() -> Outcome {
	let mut o = Outcome::default();
	let mut runner = TestRunner::deterministic();
	let arrays = prop::collection::vec(0u64..40, 1..=1000);
	for _ in 0..300 {
		let v = arrays.new_tree(&mut runner).unwrap().current();
		let mins = suffix_min(&v);
		let table = threshold_table_with(&v, 1..=41, 1, Convention::AtLeast);
		for i in 0..v.len() {
			if mins[i] != *v[i..].iter().min().unwrap() {
				o.check(false, "suffix minimum disagrees with brute force");
			}
		}
		for k in 1..=41u64 {
			let brute = (0..v.len()).find(|&i| v[i..].iter().all(|&x| x >= k)).map(|i| i as u64 + 1);
			if table.get(k as i64) != brute {
				o.check(false, format!("threshold N({k}) disagrees with brute force"));
			}
		}
	}

	let c = universe(1_000_000).cyclic().unwrap();
	let bitmap = c.bitmap().unwrap();
	let (ks, xs) = (1..=bitmap.len(), 1..=bitmap.limit());
	let mut bad = 0;
	for _ in 0..100_000 {
		let k = ks.new_tree(&mut runner).unwrap().current();
		let x = xs.new_tree(&mut runner).unwrap().current();
		let s = bitmap.select(k).unwrap();
		let r = bitmap.count_leq(x);
		bad += (bitmap.count_leq(s) != k || !bitmap.contains(s)) as u32;
		bad += (r > 0 && bitmap.select(r).unwrap() > x) as u32;
	}
	o.eq("rank/select duality failures in 10^5 queries", bad, 0);

	let one = build_cyclic_bitmap(&SieveConfig::new(999_999).with_workers(1)).unwrap();
	for w in [2, 4, 8] {
		let many = build_cyclic_bitmap(&SieveConfig::new(999_999).with_workers(w)).unwrap();
		o.check(one == *Arc::clone(bitmap) && one == many, format!("bitmap differs with {w} workers"));
	}

	let sg: Arc<IndexedSequence> = universe(1_000_000).sg_cyclic().unwrap();
	let table = CountingTable::new(&sg, 20_000).unwrap();
	let found = hl2_scan(&table, Hl2Bounds::square(1, 10_000), Hl2Mode::PerSumFirst).unwrap();
	if let Some(v) = found.first() {
		// Recount every SG cyclic up to m + n from gcd(n, phi(n)) alone.
		let (cs, cm, cn) = (sg_count_oracle(v.m + v.n), sg_count_oracle(v.m), sg_count_oracle(v.n));
		o.unattainable(
			"no SG-cyclic subadditivity counterexample with m, n <= 10^4",
			(v.m, v.n) == (31, 3928) && (cs, cm, cn) == (v.c_sum, v.c_m, v.c_n) && cs > cm + cn,
			format!(
				"{} violating sums; first C({}) = {cs} > C({}) + C({}) = {}, recounted independently",
				found.len(),
				v.m + v.n,
				v.m,
				v.n,
				cm + cn
			),
		);
	}
	o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
	let criteria: [Criterion; 11] = [
		("sieve correctness", sieve_correctness),
		("counting functions", counting_functions),
		("subadditivity refuted for cyclics", cyclic_subadditivity_fails),
		("exception lists", exception_lists),
		("interval counts", interval_fixtures),
		("threshold tables", threshold_tables),
		("limit ratios", limit_ratios),
		("SG cyclics", sg_machinery),
		("power-law fits", fits),
		("difference triangles", difference_triangles),
		("property suites", property_suites),
	];
	let mut broken = 0;
	let mut unmet = 0;
	for (i, (name, run)) in criteria.iter().enumerate() {
		let start = Instant::now();
		let o = run();
		let status = if o.failed.is_empty() && o.unattainable.is_empty() { "PASS" } else { "FAIL" };
		println!("{status} {:>2} {name} [{:.1?}]", i + 1, start.elapsed());
		for f in &o.failed {
			println!("       - {f}");
		}
		for u in &o.unattainable {
			println!("       - unattainable, stated data contradicted: {u}");
		}
		broken += !o.failed.is_empty() as usize;
		unmet += (o.failed.is_empty() && !o.unattainable.is_empty()) as usize;
	}
	println!(
		"{} passed, {unmet} failed on contradicted statements, {broken} failed",
		criteria.len() - unmet - broken
	);
	if broken > 0 {
		std::process::exit(1);
	}
}
