//! The closed list of checks, addressable by id.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::universe::Universe;

use super::checks as c;
use super::gaps::Ratio;
use super::report::ConjectureReport;
use super::sads::SadsMode;

/// Optional knobs; each check reads the ones it understands and falls back
/// to its own defaults.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
	/// Single k for shifted bounds (`sqrt + k`, index shifts).
	pub k: Option<i64>,
	/// Largest k in threshold tables.
	pub k_max: Option<u64>,
	pub epsilon: Option<Ratio>,
	/// Exponent for power differences.
	pub t: Option<f64>,
	/// Difference-triangle depth.
	pub depth: Option<u64>,
	pub mode: Option<SadsMode>,
	/// Square bound on both pair coordinates, or the largest sum scanned.
	pub bound: Option<u64>,
	/// Every violating pair instead of one per sum.
	pub full_scan: Option<bool>,
	/// Largest interval index.
	pub n_max: Option<u64>,
}

pub type CheckFn = fn(&Universe, &Params) -> Result<ConjectureReport>;

pub struct Entry {
	pub id: &'static str,
	pub title: &'static str,
	/// Statements this entry settles; a statement with several parts lists
	/// each part under the entry that checks it.
	pub covers: &'static [&'static str],
	pub check: CheckFn,
}

macro_rules! entry {
	($id:ident, $title:expr, [$($cover:expr),* $(,)?]) => {
		Entry { id: stringify!($id), title: $title, covers: &[$($cover),*], check: c::$id }
	};
}

pub static REGISTRY: &[Entry] = &[
	entry!(goldbach_cyclic, "every even n > 2 is a sum of two cyclics", ["goldbach for cyclics"]),
	entry!(twin_cyclic, "infinitely many c with c + 2 cyclic", ["twin cyclics"]),
	entry!(cyclic_triplets, "infinitely many composite cyclic triplets c, c + 2, c + 4", ["composite cyclic triplets"]),
	entry!(cyclic_quintuplets, "infinitely many cyclic runs c, c + 2, ..., c + 8", ["cyclic quintuplets"]),
	entry!(cyclic_8tuples, "runs of eight cyclics with step 2 exist, runs of nine do not", []),
	entry!(legendre_cyclic, "a cyclic between consecutive squares", ["one cyclic between squares"]),
	entry!(desboves_prime, "two primes between consecutive squares", []),
	entry!(desboves_cyclic, "two cyclics between consecutive squares", ["two cyclics between squares"]),
	entry!(deligne_squares_prime, "primes between n^2 and (n+1)^2 grow like n / log n", ["prime count between squares"]),
	entry!(squares_cyclic_count, "cyclics between consecutive squares follow the iterated-log estimate", [
		"cyclic count between squares"
	]),
	entry!(kfold_legendre_prime, "record lows of prime counts between squares", [
		"prime record lows between squares",
		"growth index of prime record lows",
	]),
	entry!(kfold_legendre_cyclic, "record lows of cyclic counts between squares", [
		"cyclic record lows between squares",
		"growth index of cyclic record lows",
	]),
	entry!(near_square_cyclic, "infinitely many cyclics of the form k^2 + 1", ["near-square cyclics"]),
	entry!(golubew_near_square_prime_cube, "a near-square prime between consecutive cubes", []),
	entry!(golubew_near_square_prime_quartic, "a near-square prime between consecutive fourth powers", []),
	entry!(golubew_near_square_cyclic_cube, "a near-square cyclic between consecutive cubes", [
		"near-square cyclics between powers: cubes"
	]),
	entry!(golubew_near_square_cyclic_quartic, "two near-square cyclics between consecutive fourth powers", [
		"near-square cyclics between powers: fourth powers"
	]),
	entry!(oppermann_count_prime, "primes in each half around n^2 grow like n / (2 log n)", [
		"prime count in half-intervals"
	]),
	entry!(kfold_oppermann_prime, "thresholds for k primes in each half around n^2", ["k primes in half-intervals"]),
	entry!(kfold_oppermann_cyclic, "thresholds for k cyclics in each half around n^2", ["k cyclics in half-intervals"]),
	entry!(oppermann_cyclic, "a cyclic in each half around n^2", ["one cyclic in each half-interval"]),
	entry!(brocard_kfold_prime, "thresholds for k primes between squares of consecutive primes", [
		"k primes between prime squares"
	]),
	entry!(brocard_cyclic, "six cyclics between squares of consecutive cyclics", ["cyclics between cyclic squares"]),
	entry!(brocard_kfold_cyclic, "thresholds for k cyclics between squares of consecutive cyclics", [
		"k cyclics between cyclic squares"
	]),
	entry!(schinzel_sqrt_cyclic, "gaps at most sqrt(c_n)", ["square-root gap bound"]),
	entry!(schinzel_log2_cyclic, "gaps at most (log c_n)^2", ["squared-log gap bound"]),
	entry!(schinzel_2log_cyclic, "gaps at most 2 log c_n", ["double-log gap bound"]),
	entry!(golubew_twin_prime_cubes, "twin primes between consecutive cubes", [
		"twin primes between cubes",
		"growth indices of prime pairs between cubes",
	]),
	entry!(golubew_cousin_prime_cubes, "cousin primes between consecutive cubes", ["cousin primes between cubes"]),
	entry!(golubew_sexy_prime_cubes, "sexy primes between consecutive cubes", ["sexy primes between cubes"]),
	entry!(golubew_twin_cyclic_cubes, "twin cyclics between consecutive cubes", [
		"twin cyclics between cubes",
		"growth indices of cyclic pairs between cubes",
	]),
	entry!(golubew_cousin_cyclic_cubes, "cousin cyclics between consecutive cubes", ["cousin cyclics between cubes"]),
	entry!(golubew_sexy_cyclic_cubes, "sexy cyclics between consecutive cubes", ["sexy cyclics between cubes"]),
	entry!(sg_desboves, "two SG cyclics between consecutive squares", ["two SG cyclics between squares"]),
	entry!(sg_mod3, "residues of SG cyclics mod 3", ["SG cyclic residues mod 3", "infinitely many SG cyclics"]),
	entry!(firoozbakht1_cyclic, "c_n^(1/n) decreases", ["index root decrease"]),
	entry!(firoozbakht2_cyclic, "c_n^(1/(n-1)) decreases", ["index root decrease shifted down"]),
	entry!(firoozbakht3_cyclic, "thresholds for c_n^(1/(n+k)) to decrease", ["index root decrease shifted up"]),
	entry!(firoozbakht4_cyclic, "maxima of c_n^(1/(n+k)) decrease in k", ["index root maxima"]),
	entry!(firoozbakht_sg, "sigma_n^(1/n) decreases", ["SG index root decrease"]),
	entry!(andrica_cyclic, "sqrt(c_{n+1}) - sqrt(c_n) < 1", ["square-root difference below one"]),
	entry!(ribenboim_power_prime, "p_{n+1}^t - p_n^t tends to 0", ["prime power differences vanish"]),
	entry!(ribenboim_power_cyclic, "c_{n+1}^t - c_n^t tends to 0", ["cyclic power differences vanish"]),
	entry!(visser_cyclic, "sqrt(c_{n+1}) - sqrt(c_n) < epsilon eventually", ["square-root difference below epsilon"]),
	entry!(kmsz_prime, "prime gaps below sqrt(p_n) + k", ["prime gaps below root plus k"]),
	entry!(kmsz_cyclic, "cyclic gaps below sqrt(c_n) + k", ["cyclic gaps below root plus k"]),
	entry!(carneiro_cyclic, "gaps below (22/25) sqrt(c) log c", ["root-log gap bound"]),
	entry!(carneiro_sg, "SG gaps below (22/25) sqrt(s) log s", ["SG root-log gap bound"]),
	entry!(rosser_cyclic, "c_n above e^gamma n logloglog n", ["first lower bound on c_n"]),
	entry!(dusart_cyclic, "c_n above e^gamma n (logloglog n + loglogloglog n)", ["second lower bound on c_n"]),
	entry!(ishikawa_cyclic, "c_n + c_{n+1} > c_{n+2}", ["two consecutive exceed the next"]),
	entry!(ishikawa_sg, "sigma_n + sigma_{n+1} > sigma_{n+2}", ["SG two consecutive exceed the next"]),
	entry!(sum32_cyclic, "three consecutive exceed the next two", ["three consecutive exceed the next two"]),
	entry!(dusart_mandl_cyclic, "mean of c_1..c_n below c_n / 2", ["mean below half"]),
	entry!(dusart_mandl_sg, "mean of sigma_1..sigma_n below sigma_n / 2", ["SG mean below half"]),
	entry!(panaitopol_cyclic, "c_{mn} < c_m c_n", ["index product bound"]),
	entry!(vrba_cyclic, "c_n over the geometric mean tends to e", ["member over geometric mean"]),
	entry!(hassani_cyclic, "arithmetic over geometric mean tends to e/2", ["arithmetic over geometric mean"]),
	entry!(gilbreath_cyclic, "iterated differences of cyclics start with 1", ["difference triangle of cyclics"]),
	entry!(gilbreath_sg, "iterated differences of SG cyclics start with 1", ["difference triangle of SG cyclics"]),
	entry!(hl2_sg_prime, "SG prime counts are subadditive", ["subadditive SG prime count"]),
	entry!(hl2_cyclic, "cyclic counts are subadditive", ["subadditive cyclic count"]),
	entry!(hl2_sg_cyclic, "SG cyclic counts are subadditive", ["subadditive SG cyclic count"]),
];

pub fn ids() -> impl Iterator<Item = &'static str> {
	REGISTRY.iter().map(|e| e.id)
}

pub fn find(id: &str) -> Result<&'static Entry> {
	REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Runs one check against a fresh universe sieved below `limit`.
pub fn run(id: &str, limit: u64, params: &Params) -> Result<ConjectureReport> {
	find(id)?;
	run_in(&Universe::new(limit)?, id, params)
}

/// Runs one check against shared data.
pub fn run_in(universe: &Universe, id: &str, params: &Params) -> Result<ConjectureReport> {
	let entry = find(id)?;
	let mut report = (entry.check)(universe, params)?;
	report.id = entry.id.to_string();
	report.title = entry.title.to_string();
	Ok(report)
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::verifiers::Verdict;

	#[test]
	fn ids_are_unique() {
		let mut all: Vec<&str> = ids().collect();
		assert_eq!(all.len(), 63);
		all.sort_unstable();
		all.dedup();
		assert_eq!(all.len(), 63);
	}

	#[test]
	fn unknown_id() {
		assert!(matches!(run("nosuch", 1000, &Params::default()), Err(Error::UnknownId(_))));
	}

	#[test]
	fn cyclic_counts_are_not_subadditive() {
		let r = run("hl2_cyclic", 600, &Params::default()).unwrap();
		assert_eq!(r.verdict, Verdict::Refuted);
		let hit = r.counterexamples.iter().find(|e| e.pair == Some([209, 389])).unwrap();
		assert_eq!(hit.detail, "C(598) = 200 > C(209) + C(389) = 199");
	}

	/// Every stated conjecture, each of which must be settled by exactly one entry.
	const STATEMENTS: &[&str] = &[
		"goldbach for cyclics",
		"twin cyclics",
		"composite cyclic triplets",
		"cyclic quintuplets",
		"one cyclic between squares",
		"two cyclics between squares",
		"prime count between squares",
		"cyclic count between squares",
		"prime record lows between squares",
		"growth index of prime record lows",
		"cyclic record lows between squares",
		"growth index of cyclic record lows",
		"near-square cyclics",
		"near-square cyclics between powers: cubes",
		"near-square cyclics between powers: fourth powers",
		"prime count in half-intervals",
		"k primes in half-intervals",
		"k cyclics in half-intervals",
		"one cyclic in each half-interval",
		"k primes between prime squares",
		"cyclics between cyclic squares",
		"k cyclics between cyclic squares",
		"square-root gap bound",
		"squared-log gap bound",
		"double-log gap bound",
		"twin primes between cubes",
		"growth indices of prime pairs between cubes",
		"cousin primes between cubes",
		"sexy primes between cubes",
		"twin cyclics between cubes",
		"growth indices of cyclic pairs between cubes",
		"cousin cyclics between cubes",
		"sexy cyclics between cubes",
		"two SG cyclics between squares",
		"SG cyclic residues mod 3",
		"infinitely many SG cyclics",
		"index root decrease",
		"index root decrease shifted down",
		"index root decrease shifted up",
		"index root maxima",
		"SG index root decrease",
		"square-root difference below one",
		"prime power differences vanish",
		"cyclic power differences vanish",
		"square-root difference below epsilon",
		"prime gaps below root plus k",
		"cyclic gaps below root plus k",
		"root-log gap bound",
		"SG root-log gap bound",
		"first lower bound on c_n",
		"second lower bound on c_n",
		"two consecutive exceed the next",
		"SG two consecutive exceed the next",
		"three consecutive exceed the next two",
		"mean below half",
		"SG mean below half",
		"index product bound",
		"member over geometric mean",
		"arithmetic over geometric mean",
		"difference triangle of cyclics",
		"difference triangle of SG cyclics",
		"subadditive SG prime count",
		"subadditive cyclic count",
		"subadditive SG cyclic count",
	];

	#[test]
	fn every_statement_is_covered_once() {
		for s in STATEMENTS {
			let owners: Vec<&str> = REGISTRY.iter().filter(|e| e.covers.contains(s)).map(|e| e.id).collect();
			assert_eq!(owners.len(), 1, "{s} is covered by {owners:?}");
		}
		let total: usize = REGISTRY.iter().map(|e| e.covers.len()).sum();
		assert_eq!(total, STATEMENTS.len());
	}

	#[test]
	fn sg_cyclic_counts_are_not_subadditive() {
		let r = run("hl2_sg_cyclic", 10_000, &Params::default()).unwrap();
		assert_eq!(r.verdict, Verdict::Refuted);
		let first = &r.counterexamples[0];
		assert_eq!(first.pair, Some([31, 3928]));
	}
}
