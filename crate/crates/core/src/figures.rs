//! Plot data for the figures, one [`Series`] each. Columns that run out
//! before the longest one are padded with NaN (empty CSV cells).

use crate::arith::is_cyclic_direct;
use crate::asymptotics::{
	cyclic_square_interval, deligne_square_interval, oppermann_half, oppermann_prime_half, sum_powers_estimate, Half,
	SumKind,
};
use crate::error::{Error, Result};
use crate::sequences::IndexedSequence;
use crate::stats::fit_power_law;
use crate::universe::Universe;
use crate::verifiers::checks::delta_sqrt_series;
use crate::verifiers::intervals::{oppermann_counts, oppermann_max_index};
use crate::verifiers::{interval_counts, run_in, Boundary, Params, Series};

pub const FIGURES: &[(&str, &str)] = &[
	("fig1", "sum of cyclics up to x against three approximations"),
	("fig2", "primes and cyclics between consecutive squares"),
	("fig3", "record lows of prime counts between squares, with a power-law fit"),
	("fig4", "record lows of cyclic counts between squares, with a power-law fit"),
	("fig5", "twin, cousin and sexy pairs between consecutive cubes"),
	("fig6", "near-square primes and cyclics between cubes and fourth powers"),
	("fig7", "square-root differences and their reverse cumulative maxima"),
	("fig8", "smaller Oppermann half-interval count for primes and cyclics"),
];

pub fn figure(u: &Universe, id: &str) -> Result<Series> {
	match id {
		"fig1" => sum_of_cyclics(u),
		"fig2" => square_counts(u),
		"fig3" => records(u, "kfold_legendre_prime"),
		"fig4" => records(u, "kfold_legendre_cyclic"),
		"fig5" => pairs_between_cubes(u),
		"fig6" => near_squares(u),
		"fig7" => delta_sqrt(u),
		"fig8" => oppermann(u),
		_ => Err(Error::UnknownSeries(id.to_string())),
	}
}

fn or_nan(v: Result<f64>) -> f64 {
	v.unwrap_or(f64::NAN)
}

fn at(column: &[u64], i: usize) -> f64 {
	column.get(i).map_or(f64::NAN, |&v| v as f64)
}

/// `x = m * limit / 20` for `m = 1..=20`. The last point may be the limit
/// itself, one past the data; it is settled directly.
fn sum_of_cyclics(u: &Universe) -> Result<Series> {
	let c = u.cyclic()?;
	let step = u.limit() / 20;
	if step < 16 {
		return Err(Error::InsufficientLimit { have: u.limit(), need: 320 });
	}
	let mut s = Series::new(&["x", "exact_sum", "nc_n_over_2", "xC_over_2", "asymptotic"]);
	let mut it = c.iter().peekable();
	let (mut count, mut sum, mut last) = (0u64, 0u128, 0u64);
	for m in 1..=20 {
		let x = m * step;
		while let Some(&v) = it.peek() {
			if v > x {
				break;
			}
			count += 1;
			sum += v as u128;
			last = v;
			it.next();
		}
		let (mut n, mut total, mut c_n) = (count, sum, last);
		if x > c.limit() && is_cyclic_direct(x)? {
			n += 1;
			total += x as u128;
			c_n = x;
		}
		let xf = x as f64;
		s.push(vec![
			xf,
			total as f64,
			n as f64 * c_n as f64 / 2.0,
			xf * n as f64 / 2.0,
			or_nan(sum_powers_estimate(SumKind::ByBound(xf), 1)),
		]);
	}
	Ok(s)
}

fn square_counts(u: &Universe) -> Result<Series> {
	let (p, c) = (u.prime()?, u.cyclic()?);
	let primes = interval_counts(&p, Boundary::Squares, None, Boundary::Squares.max_index(p.limit()))?;
	let cyclics = interval_counts(&c, Boundary::Squares, None, Boundary::Squares.max_index(c.limit()))?;
	let mut s = Series::new(&["n", "primes", "n_over_log_n", "cyclics", "cyclic_estimate"]);
	for i in 0..primes.len().max(cyclics.len()) {
		let n = (i + 1) as f64;
		let estimate = if i < cyclics.len() { or_nan(cyclic_square_interval(n)) } else { f64::NAN };
		s.push(vec![n, at(&primes, i), or_nan(deligne_square_interval(n)), at(&cyclics, i), estimate]);
	}
	Ok(s)
}

fn records(u: &Universe, id: &str) -> Result<Series> {
	let r = run_in(u, id, &Params::default())?;
	let rec = r.stats.get("records").cloned().unwrap_or_default();
	let pts: Vec<(f64, f64)> = rec.rows.iter().map(|row| (row[0], row[1])).collect();
	let fit = fit_power_law(&pts)?;
	let mut s = Series::new(&["k", "record", "fitted"]);
	for (k, v) in pts {
		s.push(vec![k, v, fit.predict(k)]);
	}
	Ok(s)
}

fn pair_counts(seq: &IndexedSequence, n_max: u64) -> Result<Vec<Vec<u64>>> {
	[2, 4, 6].iter().map(|&g| interval_counts(seq, Boundary::Cubes, Some(g), n_max)).collect()
}

fn pairs_between_cubes(u: &Universe) -> Result<Series> {
	let (p, c) = (u.prime()?, u.cyclic()?);
	let primes = pair_counts(&p, Boundary::Cubes.max_index(p.limit()))?;
	let cyclics = pair_counts(&c, Boundary::Cubes.max_index(c.limit()))?;
	let mut s = Series::new(&[
		"n",
		"prime_twin",
		"prime_cousin",
		"prime_sexy",
		"cyclic_twin",
		"cyclic_cousin",
		"cyclic_sexy",
	]);
	for i in 0..primes[0].len().max(cyclics[0].len()) {
		let mut row = vec![(i + 1) as f64];
		row.extend(primes.iter().chain(&cyclics).map(|col| at(col, i)));
		s.push(row);
	}
	Ok(s)
}

fn near_squares(u: &Universe) -> Result<Series> {
	let (p, c) = (u.near_square_prime()?, u.near_square_cyclic()?);
	let mut cols = Vec::new();
	for b in [Boundary::Cubes, Boundary::Quartics] {
		for seq in [&p, &c] {
			cols.push(interval_counts(seq, b, None, b.max_index(seq.limit()))?);
		}
	}
	let mut s = Series::new(&["n", "prime_cube", "cyclic_cube", "prime_quartic", "cyclic_quartic"]);
	for i in 0..cols.iter().map(Vec::len).max().unwrap_or(0) {
		let mut row = vec![(i + 1) as f64];
		row.extend(cols.iter().map(|col| at(col, i)));
		s.push(row);
	}
	Ok(s)
}

fn delta_sqrt(u: &Universe) -> Result<Series> {
	let p = delta_sqrt_series(&*u.prime()?, 1000);
	let c = delta_sqrt_series(&*u.cyclic()?, 1000);
	let mut s = Series::new(&[
		"n",
		"prime_delta_sqrt",
		"prime_reverse_cummax",
		"cyclic_delta_sqrt",
		"cyclic_reverse_cummax",
	]);
	for i in 0..p.rows.len().max(c.rows.len()) {
		let get = |t: &Series, j: usize| t.rows.get(i).map_or(f64::NAN, |r| r[j]);
		s.push(vec![(i + 1) as f64, get(&p, 1), get(&p, 2), get(&c, 1), get(&c, 2)]);
	}
	Ok(s)
}

fn oppermann(u: &Universe) -> Result<Series> {
	let (p, c) = (u.prime()?, u.cyclic()?);
	let mins = |seq: &IndexedSequence| -> Result<Vec<u64>> {
		Ok(oppermann_counts(seq, oppermann_max_index(seq.limit()))?.into_iter().map(|(l, r)| l.min(r)).collect())
	};
	let (primes, cyclics) = (mins(&p)?, mins(&c)?);
	let mut s = Series::new(&["n", "prime_min", "n_over_2_log_n", "cyclic_min", "cyclic_estimate"]);
	for i in 0..primes.len().max(cyclics.len()) {
		let n = (i + 2) as f64;
		let estimate = if i < cyclics.len() { or_nan(oppermann_half(n, Half::Left)) } else { f64::NAN };
		s.push(vec![n, at(&primes, i), or_nan(oppermann_prime_half(n)), at(&cyclics, i), estimate]);
	}
	Ok(s)
}
