//! Additive inequalities between nearby members, lower bounds on a_n, and the
//! multiplicative comparison `a_{mn}` against `a_m a_n`.

use serde::{Deserialize, Serialize};

use crate::asymptotics::{lll, llll, E_GAMMA};
use crate::error::{Error, Result};
use crate::sequences::IndexedSequence;

use super::report::Exception;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdditiveForm {
	/// `a_n + a_{n+1} > a_{n+2}`
	Ishikawa,
	/// `a_n + a_{n+1} + a_{n+2} > a_{n+3} + a_{n+4}`
	Sum3VsSum2,
	/// `(a_1 + ... + a_n) / n < a_n / 2`
	DusartMandl,
	/// `a_n > e^gamma n logloglog n`
	RosserLower,
	/// `a_n > e^gamma n (logloglog n + loglogloglog n)`
	DusartLower,
}

impl AdditiveForm {
	/// Members of the window the inequality looks at, starting from a_n.
	fn window(self) -> usize {
		match self {
			AdditiveForm::Ishikawa => 3,
			AdditiveForm::Sum3VsSum2 => 5,
			_ => 1,
		}
	}
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdditiveScan {
	pub form: AdditiveForm,
	/// Indices n where the strict inequality fails.
	pub exceptions: Vec<Exception>,
	/// The subset of failures that are equalities.
	pub equalities: Vec<u64>,
	/// Indices where the inequality was evaluated.
	pub evaluated: u64,
	/// Indices skipped because a bound is undefined there.
	pub skipped: u64,
}

/// Bound in `a_n > bound(n)`, `None` where the iterated logarithms are
/// undefined.
fn lower_bound(form: AdditiveForm, n: u64) -> Option<f64> {
	let x = n as f64;
	let inner = match form {
		AdditiveForm::RosserLower => lll(x).ok()?,
		AdditiveForm::DusartLower => lll(x).ok()? + llll(x).ok()?,
		_ => unreachable!(),
	};
	Some(E_GAMMA * x * inner)
}

pub fn check_additive(values: impl Iterator<Item = u64>, form: AdditiveForm) -> AdditiveScan {
	let mut scan = AdditiveScan { form, exceptions: Vec::new(), equalities: Vec::new(), evaluated: 0, skipped: 0 };
	let w = form.window();
	let mut buf: std::collections::VecDeque<u64> = std::collections::VecDeque::with_capacity(w);
	let mut sum = 0u128;
	let mut seen = 0u64;
	for v in values {
		seen += 1;
		sum += v as u128;
		buf.push_back(v);
		if buf.len() < w {
			continue;
		}
		if buf.len() > w {
			buf.pop_front();
		}
		// n is the index of the window's first member.
		let n = seen + 1 - w as u64;
		let a = buf[0];
		let (lhs, rhs): (u128, u128) = match form {
			AdditiveForm::Ishikawa => (buf[0] as u128 + buf[1] as u128, buf[2] as u128),
			AdditiveForm::Sum3VsSum2 => (
				buf[0] as u128 + buf[1] as u128 + buf[2] as u128,
				buf[3] as u128 + buf[4] as u128,
			),
			// sum / n < a / 2  <=>  n a > 2 sum
			AdditiveForm::DusartMandl => (n as u128 * a as u128, 2 * sum),
			AdditiveForm::RosserLower | AdditiveForm::DusartLower => {
				let Some(bound) = lower_bound(form, n) else {
					scan.skipped += 1;
					continue;
				};
				scan.evaluated += 1;
				if !(a as f64 > bound) {
					scan.exceptions.push(Exception::at(n, a, format!("bound {bound:.3}")));
				}
				continue;
			}
		};
		scan.evaluated += 1;
		if lhs <= rhs {
			if lhs == rhs {
				scan.equalities.push(n);
			}
			let rel = if lhs == rhs { "=" } else { "<" };
			scan.exceptions.push(Exception::at(n, a, format!("{lhs} {rel} {rhs}")));
		}
	}
	scan
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicativeScan {
	pub m_min: u64,
	pub n_max: u64,
	/// Pairs `m <= n` where `a_{mn} < a_m a_n` fails.
	pub exceptions: Vec<Exception>,
	/// The subset of failures that are equalities.
	pub equalities: Vec<[u64; 2]>,
	pub pairs_checked: u64,
}

/// Compares `a_{mn}` with `a_m a_n` for every `m_min <= m <= n <= n_max`.
pub fn check_multiplicative(seq: &IndexedSequence, m_min: u64, n_max: u64) -> Result<MultiplicativeScan> {
	if m_min == 0 || m_min > n_max {
		return Err(Error::Param(format!("need 1 <= m_min <= n_max, got {m_min}, {n_max}")));
	}
	let need = n_max * n_max;
	let values = seq.prefix(need).map_err(|_| Error::InsufficientLimit { have: seq.len(), need })?;
	let a = |k: u64| values[k as usize - 1] as u128;
	let mut scan = MultiplicativeScan { m_min, n_max, exceptions: Vec::new(), equalities: Vec::new(), pairs_checked: 0 };
	for m in m_min..=n_max {
		for n in m..=n_max {
			scan.pairs_checked += 1;
			let (lhs, rhs) = (a(m * n), a(m) * a(n));
			if lhs >= rhs {
				if lhs == rhs {
					scan.equalities.push([m, n]);
				}
				let rel = if lhs == rhs { "=" } else { ">" };
				scan.exceptions.push(Exception::pair(m, n, format!("a_{} = {lhs} {rel} {rhs}", m * n)));
			}
		}
	}
	Ok(scan)
}
