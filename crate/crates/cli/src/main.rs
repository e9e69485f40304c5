//! `cyclics`: builds sieve caches, runs conjecture checks and writes reports,
//! fits, tables and plot data.
//!
//! Exit status is 0 on success, 2 when a check is refuted (the run itself
//! succeeded) and 1 on any error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclics_core::asymptotics::{erdos_count, pollack_count};
use cyclics_core::cache::{cache_path, write_bitmap};
use cyclics_core::figures::{figure, FIGURES};
use cyclics_core::sequences::IndexedSequence;
use cyclics_core::stats::fit_power_law;
use cyclics_core::universe::{BitmapSource, CacheSource, SieveSource, Universe};
use cyclics_core::verifiers::hl2::{hl2_scan, CountingTable, Hl2Bounds, Hl2Mode};
use cyclics_core::verifiers::sads::{sads_verify, SadsMode};
use cyclics_core::verifiers::{find, ids, run_in, ConjectureReport, Params, Ratio, Series, Verdict};
use cyclics_core::{build_cyclic_bitmap, build_prime_bitmap, Bitmap, BitmapKind, Error, SieveConfig};
use serde_json::json;

/// Below this limit a missing cache is replaced by an in-memory sieve.
const AUTO_SIEVE_BELOW: u64 = 10_000_000;
const DEFAULT_CACHE_DIR: &str = ".cyclics-cache";

#[derive(Parser)]
#[command(name = "cyclics", version, about = "Cyclic numbers: sieves, conjecture checks and plot data")]
struct Cli {
	#[command(flatten)]
	data: DataArgs,
	/// Output format [default: csv for emit-plot, asymptotics-table and hl2, json otherwise].
	#[arg(long, value_enum, global = true)]
	format: Option<Format>,
	/// Write output here instead of stdout.
	#[arg(long, short, global = true)]
	output: Option<PathBuf>,
	#[command(subcommand)]
	command: Command,
}

#[derive(Args)]
struct DataArgs {
	/// Strict bound on cyclic data.
	#[arg(long, global = true, default_value_t = 100_000_000)]
	limit: u64,
	/// Strict bound on prime data [default: ten times --limit].
	#[arg(long, global = true)]
	prime_limit: Option<u64>,
	/// Directory holding sieve caches.
	#[arg(long, global = true, env = "CYCLICS_CACHE_DIR", default_value = DEFAULT_CACHE_DIR)]
	cache_dir: PathBuf,
	/// Sieve in memory when no cache covers a limit.
	#[arg(long, global = true)]
	sieve: bool,
	/// Sieve worker threads.
	#[arg(long, global = true)]
	workers: Option<usize>,
}

impl Cli {
	fn format(&self) -> Format {
		self.format.unwrap_or(match self.command {
			Command::EmitPlot { .. } | Command::AsymptoticsTable { .. } | Command::Hl2 { .. } => Format::Csv,
			_ => Format::Json,
		})
	}
}

impl DataArgs {
	fn prime_limit(&self) -> u64 {
		self.prime_limit.unwrap_or(self.limit.saturating_mul(10))
	}

	fn sieve_source(&self) -> SieveSource {
		SieveSource { workers: self.workers }
	}

	fn universe(&self) -> Result<Universe> {
		let source = CliSource { cache: CacheSource::new(&self.cache_dir), sieve: self.sieve_source(), always: self.sieve };
		Ok(Universe::with_source(self.limit, self.prime_limit(), Box::new(source))?)
	}
}

/// Caches first; small limits (or `--sieve`) fall back to sieving.
struct CliSource {
	cache: CacheSource,
	sieve: SieveSource,
	always: bool,
}

impl BitmapSource for CliSource {
	fn load(&self, kind: BitmapKind, limit: u64) -> cyclics_core::Result<Bitmap> {
		match self.cache.load(kind, limit) {
			Err(Error::MissingCache { .. }) if self.always || limit < AUTO_SIEVE_BELOW => self.sieve.load(kind, limit),
			r => r,
		}
	}
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
	Json,
	Csv,
	Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CacheKind {
	Cyclic,
	Prime,
	Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
	Cyclic,
	Prime,
	SgCyclic,
	SgPrime,
	NearSquareCyclic,
	NearSquarePrime,
}

impl SeqKind {
	fn get(self, u: &Universe) -> Result<std::sync::Arc<IndexedSequence>> {
		Ok(match self {
			SeqKind::Cyclic => u.cyclic()?,
			SeqKind::Prime => u.prime()?,
			SeqKind::SgCyclic => u.sg_cyclic()?,
			SeqKind::SgPrime => u.sg_prime()?,
			SeqKind::NearSquareCyclic => u.near_square_cyclic()?,
			SeqKind::NearSquarePrime => u.near_square_prime()?,
		})
	}
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
	Naive,
	Shortcut,
}

impl From<ModeArg> for SadsMode {
	fn from(m: ModeArg) -> Self {
		match m {
			ModeArg::Naive => SadsMode::Naive,
			ModeArg::Shortcut => SadsMode::Shortcut,
		}
	}
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Encoding {
	Text,
	Binary,
}

#[derive(Args, Default)]
struct ParamArgs {
	/// Shift k for bounds such as sqrt(c) + k.
	#[arg(long, allow_hyphen_values = true)]
	k: Option<i64>,
	/// Largest k in threshold tables.
	#[arg(long)]
	k_max: Option<u64>,
	/// Epsilon as p/q or a decimal.
	#[arg(long, value_parser = parse_ratio)]
	epsilon: Option<Ratio>,
	/// Exponent for power differences.
	#[arg(long)]
	t: Option<f64>,
	/// Difference-triangle depth.
	#[arg(long)]
	depth: Option<u64>,
	#[arg(long, value_enum)]
	mode: Option<ModeArg>,
	/// Bound on both pair coordinates in subadditivity scans.
	#[arg(long)]
	bound: Option<u64>,
	/// Report every violating pair rather than one per sum.
	#[arg(long)]
	full_scan: bool,
	/// Largest interval index.
	#[arg(long)]
	n_max: Option<u64>,
}

fn parse_ratio(s: &str) -> std::result::Result<Ratio, String> {
	Ratio::parse(s).map_err(|e| e.to_string())
}

impl ParamArgs {
	fn params(&self) -> Params {
		Params {
			k: self.k,
			k_max: self.k_max,
			epsilon: self.epsilon,
			t: self.t,
			depth: self.depth,
			mode: self.mode.map(Into::into),
			bound: self.bound,
			full_scan: self.full_scan.then_some(true),
			n_max: self.n_max,
		}
	}
}

#[derive(Subcommand)]
enum Command {
	/// Sieve and write cache files for --limit (cyclics) and --prime-limit.
	BuildCache {
		#[arg(long, value_enum, default_value_t = CacheKind::Both)]
		kind: CacheKind,
	},
	/// Run one check.
	Verify {
		#[arg(long)]
		id: String,
		#[command(flatten)]
		params: ParamArgs,
		/// Write each report series as CSV into this directory.
		#[arg(long)]
		stats_dir: Option<PathBuf>,
	},
	/// Run every check and aggregate the reports.
	ReportAll {
		#[command(flatten)]
		params: ParamArgs,
		#[arg(long)]
		stats_dir: Option<PathBuf>,
	},
	/// Fit y = a x^b to a series produced by a check.
	Fit {
		#[arg(long)]
		id: String,
		/// Series name within the report (e.g. counts, records).
		#[arg(long)]
		series: String,
		/// Column for x [default: first].
		#[arg(long)]
		x: Option<String>,
		/// Column for y [default: second].
		#[arg(long)]
		y: Option<String>,
		#[command(flatten)]
		params: ParamArgs,
	},
	/// Write the data behind a figure as CSV.
	EmitPlot {
		/// One of fig1 .. fig8.
		series_id: String,
	},
	/// Tabulate the count estimates at powers of ten.
	AsymptoticsTable {
		#[arg(long, default_value_t = 2)]
		from_exp: u32,
		#[arg(long, default_value_t = 30)]
		to_exp: u32,
	},
	/// First column of the iterated absolute difference triangle.
	Sads {
		#[arg(long, value_enum, default_value_t = SeqKind::Cyclic)]
		seq: SeqKind,
		#[arg(long, default_value_t = 10_000)]
		depth: u64,
		#[arg(long, value_enum, default_value_t = ModeArg::Naive)]
		mode: ModeArg,
		/// Keep the leading 1 of the sequence.
		#[arg(long)]
		keep_one: bool,
	},
	/// Scan for pairs with C(m + n) > C(m) + C(n), m <= n <= bound.
	Hl2 {
		#[arg(long, value_enum, default_value_t = SeqKind::Cyclic)]
		seq: SeqKind,
		#[arg(long)]
		bound: u64,
		#[arg(long)]
		lower: Option<u64>,
		/// Only the first violating pair per sum.
		#[arg(long)]
		per_sum: bool,
	},
	/// Write a sequence, one member per line or as u64 values after a count.
	ExportSeq {
		#[arg(long, value_enum, default_value_t = SeqKind::Cyclic)]
		seq: SeqKind,
		#[arg(long, value_enum, default_value_t = Encoding::Text)]
		encoding: Encoding,
	},
}

/// Result of a successful run.
enum Outcome {
	Ok,
	Refuted,
}

fn main() -> ExitCode {
	let cli = match Cli::try_parse() {
		Ok(cli) => cli,
		Err(e) => {
			let _ = e.print();
			return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
		}
	};
	match dispatch(&cli) {
		Ok(Outcome::Ok) => ExitCode::SUCCESS,
		Ok(Outcome::Refuted) => ExitCode::from(2),
		Err(e) => {
			eprintln!("error: {e:#}");
			ExitCode::from(1)
		}
	}
}

fn sink(output: &Option<PathBuf>) -> Result<Box<dyn Write>> {
	Ok(match output {
		Some(p) => Box::new(io::BufWriter::new(
			fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
		)),
		None => Box::new(io::BufWriter::new(io::stdout().lock())),
	})
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
	let mut out = sink(&cli.output)?;
	let outcome = match &cli.command {
		Command::BuildCache { kind } => build_cache(cli, *kind, &mut out)?,
		Command::Verify { id, params, stats_dir } => verify(cli, id, &params.params(), stats_dir, &mut out)?,
		Command::ReportAll { params, stats_dir } => report_all(cli, &params.params(), stats_dir, &mut out)?,
		Command::Fit { id, series, x, y, params } => fit(cli, id, series, x, y, &params.params(), &mut out)?,
		Command::EmitPlot { series_id } => emit_plot(cli, series_id, &mut out)?,
		Command::AsymptoticsTable { from_exp, to_exp } => asymptotics_table(cli, *from_exp, *to_exp, &mut out)?,
		Command::Sads { seq, depth, mode, keep_one } => sads(cli, *seq, *depth, *mode, *keep_one, &mut out)?,
		Command::Hl2 { seq, bound, lower, per_sum } => hl2(cli, *seq, *bound, *lower, *per_sum, &mut out)?,
		Command::ExportSeq { seq, encoding } => export_seq(cli, *seq, *encoding, &mut out)?,
	};
	out.flush()?;
	Ok(outcome)
}

fn write_json(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<()> {
	serde_json::to_writer_pretty(&mut *out, value)?;
	writeln!(out)?;
	Ok(())
}

fn build_cache(cli: &Cli, kind: CacheKind, out: &mut dyn Write) -> Result<Outcome> {
	let dir = &cli.data.cache_dir;
	fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
	let mut built = Vec::new();
	let jobs = [(CacheKind::Cyclic, BitmapKind::Cyclic, cli.data.limit), (CacheKind::Prime, BitmapKind::Prime, cli.data.prime_limit())];
	for (which, bk, limit) in jobs {
		if kind != which && kind != CacheKind::Both {
			continue;
		}
		if limit < 2 {
			bail!("limit {limit} is too small to cache");
		}
		let start = Instant::now();
		let mut config = SieveConfig::new(limit - 1);
		if let Some(w) = cli.data.workers {
			config = config.with_workers(w);
		}
		let bitmap = match bk {
			BitmapKind::Cyclic => build_cyclic_bitmap(&config)?,
			BitmapKind::Prime => build_prime_bitmap(&config)?,
		};
		let path = cache_path(dir, bk, limit - 1);
		write_bitmap(&path, &bitmap)?;
		built.push(json!({
			"kind": bk.name(),
			"limit": limit,
			"count": bitmap.len(),
			"path": path.display().to_string(),
			"seconds": (start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0,
		}));
	}
	match cli.format() {
		Format::Json => write_json(out, &built)?,
		_ => {
			for b in &built {
				writeln!(out, "{} below {}: {} members -> {}", b["kind"].as_str().unwrap(), b["limit"], b["count"], b["path"].as_str().unwrap())?;
			}
		}
	}
	Ok(Outcome::Ok)
}

/// Writes each series as `{id}-{name}.csv` and records where it went.
fn write_stats(report: &mut ConjectureReport, dir: &Option<PathBuf>) -> Result<()> {
	let Some(dir) = dir else {
		return Ok(());
	};
	fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
	for (name, series) in &report.stats {
		let path = dir.join(format!("{}-{name}.csv", report.id));
		fs::write(&path, series.to_csv()).with_context(|| format!("cannot write {}", path.display()))?;
		report.stats_csv_ref.insert(name.clone(), path.display().to_string());
	}
	Ok(())
}

fn verify(cli: &Cli, id: &str, params: &Params, stats_dir: &Option<PathBuf>, out: &mut dyn Write) -> Result<Outcome> {
	find(id)?;
	let u = cli.data.universe()?;
	let mut report = run_in(&u, id, params)?;
	write_stats(&mut report, stats_dir)?;
	match cli.format() {
		Format::Json => write_json(out, &report)?,
		Format::Text => write_report_text(out, &report)?,
		Format::Csv => write_exceptions_csv(out, &report)?,
	}
	Ok(if report.verdict == Verdict::Refuted { Outcome::Refuted } else { Outcome::Ok })
}

fn write_report_text(out: &mut dyn Write, r: &ConjectureReport) -> Result<()> {
	let verdict = serde_json::to_value(r.verdict)?;
	writeln!(out, "{}: {} ({})", r.id, verdict.as_str().unwrap_or("?"), r.title)?;
	writeln!(out, "  range: {} from {} to {}", r.range.what, r.range.lo, r.range.hi)?;
	let show = |label: &str, list: &[cyclics_core::verifiers::Exception], out: &mut dyn Write| -> Result<()> {
		if list.is_empty() {
			return Ok(());
		}
		writeln!(out, "  {label}: {}", list.len())?;
		for e in list.iter().take(20) {
			writeln!(out, "    {}", e.detail)?;
		}
		if list.len() > 20 {
			writeln!(out, "    ...")?;
		}
		Ok(())
	};
	show("exceptions", &r.exceptions, out)?;
	show("counterexamples", &r.counterexamples, out)?;
	if !r.thresholds.is_empty() {
		let cells: Vec<String> = r
			.thresholds
			.iter()
			.map(|(k, n)| {
				let mark = if r.provisional.get(k) == Some(&true) { "?" } else { "" };
				format!("N({k})={n}{mark}")
			})
			.collect();
		writeln!(out, "  thresholds: {}", cells.join(" "))?;
	}
	if !r.records.is_empty() {
		writeln!(out, "  records: {:?}", r.records)?;
	}
	for (k, v) in &r.values {
		writeln!(out, "  {k} = {v}")?;
	}
	for note in &r.notes {
		writeln!(out, "  {note}")?;
	}
	Ok(())
}

fn write_exceptions_csv(out: &mut dyn Write, r: &ConjectureReport) -> Result<()> {
	let mut w = csv::Writer::from_writer(out);
	w.write_record(["index", "value", "m", "n", "counterexample", "detail"])?;
	for e in &r.exceptions {
		let (m, n) = e.pair.map_or((String::new(), String::new()), |[m, n]| (m.to_string(), n.to_string()));
		let cx = r.counterexamples.contains(e);
		w.write_record([e.index.to_string(), e.value.to_string(), m, n, cx.to_string(), e.detail.clone()])?;
	}
	w.flush()?;
	Ok(())
}

fn report_all(cli: &Cli, params: &Params, stats_dir: &Option<PathBuf>, out: &mut dyn Write) -> Result<Outcome> {
	let u = cli.data.universe()?;
	let mut reports = Vec::new();
	let mut errors = Vec::new();
	for id in ids() {
		match run_in(&u, id, params) {
			Ok(mut r) => {
				write_stats(&mut r, stats_dir)?;
				reports.push(r);
			}
			// Missing caches make every later check fail the same way.
			Err(e @ Error::MissingCache { .. }) => return Err(e.into()),
			Err(e) => errors.push(json!({ "id": id, "error": e.to_string() })),
		}
	}
	let refuted = reports.iter().any(|r| r.verdict == Verdict::Refuted);
	match cli.format() {
		Format::Json => write_json(
			out,
			&json!({
				"limit": cli.data.limit,
				"prime_limit": cli.data.prime_limit(),
				"reports": reports,
				"errors": errors,
			}),
		)?,
		Format::Csv => {
			let mut w = csv::Writer::from_writer(&mut *out);
			w.write_record(["id", "verdict", "range", "lo", "hi", "exceptions", "counterexamples"])?;
			for r in &reports {
				let verdict = serde_json::to_value(r.verdict)?;
				w.write_record([
					r.id.clone(),
					verdict.as_str().unwrap_or("").to_string(),
					r.range.what.clone(),
					r.range.lo.to_string(),
					r.range.hi.to_string(),
					r.exceptions.len().to_string(),
					r.counterexamples.len().to_string(),
				])?;
			}
			w.flush()?;
		}
		Format::Text => {
			for r in &reports {
				write_report_text(out, r)?;
			}
			for e in &errors {
				writeln!(out, "{}: error: {}", e["id"].as_str().unwrap(), e["error"].as_str().unwrap())?;
			}
		}
	}
	if !errors.is_empty() {
		bail!("{} check(s) failed to run", errors.len());
	}
	Ok(if refuted { Outcome::Refuted } else { Outcome::Ok })
}

fn column(s: &Series, name: &Option<String>, default: usize) -> Result<Vec<f64>> {
	let name = match name {
		Some(n) => n.clone(),
		None => s.columns.get(default).cloned().context("series has too few columns")?,
	};
	s.column(&name).with_context(|| format!("no column `{name}`; have {:?}", s.columns))
}

fn fit(
	cli: &Cli,
	id: &str,
	series: &str,
	x: &Option<String>,
	y: &Option<String>,
	params: &Params,
	out: &mut dyn Write,
) -> Result<Outcome> {
	find(id)?;
	let u = cli.data.universe()?;
	let r = run_in(&u, id, params)?;
	let s = r
		.stats
		.get(series)
		.with_context(|| format!("{id} has no series `{series}`; have {:?}", r.stats.keys().collect::<Vec<_>>()))?;
	let pts: Vec<(f64, f64)> = column(s, x, 0)?.into_iter().zip(column(s, y, 1)?).collect();
	let f = fit_power_law(&pts)?;
	match cli.format() {
		Format::Json => write_json(out, &f)?,
		Format::Csv => writeln!(out, "a,b,r2,n_points,dropped\n{},{},{},{},{}", f.a, f.b, f.r2, f.n_points, f.dropped)?,
		Format::Text => writeln!(out, "y = {:.6} x^{:.6}  (r^2 = {:.6}, {} points)", f.a, f.b, f.r2, f.n_points)?,
	}
	Ok(Outcome::Ok)
}

fn emit_plot(cli: &Cli, id: &str, out: &mut dyn Write) -> Result<Outcome> {
	if !FIGURES.iter().any(|(f, _)| *f == id) {
		let known: Vec<&str> = FIGURES.iter().map(|f| f.0).collect();
		bail!("unknown series `{id}`; expected one of {}", known.join(", "));
	}
	let u = cli.data.universe()?;
	let s = figure(&u, id)?;
	match cli.format() {
		Format::Json => write_json(out, &s)?,
		_ => out.write_all(s.to_csv().as_bytes())?,
	}
	Ok(Outcome::Ok)
}

fn asymptotics_table(cli: &Cli, from_exp: u32, to_exp: u32, out: &mut dyn Write) -> Result<Outcome> {
	if from_exp > to_exp || to_exp > 300 {
		bail!("exponents must satisfy from <= to <= 300");
	}
	let mut s = Series::new(&["x", "erdos", "pollack", "pollack_over_erdos"]);
	for e in from_exp..=to_exp {
		let x = 10f64.powi(e as i32);
		let erdos = erdos_count(x).unwrap_or(f64::NAN);
		let pollack = pollack_count(x).unwrap_or(f64::NAN);
		s.push(vec![x, erdos, pollack, pollack / erdos]);
	}
	match cli.format() {
		Format::Json => write_json(out, &s)?,
		_ => out.write_all(s.to_csv().as_bytes())?,
	}
	Ok(Outcome::Ok)
}

fn sads(cli: &Cli, seq: SeqKind, depth: u64, mode: ModeArg, keep_one: bool, out: &mut dyn Write) -> Result<Outcome> {
	let u = cli.data.universe()?;
	let s = seq.get(&u)?;
	let skip = usize::from(!keep_one && s.nth(1).ok() == Some(1));
	let values: Vec<u64> = s.iter().skip(skip).take(depth as usize + 1).collect();
	let r = sads_verify(&values, depth, mode.into())?;
	match cli.format() {
		Format::Json => write_json(out, &r)?,
		_ => writeln!(
			out,
			"rows computed: {}, all ones: {}, first failure: {}",
			r.rows_computed,
			r.all_ones,
			r.first_failure.map_or("none".to_string(), |n| n.to_string())
		)?,
	}
	Ok(if r.all_ones { Outcome::Ok } else { Outcome::Refuted })
}

fn hl2(cli: &Cli, seq: SeqKind, bound: u64, lower: Option<u64>, per_sum: bool, out: &mut dyn Write) -> Result<Outcome> {
	let u = cli.data.universe()?;
	let s = seq.get(&u)?;
	// SG primes start at 2, so C(1) = 0 would flag every n + 1 trivially.
	let lower = lower.unwrap_or(if seq == SeqKind::SgPrime { 2 } else { 1 });
	let table = CountingTable::new(&s, 2 * bound)?;
	let mode = if per_sum { Hl2Mode::PerSumFirst } else { Hl2Mode::Full };
	let found = hl2_scan(&table, Hl2Bounds::square(lower, bound), mode)?;
	match cli.format() {
		Format::Json => write_json(out, &found)?,
		_ => {
			let mut w = csv::Writer::from_writer(&mut *out);
			w.write_record(["m", "n", "c_sum", "c_m", "c_n"])?;
			for v in &found {
				w.write_record([v.m, v.n, v.c_sum, v.c_m, v.c_n].map(|x| x.to_string()))?;
			}
			w.flush()?;
		}
	}
	Ok(if found.is_empty() { Outcome::Ok } else { Outcome::Refuted })
}

fn export_seq(cli: &Cli, seq: SeqKind, encoding: Encoding, out: &mut dyn Write) -> Result<Outcome> {
	let u = cli.data.universe()?;
	let s = seq.get(&u)?;
	match encoding {
		Encoding::Text => s.write_text(out)?,
		Encoding::Binary => s.write_binary(out)?,
	}
	Ok(Outcome::Ok)
}
