use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
	#[error("domain error: {0}")]
	Domain(String),
	#[error("invalid configuration: {0}")]
	Config(String),
	#[error("memory budget exceeded: need {need} bytes, budget is {budget}")]
	MemoryBudget { need: u64, budget: u64 },
	#[error("index {index} out of range (sequence has {len} members)")]
	OutOfRange { index: u64, len: u64 },
	#[error("sieve limit {have} is too small for this check (need at least {need})")]
	InsufficientLimit { have: u64, need: u64 },
	#[error("corrupt cache file: {0}")]
	CorruptCache(String),
	#[error("no {kind} cache covering limit {limit} in {dir}; run build-cache first or allow sieving")]
	MissingCache { kind: String, limit: u64, dir: String },
	#[error("unknown conjecture id `{0}`")]
	UnknownId(String),
	#[error("unknown series `{0}`")]
	UnknownSeries(String),
	#[error("invalid parameter: {0}")]
	Param(String),
	#[error("fit failed: {0}")]
	Fit(String),
	#[error(transparent)]
	Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
