//! The sieved data a set of checks runs against, built lazily on first use.
//!
//! Limits given to a [`Universe`] are strict: a universe for limit 10^8 holds
//! the members below 10^8, so its bitmaps are inclusive up to 10^8 - 1.

use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use crate::bitmap::{Bitmap, BitmapKind};
use crate::cache::{cache_path, read_bitmap};
use crate::error::{Error, Result};
use crate::sequences::{near_square_members, sg_members, IndexedSequence, SgClass};
use crate::sieve::{build_cyclic_bitmap, build_prime_bitmap, SieveConfig};

/// Where bitmaps come from.
pub trait BitmapSource: Send + Sync {
	/// A bitmap of `kind` covering exactly `[1, limit]`.
	fn load(&self, kind: BitmapKind, limit: u64) -> Result<Bitmap>;
}

#[derive(Clone, Debug, Default)]
pub struct SieveSource {
	pub workers: Option<usize>,
}

impl BitmapSource for SieveSource {
	fn load(&self, kind: BitmapKind, limit: u64) -> Result<Bitmap> {
		let mut config = SieveConfig::new(limit);
		if let Some(w) = self.workers {
			config = config.with_workers(w);
		}
		match kind {
			BitmapKind::Cyclic => build_cyclic_bitmap(&config),
			BitmapKind::Prime => build_prime_bitmap(&config),
		}
	}
}

/// Reads caches from a directory. A cache for a larger limit is accepted and
/// cut down; without any usable cache the source either sieves or fails.
#[derive(Clone, Debug)]
pub struct CacheSource {
	pub dir: PathBuf,
	pub sieve_if_missing: bool,
	pub sieve: SieveSource,
}

impl CacheSource {
	pub fn new(dir: impl Into<PathBuf>) -> Self {
		CacheSource { dir: dir.into(), sieve_if_missing: false, sieve: SieveSource::default() }
	}

	/// The smallest cache in the directory covering `limit`.
	pub fn find(&self, kind: BitmapKind, limit: u64) -> Option<PathBuf> {
		let exact = cache_path(&self.dir, kind, limit);
		if exact.is_file() {
			return Some(exact);
		}
		let prefix = format!("{}-", kind.name());
		let mut best: Option<(u64, PathBuf)> = None;
		for entry in std::fs::read_dir(&self.dir).ok()?.flatten() {
			let name = entry.file_name();
			let Some(l) = name
				.to_str()
				.and_then(|n| n.strip_prefix(&prefix))
				.and_then(|n| n.strip_suffix(".bin"))
				.and_then(|n| n.parse::<u64>().ok())
			else {
				continue;
			};
			if l >= limit && best.as_ref().is_none_or(|(b, _)| l < *b) {
				best = Some((l, entry.path()));
			}
		}
		best.map(|(_, p)| p)
	}
}

impl BitmapSource for CacheSource {
	fn load(&self, kind: BitmapKind, limit: u64) -> Result<Bitmap> {
		match self.find(kind, limit) {
			Some(path) => {
				let bitmap = read_bitmap(&path, kind)?;
				if bitmap.limit() == limit {
					Ok(bitmap)
				} else {
					bitmap.truncated(limit)
				}
			}
			None if self.sieve_if_missing => self.sieve.load(kind, limit),
			None => Err(Error::MissingCache {
				kind: kind.name().to_string(),
				limit,
				dir: display(&self.dir),
			}),
		}
	}
}

fn display(p: &Path) -> String {
	p.display().to_string()
}

type Slot = Mutex<Option<Arc<IndexedSequence>>>;

/// Cyclic data below `limit` and prime data below `prime_limit`, each built
/// at most once.
pub struct Universe {
	limit: u64,
	prime_limit: u64,
	source: Box<dyn BitmapSource>,
	cyclic: Slot,
	prime: Slot,
	sg_cyclic: Slot,
	sg_prime: Slot,
	near_square_cyclic: Slot,
	near_square_prime: Slot,
}

impl Universe {
	/// Sieves both kinds below the same limit on demand.
	pub fn new(limit: u64) -> Result<Self> {
		Universe::with_source(limit, limit, Box::new(SieveSource::default()))
	}

	pub fn with_source(limit: u64, prime_limit: u64, source: Box<dyn BitmapSource>) -> Result<Self> {
		if limit < 3 || prime_limit < 3 {
			return Err(Error::Param(format!("limits must be at least 3, got {limit} and {prime_limit}")));
		}
		Ok(Universe {
			limit,
			prime_limit,
			source,
			cyclic: Slot::default(),
			prime: Slot::default(),
			sg_cyclic: Slot::default(),
			sg_prime: Slot::default(),
			near_square_cyclic: Slot::default(),
			near_square_prime: Slot::default(),
		})
	}

	/// Strict bound on cyclic data.
	pub fn limit(&self) -> u64 {
		self.limit
	}

	/// Strict bound on prime data.
	pub fn prime_limit(&self) -> u64 {
		self.prime_limit
	}

	fn get(slot: &Slot, build: impl FnOnce() -> Result<IndexedSequence>) -> Result<Arc<IndexedSequence>> {
		let mut guard = slot.lock().unwrap_or_else(|e| e.into_inner());
		if let Some(s) = guard.as_ref() {
			return Ok(s.clone());
		}
		let s = Arc::new(build()?);
		*guard = Some(s.clone());
		Ok(s)
	}

	/// Cyclic numbers below the limit.
	pub fn cyclic(&self) -> Result<Arc<IndexedSequence>> {
		Universe::get(&self.cyclic, || {
			let b = self.source.load(BitmapKind::Cyclic, self.limit - 1)?;
			Ok(IndexedSequence::from_bitmap("cyclic", Arc::new(b)))
		})
	}

	/// Primes below the prime limit.
	pub fn prime(&self) -> Result<Arc<IndexedSequence>> {
		Universe::get(&self.prime, || {
			let b = self.source.load(BitmapKind::Prime, self.prime_limit - 1)?;
			Ok(IndexedSequence::from_bitmap("prime", Arc::new(b)))
		})
	}

	/// SG cyclics whose partner `2c + 1` is also below the limit.
	pub fn sg_cyclic(&self) -> Result<Arc<IndexedSequence>> {
		Universe::get(&self.sg_cyclic, || {
			let c = self.cyclic()?;
			Ok(sg_members(&c, SgClass::Cyclic, (self.limit - 2) / 2)?.sequence)
		})
	}

	/// SG primes whose partner is below the prime limit.
	pub fn sg_prime(&self) -> Result<Arc<IndexedSequence>> {
		Universe::get(&self.sg_prime, || {
			let p = self.prime()?;
			Ok(sg_members(&p, SgClass::Prime, (self.prime_limit - 2) / 2)?.sequence)
		})
	}

	pub fn near_square_cyclic(&self) -> Result<Arc<IndexedSequence>> {
		Universe::get(&self.near_square_cyclic, || {
			let c = self.cyclic()?;
			near_square_members(&c, self.limit - 1)
		})
	}

	pub fn near_square_prime(&self) -> Result<Arc<IndexedSequence>> {
		Universe::get(&self.near_square_prime, || {
			let p = self.prime()?;
			near_square_members(&p, self.prime_limit - 1)
		})
	}
}
