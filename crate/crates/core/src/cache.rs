//! On-disk bitmap cache.
//!
//! Little-endian layout:
//!
//! ```text
//! magic        4 bytes   "CYC1" or "PRM1"
//! version      u32       currently 1
//! limit        u64
//! word count   u64
//! words        word count * u64
//! block counts (word count / 1024 rounded up, plus one) * u64
//! crc32        u32       over every preceding byte
//! ```

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::bitmap::{block_counts_of, word_count, Bitmap, BitmapKind, WORDS_PER_BLOCK};
use crate::error::{Error, Result};

pub const VERSION: u32 = 1;

fn magic(kind: BitmapKind) -> &'static [u8; 4] {
	match kind {
		BitmapKind::Cyclic => b"CYC1",
		BitmapKind::Prime => b"PRM1",
	}
}

/// Conventional file name for a (kind, limit) cache inside a directory.
pub fn cache_path(dir: &Path, kind: BitmapKind, limit: u64) -> PathBuf {
	dir.join(format!("{}-{limit}.bin", kind.name()))
}

struct CrcWriter<W: Write> {
	inner: W,
	hasher: crc32fast::Hasher,
}

impl<W: Write> CrcWriter<W> {
	fn put(&mut self, bytes: &[u8]) -> Result<()> {
		self.hasher.update(bytes);
		self.inner.write_all(bytes)?;
		Ok(())
	}
}

pub fn write_bitmap(path: &Path, bitmap: &Bitmap) -> Result<()> {
	let file = File::create(path)?;
	let mut w = CrcWriter { inner: BufWriter::new(file), hasher: crc32fast::Hasher::new() };
	w.put(magic(bitmap.kind()))?;
	w.put(&VERSION.to_le_bytes())?;
	w.put(&bitmap.limit().to_le_bytes())?;
	w.put(&(bitmap.words().len() as u64).to_le_bytes())?;
	for chunk in bitmap.words().chunks(8192) {
		let bytes: Vec<u8> = chunk.iter().flat_map(|x| x.to_le_bytes()).collect();
		w.put(&bytes)?;
	}
	let bytes: Vec<u8> = bitmap.block_counts().iter().flat_map(|x| x.to_le_bytes()).collect();
	w.put(&bytes)?;
	let crc = w.hasher.clone().finalize();
	w.inner.write_all(&crc.to_le_bytes())?;
	w.inner.flush()?;
	Ok(())
}

struct CrcReader<R: Read> {
	inner: R,
	hasher: crc32fast::Hasher,
}

impl<R: Read> CrcReader<R> {
	fn take(&mut self, buf: &mut [u8]) -> Result<()> {
		self.inner
			.read_exact(buf)
			.map_err(|_| Error::CorruptCache("file is truncated".into()))?;
		self.hasher.update(buf);
		Ok(())
	}

	fn u32(&mut self) -> Result<u32> {
		let mut b = [0u8; 4];
		self.take(&mut b)?;
		Ok(u32::from_le_bytes(b))
	}

	fn u64(&mut self) -> Result<u64> {
		let mut b = [0u8; 8];
		self.take(&mut b)?;
		Ok(u64::from_le_bytes(b))
	}

	fn u64s(&mut self, n: usize) -> Result<Vec<u64>> {
		let mut out = Vec::with_capacity(n);
		let mut buf = vec![0u8; 8 * 8192];
		let mut left = n;
		while left > 0 {
			let take = left.min(8192);
			self.take(&mut buf[..8 * take])?;
			out.extend(buf[..8 * take].chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())));
			left -= take;
		}
		Ok(out)
	}
}

/// Reads and fully validates a cache file: magic, version, sizes, rank
/// directory against popcounts, and the checksum.
pub fn read_bitmap(path: &Path, kind: BitmapKind) -> Result<Bitmap> {
	let file = File::open(path)?;
	let mut r = CrcReader { inner: BufReader::new(file), hasher: crc32fast::Hasher::new() };
	let mut m = [0u8; 4];
	r.take(&mut m)?;
	if &m != magic(kind) {
		return Err(Error::CorruptCache(format!(
			"bad magic {:?}, expected {:?}",
			String::from_utf8_lossy(&m),
			String::from_utf8_lossy(magic(kind))
		)));
	}
	let version = r.u32()?;
	if version != VERSION {
		return Err(Error::CorruptCache(format!("unsupported version {version}")));
	}
	let limit = r.u64()?;
	let words_len = r.u64()? as usize;
	if words_len != word_count(limit) {
		return Err(Error::CorruptCache(format!(
			"word count {words_len} does not match limit {limit}"
		)));
	}
	let words = r.u64s(words_len)?;
	let blocks = words_len.div_ceil(WORDS_PER_BLOCK) + 1;
	let block_counts = r.u64s(blocks)?;
	let expected = r.hasher.clone().finalize();
	let mut crc = [0u8; 4];
	r.inner
		.read_exact(&mut crc)
		.map_err(|_| Error::CorruptCache("missing checksum".into()))?;
	if u32::from_le_bytes(crc) != expected {
		return Err(Error::CorruptCache("checksum mismatch".into()));
	}
	if r.inner.read(&mut [0u8; 1])? != 0 {
		return Err(Error::CorruptCache("trailing bytes after checksum".into()));
	}
	if block_counts != block_counts_of(&words) {
		return Err(Error::CorruptCache("block counts disagree with popcounts".into()));
	}
	let tail = limit % 64;
	if tail != 0 && words.last().is_some_and(|w| w >> tail != 0) {
		return Err(Error::CorruptCache("bits set beyond limit".into()));
	}
	Ok(Bitmap::from_parts(kind, limit, words, block_counts))
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::sieve::{build_cyclic_bitmap, SieveConfig};

	#[test]
	fn round_trip_and_corruption() {
		let dir = tempfile::tempdir().unwrap();
		let b = build_cyclic_bitmap(&SieveConfig::new(200_000)).unwrap();
		let path = cache_path(dir.path(), BitmapKind::Cyclic, 200_000);
		write_bitmap(&path, &b).unwrap();
		assert_eq!(read_bitmap(&path, BitmapKind::Cyclic).unwrap(), b);
		assert!(read_bitmap(&path, BitmapKind::Prime).is_err());

		let mut bytes = std::fs::read(&path).unwrap();
		bytes[100] ^= 0x10;
		std::fs::write(&path, &bytes).unwrap();
		assert!(matches!(read_bitmap(&path, BitmapKind::Cyclic), Err(Error::CorruptCache(_))));

		bytes[100] ^= 0x10;
		bytes.truncate(bytes.len() - 1);
		std::fs::write(&path, &bytes).unwrap();
		assert!(matches!(read_bitmap(&path, BitmapKind::Cyclic), Err(Error::CorruptCache(_))));
	}
}
