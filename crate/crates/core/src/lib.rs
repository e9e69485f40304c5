//! Cyclic numbers, n with gcd(n, φ(n)) = 1, alongside the primes: sieves,
//! indexed sequences, count estimates, conjecture checks and plot data.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arith;
pub mod asymptotics;
pub mod bitmap;
pub mod cache;
pub mod error;
pub mod figures;
pub mod sequences;
pub mod sieve;
pub mod stats;
pub mod universe;
pub mod verifiers;

pub use bitmap::{Bitmap, BitmapKind};
pub use error::{Error, Result};
pub use sieve::{build_cyclic_bitmap, build_prime_bitmap, SieveConfig};
