//! Attractor censuses of Boolean automata cycles and double-cycles, and the
//! forbidden-factor necklace counts that describe them.
//!
//! * [`numtheory`]: divisors, Möbius, totient, Dirichlet convolution, Lucas and Perrin.
//! * [`words`]: cyclic binary words, forbidden-factor families, interleavings.
//! * [`ban`]: network construction, parallel dynamics, exhaustive attractor census.
//! * [`counting`]: closed-form period counts and the attractor-count bounds.
//! * [`injection`]: the injective map from periodic to primitive necklaces and its decoder.
//! * [`cli`]: command-line front end.

pub mod ban;
pub mod cli;
pub mod counting;
pub mod error;
pub mod injection;
pub mod numtheory;
pub mod words;

pub use error::{Error, Result};

/// No network or word larger than this is ever enumerated.
pub const HARD_LIMIT: usize = 24;

/// Cap used when the caller does not pick one.
pub const DEFAULT_CAP: usize = 24;

/// Fails with [`Error::CapExceeded`] when `size` exceeds `cap` or the hard limit.
pub fn check_cap(size: usize, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_LIMIT);
    if size > cap {
        Err(Error::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}
