//! Classical cryptographic building blocks for the token lifts.
//!
//! Four primitives live here, each behind a small, fixed interface:
//!
//! * [`uowhf`]: a keyed one-way hash used *target-collision-resistant
//!   style*: a fresh index is sampled after the message is committed, so
//!   security only needs second-preimage hardness under a random key. Backed
//!   by SHA-2; the index is hashed ahead of the input.
//! * [`aead`]: authenticated encryption with the usual promise, any
//!   tampering with nonce, body or tag makes decryption fail. Built as
//!   encrypt-then-MAC over a hash keystream.
//! * [`jwise`]: j-wise independent function families as degree-(j-1)
//!   polynomials over GF(2^8) or GF(2^64), plus the one-time-pad style
//!   encryption they induce.
//! * [`wcmac`]: a Carter-Wegman MAC that can issue a bounded number of
//!   tags, one one-time pad per tag, with stateless verification.
//!
//! Everything is deterministic given its inputs and the caller's RNG.

pub mod aead;
pub mod gf;
pub mod jwise;
pub mod uowhf;
pub mod wcmac;

pub use aead::{aead_dec, aead_enc, aead_keygen, AeadCiphertext, AeadError, AeadKey};
pub use gf::{Gf64, Gf8, GfElem};
pub use jwise::{jdec, jenc, jwise_sample, JwiseBytesCiphertext, JwiseBytesKey, JwiseHash};
pub use uowhf::{uowhf_eval, uowhf_index, UowhfIndex};
pub use wcmac::{wc_keygen, wc_sign, wc_verify, WcMacError, WcMacKey};
