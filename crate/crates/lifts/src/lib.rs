//! Lifting layers that grow the one-bit token MAC into a full scheme.
//!
//! Every layer implements [`TmacScheme`] and wraps another `TmacScheme`, so
//! towers compose freely:
//!
//! * [`CtmacBase`]: the one-bit scheme, ground floor.
//! * [`Otl`]: fixed-length documents via one instance per bit.
//! * [`Ot`]: unrestricted documents via hash-and-sign with a fresh index.
//! * [`Tom`]: unbounded token issuance under one AEAD master key.
//! * [`Tms`]: many signatures per document via published salt.
//! * [`TomJ`]: exactly j tokens, information theoretically.
//!
//! [`FullCtmac`] is the flat, single-pass version of the salted tower; the
//! stacked and flat formulations are kept behaviorally interchangeable by
//! tests, with [`composed_ctmac`] building the stacked reference.

pub mod base;
pub mod full;
pub mod ot;
pub mod otl;
pub mod scheme;
pub mod tms;
pub mod tom;
pub mod tomj;
pub mod wire;

pub use base::CtmacBase;
pub use full::{composed_ctmac, ComposedCtmac, FullCtmac, FullSignature, FullToken};
pub use ot::{Ot, OtSignature};
pub use otl::Otl;
pub use scheme::{bytes_to_bits, corrupt_token, DocumentDomain, LiftError, TmacScheme};
pub use tms::{Tms, TmsSignature};
pub use tom::{Tom, TomSignature, TomToken};
pub use tomj::{TomJ, TomJKey, TomJSignature, TomJToken};
