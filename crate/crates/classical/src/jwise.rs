//! j-wise independent hashing and the encryption it induces.
//!
//! A uniformly random degree-(j-1) polynomial over a finite field is a
//! j-wise independent function family: any j distinct inputs map to
//! uniformly independent outputs. `jenc` turns one such function into an
//! encryption scheme good for j uses: `enc(m) = (h(r) + m, r)` with a fresh
//! public `r` per ciphertext.
//!
//! [`JwiseBytesKey`] extends the single-element scheme to byte strings for
//! the key-encryption lift: one independent hash per 64-bit block, all
//! evaluated at one shared fresh `r`. Block families are mutually
//! independent, so the joint ciphertext stays j-wise secure.

use rand::Rng;

use crate::gf::{Gf64, GfElem};

/// A uniformly sampled degree-(j-1) polynomial `h(x) = sum c_i x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JwiseHash<F: GfElem> {
    coeffs: Vec<F>, // c_0 .. c_{j-1}
}

impl<F: GfElem> JwiseHash<F> {
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a hash needs at least the constant coefficient");
        JwiseHash { coeffs }
    }

    pub fn j(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: F) -> F {
        let mut acc = F::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Coefficients in order, each as `BITS/8` big-endian bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let width = F::BITS.div_ceil(8) as usize;
        let mut out = Vec::with_capacity(self.coeffs.len() * width);
        for c in &self.coeffs {
            out.extend_from_slice(&c.to_u64().to_be_bytes()[8 - width..]);
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        let width = F::BITS.div_ceil(8) as usize;
        if bytes.is_empty() || bytes.len() % width != 0 {
            return None;
        }
        let coeffs = bytes
            .chunks(width)
            .map(|chunk| {
                let mut word = [0u8; 8];
                word[8 - width..].copy_from_slice(chunk);
                F::from_u64(u64::from_be_bytes(word))
            })
            .collect();
        Some(JwiseHash { coeffs })
    }
}

/// Sample a fresh member of the j-wise family (`j >= 1`; `j = 1` is the
/// constant family).
pub fn jwise_sample<F: GfElem, R: Rng + ?Sized>(j: usize, rng: &mut R) -> JwiseHash<F> {
    assert!(j >= 1, "independence parameter must be at least 1");
    JwiseHash { coeffs: (0..j).map(|_| F::sample(rng)).collect() }
}

/// One-time-pad a field element with `h(r)` for fresh public `r`.
pub fn jenc<F: GfElem, R: Rng + ?Sized>(h: &JwiseHash<F>, m: F, rng: &mut R) -> (F, F) {
    let r = F::sample(rng);
    (h.eval(r).add(m), r)
}

/// Invert [`jenc`] deterministically.
pub fn jdec<F: GfElem>(h: &JwiseHash<F>, ct: (F, F)) -> F {
    h.eval(ct.1).add(ct.0)
}

/// Block cipher over byte strings of a fixed length: one hash per 64-bit
/// block, one shared `r` per ciphertext.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JwiseBytesKey {
    hashes: Vec<JwiseHash<Gf64>>,
    msg_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JwiseBytesCiphertext {
    pub blocks: Vec<u64>,
    pub r: u64,
}

impl JwiseBytesCiphertext {
    /// Layout: block count as big-endian u32, then `r`, then the masked
    /// blocks, all big-endian u64.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + self.blocks.len() * 8);
        out.extend_from_slice(&(self.blocks.len() as u32).to_be_bytes());
        out.extend_from_slice(&self.r.to_be_bytes());
        for b in &self.blocks {
            out.extend_from_slice(&b.to_be_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        if bytes.len() < 12 {
            return None;
        }
        let n = u32::from_be_bytes(bytes[0..4].try_into().unwrap()) as usize;
        let r = u64::from_be_bytes(bytes[4..12].try_into().unwrap());
        let body = &bytes[12..];
        if body.len() != n * 8 {
            return None;
        }
        let blocks =
            body.chunks(8).map(|c| u64::from_be_bytes(c.try_into().unwrap())).collect();
        Some(JwiseBytesCiphertext { blocks, r })
    }
}

impl JwiseBytesKey {
    pub fn sample<R: Rng + ?Sized>(j: usize, msg_len: usize, rng: &mut R) -> Self {
        let n_blocks = msg_len.div_ceil(8).max(1);
        JwiseBytesKey { hashes: (0..n_blocks).map(|_| jwise_sample(j, rng)).collect(), msg_len }
    }

    pub fn msg_len(&self) -> usize {
        self.msg_len
    }

    pub fn enc<R: Rng + ?Sized>(&self, msg: &[u8], rng: &mut R) -> JwiseBytesCiphertext {
        assert_eq!(msg.len(), self.msg_len, "key is fixed to {}-byte messages", self.msg_len);
        let r = Gf64::sample(rng);
        let blocks = self
            .hashes
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let mut word = [0u8; 8];
                let start = i * 8;
                if start < msg.len() {
                    let end = (start + 8).min(msg.len());
                    word[..end - start].copy_from_slice(&msg[start..end]);
                }
                h.eval(r).to_u64() ^ u64::from_be_bytes(word)
            })
            .collect();
        JwiseBytesCiphertext { blocks, r: r.to_u64() }
    }

    pub fn dec(&self, ct: &JwiseBytesCiphertext) -> Vec<u8> {
        assert_eq!(ct.blocks.len(), self.hashes.len(), "block count mismatch");
        let r = Gf64::from_u64(ct.r);
        let mut out = Vec::with_capacity(self.msg_len);
        for (h, &block) in self.hashes.iter().zip(&ct.blocks) {
            out.extend_from_slice(&(h.eval(r).to_u64() ^ block).to_be_bytes());
        }
        out.truncate(self.msg_len);
        out
    }

    /// Layout: j, block count and message length as big-endian u32, then
    /// every coefficient of every block hash.
    pub fn to_bytes(&self) -> Vec<u8> {
        let j = self.hashes[0].j() as u32;
        let mut out = Vec::new();
        out.extend_from_slice(&j.to_be_bytes());
        out.extend_from_slice(&(self.hashes.len() as u32).to_be_bytes());
        out.extend_from_slice(&(self.msg_len as u32).to_be_bytes());
        for h in &self.hashes {
            out.extend_from_slice(&h.to_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        if bytes.len() < 12 {
            return None;
        }
        let j = u32::from_be_bytes(bytes[0..4].try_into().unwrap()) as usize;
        let n_blocks = u32::from_be_bytes(bytes[4..8].try_into().unwrap()) as usize;
        let msg_len = u32::from_be_bytes(bytes[8..12].try_into().unwrap()) as usize;
        if j == 0 || n_blocks != msg_len.div_ceil(8).max(1) {
            return None;
        }
        let body = &bytes[12..];
        if body.len() != j * n_blocks * 8 {
            return None;
        }
        let hashes = body.chunks(j * 8).map(JwiseHash::from_bytes).collect::<Option<_>>()?;
        Some(JwiseBytesKey { hashes, msg_len })
    }
}
