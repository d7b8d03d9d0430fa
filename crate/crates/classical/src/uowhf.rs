//! Keyed compressing hash with a freshly sampled index.
//!
//! `uowhf_index` draws a random `lambda`-bit index `s`; `uowhf_eval(s, x)`
//! hashes `s || x` with SHA-2 and truncates to the requested output width.
//! The index length is framed into the hash input, so `(s, x)` boundaries
//! are unambiguous for every index size.

use rand::Rng;
use sha2::{Digest, Sha256, Sha512};

/// Default output width in bits for the workspace profile.
pub const DEFAULT_OUTPUT_BITS: usize = 256;

/// A sampled hash index (`lambda` bits, stored packed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UowhfIndex {
    bits: Vec<bool>,
}

impl UowhfIndex {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        UowhfIndex { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn lambda(&self) -> usize {
        self.bits.len()
    }

    fn packed(&self) -> Vec<u8> {
        let mut bytes = vec![0u8; self.bits.len().div_ceil(8)];
        for (i, &bit) in self.bits.iter().enumerate() {
            if bit {
                bytes[i / 8] |= 0x80 >> (i % 8);
            }
        }
        bytes
    }
}

/// Sample a fresh `lambda`-bit index.
pub fn uowhf_index<R: Rng + ?Sized>(lambda: usize, rng: &mut R) -> UowhfIndex {
    assert!(lambda >= 1, "index must have at least one bit");
    UowhfIndex { bits: (0..lambda).map(|_| rng.gen()).collect() }
}

/// Hash `x` under index `s`, producing `out_bits` bits (at most 512).
pub fn uowhf_eval(s: &UowhfIndex, x: &[u8], out_bits: usize) -> Vec<bool> {
    assert!((1..=512).contains(&out_bits), "output width {out_bits} outside 1..=512");
    let mut framed = Vec::with_capacity(16 + s.lambda() / 8 + x.len());
    framed.extend_from_slice(&(s.lambda() as u64).to_be_bytes());
    framed.extend_from_slice(&s.packed());
    framed.extend_from_slice(x);
    let digest: Vec<u8> = if out_bits <= 256 {
        Sha256::digest(&framed).to_vec()
    } else {
        Sha512::digest(&framed).to_vec()
    };
    (0..out_bits).map(|i| digest[i / 8] & (0x80 >> (i % 8)) != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn output_has_the_requested_width() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = uowhf_index(128, &mut rng);
        for &w in &[1usize, 7, 256, 300, 512] {
            assert_eq!(uowhf_eval(&s, b"doc", w).len(), w);
        }
    }

    #[test]
    fn evaluation_is_deterministic_and_index_sensitive() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let s1 = uowhf_index(128, &mut rng);
        let s2 = uowhf_index(128, &mut rng);
        assert_eq!(uowhf_eval(&s1, b"m", 256), uowhf_eval(&s1, b"m", 256));
        assert_ne!(uowhf_eval(&s1, b"m", 256), uowhf_eval(&s2, b"m", 256));
        assert_ne!(uowhf_eval(&s1, b"m", 256), uowhf_eval(&s1, b"n", 256));
    }

    #[test]
    fn truncation_is_a_prefix() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = uowhf_index(64, &mut rng);
        let long = uowhf_eval(&s, b"prefix-check", 256);
        let short = uowhf_eval(&s, b"prefix-check", 40);
        assert_eq!(&long[..40], &short[..]);
    }
}
