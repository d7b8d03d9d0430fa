//! Authenticated encryption, encrypt-then-MAC.
//!
//! The keystream is SHA-256 in counter mode over (key, nonce, block index);
//! the tag is a nested keyed hash (NMAC-style) of nonce || ciphertext under
//! an independent MAC subkey. Decryption recomputes the tag first and
//! refuses to touch the body on any mismatch, so a single flipped bit
//! anywhere in the wire format surfaces as [`AeadError::Invalid`].

use rand::Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const NONCE_LEN: usize = 16;
pub const TAG_LEN: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AeadError {
    #[error("ciphertext failed authentication")]
    Invalid,
    #[error("ciphertext too short: {0} bytes")]
    TooShort(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AeadKey {
    enc: [u8; 32],
    mac: [u8; 32],
}

impl AeadKey {
    /// 64 bytes: encryption subkey then MAC subkey.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(64);
        out.extend_from_slice(&self.enc);
        out.extend_from_slice(&self.mac);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        if bytes.len() != 64 {
            return None;
        }
        let mut enc = [0u8; 32];
        let mut mac = [0u8; 32];
        enc.copy_from_slice(&bytes[..32]);
        mac.copy_from_slice(&bytes[32..]);
        Some(AeadKey { enc, mac })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AeadCiphertext {
    pub nonce: [u8; NONCE_LEN],
    pub body: Vec<u8>,
    pub tag: [u8; TAG_LEN],
}

impl AeadCiphertext {
    /// Wire layout: nonce || body || tag.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(NONCE_LEN + self.body.len() + TAG_LEN);
        out.extend_from_slice(&self.nonce);
        out.extend_from_slice(&self.body);
        out.extend_from_slice(&self.tag);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, AeadError> {
        if bytes.len() < NONCE_LEN + TAG_LEN {
            return Err(AeadError::TooShort(bytes.len()));
        }
        let mut nonce = [0u8; NONCE_LEN];
        nonce.copy_from_slice(&bytes[..NONCE_LEN]);
        let mut tag = [0u8; TAG_LEN];
        tag.copy_from_slice(&bytes[bytes.len() - TAG_LEN..]);
        Ok(AeadCiphertext { nonce, body: bytes[NONCE_LEN..bytes.len() - TAG_LEN].to_vec(), tag })
    }
}

/// Sample a fresh key. `lambda` is the nominal security parameter; the
/// profile always uses 256-bit subkeys, so anything up to 256 is served by
/// the same material.
pub fn aead_keygen<R: Rng + ?Sized>(lambda: usize, rng: &mut R) -> AeadKey {
    assert!((1..=256).contains(&lambda), "supported security parameter range is 1..=256");
    let mut enc = [0u8; 32];
    let mut mac = [0u8; 32];
    rng.fill(&mut enc);
    rng.fill(&mut mac);
    AeadKey { enc, mac }
}

fn keystream_xor(key: &AeadKey, nonce: &[u8; NONCE_LEN], data: &mut [u8]) {
    for (block_idx, chunk) in data.chunks_mut(32).enumerate() {
        let mut h = Sha256::new();
        h.update(key.enc);
        h.update(nonce);
        h.update((block_idx as u64).to_be_bytes());
        let pad = h.finalize();
        for (byte, &p) in chunk.iter_mut().zip(pad.iter()) {
            *byte ^= p;
        }
    }
}

fn compute_tag(key: &AeadKey, nonce: &[u8; NONCE_LEN], body: &[u8]) -> [u8; TAG_LEN] {
    let mut inner = Sha256::new();
    inner.update(key.mac);
    inner.update(nonce);
    inner.update(body);
    let mut outer = Sha256::new();
    outer.update(key.mac);
    outer.update(inner.finalize());
    outer.finalize().into()
}

/// Encrypt `plaintext` under a fresh random nonce.
pub fn aead_enc<R: Rng + ?Sized>(key: &AeadKey, plaintext: &[u8], rng: &mut R) -> AeadCiphertext {
    let mut nonce = [0u8; NONCE_LEN];
    rng.fill(&mut nonce);
    let mut body = plaintext.to_vec();
    keystream_xor(key, &nonce, &mut body);
    let tag = compute_tag(key, &nonce, &body);
    AeadCiphertext { nonce, body, tag }
}

/// Authenticate, then decrypt. Deterministic in `(key, ciphertext)`.
pub fn aead_dec(key: &AeadKey, ct: &AeadCiphertext) -> Result<Vec<u8>, AeadError> {
    if compute_tag(key, &ct.nonce, &ct.body) != ct.tag {
        return Err(AeadError::Invalid);
    }
    let mut body = ct.body.clone();
    keystream_xor(key, &ct.nonce, &mut body);
    Ok(body)
}
