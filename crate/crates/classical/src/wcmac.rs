//! Carter-Wegman j-time MAC.
//!
//! Tags are a universal hash of the message one-time-padded with one of j
//! preshared pads. The hash is polynomial evaluation over GF(2^64) with a
//! length block, truncated to the requested tag width. The key carries its
//! own pad counter; the pad index rides along in clear inside the tag so
//! verification needs no state. Forging a fresh message means guessing a
//! `tag_bits`-bit value, so random tags land with probability 2^-tag_bits.

use rand::Rng;

use crate::gf::{Gf64, GfElem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WcMacError {
    /// All j pads have been spent; the key cannot sign again.
    #[error("all {0} one-time pads are spent")]
    PadExhausted(usize),
}

/// A j-time MAC key. Signing mutates the pad counter; verification is
/// read-only and may be shared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WcMacKey {
    point: Gf64,
    pads: Vec<u64>,
    tag_bits: u32,
    counter: usize,
}

impl WcMacKey {
    pub fn uses_left(&self) -> usize {
        self.pads.len() - self.counter
    }

    pub fn tag_bits(&self) -> u32 {
        self.tag_bits
    }

    fn body_mask(&self) -> u64 {
        if self.tag_bits == 64 { u64::MAX } else { (1u64 << self.tag_bits) - 1 }
    }

    fn tag_body(&self, index: usize, m: &[u8]) -> u64 {
        (uhash(self.point, m) ^ self.pads[index]) & self.body_mask()
    }

    /// Layout: hash point, then tag width, pad count and counter as
    /// big-endian u32, then the pads, all u64 big-endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(20 + self.pads.len() * 8);
        out.extend_from_slice(&self.point.to_u64().to_be_bytes());
        out.extend_from_slice(&self.tag_bits.to_be_bytes());
        out.extend_from_slice(&(self.pads.len() as u32).to_be_bytes());
        out.extend_from_slice(&(self.counter as u32).to_be_bytes());
        for pad in &self.pads {
            out.extend_from_slice(&pad.to_be_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        if bytes.len() < 20 {
            return None;
        }
        let point = Gf64(u64::from_be_bytes(bytes[0..8].try_into().unwrap()));
        let tag_bits = u32::from_be_bytes(bytes[8..12].try_into().unwrap());
        let j = u32::from_be_bytes(bytes[12..16].try_into().unwrap()) as usize;
        let counter = u32::from_be_bytes(bytes[16..20].try_into().unwrap()) as usize;
        let body = &bytes[20..];
        if !(1..=64).contains(&tag_bits) || j == 0 || counter > j || body.len() != j * 8 {
            return None;
        }
        let pads = body.chunks(8).map(|c| u64::from_be_bytes(c.try_into().unwrap())).collect();
        Some(WcMacKey { point, pads, tag_bits, counter })
    }
}

/// Polynomial hash of `m` over GF(2^64): big-endian 8-byte blocks
/// (zero-padded tail) followed by a length block, folded as
/// `acc = (acc + block) * k`. The length block separates messages that
/// differ only by trailing zero bytes.
fn uhash(point: Gf64, m: &[u8]) -> u64 {
    let mut acc = Gf64::zero();
    for chunk in m.chunks(8) {
        let mut word = [0u8; 8];
        word[..chunk.len()].copy_from_slice(chunk);
        acc = acc.add(Gf64(u64::from_be_bytes(word))).mul(point);
    }
    acc = acc.add(Gf64(m.len() as u64)).mul(point);
    acc.to_u64()
}

/// Sample a key good for `j` signatures with `tag_bits`-bit tag bodies
/// (`1..=64`).
pub fn wc_keygen<R: Rng + ?Sized>(j: usize, tag_bits: u32, rng: &mut R) -> WcMacKey {
    assert!(j >= 1, "a MAC key must be good for at least one signature");
    assert!((1..=64).contains(&tag_bits), "tag width must be 1..=64 bits");
    WcMacKey {
        point: Gf64::sample(rng),
        pads: (0..j).map(|_| rng.gen()).collect(),
        tag_bits,
        counter: 0,
    }
}

/// Tag layout: pad index as big-endian u32, then the padded hash body as a
/// big-endian u64 masked to `tag_bits`.
pub fn wc_sign(key: &mut WcMacKey, m: &[u8]) -> Result<Vec<u8>, WcMacError> {
    if key.counter >= key.pads.len() {
        return Err(WcMacError::PadExhausted(key.pads.len()));
    }
    let index = key.counter;
    key.counter += 1;
    let mut tag = Vec::with_capacity(12);
    tag.extend_from_slice(&(index as u32).to_be_bytes());
    tag.extend_from_slice(&key.tag_body(index, m).to_be_bytes());
    Ok(tag)
}

pub fn wc_verify(key: &WcMacKey, m: &[u8], tag: &[u8]) -> bool {
    if tag.len() != 12 {
        return false;
    }
    let index = u32::from_be_bytes(tag[..4].try_into().unwrap()) as usize;
    if index >= key.pads.len() {
        return false;
    }
    let body = u64::from_be_bytes(tag[4..].try_into().unwrap());
    body == key.tag_body(index, m)
}
