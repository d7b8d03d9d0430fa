//! Wire encodings.
//!
//! Keys and signatures travel as hex-encoded bitstrings with an explicit
//! bit length (`"<len>:<hex>"`, bits packed MSB-first, zero padding in the
//! final byte). Decoding checks the length, the hex digit count and the
//! padding, so trailing garbage cannot round-trip silently.
//!
//! Tokens are quantum states; with the `insecure-debug` feature a textual
//! dump is available for inspecting simulations, and nothing else.

use thiserror::Error;

use crate::{CtmacError, SecretKey1, Signature1};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("malformed bitstring encoding: {0}")]
    Malformed(String),
    #[error(transparent)]
    Key(#[from] CtmacError),
}

/// `"<len>:<hex>"` with MSB-first packing.
pub fn encode_bits(bits: &[bool]) -> String {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (i, &bit) in bits.iter().enumerate() {
        if bit {
            bytes[i / 8] |= 0x80 >> (i % 8);
        }
    }
    format!("{}:{}", bits.len(), hex::encode(bytes))
}

pub fn decode_bits(s: &str) -> Result<Vec<bool>, CodecError> {
    let (len_part, hex_part) =
        s.split_once(':').ok_or_else(|| CodecError::Malformed("missing ':'".into()))?;
    let len: usize =
        len_part.parse().map_err(|_| CodecError::Malformed(format!("bad length '{len_part}'")))?;
    let bytes = hex::decode(hex_part).map_err(|e| CodecError::Malformed(e.to_string()))?;
    if bytes.len() != len.div_ceil(8) {
        return Err(CodecError::Malformed(format!(
            "{} hex bytes cannot hold exactly {len} bits",
            bytes.len()
        )));
    }
    let bits: Vec<bool> = (0..len).map(|i| bytes[i / 8] & (0x80 >> (i % 8)) != 0).collect();
    // Reject nonzero padding so every bitstring has one encoding.
    for i in len..bytes.len() * 8 {
        if bytes[i / 8] & (0x80 >> (i % 8)) != 0 {
            return Err(CodecError::Malformed("nonzero padding bits".into()));
        }
    }
    Ok(bits)
}

impl SecretKey1 {
    pub fn to_hex(&self) -> String {
        format!("{};{}", encode_bits(self.a()), encode_bits(self.b()))
    }

    pub fn from_hex(s: &str) -> Result<Self, CodecError> {
        let (a_part, b_part) =
            s.split_once(';').ok_or_else(|| CodecError::Malformed("missing ';'".into()))?;
        let a = decode_bits(a_part)?;
        let b = decode_bits(b_part)?;
        Ok(SecretKey1::new(a, b)?)
    }
}

impl Signature1 {
    pub fn to_hex(&self) -> String {
        encode_bits(&self.bits)
    }

    pub fn from_hex(s: &str) -> Result<Self, CodecError> {
        Ok(Signature1 { bits: decode_bits(s)? })
    }
}

/// Debug-only token dump: one character per qubit (`0 1 + - M`), with a
/// trailing `!` once the token has been consumed.
#[cfg(feature = "insecure-debug")]
pub fn token_debug_string(token: &crate::Token) -> String {
    use bb84::{Basis, QubitState};
    let mut s: String = token
        .qubits()
        .iter()
        .map(|q| match q {
            QubitState::Pure { bit: false, basis: Basis::Computational } => '0',
            QubitState::Pure { bit: true, basis: Basis::Computational } => '1',
            QubitState::Pure { bit: false, basis: Basis::Hadamard } => '+',
            QubitState::Pure { bit: true, basis: Basis::Hadamard } => '-',
            QubitState::MaximallyMixed => 'M',
        })
        .collect();
    if token.is_consumed() {
        s.push('!');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_round_trips() {
        let bits: Vec<bool> = "1011001110001".chars().map(|c| c == '1').collect();
        let s = encode_bits(&bits);
        assert_eq!(s, "13:b388");
        assert_eq!(decode_bits(&s).unwrap(), bits);
        assert_eq!(decode_bits("0:").unwrap(), Vec::<bool>::new());
    }

    #[test]
    fn malformed_encodings_are_rejected() {
        assert!(decode_bits("12").is_err());
        assert!(decode_bits("x:ff").is_err());
        assert!(decode_bits("3:zz").is_err());
        assert!(decode_bits("3:ffff").is_err(), "too many bytes for 3 bits");
        assert!(decode_bits("3:ff").is_err(), "padding bits must be zero");
        assert!(decode_bits("13:b389").is_err(), "padding bits must be zero");
    }

    #[cfg(feature = "insecure-debug")]
    #[test]
    fn token_debug_dump_shows_states_and_consumption() {
        use bb84::rng::stream;
        let key = SecretKey1::new(
            vec![false, true, false, true],
            vec![false, false, true, true],
        )
        .unwrap();
        let mut token = crate::token_gen(&key);
        assert_eq!(token_debug_string(&token), "01+-");
        crate::sign(&mut token, false, &mut stream(0, 0)).unwrap();
        assert_eq!(token_debug_string(&token), "01+-!");
    }

    #[test]
    fn key_hex_round_trip_enforces_equal_lengths() {
        let key = SecretKey1::new(vec![true, false, true], vec![false, false, true]).unwrap();
        let s = key.to_hex();
        assert_eq!(SecretKey1::from_hex(&s).unwrap(), key);
        // Hand-build a mixed-length encoding: decode must fail.
        let broken = format!("{};{}", encode_bits(&[true, false]), encode_bits(&[true]));
        assert!(matches!(SecretKey1::from_hex(&broken), Err(CodecError::Key(_))));
    }
}
