//! Binary framing shared by every layer's key and signature codecs.
//!
//! Layout rules: one tag byte per signature layer, big-endian u32 length
//! prefixes, fields in the order the layer's signing algorithm returns
//! them. Bit strings travel as a u32 bit count followed by MSB-first
//! packed bytes with zero padding; readers reject nonzero padding so every
//! byte string parses to at most one value.

pub const TAG_CTMAC: u8 = 0x01;
pub const TAG_OTL: u8 = 0x02;
pub const TAG_OT: u8 = 0x03;
pub const TAG_TOM: u8 = 0x04;
pub const TAG_TMS: u8 = 0x05;
pub const TAG_TOMJ: u8 = 0x06;
pub const TAG_FULL: u8 = 0x07;

pub fn pack_bits(bits: &[bool]) -> Vec<u8> {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (i, &bit) in bits.iter().enumerate() {
        if bit {
            bytes[i / 8] |= 0x80 >> (i % 8);
        }
    }
    bytes
}

/// Bit-length framed packing, the canonical hash-input encoding for bit
/// documents: big-endian u64 bit count, then the packed bits.
pub fn pack_bits_framed(bits: &[bool]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + bits.len() / 8 + 1);
    out.extend_from_slice(&(bits.len() as u64).to_be_bytes());
    out.extend_from_slice(&pack_bits(bits));
    out
}

#[derive(Default)]
pub struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    pub fn new() -> Self {
        Writer::default()
    }

    pub fn put_u8(&mut self, v: u8) -> &mut Self {
        self.buf.push(v);
        self
    }

    pub fn put_u32(&mut self, v: u32) -> &mut Self {
        self.buf.extend_from_slice(&v.to_be_bytes());
        self
    }

    pub fn put_bits(&mut self, bits: &[bool]) -> &mut Self {
        self.put_u32(bits.len() as u32);
        self.buf.extend_from_slice(&pack_bits(bits));
        self
    }

    pub fn put_block(&mut self, bytes: &[u8]) -> &mut Self {
        self.put_u32(bytes.len() as u32);
        self.buf.extend_from_slice(bytes);
        self
    }

    pub fn finish(self) -> Vec<u8> {
        self.buf
    }
}

pub struct Reader<'a> {
    rest: &'a [u8],
}

impl<'a> Reader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Reader { rest: bytes }
    }

    pub fn u8(&mut self) -> Option<u8> {
        let (&v, rest) = self.rest.split_first()?;
        self.rest = rest;
        Some(v)
    }

    pub fn expect_tag(&mut self, tag: u8) -> Option<()> {
        (self.u8()? == tag).then_some(())
    }

    pub fn u32(&mut self) -> Option<u32> {
        if self.rest.len() < 4 {
            return None;
        }
        let (head, rest) = self.rest.split_at(4);
        self.rest = rest;
        Some(u32::from_be_bytes(head.try_into().unwrap()))
    }

    pub fn bits(&mut self) -> Option<Vec<bool>> {
        let n = self.u32()? as usize;
        let packed = self.take(n.div_ceil(8))?;
        let mut bits = Vec::with_capacity(n);
        for i in 0..n {
            bits.push(packed[i / 8] & (0x80 >> (i % 8)) != 0);
        }
        // Nonzero padding would let two byte strings decode to one value.
        if n % 8 != 0 && packed[n / 8] & (0xff >> (n % 8)) != 0 {
            return None;
        }
        Some(bits)
    }

    pub fn block(&mut self) -> Option<&'a [u8]> {
        let n = self.u32()? as usize;
        self.take(n)
    }

    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        if self.rest.len() < n {
            return None;
        }
        let (head, rest) = self.rest.split_at(n);
        self.rest = rest;
        Some(head)
    }

    /// Succeeds only when every byte has been consumed.
    pub fn finish(self) -> Option<()> {
        self.rest.is_empty().then_some(())
    }
}
