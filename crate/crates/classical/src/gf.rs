//! Binary field arithmetic for the limited-independence machinery.
//!
//! Two concrete fields: GF(2^8) reduced by x^8 + x^4 + x^3 + x + 1 and
//! GF(2^64) reduced by x^64 + x^4 + x^3 + x + 1. Addition is XOR;
//! multiplication is carry-less shift-and-add with reduction folded in.

use rand::Rng;

/// The operations the polynomial-hash code needs from a binary field.
pub trait GfElem: Copy + Eq + std::fmt::Debug {
    const BITS: u32;
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Self;
    fn mul(self, other: Self) -> Self;
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;
    fn to_u64(self) -> u64;
    fn from_u64(v: u64) -> Self;
}

/// GF(2^8), the AES field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf8(pub u8);

impl GfElem for Gf8 {
    const BITS: u32 = 8;

    fn zero() -> Self {
        Gf8(0)
    }

    fn one() -> Self {
        Gf8(1)
    }

    fn add(self, other: Self) -> Self {
        Gf8(self.0 ^ other.0)
    }

    fn mul(self, other: Self) -> Self {
        let (mut a, mut b) = (self.0 as u16, other.0);
        let mut acc = 0u16;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            a <<= 1;
            if a & 0x100 != 0 {
                a ^= 0x11b; // x^8 + x^4 + x^3 + x + 1
            }
            b >>= 1;
        }
        Gf8(acc as u8)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Gf8(rng.gen())
    }

    fn to_u64(self) -> u64 {
        self.0 as u64
    }

    fn from_u64(v: u64) -> Self {
        Gf8(v as u8)
    }
}

/// GF(2^64).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf64(pub u64);

impl GfElem for Gf64 {
    const BITS: u32 = 64;

    fn zero() -> Self {
        Gf64(0)
    }

    fn one() -> Self {
        Gf64(1)
    }

    fn add(self, other: Self) -> Self {
        Gf64(self.0 ^ other.0)
    }

    fn mul(self, other: Self) -> Self {
        const POLY: u64 = (1 << 4) | (1 << 3) | (1 << 1) | 1; // low bits of x^64 + x^4 + x^3 + x + 1
        let mut a = self.0;
        let mut b = other.0;
        let mut acc = 0u64;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            let carry = a & (1 << 63) != 0;
            a <<= 1;
            if carry {
                a ^= POLY;
            }
            b >>= 1;
        }
        Gf64(acc)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Gf64(rng.gen())
    }

    fn to_u64(self) -> u64 {
        self.0
    }

    fn from_u64(v: u64) -> Self {
        Gf64(v)
    }
}
