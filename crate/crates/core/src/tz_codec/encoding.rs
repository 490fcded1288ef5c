//! Wire formats for compressed points.
//!
//! Binary: one header byte `0000 v nnn` (version 0, variant bit v with S = 0
//! and T = 1, n in the low three bits) followed by n − 1 big-endian field
//! elements of fixed width. Text: the coordinates as comma-separated decimals.

use super::{CompressedPoint, Variant};
use crate::error::{Error, Result};
use crate::ff_prime::PrimeField;

const VERSION: u8 = 0;
const VARIANT_BIT: u8 = 0b1000;

pub fn header_byte(c: &CompressedPoint) -> u8 {
    let v = if c.variant() == Variant::T { VARIANT_BIT } else { 0 };
    (VERSION << 4) | v | c.n() as u8
}

pub fn to_bytes(k: &PrimeField, c: &CompressedPoint) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + c.coords().len() * k.byte_len());
    out.push(header_byte(c));
    for &x in c.coords() {
        out.extend(k.to_bytes(x));
    }
    out
}

pub fn from_bytes(k: &PrimeField, bytes: &[u8]) -> Result<CompressedPoint> {
    let (&h, body) = bytes.split_first().ok_or_else(|| Error::Parse("empty compressed point".into()))?;
    if h >> 4 != VERSION {
        return Err(Error::Parse(format!("unsupported encoding version {}", h >> 4)));
    }
    let n = (h & 0b111) as usize;
    if n != 3 && n != 5 {
        return Err(Error::Parse(format!("header encodes n = {n}")));
    }
    let variant = if h & VARIANT_BIT != 0 { Variant::T } else { Variant::S };
    let w = k.byte_len();
    if body.len() != (n - 1) * w {
        return Err(Error::Parse(format!("expected {} bytes after the header, got {}", (n - 1) * w, body.len())));
    }
    let coords = body.chunks(w).map(|c| k.from_bytes(c)).collect::<Result<Vec<_>>>()?;
    CompressedPoint::new(variant, &coords)
}

pub fn to_text(c: &CompressedPoint) -> String {
    c.coords().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn from_text(k: &PrimeField, variant: Variant, s: &str) -> Result<CompressedPoint> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = s.split(',').map(|t| k.parse(t.trim())).collect::<Result<Vec<_>>>()?;
    CompressedPoint::new(variant, &coords).map_err(|_| Error::Parse(format!("expected 2 or 4 coordinates, got {}", coords.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_layout() {
        let k = PrimeField::new(1009).unwrap();
        let s = CompressedPoint::new(Variant::S, &[k.elem(1), k.elem(2)]).unwrap();
        let t = CompressedPoint::new(Variant::T, &[k.elem(1), k.elem(2), k.elem(3), k.elem(4)]).unwrap();
        assert_eq!(header_byte(&s), 0x03);
        assert_eq!(header_byte(&t), 0x0d);
        assert_eq!(to_bytes(&k, &s), vec![0x03, 0x00, 0x01, 0x00, 0x02]);
    }

    #[test]
    fn roundtrips() {
        let k = PrimeField::new((1 << 79) - 67).unwrap();
        let c = CompressedPoint::new(Variant::T, &[k.elem(178447193035157787121145), k.elem(5)]).unwrap();
        let b = to_bytes(&k, &c);
        assert_eq!(b.len(), 1 + 2 * 10);
        assert_eq!(from_bytes(&k, &b).unwrap(), c);
        assert_eq!(to_text(&c), "178447193035157787121145,5");
        assert_eq!(from_text(&k, Variant::T, &to_text(&c)).unwrap(), c);
    }

    #[test]
    fn rejects_malformed() {
        let k = PrimeField::new(1009).unwrap();
        assert!(from_bytes(&k, &[]).is_err());
        assert!(from_bytes(&k, &[0x13, 0, 1, 0, 2]).is_err());
        assert!(from_bytes(&k, &[0x04, 0, 1, 0, 2]).is_err());
        assert!(from_bytes(&k, &[0x03, 0, 1, 0]).is_err());
        assert!(from_bytes(&k, &[0x03, 0x03, 0xf1, 0, 0]).is_err());
        assert!(from_text(&k, Variant::S, "1,2,3").is_err());
        assert!(from_text(&k, Variant::S, "1,x").is_err());
        assert_eq!(from_text(&k, Variant::S, " 1, 2 ").unwrap().coords(), &[k.elem(1), k.elem(2)]);
    }
}
