//! Canonical byte encoding of group elements (format v1).
//!
//! The encoding is deterministic and injective within a family, so it can key
//! hash maps, persisted ball tables and CSV rows. The family itself (and its
//! parameters, e.g. the Laurent modulus) is carried by the surrounding context
//! — the persisted file header or the table in memory — not by each element.
//!
//! Layout (all integers varint, signed ones zigzag first):
//!
//! * shift components, one per rank (rank comes from the context; `l = 1`);
//! * Laurent: term count, then (exponent, coefficient) pairs in ascending
//!   exponent order;
//! * sixth-rational: sign byte (0 zero / 1 positive / 2 negative); if nonzero,
//!   the denominator exponents `a`, `b`, then the magnitude byte length and
//!   little-endian magnitude bytes of the numerator;
//! * lattice: per coordinate, a sign byte and (if nonzero) magnitude length +
//!   little-endian magnitude bytes.

use num_bigint::{BigInt, Sign};

use super::{GroupElement, LatticeVec, LaurentPoly, ModuleAction, ModuleElement, ShiftVector, SixthRational};

/// Error decoding a canonical byte string.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("unexpected end of input")]
    Truncated,
    #[error("trailing bytes after element")]
    TrailingBytes,
    #[error("malformed field: {0}")]
    Malformed(&'static str),
}

fn write_varint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

fn write_zigzag(out: &mut Vec<u8>, v: i64) {
    write_varint(out, ((v << 1) ^ (v >> 63)) as u64);
}

fn read_varint(bytes: &[u8], pos: &mut usize) -> Result<u64, DecodeError> {
    let mut v = 0u64;
    let mut shift = 0;
    loop {
        let byte = *bytes.get(*pos).ok_or(DecodeError::Truncated)?;
        *pos += 1;
        if shift >= 64 {
            return Err(DecodeError::Malformed("varint overflow"));
        }
        v |= u64::from(byte & 0x7f) << shift;
        if byte & 0x80 == 0 {
            return Ok(v);
        }
        shift += 7;
    }
}

fn read_zigzag(bytes: &[u8], pos: &mut usize) -> Result<i64, DecodeError> {
    let v = read_varint(bytes, pos)?;
    Ok(((v >> 1) as i64) ^ -((v & 1) as i64))
}

fn write_bigint(out: &mut Vec<u8>, v: &BigInt) {
    match v.sign() {
        Sign::NoSign => out.push(0),
        Sign::Plus => out.push(1),
        Sign::Minus => out.push(2),
    }
    if v.sign() != Sign::NoSign {
        let (_, mag) = v.to_bytes_le();
        write_varint(out, mag.len() as u64);
        out.extend_from_slice(&mag);
    }
}

fn read_bigint(bytes: &[u8], pos: &mut usize) -> Result<BigInt, DecodeError> {
    let sign = *bytes.get(*pos).ok_or(DecodeError::Truncated)?;
    *pos += 1;
    let sign = match sign {
        0 => return Ok(BigInt::from(0)),
        1 => Sign::Plus,
        2 => Sign::Minus,
        _ => return Err(DecodeError::Malformed("sign byte")),
    };
    let len = read_varint(bytes, pos)? as usize;
    let end = pos.checked_add(len).ok_or(DecodeError::Truncated)?;
    let mag = bytes.get(*pos..end).ok_or(DecodeError::Truncated)?;
    *pos = end;
    if mag.last() == Some(&0) {
        return Err(DecodeError::Malformed("non-minimal magnitude"));
    }
    Ok(BigInt::from_bytes_le(sign, mag))
}

pub(super) fn encode(g: &GroupElement) -> Vec<u8> {
    let mut out = Vec::with_capacity(16);
    for &m in &g.shift.0 {
        write_zigzag(&mut out, m);
    }
    match &g.base {
        ModuleElement::Laurent(p) => {
            write_varint(&mut out, p.terms().len() as u64);
            for &(e, c) in p.terms() {
                write_zigzag(&mut out, e);
                write_varint(&mut out, u64::from(c));
            }
        }
        ModuleElement::Sixth(r) => {
            let n = r.numerator();
            if r.is_zero() {
                out.push(0);
            } else {
                out.push(if n.sign() == Sign::Minus { 2 } else { 1 });
                let (a, b) = r.den_exponents();
                write_varint(&mut out, u64::from(a));
                write_varint(&mut out, u64::from(b));
                let (_, mag) = n.to_bytes_le();
                write_varint(&mut out, mag.len() as u64);
                out.extend_from_slice(&mag);
            }
        }
        ModuleElement::Lattice(v) => {
            write_bigint(&mut out, &v.x);
            write_bigint(&mut out, &v.y);
        }
    }
    out
}

pub(super) fn decode(action: &ModuleAction, bytes: &[u8]) -> Result<GroupElement, DecodeError> {
    let mut pos = 0usize;
    let mut shift = Vec::with_capacity(action.rank());
    for _ in 0..action.rank() {
        shift.push(read_zigzag(bytes, &mut pos)?);
    }
    let base = match action {
        ModuleAction::Laurent { q } => {
            let n = read_varint(bytes, &mut pos)? as usize;
            let mut terms = Vec::with_capacity(n);
            let mut prev: Option<i64> = None;
            for _ in 0..n {
                let e = read_zigzag(bytes, &mut pos)?;
                let c = read_varint(bytes, &mut pos)?;
                if c == 0 || c >= u64::from(*q) {
                    return Err(DecodeError::Malformed("coefficient out of range"));
                }
                if prev.is_some_and(|p| p >= e) {
                    return Err(DecodeError::Malformed("exponents not ascending"));
                }
                prev = Some(e);
                terms.push((e, c as u32));
            }
            ModuleElement::Laurent(LaurentPoly::from_terms(*q, &terms))
        }
        ModuleAction::Sixth => {
            let sign = *bytes.get(pos).ok_or(DecodeError::Truncated)?;
            pos += 1;
            if sign == 0 {
                ModuleElement::Sixth(SixthRational::zero())
            } else {
                if sign > 2 {
                    return Err(DecodeError::Malformed("sign byte"));
                }
                let a = read_varint(bytes, &mut pos)? as u32;
                let b = read_varint(bytes, &mut pos)? as u32;
                let len = read_varint(bytes, &mut pos)? as usize;
                let end = pos.checked_add(len).ok_or(DecodeError::Truncated)?;
                let mag = bytes.get(pos..end).ok_or(DecodeError::Truncated)?;
                pos = end;
                if mag.is_empty() || mag.last() == Some(&0) {
                    return Err(DecodeError::Malformed("non-minimal magnitude"));
                }
                let s = if sign == 2 { Sign::Minus } else { Sign::Plus };
                let num = BigInt::from_bytes_le(s, mag);
                let r = SixthRational::normalized(num, a, b);
                // A canonical encoding never carries a reducible fraction.
                if r.den_exponents() != (a, b) {
                    return Err(DecodeError::Malformed("fraction not in lowest terms"));
                }
                ModuleElement::Sixth(r)
            }
        }
        ModuleAction::Lattice { .. } => {
            let x = read_bigint(bytes, &mut pos)?;
            let y = read_bigint(bytes, &mut pos)?;
            ModuleElement::Lattice(LatticeVec { x, y })
        }
    };
    if pos != bytes.len() {
        return Err(DecodeError::TrailingBytes);
    }
    Ok(GroupElement {
        shift: ShiftVector(shift),
        base,
    })
}

#[cfg(test)]
mod tests {
    use super::super::RandomCfg;
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn roundtrip_random_all_families() {
        let mut rng = StdRng::seed_from_u64(17);
        let cfg = RandomCfg::default();
        for action in [
            ModuleAction::laurent(5).unwrap(),
            ModuleAction::Sixth,
            ModuleAction::lattice_default(),
        ] {
            for _ in 0..500 {
                let g = action.random_element(&mut rng, &cfg);
                let bytes = g.encode();
                let back = GroupElement::decode(&action, &bytes).unwrap();
                assert_eq!(back, g);
                // canonical: re-encoding is byte-identical
                assert_eq!(back.encode(), bytes);
            }
        }
    }

    #[test]
    fn identity_is_shortest() {
        for action in [
            ModuleAction::laurent(2).unwrap(),
            ModuleAction::Sixth,
            ModuleAction::lattice_default(),
        ] {
            let id = action.identity();
            let bytes = id.encode();
            assert_eq!(GroupElement::decode(&action, &bytes).unwrap(), id);
        }
    }

    #[test]
    fn rejects_garbage() {
        let action = ModuleAction::Sixth;
        assert!(GroupElement::decode(&action, &[]).is_err());
        assert!(GroupElement::decode(&action, &[0, 3]).is_err());
        // trailing byte after a valid identity
        let mut bytes = action.identity().encode();
        bytes.push(0);
        assert_eq!(
            GroupElement::decode(&action, &bytes),
            Err(DecodeError::TrailingBytes)
        );
    }
}
