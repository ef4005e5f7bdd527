//! Exact rationals whose denominator divides `2^a 3^b` (elements of `Z[1/6]`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

/// `num / (2^two · 3^three)` in lowest terms.
///
/// Canonical form: if `two > 0` the numerator is odd, if `three > 0` it is not
/// divisible by 3, and zero is stored as `0 / (2^0 3^0)`. Keeping the two
/// exponents explicit makes the 2-adic and 3-adic valuations O(1) for the
/// denominator side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SixthRational {
    num: BigInt,
    two: u32,
    three: u32,
}

/// Error for fractions whose denominator has a prime factor other than 2 or 3.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("denominator {0} is not of the form 2^a 3^b")]
pub struct BadDenominator(pub i64);

impl SixthRational {
    pub fn zero() -> Self {
        SixthRational {
            num: BigInt::zero(),
            two: 0,
            three: 0,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        SixthRational::normalized(BigInt::from(n), 0, 0)
    }

    /// Builds `n / d`, rejecting denominators outside `2^a 3^b`.
    pub fn from_fraction(n: i64, d: i64) -> Result<Self, BadDenominator> {
        assert!(d != 0, "zero denominator");
        let neg = d < 0;
        let mut d = d.unsigned_abs();
        let mut two = 0u32;
        let mut three = 0u32;
        while d % 2 == 0 {
            d /= 2;
            two += 1;
        }
        while d % 3 == 0 {
            d /= 3;
            three += 1;
        }
        if d != 1 {
            return Err(BadDenominator(if neg { -(d as i64) } else { d as i64 }));
        }
        let num = if neg { BigInt::from(-n) } else { BigInt::from(n) };
        Ok(SixthRational::normalized(num, two, three))
    }

    pub(crate) fn normalized(mut num: BigInt, mut two: u32, mut three: u32) -> Self {
        if num.is_zero() {
            return SixthRational::zero();
        }
        while two > 0 && num.is_even() {
            num /= 2;
            two -= 1;
        }
        let three_big = BigInt::from(3);
        while three > 0 {
            let (q, r) = num.div_rem(&three_big);
            if r.is_zero() {
                num = q;
                three -= 1;
            } else {
                break;
            }
        }
        SixthRational { num, two, three }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    /// Denominator exponents `(a, b)` of `2^a 3^b`.
    pub fn den_exponents(&self) -> (u32, u32) {
        (self.two, self.three)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn neg(&self) -> SixthRational {
        SixthRational {
            num: -&self.num,
            two: self.two,
            three: self.three,
        }
    }

    pub fn add(&self, other: &SixthRational) -> SixthRational {
        let two = self.two.max(other.two);
        let three = self.three.max(other.three);
        let scale = |r: &SixthRational| -> BigInt {
            let mut n = r.num.clone();
            for _ in 0..(two - r.two) {
                n *= 2;
            }
            for _ in 0..(three - r.three) {
                n *= 3;
            }
            n
        };
        SixthRational::normalized(scale(self) + scale(other), two, three)
    }

    /// Multiplies by `(3/2)^e` (the `t`-action), exact for either sign of `e`.
    pub fn mul_three_halves_pow(&self, e: i64) -> SixthRational {
        if self.num.is_zero() {
            return SixthRational::zero();
        }
        let mut num = self.num.clone();
        let (mut two, mut three) = (self.two, self.three);
        if e >= 0 {
            for _ in 0..e {
                num *= 3;
            }
            two += u32::try_from(e).expect("exponent overflow");
        } else {
            let m = u32::try_from(-e).expect("exponent overflow");
            for _ in 0..m {
                num *= 2;
            }
            three += m;
        }
        SixthRational::normalized(num, two, three)
    }

    /// 2-adic valuation; `None` for 0.
    pub fn v2(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        if self.two > 0 {
            return Some(-(self.two as i64));
        }
        Some(self.num.trailing_zeros().expect("nonzero") as i64)
    }

    /// 3-adic valuation; `None` for 0.
    pub fn v3(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        if self.three > 0 {
            return Some(-(self.three as i64));
        }
        let mut v = 0i64;
        let mut n = self.num.clone();
        let three = BigInt::from(3);
        loop {
            let (q, r) = n.div_rem(&three);
            if r.is_zero() {
                v += 1;
                n = q;
            } else {
                return Some(v);
            }
        }
    }

    /// Compares `|self|` with `(3/2)^i` exactly (integer cross-multiplication).
    pub fn abs_cmp_three_halves_pow(&self, i: i64) -> std::cmp::Ordering {
        // |num| / (2^two 3^three)  vs  3^i / 2^i
        // <=> |num| · 2^(i + ...) vs 3^i · 2^two · 3^three with exponents split by sign.
        let mut lhs = self.num.abs();
        let mut rhs = BigInt::from(1);
        if i >= 0 {
            for _ in 0..i {
                lhs *= 2;
                rhs *= 3;
            }
        } else {
            for _ in 0..(-i) {
                lhs *= 3;
                rhs *= 2;
            }
        }
        for _ in 0..self.two {
            rhs *= 2;
        }
        for _ in 0..self.three {
            rhs *= 3;
        }
        lhs.cmp(&rhs)
    }

    pub fn random<R: Rng>(rng: &mut R, max_num: i64, max_pow: u32) -> SixthRational {
        let n = rng.gen_range(-max_num..=max_num);
        let a = rng.gen_range(0..=max_pow);
        let b = rng.gen_range(0..=max_pow);
        SixthRational::normalized(BigInt::from(n), a, b)
    }

    /// Residue of `self` mod 3 in `{-1, 0, 1}`, defined whenever `three == 0`
    /// (2 is invertible mod 3, so a 2-power denominator is harmless).
    pub fn residue_mod_3(&self) -> i8 {
        assert_eq!(self.three, 0, "residue mod 3 needs a 3-free denominator");
        let r = ((&self.num) % 3i32 + 3) % 3; // 0, 1 or 2
        let mut r = i64::try_from(r).unwrap();
        // 2^two ≡ (-1)^two mod 3: dividing by the denominator flips the sign
        // for odd powers of two.
        if self.two % 2 == 1 {
            r = (3 - r) % 3;
        }
        match r {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }
}

impl std::fmt::Display for SixthRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.two == 0 && self.three == 0 {
            write!(f, "{}", self.num)
        } else {
            let den = 2i64.pow(self.two) * 3i64.pow(self.three);
            write!(f, "{}/{}", self.num, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = SixthRational::from_fraction(6, 4).unwrap();
        assert_eq!(r, SixthRational::from_fraction(3, 2).unwrap());
        assert_eq!(r.den_exponents(), (1, 0));
        assert!(SixthRational::from_fraction(1, 5).is_err());
        assert!(SixthRational::from_fraction(1, 12).is_ok());
    }

    #[test]
    fn valuations() {
        let r = SixthRational::from_fraction(3, 8).unwrap();
        assert_eq!(r.v2(), Some(-3));
        assert_eq!(r.v3(), Some(1));
        assert_eq!(SixthRational::from_integer(12).v2(), Some(2));
        assert_eq!(SixthRational::from_integer(12).v3(), Some(1));
        assert_eq!(SixthRational::zero().v2(), None);
    }

    #[test]
    fn action_is_mul_three_halves() {
        let one = SixthRational::from_integer(1);
        assert_eq!(
            one.mul_three_halves_pow(1),
            SixthRational::from_fraction(3, 2).unwrap()
        );
        let third = SixthRational::from_fraction(1, 3).unwrap();
        assert_eq!(
            third.mul_three_halves_pow(2),
            SixthRational::from_fraction(3, 4).unwrap()
        );
        let x = SixthRational::from_fraction(5, 12).unwrap();
        assert_eq!(x.mul_three_halves_pow(3).mul_three_halves_pow(-3), x);
    }

    #[test]
    fn interval_comparison() {
        use std::cmp::Ordering::*;
        let one = SixthRational::from_integer(1);
        assert_eq!(one.abs_cmp_three_halves_pow(0), Equal);
        assert_eq!(one.abs_cmp_three_halves_pow(1), Less);
        let th = SixthRational::from_fraction(3, 2).unwrap();
        assert_eq!(th.abs_cmp_three_halves_pow(0), Greater);
        assert_eq!(th.abs_cmp_three_halves_pow(1), Equal);
    }

    #[test]
    fn residues() {
        assert_eq!(SixthRational::from_integer(5).residue_mod_3(), -1);
        assert_eq!(SixthRational::from_integer(7).residue_mod_3(), 1);
        assert_eq!(SixthRational::from_integer(-6).residue_mod_3(), 0);
        // 5/4: 4 ≡ 1 mod 3 so residue is that of 5.
        assert_eq!(
            SixthRational::from_fraction(5, 4).unwrap().residue_mod_3(),
            -1
        );
        // 1/2: 2^{-1} ≡ 2 mod 3, residue 2 ≡ -1.
        assert_eq!(
            SixthRational::from_fraction(1, 2).unwrap().residue_mod_3(),
            -1
        );
    }
}
