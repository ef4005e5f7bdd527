//! Integer 2-vectors and the hyperbolic matrix action on them.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

/// A 2×2 integer matrix, row major: `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    /// Inverse of a determinant-±1 matrix (integral by Cramer's rule).
    pub fn inverse_unimodular(&self) -> Mat2 {
        let det = self.det();
        assert!(det == 1 || det == -1, "matrix is not unimodular");
        Mat2 {
            a: self.d * det,
            b: -self.b * det,
            c: -self.c * det,
            d: self.a * det,
        }
    }

    pub fn apply(&self, v: &LatticeVec) -> LatticeVec {
        LatticeVec {
            x: &v.x * self.a + &v.y * self.b,
            y: &v.x * self.c + &v.y * self.d,
        }
    }

    /// Applies `M^e` (negative `e` uses the unimodular inverse).
    pub fn apply_pow(&self, v: &LatticeVec, e: i64) -> LatticeVec {
        let m = if e >= 0 { *self } else { self.inverse_unimodular() };
        let mut out = v.clone();
        for _ in 0..e.unsigned_abs() {
            out = m.apply(&out);
        }
        out
    }

    /// Eigenvalues by the quadratic formula, larger magnitude first.
    /// Requires real distinct eigenvalues (true for hyperbolic matrices).
    pub fn eigenvalues(&self) -> (f64, f64) {
        let tr = self.trace() as f64;
        let det = self.det() as f64;
        let disc = tr * tr - 4.0 * det;
        assert!(disc > 0.0, "eigenvalues are not real and distinct");
        let s = disc.sqrt();
        let l1 = (tr + s) / 2.0;
        let l2 = (tr - s) / 2.0;
        if l1.abs() >= l2.abs() {
            (l1, l2)
        } else {
            (l2, l1)
        }
    }
}

/// An element of `Z²` with arbitrary-precision coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeVec {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticeVec {
    pub fn zero() -> Self {
        LatticeVec {
            x: BigInt::zero(),
            y: BigInt::zero(),
        }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        LatticeVec {
            x: BigInt::from(x),
            y: BigInt::from(y),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, other: &LatticeVec) -> LatticeVec {
        LatticeVec {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn neg(&self) -> LatticeVec {
        LatticeVec {
            x: -&self.x,
            y: -&self.y,
        }
    }

    pub fn random<R: Rng>(rng: &mut R, max: i64) -> LatticeVec {
        LatticeVec::from_i64(rng.gen_range(-max..=max), rng.gen_range(-max..=max))
    }
}
