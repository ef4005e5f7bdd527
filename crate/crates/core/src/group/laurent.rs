//! Finite-support Laurent polynomials over `Z/q`.

use rand::Rng;

/// A Laurent polynomial `Σ c_e x^e` with coefficients in `Z/q`.
///
/// Canonical form: terms sorted by ascending exponent, no zero coefficients,
/// all coefficients in `1..q`. Two polynomials are equal iff they have the
/// same modulus and the same term list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    q: u32,
    terms: Vec<(i64, u32)>,
}

impl LaurentPoly {
    pub fn zero(q: u32) -> Self {
        assert!(q >= 2, "modulus must be at least 2");
        LaurentPoly { q, terms: Vec::new() }
    }

    /// `c · x^e` (with `c` reduced mod `q`).
    pub fn monomial(q: u32, e: i64, c: u32) -> Self {
        let c = c % q;
        let terms = if c == 0 { Vec::new() } else { vec![(e, c)] };
        LaurentPoly { q, terms }
    }

    /// Builds from arbitrary (exponent, coefficient) pairs; repeated exponents
    /// are summed mod `q`.
    pub fn from_terms(q: u32, raw: &[(i64, u32)]) -> Self {
        let mut p = LaurentPoly::zero(q);
        for &(e, c) in raw {
            p = p.add(&LaurentPoly::monomial(q, e, c));
        }
        p
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn terms(&self) -> &[(i64, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent with a nonzero coefficient, `None` for 0.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Smallest exponent with a nonzero coefficient, `None` for 0.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.q, other.q, "modulus mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => {
                    if a.0 == b.0 {
                        let c = (a.1 + b.1) % self.q;
                        if c != 0 {
                            terms.push((a.0, c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a.0 < b.0
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_left {
                terms.push(self.terms[i]);
                i += 1;
            } else {
                terms.push(other.terms[j]);
                j += 1;
            }
        }
        LaurentPoly { q: self.q, terms }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            q: self.q,
            terms: self.terms.iter().map(|&(e, c)| (e, self.q - c)).collect(),
        }
    }

    /// Multiplies by `x^e` (shifts every exponent by `e`).
    pub fn shift(&self, e: i64) -> LaurentPoly {
        LaurentPoly {
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|&(ex, c)| (ex.checked_add(e).expect("exponent overflow"), c))
                .collect(),
        }
    }

    /// Uniform coefficients (0 = absent) over the exponent window `[-w, w]`.
    pub fn random<R: Rng>(rng: &mut R, q: u32, w: i64) -> LaurentPoly {
        let mut terms = Vec::new();
        for e in -w..=w {
            let c = rng.gen_range(0..q);
            if c != 0 {
                terms.push((e, c));
            }
        }
        LaurentPoly { q, terms }
    }
}
