//! The digit system on `Z[1/6]`: a symmetric digit set with windowed
//! base-3/2 expansions.
//!
//! Digits are `A = {−1, 0, 1}`. For `k` in the fuzz box
//! `{ I₁′(k) ≤ I₁(k) + F }` (the auxiliary interval valuation does not exceed
//! the dyadic one by more than `F`), [`decompose`] writes
//!
//! ```text
//! k = Σ_i (3/2)^i a_i  +  Σ_j (3/2)^{i_j} a_j        (a ∈ A)
//! ```
//!
//! with all indices inside the window
//! `min(v₃(k), 0) − F′ ≤ i ≤ max(−v₂(k), 0) + F′` and at most `F′` leftover
//! terms. The construction is a single bottom-up march: starting at
//! `i = min(v₃(k), 0)` with the scaled remainder `u = k·(2/3)^i`, each level
//! picks the digit `a_i ≡ u (mod 3)` and contracts `u ← (2/3)(u − a_i)`.
//! Every step raises the 2-adic valuation of `u` by at least one (clearing
//! denominators) and keeps `u` 3-integral; once `u` is an integer it shrinks
//! toward the fixed region `|u| ≤ 2`, where `u ∈ {−1, 0, 1}` terminates with
//! a final digit and `u = ±2` terminates with a two-term leftover.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::group::{GroupElement, ModuleAction, ModuleElement, ShiftVector, SixthRational};
use crate::metric::{GenSet, GenSetError};
use crate::valuations::{dyadic_triadic_pair, z16_cube_pair, ValuationPair};

/// A finite symmetric digit set with fuzz parameters and the two valuation
/// pairs (primary dyadic/triadic, auxiliary interval/triadic) it is good for.
#[derive(Debug, Clone)]
pub struct GoodGenSet {
    /// The digit set; contains 0 and is symmetric.
    pub digits: Vec<ModuleElement>,
    /// Fuzz constant `F = 2M + 4C` where `M` is the largest valuation
    /// magnitude over the digits and `C` the larger subadditivity constant.
    pub f: f64,
    /// Fitted window slack and leftover cap.
    pub f_prime: u32,
    pub primary: ValuationPair,
    pub auxiliary: ValuationPair,
}

/// The concrete scale chain behind the `Z[1/6]` digit system: `P` doubles,
/// `Q` triples, `L = Z`, and the reference cube is `[−1, 1] ∩ Z[1/6]`;
/// `t = Q P^{-1}` is multiplication by `3/2`. The determinant magnitudes
/// 2 and 3 are coprime, which is what makes the residue-driven march exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeChain {
    pub p_scale: i64,
    pub q_scale: i64,
}

impl LatticeChain {
    pub fn z16() -> Self {
        LatticeChain {
            p_scale: 2,
            q_scale: 3,
        }
    }
}

/// One decomposition: windowed digits (index, digit) plus the leftover list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub digits: Vec<(i64, i8)>,
    pub leftover: Vec<(i64, i8)>,
}

impl Decomposition {
    /// Exact value `Σ (3/2)^i a_i + Σ (3/2)^{i_j} a_j`.
    pub fn value(&self) -> SixthRational {
        let mut total = SixthRational::zero();
        for &(i, d) in self.digits.iter().chain(&self.leftover) {
            let term = SixthRational::from_integer(i64::from(d)).mul_three_halves_pow(i);
            total = total.add(&term);
        }
        total
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("cannot decompose zero")]
    ZeroInput,
    #[error("input violates the fuzz condition I1'(k) <= I1(k) + F")]
    OutsideFuzzBox,
    #[error("digit window exhausted at index {at} (window top {top})")]
    WindowExhausted { at: i64, top: i64 },
}

/// Builds the `Z[1/6]` digit system. `F = 2M + 4C = 8` is computed from the
/// digit set; `F′` is fitted as the smallest slack for which 10³ seeded
/// random fuzz-box samples decompose inside their windows.
pub fn good_gen_set_z16() -> (GoodGenSet, LatticeChain) {
    let primary = dyadic_triadic_pair();
    let auxiliary = z16_cube_pair();
    let digits: Vec<ModuleElement> = [-1i64, 0, 1]
        .iter()
        .map(|&d| ModuleElement::Sixth(SixthRational::from_integer(d)))
        .collect();

    // M = max |I| over nonzero digits, under all four functionals.
    let mut m: f64 = 0.0;
    for d in &digits {
        if d.is_zero() {
            continue;
        }
        for v in [
            primary.eval1(d),
            primary.eval2(d),
            auxiliary.eval1(d),
            auxiliary.eval2(d),
        ] {
            let v = v.expect_finite();
            m = m.max(v.abs());
            // digit-set requirement: auxiliary never exceeds primary
            assert!(auxiliary.eval1(d).le_with_slack(primary.eval1(d), 0.0));
            assert!(auxiliary.eval2(d).le_with_slack(primary.eval2(d), 0.0));
        }
    }
    let c = primary.c.max(auxiliary.c);
    let f = 2.0 * m + 4.0 * c;

    let mut ggs = GoodGenSet {
        digits,
        f,
        f_prime: u32::MAX, // no window cap while fitting
        primary,
        auxiliary,
    };
    let chain = LatticeChain::z16();
    ggs.f_prime = fit_f_prime(&ggs, &chain, 1000, 0xD16);
    (ggs, chain)
}

/// The generating letters built from a digit system:
/// `{ (1, (3/2)a + a') : a, a' ∈ A } ∪ { (0, a) : a ∈ A }`, symmetrized.
pub fn z16_good_letters(action: &ModuleAction, ggs: &GoodGenSet) -> Result<GenSet, GenSetError> {
    assert_eq!(action, &ModuleAction::Sixth, "digit letters are Z[1/6]-specific");
    let t = ShiftVector::one(1);
    let mut letters = Vec::new();
    for a in &ggs.digits {
        for a2 in &ggs.digits {
            let base = action.act(&t, a).add(a2);
            letters.push(GroupElement::new(ShiftVector::one(1), base));
        }
    }
    for a in &ggs.digits {
        if !a.is_zero() {
            letters.push(action.embed(a.clone()));
        }
    }
    GenSet::new(action, letters, true)
}

fn as_sixth(k: &ModuleElement) -> &SixthRational {
    match k {
        ModuleElement::Sixth(r) => r,
        _ => panic!("digit decomposition needs a Z[1/6] element"),
    }
}

/// Windowed digit expansion of `k ≠ 0` from the fuzz box. The returned
/// identity is re-verified exactly before returning; window exhaustion is an
/// error, never a silent truncation.
pub fn decompose(
    ggs: &GoodGenSet,
    _chain: &LatticeChain,
    k: &ModuleElement,
) -> Result<Decomposition, DecomposeError> {
    let r = as_sixth(k);
    if r.is_zero() {
        return Err(DecomposeError::ZeroInput);
    }
    if !ggs
        .auxiliary
        .eval1(k)
        .le_with_slack(ggs.primary.eval1(k), ggs.f)
    {
        return Err(DecomposeError::OutsideFuzzBox);
    }

    let v2 = r.v2().expect("nonzero");
    let v3 = r.v3().expect("nonzero");
    let i_lo = v3.min(0);
    let window_top_base = (-v2).max(0);
    let top = match i64::from(ggs.f_prime).checked_add(window_top_base) {
        Some(t) => t,
        None => i64::MAX, // unlimited while fitting
    };

    let mut digits: Vec<(i64, i8)> = Vec::new();
    let mut leftover: Vec<(i64, i8)> = Vec::new();
    let mut u = r.mul_three_halves_pow(-i_lo);
    let mut i = i_lo;
    let two = BigInt::from(2);
    loop {
        if u.is_zero() {
            break;
        }
        let integral = u.den_exponents() == (0, 0);
        if integral && u.numerator().abs() == two {
            // |u| = 2 is a fixed point of the march; emit it as leftover.
            if i > top {
                return Err(DecomposeError::WindowExhausted { at: i, top });
            }
            let sign: i8 = if u.numerator().is_positive() { 1 } else { -1 };
            leftover.push((i, sign));
            leftover.push((i, sign));
            break;
        }
        let d = u.residue_mod_3();
        if d != 0 {
            if i > top {
                return Err(DecomposeError::WindowExhausted { at: i, top });
            }
            digits.push((i, d));
            u = u.add(&SixthRational::from_integer(-i64::from(d)));
        }
        u = u.mul_three_halves_pow(-1);
        i += 1;
    }

    let out = Decomposition { digits, leftover };
    assert_eq!(out.value(), *r, "digit identity must re-verify exactly");
    assert!(
        u64::from(ggs.f_prime) >= out.leftover.len() as u64 || ggs.f_prime == u32::MAX,
        "leftover exceeds F'"
    );
    Ok(out)
}

/// Draws a random element of the fuzz box (seeded, rejection-sampled).
pub fn random_fuzz_box_element<R: Rng>(ggs: &GoodGenSet, rng: &mut R) -> ModuleElement {
    loop {
        let a = rng.gen_range(0..=8u32);
        let b = rng.gen_range(0..=8u32);
        // |k| ≤ (3/2)^(a+F): numerator bound 3^(a+F) 3^b / 2^F, computed exactly.
        let f = ggs.f as u32;
        let mut num_max: BigInt = BigInt::from(3).pow(a + f + b) / BigInt::from(2).pow(f);
        if num_max > BigInt::from(1i64 << 40) {
            num_max = BigInt::from(1i64 << 40);
        }
        let cap = i64::try_from(&num_max).unwrap_or(i64::MAX);
        if cap == 0 {
            continue;
        }
        let n = rng.gen_range(-cap..=cap);
        if n == 0 {
            continue;
        }
        let r = SixthRational::normalized(BigInt::from(n), a, b);
        let k = ModuleElement::Sixth(r);
        if k.is_zero() {
            continue;
        }
        if ggs
            .auxiliary
            .eval1(&k)
            .le_with_slack(ggs.primary.eval1(&k), ggs.f)
        {
            return k;
        }
    }
}

/// Smallest window slack for which `samples` random box elements decompose,
/// with leftover count folded in (and a floor of 2, the march's leftover cap).
pub fn fit_f_prime(ggs: &GoodGenSet, chain: &LatticeChain, samples: usize, seed: u64) -> u32 {
    let unlimited = GoodGenSet {
        f_prime: u32::MAX,
        ..ggs.clone()
    };
    let mut rng = StdRng::seed_from_u64(seed);
    let mut needed: i64 = 2;
    for _ in 0..samples {
        let k = random_fuzz_box_element(&unlimited, &mut rng);
        let dec = decompose(&unlimited, chain, &k).expect("unlimited window decomposes");
        let top_base = unlimited.primary.eval1(&k).expect_finite().max(0.0) as i64;
        for &(i, _) in dec.digits.iter().chain(&dec.leftover) {
            needed = needed.max(i - top_base);
        }
        needed = needed.max(dec.leftover.len() as i64);
    }
    u32::try_from(needed).expect("window slack fits u32")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sixth(n: i64, d: i64) -> ModuleElement {
        ModuleElement::Sixth(SixthRational::from_fraction(n, d).unwrap())
    }

    #[test]
    fn digit_set_shape() {
        let (ggs, chain) = good_gen_set_z16();
        assert_eq!(ggs.digits.len(), 3);
        assert!(ggs.digits.iter().any(|d| d.is_zero()));
        for d in &ggs.digits {
            assert!(ggs.digits.contains(&d.neg()));
        }
        assert_eq!(ggs.f, 8.0);
        assert!(ggs.f_prime >= 2);
        assert_eq!(chain.p_scale, 2);
        assert_eq!(chain.q_scale, 3);
    }

    #[test]
    fn auxiliary_matches_primary_on_random_elements() {
        // The interval valuation's partner I2' coincides with the triadic I2,
        // and I1' agrees with the dyadic pair's drift axioms; cross-check the
        // pairs agree where the digit system requires it.
        let (ggs, _) = good_gen_set_z16();
        let action = ModuleAction::sixth();
        let mut rng = StdRng::seed_from_u64(4);
        let cfg = crate::group::RandomCfg::default();
        for _ in 0..1000 {
            let k = action.random_nonzero(&mut rng, &cfg);
            assert_eq!(
                ggs.primary.eval2(&k).expect_finite(),
                ggs.auxiliary.eval2(&k).expect_finite()
            );
        }
    }

    #[test]
    fn unit_digit_examples() {
        let (ggs, chain) = good_gen_set_z16();
        let one = decompose(&ggs, &chain, &sixth(1, 1)).unwrap();
        assert_eq!(one.digits, vec![(0, 1)]);
        assert!(one.leftover.is_empty());

        let th = decompose(&ggs, &chain, &sixth(3, 2)).unwrap();
        assert_eq!(th.digits, vec![(1, 1)]);
        assert!(th.leftover.is_empty());
    }

    #[test]
    fn five_fourths_decomposition() {
        // 5/4 = -(3/2)^0 + (3/2)^2 exactly.
        let (ggs, chain) = good_gen_set_z16();
        let dec = decompose(&ggs, &chain, &sixth(5, 4)).unwrap();
        assert_eq!(dec.digits, vec![(0, -1), (2, 1)]);
        assert!(dec.leftover.is_empty());
        assert_eq!(dec.value(), SixthRational::from_fraction(5, 4).unwrap());
    }

    #[test]
    fn two_needs_leftover() {
        let (ggs, chain) = good_gen_set_z16();
        let dec = decompose(&ggs, &chain, &sixth(2, 1)).unwrap();
        assert!(dec.digits.is_empty());
        assert_eq!(dec.leftover, vec![(0, 1), (0, 1)]);
    }

    #[test]
    fn zero_and_out_of_box_rejected() {
        let (ggs, chain) = good_gen_set_z16();
        assert_eq!(
            decompose(&ggs, &chain, &ModuleElement::Sixth(SixthRational::zero())),
            Err(DecomposeError::ZeroInput)
        );
        // 3^20 is far above the fuzz band for an integer (I1' = 37, I1 = 0).
        let big = sixth(3i64.pow(20), 1);
        assert_eq!(
            decompose(&ggs, &chain, &big),
            Err(DecomposeError::OutsideFuzzBox)
        );
    }

    #[test]
    fn random_box_elements_decompose_within_window() {
        let (ggs, chain) = good_gen_set_z16();
        let mut rng = StdRng::seed_from_u64(77);
        for _ in 0..300 {
            let k = random_fuzz_box_element(&ggs, &mut rng);
            let dec = decompose(&ggs, &chain, &k).expect("box element decomposes");
            let r = as_sixth(&k);
            let lo = r.v3().unwrap().min(0) - i64::from(ggs.f_prime);
            let hi = (-r.v2().unwrap()).max(0) + i64::from(ggs.f_prime);
            for &(i, d) in dec.digits.iter().chain(&dec.leftover) {
                assert!(i >= lo && i <= hi, "index {i} outside [{lo}, {hi}]");
                assert!(d == 1 || d == -1);
            }
            assert!(dec.leftover.len() as u32 <= ggs.f_prime);
            assert_eq!(dec.value(), *r);
        }
    }

    #[test]
    fn good_letters_shape() {
        let action = ModuleAction::sixth();
        let (ggs, _) = good_gen_set_z16();
        let gs = z16_good_letters(&action, &ggs).unwrap();
        // 9 shift letters + 2 module letters + 9 inverses (the two module
        // letters are mutually inverse and already present)
        assert_eq!(gs.len(), 20);
        assert_eq!(gs.z(), 1.0);
        // contains t and the embedded unit digits
        assert!(gs.letters().contains(&action.t(0)));
        assert!(gs
            .letters()
            .contains(&action.embed(sixth(1, 1))));
    }
}
