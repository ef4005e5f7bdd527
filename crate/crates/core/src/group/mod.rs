//! Exact arithmetic for elements of `G = K ⋊ ⟨t_1, …, t_l⟩`.
//!
//! An element is an ordered pair `(m, k)` of a shift vector `m ∈ Z^l` and a module
//! element `k ∈ K`; multiplication is `(m1, k1)(m2, k2) = (m1 + m2, t^{m2} k1 + k2)`.
//! Three concrete module families are shipped (see [`ModuleElement`]); every family
//! keeps its elements in canonical form so equality, hashing and the byte encoding
//! of [`GroupElement::encode`] all agree.

mod encode;
mod lattice;
mod laurent;
mod sixth;

pub use encode::DecodeError;
pub use lattice::{LatticeVec, Mat2};
pub use laurent::LaurentPoly;
pub use sixth::SixthRational;

use rand::Rng;

/// Which module family an element or action belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Finite-support Laurent polynomials over `Z/q`.
    Laurent,
    /// Rationals with denominator dividing `2^a 3^b`.
    Sixth,
    /// Integer 2-vectors under a hyperbolic matrix action.
    Lattice,
}

/// Exponent vector of the free abelian part `⟨t_1, …, t_l⟩`.
///
/// All shipped families have rank `l = 1`; the type keeps general `l` so the
/// drift functional `B(m) = Σ b_i m_i` stays a genuine linear form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftVector(pub Vec<i64>);

impl ShiftVector {
    /// Rank-1 shift `t^v`.
    pub fn one(v: i64) -> Self {
        ShiftVector(vec![v])
    }

    pub fn zero(l: usize) -> Self {
        ShiftVector(vec![0; l])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// Component sum with another shift of the same rank.
    pub fn add(&self, other: &ShiftVector) -> ShiftVector {
        assert_eq!(self.0.len(), other.0.len(), "shift rank mismatch");
        ShiftVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("shift overflow"))
                .collect(),
        )
    }

    pub fn neg(&self) -> ShiftVector {
        ShiftVector(self.0.iter().map(|v| -v).collect())
    }

    /// The single component of a rank-1 shift.
    pub fn scalar(&self) -> i64 {
        assert_eq!(self.0.len(), 1, "scalar() requires rank 1");
        self.0[0]
    }
}

/// An exact element of one of the three concrete base modules.
///
/// Invariants (enforced by the family constructors):
/// * Laurent polynomials store no zero coefficients and sorted exponents;
/// * sixth-rationals are in lowest terms with denominator `2^a 3^b`;
/// * equality is decidable and consistent with hashing and with
///   [`GroupElement::encode`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleElement {
    Laurent(LaurentPoly),
    Sixth(SixthRational),
    Lattice(LatticeVec),
}

impl ModuleElement {
    pub fn family(&self) -> Family {
        match self {
            ModuleElement::Laurent(_) => Family::Laurent,
            ModuleElement::Sixth(_) => Family::Sixth,
            ModuleElement::Lattice(_) => Family::Lattice,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ModuleElement::Laurent(p) => p.is_zero(),
            ModuleElement::Sixth(r) => r.is_zero(),
            ModuleElement::Lattice(v) => v.is_zero(),
        }
    }

    pub fn neg(&self) -> ModuleElement {
        match self {
            ModuleElement::Laurent(p) => ModuleElement::Laurent(p.neg()),
            ModuleElement::Sixth(r) => ModuleElement::Sixth(r.neg()),
            ModuleElement::Lattice(v) => ModuleElement::Lattice(v.neg()),
        }
    }

    /// Exact sum within one family. Panics if the families differ.
    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        match (self, other) {
            (ModuleElement::Laurent(a), ModuleElement::Laurent(b)) => {
                ModuleElement::Laurent(a.add(b))
            }
            (ModuleElement::Sixth(a), ModuleElement::Sixth(b)) => ModuleElement::Sixth(a.add(b)),
            (ModuleElement::Lattice(a), ModuleElement::Lattice(b)) => {
                ModuleElement::Lattice(a.add(b))
            }
            _ => panic!("module family mismatch in add"),
        }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        self.add(&other.neg())
    }
}

/// The `t`-action on a base module: family tag plus the parameters the action
/// needs (the modulus `q`, nothing, or the matrix `M`).
///
/// For the lattice family the matrix must have determinant `±1` and
/// `|trace| > |det| + 1` (a hyperbolic integer matrix; no eigenvalue on the
/// unit circle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleAction {
    /// `t` multiplies by the indeterminate; coefficients live in `Z/q`, `q ≥ 2`.
    Laurent { q: u32 },
    /// `t` multiplies by `3/2` on `Z[1/6]`.
    Sixth,
    /// `t` acts by the matrix `M` on `Z²`.
    Lattice { m: Mat2 },
}

/// Errors raised by [`ModuleAction`] constructors.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("matrix must have determinant ±1, got {0}")]
    BadDeterminant(i64),
    #[error("matrix is not hyperbolic: need |trace| > |det| + 1, got trace {trace}, det {det}")]
    NotHyperbolic { trace: i64, det: i64 },
}

impl ModuleAction {
    pub fn laurent(q: u32) -> Result<Self, ActionError> {
        if q < 2 {
            return Err(ActionError::BadModulus(q));
        }
        Ok(ModuleAction::Laurent { q })
    }

    pub fn sixth() -> Self {
        ModuleAction::Sixth
    }

    pub fn lattice(m: Mat2) -> Result<Self, ActionError> {
        let det = m.det();
        if det != 1 && det != -1 {
            return Err(ActionError::BadDeterminant(det));
        }
        if m.trace().abs() <= det.abs() + 1 {
            return Err(ActionError::NotHyperbolic {
                trace: m.trace(),
                det,
            });
        }
        Ok(ModuleAction::Lattice { m })
    }

    /// The default Sol lattice action, `M = [[2,1],[1,1]]`.
    pub fn lattice_default() -> Self {
        ModuleAction::lattice(Mat2::new(2, 1, 1, 1)).expect("default matrix is hyperbolic")
    }

    pub fn family(&self) -> Family {
        match self {
            ModuleAction::Laurent { .. } => Family::Laurent,
            ModuleAction::Sixth => Family::Sixth,
            ModuleAction::Lattice { .. } => Family::Lattice,
        }
    }

    /// Rank of the abelian part. All shipped families have `l = 1`.
    pub fn rank(&self) -> usize {
        1
    }

    pub fn zero(&self) -> ModuleElement {
        match self {
            ModuleAction::Laurent { q } => ModuleElement::Laurent(LaurentPoly::zero(*q)),
            ModuleAction::Sixth => ModuleElement::Sixth(SixthRational::zero()),
            ModuleAction::Lattice { .. } => ModuleElement::Lattice(LatticeVec::zero()),
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            shift: ShiftVector::zero(self.rank()),
            base: self.zero(),
        }
    }

    fn check_family(&self, k: &ModuleElement) {
        assert_eq!(
            self.family(),
            k.family(),
            "module element family does not match action"
        );
    }

    /// Applies `t^m` to `k`. Exact; `act(0, k) = k` and
    /// `act(m1 + m2, k) = act(m1, act(m2, k))`.
    pub fn act(&self, m: &ShiftVector, k: &ModuleElement) -> ModuleElement {
        self.check_family(k);
        assert_eq!(m.rank(), self.rank(), "shift rank mismatch");
        let e = m.scalar();
        match (self, k) {
            (ModuleAction::Laurent { .. }, ModuleElement::Laurent(p)) => {
                ModuleElement::Laurent(p.shift(e))
            }
            (ModuleAction::Sixth, ModuleElement::Sixth(r)) => {
                ModuleElement::Sixth(r.mul_three_halves_pow(e))
            }
            (ModuleAction::Lattice { m: mat }, ModuleElement::Lattice(v)) => {
                ModuleElement::Lattice(mat.apply_pow(v, e))
            }
            _ => unreachable!(),
        }
    }

    /// Group product `(m1, k1)(m2, k2) = (m1 + m2, t^{m2} k1 + k2)`.
    ///
    /// Mixing module families is a contract violation and panics.
    pub fn multiply(&self, g1: &GroupElement, g2: &GroupElement) -> GroupElement {
        self.check_family(&g1.base);
        self.check_family(&g2.base);
        GroupElement {
            shift: g1.shift.add(&g2.shift),
            base: self.act(&g2.shift, &g1.base).add(&g2.base),
        }
    }

    /// Group inverse `(m, k)^{-1} = (−m, −t^{−m} k)`.
    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        self.check_family(&g.base);
        let neg_shift = g.shift.neg();
        GroupElement {
            base: self.act(&neg_shift, &g.base).neg(),
            shift: neg_shift,
        }
    }

    /// `g^n` by repeated multiplication (exact; `n` may be negative).
    pub fn power(&self, g: &GroupElement, n: i64) -> GroupElement {
        let base = if n < 0 { self.inverse(g) } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    /// Left-to-right product of a word; the empty word is the identity.
    pub fn word_evaluate(&self, letters: &[GroupElement]) -> GroupElement {
        let mut acc = self.identity();
        for l in letters {
            acc = self.multiply(&acc, l);
        }
        acc
    }

    /// Per-letter data of a word: for letter `i` (1-based in the usual
    /// convention), the suffix shift `a_i = Σ_{j>i} m_j` and the module part
    /// `k_i`, so that the word's base is exactly `Σ_i t^{a_i} k_i`.
    pub fn word_terms(&self, letters: &[GroupElement]) -> Vec<(ShiftVector, ModuleElement)> {
        let l = self.rank();
        let mut suffix = ShiftVector::zero(l);
        let mut terms: Vec<(ShiftVector, ModuleElement)> = Vec::with_capacity(letters.len());
        for letter in letters.iter().rev() {
            terms.push((suffix.clone(), letter.base.clone()));
            suffix = suffix.add(&letter.shift);
        }
        terms.reverse();
        terms
    }

    /// Embeds a module element as `(0, k)`.
    pub fn embed(&self, k: ModuleElement) -> GroupElement {
        self.check_family(&k);
        GroupElement {
            shift: ShiftVector::zero(self.rank()),
            base: k,
        }
    }

    /// The distinguished shift generator `t = (e_i, 0)`.
    pub fn t(&self, component: usize) -> GroupElement {
        let mut m = vec![0; self.rank()];
        m[component] = 1;
        GroupElement {
            shift: ShiftVector(m),
            base: self.zero(),
        }
    }

    /// Draws a random module element; see [`RandomCfg`] for the ranges.
    pub fn random_module<R: Rng>(&self, rng: &mut R, cfg: &RandomCfg) -> ModuleElement {
        match self {
            ModuleAction::Laurent { q } => {
                ModuleElement::Laurent(LaurentPoly::random(rng, *q, cfg.laurent_window))
            }
            ModuleAction::Sixth => ModuleElement::Sixth(SixthRational::random(
                rng,
                cfg.sixth_max_num,
                cfg.sixth_max_pow,
            )),
            ModuleAction::Lattice { .. } => {
                ModuleElement::Lattice(LatticeVec::random(rng, cfg.lattice_max))
            }
        }
    }

    /// Random module element that is not zero.
    pub fn random_nonzero<R: Rng>(&self, rng: &mut R, cfg: &RandomCfg) -> ModuleElement {
        loop {
            let k = self.random_module(rng, cfg);
            if !k.is_zero() {
                return k;
            }
        }
    }

    /// Random group element: uniform shift in `[-shift_window, shift_window]`
    /// with a random module part.
    pub fn random_element<R: Rng>(&self, rng: &mut R, cfg: &RandomCfg) -> GroupElement {
        let m = rng.gen_range(-cfg.shift_window..=cfg.shift_window);
        GroupElement {
            shift: ShiftVector::one(m),
            base: self.random_module(rng, cfg),
        }
    }
}

/// Ranges for random element generation used by tests and the axiom checker.
#[derive(Debug, Clone)]
pub struct RandomCfg {
    /// Laurent exponents are drawn in `[-w, w]`, each coefficient uniform in `0..q`.
    pub laurent_window: i64,
    /// Sixth-rational numerators are uniform in `[-N, N]`.
    pub sixth_max_num: i64,
    /// Sixth-rational denominator exponents `a, b` are uniform in `0..=p`.
    pub sixth_max_pow: u32,
    /// Lattice coordinates are uniform in `[-N, N]`.
    pub lattice_max: i64,
    /// Shift exponents for random group elements are uniform in `[-w, w]`.
    pub shift_window: i64,
}

impl Default for RandomCfg {
    fn default() -> Self {
        RandomCfg {
            laurent_window: 8,
            sixth_max_num: 1 << 20,
            sixth_max_pow: 8,
            lattice_max: 1 << 20,
            shift_window: 8,
        }
    }
}

/// An element `(m, k)` of `K ⋊ ⟨t_1, …, t_l⟩`; `k` is always canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub shift: ShiftVector,
    pub base: ModuleElement,
}

impl GroupElement {
    pub fn new(shift: ShiftVector, base: ModuleElement) -> Self {
        GroupElement { shift, base }
    }

    pub fn is_identity(&self) -> bool {
        self.shift.is_zero() && self.base.is_zero()
    }

    /// Canonical byte encoding (format v1, see the `encode` module docs).
    /// Equal elements produce identical bytes.
    pub fn encode(&self) -> Vec<u8> {
        encode::encode(self)
    }

    /// Decodes an element previously produced by [`GroupElement::encode`]
    /// under the same action (the family context is not part of the bytes).
    pub fn decode(action: &ModuleAction, bytes: &[u8]) -> Result<GroupElement, DecodeError> {
        encode::decode(action, bytes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn sixth(n: i64, d: i64) -> ModuleElement {
        ModuleElement::Sixth(SixthRational::from_fraction(n, d).unwrap())
    }

    #[test]
    fn multiply_identity_left() {
        let act = ModuleAction::sixth();
        let g = GroupElement::new(ShiftVector::one(3), sixth(5, 4));
        assert_eq!(act.multiply(&act.identity(), &g), g);
        assert_eq!(act.multiply(&g, &act.identity()), g);
    }

    #[test]
    fn multiply_sixth_formula() {
        // (0, 1) · (1, 0) = (1, 3/2): the left base is pushed through t.
        let act = ModuleAction::sixth();
        let a = GroupElement::new(ShiftVector::one(0), sixth(1, 1));
        let t = act.t(0);
        let p = act.multiply(&a, &t);
        assert_eq!(p, GroupElement::new(ShiftVector::one(1), sixth(3, 2)));
    }

    #[test]
    fn multiply_laurent_shift_down() {
        // over Z/2: (1, x^0) · (-1, 0) = (0, x^-1)
        let act = ModuleAction::laurent(2).unwrap();
        let ta = GroupElement::new(
            ShiftVector::one(1),
            ModuleElement::Laurent(LaurentPoly::monomial(2, 0, 1)),
        );
        let t_inv = act.inverse(&act.t(0));
        let p = act.multiply(&ta, &t_inv);
        assert_eq!(
            p,
            GroupElement::new(
                ShiftVector::one(0),
                ModuleElement::Laurent(LaurentPoly::monomial(2, -1, 1))
            )
        );
    }

    #[test]
    fn inverse_examples() {
        let act = ModuleAction::sixth();
        assert_eq!(act.inverse(&act.identity()), act.identity());

        // (1, 3/2)^{-1} = (-1, -1)
        let g = GroupElement::new(ShiftVector::one(1), sixth(3, 2));
        let inv = act.inverse(&g);
        assert_eq!(inv, GroupElement::new(ShiftVector::one(-1), sixth(-1, 1)));
        assert!(act.multiply(&g, &inv).is_identity());

        // Laurent over Z/2: (2, x^1)^{-1} = (-2, x^{-1}) since -k = k.
        let act2 = ModuleAction::laurent(2).unwrap();
        let h = GroupElement::new(
            ShiftVector::one(2),
            ModuleElement::Laurent(LaurentPoly::monomial(2, 1, 1)),
        );
        let hinv = act2.inverse(&h);
        assert_eq!(
            hinv,
            GroupElement::new(
                ShiftVector::one(-2),
                ModuleElement::Laurent(LaurentPoly::monomial(2, -1, 1))
            )
        );
        assert!(act2.multiply(&h, &hinv).is_identity());
    }

    #[test]
    fn act_examples() {
        let act = ModuleAction::sixth();
        // (3/2)^2 · 1/3 = 3/4
        assert_eq!(act.act(&ShiftVector::one(2), &sixth(1, 3)), sixth(3, 4));

        let act2 = ModuleAction::laurent(5).unwrap();
        let p = ModuleElement::Laurent(LaurentPoly::from_terms(5, &[(2, 1), (-1, 1)]));
        let shifted = act2.act(&ShiftVector::one(1), &p);
        assert_eq!(
            shifted,
            ModuleElement::Laurent(LaurentPoly::from_terms(5, &[(3, 1), (0, 1)]))
        );

        let act3 = ModuleAction::lattice_default();
        let v = ModuleElement::Lattice(LatticeVec::from_i64(1, 0));
        assert_eq!(
            act3.act(&ShiftVector::one(1), &v),
            ModuleElement::Lattice(LatticeVec::from_i64(2, 1))
        );
    }

    #[test]
    fn act_is_a_homomorphism() {
        let mut rng = StdRng::seed_from_u64(7);
        let cfg = RandomCfg::default();
        for act in [
            ModuleAction::laurent(3).unwrap(),
            ModuleAction::sixth(),
            ModuleAction::lattice_default(),
        ] {
            for _ in 0..200 {
                let k = act.random_module(&mut rng, &cfg);
                let m1 = rng.gen_range(-5..=5);
                let m2 = rng.gen_range(-5..=5);
                let lhs = act.act(&ShiftVector::one(m1 + m2), &k);
                let rhs = act.act(&ShiftVector::one(m1), &act.act(&ShiftVector::one(m2), &k));
                assert_eq!(lhs, rhs);
                assert_eq!(act.act(&ShiftVector::one(0), &k), k);
            }
        }
    }

    #[test]
    fn word_evaluate_examples() {
        let act = ModuleAction::sixth();
        assert!(act.word_evaluate(&[]).is_identity());

        let g = GroupElement::new(ShiftVector::one(2), sixth(7, 12));
        assert!(act.word_evaluate(&[g.clone(), act.inverse(&g)]).is_identity());

        let s = act.t(0);
        let sss = act.word_evaluate(&[s.clone(), s.clone(), s]);
        assert_eq!(sss, GroupElement::new(ShiftVector::one(3), sixth(0, 1)));
    }

    #[test]
    fn word_terms_reconstruct_base() {
        let mut rng = StdRng::seed_from_u64(11);
        let cfg = RandomCfg {
            sixth_max_num: 40,
            sixth_max_pow: 2,
            ..RandomCfg::default()
        };
        let act = ModuleAction::sixth();
        for _ in 0..100 {
            let word: Vec<GroupElement> = (0..rng.gen_range(0..8))
                .map(|_| act.random_element(&mut rng, &cfg))
                .collect();
            let g = act.word_evaluate(&word);
            let mut total = act.zero();
            for (a_i, k_i) in act.word_terms(&word) {
                total = total.add(&act.act(&a_i, &k_i));
            }
            assert_eq!(total, g.base);
        }
    }

    #[test]
    #[should_panic(expected = "family")]
    fn mixing_families_rejected() {
        let act = ModuleAction::sixth();
        let g = GroupElement::new(
            ShiftVector::one(0),
            ModuleElement::Laurent(LaurentPoly::monomial(2, 0, 1)),
        );
        let _ = act.multiply(&g, &act.identity());
    }

    #[test]
    fn group_axioms_random() {
        let mut rng = StdRng::seed_from_u64(3);
        let cfg = RandomCfg {
            sixth_max_num: 1000,
            sixth_max_pow: 4,
            lattice_max: 1000,
            ..RandomCfg::default()
        };
        for act in [
            ModuleAction::laurent(2).unwrap(),
            ModuleAction::sixth(),
            ModuleAction::lattice_default(),
        ] {
            for _ in 0..500 {
                let g1 = act.random_element(&mut rng, &cfg);
                let g2 = act.random_element(&mut rng, &cfg);
                let g3 = act.random_element(&mut rng, &cfg);
                let lhs = act.multiply(&act.multiply(&g1, &g2), &g3);
                let rhs = act.multiply(&g1, &act.multiply(&g2, &g3));
                assert_eq!(lhs, rhs, "associativity");
                assert!(act.multiply(&g1, &act.inverse(&g1)).is_identity());
                assert_eq!(act.inverse(&act.inverse(&g1)), g1);
            }
        }
    }

    #[test]
    fn hyperbolicity_gate() {
        assert!(ModuleAction::lattice(Mat2::new(2, 1, 1, 1)).is_ok());
        assert_eq!(
            ModuleAction::lattice(Mat2::new(1, 1, 0, 1)),
            Err(ActionError::NotHyperbolic { trace: 2, det: 1 })
        );
        assert_eq!(
            ModuleAction::lattice(Mat2::new(2, 0, 0, 2)),
            Err(ActionError::BadDeterminant(4))
        );
    }

    #[test]
    fn action_invertible_on_samples() {
        let mut rng = StdRng::seed_from_u64(5);
        let cfg = RandomCfg::default();
        for act in [
            ModuleAction::laurent(5).unwrap(),
            ModuleAction::sixth(),
            ModuleAction::lattice_default(),
        ] {
            for _ in 0..100 {
                let k = act.random_module(&mut rng, &cfg);
                let back = act.act(&ShiftVector::one(1), &act.act(&ShiftVector::one(-1), &k));
                assert_eq!(back, k);
            }
        }
    }
}
