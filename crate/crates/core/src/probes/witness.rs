//! Witness pairs for the detour-distance experiments.
//!
//! For a letter `s` of maximal drift and a nonzero `a ∈ K`, the elements
//! `g_n(i) = s^{n+i} · a · s^{−2n} · a · s^n` (with `a` embedded as `(0, a)`)
//! give the pair `h_n⁺ = g_n(J)`, `h_n⁻ = g_n(−J)`. The pair satisfies
//! `h_n⁺ (h_n⁻)^{-1} = s^{2J}` identically, so the two elements stay at
//! bounded distance while — inside the ball that contains them — the path
//! between them is forced through low-drift elements whose valuations make it
//! long. The probe tabulates that restricted distance as `n` grows.

use crate::group::{GroupElement, ModuleAction, ModuleElement};
use crate::metric::{BallTable, GenSet};
use crate::valuations::b_functional;

/// Parameters of a witness family: the drift-maximal letter `s`, the seed
/// module element `a ≠ 0`, and the offset `J ≥ 1`.
#[derive(Debug, Clone)]
pub struct WitnessConfig {
    pub s: GroupElement,
    pub a: ModuleElement,
    pub j: u32,
}

impl WitnessConfig {
    /// Picks `s` as the letter maximizing `B(shift)` (ties broken by canonical
    /// encoding order, which prefers pure shifts) and the family's default
    /// seed: `x^0` for lamplighter, `1` for `Z[1/6]`, `(1, 0)` for Sol.
    pub fn standard(action: &ModuleAction, genset: &GenSet, j: u32) -> WitnessConfig {
        let b = vec![1.0; action.rank()];
        let mut best: Option<(&GroupElement, f64, Vec<u8>)> = None;
        for l in genset.letters() {
            let drift = b_functional(&b, &l.shift);
            let enc = l.encode();
            let better = match &best {
                None => true,
                Some((_, bd, benc)) => drift > *bd || (drift == *bd && enc < *benc),
            };
            if better {
                best = Some((l, drift, enc));
            }
        }
        let s = best.expect("nonempty generating set").0.clone();
        let a = default_seed(action);
        WitnessConfig { s, a, j }
    }

    /// The `J` lower bound suggested by the quarter-slope fit:
    /// smallest `J > (4/z)(F + |a|_S·z/2 − I₁(a) + 3C)`.
    pub fn suggested_j(z: f64, empirical_f: f64, a_len: u32, i1_a: f64, c: f64) -> u32 {
        let bound = (4.0 / z) * (empirical_f + (a_len as f64) * z / 2.0 - i1_a + 3.0 * c);
        let j = bound.floor() + 1.0;
        j.max(1.0) as u32
    }
}

/// The family's smallest nonzero module element.
pub fn default_seed(action: &ModuleAction) -> ModuleElement {
    use crate::group::{LatticeVec, LaurentPoly, SixthRational};
    match action {
        ModuleAction::Laurent { q } => ModuleElement::Laurent(LaurentPoly::monomial(*q, 0, 1)),
        ModuleAction::Sixth => ModuleElement::Sixth(SixthRational::from_integer(1)),
        ModuleAction::Lattice { .. } => ModuleElement::Lattice(LatticeVec::from_i64(1, 0)),
    }
}

/// Builds `(h_n⁺, h_n⁻)` for `n ≥ J` by exact arithmetic.
pub fn witness_pair(
    action: &ModuleAction,
    cfg: &WitnessConfig,
    n: u32,
) -> (GroupElement, GroupElement) {
    assert!(n >= cfg.j, "witness pairs need n >= J");
    assert!(!cfg.a.is_zero(), "the seed element a must be nonzero");
    let g_n = |i: i64| -> GroupElement {
        let a = action.embed(cfg.a.clone());
        let mut g = action.power(&cfg.s, i64::from(n) + i);
        g = action.multiply(&g, &a);
        g = action.multiply(&g, &action.power(&cfg.s, -2 * i64::from(n)));
        g = action.multiply(&g, &a);
        action.multiply(&g, &action.power(&cfg.s, i64::from(n)))
    };
    (g_n(i64::from(cfg.j)), g_n(-i64::from(cfg.j)))
}

/// Outcome of the restricted-distance column of [`ac_probe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetourOutcome {
    /// Detour distance inside `B̄(max(|h⁺|, |h⁻|))`.
    Distance(u32),
    /// No path inside the restriction; the detour exceeds every path in the ball.
    Unreachable,
    /// A witness fell outside the enumerated ball.
    Absent,
}

/// One row of the detour trend table.
#[derive(Debug, Clone)]
pub struct AcRow {
    pub n: u32,
    pub h_plus_len: Option<u32>,
    pub h_minus_len: Option<u32>,
    pub s2j_len: Option<u32>,
    pub detour: DetourOutcome,
}

/// Tabulates, for each `n`, the witness lengths, the length of `s^{2J}` and
/// the detour distance from `h_n⁻` to `h_n⁺` restricted to the ball of radius
/// `max(|h_n⁺|, |h_n⁻|)`. Witnesses outside the table give `Absent` rows.
pub fn ac_probe(
    action: &ModuleAction,
    cfg: &WitnessConfig,
    table: &BallTable,
    n_range: std::ops::RangeInclusive<u32>,
) -> Vec<AcRow> {
    let s2j = action.power(&cfg.s, 2 * i64::from(cfg.j));
    let s2j_len = table.word_length(&s2j);
    n_range
        .map(|n| {
            let (h_plus, h_minus) = witness_pair(action, cfg, n);
            let h_plus_len = table.word_length(&h_plus);
            let h_minus_len = table.word_length(&h_minus);
            let detour = match (h_plus_len, h_minus_len) {
                (Some(lp), Some(lm)) => {
                    let r = lp.max(lm);
                    match table.restricted_distance(&h_minus, &h_plus, r) {
                        Ok(Some(d)) => DetourOutcome::Distance(d),
                        Ok(None) => DetourOutcome::Unreachable,
                        Err(_) => DetourOutcome::Absent,
                    }
                }
                _ => DetourOutcome::Absent,
            };
            AcRow {
                n,
                h_plus_len,
                h_minus_len,
                s2j_len,
                detour,
            }
        })
        .collect()
}
