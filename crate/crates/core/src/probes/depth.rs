//! Dead-end depth trends for the two-sided elements `k_i = t^i a + t^{-i} a`.

use crate::group::{ModuleAction, ModuleElement, ShiftVector};
use crate::metric::{BallTable, Depth};
use crate::probes::goodgen::GoodGenSet;
use crate::probes::quarter::quarter_bound_fit;

/// One row of a depth trend table.
#[derive(Debug, Clone)]
pub struct DepthRow {
    pub i: i64,
    pub k_len: Option<u32>,
    /// `None` when `k_i` lies outside the enumerated ball.
    pub depth: Option<Depth>,
    /// Valuation-based length diagnostic `4(i − C − M − H)/|b|`; reported
    /// only by the digit-system probe and never used as ground truth.
    pub diag: Option<f64>,
}

/// Builds `k_i = (0, t^i a + t^{-i} a)` for each `i` and measures word length
/// and dead-end depth against the table. Out-of-ball rows carry `None`s.
pub fn depth_trend(
    action: &ModuleAction,
    table: &BallTable,
    a: &ModuleElement,
    i_range: std::ops::RangeInclusive<i64>,
) -> Vec<DepthRow> {
    assert!(!a.is_zero(), "the seed element a must be nonzero");
    i_range
        .map(|i| {
            let k_i = action
                .act(&ShiftVector::one(i), a)
                .add(&action.act(&ShiftVector::one(-i), a));
            let g = action.embed(k_i);
            let k_len = table.word_length(&g);
            let depth = k_len.and_then(|_| table.depth(&g).ok());
            DepthRow {
                i,
                k_len,
                depth,
                diag: None,
            }
        })
        .collect()
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DeepPocketError {
    #[error("the table's generating set is not the digit-system set {{a t a'}} ∪ A")]
    GenSetMismatch,
}

/// The digit-system depth probe: requires the table to be built over the
/// symmetrized `{ a t a' : a, a' ∈ A } ∪ A` letters, probes `k_i` for the
/// unit digit `a = 1`, and attaches the diagnostic lower-bound column
/// `4(i − C − M − H)/|b|` with `H` the empirical quarter-slope constant of
/// this very table.
pub fn deep_pocket_probe(
    ggs: &GoodGenSet,
    table: &BallTable,
    i_range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<DepthRow>, DeepPocketError> {
    let action = table.action().clone();
    let expected = super::goodgen::z16_good_letters(&action, ggs)
        .map_err(|_| DeepPocketError::GenSetMismatch)?;
    let mut want: Vec<Vec<u8>> = expected.letters().iter().map(|l| l.encode()).collect();
    let mut have: Vec<Vec<u8>> = table
        .genset()
        .letters()
        .iter()
        .map(|l| l.encode())
        .collect();
    want.sort();
    have.sort();
    if want != have {
        return Err(DeepPocketError::GenSetMismatch);
    }

    let a = ggs
        .digits
        .iter()
        .find(|d| !d.is_zero())
        .expect("digit set has nonzero digits")
        .clone();
    // M over the digit set is 0 for unit digits; C is the larger pair constant.
    let c = ggs.primary.c.max(ggs.auxiliary.c);
    let h = quarter_bound_fit(&ggs.primary, table).empirical_f;
    let b_abs = ggs.primary.b[0].abs();
    let mut rows = depth_trend(&action, table, &a, i_range);
    for row in &mut rows {
        row.diag = Some(4.0 * (row.i as f64 - c - 0.0 - h) / b_abs);
    }
    Ok(rows)
}
