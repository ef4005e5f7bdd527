//! Executable experiments over the metric engine: detour-distance witness
//! pairs, the quarter-slope bound, the drift-counting check, the `Z[1/6]`
//! digit system, and dead-end depth trends.
//!
//! All probes are read-only over a [`crate::metric::BallTable`]; row order is
//! fixed by the input range, not by completion order, so outputs are stable
//! under any parallelism inside the metric engine.

pub mod depth;
pub mod goodgen;
pub mod lemma;
pub mod quarter;
pub mod witness;

pub use depth::{deep_pocket_probe, depth_trend, DeepPocketError, DepthRow};
pub use goodgen::{
    decompose, fit_f_prime, good_gen_set_z16, random_fuzz_box_element, z16_good_letters,
    DecomposeError, Decomposition, GoodGenSet, LatticeChain,
};
pub use lemma::{
    admissible, fit_lemma_d, min_passing_d, random_admissible_word, triangle_lemma_check,
    LemmaFit, LemmaOutcome,
};
pub use quarter::{quarter_bound_fit, QuarterFit, QuarterRow};
pub use witness::{
    ac_probe, default_seed, witness_pair, AcRow, DetourOutcome, WitnessConfig,
};
