//! Exact arithmetic and word-metric experiments for split soluble groups `K ⋊ Z^l`.
//!
//! The crate ships three concrete module families for `K`:
//!
//! * finite-support Laurent polynomials over `Z/q` (lamplighter base),
//! * rationals whose denominator divides `2^a 3^b` (the `Z[1/6]` base, `t = ·3/2`),
//! * integer 2-vectors acted on by a hyperbolic integer matrix (Sol lattice base),
//!
//! together with:
//!
//! * [`valuations`] — pairs of valuations (two real functionals on `K∖{0}` shifting
//!   oppositely under `t` and subadditive up to a constant) plus an axiom checker,
//! * [`metric`] — a breadth-first word-metric engine over Cayley graphs: ball
//!   enumeration, word length, ball-restricted distances and dead-end depth,
//! * [`probes`] — executable experiments: detour-distance witness pairs, the
//!   quarter-slope bound, a counting check for valuation drift along admissible
//!   words, digit decompositions over `Z[1/6]`, and dead-end depth trends.
//!
//! All group elements are immutable values with a canonical byte encoding, so they
//! can be hashed, shared between threads and persisted.

pub mod group;
pub mod metric;
pub mod probes;
pub mod valuations;

pub use group::{GroupElement, Mat2, ModuleAction, ModuleElement, ShiftVector};
pub use metric::{BallTable, Depth, GenSet};
pub use valuations::{b_functional, Val, ValuationPair};
