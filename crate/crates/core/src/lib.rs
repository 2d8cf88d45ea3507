//! Exact symbolic dynamics on the recursively subdivided unit cube.
//!
//! The unit cube in dimension `n` is carved into `4^n` equal sub-cubes,
//! recursively, and points are addressed by the digit sequence of nested
//! parts containing them. Dropping the leading digit is then a well-defined
//! self-map of the cube, and this crate constructs and verifies, in
//! arbitrary-precision rational arithmetic with no floating point in any
//! computation path, the classic chaos ingredients of that shift: dense
//! orbits, dense periodic points, sensitivity witness pairs, and scrambled
//! (proximal yet frequently separated) pairs.
//!
//! Modules:
//! - [`coding`]: subdivision codes, exact box geometry, encode/decode.
//! - [`dynamics`]: the shift map, orbits, and constructive chaos witnesses.
//! - [`tent`]: the piecewise-linear interval map realizing the 1-D shift,
//!   with itinerary coding and inverse-branch intervals.
//! - [`verify`]: brute-force exact verification suites with structured
//!   reports.

pub mod coding;
pub mod dynamics;
pub mod error;
pub mod rational;
pub mod tent;
pub mod verify;

pub use coding::{
    axes_to_digit, decode_code, diameter_squared, digit_to_axes, encode_point, subcube_bounds,
    subcube_distance_squared, AxisDigits, Code, Dimension, SubCubeBox, DEFAULT_MAX_ORDER,
    MAX_DIMENSION,
};
pub use dynamics::{
    dense_code, dense_code_length, liyorke_pair, orbit, periodic_approximant, periodic_code,
    recurrence_stats, sensitivity_witness, separated_digit, shift, shift_by, OrbitRecord,
    OrbitStep, RecurrenceStats, ScrambledPair, Segment, SensitivityWitness,
};
pub use error::{Error, Result};
pub use rational::Rational;
pub use tent::{check_semiconjugacy, code_interval, itinerary, tent_eval, Branch, TentInterval};
pub use verify::{
    verify_diagonal, verify_liyorke, verify_periodic_density, verify_separation,
    verify_transitivity, VerificationReport, VerifyLimits, Witness,
};
