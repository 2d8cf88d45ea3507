//! The shift map on subdivision codes and its constructive chaos witnesses.
//!
//! Dropping the leading digit of a code maps the sub-cube it names onto a
//! sub-cube one order shallower; on infinite index sequences this is the
//! left shift, and on our finite truncations each application consumes one
//! digit. Everything classical about shift spaces is constructive here:
//! a code visiting every sub-cube up to a given order ([`dense_code`]),
//! periodic codes and in-box periodic approximants, sensitivity pairs that
//! agree to order `k` and then land in separated first-order cubes, and
//! scrambled pairs alternating agreement runs with separated runs.

use crate::coding::{digit_to_axes, subcube_distance_squared, Code, Dimension};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Drops the leading digit: the sub-cube of order `k` maps onto the order
/// `k-1` sub-cube named by the remaining digits.
///
/// The order-1 code shifts to the whole cube (order 0); shifting the whole
/// cube itself is a domain error.
pub fn shift(code: &Code) -> Result<Code> {
    if code.order() == 0 {
        return Err(Error::ShiftEmptyCode);
    }
    Code::new(code.dimension(), code.digits()[1..].to_vec())
}

/// `steps`-fold shift in one truncation.
pub fn shift_by(code: &Code, steps: usize) -> Result<Code> {
    if steps > code.order() {
        return Err(Error::InsufficientDepth {
            requested: steps,
            available: code.order(),
        });
    }
    Code::new(code.dimension(), code.digits()[steps..].to_vec())
}

/// One orbit step: the code after `index` shifts and the decoded lower
/// corner of its box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitStep {
    pub index: usize,
    pub code: Code,
    pub point: Vec<Rational>,
}

/// Iterated-shift trajectory, step 0 included.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitRecord {
    steps: Vec<OrbitStep>,
}

impl OrbitRecord {
    pub fn steps(&self) -> &[OrbitStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Iterates the shift `steps` times, recording code and decoded point at
/// every step including step 0. Each step consumes one digit, so the code
/// must be at least `steps` deep.
pub fn orbit(code: &Code, steps: usize) -> Result<OrbitRecord> {
    if steps > code.order() {
        return Err(Error::InsufficientDepth {
            requested: steps,
            available: code.order(),
        });
    }
    let mut out = Vec::with_capacity(steps + 1);
    for t in 0..=steps {
        out.push(OrbitStep {
            index: t,
            code: shift_by(code, t)?,
            point: crate::coding::decode_from(code, t),
        });
    }
    Ok(OrbitRecord { steps: out })
}

/// A block of digits repeated end to end; shifting by the block length
/// reproduces a prefix-truncation of the same code.
pub fn periodic_code(dimension: Dimension, block: &[u64], repetitions: usize) -> Result<Code> {
    if block.is_empty() || repetitions == 0 {
        return Err(Error::EmptyBlock);
    }
    let mut digits = Vec::with_capacity(block.len() * repetitions);
    for _ in 0..repetitions {
        digits.extend_from_slice(block);
    }
    Code::new(dimension, digits)
}

/// The periodic code obtained by cycling the target's digits up to `depth`.
///
/// Whole blocks only: the result has order `p * max(1, depth / p)` for a
/// target of order `p`. Its box is nested inside the target's box, so the
/// periodic point it truncates sits within `sqrt(n)/4^p` of every point of
/// the target.
pub fn periodic_approximant(target: &Code, depth: usize) -> Result<Code> {
    let p = target.order();
    if p == 0 {
        return Err(Error::EmptyBlock);
    }
    periodic_code(target.dimension(), target.digits(), (depth / p).max(1))
}

/// Total length of the block enumeration behind [`dense_code`]:
/// `sum_{j=1..=q} j * (4^n)^j`.
pub fn dense_code_length(dimension: Dimension, max_order: usize) -> Option<usize> {
    let arity = dimension.arity() as u128;
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for j in 1..=max_order as u128 {
        power = power.checked_mul(arity)?;
        total = total.checked_add(j.checked_mul(power)?)?;
        if total > usize::MAX as u128 {
            return None;
        }
    }
    Some(total as usize)
}

/// Concatenates every digit block of length 1, then 2, ..., up to
/// `max_order`, lexicographically within each length.
///
/// Every code of order at most `max_order` appears as a contiguous block, so
/// the orbit of this code visits every sub-cube down to that order.
pub fn dense_code(dimension: Dimension, max_order: usize, depth_limit: usize) -> Result<Code> {
    let required = dense_code_length(dimension, max_order).ok_or(Error::CapacityExceeded {
        required: usize::MAX,
        limit: depth_limit,
    })?;
    if required > depth_limit {
        return Err(Error::CapacityExceeded {
            required,
            limit: depth_limit,
        });
    }
    let arity = dimension.arity();
    let mut digits = Vec::with_capacity(required);
    for len in 1..=max_order {
        // lexicographic odometer over blocks of this length
        let mut block = vec![1u64; len];
        loop {
            digits.extend_from_slice(&block);
            let mut pos = len;
            while pos > 0 {
                if block[pos - 1] < arity {
                    block[pos - 1] += 1;
                    break;
                }
                block[pos - 1] = 1;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    debug_assert_eq!(digits.len(), required);
    Code::new(dimension, digits)
}

/// The partner digit whose first-order cube sits farthest from the given
/// digit's cube: per axis the quaternary digit moves to whichever end is at
/// least two quarters away. The squared gap is at least `n/16` and this is
/// the smallest digit attaining the maximum squared distance.
pub fn separated_digit(digit: u64, dimension: Dimension) -> Result<u64> {
    let axes = digit_to_axes(digit, dimension)?;
    let mut partner = 0u64;
    for (j, &q) in axes.digits().iter().enumerate() {
        // per-axis maximizer of the interval gap (|a-b|-1)/4 is unique
        let far: u64 = if q <= 1 { 3 } else { 0 };
        partner += far << (2 * j);
    }
    Ok(partner + 1)
}

/// Sensitivity pair: two codes agreeing to order `k` whose `k`-fold shifts
/// start in first-order cubes separated by at least `sqrt(n)/4`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SensitivityWitness {
    pub original: Code,
    pub perturbed: Code,
    pub agree_prefix: usize,
    pub separation_step: usize,
    pub guaranteed_squared_separation: Rational,
}

/// Builds the sensitivity witness for `code` at agreement order `k`.
///
/// The perturbed code copies the first `k` digits, replaces digit `k + 1`
/// by its separated partner, and keeps the remaining tail. Both codes start
/// inside one order-`k` box (distance at most `sqrt(n)/4^k`) and after `k`
/// shifts their leading cubes are at squared distance at least `n/16`.
pub fn sensitivity_witness(code: &Code, k: usize) -> Result<SensitivityWitness> {
    if code.order() < k + 1 {
        return Err(Error::InsufficientDepth {
            requested: k + 1,
            available: code.order(),
        });
    }
    let n = code.dimension();
    let pivot = code.digits()[k];
    let partner = separated_digit(pivot, n)?;
    let mut digits = code.digits().to_vec();
    digits[k] = partner;
    let perturbed = Code::new(n, digits)?;
    let guaranteed = Rational::new(n.get().into(), 16.into());
    let achieved =
        subcube_distance_squared(&Code::new(n, vec![pivot])?, &Code::new(n, vec![partner])?)?;
    if achieved < guaranteed {
        // would falsify the separation property for 4^n parts
        return Err(Error::NoSeparatedDigit { digit: pivot });
    }
    Ok(SensitivityWitness {
        original: code.clone(),
        perturbed,
        agree_prefix: k,
        separation_step: k,
        guaranteed_squared_separation: guaranteed,
    })
}

/// Lengths of one agree/disagree alternation in a scrambled pair.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub agree: usize,
    pub disagree: usize,
}

/// Proximal-yet-separated pair of codes of equal order.
///
/// In segment `s` (1-based) the codes agree for `s` digits, then disagree
/// for `s` digits with every disagreeing digit pair naming first-order
/// cubes at squared distance at least `n/16`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScrambledPair {
    pub code_a: Code,
    pub code_b: Code,
    pub schedule: Vec<Segment>,
}

impl ScrambledPair {
    /// Shift count after which the pair shares the order-`s` box of
    /// segment `s` (1-based).
    pub fn agree_checkpoint(&self, segment: usize) -> usize {
        segment * (segment - 1)
    }

    /// Shift counts at which the pair's leading digits are separated in
    /// segment `s` (1-based).
    pub fn disagree_checkpoints(&self, segment: usize) -> std::ops::Range<usize> {
        let start = self.agree_checkpoint(segment) + segment;
        start..start + segment
    }

    /// Total digits consumed by `segments` alternations.
    pub fn schedule_length(segments: usize) -> usize {
        segments * (segments + 1)
    }
}

/// Builds a scrambled pair over the first `m` segments of the alternation
/// schedule 1,1,2,2,...,m,m against the given base code.
pub fn liyorke_pair(base: &Code, segments: usize) -> Result<ScrambledPair> {
    let needed = ScrambledPair::schedule_length(segments);
    if segments == 0 {
        return Err(Error::EmptyBlock);
    }
    if base.order() < needed {
        return Err(Error::CapacityExceeded {
            required: needed,
            limit: base.order(),
        });
    }
    let n = base.dimension();
    let code_a = base.prefix(needed);
    let mut digits_b = Vec::with_capacity(needed);
    let mut schedule = Vec::with_capacity(segments);
    for s in 1..=segments {
        for _ in 0..s {
            digits_b.push(code_a.digits()[digits_b.len()]);
        }
        for _ in 0..s {
            let a = code_a.digits()[digits_b.len()];
            digits_b.push(separated_digit(a, n)?);
        }
        schedule.push(Segment {
            agree: s,
            disagree: s,
        });
    }
    Ok(ScrambledPair {
        code_a,
        code_b: Code::new(n, digits_b)?,
        schedule,
    })
}

/// Finite-horizon recurrence report: when the orbit re-enters the initial
/// order-`closeness_order` box, and when its leading cube separates from
/// the initial one by at least `sqrt(n)/4`.
///
/// Reporting only; emptiness of either list asserts nothing about the
/// infinite orbit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceStats {
    pub horizon: usize,
    pub closeness_order: usize,
    pub return_times: Vec<usize>,
    pub separation_times: Vec<usize>,
}

/// Scans shift times `1..=horizon` for returns (shared leading
/// `closeness_order` digits with the start) and separations (leading cubes
/// at squared distance at least `n/16`).
pub fn recurrence_stats(
    code: &Code,
    horizon: usize,
    closeness_order: usize,
) -> Result<RecurrenceStats> {
    if code.order() < horizon + closeness_order {
        return Err(Error::CapacityExceeded {
            required: horizon + closeness_order,
            limit: code.order(),
        });
    }
    let n = code.dimension();
    let bound = Rational::new(n.get().into(), 16.into());
    let digits = code.digits();
    let mut return_times = Vec::new();
    let mut separation_times = Vec::new();
    for t in 1..=horizon {
        if digits[t..t + closeness_order] == digits[..closeness_order] {
            return_times.push(t);
        }
        if t < code.order() {
            let d = subcube_distance_squared(
                &Code::new(n, vec![digits[t]])?,
                &Code::new(n, vec![digits[0]])?,
            )?;
            if d >= bound {
                separation_times.push(t);
            }
        }
    }
    Ok(RecurrenceStats {
        horizon,
        closeness_order,
        return_times,
        separation_times,
    })
}
