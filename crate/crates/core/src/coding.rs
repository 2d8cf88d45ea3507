//! Subdivision codes and exact sub-cube geometry.
//!
//! The unit cube in dimension `n` is split into `4^n` equal parts, each part
//! again into `4^n` parts, and so on. A [`Code`] is a finite sequence of
//! 1-based digits naming one nested sub-cube per level; the empty code names
//! the whole cube. Long codes double as point approximations: the named box
//! has diameter `sqrt(n)/4^k` at order `k`, so its lower corner pins the
//! point down to that radius.
//!
//! Digit ordering follows a mixed-radix rule: digit `d` decomposes as `d - 1`
//! written in base 4 with axis 0 least significant. In one dimension this
//! reproduces the interval labels `1..=4` from left to right.
//!
//! Interval ends follow the one-dimensional convention generalized per axis:
//! a box is closed at an axis lower end only when that bound is 0, and always
//! closed at the upper end. First-order intervals on the line are therefore
//! `[0, 1/4], (1/4, 1/2], (1/2, 3/4], (3/4, 1]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{pow4, quarter_pow, sixteenth_pow, Rational};

/// Largest supported dimension; keeps every digit `1..=4^n` inside a `u64`.
pub const MAX_DIMENSION: u32 = 31;

/// Default truncation order for code-producing constructions.
///
/// Infinite index sequences are approximated by truncation; callers that
/// need deeper codes pass an explicit depth.
pub const DEFAULT_MAX_ORDER: usize = 256;

/// Cube dimension `n >= 1`, with `4^n` parts per subdivision step.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dimension(u32);

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_DIMENSION {
            return Err(Error::DimensionOutOfRange(n));
        }
        Ok(Dimension(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of parts per subdivision step, `4^n`.
    pub fn arity(self) -> u64 {
        1u64 << (2 * self.0)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Dimension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n: u32 = s.trim().parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            expected: "dimension",
        })?;
        Dimension::new(n)
    }
}

/// One subdivision step split into per-axis quaternary digits, axis 0 first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AxisDigits(Vec<u8>);

impl AxisDigits {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        Dimension::new(digits.len() as u32)?;
        for (axis, &q) in digits.iter().enumerate() {
            if q > 3 {
                return Err(Error::AxisDigitOutOfRange { digit: q, axis });
            }
        }
        Ok(AxisDigits(digits))
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn dimension(&self) -> Dimension {
        Dimension(self.0.len() as u32)
    }
}

/// Splits a 1-based digit into its per-axis quaternary digits.
///
/// Axis `j` of `d` is `floor((d-1) / 4^j) mod 4`; inverse of
/// [`axes_to_digit`].
pub fn digit_to_axes(digit: u64, dimension: Dimension) -> Result<AxisDigits> {
    let arity = dimension.arity();
    if digit < 1 || digit > arity {
        return Err(Error::DigitOutOfRange {
            digit,
            position: 0,
            arity,
        });
    }
    let e = digit - 1;
    let digits = (0..dimension.get())
        .map(|j| ((e >> (2 * j)) & 3) as u8)
        .collect();
    Ok(AxisDigits(digits))
}

/// Recombines per-axis quaternary digits into the 1-based digit
/// `1 + sum_j q_j 4^j`.
pub fn axes_to_digit(axes: &AxisDigits) -> u64 {
    1 + axes
        .0
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, &q)| acc + ((q as u64) << (2 * j)))
}

/// Finite subdivision code: the digit at position `p` (0-based) selects the
/// part taken at subdivision step `p + 1`. Order 0 is the whole cube.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Code {
    dimension: Dimension,
    digits: Vec<u64>,
}

impl Code {
    pub fn new(dimension: Dimension, digits: Vec<u64>) -> Result<Self> {
        let arity = dimension.arity();
        for (position, &digit) in digits.iter().enumerate() {
            if digit < 1 || digit > arity {
                return Err(Error::DigitOutOfRange {
                    digit,
                    position,
                    arity,
                });
            }
        }
        Ok(Code { dimension, digits })
    }

    /// The order-0 code naming the whole cube.
    pub fn empty(dimension: Dimension) -> Self {
        Code {
            dimension,
            digits: Vec::new(),
        }
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    /// Number of digits, i.e. the subdivision depth this code names.
    pub fn order(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Truncation to the first `k` digits (`k` capped at the order).
    pub fn prefix(&self, k: usize) -> Code {
        Code {
            dimension: self.dimension,
            digits: self.digits[..k.min(self.digits.len())].to_vec(),
        }
    }

    /// Extends the code by one more subdivision digit.
    pub fn extended(&self, digit: u64) -> Result<Code> {
        let mut digits = self.digits.clone();
        digits.push(digit);
        Code::new(self.dimension, digits)
    }

    /// Parses comma-separated 1-based digits, e.g. `"2,3,1"`. The empty
    /// string parses to the order-0 code.
    pub fn parse(dimension: Dimension, s: &str) -> Result<Code> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Code::empty(dimension));
        }
        let digits = t
            .split(',')
            .map(|part| {
                part.trim().parse::<u64>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    expected: "comma-separated code digits",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Code::new(dimension, digits)
    }
}

/// Comma-separated 1-based digits; the order-0 code renders as "".
impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.digits {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}

/// Axis-aligned box with exact rational bounds and per-axis end openness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubCubeBox {
    lower: Vec<Rational>,
    upper: Vec<Rational>,
    lower_closed: Vec<bool>,
    upper_closed: Vec<bool>,
}

impl SubCubeBox {
    pub fn dimension(&self) -> Dimension {
        Dimension(self.lower.len() as u32)
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower_closed(&self) -> &[bool] {
        &self.lower_closed
    }

    pub fn upper_closed(&self) -> &[bool] {
        &self.upper_closed
    }

    /// Membership honoring the half-open end convention.
    pub fn contains(&self, point: &[Rational]) -> bool {
        point.len() == self.lower.len()
            && (0..point.len()).all(|j| {
                let lo_ok = if self.lower_closed[j] {
                    point[j] >= self.lower[j]
                } else {
                    point[j] > self.lower[j]
                };
                let hi_ok = if self.upper_closed[j] {
                    point[j] <= self.upper[j]
                } else {
                    point[j] < self.upper[j]
                };
                lo_ok && hi_ok
            })
    }

    /// Membership in the closure (all ends treated as closed).
    pub fn contains_closed(&self, point: &[Rational]) -> bool {
        point.len() == self.lower.len()
            && (0..point.len()).all(|j| point[j] >= self.lower[j] && point[j] <= self.upper[j])
    }

    /// Containment of closures: every point of `inner`'s closure lies in
    /// `self`'s closure.
    pub fn contains_box_closed(&self, inner: &SubCubeBox) -> bool {
        inner.lower.len() == self.lower.len()
            && (0..self.lower.len())
                .all(|j| inner.lower[j] >= self.lower[j] && inner.upper[j] <= self.upper[j])
    }

    /// Squared inf-distance between the closures: per-axis gaps, summed as
    /// squares.
    pub fn distance_squared(&self, other: &SubCubeBox) -> Result<Rational> {
        if self.lower.len() != other.lower.len() {
            return Err(Error::DimensionMismatch {
                left: self.lower.len() as u32,
                right: other.lower.len() as u32,
            });
        }
        let mut total = Rational::zero();
        for j in 0..self.lower.len() {
            let a = &self.lower[j] - &other.upper[j];
            let b = &other.lower[j] - &self.upper[j];
            let gap = if a.is_positive() {
                a
            } else if b.is_positive() {
                b
            } else {
                continue;
            };
            total += &gap * &gap;
        }
        Ok(total)
    }
}

/// Exact bounds of the sub-cube a code names.
///
/// Axis `j` has lower bound `sum_p q_{j,p} 4^-p` and width `4^-k`; the lower
/// end is closed exactly when that bound is 0, the upper end is always
/// closed.
pub fn subcube_bounds(code: &Code) -> SubCubeBox {
    let n = code.dimension.get() as usize;
    let k = code.order();
    let numerators = lower_corner_numerators(code, 0);
    let denom = pow4(k);
    let width = quarter_pow(k);
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    let mut lower_closed = Vec::with_capacity(n);
    let mut upper_closed = Vec::with_capacity(n);
    for num in numerators {
        let lo = Rational::new(num, denom.clone());
        lower_closed.push(lo.is_zero());
        upper_closed.push(true);
        upper.push(&lo + &width);
        lower.push(lo);
    }
    SubCubeBox {
        lower,
        upper,
        lower_closed,
        upper_closed,
    }
}

/// Per-axis numerators of the lower corner over denominator `4^(k-skip)`,
/// considering only digits from position `skip` on. Horner evaluation keeps
/// this linear in the number of digits.
pub(crate) fn lower_corner_numerators(code: &Code, skip: usize) -> Vec<BigInt> {
    let n = code.dimension.get() as usize;
    let mut nums = vec![BigInt::zero(); n];
    for &digit in &code.digits[skip.min(code.digits.len())..] {
        let e = digit - 1;
        for (j, num) in nums.iter_mut().enumerate() {
            let q = (e >> (2 * j)) & 3;
            *num = &*num * 4 + q;
        }
    }
    nums
}

/// Squared diameter of the box a code names: exactly `n / 16^k`.
///
/// Kept in squared form so the value stays rational; the diameter itself is
/// `sqrt(n) / 4^k`.
pub fn diameter_squared(code: &Code) -> Rational {
    Rational::from(BigInt::from(code.dimension.get())) * sixteenth_pow(code.order())
}

/// Squared inf-distance between the closures of two coded boxes.
///
/// Zero whenever the closures touch or overlap; orders may differ.
pub fn subcube_distance_squared(a: &Code, b: &Code) -> Result<Rational> {
    if a.dimension != b.dimension {
        return Err(Error::DimensionMismatch {
            left: a.dimension.get(),
            right: b.dimension.get(),
        });
    }
    subcube_bounds(a).distance_squared(&subcube_bounds(b))
}

/// The unique order-`k` code whose half-open box contains `x`.
///
/// Per axis this is the base-4 expansion of the coordinate with the
/// upper-end-closed convention, so exact grid points such as `1/4` stay in
/// the lower part: `encode_point(&[1/4], 1)` is the code `(1)`.
pub fn encode_point(point: &[Rational], order: usize) -> Result<Code> {
    let dimension = Dimension::new(point.len() as u32)?;
    for (axis, x) in point.iter().enumerate() {
        if x.is_negative() || *x > Rational::from(BigInt::from(1)) {
            return Err(Error::CoordinateOutOfRange {
                value: x.to_string(),
                axis,
            });
        }
    }
    let mut scaled: Vec<Rational> = point.to_vec();
    let mut digits = Vec::with_capacity(order);
    for _ in 0..order {
        let mut digit = 0u64;
        for (j, t) in scaled.iter_mut().enumerate() {
            let four_t = &*t * BigInt::from(4);
            // ceil(4t) - 1, clamped to 0: picks the part whose upper end
            // contains 4t under the upper-closed convention.
            let mut q = four_t.ceil().to_integer() - BigInt::one();
            if q.is_negative() {
                q = BigInt::zero();
            }
            let q_u64: u64 = u64::try_from(&q).expect("axis digit fits u64");
            digit += q_u64 << (2 * j);
            *t = four_t - Rational::from(q);
        }
        digits.push(digit + 1);
    }
    Code::new(dimension, digits)
}

/// Canonical representative of a finite code: the lower corner of its box.
///
/// For grid-boundary codes this corner can fall outside the half-open box
/// (it always lies in the closure), so `encode_point(decode_code(c), k)`
/// recovers `c` only off the 4-adic grid; `decode_code(&Code::parse(d1,
/// "2").unwrap())` is `1/4`, which encodes back to `(1)`.
pub fn decode_code(code: &Code) -> Vec<Rational> {
    decode_from(code, 0)
}

/// Lower corner of the box named by the digits from position `skip` on.
pub(crate) fn decode_from(code: &Code, skip: usize) -> Vec<Rational> {
    let k = code.order() - skip.min(code.order());
    let denom = pow4(k);
    lower_corner_numerators(code, skip)
        .into_iter()
        .map(|num| Rational::new(num, denom.clone()))
        .collect()
}
