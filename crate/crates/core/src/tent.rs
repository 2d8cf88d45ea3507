//! Piecewise-linear realization of the 1D shift: a four-branch tent map
//! on [0,1] with slopes of magnitude 4.
//!
//! Each branch maps its quarter-width domain onto the whole interval, so
//! the itinerary of a point (the sequence of branch indices its orbit
//! visits) is a dimension-1 code, and applying the map corresponds to
//! shifting the itinerary. Inverse branches contract by 1/4, so the set of
//! points sharing a length-`k` itinerary prefix is an interval of width
//! exactly `4^-k`.
//!
//! Endpoint bookkeeping: branch domains follow the upper-closed convention
//! (`[0,1/4]`, then `(i/4,(i+1)/4]`), but inverse images under the
//! falling branches flip openness, so [`code_interval`] reports closed
//! endpoint hulls and membership tests here treat boundary points as
//! inside. Interval endpoints form a measure-zero set and no property in
//! this module depends on their membership side.

use num_traits::{One, Zero};

use crate::coding::Code;
use crate::dynamics::shift;
use crate::error::{Error, Result};
use crate::rational::{ratio, Rational};
use std::fmt;

/// One affine piece of the tent map: `index` selects domain quarter and
/// rule.
///
/// Rules by index: `4x`, `2-4x`, `4x-2`, `4-4x`. Odd branches rise,
/// even branches fall; each maps its domain onto [0,1].
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Branch {
    index: u8,
}

impl Branch {
    pub fn new(index: u64) -> Result<Branch> {
        if (1..=4).contains(&index) {
            Ok(Branch { index: index as u8 })
        } else {
            Err(Error::DigitOutOfRange {
                digit: index,
                position: 0,
                arity: 4,
            })
        }
    }

    /// Branch whose domain contains `x`, under the upper-closed
    /// convention: branch 1 owns [0,1/4], branch `i>1` owns
    /// ((i-1)/4, i/4].
    pub fn containing(x: &Rational) -> Result<Branch> {
        check_unit_interval(x)?;
        let scaled = x * Rational::from_integer(4.into());
        let mut q = scaled.ceil().to_integer();
        if q.is_zero() {
            q = One::one();
        }
        let index = u8::try_from(q).expect("ceil(4x) for x in [0,1] fits u8");
        Ok(Branch { index })
    }

    pub fn index(&self) -> u64 {
        u64::from(self.index)
    }

    /// Closed hull of the branch domain: [(i-1)/4, i/4].
    pub fn domain(&self) -> TentInterval {
        TentInterval {
            lower: ratio(i64::from(self.index) - 1, 4),
            upper: ratio(i64::from(self.index), 4),
        }
    }

    pub fn slope_is_negative(&self) -> bool {
        self.index.is_multiple_of(2)
    }

    /// Applies the branch rule. The caller is responsible for `x` lying in
    /// the branch domain; the formula itself is total.
    pub fn eval(&self, x: &Rational) -> Rational {
        let four_x = x * Rational::from_integer(4.into());
        match self.index {
            1 => four_x,
            2 => ratio(2, 1) - four_x,
            3 => four_x - ratio(2, 1),
            _ => ratio(4, 1) - four_x,
        }
    }

    /// Inverse of the branch as a bijection from [0,1] back onto its
    /// domain.
    pub fn inverse(&self, y: &Rational) -> Rational {
        let quarter_y = y / Rational::from_integer(4.into());
        match self.index {
            1 => quarter_y,
            2 => ratio(1, 2) - quarter_y,
            3 => ratio(1, 2) + quarter_y,
            _ => ratio(1, 1) - quarter_y,
        }
    }
}

fn check_unit_interval(x: &Rational) -> Result<()> {
    if x < &Rational::zero() || x > &Rational::one() {
        return Err(Error::CoordinateOutOfRange {
            value: x.to_string(),
            axis: 0,
        });
    }
    Ok(())
}

/// Closed interval with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TentInterval {
    pub lower: Rational,
    pub upper: Rational,
}

impl TentInterval {
    pub fn unit() -> TentInterval {
        TentInterval {
            lower: Rational::zero(),
            upper: Rational::one(),
        }
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lower + &self.upper) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    pub fn contains_interval(&self, other: &TentInterval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }
}

impl fmt::Display for TentInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// Evaluates the tent map at `x` via the branch containing it.
pub fn tent_eval(x: &Rational) -> Result<Rational> {
    let branch = Branch::containing(x)?;
    Ok(branch.eval(x))
}

/// The dimension-1 code whose digit at position `p` (0-based) is the
/// index of the branch containing the `p`-th iterate of `x`.
pub fn itinerary(x: &Rational, k: usize) -> Result<Code> {
    check_unit_interval(x)?;
    let mut digits = Vec::with_capacity(k);
    let mut current = x.clone();
    for _ in 0..k {
        let branch = Branch::containing(&current)?;
        digits.push(branch.index());
        current = branch.eval(&current);
    }
    Code::new(crate::coding::Dimension::new(1)?, digits)
}

/// The closed interval of points whose itinerary starts with `code`:
/// inverse branches applied right to left, starting from the base domain
/// of the last digit. Width is exactly `4^-k`; order 0 gives [0,1].
pub fn code_interval(code: &Code) -> Result<TentInterval> {
    if code.dimension().get() != 1 {
        return Err(Error::DimensionOutOfRange(code.dimension().get()));
    }
    let mut interval = TentInterval::unit();
    for &digit in code.digits().iter().rev() {
        let branch = Branch::new(digit)?;
        let a = branch.inverse(&interval.lower);
        let b = branch.inverse(&interval.upper);
        interval = if a <= b {
            TentInterval { lower: a, upper: b }
        } else {
            TentInterval { lower: b, upper: a }
        };
    }
    Ok(interval)
}

/// Checks that evaluating the tent map then coding equals coding then
/// shifting: `itinerary(tent_eval(x), k) == shift(itinerary(x, k+1))`.
pub fn check_semiconjugacy(x: &Rational, k: usize) -> Result<bool> {
    let ahead = itinerary(&tent_eval(x)?, k)?;
    let shifted = shift(&itinerary(x, k + 1)?)?;
    Ok(ahead == shifted)
}
