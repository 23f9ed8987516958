//! Exact half-odd-integer quantum numbers.
//!
//! Total angular momentum labels on rings and cylinders take the values
//! lambda = +-1/2, +-3/2, ... and spin projections sigma = +-1/2. Storing
//! twice the value as an integer keeps occupation arithmetic exact; the
//! float value is produced only at evaluation time.

use crate::error::{Error, Result};
use std::fmt;

/// A half-odd integer stored exactly as its doubled value.
///
/// The invariant `twice` odd is enforced at construction, so every value of
/// this type is one of ..., -3/2, -1/2, 1/2, 3/2, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    /// Builds lambda = `twice`/2, rejecting even numerators.
    pub fn new(twice: i64) -> Result<Self> {
        if twice % 2 == 0 {
            return Err(Error::domain(format!(
                "half-odd-integer label required, got {twice}/2"
            )));
        }
        Ok(HalfInteger { twice })
    }

    /// 1/2, the smallest positive label.
    pub const ONE_HALF: HalfInteger = HalfInteger { twice: 1 };

    /// -1/2.
    pub const MINUS_ONE_HALF: HalfInteger = HalfInteger { twice: -1 };

    /// Nearest half-odd integer to `x`; exact ties are resolved toward zero,
    /// so a filling prescribed as a real number never rounds up to an extra
    /// occupied level.
    pub fn nearest(x: f64) -> Self {
        // Candidates floor and ceil of x in the half-odd lattice.
        let lower = ((x - 0.5).floor() as i64) * 2 + 1;
        let upper = lower + 2;
        let dl = x - 0.5 * lower as f64;
        let du = 0.5 * upper as f64 - x;
        let twice = if dl < du {
            lower
        } else if du < dl {
            upper
        } else if lower.abs() <= upper.abs() {
            lower
        } else {
            upper
        };
        HalfInteger { twice }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn value(&self) -> f64 {
        0.5 * self.twice as f64
    }

    pub fn abs(&self) -> Self {
        HalfInteger {
            twice: self.twice.abs(),
        }
    }

    pub fn neg(&self) -> Self {
        HalfInteger { twice: -self.twice }
    }

    pub fn is_positive(&self) -> bool {
        self.twice > 0
    }

    /// lambda + n for integer n (stays half-odd).
    pub fn plus_int(&self, n: i64) -> Self {
        HalfInteger {
            twice: self.twice + 2 * n,
        }
    }

    /// Ascending iterator over 1/2, 3/2, ..., `max` (empty when `max` < 1/2).
    pub fn positive_up_to(max: HalfInteger) -> impl Iterator<Item = HalfInteger> {
        (1..=max.twice.max(-1))
            .step_by(2)
            .map(|twice| HalfInteger { twice })
    }

    /// Largest half-odd integer `l` with `l*l <= bound`, or None when even
    /// 1/2 fails. The comparison is done on doubled integers against
    /// `4*bound`, so boundary ties are decided exactly as written.
    pub fn largest_with_square_below(bound: f64) -> Option<HalfInteger> {
        if !(4.0 * bound >= 1.0) {
            return None;
        }
        let mut t = (4.0 * bound).sqrt().floor() as i64;
        if t % 2 == 0 {
            t -= 1;
        }
        t = t.max(1);
        // Fix up against floating-point slop in the initial guess.
        while ((t + 2) * (t + 2)) as f64 <= 4.0 * bound {
            t += 2;
        }
        while t >= 1 && (t * t) as f64 > 4.0 * bound {
            t -= 2;
        }
        if t >= 1 {
            Some(HalfInteger { twice: t })
        } else {
            None
        }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.twice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_numerators() {
        assert!(HalfInteger::new(2).is_err());
        assert!(HalfInteger::new(0).is_err());
        assert!(HalfInteger::new(3).is_ok());
    }

    #[test]
    fn nearest_rounds_ties_toward_zero() {
        assert_eq!(HalfInteger::nearest(500.0).twice(), 999);
        assert_eq!(HalfInteger::nearest(-500.0).twice(), -999);
        assert_eq!(HalfInteger::nearest(0.7).twice(), 1);
        assert_eq!(HalfInteger::nearest(1.2).twice(), 3);
        assert_eq!(HalfInteger::nearest(1747.5).twice(), 3495);
        assert_eq!(HalfInteger::nearest(0.0).twice(), -1);
    }

    #[test]
    fn positive_range_inclusive() {
        let lf = HalfInteger::new(9).unwrap(); // 9/2
        let xs: Vec<i64> = HalfInteger::positive_up_to(lf).map(|h| h.twice()).collect();
        assert_eq!(xs, vec![1, 3, 5, 7, 9]);
        let none: Vec<_> = HalfInteger::positive_up_to(HalfInteger::MINUS_ONE_HALF).collect();
        assert!(none.is_empty());
    }

    #[test]
    fn largest_square_handles_boundaries() {
        // l^2 <= 21 -> l = 9/2 (20.25 <= 21 < 30.25)
        assert_eq!(
            HalfInteger::largest_with_square_below(21.0)
                .unwrap()
                .twice(),
            9
        );
        // exact tie included: l^2 <= 20.25 -> 9/2
        assert_eq!(
            HalfInteger::largest_with_square_below(20.25)
                .unwrap()
                .twice(),
            9
        );
        // just below 1/4 -> no state
        assert!(HalfInteger::largest_with_square_below(0.2499).is_none());
        assert_eq!(
            HalfInteger::largest_with_square_below(0.25)
                .unwrap()
                .twice(),
            1
        );
    }
}
