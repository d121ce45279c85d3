//! Exact edge-retention probabilities and big-rational helpers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact rational number; probabilities and expectations are carried as
/// these, never as floats, wherever exactness is promised.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProbError {
    #[error("probability must be a/b with 0 <= a <= b and b > 0, got {0:?}")]
    Invalid(String),
}

/// An exact probability `num/den` with `0 <= num <= den`, kept reduced.
///
/// Exact percolation modes take probabilities in this form only; floats are
/// rejected at the parsing boundary.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Prob {
    num: u64,
    den: u64,
}

impl Prob {
    pub const ZERO: Prob = Prob { num: 0, den: 1 };
    pub const ONE: Prob = Prob { num: 1, den: 1 };
    pub const HALF: Prob = Prob { num: 1, den: 2 };

    pub fn new(num: u64, den: u64) -> Result<Self, ProbError> {
        if den == 0 || num > den {
            return Err(ProbError::Invalid(format!("{num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(Prob { num: num / g, den: den / g })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_rat(self) -> Rat {
        Rat::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    /// `1 - p`.
    pub fn complement(self) -> Prob {
        Prob { num: self.den - self.num, den: self.den }
    }
}

impl FromStr for Prob {
    type Err = ProbError;

    /// Parses `"a/b"`; a bare integer is read as `a/1`.
    fn from_str(s: &str) -> Result<Self, ProbError> {
        let bad = || ProbError::Invalid(s.to_string());
        match s.split_once('/') {
            Some((a, b)) => {
                let num = a.trim().parse::<u64>().map_err(|_| bad())?;
                let den = b.trim().parse::<u64>().map_err(|_| bad())?;
                Prob::new(num, den).map_err(|_| bad())
            }
            None => {
                let num = s.trim().parse::<u64>().map_err(|_| bad())?;
                Prob::new(num, 1).map_err(|_| bad())
            }
        }
    }
}

impl fmt::Display for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Base-2 logarithm of a nonnegative rational, computed from bit lengths so
/// that values far outside the `f64` range still yield a finite log.
pub fn log2_rat(r: &Rat) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    assert!(!r.is_negative(), "log2 of a negative rational");
    log2_bigint(r.numer()) - log2_bigint(r.denom())
}

fn log2_bigint(x: &BigInt) -> f64 {
    debug_assert!(x.sign() == Sign::Plus);
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().unwrap().log2();
    }
    let shifted = (x >> (bits - 53)).to_f64().unwrap();
    (bits - 53) as f64 + shifted.log2()
}

/// Convenience constructor for small rationals.
pub fn rat(num: u64, den: u64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `v` as an exact rational.
pub fn rat_int(v: u64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Exact rational one.
pub fn rat_one() -> Rat {
    Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prob_parsing_and_reduction() {
        assert_eq!("1/2".parse::<Prob>().unwrap(), Prob::HALF);
        assert_eq!("2/4".parse::<Prob>().unwrap(), Prob::HALF);
        assert_eq!("1".parse::<Prob>().unwrap(), Prob::ONE);
        assert_eq!("0/7".parse::<Prob>().unwrap(), Prob::ZERO);
        assert!("0.5".parse::<Prob>().is_err());
        assert!("3/2".parse::<Prob>().is_err());
        assert!("1/0".parse::<Prob>().is_err());
        assert_eq!(Prob::new(3, 9).unwrap().to_string(), "1/3");
    }

    #[test]
    fn complement_is_exact() {
        let p = Prob::new(3, 8).unwrap();
        assert_eq!(p.complement(), Prob::new(5, 8).unwrap());
        assert_eq!(p.to_rat() + p.complement().to_rat(), rat_one());
    }

    #[test]
    fn log2_of_rationals() {
        assert_eq!(log2_rat(&rat(1, 8)), -3.0);
        assert!((log2_rat(&rat(31, 32)) - (31f64.log2() - 5.0)).abs() < 1e-14);
        assert_eq!(log2_rat(&Rat::zero()), f64::NEG_INFINITY);
        // Far outside f64's exponent range: 2^-3000.
        let tiny = Rat::new(BigInt::one(), BigInt::one() << 3000);
        assert_eq!(log2_rat(&tiny), -3000.0);
    }
}
