//! Arithmetic in the ring of integers of Q(√−11).
//!
//! Elements are `(ta + tb·√−11) / 2` with `ta ≡ tb (mod 2)`. Both the
//! order `Z[√−11]` (even coordinates) and the half-integral elements
//! (odd coordinates) share this one representation.

use std::fmt;
use std::ops::Mul;

use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, pow_int, Int, Nat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("coordinates ({ta}, {tb}) differ in parity")]
    Parity { ta: Int, tb: Int },
    #[error("exponent {0} is not odd")]
    EvenExponent(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQuadInt", into = "RawQuadInt")]
pub struct QuadInt {
    ta: Int,
    tb: Int,
}

#[derive(Serialize, Deserialize)]
struct RawQuadInt {
    ta: String,
    tb: String,
}

impl TryFrom<RawQuadInt> for QuadInt {
    type Error = String;

    fn try_from(raw: RawQuadInt) -> Result<Self, Self::Error> {
        let ta: Int = raw.ta.parse().map_err(|e| format!("ta: {e}"))?;
        let tb: Int = raw.tb.parse().map_err(|e| format!("tb: {e}"))?;
        QuadInt::make(ta, tb).map_err(|e| e.to_string())
    }
}

impl From<QuadInt> for RawQuadInt {
    fn from(q: QuadInt) -> Self {
        RawQuadInt {
            ta: q.ta.to_string(),
            tb: q.tb.to_string(),
        }
    }
}

impl QuadInt {
    /// Builds `(ta + tb·√−11) / 2`.
    pub fn make(ta: impl Into<Int>, tb: impl Into<Int>) -> Result<Self, RingError> {
        let (ta, tb) = (ta.into(), tb.into());
        if ta.is_odd() != tb.is_odd() {
            return Err(RingError::Parity { ta, tb });
        }
        Ok(QuadInt { ta, tb })
    }

    /// The element `a + b·√−11` of `Z[√−11]`.
    pub fn integral(a: impl Into<Int>, b: impl Into<Int>) -> Self {
        QuadInt {
            ta: a.into() * 2,
            tb: b.into() * 2,
        }
    }

    pub fn one() -> Self {
        QuadInt::integral(1, 0)
    }

    /// Twice the rational coordinate.
    pub fn ta(&self) -> &Int {
        &self.ta
    }

    /// Twice the √−11 coordinate.
    pub fn tb(&self) -> &Int {
        &self.tb
    }

    /// True when the element lies in `Z[√−11]`.
    pub fn is_integral(&self) -> bool {
        self.ta.is_even()
    }

    /// Rational and √−11 coordinates, if the element lies in `Z[√−11]`.
    pub fn integral_parts(&self) -> Option<(Int, Int)> {
        self.is_integral()
            .then(|| (&self.ta / 2, &self.tb / 2))
    }

    pub fn conj(&self) -> Self {
        QuadInt {
            ta: self.ta.clone(),
            tb: -&self.tb,
        }
    }

    /// `(ta² + 11·tb²) / 4`.
    pub fn norm(&self) -> Nat {
        let n: Int = (&self.ta * &self.ta + &self.tb * &self.tb * 11) / 4;
        n.to_biguint().expect("norm is nonnegative")
    }

    /// Square-and-multiply power; `pow(0)` is one.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = QuadInt::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: &QuadInt) -> QuadInt {
        let ta: Int = (&self.ta * &rhs.ta - &self.tb * &rhs.tb * 11) / 2;
        let tb: Int = (&self.ta * &rhs.tb + &self.tb * &rhs.ta) / 2;
        debug_assert_eq!(ta.is_odd(), tb.is_odd());
        QuadInt { ta, tb }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: QuadInt) -> QuadInt {
        &self * &rhs
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im, half) = match self.integral_parts() {
            Some((a, b)) => (a, b, false),
            None => (self.ta.clone(), self.tb.clone(), true),
        };
        let body = if im.is_zero() {
            format!("{re}")
        } else {
            let sign = if im.sign() == Sign::Minus { '-' } else { '+' };
            let mag = im.abs();
            let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
            format!("{re} {sign} {coeff}√-11")
        };
        if half {
            write!(f, "({body})/2")
        } else {
            f.write_str(&body)
        }
    }
}

/// The √−11 coordinate of `(a + b·√−11)^p` for odd `p`:
/// `Σ_{r=0}^{(p−1)/2} C(p, 2r+1) · a^{p−2r−1} · (−11)^r · b^{2r+1}`.
pub fn imag_of_odd_power(a: &Int, b: &Int, p: u32) -> Result<Int, RingError> {
    if p.is_multiple_of(2) {
        return Err(RingError::EvenExponent(p));
    }
    let a2 = a * a;
    let m11b2 = b * b * -11;
    let half = (p - 1) / 2;
    let mut sum = Int::zero();
    let mut tail = Int::one(); // (−11 b²)^r
    for r in 0..=half {
        let c = binomial(u64::from(p), u64::from(2 * r + 1)).expect("2r+1 <= p");
        sum += Int::from(c) * pow_int(&a2, half - r) * &tail;
        tail *= &m11b2;
    }
    Ok(sum * b)
}
