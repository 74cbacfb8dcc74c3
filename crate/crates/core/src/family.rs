//! The one-parameter family `x = 9324·11^{3M}`, `y = 443·11^{2M}`,
//! `m = 6M + 3`, `n = 3`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{pow11, val11, Nat};
use crate::solution::Solution;

pub const BASE_X: u32 = 9324;
pub const BASE_Y: u32 = 443;

/// Solutions of `x² + 11 = y³` (the `m = 1` base case).
pub const M1_BASE: [(u32, u32); 2] = [(4, 3), (58, 15)];

pub fn member(index: u32) -> Solution {
    Solution {
        x: Nat::from(BASE_X) * pow11(3 * index),
        y: Nat::from(BASE_Y) * pow11(2 * index),
        m: 6 * index + 3,
        n: 3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    IdentityFails,
    EvenM,
    SmallN,
    ZeroX,
    ZeroY,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::IdentityFails => "x^2 + 11^m != y^n",
            Rejection::EvenM => "m is even",
            Rejection::SmallN => "n < 3",
            Rejection::ZeroX => "x = 0",
            Rejection::ZeroY => "y = 0",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "reason")]
pub enum Certification {
    Certified,
    /// Valid identity with `m = 1`, which lies outside `m > 1`.
    CertifiedBaseCase,
    Rejected(Rejection),
}

impl Certification {
    pub fn is_certified(self) -> bool {
        !matches!(self, Certification::Rejected(_))
    }
}

pub fn certify(s: &Solution) -> Certification {
    use num_traits::Zero;
    let reject = if s.x.is_zero() {
        Some(Rejection::ZeroX)
    } else if s.y.is_zero() {
        Some(Rejection::ZeroY)
    } else if s.m.is_multiple_of(2) {
        Some(Rejection::EvenM)
    } else if s.n < 3 {
        Some(Rejection::SmallN)
    } else if !s.holds() {
        Some(Rejection::IdentityFails)
    } else {
        None
    };
    match reject {
        Some(r) => Certification::Rejected(r),
        None if s.m == 1 => Certification::CertifiedBaseCase,
        None => Certification::Certified,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{solution} is not a certified solution: {reason}")]
pub struct Uncertified {
    pub solution: Solution,
    pub reason: Rejection,
}

/// Inverse of [`member`]: the family index of a certified solution.
pub fn identify(s: &Solution) -> Result<Option<u32>, Uncertified> {
    if let Certification::Rejected(reason) = certify(s) {
        return Err(Uncertified {
            solution: s.clone(),
            reason,
        });
    }
    if s.n != 3 || s.m % 6 != 3 {
        return Ok(None);
    }
    let (ex, ux) = val11(&s.x).expect("certified x is positive");
    let (ey, uy) = val11(&s.y).expect("certified y is positive");
    if ux != Nat::from(BASE_X) || uy != Nat::from(BASE_Y) || ex % 3 != 0 {
        return Ok(None);
    }
    let index = ex / 3;
    Ok((ey == 2 * index && s.m == 6 * index + 3).then_some(index))
}
