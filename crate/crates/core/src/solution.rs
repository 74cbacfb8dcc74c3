use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{pow, pow11, Nat};

/// A candidate quadruple `(x, y, m, n)` for `x² + 11^m = yⁿ`.
///
/// Construction does not check the identity; see [`Solution::holds`] and
/// [`crate::family::certify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Solution {
    #[serde(with = "crate::decimal")]
    pub x: Nat,
    #[serde(with = "crate::decimal")]
    pub y: Nat,
    #[serde(with = "crate::decimal")]
    pub m: u32,
    #[serde(with = "crate::decimal")]
    pub n: u32,
}

impl Solution {
    pub fn new(x: impl Into<Nat>, y: impl Into<Nat>, m: u32, n: u32) -> Self {
        Solution {
            x: x.into(),
            y: y.into(),
            m,
            n,
        }
    }

    /// Exact check of `x² + 11^m = yⁿ`.
    pub fn holds(&self) -> bool {
        &self.x * &self.x + pow11(self.m) == pow(&self.y, self.n)
    }

    /// Ordering key used by every sorted listing: `(m, n, x)`.
    pub fn sort_key(&self) -> (u32, u32, &Nat) {
        (self.m, self.n, &self.x)
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.m, self.n)
    }
}

pub(crate) fn sort_solutions(v: &mut Vec<Solution>) {
    v.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    v.dedup();
}
