//! Exact resolution of `x² + 11^m = yⁿ` for odd `m > 1` and `n ≥ 3`.

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod cases;
pub mod decimal;
pub mod family;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod sieve;
pub mod solution;
pub mod trace;

pub use arith::{Int, Nat};
pub use bounds::SearchBounds;
pub use ring::QuadInt;
pub use solution::Solution;
pub use trace::{EliminationTrace, Outcome, Rule};
