//! Elimination traces: machine-readable records naming the rule that closes
//! a branch of the case analysis, the inputs it was run on and the witness
//! it produced.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// x odd, y even is impossible modulo 8.
    Mod8Parity,
    /// `(y² − x)(y² + x) = 11^{2k+1}` has no solution modulo 11.
    N4Factorization,
    /// The integral form `(a + b√−11)^p`, reduced to `b = ±11^k`.
    Eq5NoSolution,
    /// Half-integral form with `b = ±1`.
    #[serde(rename = "B_pm1")]
    BPm1,
    /// Half-integral form with `b = ±11^λ`.
    #[serde(rename = "B_pm11Lambda")]
    BPm11Lambda,
    /// `3a² + 8 = 11^{2k+1}` and its sign variant.
    Bugeaud3a2plus8,
    /// `11x² + 1 = yⁿ` for odd `n`.
    NagellLemma,
    /// 11-adic descent when `11 | x`.
    ValuationDescent,
    /// `x² + 11 = yⁿ`.
    CohnBase,
    /// Half-integral form for `p > 3`: the p-th power never lands in `Z[√−11]`.
    HalfIntegralPower,
    /// A solution for the reduced exponent must lift to a perfect power.
    ExponentReduction,
}

impl Rule {
    pub const ALL: [Rule; 11] = [
        Rule::Mod8Parity,
        Rule::N4Factorization,
        Rule::Eq5NoSolution,
        Rule::BPm1,
        Rule::BPm11Lambda,
        Rule::Bugeaud3a2plus8,
        Rule::NagellLemma,
        Rule::ValuationDescent,
        Rule::CohnBase,
        Rule::HalfIntegralPower,
        Rule::ExponentReduction,
    ];
}

impl Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::Mod8Parity => "Mod8Parity",
            Rule::N4Factorization => "N4Factorization",
            Rule::Eq5NoSolution => "Eq5NoSolution",
            Rule::BPm1 => "B_pm1",
            Rule::BPm11Lambda => "B_pm11Lambda",
            Rule::Bugeaud3a2plus8 => "Bugeaud3a2plus8",
            Rule::NagellLemma => "NagellLemma",
            Rule::ValuationDescent => "ValuationDescent",
            Rule::CohnBase => "CohnBase",
            Rule::HalfIntegralPower => "HalfIntegralPower",
            Rule::ExponentReduction => "ExponentReduction",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Closed by a complete mechanical argument.
    Excluded,
    /// Closed only up to the recorded search bound; the unconditional
    /// statement is a cited result.
    ExcludedBounded,
    /// The branch reduces to another instance, recorded in the witness.
    Reduced,
    /// The branch carries solutions, listed in the witness.
    Survives,
}

impl Outcome {
    pub fn is_closed(self) -> bool {
        matches!(self, Outcome::Excluded | Outcome::ExcludedBounded)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationTrace {
    pub rule: Rule,
    pub outcome: Outcome,
    pub inputs: BTreeMap<String, String>,
    pub witness: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Where in the case analysis the trace was produced. Not part of the
    /// replayed finding.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub context: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceInputError {
    #[error("{rule} trace is missing input `{key}`")]
    Missing { rule: Rule, key: String },
    #[error("{rule} trace input `{key}` = {value:?} is malformed")]
    Malformed {
        rule: Rule,
        key: String,
        value: String,
    },
}

impl EliminationTrace {
    pub fn new(rule: Rule, outcome: Outcome) -> Self {
        EliminationTrace {
            rule,
            outcome,
            inputs: BTreeMap::new(),
            witness: BTreeMap::new(),
            note: None,
            context: String::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Display) -> Self {
        self.inputs.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn witness(mut self, key: &str, value: impl Display) -> Self {
        self.witness.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn in_context(mut self, context: impl Into<String>) -> Self {
        self.context = context.into();
        self
    }

    /// Typed access to a recorded input.
    pub fn get<T: FromStr>(&self, key: &str) -> Result<T, TraceInputError> {
        let raw = self.inputs.get(key).ok_or_else(|| TraceInputError::Missing {
            rule: self.rule,
            key: key.to_owned(),
        })?;
        raw.parse().map_err(|_| TraceInputError::Malformed {
            rule: self.rule,
            key: key.to_owned(),
            value: raw.clone(),
        })
    }

    /// Equality of everything a replay reproduces (context excluded).
    pub fn same_finding(&self, other: &EliminationTrace) -> bool {
        self.rule == other.rule
            && self.outcome == other.outcome
            && self.inputs == other.inputs
            && self.witness == other.witness
            && self.note == other.note
    }
}

impl Display for EliminationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.rule, self.outcome)?;
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, " [{}]", inputs.join(", "))?;
        if !self.context.is_empty() {
            write!(f, " in {}", self.context)?;
        }
        Ok(())
    }
}

/// Joins displayable items with commas, as used in witness values.
pub(crate) fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_names_roundtrip_through_json() {
        for rule in Rule::ALL {
            let json = serde_json::to_string(&rule).unwrap();
            assert_eq!(json, format!("\"{rule}\""));
            assert_eq!(serde_json::from_str::<Rule>(&json).unwrap(), rule);
        }
    }

    #[test]
    fn typed_inputs() {
        let t = EliminationTrace::new(Rule::N4Factorization, Outcome::Excluded)
            .input("k", 3)
            .input("bad", "x");
        assert_eq!(t.get::<u32>("k"), Ok(3));
        assert!(matches!(t.get::<u32>("bad"), Err(TraceInputError::Malformed { .. })));
        assert!(matches!(t.get::<u32>("m"), Err(TraceInputError::Missing { .. })));
    }
}
