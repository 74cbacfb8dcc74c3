//! JSON-lines records emitted by the command-line front end.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bounds::SearchBounds;
use crate::cases::Aux3a2Report;
use crate::family::Certification;
use crate::oracle::PowerHit;
use crate::solution::Solution;
use crate::trace::{EliminationTrace, Rule};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: ReportResult,
    #[serde(with = "crate::decimal")]
    pub elapsed_ms: u64,
    pub bounds: SearchBounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportResult {
    Resolution {
        solutions: Vec<Solution>,
        traces: Vec<EliminationTrace>,
    },
    Solutions(Vec<Solution>),
    Traces(Vec<EliminationTrace>),
    Hits(Vec<PowerHit>),
    Roots(#[serde(with = "crate::decimal::vec")] Vec<Int>),
    Auxiliary(Aux3a2Report),
    Certification(Certification),
    Identification {
        #[serde(with = "crate::decimal::option")]
        family_index: Option<u32>,
    },
    Replay {
        #[serde(with = "crate::decimal")]
        checked: usize,
        failures: Vec<ReplayFailure>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayFailure {
    #[serde(with = "crate::decimal")]
    pub line: usize,
    pub rule: Rule,
    pub error: String,
}

impl ReportResult {
    /// Traces carried by this result, if any.
    pub fn traces(&self) -> &[EliminationTrace] {
        match self {
            ReportResult::Resolution { traces, .. } | ReportResult::Traces(traces) => traces,
            _ => &[],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::solve;

    #[test]
    fn record_roundtrips_losslessly() {
        let bounds = SearchBounds { a_max: 100, x_max: 500, ..Default::default() };
        let r = solve(7, 3, &bounds).unwrap();
        let rec = ReportRecord {
            command: "solve".into(),
            inputs: [("m".to_owned(), "7".to_owned()), ("n".to_owned(), "3".to_owned())].into(),
            result: ReportResult::Resolution {
                solutions: r.solutions,
                traces: r.traces,
            },
            elapsed_ms: 12,
            bounds,
        };
        let line = serde_json::to_string(&rec).unwrap();
        assert!(!line.contains('\n'));
        assert_eq!(serde_json::from_str::<ReportRecord>(&line).unwrap(), rec);

        let roots = ReportResult::Roots(vec![Int::from(-21), Int::from(21)]);
        let text = serde_json::to_string(&roots).unwrap();
        assert_eq!(text, r#"{"roots":["-21","21"]}"#);
        assert_eq!(serde_json::from_str::<ReportResult>(&text).unwrap(), roots);
    }
}
