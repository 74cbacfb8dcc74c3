use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Limits for every exhaustive scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchBounds {
    /// Largest `y` tried by the brute-force oracle.
    #[serde(with = "crate::decimal")]
    pub y_max: u64,
    /// Largest `x` in the Nagell and Cohn scans.
    #[serde(with = "crate::decimal")]
    pub x_max: u64,
    /// Largest odd `m`.
    #[serde(with = "crate::decimal")]
    pub m_max: u32,
    #[serde(with = "crate::decimal")]
    pub n_max: u32,
    /// Largest `k` in the `3a² + 8 = 11^{2k+1}` scan.
    #[serde(with = "crate::decimal")]
    pub k_max: u32,
    /// Largest `|a|` in the imaginary-part scans.
    #[serde(with = "crate::decimal")]
    pub a_max: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            y_max: 60_000,
            x_max: 10_000,
            m_max: 9,
            n_max: 20,
            k_max: 300,
            a_max: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("n_max must be at least 3, got {0}")]
    NMax(u32),
    #[error("m_max must be odd and at least 3, got {0}")]
    MMax(u32),
    #[error("k_max must be at least 1")]
    KMax,
}

impl SearchBounds {
    pub fn validate(&self) -> Result<(), BoundsError> {
        if self.n_max < 3 {
            return Err(BoundsError::NMax(self.n_max));
        }
        if self.m_max < 3 || self.m_max.is_multiple_of(2) {
            return Err(BoundsError::MMax(self.m_max));
        }
        if self.k_max < 1 {
            return Err(BoundsError::KMax);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_accepts_integers_and_partial_keys() {
        let b: SearchBounds = toml::from_str("y_max = 500\nm_max = 3\n").unwrap();
        assert_eq!(b.y_max, 500);
        assert_eq!(b.m_max, 3);
        assert_eq!(b.a_max, SearchBounds::default().a_max);
        assert!(toml::from_str::<SearchBounds>("ymax = 1").is_err());
    }

    #[test]
    fn validation() {
        assert!(SearchBounds::default().validate().is_ok());
        let b = SearchBounds { m_max: 4, ..Default::default() };
        assert_eq!(b.validate(), Err(BoundsError::MMax(4)));
        let b = SearchBounds { n_max: 2, ..Default::default() };
        assert_eq!(b.validate(), Err(BoundsError::NMax(2)));
    }

    #[test]
    fn json_uses_decimal_strings() {
        let s = serde_json::to_string(&SearchBounds::default()).unwrap();
        assert!(s.contains(r#""y_max":"60000""#));
        assert_eq!(serde_json::from_str::<SearchBounds>(&s).unwrap(), SearchBounds::default());
    }
}
