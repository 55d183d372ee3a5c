//! Signed permutations stored by their window `π_1, …, π_n`.
//!
//! A signed permutation of `[±n]` satisfies `π(-i) = -π(i)`, so the window
//! determines the whole map. Entries are written with ASCII minus signs,
//! e.g. `5,1,4,-3,-6,2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("window is empty")]
    Empty,
    #[error("entry at position {position} is zero")]
    ZeroEntry { position: usize },
    #[error("magnitude {magnitude} appears more than once")]
    DuplicateMagnitude { magnitude: u32 },
    #[error("magnitude {magnitude} is outside 1..={n}")]
    MagnitudeOutOfRange { magnitude: u64, n: usize },
    #[error("cannot parse {token:?} as a signed integer")]
    Parse { token: String },
}

/// A validated element of the hyperoctahedral group `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    values: Vec<i32>,
}

impl SignedPermutation {
    /// Validates `values` as a window: nonzero entries whose magnitudes
    /// permute `1..=n`.
    pub fn make_checked(values: Vec<i32>) -> Result<Self, PermError> {
        validate(&values)?;
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as i32).collect(),
        }
    }

    /// Caller guarantees the window is valid. Only checked in debug builds.
    pub(crate) fn from_trusted(values: Vec<i32>) -> Self {
        debug_assert!(validate(&values).is_ok(), "invalid window {values:?}");
        Self { values }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i32> {
        self.values
    }

    /// `π_i` with 1-based indexing.
    pub fn get(&self, i: usize) -> i32 {
        self.values[i - 1]
    }

    /// `|Negs(π)|`, the number of negative window entries.
    pub fn negs_count(&self) -> usize {
        negs_count(&self.values)
    }

    pub fn parse_window(text: &str) -> Result<Self, PermError> {
        let values = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>().map_err(|_| PermError::Parse {
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = values.len();
        let values = values
            .into_iter()
            .map(|v| {
                i32::try_from(v).map_err(|_| PermError::MagnitudeOutOfRange {
                    magnitude: v.unsigned_abs(),
                    n,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::make_checked(values)
    }

    pub fn format_window(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn negs_count(values: &[i32]) -> usize {
    values.iter().filter(|&&v| v < 0).count()
}

fn validate(values: &[i32]) -> Result<(), PermError> {
    let n = values.len();
    if n == 0 {
        return Err(PermError::Empty);
    }
    let mut seen = vec![false; n + 1];
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            return Err(PermError::ZeroEntry { position: i + 1 });
        }
        let magnitude = v.unsigned_abs();
        if magnitude as usize > n {
            return Err(PermError::MagnitudeOutOfRange {
                magnitude: magnitude as u64,
                n,
            });
        }
        if std::mem::replace(&mut seen[magnitude as usize], true) {
            return Err(PermError::DuplicateMagnitude { magnitude });
        }
    }
    Ok(())
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_window(s)
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = PermError;

    fn try_from(values: Vec<i32>) -> Result<Self, Self::Error> {
        Self::make_checked(values)
    }
}

// Serialized as the window text so reports stay readable.
impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
