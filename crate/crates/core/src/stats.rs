//! Permutation statistics: alternating runs (types A and B/D) and the
//! three inversion counts.
//!
//! Every function works on a raw window slice so the enumeration engine can
//! evaluate them on a reused buffer; [`SignedPermutation`] gets thin method
//! wrappers. Runs are O(n) scans, inversions O(n²) pair counts.

use thiserror::Error;

use crate::perm::{negs_count, SignedPermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error(
        "type-A statistic needs an unsigned permutation, found {value} at position {position}"
    )]
    NegativeEntry { position: usize, value: i32 },
}

#[inline]
fn changes_direction(prev: i32, cur: i32, next: i32) -> bool {
    (prev < cur) != (cur < next)
}

/// Alternating runs of an ordinary permutation (no sentinel).
pub fn altruns_a(values: &[i32]) -> Result<usize, StatError> {
    if let Some(position) = values.iter().position(|&v| v < 0) {
        return Err(StatError::NegativeEntry {
            position: position + 1,
            value: values[position],
        });
    }
    Ok(altruns_a_unchecked(values))
}

pub(crate) fn altruns_a_unchecked(values: &[i32]) -> usize {
    1 + values
        .windows(3)
        .filter(|w| changes_direction(w[0], w[1], w[2]))
        .count()
}

/// Alternating runs of `0, π_1, …, π_n`; the same statistic serves type D.
pub fn altruns_b(values: &[i32]) -> usize {
    match values {
        [] => 0,
        [_] => 1,
        [first, second, ..] => {
            usize::from(changes_direction(0, *first, *second)) + altruns_a_unchecked(values)
        }
    }
}

pub fn inv_a(values: &[i32]) -> usize {
    let mut count = 0;
    for (i, &a) in values.iter().enumerate() {
        count += values[i + 1..].iter().filter(|&&b| a > b).count();
    }
    count
}

/// `|{i < j : -π_i > π_j}|`, the cross term shared by `inv_B` and `inv_D`.
pub fn neg_sum_pairs(values: &[i32]) -> usize {
    let mut count = 0;
    for (i, &a) in values.iter().enumerate() {
        count += values[i + 1..].iter().filter(|&&b| -a > b).count();
    }
    count
}

pub fn inv_b(values: &[i32]) -> usize {
    inv_d(values) + negs_count(values)
}

/// Defined by the pair-counting formula for every signed window, not only
/// those in `D_n`.
pub fn inv_d(values: &[i32]) -> usize {
    let mut count = 0;
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            count += usize::from(a > b) + usize::from(-a > b);
        }
    }
    count
}

impl SignedPermutation {
    pub fn altruns_a(&self) -> Result<usize, StatError> {
        altruns_a(self.values())
    }

    pub fn altruns_b(&self) -> usize {
        altruns_b(self.values())
    }

    pub fn altruns_d(&self) -> usize {
        altruns_b(self.values())
    }

    pub fn inv_a(&self) -> usize {
        inv_a(self.values())
    }

    pub fn inv_b(&self) -> usize {
        inv_b(self.values())
    }

    pub fn inv_d(&self) -> usize {
        inv_d(self.values())
    }
}
