//! Class selectors naming the refined families of signed permutations.
//!
//! A selector is `group × first sign × length parity`. Length parity means
//! `inv_B` parity for group `B` and `inv_D` parity for `D` and `B-D`.
//! Compact token form: `D:pos:even`, `B-D:neg:any`, `B:any:any`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::perm::{negs_count, SignedPermutation};
use crate::stats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// All of `B_n`.
    B,
    /// Even number of negative entries.
    D,
    /// Odd number of negative entries, `B_n − D_n`.
    BMinusD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FirstSign {
    Positive,
    Negative,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LengthParity {
    Even,
    Odd,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSelector {
    pub group: Group,
    pub first_sign: FirstSign,
    pub length_parity: LengthParity,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid class token {token:?}: expected GROUP:SIGN:PARITY with GROUP in {{B, D, B-D}}, SIGN in {{pos, neg, any}}, PARITY in {{even, odd, any}}")]
pub struct SelectorParseError {
    pub token: String,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::B, Group::D, Group::BMinusD];

    pub fn token(self) -> &'static str {
        match self {
            Group::B => "B",
            Group::D => "D",
            Group::BMinusD => "B-D",
        }
    }

    fn admits(self, negs: usize) -> bool {
        match self {
            Group::B => true,
            Group::D => negs.is_multiple_of(2),
            Group::BMinusD => negs % 2 == 1,
        }
    }
}

impl FirstSign {
    pub const ALL: [FirstSign; 3] = [FirstSign::Positive, FirstSign::Negative, FirstSign::Any];

    pub fn token(self) -> &'static str {
        match self {
            FirstSign::Positive => "pos",
            FirstSign::Negative => "neg",
            FirstSign::Any => "any",
        }
    }

    fn admits(self, first: i32) -> bool {
        match self {
            FirstSign::Positive => first > 0,
            FirstSign::Negative => first < 0,
            FirstSign::Any => true,
        }
    }
}

impl LengthParity {
    pub const ALL: [LengthParity; 3] = [LengthParity::Even, LengthParity::Odd, LengthParity::Any];

    pub fn token(self) -> &'static str {
        match self {
            LengthParity::Even => "even",
            LengthParity::Odd => "odd",
            LengthParity::Any => "any",
        }
    }

    fn admits(self, length: usize) -> bool {
        match self {
            LengthParity::Even => length.is_multiple_of(2),
            LengthParity::Odd => length % 2 == 1,
            LengthParity::Any => true,
        }
    }
}

impl ClassSelector {
    pub const fn new(group: Group, first_sign: FirstSign, length_parity: LengthParity) -> Self {
        Self {
            group,
            first_sign,
            length_parity,
        }
    }

    /// `B_n` itself.
    pub const fn all_of_b() -> Self {
        Self::new(Group::B, FirstSign::Any, LengthParity::Any)
    }

    /// Every one of the 27 combinations.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(27);
        for group in Group::ALL {
            for first_sign in FirstSign::ALL {
                for length_parity in LengthParity::ALL {
                    out.push(Self::new(group, first_sign, length_parity));
                }
            }
        }
        out
    }

    /// `{B, D, B-D} × {>, <} × {+, −}`.
    pub fn refined() -> Vec<Self> {
        Self::all()
            .into_iter()
            .filter(|s| s.first_sign != FirstSign::Any && s.length_parity != LengthParity::Any)
            .collect()
    }

    /// `{B, D, B-D} × {>, <}` with no parity restriction.
    pub fn first_sign_only() -> Vec<Self> {
        Self::all()
            .into_iter()
            .filter(|s| s.first_sign != FirstSign::Any && s.length_parity == LengthParity::Any)
            .collect()
    }

    /// The 12 refined selectors followed by the 6 first-sign-only ones.
    pub fn standard() -> Vec<Self> {
        let mut out = Self::refined();
        out.extend(Self::first_sign_only());
        out
    }

    pub fn token(&self) -> String {
        self.to_string()
    }

    pub fn contains(&self, pi: &SignedPermutation) -> bool {
        self.matches(pi.values())
    }

    pub(crate) fn matches(&self, values: &[i32]) -> bool {
        let negs = negs_count(values);
        if !self.group.admits(negs) || !self.first_sign.admits(values[0]) {
            return false;
        }
        if self.length_parity == LengthParity::Any {
            return true;
        }
        let length = match self.group {
            Group::B => stats::inv_b(values),
            Group::D | Group::BMinusD => stats::inv_d(values),
        };
        self.length_parity.admits(length)
    }
}

/// Free-function form of [`ClassSelector::contains`].
pub fn in_class(pi: &SignedPermutation, selector: &ClassSelector) -> bool {
    selector.contains(pi)
}

impl fmt::Display for ClassSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            self.group.token(),
            self.first_sign.token(),
            self.length_parity.token()
        )
    }
}

impl FromStr for ClassSelector {
    type Err = SelectorParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SelectorParseError {
            token: s.to_string(),
        };
        let mut parts = s.trim().split(':');
        let (Some(g), Some(f), Some(l), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(err());
        };
        let group = Group::ALL
            .into_iter()
            .find(|x| x.token() == g)
            .ok_or_else(err)?;
        let first_sign = FirstSign::ALL
            .into_iter()
            .find(|x| x.token() == f)
            .ok_or_else(err)?;
        let length_parity = LengthParity::ALL
            .into_iter()
            .find(|x| x.token() == l)
            .ok_or_else(err)?;
        Ok(Self::new(group, first_sign, length_parity))
    }
}

impl Serialize for ClassSelector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassSelector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sel(token: &str) -> ClassSelector {
        token.parse().unwrap()
    }

    fn p(values: &[i32]) -> SignedPermutation {
        SignedPermutation::make_checked(values.to_vec()).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(in_class(&p(&[5, 1, 4, -3, -6, 2]), &sel("D:any:any")));
        assert!(!in_class(&p(&[5, 1, 4, -3, -6, 2]), &sel("B-D:any:any")));
        assert!(!in_class(&p(&[-1, 2]), &sel("B:pos:any")));
        assert!(in_class(&p(&[-1, 2]), &sel("B:neg:any")));
        // inv_D = 10 (even) while inv_B = 12 (also even)
        assert!(in_class(&p(&[1, 2, -3, -4]), &sel("D:pos:even")));
        // inv_B = 11 odd
        assert!(in_class(&p(&[1, 2, -4, -3]), &sel("B:pos:odd")));
        // B-D uses inv_D parity: -1 has inv_D = 0 but inv_B = 1
        assert!(in_class(&p(&[-1]), &sel("B-D:neg:even")));
        assert!(in_class(&p(&[-1]), &sel("B:neg:odd")));
    }

    #[test]
    fn tokens_round_trip() {
        for s in ClassSelector::all() {
            assert_eq!(s.token().parse::<ClassSelector>().unwrap(), s);
        }
        assert_eq!(sel("B-D:neg:odd").group, Group::BMinusD);
        for bad in [
            "",
            "B",
            "B:pos",
            "B:pos:even:x",
            "C:pos:even",
            "B:+:even",
            "b:pos:any",
        ] {
            assert!(bad.parse::<ClassSelector>().is_err(), "{bad}");
        }
    }

    #[test]
    fn selector_families() {
        assert_eq!(ClassSelector::all().len(), 27);
        assert_eq!(ClassSelector::refined().len(), 12);
        assert_eq!(ClassSelector::first_sign_only().len(), 6);
        assert_eq!(ClassSelector::standard().len(), 18);
    }
}
