//! Closed-form bounds from the main theorems and lemmas.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decomposition::Rational;
use crate::error::FamilyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    /// ex_P(n, H4) <= 13n/5 - 26/5.
    Thm1,
    /// ex_P(n, H5) <= floor(5n/2) - 4.
    Thm2,
    /// ex_P(n, C3 ∪ Θ4) = floor(5n/2) - 4.
    Thm3,
    /// ρ(D) <= (6d - 12) / (5d) for an H4-free component of order d.
    Lemma2(usize),
    /// |E_I(G)| <= n/2 + 4.
    Lemma6,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Thm1 => write!(f, "Thm1"),
            Bound::Thm2 => write!(f, "Thm2"),
            Bound::Thm3 => write!(f, "Thm3"),
            Bound::Lemma2(d) => write!(f, "Lemma2({d})"),
            Bound::Lemma6 => write!(f, "Lemma6"),
        }
    }
}

impl FromStr for Bound {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Thm1" => Ok(Bound::Thm1),
            "Thm2" => Ok(Bound::Thm2),
            "Thm3" => Ok(Bound::Thm3),
            "Lemma6" => Ok(Bound::Lemma6),
            _ => s
                .strip_prefix("Lemma2(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.parse().ok())
                .map(Bound::Lemma2)
                .ok_or_else(|| FamilyError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    /// Whether the query lies inside the range where the statement is claimed.
    pub in_range: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Exact value of `which` at order `n`. `Lemma2` reads its own order.
pub fn bound(n: usize, which: Bound) -> BoundValue {
    let n_ = n as i64;
    let floor_5n2 = || Rational::from_integer(5 * n_ / 2 - 4);
    match which {
        Bound::Thm1 => BoundValue {
            value: Rational::new(13 * n_ - 26, 5),
            in_range: n >= 72,
        },
        Bound::Thm2 => BoundValue {
            value: floor_5n2(),
            in_range: n >= 6,
        },
        Bound::Thm3 => BoundValue {
            value: floor_5n2(),
            in_range: n >= 174,
        },
        Bound::Lemma2(d) => {
            let d = d as i64;
            BoundValue {
                value: if d == 0 { Rational::from_integer(0) } else { Rational::new(6 * d - 12, 5 * d) },
                in_range: d >= 7,
            }
        }
        Bound::Lemma6 => BoundValue {
            value: Rational::new(n_, 2) + 4,
            in_range: n >= 174,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(bound(6, Bound::Thm2).value, Rational::from_integer(11));
        assert_eq!(bound(72, Bound::Thm1).value, Rational::from_integer(182));
        assert!(bound(72, Bound::Thm1).in_range);
        assert!(!bound(71, Bound::Thm1).in_range);
        assert_eq!(bound(0, Bound::Lemma2(7)).value, Rational::new(6, 7));
        assert_eq!(bound(174, Bound::Lemma6).value, Rational::from_integer(91));
        assert_eq!(bound(7, Bound::Thm3).value, Rational::from_integer(13));
    }

    #[test]
    fn names_round_trip() {
        for b in [Bound::Thm1, Bound::Thm2, Bound::Thm3, Bound::Lemma2(9), Bound::Lemma6] {
            assert_eq!(b.to_string().parse::<Bound>().unwrap(), b);
        }
    }
}
