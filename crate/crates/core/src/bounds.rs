//! Closed forms for the worst-case state counts.
//!
//! All arithmetic is exact: `3/4 * 2^k` is written `3 * 2^(k-2)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which bound a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundFamily {
    RevCat,
    StarCat,
    /// Star-catenation where the first operand's only final state is its
    /// initial state.
    StarCatSpecial,
}

impl BoundFamily {
    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::RevCat => "revcat",
            BoundFamily::StarCat => "starcat",
            BoundFamily::StarCatSpecial => "starcat-special",
        }
    }
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "revcat" => Ok(BoundFamily::RevCat),
            "starcat" => Ok(BoundFamily::StarCat),
            "starcat-special" => Ok(BoundFamily::StarCatSpecial),
            _ => Err(Error::InvalidParameter(format!("unknown operation {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScQuery {
    pub op: BoundFamily,
    pub m: u32,
    pub n: u32,
    /// Only meaningful for the general star-catenation upper bound.
    pub k1: Option<u32>,
}

impl ScQuery {
    /// Exact worst-case value, or the general star-catenation upper bound
    /// at `k1` when one is given.
    pub fn evaluate(&self) -> Result<u64> {
        match (self.op, self.k1) {
            (BoundFamily::StarCat, Some(k1)) => ub_starcat_general(self.m, self.n, k1),
            (_, Some(_)) => Err(Error::InvalidParameter("k1 only applies to starcat".into())),
            (BoundFamily::RevCat, None) => sc_revcat(self.m, self.n),
            (BoundFamily::StarCat, None) => sc_starcat(self.m, self.n),
            (BoundFamily::StarCatSpecial, None) => sc_starcat_special(self.m, self.n),
        }
    }
}

fn positive(m: u32, n: u32) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "sizes must be positive, got m={m}, n={n}"
        )));
    }
    Ok(())
}

fn pow2(e: u32) -> i128 {
    assert!(e < 120);
    1i128 << e
}

fn finish(value: i128, what: &str) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Overflow(what.to_string()))
}

fn checked_exp(e: u32, what: &str) -> Result<u32> {
    if e >= 120 {
        Err(Error::Overflow(what.to_string()))
    } else {
        Ok(e)
    }
}

/// Worst case of `L1^R L2` for an `m`-state and an `n`-state DFA.
pub fn sc_revcat(m: u32, n: u32) -> Result<u64> {
    positive(m, n)?;
    let what = "sc_revcat";
    let v = match (m, n) {
        (1, _) => pow2(checked_exp(n - 1, what)?),
        (_, 1) => pow2(checked_exp(m - 1, what)?) + 1,
        _ => 3 * pow2(checked_exp(m + n - 2, what)?),
    };
    finish(v, what)
}

/// Upper bound `3/4 * 2^(m+n)` on `L1^R L2`, valid for all sizes.
pub fn ub_revcat(m: u32, n: u32) -> Result<u64> {
    positive(m, n)?;
    let what = "ub_revcat";
    // 3 * 2^(m+n-2), with m + n >= 2
    let e = checked_exp(m + n, what)?;
    finish(3 * pow2(e) / 4, what)
}

/// Upper bound `2^(m-1) + 1` on `L1^R L2` when the second DFA has one state.
pub fn ub_revcat_n1(m: u32) -> Result<u64> {
    positive(m, 1)?;
    let what = "ub_revcat_n1";
    finish(pow2(checked_exp(m - 1, what)?) + 1, what)
}

/// Worst case of `L(A)* L(B)` (= `L(A) L(B)`) when `A`'s only final state
/// is its initial state: `m(2^n - 1) - 2^(n-1) + 1`, or 1 when `n = 1`.
pub fn sc_starcat_special(m: u32, n: u32) -> Result<u64> {
    positive(m, n)?;
    if n == 1 {
        return Ok(1);
    }
    let what = "sc_starcat_special";
    let e = checked_exp(n, what)?;
    finish(m as i128 * (pow2(e) - 1) - pow2(e - 1) + 1, what)
}

/// Upper bound on `L(A)* L(B)` when `A` has `k1 >= 1` final states other
/// than its initial state:
/// `(3/4 * 2^m - 1)(2^n - 1) - (2^(m-1) - 2^(m-k1-1))(2^(n-1) - 1)`.
pub fn ub_starcat_general(m: u32, n: u32, k1: u32) -> Result<u64> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "general star-catenation bound needs m, n >= 2, got m={m}, n={n}"
        )));
    }
    if k1 == 0 || k1 > m - 1 {
        return Err(Error::InvalidParameter(format!(
            "k1 must be in 1..={}, got {k1}",
            m - 1
        )));
    }
    let what = "ub_starcat_general";
    let em = checked_exp(m, what)?;
    let en = checked_exp(n, what)?;
    let first = (3 * pow2(em - 2) - 1) * (pow2(en) - 1);
    let second = (pow2(em - 1) - pow2(em - k1 - 1)) * (pow2(en - 1) - 1);
    finish(first - second, what)
}

/// Worst case of `L(A)* L(B)`: `5 * 2^(m+n-3) - 2^(m-1) - 2^n + 1` for
/// `m, n >= 2`; 1 when `n = 1`; the special-case value when `m = 1`.
pub fn sc_starcat(m: u32, n: u32) -> Result<u64> {
    positive(m, n)?;
    if n == 1 {
        return Ok(1);
    }
    if m == 1 {
        return sc_starcat_special(1, n);
    }
    let what = "sc_starcat";
    let e = checked_exp(m + n, what)?;
    finish(5 * pow2(e - 3) - pow2(m - 1) - pow2(n) + 1, what)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn revcat_values() {
        assert_eq!(sc_revcat(2, 2).unwrap(), 12);
        assert_eq!(sc_revcat(1, 1).unwrap(), 1);
        assert_eq!(sc_revcat(4, 1).unwrap(), 9);
        assert_eq!(sc_revcat(1, 3).unwrap(), 4);
        assert_eq!(sc_revcat(5, 5).unwrap(), 768);
        assert_eq!(ub_revcat(2, 2).unwrap(), 12);
        assert_eq!(ub_revcat(1, 1).unwrap(), 3);
        assert_eq!(ub_revcat(3, 4).unwrap(), 96);
        assert_eq!(ub_revcat_n1(5).unwrap(), 17);
    }

    #[test]
    fn starcat_values() {
        assert_eq!(sc_starcat_special(2, 2).unwrap(), 5);
        assert_eq!(sc_starcat_special(3, 2).unwrap(), 8);
        assert_eq!(sc_starcat_special(1, 3).unwrap(), 4);
        assert_eq!(sc_starcat_special(4, 3).unwrap(), 25);
        assert_eq!(sc_starcat_special(5, 1).unwrap(), 1);
        assert_eq!(ub_starcat_general(2, 2, 1).unwrap(), 5);
        assert_eq!(ub_starcat_general(3, 2, 1).unwrap(), 13);
        assert_eq!(ub_starcat_general(3, 2, 2).unwrap(), 12);
        assert_eq!(sc_starcat(2, 2).unwrap(), 5);
        assert_eq!(sc_starcat(3, 2).unwrap(), 13);
        assert_eq!(sc_starcat(3, 3).unwrap(), 29);
        assert_eq!(sc_starcat(4, 4).unwrap(), 137);
        assert_eq!(sc_starcat(5, 5).unwrap(), 593);
        assert_eq!(sc_starcat(7, 1).unwrap(), 1);
        assert_eq!(sc_starcat(1, 4).unwrap(), 8);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(sc_revcat(0, 2).is_err());
        assert!(ub_revcat(2, 0).is_err());
        assert!(sc_starcat(0, 0).is_err());
        assert!(sc_starcat_special(0, 3).is_err());
        assert!(ub_starcat_general(3, 3, 0).is_err());
        assert!(ub_starcat_general(3, 3, 3).is_err());
        assert!(ub_starcat_general(1, 3, 1).is_err());
    }

    #[test]
    fn large_sizes_do_not_overflow() {
        assert_eq!(sc_revcat(30, 30).unwrap(), 3 << 58);
        assert_eq!(ub_revcat(59, 1).unwrap(), 3 << 58);
        assert!(sc_starcat(30, 30).is_ok());
        assert!(ub_starcat_general(30, 30, 29).is_ok());
        assert!(sc_starcat_special(30, 30).is_ok());
        assert!(matches!(sc_revcat(40, 40), Err(Error::Overflow(_))));
    }

    #[test]
    fn query_dispatch() {
        let q = ScQuery {
            op: BoundFamily::StarCat,
            m: 3,
            n: 2,
            k1: Some(2),
        };
        assert_eq!(q.evaluate().unwrap(), 12);
        let q = ScQuery {
            op: BoundFamily::RevCat,
            m: 3,
            n: 2,
            k1: Some(1),
        };
        assert!(q.evaluate().is_err());
        let q = ScQuery {
            op: BoundFamily::StarCatSpecial,
            m: 4,
            n: 3,
            k1: None,
        };
        assert_eq!(q.evaluate().unwrap(), 25);
    }

    #[test]
    fn revcat_exact_below_upper_bound() {
        for m in 1..=16 {
            for n in 1..=16 {
                let sc = sc_revcat(m, n).unwrap();
                let ub = ub_revcat(m, n).unwrap();
                assert!(sc <= ub);
                assert_eq!(sc == ub, m >= 2 && n >= 2, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn general_bound_at_k1_one_is_exact() {
        for m in 2..=16 {
            for n in 2..=16 {
                assert_eq!(
                    ub_starcat_general(m, n, 1).unwrap(),
                    sc_starcat(m, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn general_bound_decreases_in_k1() {
        for m in 2..=16 {
            for n in 2..=16 {
                for k1 in 2..m {
                    assert!(
                        ub_starcat_general(m, n, k1).unwrap()
                            < ub_starcat_general(m, n, k1 - 1).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn special_never_exceeds_general() {
        for m in 2..=16 {
            for n in 2..=16 {
                assert!(sc_starcat_special(m, n).unwrap() <= sc_starcat(m, n).unwrap());
            }
        }
    }
}
