//! Worst-case operand families.
//!
//! Each generator builds the machine over states `0..size` with initial
//! state 0 and the letters `a, b, c, ...` in order, so the output is stable
//! byte for byte.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{Alphabet, Symbol};
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};

fn at_least(what: &str, size: usize, min: usize) -> Result<()> {
    if size < min {
        return Err(Error::InvalidParameter(format!(
            "{what} needs size >= {min}, got {size}"
        )));
    }
    Ok(())
}

fn letters(k: usize) -> Alphabet {
    Alphabet::standard(k).expect("small standard alphabet")
}

/// First operand for reversal-catenation, `m >= 2`, over `{a,b,c,d}`:
/// `a` cycles, `b` is the identity except `m-1 -> m-2`, `c` swaps `m-2` and
/// `m-1`, `d` is the identity. Final state `m-1`.
pub fn revcat_witness_m(m: usize) -> Result<Dfa> {
    at_least("revcat-M", m, 2)?;
    Dfa::from_fn(letters(4), m, 0, [m - 1], move |i, x| match x.0 {
        0 => (i + 1) % m,
        1 if i == m - 1 => m - 2,
        2 if i == m - 2 => m - 1,
        2 if i == m - 1 => m - 2,
        _ => i,
    })
}

/// Second operand for reversal-catenation, `n >= 2`, over `{a,b,c,d}`:
/// `a`, `b` are the identity, `c` sends `1..n` to 0, `d` cycles. State 0
/// loops on `a`, `b` and `c`. Final state `n-1`.
pub fn revcat_witness_n(n: usize) -> Result<Dfa> {
    at_least("revcat-N", n, 2)?;
    Dfa::from_fn(letters(4), n, 0, [n - 1], move |i, x| match x.0 {
        2 => 0,
        3 => (i + 1) % n,
        _ => i,
    })
}

/// First operand for reversal-catenation with a one-state second operand.
///
/// For `m = 2` and `m = 3` these are the small machines over `{a,b}` and
/// `{a,b,c}`; from `m = 4` on, the four-letter family where `d` fixes 0 and
/// rotates `1..m`.
pub fn revcat_n1_witness(m: usize) -> Result<Dfa> {
    at_least("revcat-n1", m, 2)?;
    match m {
        2 => Dfa::new(letters(2), vec![vec![1, 0], vec![0, 0]], 0, [1]),
        // δ(1, b) = 1 here; with δ(1, b) = 0 only 4 states of the
        // collapsed reversal automaton are reachable, not 5.
        3 => Dfa::new(
            letters(3),
            vec![vec![1, 0, 0], vec![2, 1, 2], vec![0, 1, 1]],
            0,
            [2],
        ),
        _ => Dfa::from_fn(letters(4), m, 0, [m - 1], move |i, x| match x.0 {
            0 => (i + 1) % m,
            1 if i == m - 1 => m - 2,
            2 if i == m - 2 => m - 1,
            2 if i == m - 1 => m - 2,
            3 if i == 0 => 0,
            3 if i == m - 1 => 1,
            3 => i + 1,
            _ => i,
        }),
    }
}

/// Second operand for `Σ* L(N)`, `n >= 1`, over `{a,b}`: `a` cycles,
/// `b` sends 1 to 0 and fixes everything else. Final state `n-1`.
///
/// At `n = 2` this is the first maximum of the exhaustive search over
/// binary two-state machines; the `n = 3` search maximum is kept as a
/// fixture instead (see `fixtures/`).
pub fn revcat_m1_witness(n: usize) -> Result<Dfa> {
    at_least("revcat-m1", n, 1)?;
    Dfa::from_fn(letters(2), n, 0, [n - 1], move |i, x| match x.0 {
        0 => (i + 1) % n,
        _ if i == 1 => 0,
        _ => i,
    })
}

/// First operand for star-catenation whose only final state is the
/// initial one, `m >= 2`, over `{a,b,c}`: `a` cycles, `b` and `c` are the
/// identity. Final state 0.
pub fn starcat_special_witness_a(m: usize) -> Result<Dfa> {
    at_least("starcat-special-A", m, 2)?;
    Dfa::from_fn(letters(3), m, 0, [0], move |i, x| match x.0 {
        0 => (i + 1) % m,
        _ => i,
    })
}

/// Second operand paired with [`starcat_special_witness_a`], `n >= 2`:
/// `a` is the identity, `b` cycles, `c` fixes 0 and cycles `1..n` through 0.
/// Final state `n-1`.
pub fn starcat_special_witness_b(n: usize) -> Result<Dfa> {
    at_least("starcat-special-B", n, 2)?;
    Dfa::from_fn(letters(3), n, 0, [n - 1], move |i, x| match x.0 {
        0 => i,
        2 if i == 0 => 0,
        _ => (i + 1) % n,
    })
}

/// First operand for general star-catenation, `m >= 2`, over `{a,b,c,d}`:
/// `a` cycles, `b` fixes 0 and cycles `1..m` through 0, `c` and `d` are the
/// identity. Final state `m-1`.
pub fn starcat_witness_a(m: usize) -> Result<Dfa> {
    at_least("starcat-A", m, 2)?;
    Dfa::from_fn(letters(4), m, 0, [m - 1], move |i, x| match x.0 {
        0 => (i + 1) % m,
        1 if i == 0 => 0,
        1 => (i + 1) % m,
        _ => i,
    })
}

/// Second operand for general star-catenation, `n >= 2`: `a` and `b` are
/// the identity, `c` cycles, `d` resets to 0. Final state `n-1`.
pub fn starcat_witness_b(n: usize) -> Result<Dfa> {
    at_least("starcat-B", n, 2)?;
    Dfa::from_fn(letters(4), n, 0, [n - 1], move |i, x: Symbol| match x.0 {
        2 => (i + 1) % n,
        3 => 0,
        _ => i,
    })
}

pub fn sigma_star_dfa(alphabet: &Alphabet) -> Result<Dfa> {
    nonempty(alphabet)?;
    Ok(Dfa::single_state(alphabet.clone(), true))
}

pub fn empty_dfa(alphabet: &Alphabet) -> Result<Dfa> {
    nonempty(alphabet)?;
    Ok(Dfa::single_state(alphabet.clone(), false))
}

fn nonempty(alphabet: &Alphabet) -> Result<()> {
    if alphabet.is_empty() {
        return Err(Error::InvalidAlphabet("alphabet is empty".into()));
    }
    Ok(())
}

/// Named families, as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessFamily {
    RevcatM,
    RevcatN,
    RevcatN1,
    RevcatM1,
    StarcatSpecialA,
    StarcatSpecialB,
    StarcatA,
    StarcatB,
    SigmaStar,
    Empty,
}

impl WitnessFamily {
    pub const ALL: [WitnessFamily; 10] = [
        WitnessFamily::RevcatM,
        WitnessFamily::RevcatN,
        WitnessFamily::RevcatN1,
        WitnessFamily::RevcatM1,
        WitnessFamily::StarcatSpecialA,
        WitnessFamily::StarcatSpecialB,
        WitnessFamily::StarcatA,
        WitnessFamily::StarcatB,
        WitnessFamily::SigmaStar,
        WitnessFamily::Empty,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            WitnessFamily::RevcatM => "revcat-M",
            WitnessFamily::RevcatN => "revcat-N",
            WitnessFamily::RevcatN1 => "revcat-n1",
            WitnessFamily::RevcatM1 => "revcat-m1",
            WitnessFamily::StarcatSpecialA => "starcat-special-A",
            WitnessFamily::StarcatSpecialB => "starcat-special-B",
            WitnessFamily::StarcatA => "starcat-A",
            WitnessFamily::StarcatB => "starcat-B",
            WitnessFamily::SigmaStar => "sigma-star",
            WitnessFamily::Empty => "empty",
        }
    }

    /// Smallest size the family is defined for.
    pub fn min_size(self) -> usize {
        match self {
            WitnessFamily::RevcatM1 | WitnessFamily::SigmaStar | WitnessFamily::Empty => 1,
            _ => 2,
        }
    }

    /// Builds the member of the given size. The one-state families ignore
    /// `size` and use the first `letters` letters instead.
    pub fn build(self, size: usize, letters: usize) -> Result<Dfa> {
        match self {
            WitnessFamily::RevcatM => revcat_witness_m(size),
            WitnessFamily::RevcatN => revcat_witness_n(size),
            WitnessFamily::RevcatN1 => revcat_n1_witness(size),
            WitnessFamily::RevcatM1 => revcat_m1_witness(size),
            WitnessFamily::StarcatSpecialA => starcat_special_witness_a(size),
            WitnessFamily::StarcatSpecialB => starcat_special_witness_b(size),
            WitnessFamily::StarcatA => starcat_witness_a(size),
            WitnessFamily::StarcatB => starcat_witness_b(size),
            WitnessFamily::SigmaStar => sigma_star_dfa(&Alphabet::standard(letters)?),
            WitnessFamily::Empty => empty_dfa(&Alphabet::standard(letters)?),
        }
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WitnessFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WitnessFamily::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown witness family {s:?}")))
    }
}

/// Successor table as rows, handy for comparing against listed machines.
pub fn rows(d: &Dfa) -> Vec<Vec<State>> {
    (0..d.state_count()).map(|q| d.row(q).to_vec()).collect()
}
