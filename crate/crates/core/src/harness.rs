//! Independent checks: the generic composition pipeline, witness and
//! construction verification, exhaustive and sampled worst-case search,
//! and seeded random cross-checks.
//!
//! The pipeline here never calls the direct constructions in
//! [`crate::ops`] other than the NFA builders (`reverse_nfa`, `star_nfa`,
//! `catenation_nfa`), so agreement between the two is meaningful.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alphabet::Alphabet;
use crate::bounds::{self, BoundFamily};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::ops::{self, Method, OpKind, Operation};
use crate::witness;

/// Pair-space limit for full enumeration.
pub const DEFAULT_PAIR_BUDGET: u128 = 20_000_000;

/// The composed NFA for `op`, before determinization.
fn pipeline_nfa(op: Operation, a: &Dfa, b: &Dfa) -> Result<crate::nfa::Nfa> {
    let first = match op {
        Operation::RevCat => ops::reverse_nfa(a),
        Operation::StarCat => ops::star_nfa(a),
    };
    ops::catenation_nfa(&first, b)
}

/// Minimal DFA for `L(a)^R L(b)` or `L(a)* L(b)` computed by composing
/// NFAs, determinizing and minimizing.
pub fn oracle_dfa(op: Operation, a: &Dfa, b: &Dfa) -> Result<Dfa> {
    Ok(pipeline_nfa(op, a, b)?.determinize_dfa().minimize())
}

/// State count of the minimal complete DFA for the combined operation.
pub fn oracle_sc(op: Operation, a: &Dfa, b: &Dfa) -> Result<usize> {
    Ok(oracle_dfa(op, a, b)?.state_count())
}

/// Computes the combined operation with the chosen method.
pub fn compose(kind: OpKind, a: &Dfa, b: &Dfa, minimize: bool) -> Result<Dfa> {
    let d = match kind.method {
        Method::Direct => ops::combined(kind.op, a, b)?,
        Method::Oracle => pipeline_nfa(kind.op, a, b)?.determinize_dfa(),
    };
    Ok(if minimize { d.minimize() } else { d })
}

/// One verification row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub op: BoundFamily,
    pub m: usize,
    pub n: usize,
    pub k1: Option<u32>,
    /// Value of the applicable formula.
    pub formula: u64,
    /// Reachable states of the direct construction.
    pub constructed: usize,
    /// Minimal state count from the oracle pipeline.
    pub minimal: usize,
    pub pass: bool,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<15} m={:<2} n={:<2}", self.op.name(), self.m, self.n)?;
        match self.k1 {
            Some(k) => write!(f, " k1={k:<2}")?,
            None => write!(f, "      ")?,
        }
        write!(
            f,
            " formula={:<8} constructed={:<8} minimal={:<8} {}",
            self.formula,
            self.constructed,
            self.minimal,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

fn size_u32(x: usize) -> u32 {
    u32::try_from(x).expect("state counts fit in u32")
}

/// The worst-case operand pair used for `family` at sizes `(m, n)`.
///
/// Besides the families of [`crate::witness`], this covers the degenerate
/// sizes: a one-state first operand is `Σ*` (and the second operand comes
/// from [`witness::revcat_m1_witness`]); a one-state second operand is `Σ*`.
pub fn witness_pair(family: BoundFamily, m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("sizes must be positive".into()));
    }
    let sigma_star = |d: &Dfa| witness::sigma_star_dfa(d.alphabet());
    match family {
        BoundFamily::RevCat => match (m, n) {
            (1, _) => {
                let b = witness::revcat_m1_witness(n)?;
                Ok((sigma_star(&b)?, b))
            }
            (_, 1) => {
                let a = witness::revcat_n1_witness(m)?;
                let b = sigma_star(&a)?;
                Ok((a, b))
            }
            _ => Ok((witness::revcat_witness_m(m)?, witness::revcat_witness_n(n)?)),
        },
        BoundFamily::StarCat | BoundFamily::StarCatSpecial if m == 1 && n >= 2 => {
            let b = witness::revcat_m1_witness(n)?;
            Ok((sigma_star(&b)?, b))
        }
        BoundFamily::StarCatSpecial => {
            let a = if m == 1 {
                witness::sigma_star_dfa(&Alphabet::standard(3)?)?
            } else {
                witness::starcat_special_witness_a(m)?
            };
            let b = if n == 1 {
                sigma_star(&a)?
            } else {
                witness::starcat_special_witness_b(n)?
            };
            Ok((a, b))
        }
        BoundFamily::StarCat => {
            let a = if m == 1 {
                witness::sigma_star_dfa(&Alphabet::standard(4)?)?
            } else {
                witness::starcat_witness_a(m)?
            };
            let b = if n == 1 {
                sigma_star(&a)?
            } else {
                witness::starcat_witness_b(n)?
            };
            Ok((a, b))
        }
    }
}

fn exact_value(family: BoundFamily, m: u32, n: u32) -> Result<u64> {
    match family {
        BoundFamily::RevCat => bounds::sc_revcat(m, n),
        BoundFamily::StarCat => bounds::sc_starcat(m, n),
        BoundFamily::StarCatSpecial => bounds::sc_starcat_special(m, n),
    }
}

fn operation_of(family: BoundFamily) -> Operation {
    match family {
        BoundFamily::RevCat => Operation::RevCat,
        BoundFamily::StarCat | BoundFamily::StarCatSpecial => Operation::StarCat,
    }
}

/// Builds the witness pair, runs the direct construction and the oracle,
/// and checks the minimal size against the exact worst-case value.
pub fn verify_witness(family: BoundFamily, m: usize, n: usize) -> Result<BoundReport> {
    let (a, b) = witness_pair(family, m, n)?;
    let formula = exact_value(family, size_u32(m), size_u32(n))?;
    let op = operation_of(family);
    let direct = ops::combined(op, &a, &b)?;
    let oracle = oracle_dfa(op, &a, &b)?;
    let minimal = oracle.state_count();
    let pass = minimal as u64 == formula
        && direct.minimal_size() == minimal
        && direct.equivalent(&oracle)?;
    Ok(BoundReport {
        op: family,
        m,
        n,
        k1: None,
        formula,
        constructed: direct.state_count(),
        minimal,
        pass,
    })
}

/// The size bound that applies to the direct construction on `(a, b)`,
/// with the family and `k1` it was evaluated at.
pub fn applicable_bound(
    op: Operation,
    a: &Dfa,
    b: &Dfa,
) -> Result<(BoundFamily, Option<u32>, u64)> {
    let m = size_u32(a.state_count());
    let n = size_u32(b.state_count());
    Ok(match op {
        Operation::RevCat if n == 1 && m >= 2 => {
            (BoundFamily::RevCat, None, bounds::ub_revcat_n1(m)?)
        }
        Operation::RevCat => (BoundFamily::RevCat, None, bounds::ub_revcat(m, n)?),
        Operation::StarCat if n == 1 => (BoundFamily::StarCat, None, 1),
        Operation::StarCat if a.final_count() == 1 && a.is_final(a.initial()) => (
            BoundFamily::StarCatSpecial,
            None,
            bounds::sc_starcat_special(m, n)?,
        ),
        Operation::StarCat => {
            let k1 = size_u32(ops::extra_final_count(a));
            if k1 == 0 {
                // No final states: both components stay singletons.
                (BoundFamily::StarCat, Some(0), m as u64 * n as u64)
            } else {
                (
                    BoundFamily::StarCat,
                    Some(k1),
                    bounds::ub_starcat_general(m, n, k1)?,
                )
            }
        }
    })
}

/// Checks the direct construction on arbitrary operands: it must accept
/// the same language as the oracle and stay within the applicable bound.
pub fn verify_construction(op: Operation, a: &Dfa, b: &Dfa) -> Result<BoundReport> {
    a.alphabet().ensure_same(b.alphabet())?;
    let (family, k1, formula) = applicable_bound(op, a, b)?;
    let direct = ops::combined(op, a, b)?;
    let oracle = oracle_dfa(op, a, b)?;
    let constructed = direct.state_count();
    let minimal = oracle.state_count();
    let pass =
        direct.equivalent(&oracle)? && constructed as u64 <= formula && minimal <= constructed;
    Ok(BoundReport {
        op: family,
        m: a.state_count(),
        n: b.state_count(),
        k1,
        formula,
        constructed,
        minimal,
        pass,
    })
}

/// A uniformly random complete DFA with initial state 0; each state is
/// final with probability 1/2.
pub fn random_dfa<R: Rng>(rng: &mut R, states: usize, alphabet: &Alphabet) -> Dfa {
    let rows = (0..states)
        .map(|_| {
            (0..alphabet.len())
                .map(|_| rng.gen_range(0..states))
                .collect()
        })
        .collect();
    let finals: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet.clone(), rows, 0, finals).expect("random DFA is well formed")
}

/// `trials` seeded random operand pairs with sizes up to `m_max`, `n_max`
/// and alphabets of up to `sigma_max` letters, each checked with
/// [`verify_construction`]. The same seed yields the same reports.
pub fn random_check(
    trials: usize,
    m_max: usize,
    n_max: usize,
    sigma_max: usize,
    seed: u64,
) -> Result<Vec<BoundReport>> {
    if trials == 0 {
        return Ok(Vec::new());
    }
    if m_max == 0 || n_max == 0 || sigma_max == 0 {
        return Err(Error::InvalidParameter(
            "size and alphabet limits must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Operation, Dfa, Dfa)> = (0..trials)
        .map(|_| {
            let op = if rng.gen_bool(0.5) {
                Operation::RevCat
            } else {
                Operation::StarCat
            };
            let m = rng.gen_range(1..=m_max);
            let n = rng.gen_range(1..=n_max);
            let sigma = Alphabet::standard(rng.gen_range(1..=sigma_max))?;
            let a = random_dfa(&mut rng, m, &sigma);
            let b = random_dfa(&mut rng, n, &sigma);
            Ok((op, a, b))
        })
        .collect::<Result<_>>()?;
    cases
        .par_iter()
        .map(|(op, a, b)| verify_construction(*op, a, b))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every complete DFA pair with initial state 0.
    Full,
    /// `count` uniformly random pairs drawn from `seed`.
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub op: Operation,
    pub m: usize,
    pub n: usize,
    pub alphabet_size: usize,
    pub max_minimal: usize,
    /// First pair (in enumeration or sampling order) reaching the maximum.
    pub argmax: (Dfa, Dfa),
    pub pairs_examined: u128,
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "op={} m={} n={} sigma={} max_minimal={} pairs={}",
            self.op, self.m, self.n, self.alphabet_size, self.max_minimal, self.pairs_examined
        )
    }
}

/// Number of complete DFAs with `states` states over `letters` letters and
/// a fixed initial state.
pub fn dfa_count(states: usize, letters: usize) -> Option<u128> {
    let cells = u32::try_from(states.checked_mul(letters)?).ok()?;
    (states as u128)
        .checked_pow(cells)?
        .checked_mul(1u128.checked_shl(u32::try_from(states).ok()?)?)
}

/// The `index`-th DFA in enumeration order: the low `states` bits choose
/// the final set, the remaining digits (base `states`) fill the transition
/// table row by row.
pub fn dfa_at(index: u128, states: usize, alphabet: &Alphabet) -> Dfa {
    let final_mask = index & ((1u128 << states) - 1);
    let mut code = index >> states;
    let mut delta = Vec::with_capacity(states * alphabet.len());
    for _ in 0..states * alphabet.len() {
        delta.push((code % states as u128) as usize);
        code /= states as u128;
    }
    let finals = (0..states).map(|q| final_mask >> q & 1 == 1).collect();
    Dfa::from_parts(alphabet.clone(), delta, 0, finals)
}

#[derive(Clone, Copy)]
struct Best {
    value: usize,
    index: u128,
}

impl Best {
    fn better(self, other: Best) -> Best {
        if other.value > self.value || (other.value == self.value && other.index < self.index) {
            other
        } else {
            self
        }
    }
}

/// Maximum oracle state complexity over all (or sampled) operand pairs of
/// the given sizes, with the default pair budget.
pub fn exhaustive_search(
    op: Operation,
    m: usize,
    n: usize,
    alphabet_size: usize,
    mode: SearchMode,
) -> Result<SearchResult> {
    exhaustive_search_with_budget(op, m, n, alphabet_size, mode, DEFAULT_PAIR_BUDGET)
}

pub fn exhaustive_search_with_budget(
    op: Operation,
    m: usize,
    n: usize,
    alphabet_size: usize,
    mode: SearchMode,
    budget: u128,
) -> Result<SearchResult> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("sizes must be positive".into()));
    }
    let sigma = Alphabet::standard(alphabet_size)?;
    let (best, argmax, pairs) = match mode {
        SearchMode::Full => {
            let count_a = dfa_count(m, alphabet_size);
            let count_b = dfa_count(n, alphabet_size);
            let pairs = count_a
                .zip(count_b)
                .and_then(|(x, y)| x.checked_mul(y))
                .unwrap_or(u128::MAX);
            if pairs > budget {
                return Err(Error::BudgetExceeded { pairs, budget });
            }
            let count_b = count_b.expect("within budget");
            let best = (0..pairs as u64)
                .into_par_iter()
                .map(|i| {
                    let i = i as u128;
                    let a = dfa_at(i / count_b, m, &sigma);
                    let b = dfa_at(i % count_b, n, &sigma);
                    let value = oracle_sc(op, &a, &b).expect("same alphabet");
                    Best { value, index: i }
                })
                .reduce(
                    || Best {
                        value: 0,
                        index: u128::MAX,
                    },
                    Best::better,
                );
            let argmax = (
                dfa_at(best.index / count_b, m, &sigma),
                dfa_at(best.index % count_b, n, &sigma),
            );
            (best, argmax, pairs)
        }
        SearchMode::Sampled { count, seed } => {
            if count == 0 {
                return Err(Error::InvalidParameter(
                    "sample count must be positive".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples: Vec<(Dfa, Dfa)> = (0..count)
                .map(|_| {
                    let a = random_dfa(&mut rng, m, &sigma);
                    let b = random_dfa(&mut rng, n, &sigma);
                    (a, b)
                })
                .collect();
            let best = samples
                .par_iter()
                .enumerate()
                .map(|(i, (a, b))| Best {
                    value: oracle_sc(op, a, b).expect("same alphabet"),
                    index: i as u128,
                })
                .reduce(
                    || Best {
                        value: 0,
                        index: u128::MAX,
                    },
                    Best::better,
                );
            let argmax = samples[best.index as usize].clone();
            (best, argmax, count as u128)
        }
    };
    Ok(SearchResult {
        op,
        m,
        n,
        alphabet_size,
        max_minimal: best.value,
        argmax,
        pairs_examined: pairs,
    })
}
