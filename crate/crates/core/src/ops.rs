//! Reversal, star and catenation as NFAs, and the direct DFA constructions
//! for the combined operations `L(A)^R L(B)` and `L(A)* L(B)`.
//!
//! The direct constructions only materialize states reachable from the
//! start state, so their sizes are at most the corresponding worst-case
//! bounds in [`crate::bounds`].

use std::collections::VecDeque;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::alphabet::{Alphabet, Symbol};
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    /// `L(A)^R L(B)`
    RevCat,
    /// `L(A)* L(B)`
    StarCat,
}

impl Operation {
    pub fn name(self) -> &'static str {
        match self {
            Operation::RevCat => "revcat",
            Operation::StarCat => "starcat",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "revcat" => Ok(Operation::RevCat),
            "starcat" => Ok(Operation::StarCat),
            _ => Err(Error::InvalidParameter(format!("unknown operation {s:?}"))),
        }
    }
}

/// How a combined operation is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// One of the product constructions in this module.
    Direct,
    /// Generic NFA composition followed by the subset construction.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OpKind {
    pub op: Operation,
    pub method: Method,
}

/// A state of a product construction: a state or subset of the first
/// operand paired with a subset of the second. Both are sorted id lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairState {
    pub left: Vec<State>,
    pub right: Vec<State>,
}

/// Output of a direct construction: the DFA, and for each of its states the
/// pair it stands for.
#[derive(Debug, Clone)]
pub struct Construction {
    pub dfa: Dfa,
    pub states: Vec<PairState>,
}

/// Fixed-width bitset over the states of one operand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Bits(Box<[u64]>);

impl Bits {
    fn empty(universe: usize) -> Self {
        Bits(vec![0; universe.div_ceil(64).max(1)].into_boxed_slice())
    }

    fn singleton(universe: usize, q: State) -> Self {
        let mut b = Bits::empty(universe);
        b.insert(q);
        b
    }

    fn insert(&mut self, q: State) {
        self.0[q / 64] |= 1 << (q % 64);
    }

    fn contains(&self, q: State) -> bool {
        self.0[q / 64] & (1 << (q % 64)) != 0
    }

    fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut x = word;
            std::iter::from_fn(move || {
                if x == 0 {
                    return None;
                }
                let b = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(w * 64 + b)
            })
        })
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Image of the set under one letter of a DFA.
    fn image(&self, d: &Dfa, a: Symbol) -> Bits {
        let mut out = Bits::empty(d.state_count());
        for q in self.iter() {
            out.insert(d.next(q, a));
        }
        out
    }

    fn intersects_finals(&self, d: &Dfa) -> bool {
        self.iter().any(|q| d.is_final(q))
    }

    fn to_vec(&self) -> Vec<State> {
        self.iter().collect()
    }
}

/// Breadth-first exploration of a deterministic system given by `step`,
/// symbols in alphabet order. Returns the DFA and the key of each state.
fn explore<K, S, F>(alphabet: &Alphabet, start: K, step: S, is_final: F) -> (Dfa, Vec<K>)
where
    K: Clone + Eq + Hash,
    S: Fn(&K, Symbol) -> K,
    F: Fn(&K) -> bool,
{
    let mut index: FxHashMap<K, State> = FxHashMap::default();
    let mut keys = vec![start.clone()];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0]);
    let mut delta = Vec::new();
    while let Some(id) = queue.pop_front() {
        for a in alphabet.symbols() {
            let next = step(&keys[id], a);
            let target = match index.get(&next) {
                Some(&t) => t,
                None => {
                    let t = keys.len();
                    index.insert(next.clone(), t);
                    keys.push(next);
                    queue.push_back(t);
                    t
                }
            };
            delta.push(target);
        }
    }
    let finals = keys.iter().map(&is_final).collect();
    (Dfa::from_parts(alphabet.clone(), delta, 0, finals), keys)
}

/// Reverses every transition; the finals become the initial states and the
/// initial state the only final state. Accepts `L(m)^R`.
pub fn reverse_nfa(m: &Dfa) -> Nfa {
    let edges = (0..m.state_count())
        .flat_map(|p| m.alphabet().symbols().map(move |a| (m.next(p, a), a, p)));
    Nfa::new(
        m.alphabet().clone(),
        m.state_count(),
        m.finals(),
        [m.initial()],
        edges,
        [],
    )
    .expect("reversal of a valid DFA is valid")
}

/// `L(a) L(b)`: disjoint union with ε-links from every final state of `a`
/// to the initial state of `b`. Only `b`'s final states are final.
pub fn catenation_nfa(a: &Nfa, b: &Dfa) -> Result<Nfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let off = a.state_count();
    let b_edges = (0..b.state_count()).flat_map(|q| {
        b.alphabet()
            .symbols()
            .map(move |x| (off + q, x, off + b.next(q, x)))
    });
    let links = a.finals().map(|f| (f, off + b.initial()));
    Nfa::new(
        a.alphabet().clone(),
        off + b.state_count(),
        a.initials().to_vec(),
        b.finals().map(|q| off + q),
        a.edges().chain(b_edges),
        a.epsilon_edges().iter().copied().chain(links),
    )
}

/// `L(a)*`: a fresh state `s'` (index `a.state_count()`) that is initial and
/// final and copies the outgoing moves of `a`'s initial state; every move
/// into a final state also moves to `a`'s initial state.
pub fn star_nfa(a: &Dfa) -> Nfa {
    let m = a.state_count();
    let fresh = m;
    let s1 = a.initial();
    let mut edges = Vec::new();
    for p in 0..m {
        for x in a.alphabet().symbols() {
            let q = a.next(p, x);
            edges.push((p, x, q));
            if a.is_final(q) {
                edges.push((p, x, s1));
            }
            if p == s1 {
                edges.push((fresh, x, q));
                if a.is_final(q) {
                    edges.push((fresh, x, s1));
                }
            }
        }
    }
    Nfa::new(
        a.alphabet().clone(),
        m + 1,
        [fresh],
        a.finals().chain([fresh]),
        edges,
        [],
    )
    .expect("star of a valid DFA is valid")
}

/// Direct DFA for `L(m)^R L(n)`. The first component ranges over the
/// subset automaton of the reversal of `m`; whenever it enters a subset
/// containing `m`'s initial state, `n`'s initial state joins the second.
pub fn revcat_direct(m: &Dfa, n: &Dfa) -> Result<Construction> {
    m.alphabet().ensure_same(n.alphabet())?;
    let (rev, subsets) = reverse_nfa(m).determinize();
    let s_n = n.initial();
    let size_n = n.state_count();
    let mut start_right = Bits::empty(size_n);
    if rev.is_final(rev.initial()) {
        start_right.insert(s_n);
    }
    let (dfa, keys) = explore(
        m.alphabet(),
        (rev.initial(), start_right),
        |(i, j), a| {
            let i2 = rev.next(*i, a);
            let mut j2 = j.image(n, a);
            if rev.is_final(i2) {
                j2.insert(s_n);
            }
            (i2, j2)
        },
        |(_, j)| j.intersects_finals(n),
    );
    let states = keys
        .iter()
        .map(|(i, j)| PairState {
            left: subsets.subset(*i).to_vec(),
            right: j.to_vec(),
        })
        .collect();
    Ok(Construction { dfa, states })
}

/// Direct DFA for `L(m)^R L(n)` when `n` has a single state, passed as
/// whether that state accepts. For `Σ*`, the final subsets of the reversal
/// automaton are collapsed into one accepting sink.
pub fn revcat_n1_direct(m: &Dfa, n_accepting: bool) -> Dfa {
    if !n_accepting {
        return Dfa::single_state(m.alphabet().clone(), false);
    }
    let rev = reverse_nfa(m).determinize_dfa();
    let lift = |i: State| (!rev.is_final(i)).then_some(i);
    let (dfa, _) = explore(
        m.alphabet(),
        lift(rev.initial()),
        |state, a| state.and_then(|i| lift(rev.next(i, a))),
        Option::is_none,
    );
    dfa
}

fn ensure_two_states(b: &Dfa) -> Result<()> {
    if b.state_count() < 2 {
        return Err(Error::Shape(
            "second operand must have at least 2 states".into(),
        ));
    }
    Ok(())
}

fn initial_is_only_final(a: &Dfa) -> bool {
    a.final_count() == 1 && a.is_final(a.initial())
}

/// Direct DFA for `L(a) L(b)` (= `L(a)* L(b)`) when the only final state of
/// `a` is its initial state. States are `<q, T>` with `T` nonempty; moving
/// `a`'s component to its initial state adds `b`'s initial state to `T`.
pub fn starcat_special_direct(a: &Dfa, b: &Dfa) -> Result<Construction> {
    a.alphabet().ensure_same(b.alphabet())?;
    if !initial_is_only_final(a) {
        return Err(Error::Shape(
            "first operand must have its initial state as its only final state".into(),
        ));
    }
    ensure_two_states(b)?;
    let s1 = a.initial();
    let s2 = b.initial();
    let (dfa, keys) = explore(
        a.alphabet(),
        (s1, Bits::singleton(b.state_count(), s2)),
        |(q, t), x| {
            let q2 = a.next(*q, x);
            let mut t2 = t.image(b, x);
            if q2 == s1 {
                t2.insert(s2);
            }
            (q2, t2)
        },
        |(_, t)| t.intersects_finals(b),
    );
    let states = keys
        .iter()
        .map(|(q, t)| PairState {
            left: vec![*q],
            right: t.to_vec(),
        })
        .collect();
    Ok(Construction { dfa, states })
}

/// Direct DFA for `L(a)* L(b)` when `a` has a final state other than its
/// initial state. States are `<p, t>` of subsets; when the image of `p`
/// meets `a`'s finals, `a`'s initial state re-enters `p` (the star) and
/// `b`'s initial state enters `t` (the catenation).
pub fn starcat_general_direct(a: &Dfa, b: &Dfa) -> Result<Construction> {
    a.alphabet().ensure_same(b.alphabet())?;
    if initial_is_only_final(a) {
        return Err(Error::Shape(
            "first operand has its initial state as only final state; use the special construction"
                .into(),
        ));
    }
    ensure_two_states(b)?;
    let s1 = a.initial();
    let s2 = b.initial();
    let (dfa, keys) = explore(
        a.alphabet(),
        (
            Bits::singleton(a.state_count(), s1),
            Bits::singleton(b.state_count(), s2),
        ),
        |(p, t), x| {
            let mut p2 = p.image(a, x);
            let mut t2 = t.image(b, x);
            if p2.intersects_finals(a) {
                p2.insert(s1);
                t2.insert(s2);
            }
            (p2, t2)
        },
        |(_, t)| t.intersects_finals(b),
    );
    debug_assert!(keys.iter().all(|(p, t)| !p.is_empty() && !t.is_empty()));
    debug_assert!(keys
        .iter()
        .all(|(p, _)| p.contains(s1) || !p.intersects_finals(a)));
    let states = keys
        .iter()
        .map(|(p, t)| PairState {
            left: p.to_vec(),
            right: t.to_vec(),
        })
        .collect();
    Ok(Construction { dfa, states })
}

/// Picks the direct construction for `op` from the operand shapes:
///
/// * star-catenation with a one-state `b` is `Σ*` or `∅`;
/// * star-catenation where `a`'s only final state is its initial state uses
///   [`starcat_special_direct`], otherwise [`starcat_general_direct`];
/// * reversal-catenation with a one-state `b` and `m ≥ 2` uses
///   [`revcat_n1_direct`], otherwise [`revcat_direct`].
pub fn combined(op: Operation, a: &Dfa, b: &Dfa) -> Result<Dfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let b_trivial = b.state_count() == 1;
    Ok(match op {
        Operation::StarCat if b_trivial => {
            Dfa::single_state(a.alphabet().clone(), b.is_final(b.initial()))
        }
        Operation::StarCat if initial_is_only_final(a) => starcat_special_direct(a, b)?.dfa,
        Operation::StarCat => starcat_general_direct(a, b)?.dfa,
        Operation::RevCat if b_trivial && a.state_count() >= 2 => {
            revcat_n1_direct(a, b.is_final(b.initial()))
        }
        Operation::RevCat => revcat_direct(a, b)?.dfa,
    })
}

/// Number of final states of `a` other than its initial state.
pub fn extra_final_count(a: &Dfa) -> usize {
    a.finals().filter(|&f| f != a.initial()).count()
}
