//! Complete deterministic automata over dense integer states.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

pub type State = usize;

/// A complete DFA. States are `0..state_count()`; the transition table is
/// total, so the dead state (if any) is an ordinary state and is counted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    states: usize,
    // delta[q * |Σ| + a]
    delta: Vec<State>,
    initial: State,
    finals: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from one row per state, each row listing the successor
    /// for every symbol in alphabet order.
    pub fn new(
        alphabet: Alphabet,
        rows: Vec<Vec<State>>,
        initial: State,
        finals: impl IntoIterator<Item = State>,
    ) -> Result<Self> {
        let k = alphabet.len();
        let states = rows.len();
        let mut delta = Vec::with_capacity(states * k);
        for (q, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            delta.extend_from_slice(row);
        }
        Self::checked(alphabet, states, delta, initial, finals)
    }

    /// Builds a DFA whose transition function is given by `next`.
    pub fn from_fn(
        alphabet: Alphabet,
        states: usize,
        initial: State,
        finals: impl IntoIterator<Item = State>,
        next: impl Fn(State, Symbol) -> State,
    ) -> Result<Self> {
        let mut delta = Vec::with_capacity(states * alphabet.len());
        for q in 0..states {
            for a in alphabet.symbols() {
                delta.push(next(q, a));
            }
        }
        Self::checked(alphabet, states, delta, initial, finals)
    }

    fn checked(
        alphabet: Alphabet,
        states: usize,
        delta: Vec<State>,
        initial: State,
        finals: impl IntoIterator<Item = State>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidAutomaton(
                "a DFA needs at least one state".into(),
            ));
        }
        if initial >= states {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range 0..{states}"
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= states) {
            return Err(Error::InvalidAutomaton(format!(
                "transition target {bad} out of range 0..{states}"
            )));
        }
        let mut flags = vec![false; states];
        for f in finals {
            if f >= states {
                return Err(Error::InvalidAutomaton(format!(
                    "final state {f} out of range 0..{states}"
                )));
            }
            flags[f] = true;
        }
        Ok(Dfa {
            alphabet,
            states,
            delta,
            initial,
            finals: flags,
        })
    }

    /// Assembles a DFA from parts produced inside the crate.
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        delta: Vec<State>,
        initial: State,
        finals: Vec<bool>,
    ) -> Self {
        let states = finals.len();
        assert!(states > 0 && initial < states);
        assert_eq!(
            delta.len(),
            states * alphabet.len(),
            "transition table must be total"
        );
        debug_assert!(delta.iter().all(|&t| t < states));
        Dfa {
            alphabet,
            states,
            delta,
            initial,
            finals,
        }
    }

    /// The one-state DFA over `alphabet` accepting everything or nothing.
    pub fn single_state(alphabet: Alphabet, accepting: bool) -> Self {
        let k = alphabet.len();
        Dfa::from_parts(alphabet, vec![0; k], 0, vec![accepting])
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn is_final(&self, q: State) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = State> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q))
    }

    pub fn final_count(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    #[inline]
    pub fn next(&self, q: State, a: Symbol) -> State {
        self.delta[q * self.alphabet.len() + a.0]
    }

    /// Successors of `q` in alphabet order.
    pub fn row(&self, q: State) -> &[State] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    pub fn run(&self, from: State, word: &Word) -> Result<State> {
        let mut q = from;
        for &a in word.iter() {
            if !self.alphabet.contains(a) {
                return Err(Error::SymbolOutOfRange(a.0));
            }
            q = self.next(q, a);
        }
        Ok(q)
    }

    pub fn accepts(&self, word: &Word) -> Result<bool> {
        Ok(self.is_final(self.run(self.initial, word)?))
    }

    pub fn accepts_str(&self, text: &str) -> Result<bool> {
        self.accepts(&self.alphabet.word(text)?)
    }

    /// The same automaton viewed as an NFA with a single initial state.
    pub fn to_nfa(&self) -> Nfa {
        let edges = (0..self.states).flat_map(|q| {
            self.alphabet
                .symbols()
                .map(move |a| (q, a, self.next(q, a)))
        });
        Nfa::new(
            self.alphabet.clone(),
            self.states,
            [self.initial],
            self.finals(),
            edges,
            [],
        )
        .expect("a valid DFA is a valid NFA")
    }

    /// Renumbers the reachable part in breadth-first order from the initial
    /// state, visiting symbols in alphabet order. Unreachable states are
    /// dropped. Two DFAs without unreachable states are isomorphic iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut id = vec![usize::MAX; self.states];
        let mut order = vec![self.initial];
        id[self.initial] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for &t in self.row(q) {
                if id[t] == usize::MAX {
                    id[t] = order.len();
                    order.push(t);
                }
            }
        }
        let mut delta = Vec::with_capacity(order.len() * k);
        for &q in &order {
            delta.extend(self.row(q).iter().map(|&t| id[t]));
        }
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, finals)
    }

    pub fn reachable_count(&self) -> usize {
        let mut seen = vec![false; self.states];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        let mut count = 1;
        while let Some(q) = stack.pop() {
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    stack.push(t);
                }
            }
        }
        count
    }

    /// Language equality, by searching the product for a pair that
    /// disagrees on acceptance.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let mut seen: FxHashMap<(State, State), ()> = FxHashMap::default();
        let mut queue = VecDeque::new();
        seen.insert((self.initial, other.initial), ());
        queue.push_back((self.initial, other.initial));
        while let Some((p, q)) = queue.pop_front() {
            if self.is_final(p) != other.is_final(q) {
                return Ok(false);
            }
            for a in self.alphabet.symbols() {
                let pair = (self.next(p, a), other.next(q, a));
                if seen.insert(pair, ()).is_none() {
                    queue.push_back(pair);
                }
            }
        }
        Ok(true)
    }

    /// Shortest word accepted from exactly one of `p` and `q`; ties are
    /// broken by alphabet order. `None` iff the states are equivalent.
    pub fn distinguishing_word(&self, p: State, q: State) -> Option<Word> {
        assert!(p < self.states && q < self.states, "state out of range");
        type Pair = (State, State);
        let mut parent: FxHashMap<Pair, Option<(Pair, Symbol)>> = FxHashMap::default();
        let mut queue = VecDeque::new();
        parent.insert((p, q), None);
        queue.push_back((p, q));
        while let Some(pair) = queue.pop_front() {
            if self.is_final(pair.0) != self.is_final(pair.1) {
                let mut word = Vec::new();
                let mut cur = pair;
                while let Some(&Some((prev, a))) = parent.get(&cur) {
                    word.push(a);
                    cur = prev;
                }
                word.reverse();
                return Some(Word(word));
            }
            for a in self.alphabet.symbols() {
                let succ = (self.next(pair.0, a), self.next(pair.1, a));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(succ) {
                    e.insert(Some((pair, a)));
                    queue.push_back(succ);
                }
            }
        }
        None
    }

    /// States from which some final state is reachable.
    pub(crate) fn live_states(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let mut preds: Vec<Vec<State>> = vec![Vec::new(); self.states];
        for (i, &t) in self.delta.iter().enumerate() {
            preds[t].push(i / k);
        }
        let mut live = self.finals.clone();
        let mut stack: Vec<State> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    /// Every accepted word of length at most `max_len`, shortest first and
    /// lexicographic (alphabet order) within a length.
    pub fn enumerate_accepted(&self, max_len: usize) -> Vec<Word> {
        let live = self.live_states();
        let mut out = Vec::new();
        if !live[self.initial] {
            return out;
        }
        let mut frontier = vec![(Word::empty(), self.initial)];
        for len in 0..=max_len {
            out.extend(
                frontier
                    .iter()
                    .filter(|(_, q)| self.is_final(*q))
                    .map(|(w, _)| w.clone()),
            );
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (w, q) in &frontier {
                for a in self.alphabet.symbols() {
                    let t = self.next(*q, a);
                    if live[t] {
                        let mut w2 = w.clone();
                        w2.push(a);
                        next.push((w2, t));
                    }
                }
            }
            frontier = next;
        }
        out
    }
}
