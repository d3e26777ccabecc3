//! Nondeterministic automata with several initial states and ε-edges, and
//! the subset construction.

use rustc_hash::FxHashMap;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    states: usize,
    // delta[q * |Σ| + a], sorted and deduplicated
    delta: Vec<Vec<State>>,
    initials: Vec<State>,
    epsilon: Vec<(State, State)>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        initials: impl IntoIterator<Item = State>,
        finals: impl IntoIterator<Item = State>,
        edges: impl IntoIterator<Item = (State, Symbol, State)>,
        epsilon: impl IntoIterator<Item = (State, State)>,
    ) -> Result<Self> {
        let k = alphabet.len();
        let check = |q: State, what: &str| {
            if q < states {
                Ok(q)
            } else {
                Err(Error::InvalidAutomaton(format!(
                    "{what} {q} out of range 0..{states}"
                )))
            }
        };
        let mut initials = initials
            .into_iter()
            .map(|q| check(q, "initial state"))
            .collect::<Result<Vec<_>>>()?;
        initials.sort_unstable();
        initials.dedup();
        let mut flags = vec![false; states];
        for f in finals {
            flags[check(f, "final state")?] = true;
        }
        let mut delta = vec![Vec::new(); states * k];
        for (p, a, q) in edges {
            check(p, "edge source")?;
            check(q, "edge target")?;
            if !alphabet.contains(a) {
                return Err(Error::SymbolOutOfRange(a.0));
            }
            delta[p * k + a.0].push(q);
        }
        for targets in &mut delta {
            targets.sort_unstable();
            targets.dedup();
        }
        let mut eps = Vec::new();
        for (p, q) in epsilon {
            eps.push((check(p, "epsilon source")?, check(q, "epsilon target")?));
        }
        eps.sort_unstable();
        eps.dedup();
        Ok(Nfa {
            alphabet,
            states,
            delta,
            initials,
            epsilon: eps,
            finals: flags,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn initials(&self) -> &[State] {
        &self.initials
    }

    pub fn epsilon_edges(&self) -> &[(State, State)] {
        &self.epsilon
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

    pub fn targets(&self, q: State, a: Symbol) -> &[State] {
        &self.delta[q * self.alphabet.len() + a.0]
    }

    /// All labelled edges `(from, symbol, to)` in state-then-symbol order.
    pub fn edges(&self) -> impl Iterator<Item = (State, Symbol, State)> + '_ {
        (0..self.states).flat_map(move |q| {
            self.alphabet
                .symbols()
                .flat_map(move |a| self.targets(q, a).iter().map(move |&t| (q, a, t)))
        })
    }

    fn epsilon_successors(&self) -> Vec<Vec<State>> {
        let mut succ = vec![Vec::new(); self.states];
        for &(p, q) in &self.epsilon {
            succ[p].push(q);
        }
        succ
    }

    /// ε-closure of a set of states, as a sorted list.
    pub fn epsilon_closure(&self, set: &[State]) -> Vec<State> {
        let succ = self.epsilon_successors();
        let mut inside = vec![false; self.states];
        let mut stack: Vec<State> = Vec::new();
        for &q in set {
            if !inside[q] {
                inside[q] = true;
                stack.push(q);
            }
        }
        while let Some(q) = stack.pop() {
            for &t in &succ[q] {
                if !inside[t] {
                    inside[t] = true;
                    stack.push(t);
                }
            }
        }
        (0..self.states).filter(|&q| inside[q]).collect()
    }

    /// Direct set simulation, independent of [`Nfa::determinize`].
    pub fn accepts(&self, word: &Word) -> Result<bool> {
        let mut current = self.epsilon_closure(&self.initials);
        for &a in word.iter() {
            if !self.alphabet.contains(a) {
                return Err(Error::SymbolOutOfRange(a.0));
            }
            let mut next: Vec<State> = current
                .iter()
                .flat_map(|&q| self.targets(q, a).iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            current = self.epsilon_closure(&next);
        }
        Ok(current.iter().any(|&q| self.finals[q]))
    }

    /// Subset construction. Output states are the ε-closed subsets reachable
    /// from the closure of the initial set, numbered in breadth-first
    /// discovery order with symbols visited in alphabet order. The empty
    /// subset, when reached, is kept as an ordinary non-final state.
    pub fn determinize(&self) -> (Dfa, SubsetMap) {
        let mut det = Determinizer::new(self);
        let dfa = det.run();
        let subsets = (0..det.count)
            .map(|i| bits_to_states(det.subset(i)))
            .collect();
        (dfa, SubsetMap { subsets })
    }

    /// Subset construction without materializing the provenance map.
    pub fn determinize_dfa(&self) -> Dfa {
        Determinizer::new(self).run()
    }
}

fn bits_to_states(bits: &[u64]) -> Vec<State> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut x = word;
        while x != 0 {
            let b = x.trailing_zeros() as usize;
            out.push(w * 64 + b);
            x &= x - 1;
        }
    }
    out
}

struct Determinizer<'a> {
    nfa: &'a Nfa,
    words: usize,
    // image[(q * |Σ| + a) * words ..]: ε-closed successor set of q on a
    image: Vec<u64>,
    final_bits: Vec<u64>,
    arena: Vec<u64>,
    count: usize,
}

impl<'a> Determinizer<'a> {
    fn new(nfa: &'a Nfa) -> Self {
        let n = nfa.states;
        let k = nfa.alphabet.len();
        let words = n.div_ceil(64).max(1);

        // ε-closure of every single state.
        let succ = nfa.epsilon_successors();
        let mut closure = vec![0u64; n * words];
        for q in 0..n {
            let row = &mut closure[q * words..(q + 1) * words];
            let mut stack = vec![q];
            row[q / 64] |= 1 << (q % 64);
            while let Some(p) = stack.pop() {
                for &t in &succ[p] {
                    if row[t / 64] & (1 << (t % 64)) == 0 {
                        row[t / 64] |= 1 << (t % 64);
                        stack.push(t);
                    }
                }
            }
        }

        let mut image = vec![0u64; n * k * words];
        for q in 0..n {
            for a in 0..k {
                let dst = (q * k + a) * words;
                for &t in &nfa.delta[q * k + a] {
                    for w in 0..words {
                        image[dst + w] |= closure[t * words + w];
                    }
                }
            }
        }

        let mut final_bits = vec![0u64; words];
        for q in nfa.finals() {
            final_bits[q / 64] |= 1 << (q % 64);
        }

        let mut start = vec![0u64; words];
        for &q in &nfa.initials {
            for w in 0..words {
                start[w] |= closure[q * words + w];
            }
        }

        Determinizer {
            nfa,
            words,
            image,
            final_bits,
            arena: start,
            count: 1,
        }
    }

    fn subset(&self, i: usize) -> &[u64] {
        &self.arena[i * self.words..(i + 1) * self.words]
    }

    fn run(&mut self) -> Dfa {
        let k = self.nfa.alphabet.len();
        let words = self.words;
        let mut index: FxHashMap<Box<[u64]>, usize> = FxHashMap::default();
        index.insert(self.subset(0).into(), 0);
        let mut delta = Vec::new();
        let mut next = vec![0u64; words];
        let mut head = 0;
        while head < self.count {
            for a in 0..k {
                next.iter_mut().for_each(|x| *x = 0);
                for w in 0..words {
                    let mut x = self.arena[head * words + w];
                    while x != 0 {
                        let q = w * 64 + x.trailing_zeros() as usize;
                        x &= x - 1;
                        let src = (q * k + a) * words;
                        for (dst, &bits) in next.iter_mut().zip(&self.image[src..src + words]) {
                            *dst |= bits;
                        }
                    }
                }
                let id = match index.get(next.as_slice()) {
                    Some(&id) => id,
                    None => {
                        let id = self.count;
                        self.count += 1;
                        self.arena.extend_from_slice(&next);
                        index.insert(next.clone().into_boxed_slice(), id);
                        id
                    }
                };
                delta.push(id);
            }
            head += 1;
        }
        let finals = (0..self.count)
            .map(|i| {
                self.subset(i)
                    .iter()
                    .zip(&self.final_bits)
                    .any(|(s, f)| s & f != 0)
            })
            .collect();
        Dfa::from_parts(self.nfa.alphabet.clone(), delta, 0, finals)
    }
}

/// Provenance of a subset construction: entry `i` is the set of NFA states
/// (sorted ascending) that became DFA state `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetMap {
    subsets: Vec<Vec<State>>,
}

impl SubsetMap {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subset(&self, state: State) -> &[State] {
        &self.subsets[state]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[State]> {
        self.subsets.iter().map(Vec::as_slice)
    }

    pub fn position(&self, subset: &[State]) -> Option<State> {
        self.subsets.iter().position(|s| s == subset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::reverse_nfa;
    use crate::witness;

    #[test]
    fn dfa_as_nfa_is_isomorphic() {
        let m = witness::revcat_witness_m(4).unwrap();
        let (d, map) = m.to_nfa().determinize();
        assert_eq!(d, m.canonical());
        assert!(map.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn reversed_revcat_m2_subset_trace() {
        let m = witness::revcat_witness_m(2).unwrap();
        let (d, map) = reverse_nfa(&m).determinize();
        assert_eq!(d.state_count(), 4);
        let expected: [&[State]; 4] = [&[1], &[0], &[], &[0, 1]];
        assert_eq!(map.iter().collect::<Vec<_>>(), expected);
        assert_eq!(d.final_count(), 2);
        assert_eq!(map.position(&[0, 1]), Some(3));
    }

    #[test]
    fn reversed_revcat_m_sizes() {
        for m in 2..=5 {
            let (d, _) = reverse_nfa(&witness::revcat_witness_m(m).unwrap()).determinize();
            assert_eq!(d.state_count(), 1 << m);
            assert_eq!(d.final_count(), 1 << (m - 1));
        }
    }

    #[test]
    fn empty_initial_set_is_dead() {
        let sigma = Alphabet::standard(2).unwrap();
        let n = Nfa::new(sigma, 3, [], [0, 1], [(0, Symbol(0), 1)], []).unwrap();
        let (d, map) = n.determinize();
        assert_eq!(d.state_count(), 1);
        assert!(!d.is_final(0));
        assert_eq!(map.subset(0), &[] as &[State]);
    }

    #[test]
    fn epsilon_cycles_terminate() {
        let sigma = Alphabet::standard(1).unwrap();
        let n = Nfa::new(
            sigma,
            3,
            [0],
            [2],
            [(2, Symbol(0), 0)],
            [(0, 1), (1, 0), (1, 2)],
        )
        .unwrap();
        assert_eq!(n.epsilon_closure(&[0]), vec![0, 1, 2]);
        let (d, map) = n.determinize();
        assert_eq!(map.subset(0), &[0, 1, 2]);
        assert_eq!(d.state_count(), 1);
        assert!(d.is_final(0));
        assert!(n.accepts(&Word::empty()).unwrap());
    }

    #[test]
    fn wide_nfa_uses_multiword_subsets() {
        // 70 states: a chain with a self-loop at the start; subsets exceed 64 bits.
        let sigma = Alphabet::standard(1).unwrap();
        let n = 70;
        let edges = (0..n - 1)
            .map(|q| (q, Symbol(0), q + 1))
            .chain([(0, Symbol(0), 0)]);
        let nfa = Nfa::new(sigma, n, [0], [n - 1], edges, []).unwrap();
        let (d, map) = nfa.determinize();
        assert_eq!(d.state_count(), n);
        assert_eq!(map.subset(n - 1).len(), n);
        assert!(d.accepts(&Word(vec![Symbol(0); n - 1])).unwrap());
        assert!(!d.accepts(&Word(vec![Symbol(0); n - 2])).unwrap());
    }

    #[test]
    fn constructor_validates() {
        let sigma = Alphabet::standard(1).unwrap();
        assert!(Nfa::new(sigma.clone(), 1, [1], [], [], []).is_err());
        assert!(Nfa::new(sigma.clone(), 1, [0], [], [(0, Symbol(1), 0)], []).is_err());
        assert!(Nfa::new(sigma, 1, [0], [], [], [(0, 2)]).is_err());
    }
}
