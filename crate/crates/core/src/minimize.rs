//! DFA minimization.
//!
//! [`minimize_hopcroft`] is the workhorse: partition refinement over the
//! reachable part. [`minimize_brzozowski`] (reverse, determinize, twice)
//! shares no code with it beyond the subset construction and serves as a
//! cross-check.
//!
//! Both return complete DFAs numbered canonically (breadth-first from the
//! initial state), so equal languages give structurally equal results.

use crate::dfa::{Dfa, State};
use crate::ops::reverse_nfa;

impl Dfa {
    pub fn minimize(&self) -> Dfa {
        minimize_hopcroft(self)
    }

    pub fn minimal_size(&self) -> usize {
        minimize_hopcroft(self).state_count()
    }
}

/// A partition of `0..n` in which every block occupies a contiguous range
/// of `elems`. Elements of a block can be marked; marked ones are kept at
/// the front of the block's range.
struct Partition {
    elems: Vec<State>,
    loc: Vec<usize>,
    block_of: Vec<usize>,
    first: Vec<usize>,
    end: Vec<usize>,
    mid: Vec<usize>,
    touched: Vec<usize>,
}

impl Partition {
    fn new(n: usize, finals: impl Fn(State) -> bool) -> Self {
        let mut elems: Vec<State> = (0..n).filter(|&q| finals(q)).collect();
        let split = elems.len();
        elems.extend((0..n).filter(|&q| !finals(q)));
        let mut loc = vec![0; n];
        for (i, &q) in elems.iter().enumerate() {
            loc[q] = i;
        }
        let mut p = Partition {
            elems,
            loc,
            block_of: vec![0; n],
            first: Vec::new(),
            end: Vec::new(),
            mid: Vec::new(),
            touched: Vec::new(),
        };
        for (lo, hi) in [(0, split), (split, n)] {
            if lo < hi {
                let b = p.first.len();
                p.first.push(lo);
                p.end.push(hi);
                p.mid.push(lo);
                for i in lo..hi {
                    p.block_of[p.elems[i]] = b;
                }
            }
        }
        p
    }

    fn block_count(&self) -> usize {
        self.first.len()
    }

    fn size(&self, b: usize) -> usize {
        self.end[b] - self.first[b]
    }

    fn members(&self, b: usize) -> &[State] {
        &self.elems[self.first[b]..self.end[b]]
    }

    fn mark(&mut self, q: State) {
        let b = self.block_of[q];
        let i = self.loc[q];
        let m = self.mid[b];
        if i < m {
            return;
        }
        let other = self.elems[m];
        self.elems.swap(i, m);
        self.loc[other] = i;
        self.loc[q] = m;
        if m == self.first[b] {
            self.touched.push(b);
        }
        self.mid[b] = m + 1;
    }

    /// Splits every touched block into marked and unmarked parts. Returns
    /// `(old, new)` pairs; the marked part becomes the new block.
    fn split_touched(&mut self) -> Vec<(usize, usize)> {
        let mut splits = Vec::new();
        for b in std::mem::take(&mut self.touched) {
            if self.mid[b] == self.end[b] {
                self.mid[b] = self.first[b];
                continue;
            }
            let nb = self.first.len();
            self.first.push(self.first[b]);
            self.end.push(self.mid[b]);
            self.mid.push(self.first[b]);
            let m = self.mid[b];
            self.first[b] = m;
            self.mid[b] = m;
            for i in self.first[nb]..self.end[nb] {
                self.block_of[self.elems[i]] = nb;
            }
            splits.push((b, nb));
        }
        splits
    }
}

/// Hopcroft's partition refinement. Unreachable states are removed first;
/// the dead state, when present, is kept.
pub fn minimize_hopcroft(dfa: &Dfa) -> Dfa {
    let d = dfa.canonical();
    let n = d.state_count();
    let k = d.alphabet().len();

    // Predecessor lists per symbol, CSR layout: preds[a] over targets.
    let mut pred_start = vec![0usize; k * (n + 1)];
    for q in 0..n {
        for (a, &t) in d.row(q).iter().enumerate() {
            pred_start[a * (n + 1) + t + 1] += 1;
        }
    }
    for a in 0..k {
        for t in 0..n {
            pred_start[a * (n + 1) + t + 1] += pred_start[a * (n + 1) + t];
        }
    }
    let mut fill = pred_start.clone();
    let mut pred_list = vec![0usize; k * n];
    for q in 0..n {
        for (a, &t) in d.row(q).iter().enumerate() {
            let slot = &mut fill[a * (n + 1) + t];
            pred_list[a * n + *slot] = q;
            *slot += 1;
        }
    }
    let preds = |a: usize, t: State| {
        let lo = pred_start[a * (n + 1) + t];
        let hi = pred_start[a * (n + 1) + t + 1];
        &pred_list[a * n + lo..a * n + hi]
    };

    let mut part = Partition::new(n, |q| d.is_final(q));
    let mut pending: Vec<Vec<bool>> = vec![vec![false; k]; part.block_count()];
    let mut work: Vec<(usize, usize)> = Vec::new();
    if part.block_count() == 2 {
        let smaller = if part.size(0) <= part.size(1) { 0 } else { 1 };
        work.extend((0..k).map(|a| (smaller, a)));
        pending[smaller].fill(true);
    }

    let mut splitter: Vec<State> = Vec::new();
    while let Some((c, a)) = work.pop() {
        pending[c][a] = false;
        splitter.clear();
        splitter.extend_from_slice(part.members(c));
        for &t in &splitter {
            for &p in preds(a, t) {
                part.mark(p);
            }
        }
        for (old, new) in part.split_touched() {
            pending.push(vec![false; k]);
            #[allow(clippy::needless_range_loop)]
            for x in 0..k {
                if pending[old][x] {
                    pending[new][x] = true;
                    work.push((new, x));
                } else {
                    let pick = if part.size(new) <= part.size(old) {
                        new
                    } else {
                        old
                    };
                    pending[pick][x] = true;
                    work.push((pick, x));
                }
            }
        }
    }

    let blocks = part.block_count();
    let mut delta = Vec::with_capacity(blocks * k);
    let mut finals = Vec::with_capacity(blocks);
    for b in 0..blocks {
        let rep = part.members(b)[0];
        delta.extend(d.row(rep).iter().map(|&t| part.block_of[t]));
        finals.push(d.is_final(rep));
    }
    Dfa::from_parts(
        d.alphabet().clone(),
        delta,
        part.block_of[d.initial()],
        finals,
    )
    .canonical()
}

/// Brzozowski's double reversal: determinize(reverse(determinize(reverse(d)))).
pub fn minimize_brzozowski(dfa: &Dfa) -> Dfa {
    let once = reverse_nfa(dfa).determinize_dfa();
    reverse_nfa(&once).determinize_dfa()
}
