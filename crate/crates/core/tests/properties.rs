use proptest::prelude::*;

use regsc::harness::{oracle_dfa, verify_construction};
use regsc::minimize::{minimize_brzozowski, minimize_hopcroft};
use regsc::ops::{self, catenation_nfa, reverse_nfa};
use regsc::{
    emit_document, parse_document, Alphabet, Automaton, Dfa, Nfa, Operation, Symbol, Word,
};

fn dfa_with(alphabet: Alphabet, max_states: usize) -> impl Strategy<Value = Dfa> {
    let k = alphabet.len();
    (1..=max_states).prop_flat_map(move |n| {
        let alphabet = alphabet.clone();
        (
            prop::collection::vec(prop::collection::vec(0..n, k), n),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(rows, finals)| {
                let finals = (0..n).filter(|&q| finals[q]);
                Dfa::new(alphabet.clone(), rows, 0, finals).unwrap()
            })
    })
}

fn dfa(max_states: usize) -> impl Strategy<Value = Dfa> {
    (1..=3usize).prop_flat_map(move |k| dfa_with(Alphabet::standard(k).unwrap(), max_states))
}

fn dfa_pair(max_m: usize, max_n: usize) -> impl Strategy<Value = (Dfa, Dfa)> {
    (1..=3usize).prop_flat_map(move |k| {
        let sigma = Alphabet::standard(k).unwrap();
        (dfa_with(sigma.clone(), max_m), dfa_with(sigma, max_n))
    })
}

fn nfa(max_states: usize) -> impl Strategy<Value = Nfa> {
    (1..=max_states, 1..=2usize).prop_flat_map(|(n, k)| {
        (
            prop::collection::vec((0..n, 0..k, 0..n), 0..3 * n),
            prop::collection::vec((0..n, 0..n), 0..n),
            prop::collection::vec(0..n, 0..3),
            prop::collection::vec(0..n, 0..3),
        )
            .prop_map(move |(edges, eps, initials, finals)| {
                let edges = edges.into_iter().map(|(p, a, q)| (p, Symbol(a), q));
                Nfa::new(
                    Alphabet::standard(k).unwrap(),
                    n,
                    initials,
                    finals,
                    edges,
                    eps,
                )
                .unwrap()
            })
    })
}

fn words(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in alphabet.symbols() {
                let mut x = w.clone();
                x.push(s);
                next.push(x);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn hopcroft_agrees_with_brzozowski(d in dfa(7)) {
        let h = minimize_hopcroft(&d);
        prop_assert_eq!(&minimize_brzozowski(&d).canonical(), &h);
        prop_assert!(h.equivalent(&d).unwrap());
    }

    #[test]
    fn minimization_is_idempotent(d in dfa(7)) {
        let once = d.minimize();
        prop_assert_eq!(once.minimize(), once);
    }

    #[test]
    fn distinguishing_word_iff_not_merged(d in dfa(6)) {
        let d = d.canonical();
        let m = d.minimize();
        // map every reachable state to its class via a shared access word
        let access = |q: usize| -> Word {
            let mut seen: Vec<Option<Word>> = vec![None; d.state_count()];
            seen[d.initial()] = Some(Word::empty());
            let mut queue = std::collections::VecDeque::from([d.initial()]);
            while let Some(p) = queue.pop_front() {
                for s in d.alphabet().symbols() {
                    let t = d.next(p, s);
                    if seen[t].is_none() {
                        let mut w = seen[p].clone().unwrap();
                        w.push(s);
                        seen[t] = Some(w);
                        queue.push_back(t);
                    }
                }
            }
            seen[q].clone().unwrap()
        };
        for p in 0..d.state_count() {
            for q in 0..d.state_count() {
                let same_class = m.run(m.initial(), &access(p)).unwrap()
                    == m.run(m.initial(), &access(q)).unwrap();
                match d.distinguishing_word(p, q) {
                    None => prop_assert!(same_class),
                    Some(w) => {
                        prop_assert!(!same_class);
                        let fp = d.is_final(d.run(p, &w).unwrap());
                        let fq = d.is_final(d.run(q, &w).unwrap());
                        prop_assert_ne!(fp, fq);
                    }
                }
            }
        }
    }

    #[test]
    fn document_round_trip(d in dfa(6)) {
        let text = emit_document(&Automaton::Dfa(d.clone()));
        prop_assert_eq!(parse_document(&text).unwrap(), Automaton::Dfa(d));
    }

    #[test]
    fn nfa_document_round_trip(n in nfa(5)) {
        let a = Automaton::Nfa(n);
        let text = emit_document(&a);
        prop_assert_eq!(parse_document(&text).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinize_preserves_language(n in nfa(5)) {
        let d = n.determinize_dfa();
        for w in words(n.alphabet(), 5) {
            prop_assert_eq!(d.accepts(&w).unwrap(), n.accepts(&w).unwrap());
        }
    }

    #[test]
    fn double_reversal_is_identity(d in dfa(7)) {
        let twice = reverse_nfa(&reverse_nfa(&d).determinize_dfa()).determinize_dfa();
        prop_assert!(twice.equivalent(&d).unwrap());
    }

    #[test]
    fn reversal_reverses_words(d in dfa(5)) {
        let r = reverse_nfa(&d);
        for w in words(d.alphabet(), 5) {
            prop_assert_eq!(r.accepts(&w.reversed()).unwrap(), d.accepts(&w).unwrap());
        }
    }

    #[test]
    fn revcat_construction_matches_oracle((a, b) in dfa_pair(5, 5)) {
        let r = verify_construction(Operation::RevCat, &a, &b).unwrap();
        prop_assert!(r.pass, "{}", r);
        prop_assert!(r.minimal <= r.constructed && r.constructed as u64 <= r.formula);
        let direct = ops::combined(Operation::RevCat, &a, &b).unwrap();
        prop_assert_eq!(direct.minimize(), oracle_dfa(Operation::RevCat, &a, &b).unwrap());
    }

    #[test]
    fn starcat_construction_matches_oracle((a, b) in dfa_pair(5, 5)) {
        let r = verify_construction(Operation::StarCat, &a, &b).unwrap();
        prop_assert!(r.pass, "{}", r);
        let direct = ops::combined(Operation::StarCat, &a, &b).unwrap();
        prop_assert_eq!(direct.minimize(), oracle_dfa(Operation::StarCat, &a, &b).unwrap());
    }

    #[test]
    fn combined_languages_by_membership((a, b) in dfa_pair(4, 4)) {
        // L(a)^R L(b) and L(a)* L(b) checked word by word from their definitions
        let rev = ops::combined(Operation::RevCat, &a, &b).unwrap();
        let star = ops::combined(Operation::StarCat, &a, &b).unwrap();
        let in_star = |w: &[Symbol]| -> bool {
            // w in L(a)*: dynamic programming over prefixes
            let mut ok = vec![false; w.len() + 1];
            ok[0] = true;
            for i in 0..w.len() {
                if !ok[i] { continue; }
                for j in i + 1..=w.len() {
                    if a.accepts(&Word(w[i..j].to_vec())).unwrap() {
                        ok[j] = true;
                    }
                }
            }
            ok[w.len()]
        };
        for w in words(a.alphabet(), 5) {
            let s = &w.0;
            let mut want_rev = false;
            let mut want_star = false;
            for cut in 0..=s.len() {
                let right = b.accepts(&Word(s[cut..].to_vec())).unwrap();
                if !right { continue; }
                let left = Word(s[..cut].to_vec());
                want_rev |= a.accepts(&left.reversed()).unwrap();
                want_star |= in_star(&s[..cut]);
            }
            prop_assert_eq!(rev.accepts(&w).unwrap(), want_rev);
            prop_assert_eq!(star.accepts(&w).unwrap(), want_star);
        }
    }

    #[test]
    fn unary_revcat_is_catenation(
        (a, b) in (dfa_with(Alphabet::standard(1).unwrap(), 6), dfa_with(Alphabet::standard(1).unwrap(), 6))
    ) {
        // over one letter every language equals its reversal
        let plain = catenation_nfa(&a.to_nfa(), &b).unwrap().determinize_dfa();
        let rev = ops::combined(Operation::RevCat, &a, &b).unwrap();
        prop_assert!(rev.equivalent(&plain).unwrap());
    }
}
