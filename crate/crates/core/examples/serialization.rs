//! Writes a witness as JSON and DOT, reads the JSON back, and serializes
//! the NFA built for `L(A)^R L(B)`.
//!
//! cargo run --example serialization

use regsc::ops::{catenation_nfa, reverse_nfa};
use regsc::witness::{revcat_witness_m, revcat_witness_n};
use regsc::{emit_document, emit_dot, parse_document, Automaton};

fn main() -> regsc::Result<()> {
    let a = Automaton::Dfa(revcat_witness_m(2)?);
    let json = emit_document(&a);
    print!("{json}");
    assert_eq!(parse_document(&json)?, a);
    print!("{}", emit_dot(&a));

    let nfa = catenation_nfa(&reverse_nfa(&revcat_witness_m(2)?), &revcat_witness_n(2)?)?;
    print!("{}", emit_document(&Automaton::Nfa(nfa)));

    let bad = json.replace("\"initial\": 0", "\"initial\": 7");
    if let Err(e) = parse_document(&bad) {
        println!("rejected: {e}");
    }
    Ok(())
}
