//! Reverses a DFA and determinizes the result, printing which subset each
//! new state stands for.
//!
//! cargo run --example subset_construction -- [m]

use regsc::ops::reverse_nfa;
use regsc::witness::revcat_witness_m;

fn main() -> regsc::Result<()> {
    let m = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let d = revcat_witness_m(m)?;
    let (det, subsets) = reverse_nfa(&d).determinize();
    println!(
        "reversal of a {m}-state DFA: {} subset states",
        det.state_count()
    );
    for (q, set) in subsets.iter().enumerate() {
        let mark = if det.is_final(q) { "*" } else { " " };
        println!("{mark} {q:>3} = {set:?}");
    }
    println!("minimal: {}", det.minimal_size());
    Ok(())
}
