//! `L(A)^R L(B)` on the worst-case operands: direct construction against
//! the generic pipeline and the closed form.
//!
//! cargo run --example revcat -- [max]

use regsc::bounds::sc_revcat;
use regsc::harness::oracle_dfa;
use regsc::ops::{combined, revcat_direct};
use regsc::witness::{revcat_witness_m, revcat_witness_n};
use regsc::Operation;

fn main() -> regsc::Result<()> {
    let max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    println!(
        "{:>2} {:>2} {:>9} {:>9} {:>9}",
        "m", "n", "direct", "minimal", "formula"
    );
    for m in 2..=max {
        for n in 2..=max {
            let a = revcat_witness_m(m)?;
            let b = revcat_witness_n(n)?;
            let direct = combined(Operation::RevCat, &a, &b)?;
            let oracle = oracle_dfa(Operation::RevCat, &a, &b)?;
            assert!(direct.equivalent(&oracle)?);
            let formula = sc_revcat(m as u32, n as u32)?;
            println!(
                "{m:>2} {n:>2} {:>9} {:>9} {formula:>9}",
                direct.state_count(),
                oracle.state_count()
            );
        }
    }
    let c = revcat_direct(&revcat_witness_m(2)?, &revcat_witness_n(2)?)?;
    println!("\nstates of the 2x2 construction:");
    for (q, pair) in c.states.iter().enumerate() {
        println!("  {q:>2} = <{:?}, {:?}>", pair.left, pair.right);
    }
    Ok(())
}
