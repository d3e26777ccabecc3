//! `L(A)* L(B)`: both shapes of the first operand, and the general upper
//! bound as the number of non-initial final states grows.
//!
//! cargo run --example starcat

use regsc::bounds::{sc_starcat, sc_starcat_special, ub_starcat_general};
use regsc::harness::{oracle_sc, verify_construction};
use regsc::witness;
use regsc::{Dfa, Operation};

fn main() -> regsc::Result<()> {
    println!("only final state is initial:");
    for (m, n) in [(2, 2), (3, 3), (4, 3), (5, 4)] {
        let a = witness::starcat_special_witness_a(m)?;
        let b = witness::starcat_special_witness_b(n)?;
        let got = oracle_sc(Operation::StarCat, &a, &b)?;
        println!(
            "  m={m} n={n} minimal={got} formula={}",
            sc_starcat_special(m as u32, n as u32)?
        );
    }
    println!("general:");
    for (m, n) in [(2, 2), (3, 3), (4, 4), (5, 5)] {
        let a = witness::starcat_witness_a(m)?;
        let b = witness::starcat_witness_b(n)?;
        let got = oracle_sc(Operation::StarCat, &a, &b)?;
        println!(
            "  m={m} n={n} minimal={got} formula={}",
            sc_starcat(m as u32, n as u32)?
        );
    }
    println!("more final states, m=5 n=4:");
    let b = witness::starcat_witness_b(4)?;
    for k1 in 1..5 {
        let base = witness::starcat_witness_a(5)?;
        let finals: Vec<usize> = (5 - k1..5).collect();
        let a = Dfa::from_fn(base.alphabet().clone(), 5, 0, finals, |q, s| {
            base.next(q, s)
        })?;
        let r = verify_construction(Operation::StarCat, &a, &b)?;
        println!(
            "  k1={k1} bound={} constructed={} minimal={} {}",
            ub_starcat_general(5, 4, k1 as u32)?,
            r.constructed,
            r.minimal,
            if r.pass { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
