//! Seeded random operand pairs, each checked against the generic pipeline
//! and the applicable bound.
//!
//! cargo run --example random_check -- [trials] [seed]

use regsc::harness::random_check;

fn main() -> regsc::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let reports = random_check(trials, 5, 5, 4, seed)?;
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checked, {failed} failed", reports.len());
    Ok(())
}
