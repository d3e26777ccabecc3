//! Worst case over every pair of small DFAs.
//!
//! cargo run --release --example exhaustive_search -- [op] [m] [n] [sigma]

use std::time::Instant;

use regsc::bounds;
use regsc::document::emit_dfa;
use regsc::harness::{exhaustive_search, SearchMode};
use regsc::Operation;

fn main() -> regsc::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let op: Operation = args.first().map_or("revcat", String::as_str).parse()?;
    let num =
        |i: usize, default: usize| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default);
    let (m, n, sigma) = (num(1, 1), num(2, 3), num(3, 2));

    let start = Instant::now();
    let r = exhaustive_search(op, m, n, sigma, SearchMode::Full)?;
    println!("{r} in {:.2?}", start.elapsed());
    let formula = match op {
        Operation::RevCat => bounds::sc_revcat(m as u32, n as u32)?,
        Operation::StarCat => bounds::sc_starcat(m as u32, n as u32)?,
    };
    println!("formula {formula}");
    println!("first operand:\n{}", emit_dfa(&r.argmax.0));
    println!("second operand:\n{}", emit_dfa(&r.argmax.1));
    Ok(())
}
