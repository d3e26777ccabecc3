//! Prints the closed forms for a grid of sizes.
//!
//! cargo run --example bounds_table -- [max]

use regsc::bounds::{sc_revcat, sc_starcat, sc_starcat_special};

fn main() -> regsc::Result<()> {
    let max: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    type Formula = fn(u32, u32) -> regsc::Result<u64>;
    let tables: [(&str, Formula); 3] = [
        ("revcat", sc_revcat),
        ("starcat", sc_starcat),
        ("starcat-special", sc_starcat_special),
    ];
    for (name, f) in tables {
        println!("{name}");
        print!("{:>4}", "m\\n");
        for n in 1..=max {
            print!("{n:>10}");
        }
        println!();
        for m in 1..=max {
            print!("{m:>4}");
            for n in 1..=max {
                print!("{:>10}", f(m, n)?);
            }
            println!();
        }
        println!();
    }
    Ok(())
}
