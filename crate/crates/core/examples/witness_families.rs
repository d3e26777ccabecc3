//! Builds every witness family at a few sizes and prints the transition
//! tables.
//!
//! cargo run --example witness_families

use regsc::witness::{rows, WitnessFamily};

fn main() -> regsc::Result<()> {
    for family in WitnessFamily::ALL {
        let d = family.build(family.min_size().max(3), 2)?;
        let letters: String = d.alphabet().chars().iter().collect();
        println!(
            "{family}: {} states over {letters}, finals {:?}",
            d.state_count(),
            d.finals().collect::<Vec<_>>()
        );
        for (q, row) in rows(&d).iter().enumerate() {
            println!("  {q} -> {row:?}");
        }
        println!("  minimal size {}", d.minimal_size());
    }
    Ok(())
}
