//! Minimizes a redundant DFA with both algorithms and shows a word that
//! separates two inequivalent states.
//!
//! cargo run --example minimization

use regsc::minimize::{minimize_brzozowski, minimize_hopcroft};
use regsc::{Alphabet, Dfa};

fn main() -> regsc::Result<()> {
    // words over {a,b} with an even number of a's, written with 6 states
    let sigma = Alphabet::standard(2)?;
    let d = Dfa::from_fn(sigma.clone(), 6, 0, [0, 2, 4], |q, s| match s.0 {
        0 => (q + 1) % 6,
        _ => q,
    })?;
    let h = minimize_hopcroft(&d);
    let b = minimize_brzozowski(&d);
    println!(
        "input {} states, hopcroft {}, brzozowski {}",
        d.state_count(),
        h.state_count(),
        b.state_count()
    );
    println!("same canonical machine: {}", h == b.canonical());
    println!("equivalent to input: {}", h.equivalent(&d)?);
    match d.distinguishing_word(0, 1) {
        Some(w) => println!("states 0 and 1 differ on {:?}", sigma.render(&w)),
        None => println!("states 0 and 1 are equivalent"),
    }
    println!(
        "states 0 and 2 equivalent: {}",
        d.distinguishing_word(0, 2).is_none()
    );
    let short: Vec<String> = d
        .enumerate_accepted(3)
        .iter()
        .map(|w| sigma.render(w))
        .collect();
    println!("accepted up to length 3: {short:?}");
    Ok(())
}
