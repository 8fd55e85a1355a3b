//! Build `Pal(w)` one directive letter at a time and compare the
//! incremental rule with repeated closure.
//!
//! ```text
//! cargo run --example palindromic_closure -- 1232
//! ```

use episturmian::episturmian::{pal_naive, GeneratorState, WordCap};
use episturmian::words::{longest_palindromic_suffix, palindromic_closure, FiniteWord};

fn main() -> episturmian::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1232".to_string());
    let directive: FiniteWord = arg.parse()?;

    let mut state = GeneratorState::new();
    for (i, &x) in directive.iter().enumerate() {
        let reused = state.prefix_followed_by(x);
        state.step(x, WordCap::DEFAULT)?;
        match reused {
            Some(len) => println!("x{} = {x}: reuse palindromic prefix of length {len}", i + 1),
            None => println!("x{} = {x}: new letter, u x u", i + 1),
        }
        println!("    u{} = {}", i + 1, FiniteWord::from(state.current()));
    }

    let incremental = state.into_word();
    assert_eq!(incremental, pal_naive(&directive));
    println!(
        "Pal({directive}) = {incremental} ({} letters)",
        incremental.len()
    );

    let w: FiniteWord = "1213".parse()?;
    let lps = longest_palindromic_suffix(&w);
    println!(
        "closure of {w}: longest palindromic suffix {lps}, closure {}",
        palindromic_closure(&w)
    );
    Ok(())
}
