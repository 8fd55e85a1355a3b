//! Factor complexity and special factors of episturmian words.

use episturmian::episturmian::{generate_prefix, to_periodic, DirectiveSpec, WordCap};
use episturmian::words::{complexity, is_reversal_closed, right_special_factors, FactorFamily};

fn main() -> episturmian::Result<()> {
    // The Fibonacci word has n + 1 factors of each length n.
    let fib: DirectiveSpec = "(12)".parse()?;
    let prefix = generate_prefix(&fib, 5_000, WordCap::DEFAULT)?;
    let family = FactorFamily::of_prefix(&prefix, 21);
    let profile = complexity(&family, 20)?;
    let ps: Vec<String> = profile.values.iter().map(|(_, p)| p.to_string()).collect();
    println!("Fibonacci p(1..=20): {}", ps.join(" "));

    // Exact factor sets of a periodic family word.
    let spec: DirectiveSpec = "1231(4)".parse()?;
    let word = to_periodic(&spec, WordCap::DEFAULT)?;
    let q = word.period().len();
    let family = FactorFamily::of_periodic(&word, 2 * q + 1);
    for n in [1, 2, 3, q, 2 * q] {
        let right = right_special_factors(&family, n)?;
        println!(
            "{word} n={n}: {} factors, reversal closed: {}, right special: {:?}",
            family.get(n)?.len(),
            is_reversal_closed(family.get(n)?),
            right.iter().map(|f| f.to_string()).collect::<Vec<_>>()
        );
    }
    Ok(())
}
