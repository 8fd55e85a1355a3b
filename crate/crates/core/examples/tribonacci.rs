//! Generate the Tribonacci word from the directive `(123)` and find the
//! imbalance inside it.

use episturmian::episturmian::{generate_prefix, DirectiveSpec, WordCap};
use episturmian::words::{balance_check_finite, parikh};

fn main() -> episturmian::Result<()> {
    let spec: DirectiveSpec = "(123)".parse()?;
    let prefix = generate_prefix(&spec, 27, WordCap::DEFAULT)?;
    println!("Pal{spec} starts {}", prefix.prefix(27));

    let long = generate_prefix(&spec, 2_000, WordCap::DEFAULT)?;
    let counts = parikh(&long);
    for (letter, c) in counts.iter() {
        println!(
            "letter {letter}: {c} of {} ({:.4})",
            counts.total(),
            c as f64 / counts.total() as f64
        );
    }

    let report = balance_check_finite(&long.prefix(64), 16)?;
    if let Some(w) = report.witness {
        println!(
            "unbalanced over {}: {} at {} and {} at {}",
            w.letter, w.heavy, w.heavy_position, w.light, w.light_position
        );
    }
    Ok(())
}
