//! Run every verifier claim at the default enumeration bounds.
//!
//! ```text
//! cargo run --release --example verify_claims
//! ```

use std::time::Instant;

use episturmian::verifier::{verify_claim, EnumerationConfig, ALL_CLAIMS};

fn main() -> episturmian::Result<()> {
    let cfg = EnumerationConfig::default();
    for claim in ALL_CLAIMS {
        let start = Instant::now();
        let report = verify_claim(claim, &cfg)?;
        print!("{report}");
        println!("  {:.2?}", start.elapsed());
    }
    Ok(())
}
