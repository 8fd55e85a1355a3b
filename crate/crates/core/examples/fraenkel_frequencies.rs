//! Fraenkel words and their letter frequencies `2^(k-i) / (2^k - 1)`.

use episturmian::episturmian::{
    family_word, fraenkel_word, frequencies_closed_form, FamilyClass, WordCap,
};
use episturmian::words::balance_check_periodic;

fn main() -> episturmian::Result<()> {
    for k in 3..=6 {
        let fr = fraenkel_word(k, WordCap::DEFAULT)?;
        let word = family_word(&FamilyClass::FamilyC { k }, WordCap::DEFAULT)?;
        assert_eq!(word.period(), &fr);
        assert!(balance_check_periodic(&word).is_balanced());

        let freqs = word.frequencies();
        assert_eq!(freqs, frequencies_closed_form(k)?);
        let table: Vec<String> = freqs.iter().map(|(l, f)| format!("{l}:{f}")).collect();
        println!(
            "Fr_{k} has {} letters, frequencies {}",
            fr.len(),
            table.join(" ")
        );
    }
    println!("Fr_5 = {}", fraenkel_word(5, WordCap::DEFAULT)?);
    Ok(())
}
