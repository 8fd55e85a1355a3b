//! Classify directive sequences and print the closed form of each balanced
//! family word.

use episturmian::episturmian::{classify, family_word, ClassifyConfig, DirectiveSpec};

fn main() -> episturmian::Result<()> {
    let cfg = ClassifyConfig::default();
    let inputs = [
        "112(3)", "1123(4)", "123(4)", "1231(4)", "12314(5)", "123(1)", "343(1)", "(123)",
        "12131(4)", "1232(3)",
    ];
    for text in inputs {
        let spec: DirectiveSpec = text.parse()?;
        let c = classify(&spec, &cfg)?;
        if c.class.is_family() {
            let word = family_word(&c.class, cfg.word_cap)?;
            println!(
                "{:<10} {:<18} {word}",
                spec.to_string(),
                c.class.to_string()
            );
        } else {
            println!("{:<10} {}", spec.to_string(), c.class);
        }
    }
    Ok(())
}
