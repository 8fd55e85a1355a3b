//! Balance decisions for finite and eventually periodic words.

use episturmian::words::{
    balance_check_finite, balance_check_periodic, EventuallyPeriodicWord, FiniteWord,
};

fn main() -> episturmian::Result<()> {
    for text in ["1213121213121", "12112131211211213121121", "1213121"] {
        let w: FiniteWord = text.parse()?;
        let report = balance_check_finite(&w, w.len())?;
        match &report.witness {
            Some(wit) => println!("{w}: {} vs {} over {}", wit.heavy, wit.light, wit.letter),
            None => println!("{w}: balanced"),
        }
    }

    // Exact: a periodic word is decided by a bounded number of factor lengths.
    for text in ["(1213121)", "(1122)", "3333(12)", "(1211213)"] {
        let w: EventuallyPeriodicWord = text.parse()?;
        let report = balance_check_periodic(&w);
        let verdict = if report.is_balanced() {
            "balanced"
        } else {
            "unbalanced"
        };
        println!(
            "{w}: {verdict}, lengths {}..={} checked",
            report.checked_lengths.start, report.checked_lengths.end
        );
    }
    Ok(())
}
