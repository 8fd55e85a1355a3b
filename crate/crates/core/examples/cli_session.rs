//! Drive the command line in-process, as a script would.

use episturmian::cli::run;

fn main() {
    let sessions: [&[&str]; 5] = [
        &["pal", "1234"],
        &["classify", "(123)"],
        &["--format", "json", "freq", "123(1)"],
        &["balance", "(1213121)"],
        &[
            "verify",
            "second-repeat",
            "--max-alphabet",
            "3",
            "--max-head-len",
            "4",
        ],
    ];
    for args in sessions {
        let out = run(std::iter::once("epi").chain(args.iter().copied()));
        println!("$ epi {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("[exit {}]", out.code);
    }
}
