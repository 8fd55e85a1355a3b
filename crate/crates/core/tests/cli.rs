use episturmian::cli::{
    run, Envelope, Output, Response, EXIT_ERROR, EXIT_NOT_BALANCED, EXIT_OK, EXIT_UNKNOWN,
};

fn epi(args: &[&str]) -> Output {
    run(std::iter::once("epi").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = epi(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn pal_and_generate() {
    assert_eq!(stdout(&["pal", "123"]), "1213121\n");
    assert_eq!(stdout(&["pal", "1234"]), "121312141213121\n");
    assert_eq!(
        stdout(&["generate", "(123)", "--length", "27"]),
        "121312112131212131211213121\n"
    );
    assert_eq!(
        stdout(&["generate", "123(1)", "--length", "14", "--exact"]),
        "12131211213121\n"
    );
    assert_eq!(stdout(&["generate", "1", "--length", "1"]), "1\n");
    let short = epi(&["generate", "12", "--length", "10"]);
    assert_eq!(short.code, EXIT_ERROR);
    assert!(short.stderr.contains("exhausted"));
}

#[test]
fn classify_verdicts_and_codes() {
    let a = epi(&["classify", "112(3)"]);
    assert_eq!((a.stdout.as_str(), a.code), ("FamilyA n=2 k=3\n", EXIT_OK));
    assert_eq!(stdout(&["classify", "123(1)"]), "FamilyC k=3\n");
    let nb = epi(&["classify", "(123)"]);
    assert_eq!(nb.code, EXIT_NOT_BALANCED);
    assert!(nb.stdout.starts_with("NotBalanced witness=212/131"));
    // Sturmian, so balanced, but aperiodic: no exact decision exists.
    assert_eq!(
        epi(&["--prefix-bound", "500", "classify", "(12)"]).code,
        EXIT_UNKNOWN
    );
}

#[test]
fn balance_freq_fraenkel() {
    assert!(stdout(&["balance", "(1213121)"]).starts_with("Balanced"));
    assert!(stdout(&["balance", "1213121213121", "--max-len", "3"])
        .starts_with("Unbalanced: 212 (at 5) vs 131 (at 2)"));
    assert!(stdout(&["balance", "1"]).starts_with("Balanced"));
    assert_eq!(epi(&["balance", "12", "--max-len", "3"]).code, EXIT_ERROR);
    let table = "1\t4/7\n2\t2/7\n3\t1/7\n";
    assert!(stdout(&["freq", "3"]).ends_with(table));
    assert!(stdout(&["freq", "123(1)"]).ends_with(table));
    assert!(stdout(&["freq", "(1)"]).ends_with("1\t1/1\n"));
    let aperiodic = epi(&["freq", "(123)"]);
    assert_eq!(aperiodic.code, EXIT_ERROR);
    assert!(aperiodic.stderr.contains("not ultimately periodic"));
    assert_eq!(stdout(&["fraenkel", "3"]), "1213121\n");
    assert_eq!(epi(&["fraenkel", "0"]).code, EXIT_ERROR);
}

#[test]
fn complexity_of_the_fibonacci_word() {
    let out = stdout(&["complexity", "(12)", "--max-n", "10"]);
    let rows: Vec<&str> = out.lines().skip(1).take(10).collect();
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(*row, format!("{}\t{}", i + 1, i + 2));
    }
}

#[test]
fn special_factors_of_a_periodic_word() {
    let out = stdout(&["special", "123(1)", "--max-n", "2"]);
    assert_eq!(
        out,
        "n=0\tright: ε\tleft: ε\nn=1\tright: 1\tleft: 1\nn=2\tright: 21\tleft: 12\n"
    );
}

#[test]
fn verify_and_unknown_claims() {
    let small = ["--max-alphabet", "3", "--max-head-len", "3"];
    let out = epi(&[&["verify", "theorem-families"][..], &small].concat());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with("PASS\n"));
    let bad = epi(&["verify", "no-such-claim"]);
    assert_eq!(bad.code, EXIT_ERROR);
    assert!(bad.stderr.contains("no-such-claim"));
}

#[test]
fn json_round_trips_for_every_command() {
    let commands: [&[&str]; 10] = [
        &["pal", "123"],
        &["generate", "(123)", "--length", "10"],
        &["classify", "(123)"],
        &["classify", "1231(4)"],
        &["balance", "(1122)"],
        &["freq", "4"],
        &["fraenkel", "4"],
        &[
            "verify",
            "ones-tail",
            "--max-alphabet",
            "3",
            "--max-head-len",
            "3",
        ],
        &["complexity", "(12)", "--max-n", "5"],
        &["special", "(123)", "--max-n", "3"],
    ];
    for args in commands {
        let json = epi(&[&["--format", "json"][..], args].concat());
        let env: Envelope =
            serde_json::from_str(&json.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(env.schema_version, 1);
        assert_eq!(
            serde_json::to_string_pretty(&env).unwrap() + "\n",
            json.stdout
        );
        // Text output is rendered from the same response.
        let text = epi(args);
        assert_eq!(
            text.stdout,
            episturmian::cli::render_text(&env.response),
            "{args:?}"
        );
        assert_eq!(text.code, json.code);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "classify", "12131(4)"][..],
        &[
            "verify",
            "periodicity",
            "--max-alphabet",
            "3",
            "--max-head-len",
            "3",
        ],
    ] {
        assert_eq!(epi(args), epi(args));
    }
    let env: Envelope =
        serde_json::from_str(&epi(&["--format", "json", "classify", "(123)"]).stdout).unwrap();
    assert!(matches!(
        env.response,
        Response::Classify {
            in_theorem_scope: true,
            ..
        }
    ));
}
