use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normplay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn outcome_of_compact_game() {
    let o = run(&["outcome", "*2_#2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-");
}

#[test]
fn compact_flag_reads_digits_separately() {
    let verbose = run(&["outcome", "*21"]);
    let compact = run(&["outcome", "--compact", "*21"]);
    let explicit = run(&["outcome", "{*2,*}"]);
    assert_eq!(stdout(&compact), stdout(&explicit));
    assert_eq!(stdout(&verbose), stdout(&run(&["nim", "21"])));
}

#[test]
fn nim_position() {
    let o = run(&["nim", "1", "1", "1"]);
    assert_eq!(stdout(&o), "OP");
    let o = run(&["nim", "--cross-check", "2", "3", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["nim", "--closed-form", "--players", "5", "2", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["nim", "--closed-form", "--players", "4", "1", "2", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_outcome_schema() {
    let o = run(&["outcome", "{*}", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["expr"], "{*}");
    assert_eq!(v["players"], 3);
    assert_eq!(v["outcome"], "NO");
}

#[test]
fn partizan_outcome() {
    let o = run(&["outcome", "{0,*| |0}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with('('));
}

#[test]
fn verify_tables() {
    for t in ["T1", "T5", "T8"] {
        let o = run(&["verify", "--table", t]);
        assert_eq!(o.status.code(), Some(0), "{t}: {}", stdout(&o));
    }
    let o = run(&["verify", "--table", "two-heap", "--players", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--table", "T9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compare_verdicts() {
    let o = run(&["compare", "--player", "L", "0", "one(L)"]);
    assert!(stdout(&o).starts_with("PROVEN"), "{}", stdout(&o));
    let o = run(&["compare", "--player", "L", "one(L)", "0"]);
    assert!(stdout(&o).starts_with("REFUTED"), "{}", stdout(&o));
    let o = run(&["compare", "--player", "X", "0", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn absorbing_verdicts() {
    assert_eq!(stdout(&run(&["absorbing", "*3+*3+*3"])), "CERTIFIED");
    assert!(stdout(&run(&["absorbing", "*2+*2"])).starts_with("REFUTED"));
}

#[test]
fn laws_hold_over_default_pool() {
    let o = run(&["laws"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["laws", "--law", "mirror", "--format", "json"]);
    assert_eq!(stdout(&o), "");
}

#[test]
fn quotient_output() {
    let o = run(&["nim-quotient", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 16);
    assert_eq!(v["pi"][0], "OP");
}

#[test]
fn searches_report() {
    let o = run(&["search", "--question", "trebling"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "search",
        "--question",
        "nim-periodicity",
        "--max-heaps",
        "2",
    ]);
    assert!(stdout(&o).contains("verified to horizon"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["outcome", "{0"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["outcome", "*5", "--budget", "3"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["laws", "--law", "other_procreation(3,1)"])
            .status
            .code(),
        Some(2)
    );
}
