use std::process::{Command, Output};

use negtrans::parse;
use serde_json::Value;

fn negtrans(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negtrans")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn translate_prints_a_parseable_formula() {
    let o = negtrans(&["translate", "-t", "kuroda", "forall x. P(x)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "~~forall x. ~~P(x)");
    assert_eq!(parse(stdout(&o).trim()).unwrap().to_string(), "~~forall x. ~~P(x)");
}

#[test]
fn translate_machine_record() {
    let o = negtrans(&["--output", "machine", "translate", "-t", "kolmogorov", "P & Q"]);
    let r = &records(&o)[0];
    assert_eq!(r["command"], "translate");
    assert_eq!(r["result"], "~~(~~P & ~~Q)");
}

#[test]
fn simplify_from_source() {
    let o = negtrans(&["simplify", "-r", "r1", "--from-source", "P & exists x. Q(x)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("2 step(s)"), "{text}");
    assert_eq!(text.lines().last().unwrap(), "~~(P & exists x. Q(x))");
}

#[test]
fn simplify_enumerate_machine() {
    let o = negtrans(&["--output", "machine", "simplify", "-r", "r3", "--strategy", "enumerate", "~~(~~P | ~~Q)"]);
    let r = &records(&o)[0];
    let paths = r["paths"].as_array().unwrap();
    assert!(!paths.is_empty());
    for p in paths {
        assert_eq!(p["nodes"].as_array().unwrap().len(), p["length"].as_u64().unwrap() as usize + 1);
    }
}

#[test]
fn simplify_reads_rule_file() {
    let dir = std::env::temp_dir().join(format!("negtrans-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("and.rules");
    std::fs::write(&path, "# conjunction only\n~~(~~A & ~~B) => ~~(A & B)\n").unwrap();
    let arg = format!("@{}", path.display());
    let o = negtrans(&["simplify", "-r", &arg, "~~(~~P & ~~(~~Q | ~~R))"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().last().unwrap(), "~~(P & (~~Q | ~~R))");
}

#[test]
fn prove_exit_codes() {
    assert_eq!(negtrans(&["prove", "P -> P"]).status.code(), Some(0));
    assert_eq!(negtrans(&["prove", "-l", "classical", "P | ~P"]).status.code(), Some(0));
    let o = negtrans(&["prove", "-l", "ipc", "P | ~P"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("countermodel"));
}

#[test]
fn prove_unknown_reports_curated_entry() {
    let o = negtrans(&["prove", "(~~forall x. ~~A(x)) -> ~~forall x. A(x)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("curated item 17"), "{}", stdout(&o));
}

#[test]
fn countermodel_exit_codes() {
    let o = negtrans(&["--output", "machine", "countermodel", "P | ~P"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(records(&o)[0]["result"], "refuted");
    let o = negtrans(&["countermodel", "P -> P"]);
    assert_eq!(o.status.code(), Some(2));
    let o = negtrans(&["countermodel", "-l", "minimal", "bot -> P"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn related_translations() {
    assert_eq!(negtrans(&["related", "goedel_gentzen", "gentzen_original"]).status.code(), Some(0));
    // Clause by clause, so equivalent translations need not be related.
    assert_eq!(negtrans(&["related", "kolmogorov", "goedel_gentzen"]).status.code(), Some(1));
    assert_eq!(negtrans(&["related", "goedel_gentzen", "kuroda"]).status.code(), Some(1));
}

#[test]
fn usage_errors() {
    let o = negtrans(&["translate", "-t", "nope", "P"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("kolmogorov"));
    let o = negtrans(&["prove", "P &"]);
    assert_eq!(o.status.code(), Some(64));
    assert_eq!(negtrans(&["simplify", "-r", "r9", "P"]).status.code(), Some(64));
    assert_eq!(negtrans(&["verify", "bogus"]).status.code(), Some(64));
    assert_eq!(negtrans(&["frobnicate"]).status.code(), Some(64));
}

#[test]
fn verify_one_check_machine() {
    let o = negtrans(&["--output", "machine", "verify", "ml-monads"]);
    assert_eq!(o.status.code(), Some(0));
    let rs = records(&o);
    assert_eq!(rs.len(), 2);
    assert_eq!(rs[0]["id"], "ml-monads");
    assert_eq!(rs[0]["status"], "pass");
    assert_eq!(rs[1]["summary"], "checks: 1 pass, 0 fail, 0 documented-gap");
}
