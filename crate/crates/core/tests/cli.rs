use std::fs;
use std::path::PathBuf;

use serde_json::Value;
use snapcut::cli::{self, EXIT_BUDGET, EXIT_MALFORMED, EXIT_NO, EXIT_YES};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("snapcut").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = run(&full);
    (
        r.code,
        serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{e}: {}", r.out)),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("snapcut-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn fig1b_has_no_cut_of_size_one() {
    let r = run(&["cut", "--graph", "fig1b", "--s", "s", "--z", "z", "--h", "1"]);
    assert_eq!(r.code, EXIT_NO);
    assert!(r.out.contains("NO"));
    // the bound goes to stderr before the run
    assert!(r.err.contains("bound"));
}

#[test]
fn fig7_paths_report_the_caption_paths() {
    let (code, v) = json(&["paths", "--graph", "fig7", "--s", "s", "--z", "z", "--k", "2"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(v["answer"], "YES");
    for field in ["instance", "question", "answer", "witness", "elapsed", "budget_used"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    let text = run(&["paths", "--graph", "fig7", "--k", "2"]).out;
    assert!(text.contains("(s,1,a,3,z)") && text.contains("(s,2,b,4,z)"), "{text}");
}

#[test]
fn m3_is_rejected_with_a_dot_witness() {
    let r = run(&["mengerian", "--graph", "M3"]);
    assert_eq!(r.code, EXIT_NO);
    assert!(r.out.contains("graph"), "{}", r.out);
    assert!(r.out.contains("M3"));
}

#[test]
fn minimum_cuts() {
    let (code, v) = json(&["cut", "--graph", "fig1a", "--min"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(v["witness"], serde_json::json!([2, 3]));
    let (code, v) = json(&["mcut", "--graph", "fig1a", "--min"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn flow_refuses_repeated_labels() {
    let r = run(&["flow", "--graph", "fig1b"]);
    assert_eq!(r.code, EXIT_MALFORMED);
    assert!(r.err.to_lowercase().contains("inject"), "{}", r.err);
}

#[test]
fn flow_on_an_injective_file() {
    let path = scratch("inj.txt");
    fs::write(&path, "# two routes\ns a 1\na z 2\ns b 3\nb z 4\n").unwrap();
    let (code, v) = json(&["flow", "--graph", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(v["answer"]["p"], 2);
    assert_eq!(v["answer"]["c"], 2);
}

#[test]
fn malformed_inputs_exit_2() {
    assert_eq!(run(&["frobnicate"]).code, EXIT_MALFORMED);
    assert_eq!(
        run(&["paths", "--graph", "no-such-graph", "--k", "1"]).code,
        EXIT_MALFORMED
    );
    assert_eq!(
        run(&["paths", "--graph", "fig7", "--s", "nobody", "--k", "1"]).code,
        EXIT_MALFORMED
    );
    let bad = scratch("bad.txt");
    fs::write(&bad, "s z zero\n").unwrap();
    assert_eq!(
        run(&["cut", "--graph", bad.to_str().unwrap(), "--h", "1"]).code,
        EXIT_MALFORMED
    );
    // --h and --min together
    assert_eq!(
        run(&["cut", "--graph", "fig7", "--h", "1", "--min"]).code,
        EXIT_MALFORMED
    );
}

#[test]
fn tiny_budgets_exit_3() {
    assert_eq!(
        run(&["--budget", "5", "paths", "--graph", "fig7", "--k", "3"]).code,
        EXIT_BUDGET
    );
    assert_eq!(
        run(&["--budget", "1", "cut", "--graph", "fig1b", "--h", "2"]).code,
        EXIT_BUDGET
    );
}

#[test]
fn reports_are_deterministic_apart_from_elapsed() {
    let strip = |mut v: Value| {
        v["elapsed"] = Value::Null;
        v
    };
    for args in [
        &["cut", "--graph", "fig1a", "--min"][..],
        &["paths", "--graph", "fig1a", "--k", "2"],
        &["mengerian", "--graph", "M5"],
        &["oracle", "c", "--graph", "fig1b"],
    ] {
        assert_eq!(strip(json(args).1), strip(json(args).1), "{args:?}");
    }
}

#[test]
fn oracles_match_the_fixture_values() {
    let (_, p) = json(&["oracle", "p", "--graph", "fig1b"]);
    let (_, c) = json(&["oracle", "c", "--graph", "fig1b"]);
    assert_eq!(p["answer"], 1);
    assert_eq!(c["answer"], 2);
}

#[test]
fn gadget_round_trip() {
    let source = scratch("k3.txt");
    fs::write(&source, "a b\nb c\na c\n").unwrap();
    let src = source.to_str().unwrap();

    let out = scratch("vc.json");
    let r = run(&[
        "gadget",
        "vc",
        "--source",
        src,
        "--k",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_YES, "{}", r.err);
    let manifest: Value = serde_json::from_str(&fs::read_to_string(cli::manifest_path(&out)).unwrap()).unwrap();
    assert_eq!(manifest["ground_truth"], true);
    // the generated instance answers like the source: a cover of size 2 means a cut of 3 + 2
    assert_eq!(
        run(&["mcut", "--graph", out.to_str().unwrap(), "--h", "5"]).code,
        EXIT_YES
    );
    assert_eq!(
        run(&["mcut", "--graph", out.to_str().unwrap(), "--h", "4"]).code,
        EXIT_NO
    );

    let out = scratch("indep.txt");
    let r = run(&[
        "gadget",
        "indep",
        "--source",
        src,
        "--k",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_YES, "{}", r.err);
    assert_eq!(
        run(&["paths", "--graph", out.to_str().unwrap(), "--k", "1"]).code,
        EXIT_YES
    );
    assert_eq!(
        run(&["paths", "--graph", out.to_str().unwrap(), "--k", "2"]).code,
        EXIT_NO
    );

    let out = scratch("clique.txt");
    let args = [
        "gadget",
        "clique",
        "--source",
        src,
        "--k",
        "3",
        "--coloring",
        "a=0,b=1,c=2",
        "--out",
    ];
    let r = run(&[&args[..], &[out.to_str().unwrap()]].concat());
    assert_eq!(r.code, EXIT_YES, "{}", r.err);
    assert_eq!(
        run(&["cut", "--graph", out.to_str().unwrap(), "--h", "6"]).code,
        EXIT_YES
    );

    // a clique gadget without a coloring is malformed
    let r = run(&[
        "gadget",
        "clique",
        "--source",
        src,
        "--k",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_MALFORMED);
}

#[test]
fn export_dot_variants() {
    let r = run(&["export-dot", "--graph", "fig1a"]);
    assert_eq!(r.code, EXIT_YES);
    assert!(r.out.starts_with("graph"));
    let r = run(&["export-dot", "--graph", "fig1a", "--snapshots", "1,2"]);
    assert!(!r.out.contains("label=\"3\""), "{}", r.out);
    let r = run(&["export-dot", "--graph", "fig7", "--product", "--k", "2"]);
    assert_eq!(r.code, EXIT_YES);
    assert!(r.out.starts_with("digraph"), "{}", r.out);
}

#[test]
fn oracle_search_finds_five_graphs() {
    let (code, v) = json(&["oracle", "search", "--max-vertices", "5", "--max-edges", "7"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(
        v["witness"]
            .as_array()
            .map(Vec::len)
            .or(v["answer"].as_u64().map(|n| n as usize)),
        Some(5)
    );
}
