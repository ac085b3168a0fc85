use std::io::Write;
use std::process::Command;

use serde_json::Value;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn bcinv(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_bcinv")).args(args).output().expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn json(run: &Run) -> Value {
    serde_json::from_str(run.stdout.trim()).unwrap_or_else(|e| panic!("{e}: {}", run.stdout))
}

const ALL_CRITERIA: &str = r#"{"DrazinIdeal":true,"KccDecomp":true,"AnnihilatorDecomp":true,"FormulaConditions":true,"FiveWay":true,"HybridDef":true,"AnnihilatorDef":true}"#;

#[test]
fn bc_inverse_transcript() {
    let run = bcinv(&["compute", "--ring", "zn:6", "--op", "bc_inverse", "--a", "2", "--b", "4", "--c", "4"]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        format!(
            "{{\"exists\":true,\"value\":\"2\",\"index\":null,\"criteria\":{ALL_CRITERIA},\"inner_inverse_used\":\"2\",\"definitional_check\":true}}\n"
        )
    );
}

#[test]
fn moore_penrose_transcript() {
    let run = bcinv(&["compute", "--ring", "mat:q:2", "--op", "moore_penrose", "--a", "[[2,0],[0,0]]"]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        format!(
            "{{\"exists\":true,\"value\":\"[[1/2,0],[0,0]]\",\"index\":null,\"criteria\":{ALL_CRITERIA},\"inner_inverse_used\":\"[[1/8,0],[0,0]]\",\"definitional_check\":true}}\n"
        )
    );
}

#[test]
fn verify_all_on_z6() {
    let run = bcinv(&["verify", "--ring", "zn:6", "--suite", "all"]);
    assert_eq!(run.code, 0);
    let reports: Vec<Value> = run.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), bcinv_core::SUITES.len());
    for r in &reports {
        assert_eq!(r["verdict"], "pass", "{r}");
        assert_eq!(r["mode"], "exhaustive");
        assert_eq!(r["counterexample_count"], 0);
    }
    let formula = reports.iter().find(|r| r["suite"] == "thm-informuast2a").unwrap();
    assert_eq!(formula["tuples_checked"], 216);
}

#[test]
fn nonexistent_inverse_is_not_an_error() {
    let run = bcinv(&["compute", "--ring", "zn:6", "--op", "bc_inverse", "--a", "2", "--b", "3", "--c", "3"]);
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["exists"], false);
    assert_eq!(v["value"], Value::Null);
    assert!(v["criteria"].as_object().unwrap().values().all(|x| x == false));
}

#[test]
fn drazin_reports_index() {
    let run = bcinv(&["compute", "--ring", "mat:q:2", "--op", "drazin_inverse", "--a", "[[0,1],[0,0]]"]);
    let v = json(&run);
    assert_eq!(v["value"], "[[0,0],[0,0]]");
    assert_eq!(v["index"], 2);
    assert_eq!(v["invertible"], false);
    let run = bcinv(&["compute", "--ring", "zn:7", "--op", "drazin_inverse", "--a", "3"]);
    let v = json(&run);
    assert_eq!(v["value"], "5");
    assert_eq!(v["index"], 1);
    assert_eq!(v["invertible"], true);
}

#[test]
fn one_sided_and_along_ops() {
    let v = json(&bcinv(&[
        "compute", "--ring", "mat:q:2", "--op", "left_bc_inverse", "--a", "[[1,0],[0,1]]", "--b", "[[1,0],[0,0]]", "--c",
        "[[1,1],[0,0]]",
    ]));
    assert_eq!(v["value"], "[[1,1],[0,0]]");
    assert_eq!(v["definitional_check"], true);
    let v = json(&bcinv(&["compute", "--ring", "zn:6", "--op", "inverse_along", "--a", "2", "--d", "4"]));
    assert_eq!(v["value"], "2");
    let v = json(&bcinv(&["compute", "--ring", "zn:6", "--op", "one_three_inverse", "--a", "3"]));
    assert_eq!(v["exists"], true);
    assert_eq!(v["definitional_check"], true);
}

#[test]
fn negative_rational_literals_parse() {
    let v = json(&bcinv(&["compute", "--ring", "mat:q:2", "--op", "group_inverse", "--a", "[[-1,0],[0,0]]"]));
    assert_eq!(v["value"], "[[-1,0],[0,0]]");
}

#[test]
fn usage_errors_exit_2() {
    let run = bcinv(&["compute", "--ring", "zn:6", "--op", "bc_inverse", "--a", "2", "--b", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("--c"), "{}", run.stderr);
    assert!(run.stdout.is_empty());
    let run = bcinv(&["compute", "--ring", "zn:6", "--op", "group_inverse", "--a", "2", "--b", "3"]);
    assert_eq!(run.code, 2);
    let run = bcinv(&["compute", "--ring", "zn:6", "--op", "frobenius", "--a", "2"]);
    assert_eq!(run.code, 2);
    assert_eq!(bcinv(&["compute", "--ring", "zn:6"]).code, 2);
}

#[test]
fn domain_errors_are_json_and_exit_1() {
    let cases = [
        (vec!["compute", "--ring", "zn:6", "--op", "group_inverse", "--a", "9"], "InvalidElement"),
        (vec!["compute", "--ring", "zn:1", "--op", "group_inverse", "--a", "0"], "InvalidRing"),
        (vec!["verify", "--ring", "zn:6", "--suite", "nope"], "UnknownSuite"),
        (vec!["verify", "--ring", "mat:zn:4:2", "--suite", "thm-fiveway"], "CardinalityGuard"),
        (vec!["enumerate", "--ring", "mat:q:2"], "InfiniteRing"),
        (vec!["crosscheck", "--p", "2", "--k", "3"], "CardinalityGuard"),
        (vec!["crosscheck", "--p", "4", "--k", "2"], "InvalidRing"),
    ];
    for (args, kind) in cases {
        let run = bcinv(&args);
        assert_eq!(run.code, 1, "{args:?}");
        let v = json(&run);
        assert_eq!(v["error"], kind, "{args:?}");
        assert!(v["message"].is_string());
    }
}

#[test]
fn enumerate_z6() {
    let run = bcinv(&["enumerate", "--ring", "zn:6"]);
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["cardinality"], 6);
    assert_eq!(v["units"], serde_json::json!(["1", "5"]));
    assert_eq!(v["idempotents"], serde_json::json!(["0", "1", "3", "4"]));
    let regular = v["regular"].as_array().unwrap();
    assert_eq!(regular.len(), 6);
    assert_eq!(regular[2], serde_json::json!({"element": "2", "inner_inverses": 2}));
}

#[test]
fn crosscheck_m2_z2() {
    let run = bcinv(&["crosscheck", "--p", "2", "--k", "2"]);
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["tuples_checked"], 4096);
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn sampled_verify_is_seeded() {
    let args = ["verify", "--ring", "mat:q:2", "--suite", "thm-fiveway", "--seed", "42"];
    let strip = |run: Run| {
        let mut v = json(&run);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let first = strip(bcinv(&args));
    assert_eq!(first["seed"], 42);
    assert_eq!(first["mode"], "sampled");
    assert_eq!(first, strip(bcinv(&args)));
}

#[test]
fn table_ring_from_file() {
    let dir = std::env::temp_dir().join(format!("bcinv-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z2.json");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, r#"{{"order":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"zero":0,"one":1}}"#).unwrap();
    let spec = format!("table:{}", path.display());
    let v = json(&bcinv(&["compute", "--ring", &spec, "--op", "bc_inverse", "--a", "1", "--b", "1", "--c", "1"]));
    assert_eq!(v["value"], "1");
    let run = bcinv(&["compute", "--ring", &spec, "--op", "moore_penrose", "--a", "1"]);
    assert_eq!(run.code, 1);
    assert_eq!(json(&run)["error"], "NoInvolution");
    let run = bcinv(&["verify", "--ring", &spec, "--suite", "all"]);
    assert_eq!(run.code, 0);
    assert!(!run.stdout.contains("lemma-star-duality"));
    std::fs::remove_dir_all(&dir).unwrap();
}
