use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bracoid(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bracoid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(input) = stdin {
            pipe.write_all(input.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let r = bracoid(args, stdin);
    assert_eq!(r.code, 0, "{args:?} failed: {}", r.stderr);
    r.stdout
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn family(n: usize, d: usize) -> String {
    ok(&["family", "--n", &n.to_string(), "--d", &d.to_string()], None)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_d24_over_c4() {
    let report = parse(&ok(&["classify"], Some(&family(12, 4))));
    assert_eq!(report["almost_classical"], serde_json::json!([[0, 3, 6, 9]]));
    let complements = report["complements"].as_array().unwrap();
    assert_eq!(complements.len(), 4);
    assert_eq!(complements.iter().filter(|c| c["is_normal"] == false).count(), 3);
}

#[test]
fn classify_d18_over_c3_has_no_complement() {
    let r = bracoid(&["classify", "-"], Some(&family(9, 3)));
    assert_eq!(r.code, 0);
    let report = parse(&r.stdout);
    for key in ["contains_brace", "almost_brace", "almost_classical", "complements"] {
        assert_eq!(report[key], serde_json::json!([]), "{key}");
    }
}

#[test]
fn text_output_uses_labels() {
    let text = ok(&["classify", "--format", "text"], Some(&family(12, 4)));
    assert!(text.contains("almost classical with respect to:\n  {e, r^3, r^6, r^9}"), "{text}");
    let table = ok(&["validate", "--format", "text"], Some(&family(4, 4)));
    assert!(table.contains("η^3"));
}

#[test]
fn corrupted_solution_fails_with_a_witness() {
    let sol = ok(&["solve", "--complement", "0,1,2,3"], Some(&family(4, 4)));
    let mut v = parse(&sol);
    v["r"][1][2] = serde_json::json!([0, 0]);
    let r = bracoid(&["verify-ybe"], Some(&v.to_string()));
    assert_eq!(r.code, 2);
    let err = parse(&r.stderr);
    assert_eq!(err["code"], "BraidRelationFails");
    assert_eq!(err["witness"]["triple"].as_array().unwrap().len(), 3);
    assert!(r.stdout.is_empty());
}

#[test]
fn solutions_pass_verification_unchanged() {
    let sol = ok(&["solve", "--complement", "0,2,5,7", "--bracoid", "-"], Some(&family(4, 4)));
    assert_eq!(ok(&["verify-ybe"], Some(&sol)), sol);
    assert_eq!(parse(&sol)["flags"]["braid_verified"], true);
}

#[test]
fn output_is_deterministic() {
    let input = family(12, 4);
    let first = ok(&["classify"], Some(&input));
    assert_eq!(first, ok(&["classify"], Some(&input)));
    assert_eq!(first, ok(&["classify", "--parallel"], Some(&input)));
    let g = r#"{"order":4,"table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#;
    let path = scratch("v4.json", g);
    let p = path.to_str().unwrap();
    let once = ok(&["enumerate-ac", "--additive", p], None);
    assert_eq!(once, ok(&["enumerate-ac", "--additive", p, "--parallel"], None));
    let report = parse(&once);
    assert_eq!(report["count"], 4);
    assert_eq!(report["oracle_count"], 4);
}

#[test]
fn commands_compose_through_pipes() {
    let brace = ok(&["envelope", "--complement", "0,1,2,3,4,5"], Some(&family(6, 6)));
    let report = parse(&ok(&["classify"], Some(&brace)));
    assert_eq!(report["essentially_brace"], true);
    let reduced = ok(&["reduce"], Some(&family(9, 3)));
    assert_eq!(parse(&ok(&["validate"], Some(&reduced)))["action"], parse(&reduced)["action"]);
    let emb = ok(&["embedding"], Some(&family(6, 6)));
    assert_eq!(ok(&["translate"], Some(&emb)), emb);
    let mut beta_only = parse(&emb);
    beta_only["maps"] = serde_json::json!({"beta": beta_only["maps"]["beta"].clone()});
    assert_eq!(ok(&["translate"], Some(&beta_only.to_string())), emb);
}

#[test]
fn induce_with_explicit_identification() {
    let outer = scratch("outer.json", &family(12, 4));
    let inner = scratch("inner.json", &family(3, 3));
    let args = [
        "induce",
        "--outer",
        outer.to_str().unwrap(),
        "--inner",
        inner.to_str().unwrap(),
        "--complement",
        "0,3,6,9",
        "--identification",
        "0,4,8,12,16,20",
    ];
    let b = parse(&ok(&args, None));
    assert_eq!(b["additive"]["order"], 12);
    assert_eq!(b["provenance"]["construction"], "induce");
    let c = parse(&ok(&["classify"], Some(&b.to_string())));
    assert_eq!(c["stabilizer"], serde_json::json!([0, 12]));
}

#[test]
fn compare_reports_facts() {
    let first = scratch("first.json", &ok(&["solve", "--complement", "0,1,2,3"], Some(&family(4, 4))));
    let second = scratch("second.json", &ok(&["solve", "--complement", "0,2,5,7"], Some(&family(4, 4))));
    let report = parse(&ok(&["compare", first.to_str().unwrap(), second.to_str().unwrap()], None));
    assert_eq!(report["equal"], false);
    assert_eq!(report["isomorphism"]["status"], "none");
    assert_eq!(report["invariants"][0]["diagonal_fixed_points"], 4);
    assert_eq!(report["invariants"][1]["diagonal_fixed_points"], 2);
}

#[test]
fn input_errors_exit_with_one() {
    let r = bracoid(&["classify"], Some("{not json"));
    assert_eq!(r.code, 1);
    assert_eq!(parse(&r.stderr)["code"], "Parse");
    let r = bracoid(&["family", "--n", "4", "--d", "3"], None);
    assert_eq!(r.code, 1);
    assert_eq!(parse(&r.stderr)["code"], "NotADivisor");
    assert_eq!(bracoid(&["no-such-command"], None).code, 1);
    let r = bracoid(&["classify", "--order-cap", "4"], Some(&family(12, 4)));
    assert_eq!(parse(&r.stderr)["code"], "OrderCapExceeded");
    assert_eq!(r.code, 1);
}

#[test]
fn invalid_bracoids_exit_with_two() {
    let mut b = parse(&family(4, 4));
    b["action"][1] = b["action"][2].clone();
    let r = bracoid(&["validate"], Some(&b.to_string()));
    assert_eq!(r.code, 2, "{}", r.stderr);
    assert_eq!(parse(&r.stderr)["code"], "NotAnAction");
    // A row that is not a permutation is malformed input.
    b["action"][1][0] = serde_json::json!(1);
    assert_eq!(bracoid(&["validate"], Some(&b.to_string())).code, 1);
    let r = bracoid(&["solve", "--complement", "0,4"], Some(&family(4, 4)));
    assert_eq!(r.code, 2);
    assert_eq!(parse(&r.stderr)["code"], "NotAComplement");
}

#[test]
fn config_file_sets_defaults_and_flags_override() {
    let cfg = scratch("bracoid.toml", "order_cap = 4\nformat = \"text\"\n");
    let c = cfg.to_str().unwrap();
    let r = bracoid(&["classify", "--config", c], Some(&family(12, 4)));
    assert_eq!(r.code, 1);
    let text = ok(&["classify", "--config", c, "--order-cap", "64"], Some(&family(12, 4)));
    assert!(text.starts_with("stabilizer:"));
    let bad = scratch("bad.toml", "cap = 1\n");
    assert_eq!(bracoid(&["family", "--n", "2", "--d", "2", "--config", bad.to_str().unwrap()], None).code, 1);
}
