use std::process::{Command, Output};

fn genus2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genus2")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn add_prints_result_case_and_counts() {
    let o = genus2(&["add", "u=[0,6,1] v=[1,2]", "u=[2,3,1] v=[5,5]"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "u=[1,0,1] v=[3,6]");
    assert_eq!(lines[1], "case: DisjointGeneric");
    assert!(lines[2].starts_with("field ops: "));
}

#[test]
fn json_add_matches_text_add() {
    let o = genus2(&["--json", "add", r#"{"u":[0,6,1],"v":[1,2]}"#, "u=[2,3,1];v=[5,5]"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["u"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["v"], serde_json::json!([3, 6]));
    assert_eq!(v["case"], "DisjointGeneric");
    assert_eq!(v["counts"]["case_tally"]["DisjointGeneric"], 1);
}

#[test]
fn double_and_mul_agree() {
    let d = "u=[0,6,1] v=[1,2]";
    let doubled = stdout(&genus2(&["double", d]));
    let times_two = stdout(&genus2(&["mul", "2", d]));
    assert_eq!(doubled.lines().next(), times_two.lines().next());
    // |J| = 50 on the default curve
    let o = genus2(&["mul", "50", d]);
    assert_eq!(stdout(&o).lines().next(), Some("u=[1] v=[]"));
}

#[test]
fn verify_is_deterministic_and_clean() {
    let a = genus2(&["--p", "11", "--seed", "3", "verify"]);
    let b = genus2(&["--p", "11", "--seed", "3", "verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("mismatches: 0"));

    let j = genus2(&["--json", "verify"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["group_order"], 50);
    assert_eq!(v["pairs"], 2500);
    assert_eq!(v["mismatches"], serde_json::json!([]));
}

#[test]
fn verify_refuses_above_bound() {
    let o = genus2(&["--p", "1009", "verify"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("exceeds the enumeration bound"), "{err}");
    // the bound is a flag, not a constant
    assert_eq!(genus2(&["--p", "13", "--bound", "12", "verify"]).status.code(), Some(1));
}

#[test]
fn curve_file_is_read() {
    let dir = std::env::temp_dir().join(format!("genus2-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curve.txt");
    std::fs::write(&path, "p=7\nf=[1,0,0,0,0,1]\n").unwrap();
    let from_file = genus2(&["--curve", path.to_str().unwrap(), "double", "u=[0,6,1] v=[1,2]"]);
    let default = genus2(&["double", "u=[0,6,1] v=[1,2]"]);
    assert_eq!(from_file.stdout, default.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bench_reports_no_mismatches() {
    let o = genus2(&["--json", "bench", "--iterations", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["iterations"], 40);
    assert_eq!(v["cantor"]["additions"], 40);
}

#[test]
fn figure_writes_svg() {
    let path = std::env::temp_dir().join(format!("genus2-cli-fig-{}.svg", std::process::id()));
    let o = genus2(&["figure", "--case", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains("<svg") && svg.trim_end().ends_with("</svg>"));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(genus2(&["figure", "--case", "4", "--output", "x.svg"]).status.code(), Some(1));
}

#[test]
fn bad_input_exits_one() {
    for args in [
        &["add", "u=[0,6,1] v=[1,5]", "u=[1] v=[]"][..],
        &["add", "u=[0,6,1]"],
        &["--p", "15", "verify"],
        &["--p", "5", "--f", "[1,0,0,0,0,1]", "verify"],
        &["nonsense"],
    ] {
        assert_eq!(genus2(args).status.code(), Some(1), "{args:?}");
    }
}
