use std::process::{Command, Output};

fn qtorus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtorus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

/// CSV text with the trailing `elapsed_ms` column removed.
fn without_timing(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| l.rsplit_once(',').map_or(l, |(head, _)| head).to_string())
        .collect()
}

#[test]
fn gen_writes_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    let out = qtorus(&["gen", "3", "8", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("p torus 3 8 4"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 48);
}

#[test]
fn gen_degenerate_exits_2() {
    let out = qtorus(&["gen", "2", "4", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate: parallel vertical edges"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qtorus(&["gen", "3"]).status.code(), Some(2));
    assert_eq!(qtorus(&["verify", "--class", "nonsense"]).status.code(), Some(2));
}

#[test]
fn analyze_matching_sources() {
    let out = qtorus(&["analyze", "4", "7", "5", "--matching", "M1-vertical"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["witness"]["value"], 8);
    assert_eq!(v["witness"]["forcing_set"].as_array().unwrap().len(), 8);

    let v = json(&qtorus(&["analyze", "4", "10", "4", "--matching", "M1-horizontal"]));
    assert_eq!(v["witness"]["value"], 11);
    assert_eq!(v["predicted"], 11);

    let v = json(&qtorus(&["analyze", "2", "4", "2"]));
    assert_eq!(v["computed_max"], 3);
    assert_eq!(v["pm_count"], 24);
}

#[test]
fn analyze_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let matching = dir.path().join("m.txt");
    qtorus(&["gen", "2", "5", "1", "--out", graph.to_str().unwrap()]);
    let v = json(&qtorus(&["analyze", "--graph-file", graph.to_str().unwrap()]));
    assert_eq!(v["computed_max"], 3);
    let lines: Vec<String> = v["witness"]["matching"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap().to_string())
        .collect();
    std::fs::write(&matching, lines.join("\n")).unwrap();
    let out = qtorus(&[
        "analyze",
        "2",
        "5",
        "1",
        "--matching",
        "from-file",
        "--matching-file",
        matching.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["witness"]["value"], 3);

    std::fs::write(&matching, "e 0 0 0 1 h\n").unwrap();
    let out = qtorus(&[
        "analyze", "2", "5", "1", "--matching", "from-file", "--matching-file",
        matching.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_budget() {
    let out = qtorus(&["analyze", "6", "7", "2", "--max-vertices", "36"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let args = ["verify", "--class", "EO-even", "--class", "EE-odd", "--max-vertices", "16"];
    let one = qtorus(&[&["--threads", "1"][..], &args[..]].concat());
    let many = qtorus(&[&["--threads", "4"][..], &args[..]].concat());
    assert!(one.status.success());
    assert_eq!(without_timing(&stdout(&one)), without_timing(&stdout(&many)));
    let text = stdout(&one);
    assert_eq!(text.lines().next(), Some("n,m,r,class,predicted,F,f,pm_count,verdict,elapsed_ms"));
    assert!(text.contains("2,5,2,EO-even,3,3,"));
}

#[test]
fn verify_examples() {
    let text = stdout(&qtorus(&["verify", "--class", "OE-even", "--max-vertices", "16"]));
    assert!(text.contains("3,4,2,OE-even,3,3,"));
    assert!(text.contains("3,4,4,OE-even,4,4,"));
    let out = qtorus(&["verify", "--class", "EE-even", "--max-vertices", "20", "--format", "json"]);
    let v = json(&out);
    let find = |n: u64, m: u64, r: u64| {
        v["records"]
            .as_array()
            .unwrap()
            .iter()
            .find(|rec| rec["n"] == n && rec["m"] == m && rec["r"] == r)
            .unwrap()
            .clone()
    };
    assert_eq!(find(2, 6, 2)["F"], 4);
    assert_eq!(find(4, 4, 4)["F"], 4);
    assert_eq!(find(4, 4, 4)["verdict"], "PASS");
    // F(T(2,8,4)) = 5 exceeds the closed form, which is proven only for n' >= 2
    assert_eq!(find(2, 8, 4)["verdict"], "FAIL");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_over_budget() {
    let out = qtorus(&["verify", "--max-vertices", "40"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explore_open_rows() {
    let text = stdout(&qtorus(&["explore-open", "--n", "3", "--m", "6", "--r", "1,3,5"]));
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.contains(",OE-odd,Unknown,") && l.contains(",OPEN,")));
    let empty = stdout(&qtorus(&["explore-open", "--n", "3", "--m", "5"]));
    assert_eq!(empty, "n,m,r,class,predicted,F,f,pm_count,verdict,elapsed_ms\n");
}

#[test]
fn star_and_classify() {
    let v = json(&qtorus(&["star", "3", "12", "8"]));
    assert_eq!(v["ok"], true);
    assert_eq!(v["check"]["params"]["target"], serde_json::json!({"n": 4, "m": 9, "r": 3}));
    let v = json(&qtorus(&["classify", "5", "6", "3"]));
    assert_eq!(v["class"], "OE-odd");
    assert_eq!(v["predicted"], "Unknown");
    assert_eq!(qtorus(&["star", "3", "5", "2"]).status.code(), Some(2));
}
