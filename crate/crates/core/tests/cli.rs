use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("braidcluster-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const W2: &str = "s1 s1 r1 S1 r1 S1 r1 s1 s1 r1 S1 r1 S1 r1";
const W3: &str = "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1";

#[test]
fn invariant_examples() {
    let o = bin(&["invariant", "--group", "vb", "-n", "2", "--word", "s1 r1 s1", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["image"], serde_json::json!(["-6/5", "-5/3", "-5/3", "-6/5"]));

    let o = bin(&[
        "invariant",
        "--group",
        "fvb",
        "-n",
        "3",
        "--word",
        "s2 r1 s1 r2",
        "--json",
    ]);
    assert_eq!(json(&o)["image"], serde_json::json!(["-5", "4/11", "-11/5"]));

    let o = bin(&["invariant", "--group", "b", "-n", "2", "--word", "r1"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not allowed in B"));
}

#[test]
fn base_override_and_retry() {
    let o = bin(&[
        "invariant",
        "--group",
        "vb",
        "-n",
        "2",
        "--word",
        "s1",
        "--base",
        "-2,1,1,1",
        "--seed",
        "5",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert!(v["base_retries"].as_u64().unwrap() >= 1);
    assert_ne!(v["base"], serde_json::json!(["-2", "1", "1", "1"]));

    assert_eq!(
        code(&bin(&[
            "invariant",
            "--group",
            "vb",
            "-n",
            "2",
            "--word",
            "s1",
            "--base",
            "1,2"
        ])),
        1
    );
    assert_eq!(
        code(&bin(&[
            "invariant",
            "--group",
            "vb",
            "-n",
            "2",
            "--word",
            "s1",
            "--base",
            "1,x,2,2"
        ])),
        1
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "invariant",
        "--group",
        "vb",
        "-n",
        "2",
        "--word",
        "s1",
        "--base",
        "0,1,1,1",
        "--seed",
        "42",
        "--json",
    ];
    let (a, b) = (bin(&args), bin(&args));
    assert_eq!(a.stdout, b.stdout);
    let other = bin(&[
        "invariant",
        "--group",
        "vb",
        "-n",
        "2",
        "--word",
        "s1",
        "--base",
        "0,1,1,1",
        "--seed",
        "43",
        "--json",
    ]);
    assert_ne!(json(&a)["base"], json(&other)["base"]);
}

#[test]
fn word_file_keeps_input_order() {
    let lines: Vec<String> = (1..=40).map(|k| vec!["s1 r1"; k].join(" ")).collect();
    let text = format!("# powers of s1 r1\n{}\nr3\n", lines.join("\n"));
    let path = scratch("words.txt", &text);
    let o = bin(&[
        "invariant",
        "--group",
        "vb",
        "-n",
        "2",
        "--word-file",
        path.to_str().unwrap(),
        "--json",
    ]);
    // r3 is out of range on two strands
    assert_eq!(code(&o), 1);
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 41);
    for (k, row) in rows.iter().take(40).enumerate() {
        assert_eq!(row["line"], k + 2);
        assert_eq!(row["word"].as_str().unwrap().split(' ').count(), 2 * (k + 1));
    }
    assert!(rows[40]["error"].as_str().unwrap().contains("out of range"));
}

#[test]
fn corpus_entries_carry_their_group() {
    let path = scratch(
        "corpus.json",
        &serde_json::json!([
            {"name": "w1", "n": 2, "group": "VB", "word": "s1 r1 s1"},
            {"name": "w4", "n": 3, "group": "FB", "word": "s1 s2 s1 s2"},
            {"name": "w5", "n": 3, "group": "FVB", "word": "s2 r1 s1 r2"}
        ])
        .to_string(),
    );
    let o = bin(&["invariant", "--corpus", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v[0]["name"], "w1");
    assert_eq!(v[1]["image"], serde_json::json!(["-2/5", "-10/7", "7"]));
    assert_eq!(v[2]["group"], "FVB");

    let bad = scratch("bad.json", r#"{"name": "w1"}"#);
    assert_eq!(code(&bin(&["invariant", "--corpus", bad.to_str().unwrap()])), 1);
}

#[test]
fn distinguish_verdicts() {
    let o = bin(&["distinguish", "--group", "vb", "-n", "2", W2, "", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdict"], "distinct");

    let o = bin(&["distinguish", "--group", "vb", "-n", "3", W3, "", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["image2"], serde_json::json!(["1", "2", "2", "1", "1", "2"]));

    let o = bin(&[
        "distinguish",
        "--group",
        "vb",
        "-n",
        "2",
        "s1 r1 s1",
        "s1 r1 s1",
        "--json",
    ]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["verdict"], "inconclusive-at-base");

    let o = bin(&[
        "distinguish",
        "--group",
        "vb",
        "-n",
        "2",
        "s1 r1 s1",
        "s1 r1 s1",
        "--symbolic",
        "--json",
    ]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["verdict"], "equal-in-image");
    assert_eq!(json(&o)["symbolic"]["holds"], true);
}

#[test]
fn distinguish_symbolic_limits() {
    let long = ["s1"; 7].join(" ");
    let o = bin(&["distinguish", "--group", "vb", "-n", "2", &long, &long, "--symbolic"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the symbolic limit 12"));
    let o = bin(&[
        "distinguish",
        "--group",
        "vb",
        "-n",
        "2",
        &long,
        &long,
        "--symbolic",
        "--max-symbolic-len",
        "14",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_groups() {
    for (g, n) in [("vb", "3"), ("fvb", "4"), ("fb", "2"), ("b", "4")] {
        let o = bin(&["verify", "--group", g, "-n", n, "--json"]);
        assert_eq!(code(&o), 0, "{g}{n}: {}", String::from_utf8_lossy(&o.stdout));
        assert_eq!(json(&o)["passed"], true);
    }
    let v = json(&bin(&["verify", "--group", "fb", "-n", "2", "--json"]));
    assert_eq!(v["relations"].as_array().unwrap().len(), 1);
    let v = json(&bin(&["verify", "--group", "vb", "-n", "4", "--json"]));
    assert_eq!(v["forbidden"].as_array().unwrap().len(), 4);
    assert_eq!(code(&bin(&["verify", "--group", "vb", "-n", "7"])), 1);
    assert_eq!(code(&bin(&["verify", "--group", "vb"])), 1);
}

#[test]
fn mutate_scripts() {
    let o = bin(&["mutate", "--quiver", "2", "--script", "1,1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let x: Vec<String> = (1..=7).map(|k| format!("x{k}")).collect();
    assert_eq!(v["x"], serde_json::json!(x));

    let v = json(&bin(&["mutate", "--quiver", "2", "--script", "7", "--json"]));
    let b = &v["B"];
    for i in 0..7 {
        assert_eq!(b[i][6], -bin_entry(i, 6));
        assert_eq!(b[6][i], -bin_entry(6, i));
    }
    assert_eq!(b[4][5], 1);
    assert_eq!(v["x"][6], "(x5 + x6)/x7");

    let o = bin(&["mutate", "--quiver", "2", "--script", "0"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
}

fn bin_entry(i: usize, j: usize) -> i64 {
    const B: [[i64; 7]; 7] = [
        [0, 1, -1, 0, 0, 0, 0],
        [-1, 0, 0, 1, 0, 0, 0],
        [1, 0, 0, -1, 0, 0, 0],
        [0, -1, 1, 0, 1, -1, 0],
        [0, 0, 0, -1, 0, 0, 1],
        [0, 0, 0, 1, 0, 0, -1],
        [0, 0, 0, 0, -1, 1, 0],
    ];
    B[i][j]
}

#[test]
fn mutate_seed_files() {
    let seed = scratch(
        "seed.json",
        r#"{"n_vertices": 2, "x": ["3", "-1"], "B": [[0, -1], [1, 0]]}"#,
    );
    let o = bin(&[
        "mutate",
        "--seed-file",
        seed.to_str().unwrap(),
        "--script",
        "2",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    // x2' = (1 + x1) / x2 = -4
    assert_eq!(json(&o)["x"], serde_json::json!(["3", "-4"]));
    // x1' = (x2 + 1) / x1 = 0: singular
    assert_eq!(
        code(&bin(&[
            "mutate",
            "--seed-file",
            seed.to_str().unwrap(),
            "--script",
            "1"
        ])),
        2
    );

    let y = scratch(
        "yseed.json",
        r#"{"n_vertices": 2, "y": ["y1", "2"], "B": [[0, 1], [-1, 0]]}"#,
    );
    let o = bin(&["mutate", "--seed-file", y.to_str().unwrap(), "--script", "1", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["y"][0], "1/y1");

    let bad = scratch(
        "bad-seed.json",
        r#"{"n_vertices": 2, "x": ["1", "1"], "B": [[0, 1], [1, 0]]}"#,
    );
    assert_eq!(
        code(&bin(&["mutate", "--seed-file", bad.to_str().unwrap(), "--script", "1"])),
        1
    );
}

#[test]
fn reproduce_table() {
    let o = bin(&["reproduce", "--json"]);
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    assert!(rows.as_array().unwrap().iter().all(|r| r["passed"] == true));
    let plain = bin(&["reproduce"]);
    assert!(String::from_utf8_lossy(&plain.stdout)
        .lines()
        .all(|l| l.starts_with("PASS")));
}

#[test]
fn config_file_supplies_defaults() {
    let cfg = scratch("run.json", r#"{"group": "VB", "n": 2, "format": "json"}"#);
    let o = bin(&["invariant", "--config", cfg.to_str().unwrap(), "--word", "s1 r1 s1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["group"], "VB");
    let bad = scratch("bad-run.json", r#"{"groups": "VB"}"#);
    assert_eq!(
        code(&bin(&["invariant", "--config", bad.to_str().unwrap(), "--word", "s1"])),
        1
    );
}
