use std::path::Path;
use std::process::{Command, Output};

use grouplat::{BoundedLattice, SubgroupSet};
use serde_json::Value;

fn grouplat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouplat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    format!("file:{}", p.display())
}

#[test]
fn lattice_text_lists_breaking_point() {
    let o = grouplat(&["lattice", "--group", "S3", "--which", "normal-centralizers"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("(3 nodes)"), "{out}");
    assert!(out.contains("breaking points: #1 A3"), "{out}");
}

#[test]
fn trivial_group_dot() {
    let o = grouplat(&[
        "lattice",
        "--group",
        "C1",
        "--which",
        "subgroups",
        "--format",
        "dot",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("digraph"));
    assert!(out.contains("rankdir=BT"));
    assert_eq!(out.matches("[label=").count(), 1);
    assert!(!out.contains("->"));
}

#[test]
fn dot_edges_point_up() {
    let o = grouplat(&[
        "lattice",
        "--group",
        "S3",
        "--which",
        "subgroups",
        "--format",
        "dot",
    ]);
    let out = stdout(&o);
    assert!(out.contains("n0 [label=\"1:()\"];"), "{out}");
    assert!(out.contains("n0 -> n1;"));
    assert_eq!(out.matches("->").count(), 8);
}

#[test]
fn dot_hashes_large_nodes() {
    let o = grouplat(&[
        "lattice",
        "--group",
        "S4",
        "--which",
        "centralizers",
        "--format",
        "dot",
    ]);
    let out = stdout(&o);
    let top = out.lines().find(|l| l.contains("[label=\"24:")).unwrap();
    let body = top.split("24:").nth(1).unwrap().trim_end_matches("\"];");
    assert_eq!(body.len(), 12);
    assert!(body.chars().all(|c| c.is_ascii_hexdigit()));
}

#[test]
fn q8_centralizer_json() {
    let o = grouplat(&[
        "lattice",
        "--group",
        "Q8",
        "--which",
        "centralizers",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lattice"]["size"], 5);
    assert_eq!(v["lattice"]["breaking_points"], serde_json::json!([]));
    assert_eq!(v["group"]["center_order"], 2);
    assert_eq!(v["group"]["abelian"], false);
    assert!(v["tool_version"].as_str().unwrap().starts_with("grouplat "));
}

#[test]
fn json_lattice_round_trips() {
    for (group, which) in [
        ("S3", "normal-centralizers"),
        ("S4", "normal-centralizers"),
        ("D4", "subgroups"),
        ("A4", "subgroups"),
        ("S4", "centralizers"),
        ("C2 x C6", "subgroups"),
    ] {
        let o = grouplat(&[
            "lattice", "--group", group, "--which", which, "--format", "json",
        ]);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let order = v["group"]["order"].as_u64().unwrap() as usize;
        let sets: Vec<SubgroupSet> = v["lattice"]["nodes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|n| {
                SubgroupSet::from_indices(
                    order,
                    n["indices"]
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(|i| i.as_u64().unwrap() as usize),
                )
            })
            .collect();
        let lat = BoundedLattice::build(sets).unwrap();
        let ids = |key: &str| -> Vec<usize> {
            v["lattice"][key]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap() as usize)
                .collect()
        };
        let pairs: Vec<(usize, usize)> = v["lattice"]["decompositions"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| {
                (
                    p[0].as_u64().unwrap() as usize,
                    p[1].as_u64().unwrap() as usize,
                )
            })
            .collect();
        assert_eq!(
            lat.breaking_points(),
            ids("breaking_points"),
            "{group} {which}"
        );
        assert_eq!(lat.interval_decompositions(), pairs, "{group} {which}");
        assert_eq!(lat.atoms(), ids("atoms"));
        assert_eq!(
            lat.hasse_edges().len(),
            v["lattice"]["hasse"].as_array().unwrap().len()
        );
    }
}

#[test]
fn check_exit_codes() {
    let o = grouplat(&["check", "--group", "S4", "--claim", "theorem1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS"));

    let o = grouplat(&["check", "--group", "Q8", "--claim", "atoms-bound"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("k = 3"));

    let o = grouplat(&["check", "--group", "C6", "--claim", "atoms-bound"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("abelian"));

    let o = grouplat(&["check", "--group", "S3", "--claim", "nonsense"]);
    assert_eq!(code(&o), 2);

    let o = grouplat(&["check", "--group", "Q7", "--claim", "theorem1"]);
    assert_eq!(code(&o), 3);

    let o = grouplat(&["check", "--group", "C3 x ", "--claim", "theorem1"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("position"), "{}", stderr(&o));

    let o = grouplat(&[
        "check",
        "--group",
        "S5",
        "--claim",
        "union-argument",
        "--cap-subgroup-order",
        "60",
    ]);
    assert_eq!(code(&o), 4);

    let o = grouplat(&["lattice", "--group", "S6 x S6"]);
    assert_eq!(code(&o), 4);

    let o = grouplat(&["suite", "--max-order", "8", "--format", "dot"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn check_json_has_null_elapsed_without_timings() {
    let o = grouplat(&[
        "check", "--group", "S3", "--claim", "closure", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = &v["checks"][0];
    assert_eq!(c["claim"], "closure");
    assert_eq!(c["passed"], true);
    assert!(c["elapsed_ms"].is_null());
    assert!(v["lattice"].is_null());

    let o = grouplat(&[
        "check",
        "--group",
        "S3",
        "--claim",
        "closure",
        "--format",
        "json",
        "--timings",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"][0]["elapsed_ms"].is_number());
}

#[test]
fn search_examples() {
    let o = grouplat(&["search", "open-problem", "--max-order", "24"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("  S3 (order 6): A3\n"), "{out}");
    assert!(out.contains("  S4 (order 24): V4\n"), "{out}");

    let o = grouplat(&[
        "search",
        "capability",
        "--target",
        "Q8",
        "--max-order",
        "64",
        "--products",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("bounded search, not a proof"));
    assert!(out.contains("0 hits"));

    let o = grouplat(&[
        "search",
        "capability",
        "--target",
        "D4",
        "--max-order",
        "32",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("central-quotient-match: D8 (order 16)"));

    let o = grouplat(&["search", "capability", "--max-order", "32"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = grouplat(&[
        "info",
        "--group",
        "A4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["label"], "A4");
    assert_eq!(v["subgroup_count"], 10);
    assert_eq!(v["normal_subgroup_count"], 3);
}

#[test]
fn generator_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "s3.json",
        r#"{"degree": 3, "generators": [[1,2,0],[1,0,2]]}"#,
    );
    let o = grouplat(&["info", "--group", &spec, "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group"]["order"], 6);
    assert_eq!(v["label"], "S3");

    let spec = write(
        dir.path(),
        "bad.json",
        r#"{"degree": 3, "generators": [[1,2,0],[1,1,2]]}"#,
    );
    let o = grouplat(&["info", "--group", &spec]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("$.generators[1]"), "{}", stderr(&o));
}

#[test]
fn cayley_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "v4.json",
        r#"{"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]], "names": ["e","a","b","c"]}"#,
    );
    let o = grouplat(&["lattice", "--group", &spec, "--which", "subgroups"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("{e, a}"));

    let spec = write(
        dir.path(),
        "row.json",
        r#"{"order": 2, "table": [[0,1],[1,1]]}"#,
    );
    let o = grouplat(&["info", "--group", &spec]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("$.table[1]"), "{}", stderr(&o));

    // a commutative loop of order 5 that is not associative
    let table = "[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]";
    let spec = write(
        dir.path(),
        "loop.json",
        &format!(r#"{{"order": 5, "table": {table}}}"#),
    );
    let o = grouplat(&["info", "--group", &spec]);
    assert_eq!(code(&o), 3);
    assert!(
        stderr(&o).contains("associativity fails at ("),
        "{}",
        stderr(&o)
    );

    let o = grouplat(&["info", "--group", "file:/nonexistent/g.json"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let runs: [&[&str]; 4] = [
        &[
            "lattice",
            "--group",
            "S4",
            "--which",
            "subgroups",
            "--format",
            "json",
        ],
        &[
            "lattice",
            "--group",
            "D6",
            "--which",
            "centralizers",
            "--format",
            "dot",
        ],
        &[
            "search",
            "open-problem",
            "--max-order",
            "32",
            "--products",
            "--jobs",
            "4",
        ],
        &[
            "suite",
            "--max-order",
            "24",
            "--format",
            "json",
            "--jobs",
            "3",
        ],
    ];
    for args in runs {
        let a = grouplat(args);
        let b = grouplat(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
