//! The installed binary: file formats, exit codes and the documented examples.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn adjlabel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjlabel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path_str(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn json(o: &Output) -> serde_json::Value {
    assert_eq!(
        o.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_encode_decode_roundtrip() {
    let dir = TempDir::new().unwrap();
    let graph = path_str(&dir, "g.txt");
    let o = adjlabel(&[
        "gen",
        "--family",
        "random_gnp",
        "--n",
        "12",
        "--p",
        "0.4",
        "--seed",
        "3",
        "--out",
        &graph,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g = adjlabel::Graph::parse(&std::fs::read_to_string(&graph).unwrap()).unwrap();

    let pairs: Vec<String> = (0..12)
        .flat_map(|u| (0..12).map(move |v| format!("{u},{v}")))
        .collect();
    let pairs = pairs.join(";");
    for scheme in ["interval", "degeneracy", "auto"] {
        let labels = path_str(&dir, &format!("{scheme}.jsonl"));
        let o = adjlabel(&[
            "encode", "--in", &graph, "--scheme", scheme, "--out", &labels,
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("max_bits="));
        let o = adjlabel(&["decode", "--labels", &labels, "--pairs", &pairs]);
        assert_eq!(o.status.code(), Some(0));
        for line in stdout(&o).lines() {
            let f: Vec<&str> = line.split(' ').collect();
            let (u, v): (usize, usize) = (f[0].parse().unwrap(), f[1].parse().unwrap());
            assert_eq!(f[2] == "true", g.has_edge(u, v), "{scheme} {line}");
        }
    }
}

#[test]
fn encode_reports_parameters_and_picks_schemes() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let o = adjlabel(&["encode", "--in", &p4, "--scheme", "interval"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("k=1") && err.contains("k_P="), "{err}");
    assert!(stdout(&o).starts_with("{\"n\":4,\"scheme\":\"interval\"}\n"));

    let tree = write(&dir, "tree.txt", "5 4\n0 1\n0 2\n2 3\n2 4\n");
    let o = adjlabel(&["encode", "--in", &tree, "--scheme", "auto"]);
    assert!(stdout(&o).starts_with("{\"n\":5,\"scheme\":\"degeneracy\"}"));

    // edgeless: every interval label carries m_v = 0
    let empty = write(&dir, "empty.txt", "3 0\n");
    let labels = path_str(&dir, "empty.jsonl");
    let o = adjlabel(&[
        "encode", "--in", &empty, "--scheme", "interval", "--out", &labels,
    ]);
    assert!(stdout(&o).contains("k=0"));
    let file =
        adjlabel::labeling::read_label_file(&std::fs::read_to_string(&labels).unwrap()).unwrap();
    for l in &file.labels {
        assert_eq!(
            adjlabel::labeling::parse_interval(l)
                .unwrap()
                .intervals
                .len(),
            0
        );
    }
}

#[test]
fn analyze_examples() {
    let dir = TempDir::new().unwrap();
    let c8 = path_str(&dir, "c8.txt");
    adjlabel(&["gen", "--family", "cycle", "--n", "8", "--out", &c8]);
    let r = json(&adjlabel(&[
        "analyze",
        "--in",
        &c8,
        "--crossing",
        "--contiguity",
    ]));
    let c = &r["crossing"];
    assert!(c["path_crossing"].as_u64().unwrap() <= 2 * c["tree_crossing"].as_u64().unwrap());
    assert_eq!(c["factor_two_holds"], true);
    assert_eq!(c["certificate_holds"], true);
    for key in [
        "n",
        "num_sets",
        "tree_crossing",
        "path_crossing",
        "log_weight_bound",
        "elapsed_ms",
    ] {
        assert!(c.get(key).is_some(), "{key}");
    }
    assert_eq!(
        r["contiguity"]["ordering"]
            .as_str()
            .unwrap()
            .split(' ')
            .count(),
        8
    );

    let k5 = path_str(&dir, "k5.txt");
    adjlabel(&["gen", "--family", "complete", "--n", "5", "--out", &k5]);
    assert_eq!(
        json(&adjlabel(&["analyze", "--in", &k5, "--vcdim"]))["vc_dimension"],
        1
    );

    let empty = write(&dir, "e.txt", "6 0\n");
    assert_eq!(
        json(&adjlabel(&["analyze", "--in", &empty, "--contiguity"]))["contiguity"]["k"],
        0
    );

    let sets = write(&dir, "s.txt", "3 4\n1100\n0110\n0011\n");
    let r = json(&adjlabel(&[
        "analyze",
        "--sets",
        &sets,
        "--vcdim",
        "--nu",
        "2",
        "--crossing",
    ]));
    assert_eq!(r["num_sets"], 3);
    assert_eq!(r["nu"]["exact"], true);

    let big = path_str(&dir, "big.txt");
    adjlabel(&[
        "gen",
        "--family",
        "random_gnp",
        "--n",
        "100",
        "--p",
        "0.1",
        "--out",
        &big,
    ]);
    let r = json(&adjlabel(&[
        "analyze",
        "--in",
        &big,
        "--crossing",
        "--sample-pairs",
        "50",
    ]));
    assert_eq!(r["crossing"]["sampled"], true);
    assert!(r["crossing"]["bound"].is_null());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "3 1\n0 7\n");
    let o = adjlabel(&["encode", "--in", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(
        adjlabel(&["encode", "--in", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(2)
    );

    let g = write(&dir, "g.txt", "3 1\n0 1\n");
    let labels = path_str(&dir, "l.jsonl");
    adjlabel(&["encode", "--in", &g, "--out", &labels]);
    assert_eq!(
        adjlabel(&["decode", "--labels", &labels, "--pairs", "0,5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        adjlabel(&["decode", "--labels", &labels, "--pairs", "0;1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        adjlabel(&["bench", "--families", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(adjlabel(&["frobnicate"]).status.code(), Some(2));

    // over budget without a sampling fallback
    let p = path_str(&dir, "p.txt");
    adjlabel(&["gen", "--family", "path", "--n", "64", "--out", &p]);
    let o = adjlabel(&["analyze", "--in", &p, "--nu", "12", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--nu-trials"));
    let r = json(&adjlabel(&[
        "analyze",
        "--in",
        &p,
        "--nu",
        "12",
        "--budget",
        "1000",
        "--nu-trials",
        "200",
    ]));
    assert_eq!(r["nu"]["exact"], false);
}

#[test]
fn verify_suites_pass() {
    for suite in ["packing", "labels", "subdivision"] {
        let o = adjlabel(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o)
            .lines()
            .filter(|l| !l.starts_with(' '))
            .all(|l| l.starts_with("PASS")));
    }
}

#[test]
fn bench_csv_shape() {
    let dir = TempDir::new().unwrap();
    let out = path_str(&dir, "b.csv");
    let o = adjlabel(&[
        "bench",
        "--families",
        "path,star",
        "--sizes",
        "16,32,64",
        "--out",
        &out,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(Path::new(&out)).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,seed,d_degeneracy,k_T,k_P,k_ctg,interval_bits,degeneracy_bits,elapsed_ms"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    for r in rows.iter().filter(|r| r[0] == "path") {
        assert!(r[6].parse::<usize>().unwrap() <= 2, "{r:?}");
        assert_eq!(r[9], "0");
    }
}
