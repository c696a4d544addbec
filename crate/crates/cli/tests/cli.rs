use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use compsub::graph::io::{parse_graph6_line, to_edge_list, to_graph6};
use compsub::iso::backtracking_isomorphic;
use compsub::solver::verify_certificate;
use compsub::{DecompositionCertificate, Graph};
use serde_json::Value;

fn compsub(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_compsub"))
        .args(args)
        .env_remove("COMPSUB_BRUTE_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, content).unwrap();
    p.display().to_string()
}

fn net() -> Graph {
    Graph::from_edges_unchecked(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
}

#[test]
fn decide_p4_and_certify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p4.el", "4 3\n0 1\n1 2\n2 3\n");
    let cert = dir.path().join("p4.json").display().to_string();
    let o = compsub(&["decide", &graph, "--cert-out", &cert], None);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    assert!(text(&o.stdout).contains("YES"));
    let c = DecompositionCertificate::from_json(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert!(verify_certificate(&Graph::path(4), &c));
    let o = compsub(&["certify", &graph, &cert], None);
    assert_eq!(code(&o), 0);

    // Without --cert-out the certificate is printed after the verdict.
    let o = compsub(&["decide", &graph], None);
    let out = text(&o.stdout);
    let json_start = out.find('{').unwrap();
    assert!(out[..json_start].contains("YES"));
    assert!(DecompositionCertificate::from_json(&out[json_start..]).is_ok());
}

#[test]
fn decide_c4_from_stdin_is_no() {
    let o = compsub(
        &["decide"],
        Some(&format!("{}\n", to_graph6(&Graph::cycle(4)))),
    );
    assert_eq!(code(&o), 1);
    assert!(text(&o.stdout).contains("NO"));
}

#[test]
fn unsupported_class_without_brute_force_is_unknown() {
    let edges = (0..5)
        .map(|i| (i, (i + 1) % 5))
        .chain((4..19).map(|i| (i, i + 1)));
    let g = Graph::from_edges_unchecked(20, edges);
    let o = compsub(&["decide", "--brute-limit", "0"], Some(&to_graph6(&g)));
    assert_eq!(code(&o), 2);
    assert!(text(&o.stdout).contains("UNKNOWN"));
}

#[test]
fn brute_limit_from_environment() {
    let g = Graph::from_edges_unchecked(
        10,
        (0..5)
            .map(|i| (i, (i + 1) % 5))
            .chain((4..9).map(|i| (i, i + 1))),
    );
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_compsub"))
            .args(["decide", "-"])
            .env("COMPSUB_BRUTE_LIMIT", limit)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .and_then(|mut c| {
                c.stdin
                    .take()
                    .unwrap()
                    .write_all(to_graph6(&g).as_bytes())?;
                c.wait_with_output()
            })
            .unwrap()
    };
    assert_eq!(code(&run("0")), 2);
    assert_eq!(code(&run("10")), 1);
}

fn p4_certificate(dir: &Path) -> (String, Value) {
    let graph = write(dir, "p4.el", "4 3\n0 1\n1 2\n2 3\n");
    let cert = dir.join("c.json");
    let o = compsub(
        &["decide", &graph, "--cert-out", &cert.display().to_string()],
        None,
    );
    assert_eq!(code(&o), 0);
    (
        graph,
        serde_json::from_str(&fs::read_to_string(cert).unwrap()).unwrap(),
    )
}

#[test]
fn certify_reports_tampered_iso() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "p3.el", &to_edge_list(&Graph::path(3)));
    let graph = dir.path().join("g.g6").display().to_string();
    assert_eq!(
        code(&compsub(
            &["generate", "prism", "--h", &h, "--out", &graph],
            None
        )),
        0
    );
    let g = parse_graph6_line(fs::read_to_string(&graph).unwrap().trim(), 1).unwrap();
    let cert = dir.path().join("c.json");
    let o = compsub(
        &["decide", &graph, "--cert-out", &cert.display().to_string()],
        None,
    );
    assert_eq!(code(&o), 0);
    let good = DecompositionCertificate::from_json(&fs::read_to_string(&cert).unwrap()).unwrap();
    // Swap two images so that the library rejects the result.
    let keys: Vec<usize> = good.iso.keys().copied().collect();
    let tampered = keys
        .iter()
        .flat_map(|&a| keys.iter().map(move |&b| (a, b)))
        .map(|(a, b)| {
            let mut c = good.clone();
            let (fa, fb) = (c.iso[&a], c.iso[&b]);
            c.iso.insert(a, fb);
            c.iso.insert(b, fa);
            c
        })
        .find(|c| !verify_certificate(&g, c))
        .expect("some swap breaks the isomorphism");
    let bad = write(dir.path(), "bad.json", &tampered.to_json());
    let o = compsub(&["certify", &graph, &bad], None);
    assert_eq!(code(&o), 1);
    let msg = text(&o.stdout);
    assert!(
        msg.contains("field `iso`") && msg.contains("left pair"),
        "{msg}"
    );
}

#[test]
fn certify_reports_missing_matching_edge() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, mut c) = p4_certificate(dir.path());
    c["matching"].as_array_mut().unwrap().pop();
    let bad = write(dir.path(), "bad.json", &c.to_string());
    let o = compsub(&["certify", &graph, &bad], None);
    assert_eq!(code(&o), 1);
    assert!(text(&o.stdout).contains("not perfect"));
}

#[test]
fn certify_names_missing_field() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, mut c) = p4_certificate(dir.path());
    c.as_object_mut().unwrap().remove("iso");
    let bad = write(dir.path(), "bad.json", &c.to_string());
    let o = compsub(&["certify", &graph, &bad], None);
    assert!(code(&o) > 2);
    assert!(text(&o.stderr).contains("missing field `iso`"));
}

#[test]
fn parse_errors_carry_positions() {
    let o = compsub(&["decide", "--format", "edgelist"], Some("3 1\n0 x\n"));
    assert!(code(&o) > 2);
    let err = text(&o.stderr);
    assert!(err.contains("line 2, column 3"), "{err}");
}

#[test]
fn generate_clique_prism() {
    let o = compsub(&["generate", "clique-prism", "--n", "3"], None);
    assert_eq!(code(&o), 0);
    let g = parse_graph6_line(text(&o.stdout).trim(), 1).unwrap();
    assert!(backtracking_isomorphic(&g, &net()).unwrap().is_some());
}

#[test]
fn generate_gadget_with_provenance() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.el", &to_edge_list(&Graph::path(3)));
    let b = write(dir.path(), "b.el", &to_edge_list(&Graph::path(3)));
    let out = dir.path().join("gadget.g6");
    let out_s = out.display().to_string();
    let o = compsub(
        &[
            "generate", "gadget", "--a", &a, "--b", &b, "--seed", "4", "--out", &out_s,
        ],
        None,
    );
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    let g = parse_graph6_line(fs::read_to_string(&out).unwrap().trim(), 1).unwrap();
    assert_eq!(g.order(), 12);
    let prov: Value =
        serde_json::from_str(&fs::read_to_string(format!("{out_s}.json")).unwrap()).unwrap();
    assert_eq!(prov["kind"], "gadget");
    assert_eq!(prov["gadget"]["seed"], 4);
    assert_eq!(prov["gadget"]["a_i_matching"].as_array().unwrap().len(), 3);
    assert_eq!(
        code(&compsub(&["decide", &out_s, "--brute-limit", "12"], None)),
        0
    );

    let k3 = write(dir.path(), "k3.el", &to_edge_list(&Graph::complete(3)));
    let o = compsub(
        &["generate", "gadget", "--a", &k3, "--b", &b, "--out", &out_s],
        None,
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        code(&compsub(&["decide", &out_s, "--brute-limit", "12"], None)),
        1
    );

    let c4 = write(dir.path(), "c4.el", &to_edge_list(&Graph::cycle(4)));
    let o = compsub(&["generate", "gadget", "--a", &c4, "--b", &c4], None);
    assert!(code(&o) > 2);
    assert!(text(&o.stderr).contains("a is not a split graph"));
}

#[test]
fn generate_matched_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.el", &to_edge_list(&Graph::path(5)));
    let run = |name: &str| {
        let out = dir.path().join(name).display().to_string();
        let o = compsub(
            &[
                "generate", "matched", "--h", &h, "--seed", "7", "--out", &out,
            ],
            None,
        );
        assert_eq!(code(&o), 0);
        (
            fs::read(&out).unwrap(),
            fs::read(format!("{out}.json")).unwrap(),
        )
    };
    assert_eq!(run("one.g6"), run("two.g6"));
    let (g6, _) = run("three.g6");
    let o = compsub(&["decide"], Some(&text(&g6)));
    assert_eq!(code(&o), 0);
}

#[test]
fn recognize_reports_witnesses() {
    let line = |g: &Graph| {
        let o = compsub(&["recognize"], Some(&to_graph6(g)));
        assert_eq!(code(&o), 0);
        serde_json::from_str::<Value>(text(&o.stdout).trim()).unwrap()
    };
    let c5 = line(&Graph::cycle(5));
    assert_eq!(c5["classes"]["hole-free"]["member"], false);
    assert_eq!(
        c5["classes"]["hole-free"]["hole"].as_array().unwrap().len(),
        5
    );
    let n = line(&net());
    assert_eq!(n["classes"]["chordal"]["member"], true);
    assert_eq!(n["classes"]["split"]["member"], true);
    let c6 = line(&Graph::cycle(6));
    assert_eq!(c6["classes"]["p5-free"]["member"], false);
    assert_eq!(c6["classes"]["p5-free"]["p5"].as_array().unwrap().len(), 5);

    let o = compsub(
        &["recognize", "--class", "cograph"],
        Some(&to_graph6(&Graph::path(4))),
    );
    let v: Value = serde_json::from_str(text(&o.stdout).trim()).unwrap();
    assert_eq!(v["classes"].as_object().unwrap().len(), 1);
    assert_eq!(v["classes"]["cograph"]["p4"].as_array().unwrap().len(), 4);
}

fn batch_input() -> String {
    [
        Graph::path(4),
        Graph::cycle(4),
        net(),
        Graph::cycle(5),
        Graph::path(2),
    ]
    .iter()
    .map(|g| to_graph6(g) + "\n")
    .collect()
}

fn rows(report: &Path) -> Vec<Value> {
    fs::read_to_string(report)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn batch_report_references_valid_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("run.jsonl");
    let o = compsub(
        &["decide", "--report", &report.display().to_string()],
        Some(&batch_input()),
    );
    // C_5 has odd order, so the batch mixes YES and NO.
    assert_eq!(code(&o), 1, "{}", text(&o.stderr));
    let rows = rows(&report);
    let verdicts: Vec<&str> = rows
        .iter()
        .map(|r| r["verdict"].as_str().unwrap())
        .collect();
    assert_eq!(verdicts, ["YES", "NO", "YES", "NO", "YES"]);
    let graphs: Vec<Graph> = batch_input()
        .lines()
        .map(|l| parse_graph6_line(l, 1).unwrap())
        .collect();
    for (row, g) in rows.iter().zip(&graphs) {
        assert!(row["elapsed_ms"].is_number());
        if row["verdict"] == "YES" {
            let path = row["certificate"].as_str().unwrap();
            let c =
                DecompositionCertificate::from_json(&fs::read_to_string(path).unwrap()).unwrap();
            assert!(verify_certificate(g, &c));
        } else {
            assert!(row["certificate"].is_null());
        }
    }
}

#[test]
fn batch_continues_past_instance_errors() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("run.jsonl");
    let certs = dir.path().join("certs");
    let args = [
        "decide",
        "--strategy",
        "holefree",
        "--report",
        &report.display().to_string(),
        "--cert-out",
        &certs.display().to_string(),
    ];
    let o = compsub(&args, Some(&batch_input()));
    assert_eq!(code(&o), 3);
    let rows = rows(&report);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[3]["verdict"], "ERROR");
    assert!(rows[3]["error"].as_str().unwrap().contains("hole"));
    assert_eq!(rows[4]["verdict"], "YES");
    assert!(rows[4]["certificate"]
        .as_str()
        .unwrap()
        .starts_with(&certs.display().to_string()));
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str| {
        let report = dir.path().join(format!("t{threads}.jsonl"));
        let certs = dir.path().join(format!("c{threads}"));
        let args = [
            "decide",
            "--threads",
            threads,
            "--report",
            &report.display().to_string(),
            "--cert-out",
            &certs.display().to_string(),
        ];
        compsub(&args, Some(&batch_input()));
        let certs: Vec<String> = (1..=5)
            .filter_map(|i| fs::read_to_string(certs.join(format!("{i}.json"))).ok())
            .collect();
        let verdicts: Vec<Value> = rows(&report)
            .into_iter()
            .map(|r| serde_json::json!([r["id"], r["verdict"], r["method"]]))
            .collect();
        (verdicts, certs)
    };
    assert_eq!(run("1"), run("2"));
}
