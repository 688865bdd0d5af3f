//! End-to-end tests of the command-line front end: format round-trips,
//! the documented subcommand behaviours, exit codes, and byte-level
//! determinism of reports.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use tetradecomp::generate;
use tetradecomp::Graph;
use tetradecomp_cli::io::{parse_graph, serialize_graph, GraphFormat};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tetradecomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn round_trip_both_formats() {
    let graphs = [
        Graph::empty(),
        Graph::complete(5),
        generate::double_wheel(6, true).unwrap(),
        generate::circular_saw(8, 3).unwrap(),
    ];
    for g in &graphs {
        for format in [GraphFormat::EdgeList, GraphFormat::Json] {
            let text = serialize_graph(g, format).unwrap();
            let back = parse_graph(&text, format).unwrap();
            assert_eq!(&back, g);
        }
    }
    // JSON carries non-contiguous labels; the edge list refuses them.
    let odd = Graph::new([3, 7, 12], [(3, 7), (7, 12)]).unwrap();
    let text = serialize_graph(&odd, GraphFormat::Json).unwrap();
    assert_eq!(parse_graph(&text, GraphFormat::Json).unwrap(), odd);
    assert!(serialize_graph(&odd, GraphFormat::EdgeList).is_err());
}

#[test]
fn edge_list_accepts_comments_and_headers() {
    let text = "# a triangle plus an isolated vertex\np 4\n0 1\n1 2  # chord\n\n2 0\n";
    let g = parse_graph(text, GraphFormat::EdgeList).unwrap();
    assert_eq!(g.vertex_count(), 4);
    assert_eq!(g.edge_count(), 3);
}

#[test]
fn saw_has_no_tetra_separations() {
    let gen = run(&["gen", "saw", "12", "4"], "");
    assert!(gen.status.success());
    let enumerate = run(&["tetra", "enumerate"], &stdout(&gen));
    assert!(enumerate.status.success());
    assert!(stdout(&enumerate).starts_with("0 tetra-separations"));
}

#[test]
fn k4m_decomposes_to_one_sprinkled_node() {
    let gen = run(&["gen", "k4m", "pure", "6"], "");
    let decompose = run(&["decompose", "--out", "json"], &stdout(&gen));
    assert!(decompose.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&decompose)).unwrap();
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 1);
    assert_eq!(nodes[0]["class"]["verdict"], "sprinkled-K4m");
    assert_eq!(nodes[0]["class"]["m"], 6);
    assert!(v["edges"].as_array().unwrap().is_empty());
}

#[test]
fn double_wheel_is_angry_shape_three() {
    let gen = run(&["gen", "double-wheel", "6"], "");
    let angry = run(&["classify-angry"], &stdout(&gen));
    assert!(angry.status.success());
    assert!(stdout(&angry).starts_with("4-angry: shape 3"));
}

#[test]
fn nested_methods_flag() {
    let gen = run(&["gen", "clique-ring", "4", "6"], "");
    for method in ["oracle", "characterization", "both"] {
        let nested = run(&["tetra", "nested", "--method", method], &stdout(&gen));
        assert!(nested.status.success());
        assert!(stdout(&nested).starts_with("8 tetra-separations"), "{method}");
    }
}

#[test]
fn ydelta_of_cube_prints_a_graph() {
    // The cube is 3-regular on 8 vertices; every edge is subdivided and the
    // original vertices are dropped, leaving the 12 subdivision vertices
    // with fresh labels. Fresh labels are not contiguous, so JSON it is.
    let cube_edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (0, 4),
        (1, 5),
        (2, 6),
        (3, 7),
    ];
    let cube = Graph::new(0..8, cube_edges).unwrap();
    let input = serialize_graph(&cube, GraphFormat::Json).unwrap();
    let out = run(&["ydelta", "--format", "json"], &input);
    assert!(out.status.success());
    let g = parse_graph(&stdout(&out), GraphFormat::Json).unwrap();
    assert_eq!(g.vertex_count(), 12);
    assert!(g.vertices().all(|v| v >= 8), "only subdivision labels remain");
}

#[test]
fn dot_export_mentions_classes() {
    let gen = run(&["gen", "double-wheel", "6"], "");
    let dot = run(&["decompose", "--out", "dot"], &stdout(&gen));
    assert!(dot.status.success());
    let text = stdout(&dot);
    assert!(text.starts_with("graph decomposition {"));
    assert!(text.contains("generalised-double-wheel"));
}

#[test]
fn pipeline_handles_disconnected_union_of_c5_and_k8() {
    let mut text = String::from("p 13\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    for u in 5..13 {
        for v in (u + 1)..13 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let out = run(&["pipeline"], &text);
    assert!(out.status.success());
    let report = stdout(&out);
    assert!(report.contains("2 component(s)"));
    assert!(report.contains("cycle"));
    // The K8 passes untouched through every stage down to the tetra
    // classification, where it is quasi-5-connected.
    assert!(report.contains("quasi-5-connected"));
}

#[test]
fn exit_code_2_on_input_errors() {
    let out = run(&["tetra", "enumerate"], "p 4\n0 1\n1 2\n2 3\n");
    assert_eq!(out.status.code(), Some(2), "not 4-connected is an input error");
    let out = run(&["gen", "nonsense", "3"], "");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["decompose"], "this is not a graph\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_3_on_capability_bounds() {
    let gen = run(&["gen", "saw", "16", "4"], "");
    let out = run(&["tetra", "enumerate"], &stdout(&gen));
    assert_eq!(out.status.code(), Some(3), "32 vertices exceed the default bound");
    let out = run(&["tetra", "enumerate", "--bound", "40"], &stdout(&gen));
    assert!(out.status.success(), "raised bound admits the graph");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let gen = run(&["gen", "clique-ring", "5", "5"], "");
    let input = stdout(&gen);
    let a = run(&["decompose", "--out", "json"], &input);
    let b = run(&["decompose", "--out", "json", "--threads", "2"], &input);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_passes_on_well_behaved_input() {
    let gen = run(&["gen", "double-wheel", "5", "hub"], "");
    let out = run(&["check"], &stdout(&gen));
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("all checks passed\n"));
}

#[test]
fn gen_random_is_seed_deterministic() {
    let a = run(&["gen", "random", "9", "--seed", "7"], "");
    let b = run(&["gen", "random", "9", "--seed", "7"], "");
    let c = run(&["gen", "random", "9", "--seed", "8"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}
