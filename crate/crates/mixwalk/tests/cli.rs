use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = "n=4; 0->1; 1->0; 2->1; 1->3; 3->2";

fn mixwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixwalk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = mixwalk(args);
    assert!(o.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    mixwalk(args).status.code().unwrap()
}

#[test]
fn build_dumps_exact_transfer_matrix() {
    let out = ok(&["build", "--arcs", EXAMPLE, "--eta", "1/2", "--op", "U"]);
    assert!(out.starts_with("# U_theta eta=1/2\n# arcs: 0->1 1->0 1->2 2->1 1->3 3->1 2->3 3->2\n"));
    assert!(out.contains("-2/3i | 0 | 0 | -2/3i | 0 | 1/3i"), "{}", out);
}

#[test]
fn code_and_arc_inputs_give_identical_dumps() {
    let g = mixwalk_core::Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 1), (1, 3), (3, 2)]).unwrap();
    let code = g.code();
    for op in ["K", "C", "St", "U", "Ht", "R"] {
        let a = ok(&["build", "--arcs", EXAMPLE, "--op", op]);
        let b = ok(&["build", "--code", &code, "--op", op]);
        assert_eq!(a, b, "{}", op);
    }
}

#[test]
fn hermitian_of_complete_graph() {
    let out = ok(&["build", "--family", "Y 0 3", "--op", "H"]);
    assert_eq!(out, "# H_eta eta=1/2\n0 | 1 | 1\n1 | 0 | 1\n1 | 1 | 0\n");
}

#[test]
fn float_eta_dump() {
    let out = ok(&["build", "--arcs", "n=2; 0->1", "--float-eta", "0.5", "--op", "H"]);
    assert!(out.contains("0.877583+0.479426i"), "{}", out);
    assert_eq!(code(&["build", "--arcs", "n=2; 0->1", "--float-eta", "0.5", "--op", "St"]), 2);
}

fn eigs(v: &Value) -> Vec<(f64, f64, u64)> {
    v["eigs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["re"].as_f64().unwrap(), e["im"].as_f64().unwrap(), e["mult"].as_u64().unwrap()))
        .collect()
}

#[test]
fn spectrum_of_y_family_by_both_routes() {
    let v: Value = serde_json::from_str(&ok(&["spectrum", "--family", "Y 2 5", "--eta", "1/2", "--route", "both"])).unwrap();
    assert!(v["distance"].as_f64().unwrap() < 1e-8);
    let m = eigs(&v["mapping"]);
    assert_eq!(m.iter().map(|e| e.2).sum::<u64>(), 20);
    assert!(m.contains(&(1.0, 0.0, 7)) && m.contains(&(-1.0, 0.0, 5)));
    assert!(m.iter().filter(|e| (e.0 + 0.25).abs() < 1e-12).all(|e| e.2 == 4));
}

#[test]
fn example_spectrum_lies_on_the_unit_circle() {
    let v: Value = serde_json::from_str(&ok(&["spectrum", "--arcs", EXAMPLE, "--route", "direct"])).unwrap();
    let e = eigs(&v);
    assert_eq!(e.iter().map(|e| e.2).sum::<u64>(), 8);
    assert!(e.iter().all(|(re, im, _)| ((re * re + im * im).sqrt() - 1.0).abs() < 1e-9));
}

#[test]
fn grover_spectrum_of_triangle() {
    let v: Value = serde_json::from_str(&ok(&["spectrum", "--family", "K 3", "--eta", "0", "--charpoly"])).unwrap();
    assert_eq!(v["charpoly"], serde_json::json!([-2, -3, 0, 1]));
    let e = eigs(&v);
    assert_eq!(e.iter().map(|e| e.2).sum::<u64>(), 6);
    assert!(e.contains(&(1.0, 0.0, 2)));
}

#[test]
fn disconnected_mapping_route_is_refused() {
    let o = mixwalk(&["spectrum", "--arcs", "n=4; 0->1; 2->3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("weakly connected"));
    ok(&["spectrum", "--arcs", "n=4; 0->1; 2->3", "--route", "direct"]);
}

#[test]
fn supports_report() {
    let out = ok(&["supports", "--family", "K 4", "--eta", "3/4", "--power", "2"]);
    assert!(out.contains("square formula (AboveRight): holds (regular k>=3)"), "{}", out);
    assert!(out.contains("negative identity: holds"));
    let out = ok(&["supports", "--arcs", "n=3; 0->1; 1->2; 2->0", "--eta", "1/2", "--sign", "+"]);
    assert!(out.contains("trace: 0"));
    assert!(out.lines().skip(2).take(6).all(|l| l == "0 0 0 0 0 0"), "{}", out);
    let out = ok(&["supports", "--arcs", EXAMPLE, "--eta", "1/2", "--sign", "-", "--power", "3"]);
    assert!(out.starts_with("# U_theta^(3,-) eta=1/2\n"));
}

#[test]
fn float_eta_is_refused_for_exact_commands() {
    assert_eq!(code(&["supports", "--family", "K 4", "--float-eta", "1.0"]), 2);
    assert_eq!(code(&["tables", "--order", "2", "--float-eta", "1.0"]), 2);
}

#[test]
fn published_cells() {
    let csv = ok(&["tables", "--order", "4", "--functor", "H", "--format", "csv"]);
    assert!(csv.contains("Hermitian adjacency matrix H,H_1/2,4,218,27,21,3,16,1,10\n"), "{}", csv);
    let csv = ok(&["tables", "--order", "3", "--functor", "Heta", "--eta", "2/3", "--format", "csv"]);
    assert!(csv.lines().any(|l| l.ends_with("H_2/3,3,16,5,6,1,1,1,3")), "{}", csv);
    let csv = ok(&["tables", "--order", "2", "--functor", "U2plus", "--eta", "1/2", "--format", "csv"]);
    assert!(csv.lines().any(|l| l.ends_with("U2+_1/2,2,3,2,1,2,1,1,0")), "{}", csv);
}

#[test]
fn verify_against_published_values() {
    ok(&["tables", "--order", "4", "--verify-paper", "--format", "json"]);
    ok(&["tables", "--order", "4", "--functor", "U2plus", "--eta", "5/6", "--verify-paper"]);
    assert_eq!(code(&["tables", "--order", "3", "--functor", "Heta", "--eta", "1/4", "--verify-paper"]), 2);
}

#[test]
fn output_independent_of_jobs() {
    let a = ok(&["tables", "--order", "4", "--jobs", "1", "--format", "md"]);
    let b = ok(&["tables", "--order", "4", "--jobs", "3", "--format", "md"]);
    assert_eq!(a, b);
    assert!(a.contains("| Maximum size of a H-cospectral class |"));
}

#[test]
fn checkpoint_resume_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ck.bin");
    let p = path.to_str().unwrap();
    let fresh = ok(&["tables", "--order", "4", "--format", "csv"]);
    assert_eq!(ok(&["tables", "--order", "4", "--format", "csv", "--checkpoint", p]), fresh);
    assert_eq!(ok(&["tables", "--order", "4", "--format", "csv", "--checkpoint", p]), fresh);
    let mut data = std::fs::read(&path).unwrap();
    let n = data.len();
    data[n - 9] ^= 0x55;
    std::fs::write(&path, &data).unwrap();
    let o = mixwalk(&["tables", "--order", "4", "--checkpoint", p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("partition"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["build", "--arcs", "n=3; 0->x"]), 4);
    assert_eq!(code(&["build", "--arcs", "n=3; 0->1", "--eta", "3/2"]), 4);
    assert_eq!(code(&["build", "--code", "4:zz"]), 4);
    assert_eq!(code(&["build", "--arcs", "n=3", "--op", "U"]), 2);
    assert_eq!(code(&["tables", "--order", "6"]), 2);
    assert_eq!(code(&["build"]), 2);
    assert_eq!(code(&["frobnicate"]), 4);
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "n=3\n0->1\n1=>2\n").unwrap();
    let o = mixwalk(&["build", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3, column 1"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn quick_verify() {
    let out = ok(&["verify", "--quick"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with("ok")));
}
