use std::path::PathBuf;
use std::process::{Command, Output};

fn syzygy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syzygy")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn fixtures_build_and_verify() {
    for f in ["punctured-square", "decagon", "type-ii", "type-iii", "loop-rad2", "mata"] {
        let o = syzygy(&["build", "--fixture", f]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        let o = syzygy(&["verify", "--fixture", f]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("PASS\n"));
    }
}

#[test]
fn cmp_reports_a_match() {
    let o = syzygy(&["cmp", "--fixture", "type-iii"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("geometric catalogue: 6 modules"));
    assert!(s.contains("verdict: MATCH"));
    let o = syzygy(&["cmp", "--fixture", "decagon", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["match"], true);
    assert_eq!(v["geometric"].as_array().unwrap().len(), 48);
}

#[test]
fn worked_example_from_module_specs() {
    let o = syzygy(&["itdim", "--fixture", "loop-rad2", "--module", "I(1)", "--module", "S(1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("phi=2 psi=3"));
    let o = syzygy(&["itdim", "--fixture", "loop-rad2", "--module", "Q(1)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let bad = scratch("bad.json", "{\"surface\": \"punctured-disc\", \"n\": 4, \"arcs\": [");
    let o = syzygy(&["build", "-i", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let partial = scratch("partial.json", r#"{"surface": "punctured-disc", "n": 4, "arcs": [{"type": "radial", "at": 0, "tag": "plain"}]}"#);
    assert_eq!(syzygy(&["build", "-i", partial.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(syzygy(&["build", "--fixture", "nope"]).status.code(), Some(2));
    assert_eq!(syzygy(&["cmp", "--fixture", "mata"]).status.code(), Some(3));
    assert_eq!(syzygy(&["cmp", "--fixture", "mata", "--method", "geometric"]).status.code(), Some(2));
    assert_eq!(syzygy(&["build", "--fixture", "decagon", "--char", "4"]).status.code(), Some(2));
}

#[test]
fn enumerated_triangulations_round_trip() {
    let o = syzygy(&["enumerate", "4", "--format", "json"]);
    let all: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(all.len(), 35);
    let p = scratch("tri.json", &all[7].to_string());
    let o = syzygy(&["verify", "-i", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = syzygy(&["enumerate", "6", "--surface", "polygon", "--format", "json"]);
    let all: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(all.len(), 14);
    for t in &all {
        let p = scratch("poly.json", &t.to_string());
        let o = syzygy(&["cmp", "-i", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
}

#[test]
fn presentation_input() {
    let text = r#"{
        "vertices": ["1", "2", "3"],
        "arrows": [{"id": "a", "from": "1", "to": "2"}, {"id": "b", "from": "2", "to": "3"}],
        "relations": [[{"coeff": 1, "path": ["a", "b"]}]]
    }"#;
    let p = scratch("a3.json", text);
    let o = syzygy(&["verify", "-i", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    let unknown = scratch("unknown.json", &text.replace("\"b\"]", "\"c\"]"));
    let o = syzygy(&["build", "-i", unknown.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("relations[0][0].path"));
}

#[test]
fn stable_quiver_output_is_deterministic() {
    let a = syzygy(&["arquiver", "--fixture", "decagon", "--format", "dot"]);
    let b = syzygy(&["arquiver", "--fixture", "decagon", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("digraph"));
    let o = syzygy(&["arquiver", "--fixture", "decagon", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 48);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 80);
    assert_eq!(syzygy(&["arquiver", "--fixture", "mata"]).status.code(), Some(2));
}

#[test]
fn sweeps() {
    let o = syzygy(&["verify", "--sweep", "4", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sweep over 35 triangulations"));
    let o = syzygy(&["verify", "--sweep", "6", "--surface", "polygon"]);
    assert_eq!(o.status.code(), Some(0));
}
