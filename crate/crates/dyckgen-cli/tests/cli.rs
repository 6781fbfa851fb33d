//! End-to-end tests driving the installed binary.

use std::process::{Command, Output};

fn dyckgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckgen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn gen_streams_paths_in_generation_order() {
    let out = dyckgen(&["gen", "-n", "3", "--format", "bits"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "111000\n110100\n101100\n101010\n110010\n");
}

#[test]
fn gen_single_path() {
    let out = dyckgen(&["gen", "-n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "10\n");
}

#[test]
fn gen_renders_up_down() {
    let out = dyckgen(&["gen", "-n", "3", "--format", "updown"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().next(), Some("UUUDDD"));
}

#[test]
fn gen_renders_coordinates_as_json() {
    let out = dyckgen(&["gen", "-n", "2", "--format", "coords"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    let first: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(first, serde_json::json!([[0, 0], [1, 1], [2, 2], [3, 1], [4, 0]]));
    assert_eq!(lines.count(), 1);
}

#[test]
fn gen_writes_files() {
    let dir = std::env::temp_dir().join(format!("dyckgen-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n3.txt");
    let out = dyckgen(&["gen", "-n", "3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "111000\n110100\n101100\n101010\n110010\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn count_reports_the_catalan_number() {
    let out = dyckgen(&["count", "-n", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "16796\n");
}

#[test]
fn sorted_stream_equals_the_oracle_dump() {
    for n in [1usize, 5, 9] {
        let out = dyckgen(&["gen", "-n", &n.to_string()]);
        assert!(out.status.success());
        let text = stdout_of(&out);
        let mut lines: Vec<&str> = text.lines().collect();
        lines.sort_unstable();
        let mut sorted = lines.join("\n");
        sorted.push('\n');
        assert_eq!(
            sorted,
            dyckgen::oracle::enumerate(n).unwrap().to_lines(),
            "n={n}"
        );
    }
}

#[test]
fn tree_emits_dot_with_preorder_ids() {
    let out = dyckgen(&["tree", "-n", "4", "--dot"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("digraph paths_n4 {"));
    assert_eq!(text.matches("[label=").count(), 14, "one node per path");
    assert_eq!(text.matches("n0 -> ").count(), 3, "root out-degree");
    assert!(text.contains("n0 [label=\"11110000\\n(3,3)\"]"));
}

#[test]
fn labels_prints_the_indented_tree() {
    let out = dyckgen(&["labels", "-n", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "(1,1)\n  (1,0)\nlevel 0: 1\nlevel 1: 1\ntotal: 2 nodes\n"
    );
}

#[test]
fn labels_for_size_five() {
    let out = dyckgen(&["labels", "-n", "5"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("(4,4)\n"));
    assert!(text.ends_with("total: 42 nodes\n"));
}

#[test]
fn labels_dot_matches_tree_ids() {
    let out = dyckgen(&["labels", "-n", "3", "--dot"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("digraph labels_n3 {"));
    // Same shape as the word tree: n0 with children n1 and n4.
    assert!(text.contains("n0 -> n1;"));
    assert!(text.contains("n0 -> n4;"));
    assert!(text.contains("n1 -> n2;"));
    assert!(text.contains("n1 -> n3;"));
}

#[test]
fn verify_passes_for_small_sizes() {
    for n in ["1", "4"] {
        let out = dyckgen(&["verify", "-n", n]);
        assert!(out.status.success(), "n={n}");
        let text = stdout_of(&out);
        assert_eq!(text.matches(": pass").count(), 4, "n={n}");
    }
    let out = dyckgen(&["verify", "-n", "4"]);
    assert!(stdout_of(&out).contains("14 paths"));
}

#[test]
fn verify_handles_the_spec_sizes() {
    let out = dyckgen(&["verify", "-n", "12"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("208012 paths"));
}

#[test]
fn verify_rejects_sizes_beyond_the_oracle_cap() {
    let out = dyckgen(&["verify", "-n", "17"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_emits_machine_readable_records() {
    let out = dyckgen(&["bench", "-n", "6"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["n"], 6);
    assert_eq!(record["paths"], 132);
    for field in [
        "swaps",
        "cursor_moves",
        "stack_ops",
        "label_updates",
        "dispatch_tests",
        "total_actions",
        "actions_per_path",
        "wall_time",
    ] {
        assert!(record.get(field).is_some(), "missing field {field}");
    }
    let ratio = record["actions_per_path"].as_f64().unwrap();
    assert!(ratio > 0.0 && ratio <= 12.0);
}

#[test]
fn bench_covers_ranges() {
    let out = dyckgen(&["bench", "--range", "4..6"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 3);
}

#[test]
fn bench_flags_bound_violations() {
    let out = dyckgen(&["bench", "-n", "6", "--bound", "0.5"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn bench_of_the_trivial_size_is_free() {
    let out = dyckgen(&["bench", "-n", "1"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["paths"], 1);
    assert_eq!(record["actions_per_path"].as_f64().unwrap(), 0.0);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(dyckgen(&[]).status.code(), Some(2));
    assert_eq!(dyckgen(&["gen"]).status.code(), Some(2));
    assert_eq!(dyckgen(&["gen", "-n", "0"]).status.code(), Some(2));
    assert_eq!(dyckgen(&["tree", "-n", "19"]).status.code(), Some(2));
    assert_eq!(dyckgen(&["bench"]).status.code(), Some(2));
    assert_eq!(dyckgen(&["bench", "--range", "9..2"]).status.code(), Some(2));
}
