use std::process::{Command, Output};

use cubegraph::gpg::generate_gpg;

fn cubegraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubegraph"))
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

#[test]
fn analyze_small_metrics() {
    let o = cubegraph(&["analyze", "3", "square-slice", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["d_actual"], 3);
    assert_eq!(v["d_actual_source"], "bfs");
    assert_eq!(v["d_min"], 3);
    assert_eq!(v["d_probab"], "inf");

    let o = cubegraph(&["analyze", "2", "quarter", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["n"].as_str(), v["d_actual"].as_u64(), v["d_min"].as_i64()), (Some("3674160"), Some(14), Some(10)));
}

#[test]
fn external_diameter_is_marked_in_every_format() {
    let json = stdout(&cubegraph(&["analyze", "3", "quarter", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!((v["d_actual"].as_u64(), v["d_actual_source"].as_str()), (Some(26), Some("external")));
    assert_eq!(v["d_min"], 20);

    let csv = stdout(&cubegraph(&["analyze", "3", "quarter", "--format", "csv"]));
    assert!(csv.lines().nth(1).unwrap().contains(",26,external,20,"), "{csv}");

    let text = stdout(&cubegraph(&["analyze", "3", "quarter"]));
    assert!(text.contains("26* (external"), "{text}");
    let table = stdout(&cubegraph(&["table1", "--skip-bfs"]));
    assert!(table.contains("26*") && table.contains("external literature value"), "{table}");
}

#[test]
fn table1_json_has_fixed_keys_and_is_deterministic() {
    let a = cubegraph(&["table1", "--format", "json"]);
    let b = cubegraph(&["table1", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let rows: Vec<serde_json::Map<String, serde_json::Value>> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(rows.len(), 5);
    let keys: Vec<_> = rows[0].keys().map(String::as_str).collect();
    let mut expected = vec![
        "bv_lower", "bv_upper", "cube_size", "d_actual", "d_actual_source", "d_min", "d_min_branch",
        "d_probab", "eta", "g", "k", "metric_name", "n", "r_max",
    ];
    expected.sort();
    let mut keys = keys;
    keys.sort();
    assert_eq!(keys, expected);
    for r in &rows {
        assert_eq!(r.len(), expected.len());
    }
}

#[test]
fn skip_bfs_drops_computed_diameters() {
    let o = cubegraph(&["table1", "--skip-bfs", "--format", "csv"]);
    let body = stdout(&o);
    let mut lines = body.lines();
    let header: Vec<_> = lines.next().unwrap().split(',').collect();
    let col = header.iter().position(|&h| h == "d_actual").unwrap();
    let d: Vec<String> = lines.map(|l| l.split(',').nth(col).unwrap().to_string()).collect();
    assert_eq!(d, ["", "", "", "", "26"]);
}

#[test]
fn distance_array_exports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let o = cubegraph(&[
        "distance-array", "2", "square", "--format", "csv", "--out", path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv, "distance,count\n0,1\n1,3\n2,6\n3,9\n4,5\n");
}

#[test]
fn distance_array_from_another_origin_matches() {
    let a = stdout(&cubegraph(&["distance-array", "2", "quarter", "--format", "csv"]));
    let b = stdout(&cubegraph(&["distance-array", "2", "quarter", "--format", "csv", "--origin", "1234567"]));
    assert_eq!(a, b);
}

#[test]
fn budget_and_input_errors_use_their_exit_codes() {
    let o = cubegraph(&["distance-array", "3", "quarter"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("graph too large"));

    let o = cubegraph(&["distance-array", "2", "quarter", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(3));

    let o = cubegraph(&["analyze", "2", "square-slice"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("supported:"), "{}", stderr(&o));

    let o = cubegraph(&["analyze", "5", "quarter"]);
    assert_eq!(o.status.code(), Some(2));

    let o = cubegraph(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

fn write_graph(dir: &tempfile::TempDir, name: &str, m: usize, t: usize) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, generate_gpg(m, t).unwrap().to_edge_list()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_graph_reports() {
    let dir = tempfile::tempdir().unwrap();
    let g125 = write_graph(&dir, "g125.txt", 12, 5);
    let o = cubegraph(&["check-graph", &g125, "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["d_min"].as_i64(), v["diameter"].as_u64(), v["pass"].as_bool()), (Some(4), Some(4), Some(true)));

    let g41 = write_graph(&dir, "g41.txt", 4, 1);
    let o = cubegraph(&["check-graph", &g41, "--eta", "one"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pass"));
}

#[test]
fn check_graph_failures() {
    let dir = tempfile::tempdir().unwrap();
    let g185 = write_graph(&dir, "g185.txt", 18, 5);
    let o = cubegraph(&["check-graph", &g185]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));

    let petersen = write_graph(&dir, "petersen.txt", 5, 2);
    let o = cubegraph(&["check-graph", &petersen]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("odd"), "{}", stderr(&o));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "# header\nn 4\n0 1\n1 x\n").unwrap();
    let o = cubegraph(&["check-graph", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));

    let o = cubegraph(&["check-graph", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(2));
}
