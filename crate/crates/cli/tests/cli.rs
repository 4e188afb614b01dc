use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_condgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn condgraph");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    stdout(&run(&["fixture", name], None)).trim().to_string()
}

#[test]
fn conduct_p4_is_self_conducting() {
    let o = run(&["conduct"], Some("Ch\n"));
    assert!(o.status.success());
    assert!(stdout(&o).contains("G^C ≅ G ≅ P4; loops: none"), "{}", stdout(&o));
}

#[test]
fn conduct_c4_splits_into_looped_edges() {
    let o = run(&["conduct", &fixture("c4")], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("components: 2 × K2^loop"));
}

#[test]
fn disconnected_input_exits_2() {
    let o = run(&["conduct", "C?"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let o = run(&["conduct", "not-graph6!"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn good_lines_still_processed_after_bad_ones() {
    let o = run(&["conduct", "--format", "graph6"], Some("C?\nCh\n"));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn census_rows() {
    let o = run(&["census", "--mode", "connected", "--n", "6"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "n=6: 112, 4, 2");
    let o = run(&["census", "--mode", "chemical", "--n", "8", "--jobs", "2"], None);
    assert_eq!(stdout(&o).trim(), "n=8: 194, 5, 0");
    let o = run(&["census", "--mode", "connected", "--n", "5"], None);
    assert_eq!(stdout(&o).trim(), "n=5: 21, 0, 0");
    let o = run(&["census", "--mode", "connected"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_csv_and_out_dir() {
    let o = run(&["census", "--n", "6", "--format", "csv"], None);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,graph6,nullity,cond_iso,bipartite,chemical,nut,ipso_omni_ins,class_code")
    );
    assert_eq!(lines.count(), 4);

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = run(&["census", "--n", "6", "--out-dir", d, "--shards", "3"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "n=6: 112, 4, 2");
    let manifest = std::fs::read_to_string(dir.path().join("connected-n6.manifest.csv")).unwrap();
    assert!(manifest.starts_with("shard_id,count,checksum\n"));
    let g6 = std::fs::read_to_string(dir.path().join("connected-n6.g6")).unwrap();
    assert_eq!(g6.lines().count(), 4);
}

#[test]
fn census_ingest() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    std::fs::write(&path, format!("{}\n{}\nbad!\n{}\n", fixture("p4"), fixture("c4"), fixture("p2"))).unwrap();
    let o = run(&["census", "--ingest", path.to_str().unwrap()], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n=2: 1, 1, 0\nn=4: 2, 1, 0\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn family_verify() {
    let o = run(&["family", "--name", "min_deg2", "--k", "4", "--verify"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "verified");
    let iso = run(&["iso", lines[0], &fixture("fig4_k4_base")], None);
    assert!(stdout(&iso).starts_with("isomorphic"));

    let o = run(&["family", "--name", "appendix", "--k", "3", "--verify"], None);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("verified\n"));

    let o = run(&["family", "--name", "cdc", "--base", &fixture("radialene3"), "--verify"], None);
    assert!(o.status.success());

    let o = run(&["family", "--name", "cdc", "--base", &fixture("c4")], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["family", "--name", "min_deg2"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn transmit_csv() {
    let o = run(&["transmit", "A_", "--l", "0", "--r", "1", "--steps", "5", "--e-min", "-2", "--e-max", "2"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("E,T\n"));
    assert!(text.contains("\n0,1\n"));
    let o = run(&["transmit", "A_", "--l", "0", "--r", "0"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn iso_and_loops_format() {
    let o = run(&["iso"], Some("Bg;loops=0,2\nBg;loops=0\n"));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains(";loops="));
    let o = run(&["iso", "Bg;loops=0,2", "Bg;loops=0,1"], None);
    assert_eq!(stdout(&o).trim(), "not isomorphic");
}

#[test]
fn deterministic_output() {
    let a = run(&["census", "--mode", "chemical", "--n", "7", "--all-records", "--format", "csv", "--jobs", "4"], None);
    let b = run(&["census", "--mode", "chemical", "--n", "7", "--all-records", "--format", "csv", "--jobs", "1"], None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 65);
}

#[test]
fn fixtures_and_classify() {
    let o = run(&["fixture", "--list"], None);
    assert!(stdout(&o).lines().any(|l| l == "ipso15"));
    assert_eq!(run(&["fixture", "nope"], None).status.code(), Some(2));
    let o = run(&["classify", "--format", "csv", &fixture("k4")], None);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("4,"));
}
