use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use odd_colouring::colouring::Certificate;

fn oddcol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddcol")).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn generate(dir: &Path, name: &str, family: &[&str], seed: u64) -> PathBuf {
    let out = dir.join(name);
    let seed = seed.to_string();
    let mut args = vec!["generate"];
    args.extend_from_slice(family);
    args.extend(["--seed", &seed, "--out", path_str(&out)]);
    let o = oddcol(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn exact_on_c14_gives_three_classes() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "c14.txt", &["cycle", "14"], 0);
    let o = oddcol(&["colour", path_str(&g), "--algo", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let cert: Certificate = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert.classes.len(), 3);
    assert_eq!(cert.bound, 3);
    assert_eq!(cert.algorithm, "exact");
}

#[test]
fn odd_component_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "3 1\n0 1\n");
    let o = oddcol(&["colour", path_str(&g), "--algo", "bounded-degree"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_side_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "c.txt", &["cycle", "8"], 0);
    assert_eq!(oddcol(&["colour", path_str(&g), "--algo", "interval"]).status.code(), Some(3));
    assert_eq!(oddcol(&["colour", path_str(&g), "--algo", "modular"]).status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "c.txt", &["cycle", "12"], 0);
    let cert = dir.path().join("cert.json");
    let o = oddcol(&["colour", path_str(&g), "--out", path_str(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(oddcol(&["verify", path_str(&g), path_str(&cert)]).status.code(), Some(0));

    let mut c: Certificate = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let moved = c.classes[0].pop().unwrap();
    c.classes.push(vec![moved]);
    let tampered = write(dir.path(), "t.json", &serde_json::to_string(&c).unwrap());
    let o = oddcol(&["verify", path_str(&g), path_str(&tampered)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("even degree"));

    let bad = write(dir.path(), "bad.json", "{\"n\": 12,");
    assert_eq!(oddcol(&["verify", path_str(&g), path_str(&bad)]).status.code(), Some(4));
    let missing = dir.path().join("nope.txt");
    assert_eq!(oddcol(&["verify", path_str(&missing), path_str(&cert)]).status.code(), Some(4));
}

#[test]
fn generate_summaries_and_bad_specs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.txt");
    let o = oddcol(&["generate", "subdivided-complete", "4", "--out", path_str(&out)]);
    let summary = String::from_utf8_lossy(&o.stdout);
    assert!(summary.contains("n=10") && summary.contains("girth=6"), "{summary}");
    assert_eq!(oddcol(&["generate", "no-such-family", "3"]).status.code(), Some(3));
    assert_eq!(oddcol(&["generate", "cycle", "x"]).status.code(), Some(3));
}

#[test]
fn random_interval_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "ri.txt", &["random-interval", "40"], 7);
    let ints = dir.path().join("ri.txt.intervals");
    assert!(ints.exists());
    let text = std::fs::read_to_string(&g).unwrap();
    let graph = odd_colouring::io::parse_edge_list(&text).unwrap();
    assert!(graph.components().iter().all(|c| c.len() % 2 == 0));

    let cert = dir.path().join("cert.json");
    let o = oddcol(&["colour", path_str(&g), "--intervals", path_str(&ints), "--out", path_str(&cert)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let c: Certificate = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert!(c.algorithm == "interval" || c.algorithm == "proper-interval");
    assert!(c.classes.len() <= c.bound);
    assert_eq!(oddcol(&["verify", path_str(&g), path_str(&cert)]).status.code(), Some(0));
}

#[test]
fn modules_flag_selects_modular() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "c4.txt", &["cycle", "4"], 0);
    let m = write(dir.path(), "m.txt", "0 2\n1 3\n");
    let o = oddcol(&["colour", path_str(&g), "--modules", path_str(&m)]);
    assert_eq!(o.status.code(), Some(0));
    let c: Certificate = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c.algorithm, "modular");
    assert_eq!(c.bound, 6);
}

#[test]
fn auto_round_trip_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let families: [&[&str]; 6] = [
        &["cycle", "14"],
        &["random-gnp", "16", "0.3"],
        &["random-tree", "20"],
        &["random-interval", "24"],
        &["random-proper-interval", "24"],
        &["k4-two-pendants"],
    ];
    for (f, family) in families.iter().enumerate() {
        for seed in 0..5 {
            let g = generate(dir.path(), &format!("g{f}_{seed}.txt"), family, seed);
            let ints = dir.path().join(format!("g{f}_{seed}.txt.intervals"));
            let mut args = vec!["colour", path_str(&g)];
            if ints.exists() {
                args.extend(["--intervals", path_str(&ints)]);
            }
            let first = oddcol(&args);
            assert_eq!(first.status.code(), Some(0), "{family:?} seed {seed}: {}", String::from_utf8_lossy(&first.stderr));
            assert_eq!(first.stdout, oddcol(&args).stdout);
            let cert = write(dir.path(), "c.json", &String::from_utf8(first.stdout).unwrap());
            assert_eq!(oddcol(&["verify", path_str(&g), path_str(&cert)]).status.code(), Some(0));
        }
    }
}
