use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fishmaps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fishmaps")).args(args).output().expect("binary runs")
}

fn fishmaps_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fishmaps"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const LOOP_MAP: &str = "planarmap v1\nhalfedges 2\nroot 0\nvertex 0 1\n";

#[test]
fn encode_loop_map() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loop.map");
    std::fs::write(&path, LOOP_MAP).unwrap();
    let o = fishmaps(&["encode", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "NS\n");
    let o = fishmaps_stdin(&["encode", "-"], LOOP_MAP);
    assert_eq!(stdout(&o), "NS\n");
}

#[test]
fn encode_rejects_bad_files() {
    let o = fishmaps_stdin(&["encode"], "planarmap v2\n");
    assert_eq!(o.status.code(), Some(2));
    let o = fishmaps_stdin(&["encode", "--class", "ns"], LOOP_MAP);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("nonseparable"));
}

#[test]
fn decode_then_encode() {
    for word in ["ENWS", "EWNS", "EENNWWSS", ""] {
        let o = fishmaps(&["decode", word]);
        assert!(o.status.success(), "{word}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("planarmap v1\n"));
        let back = fishmaps_stdin(&["encode"], &stdout(&o));
        assert_eq!(stdout(&back).trim(), word);
    }
    let o = fishmaps(&["decode", "ENWS"]);
    assert_eq!(stdout(&o), "planarmap v1\nhalfedges 4\nroot 0\nvertex 0 3\nvertex 1 2\n");
}

#[test]
fn decode_reports_the_failing_step() {
    let o = fishmaps(&["decode", "NESW"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not a generalized fighting fish: Case I split step is N"), "{}", stderr(&o));
    assert_eq!(fishmaps(&["decode", "EXWS"]).status.code(), Some(2));
    assert_eq!(fishmaps(&["decode", "--class", "ff", "EWNS"]).status.code(), Some(3));
}

fn record(word: &str) -> Vec<(String, String)> {
    let o = fishmaps(&["recognize", word]);
    assert!(o.status.success());
    stdout(&o)
        .lines()
        .map(|l| {
            let (k, v) = l.split_once(' ').unwrap_or((l, ""));
            (k.to_string(), v.to_string())
        })
        .collect()
}

fn field(rec: &[(String, String)], key: &str) -> String {
    rec.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone()).unwrap_or_else(|| panic!("no {key}"))
}

#[test]
fn recognize_classifies() {
    let head = record("ENWS");
    for (k, v) in [("excursion", "true"), ("gff", "true"), ("fighting-fish", "true"), ("size", "2"), ("jaw", "1")] {
        assert_eq!(field(&head, k), v, "{k}");
    }
    let ewns = record("EWNS");
    assert_eq!(field(&ewns, "gff"), "true");
    assert_eq!(field(&ewns, "fighting-fish"), "false");
    assert_eq!(field(&ewns, "down-bridges"), "1");
    assert_eq!(field(&ewns, "up-bridges"), "1");
    let nesw = record("NESW");
    assert_eq!(field(&nesw, "excursion"), "true");
    assert_eq!(field(&nesw, "gff"), "false");
    assert!(field(&nesw, "reason").contains("Case I"));
    assert_eq!(fishmaps(&["recognize", "ENQS"]).status.code(), Some(2));
}

#[test]
fn count_fish() {
    let o = fishmaps(&["count", "--class", "ff", "--size", "6"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    assert!(csv.starts_with("class,n,stat,count\n"));
    assert!(csv.lines().any(|l| l == "ff,6,total,91"), "{csv}");
    let o = fishmaps(&["count", "--class", "ff", "--size", "6", "--format", "lines"]);
    assert_eq!(stdout(&o), "91\n");
    let o = fishmaps(&["count", "--class", "map", "--size", "5", "--format", "lines"]);
    assert_eq!(stdout(&o), "2916\n");
    let o = fishmaps(&["count", "--class", "loopless", "--size", "4", "--format", "lines"]);
    assert_eq!(stdout(&o), "68\n");
}

#[test]
fn limits_and_bad_flags() {
    let o = fishmaps(&["count", "--class", "ff", "--size", "600"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--limit"));
    let o = fishmaps(&["count", "--class", "ff", "--size", "8", "--limit", "10", "--format", "lines"]);
    assert_eq!(stdout(&o), "1938\n");
    assert_eq!(fishmaps(&["count", "--class", "trees", "--size", "3"]).status.code(), Some(2));
    assert_eq!(fishmaps(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fishmaps(&["sample", "--class", "loopless", "--size", "3"]).status.code(), Some(2));
}

#[test]
fn enumerate_lists_sorted_corpora() {
    let o = fishmaps(&["enumerate", "--class", "ff", "--size", "4"]);
    let words: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(words.len(), 6);
    let mut sorted = words.clone();
    // step order E < N < W < S
    sorted.sort_by_key(|w| w.chars().map(|c| "ENWS".find(c).unwrap()).collect::<Vec<_>>());
    assert_eq!(words, sorted);
    let o = fishmaps(&["enumerate", "--class", "map", "--size", "2"]);
    assert_eq!(stdout(&o).matches("planarmap v1").count(), 9);
    let o = fishmaps(&["enumerate", "--class", "ns", "--size", "3"]);
    assert_eq!(stdout(&o).matches("planarmap v1").count(), 2);
}

#[test]
fn sample_is_deterministic() {
    let args = ["sample", "--class", "ff", "--size", "40", "--seed", "3"];
    let a = fishmaps(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&fishmaps(&args)));
    assert!(stderr(&a).contains("rng chacha8 seed 3"));
    let w = stdout(&a);
    assert_eq!(w.trim().len(), 80);
    assert_eq!(field(&record(w.trim()), "fighting-fish"), "true");
    let m = fishmaps(&["sample", "--class", "map", "--size", "6", "--seed", "1", "--format", "csv"]);
    assert!(stdout(&m).starts_with("planarmap v1\nhalfedges 12\n"));
}

#[test]
fn sample_svg_is_well_formed() {
    let o = fishmaps(&["sample", "--class", "ff", "--size", "300", "--seed", "7", "--format", "svg"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let doc = roxmltree::Document::parse(&text).expect("well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.tag_name().namespace(), Some("http://www.w3.org/2000/svg"));
    let cells = doc.descendants().filter(|n| n.has_tag_name("polygon")).count();
    let word = fishmaps(&["sample", "--class", "ff", "--size", "300", "--seed", "7"]);
    let word: fishmaps::LatticeWord = stdout(&word).trim().parse().unwrap();
    assert_eq!(cells, fishmaps::render::cell_multiplicities(&word).values().sum::<usize>());
    assert!(doc.descendants().any(|n| n.has_tag_name("polyline")));
}

#[test]
fn render_word() {
    let o = fishmaps(&["render", "EENNWSWS"]);
    assert!(o.status.success());
    roxmltree::Document::parse(&stdout(&o)).expect("well-formed XML");
    assert_eq!(fishmaps(&["render", "NESW"]).status.code(), Some(3));
}

#[test]
fn verify_small_limit() {
    let o = fishmaps(&["verify", "--limit", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 10);
    assert!(out.lines().all(|l| l.starts_with("ok ")));
}
