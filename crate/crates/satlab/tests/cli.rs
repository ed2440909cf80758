use std::io::Write;
use std::process::{Command, Output, Stdio};

use satlab::graph6;
use satlab_core::constructions::{clique_union, ehm_extremal};
use satlab_core::Graph;
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_satlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn satlab");
    // The command may exit before reading its input.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn constructions_match_golden_corpus() {
    let corpus = include_str!("golden/constructions.txt");
    for line in corpus.lines() {
        let words: Vec<&str> = line.split_whitespace().collect();
        let (args, want) = words.split_at(words.len() - 1);
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        let o = run(&full, "");
        assert_eq!(code(&o), 0, "{line}");
        assert_eq!(stdout(&o).trim(), want[0], "{line}");
    }
}

#[test]
fn golden_extremal_graph_is_the_join() {
    // K_2 joined with five isolated vertices: 11 edges, two dominating vertices.
    let g = graph6::decode("F}rE?").unwrap();
    assert_eq!(g.order(), 7);
    assert_eq!(g.edge_count(), 11);
    assert_eq!((g.degree(0), g.degree(1)), (6, 6));
    assert!((2..7).all(|v| g.degree(v) == 2));
}

#[test]
fn construct_rejects_bad_parameters() {
    assert_eq!(code(&run(&["construct", "ehm", "3", "5"], "")), 2);
    assert_eq!(code(&run(&["construct", "ehm", "7"], "")), 2);
    assert_eq!(code(&run(&["construct", "nonsense", "1"], "")), 2);
}

#[test]
fn count_examples() {
    let ehm = graph6::encode(&ehm_extremal(10, 5).unwrap());
    assert_eq!(stdout(&run(&["count", "--clique", "3"], &ehm)).trim(), "22");

    let join = Graph::complete(3).unwrap().join(&Graph::empty(4).unwrap()).unwrap();
    let o = run(&["count", "--cycle", "5"], &graph6::encode(&join));
    assert_eq!(stdout(&o).trim(), brute_cycles(&join, 5).to_string());
    assert_eq!(stdout(&o).trim(), "36");

    assert_eq!(stdout(&run(&["count", "--cycle", "3"], "C~\n")).trim(), "4");
    // One line per input graph.
    assert_eq!(stdout(&run(&["count", "--clique", "2"], "C~\nBw\n")), "6\n3\n");
}

#[test]
fn count_rejects_bad_input() {
    assert_eq!(code(&run(&["count", "--clique", "3"], "not graph6!\n")), 2);
    assert_eq!(code(&run(&["count", "--clique", "3"], "")), 2);
    assert_eq!(code(&run(&["count"], "C~\n")), 2);
}

#[test]
fn count_reads_input_file() {
    let dir = std::env::temp_dir().join(format!("satlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "Dhc\n").unwrap();
    let o = run(&["count", "--cycle", "5", "--input", path.to_str().unwrap()], "");
    assert_eq!(stdout(&o).trim(), "1");
    std::fs::remove_dir_all(&dir).unwrap();
}

fn brute_cycles(g: &Graph, r: usize) -> u64 {
    fn go(g: &Graph, start: usize, v: usize, left: usize, used: u64, c: &mut u64) {
        if left == 0 {
            *c += u64::from(g.has_edge(v, start));
            return;
        }
        for w in start + 1..g.order() {
            if used >> w & 1 == 0 && g.has_edge(v, w) {
                go(g, start, w, left - 1, used | 1 << w, c);
            }
        }
    }
    let mut c = 0;
    for s in 0..g.order() {
        go(g, s, s, r - 1, 1 << s, &mut c);
    }
    c / 2
}

fn check(args: &[&str], input: &str) -> (i32, Vec<Value>) {
    let o = run(args, input);
    let reports = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect();
    (code(&o), reports)
}

#[test]
fn check_saturated_examples() {
    let ehm = graph6::encode(&ehm_extremal(8, 4).unwrap());
    assert_eq!(check(&["check", "saturated", "--clique", "4"], &ehm).0, 0);

    let cu = graph6::encode(&clique_union(8, 4).unwrap());
    let (c, r) = check(&["check", "saturated", "--family", "F", "4"], &cu);
    assert_eq!(c, 0);
    assert_eq!(r[0]["passed"], true);

    assert_eq!(check(&["check", "saturated", "--clique", "3"], "Dhc").0, 0);
}

#[test]
fn check_failure_carries_witness() {
    // The path on four vertices is triangle-free but not maximal.
    let (c, r) = check(&["check", "saturated", "--clique", "3"], "Ch");
    assert_eq!(c, 1);
    assert_eq!(r[0]["passed"], false);
    assert!(r[0]["witness"]["pair"].is_array());

    let (c, r) = check(&["check", "free", "--clique", "3"], "C~");
    assert_eq!(c, 1);
    assert_eq!(r[0]["witness"]["reason"], "contains member");
}

#[test]
fn check_strongly_saturated() {
    // K_4 minus an edge: the missing edge completes a new K_4.
    assert_eq!(check(&["check", "strongly-saturated", "--clique", "4"], "C^").0, 0);
    assert_eq!(check(&["check", "strongly-saturated", "--clique", "4"], "Ch").0, 1);
}

#[test]
fn check_edge_classes_and_structure() {
    let ehm = graph6::encode(&ehm_extremal(8, 5).unwrap());
    for r in ["2", "3", "4"] {
        assert_eq!(check(&["check", "lemma2", "--clique", "5", "--r", r], &ehm).0, 0);
    }
    // Not K_5-saturated: usage error rather than a verdict.
    assert_eq!(check(&["check", "lemma2", "--clique", "5", "--r", "2"], "Ch").0, 2);

    let cu = graph6::encode(&clique_union(8, 4).unwrap());
    let (c, r) = check(&["check", "family-structure", "--family", "F", "4"], &cu);
    assert_eq!(c, 0);
    let ids: Vec<&str> = r[0]["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["clique-part-is-disjoint-cliques", "rest-small-or-saturated", "cliques-reach-rest"]);
}

#[test]
fn check_usage_errors() {
    assert_eq!(check(&["check", "saturated"], "Dhc").0, 2);
    assert_eq!(check(&["check", "saturated", "--clique", "3", "--family", "F", "4"], "Dhc").0, 2);
    assert_eq!(check(&["check", "bogus", "--clique", "3"], "Dhc").0, 2);
}

fn search(args: &[&str]) -> Value {
    let o = run(args, "");
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn search_spectrum_of_triangle_saturated_graphs() {
    let v = search(&["search", "5", "--clique", "3", "--quiet"]);
    assert_eq!(v["minimum"], "4");
    let spectrum: Vec<&String> = v["spectrum"].as_object().unwrap().keys().collect();
    assert_eq!(spectrum, ["4", "5", "6"]);
    let extremal = v["extremal_graph6"].as_array().unwrap();
    assert_eq!(extremal.len(), 1);
    let g = graph6::decode(extremal[0].as_str().unwrap()).unwrap();
    assert!(satlab_core::is_isomorphic(&g, &Graph::star(4).unwrap()));
}

#[test]
fn search_reports_the_construction() {
    let v = search(&["search", "8", "--clique", "4", "--count-clique", "3", "--jobs", "2", "--quiet"]);
    assert_eq!(v["minimum"], "6");
    let g = graph6::decode(v["extremal_graph6"][0].as_str().unwrap()).unwrap();
    assert!(satlab_core::is_isomorphic(&g, &ehm_extremal(8, 4).unwrap()));
}

#[test]
fn search_shards_merge_to_the_whole() {
    let whole = search(&["search", "7", "--clique", "3", "--jobs", "1", "--quiet"]);
    let mut saturated = 0;
    let mut examined = 0;
    let mut i = 0;
    loop {
        let o = run(&["search", "7", "--clique", "3", "--shard", &format!("4:{i}"), "--quiet"], "");
        if code(&o) != 0 {
            break;
        }
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        saturated += v["saturated_count"].as_u64().unwrap();
        examined += v["examined"].as_u64().unwrap();
        i += 1;
    }
    assert!(i > 1);
    assert_eq!(saturated, whole["saturated_count"].as_u64().unwrap());
    assert_eq!(examined, whole["examined"].as_u64().unwrap());
}

#[test]
fn search_respects_the_cap() {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_satlab"));
    cmd.args(["search", "9", "--clique", "3", "--quiet"]).env("SATLAB_MAX_N", "8");
    assert_eq!(cmd.output().unwrap().status.code(), Some(2));
    assert_eq!(code(&run(&["search", "6", "--clique", "3", "--count-cycle", "4", "--prune-edges"], "")), 2);
}

#[test]
fn oscillation_csv() {
    let o = run(&["experiment", "oscillation", "--m", "4", "--n", "4..6"], "");
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,sat,ratio,divides_m,lower,upper"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&first[..4], ["4", "6", "3/2", "true"]);
    assert_eq!(lines.count(), 2);

    assert_eq!(code(&run(&["experiment", "oscillation", "--m", "4", "--n", "4..20"], "")), 2);
    let b = run(&["experiment", "oscillation", "--m", "12", "--n", "24..25", "--mode", "bounds"], "");
    assert_eq!(code(&b), 0);
    assert_eq!(stdout(&b).lines().count(), 3);
}

#[test]
fn formulas_print_exact_rationals() {
    let o = run(&["formula", "clique-bounds", "10", "3", "5"], "");
    assert_eq!(stdout(&o), "lower 50/3 (16.666667)\nupper 22/1 (22.000000)\n");
    assert_eq!(stdout(&run(&["formula", "ehm-sat", "8", "4"], "")).trim(), "13");
    assert_eq!(stdout(&run(&["formula", "sat-cliques", "10", "3", "5"], "")).trim(), "22");
    assert_eq!(stdout(&run(&["formula", "binomial-claim", "12", "2"], "")).trim(), "true");
    assert_eq!(code(&run(&["formula", "nope"], "")), 2);
    assert_eq!(code(&run(&["formula", "ehm-sat", "8"], "")), 2);
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "thm1"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("thm1: pass"));
    assert_eq!(code(&run(&["verify", "unknown"], "")), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["search", "7", "--clique", "4", "--jobs", "3", "--quiet"];
    assert_eq!(stdout(&run(&args, "")), stdout(&run(&args, "")));
}
