use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn reconf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reconf")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

struct Scratch(TempDir);

impl Scratch {
    fn new() -> Self {
        Scratch(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn generated(&self, name: &str, args: &[&str]) -> String {
        let out = reconf(args);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        self.file(name, &stdout(&out))
    }
}

fn overall(out: &Output) -> usize {
    stdout(out)
        .lines()
        .find_map(|l| l.strip_prefix("overall\t"))
        .expect("overall line")
        .parse()
        .unwrap()
}

#[test]
fn thresholds() {
    let dir = Scratch::new();
    let c6 = dir.generated("c6.graph", &["gen", "cycle", "6"]);
    let k33 = dir.generated("k33.graph", &["gen", "kbip", "3", "3"]);
    let tree = dir.file("tree.graph", "6 5\n0 1\n0 2\n1 3\n1 4\n2 5\n");
    assert_eq!(overall(&reconf(&["threshold", "--model", "mtj", &c6])), 3);
    assert_eq!(overall(&reconf(&["threshold", "--model", "tar", &k33])), 3);
    assert!(overall(&reconf(&["threshold", "--model", "tar", &tree])) <= 1);

    let out = reconf(&["threshold", "--model", "tar", "--size", "3", &c6]);
    assert_eq!(stdout(&out), "#size\ttar\n3\t2\noverall\t2\n");
}

#[test]
fn exit_codes_for_input_and_resource_errors() {
    let dir = Scratch::new();
    let bad = dir.file("bad.graph", "3 2\n0 1\n");
    let out = reconf(&["threshold", "--model", "mtj", &bad]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 1"));

    let missing = dir.path("missing.graph");
    assert_eq!(code(&reconf(&["threshold", "--model", "mtj", missing.to_str().unwrap()])), 2);

    let c12 = dir.generated("c12.graph", &["gen", "cycle", "12"]);
    let out = reconf(&["--oracle-cap", "10", "threshold", "--model", "mtj", &c12]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("exceeds cap 10"));
}

#[test]
fn reconfigure_and_verify() {
    let dir = Scratch::new();
    let k33 = dir.generated("k33.graph", &["gen", "kbip", "3", "3"]);
    let (i, j) = (dir.file("i", "0 1 2\n"), dir.file("j", "3 4 5\n"));
    let out = reconf(&["reconfigure", "--method", "fvs", "--model", "tar", &k33, &i, &j]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().last(), Some("max_buffer=3"));

    let c8 = dir.generated("c8.graph", &["gen", "cycle", "8"]);
    let (ci, cj) = (dir.file("ci", "0 2 4 6\n"), dir.file("cj", "1 3 5 7\n"));
    let seq = dir.path("seq");
    let out = reconf(&[
        "reconfigure", "--method", "pw", "--model", "tar", "--out", seq.to_str().unwrap(), &c8, &ci, &cj,
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let buffer: usize = stdout(&out).trim().strip_prefix("max_buffer=").unwrap().parse().unwrap();
    assert!(buffer <= 2);
    let out = reconf(&["verify-seq", "--model", "tar", &c8, &ci, &cj, seq.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), format!("valid max_buffer={buffer}"));

    let out = reconf(&["reconfigure", "--method", "vc", "--model", "mtj", &c8, &ci, &cj]);
    assert_eq!(stdout(&out).lines().last(), Some("max_jump=4"));

    let out = reconf(&["reconfigure", "--method", "pw", "--model", "mtj", &c8, &ci, &cj]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_rejections_report_the_step() {
    let dir = Scratch::new();
    let c6 = dir.generated("c6.graph", &["gen", "cycle", "6"]);
    let (i, j) = (dir.file("i", "0 2\n"), dir.file("j", "3 5\n"));
    let dependent = dir.file("dep", "3\n0 2\n0 1\n3 5\n");
    let out = reconf(&["verify-seq", "--model", "mtj", &c6, &i, &j, &dependent]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("step 1"), "{}", stdout(&out));

    let wide = dir.file("wide", "2\n0 2\n3 5\n");
    let out = reconf(&["verify-seq", "--model", "tar", &c6, &i, &j, &wide]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("symmetric difference"));

    let fine = dir.file("fine", "2\n0 2\n3 5\n");
    let out = reconf(&["verify-seq", "--model", "mtj", &c6, &i, &j, &fine]);
    assert_eq!(stdout(&out).trim(), "valid max_jump=2");
}

#[test]
fn ledger_rows() {
    let dir = Scratch::new();
    let c6 = dir.generated("c6.graph", &["gen", "cycle", "6"]);
    let k1 = dir.file("k1.graph", "1 0\n");
    let out = reconf(&["check-bounds", &c6]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "#id\tn\tvc\tfvs\tpw\tbi\tpum\tmtj\ttar\tfailed\nc6\t6\t3\t1\t2\t3\t6\t3\t2\t-\n");
    assert!(stderr(&out).contains("0 with failed bounds"));
    let out = reconf(&["check-bounds", &k1]);
    assert_eq!(stdout(&out).lines().nth(1), Some("k1\t1\t0\t0\t0\t1\t0\t0\t0\t-"));
}

#[test]
fn corpus_runs_are_deterministic() {
    let dir = Scratch::new();
    let corpus = dir.path("corpus");
    let c = corpus.to_str().unwrap();
    for n in ["4", "5"] {
        assert_eq!(code(&reconf(&["gen", "corpus", n, c])), 0);
    }
    assert_eq!(fs::read_dir(&corpus).unwrap().count(), 6 + 21);
    assert!(corpus.join("c4_00000.graph").exists());

    let first = reconf(&["check-bounds", c]);
    let second = reconf(&["check-bounds", c]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&first).lines().count(), 1 + 27);

    let cross = reconf(&["--budget", "20", "--seed", "7", "cross-validate", c]);
    assert_eq!(code(&cross), 0, "{}", stdout(&cross));
    assert_eq!(stdout(&cross), "#graph\tmethod\tsource\ttarget\tdetail\n");
    assert!(stderr(&cross).contains("violations=0"));
}

#[test]
fn generators_and_detectors() {
    let dir = Scratch::new();
    let a = reconf(&["gen", "random", "3", "4", "0.5", "11"]);
    let b = reconf(&["gen", "random", "3", "4", "0.5", "11"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("7 "));

    let pumpkin = dir.generated("p.graph", &["gen", "pumpkin", "1,3,5"]);
    let out = reconf(&["detect", "--what", "pum", &pumpkin]);
    assert_eq!(stdout(&out).lines().next(), Some("pum=8"));
    let out = reconf(&["detect", "--what", "bistable", &pumpkin]);
    assert!(stdout(&out).starts_with("bistable=true rank=4"));
    let out = reconf(&["detect", "--what", "bi", &pumpkin]);
    assert!(stdout(&out).starts_with("bi=4\n"));

    let path = dir.file("path.graph", "3 2\n0 1\n1 2\n");
    let out = reconf(&["detect", "--what", "bistable", &path]);
    assert_eq!(stdout(&out), "bistable=false reason=maximum independent sets 0 2\n");

    let sp = reconf(&["gen", "superpumpkin", "2"]);
    assert!(stdout(&sp).starts_with("10 "));
}

#[test]
fn btd_models() {
    let dir = Scratch::new();
    let (host, model) = (dir.path("host.graph"), dir.path("host.btd"));
    let (h, m) = (host.to_str().unwrap(), model.to_str().unwrap());
    assert_eq!(code(&reconf(&["gen", "btdhost", "1", h, m])), 0);
    let out = reconf(&["validate-btd", h, m]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "valid"));

    // point one branch set at an edge of another
    let text = fs::read_to_string(&model).unwrap();
    let broken = corrupt_first_phi(&text);
    let broken = dir.file("broken.btd", &broken);
    let out = reconf(&["validate-btd", h, &broken]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("invalid: condition"));
}

/// Replaces the vertex list of the first `phi` line with that of the second.
fn corrupt_first_phi(text: &str) -> String {
    let phis: Vec<&str> = text.lines().filter(|l| l.starts_with("phi ")).collect();
    let second = phis[1].split_once(':').unwrap().1;
    let first_head = phis[0].split_once(':').unwrap().0;
    text.replacen(phis[0], &format!("{first_head}:{second}"), 1)
}

#[test]
fn scratch_paths_are_isolated() {
    let a = Scratch::new();
    let b = Scratch::new();
    assert_ne!(a.path("x"), b.path("x"));
    assert!(Path::new(&a.file("x", "")).exists());
}
