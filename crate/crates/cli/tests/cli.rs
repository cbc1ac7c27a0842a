use parbetti_cli::{InstanceDocument, OptionsDocument, PointDocument, ResultDocument};
use proptest::prelude::*;
use std::io::Write;
use std::process::{Command, Output, Stdio};

const CASE_A: &str = r#"{"genus": 2, "degree": 1,
  "points": [{"weights": ["0", "1/3"], "multiplicities": [1, 1]}]}"#;
const RANK1: &str = r#"{"genus": 3, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [1]}]}"#;
const TRIVIAL_FLAG: &str = r#"{"genus": 1, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [2]}]}"#;
const RANK3_B: &str = r#"{"genus": 1, "degree": 0, "points": [
  {"weights": ["0", "1/12", "3/12"], "multiplicities": [1, 1, 1]},
  {"weights": ["1/12", "5/12", "6/12"], "multiplicities": [1, 1, 1]}]}"#;
const RANK4_A: &str = r#"{"genus": 1, "degree": 0,
  "points": [{"weights": ["0", "1/8", "1/4", "1/2"], "multiplicities": [1, 1, 1, 1]}]}"#;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_parbetti"))
        .args(args)
        .env("PARBETTI_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_case_a_closed() {
    let o = run(&["compute", "-", "--method", "closed"], CASE_A);
    assert_eq!(o.status.code(), Some(0));
    let doc: ResultDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.betti, vec![1, 0, 2, 4, 2, 4, 2, 0, 1]);
    assert_eq!(doc.timing, None);
}

#[test]
fn rank_one_is_a_point() {
    let o = run(&["compute", "-", "--format", "csv"], RANK1);
    assert_eq!(stdout(&o), "dim,empty,b0\n0,false,1\n");
}

#[test]
fn semistable_refusal_and_force() {
    assert_eq!(run(&["compute", "-"], TRIVIAL_FLAG).status.code(), Some(2));
    let forced = run(&["compute", "-", "--force"], TRIVIAL_FLAG);
    assert_ne!(forced.status.code(), Some(2));
}

#[test]
fn decimal_weights_are_invalid_input() {
    let o = run(&["compute", "-"], &CASE_A.replace("1/3", "0.333"));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("points[0].weights[1]"));
    let o = run(&["compute", "-"], &CASE_A.replace("\"1/3\"", "0.333"));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn short_truncation_is_an_internal_failure() {
    let o = run(&["compute", "-", "--method", "recursion", "--truncation", "4"], CASE_A);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn rank2_method_on_rank3_is_rejected() {
    assert_eq!(run(&["compute", "-", "--method", "rank2"], RANK3_B).status.code(), Some(1));
}

#[test]
fn compare_reports_agreement() {
    let o = run(&["compare", "-"], RANK3_B);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("verdict: AGREE"), "{s}");
    assert!(s.contains("betti to middle 1 0 5 2 12 6 16"), "{s}");
    assert_eq!(s.lines().filter(|l| l.contains(" ok ")).count(), 3);

    let s = stdout(&run(&["compare", "-"], RANK4_A));
    assert!(s.contains("betti to middle 1 0 4 2 8 4 10"), "{s}");
}

#[test]
fn check_reports_witness_and_existence() {
    let s = stdout(&run(&["check", "-"], TRIVIAL_FLAG));
    assert!(s.contains("ss_eq_stable: FALSE"));
    assert!(s.contains("witness: rank 1"));
    let s = stdout(&run(&["check", "-"], &CASE_A.replace("\"genus\": 2", "\"genus\": 0")));
    assert!(s.contains("ss_eq_stable: TRUE"));
    assert!(s.contains("exists_stable: FALSE"));
}

#[test]
fn sweep_emits_dashes_above_the_middle() {
    let o = run(&["sweep", "-", "--genus-range", "0..2"], CASE_A);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("$\\beta_{0}$ & 0 & 1 & 1 \\\\"), "{s}");
    assert!(s.contains("$\\beta_{4}$ & - & - & 2 \\\\"), "{s}");
}

#[test]
fn sweep_with_every_cell_failing_exits_nonzero() {
    let o = run(&["sweep", "-", "--genus-range", "0..1", "--degree-range", "0..0"], TRIVIAL_FLAG);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    for fmt in ["json", "csv", "latex", "text"] {
        let a = run(&["compute", "-", "--format", fmt], RANK3_B);
        let b = run(&["compute", "-", "--format", fmt], RANK3_B);
        assert_eq!(a.stdout, b.stdout, "{fmt}");
    }
}

#[test]
fn bad_thread_count_is_invalid_input() {
    let o = Command::new(env!("CARGO_BIN_EXE_parbetti"))
        .args(["check", "/nonexistent"])
        .env("PARBETTI_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

fn document() -> impl Strategy<Value = InstanceDocument> {
    let point = (1usize..4).prop_flat_map(|m| {
        (prop::sample::subsequence((0..12i64).collect::<Vec<_>>(), m), prop::collection::vec(0u32..3, m)).prop_map(
            |(nums, mults)| PointDocument {
                weights: nums.into_iter().map(|k| if k == 0 { "0".into() } else { format!("{k}/12") }).collect(),
                multiplicities: mults,
            },
        )
    });
    (
        0u32..5,
        -10i64..10,
        prop::collection::vec(point, 1..3),
        prop::sample::select(vec!["closed", "qclosed", "recursion", "rank2"]),
        prop::option::of(0i64..50),
        any::<bool>(),
    )
        .prop_map(|(genus, degree, points, method, truncation, force)| InstanceDocument {
            genus,
            degree,
            points,
            options: OptionsDocument { method: method.into(), truncation, force },
        })
}

proptest! {
    #[test]
    fn documents_round_trip(doc in document()) {
        prop_assert_eq!(InstanceDocument::parse(&doc.to_json()).unwrap(), doc);
    }
}

#[test]
fn result_documents_mirror_results() {
    let inst = InstanceDocument::parse(RANK3_B).unwrap().to_instance().unwrap();
    let r = parbetti::compute(&inst, parbetti::Method::QClosed, &Default::default()).unwrap();
    let doc = ResultDocument::from_result(&r, None);
    let back: ResultDocument = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(back.to_result().unwrap(), r);
}
