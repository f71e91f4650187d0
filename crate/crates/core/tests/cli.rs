use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], input: &str) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_turancover"))
        .args(args)
        .env_remove("TURANCOVER_SIZE_GUARD")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn ok(args: &[&str], input: &str) -> String {
    let (out, err, code) = run(args, input);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn k4_blowup() -> String {
    ok(&["blowup", "--k", "2"], &ok(&["gen", "complete", "--n", "4", "--t", "3"], ""))
}

#[test]
fn k4_tau_is_two() {
    assert_eq!(ok(&["oracle", "tau"], &k4_blowup()), "2\n");
    assert_eq!(ok(&["oracle", "nu"], &k4_blowup()), "1\n");
    assert_eq!(ok(&["oracle", "taustar"], &k4_blowup()), "2/1\n");
}

#[test]
fn round_then_verify() {
    let rounded = ok(&["round", "ahtp", "--seed", "7", "--trials", "20", "--mode", "exact"], &k4_blowup());
    assert!(rounded.starts_with("COVER "));
    assert!(rounded.contains("\nBREAKDOWN U="));
    assert!(rounded.contains("\nSEED 7 TRIAL "));
    assert_eq!(ok(&["verify", "cover"], &rounded), "OK\n");
    for alg in [&["round", "t2", "--seed", "1"][..], &["round", "threshold"][..]] {
        let r = ok(alg, &k4_blowup());
        assert_eq!(ok(&["verify", "cover"], &r), "OK\n");
    }
}

#[test]
fn bad_cover_fails_verification() {
    let input = format!("COVER 1\n0\n{}", k4_blowup());
    let (out, _, code) = run(&["verify", "cover"], &input);
    assert_eq!(code, 5);
    assert!(out.starts_with("FAIL edge"));
}

#[test]
fn witnesses_verify() {
    let k4 = k4_blowup();
    let cover = ok(&["oracle", "tau", "--witness"], &k4);
    let cover_doc = cover.split_once('\n').unwrap().1;
    assert_eq!(ok(&["verify", "cover"], &format!("{cover_doc}{k4}")), "OK\n");
    let g = ok(&["gen", "complete", "--n", "6", "--t", "3"], "");
    let m = ok(&["oracle", "nu", "--witness"], &g);
    let m_doc = m.split_once('\n').unwrap().1;
    assert_eq!(ok(&["verify", "matching"], &format!("{m_doc}{g}")), "OK\n");
}

#[test]
fn lines_have_no_tents() {
    let lines = ok(&["gen", "lines", "--n", "2"], "");
    assert!(lines.starts_with("HG 3 9 7\n"));
    assert_eq!(ok(&["oracle", "tents"], &lines), "TENTS 0\n");
}

#[test]
fn generated_documents_reparse() {
    let g = ok(&["gen", "random", "--n", "8", "--t", "3", "--p", "0.4", "--seed", "1"], "");
    // blowup --k 1 relabels vertices by singletons, so edges are unchanged
    let b = ok(&["blowup", "--k", "1"], &g);
    assert!(b.starts_with(&g));
    let ss = ok(&["gen", "hard-setcover", "--k", "4"], "");
    assert!(ss.starts_with("SS 16 "));
    let trace = ok(&["setcover", "greedy"], &ss);
    assert!(trace.starts_with("GREEDY "));
    assert_eq!(ok(&["verify", "simple"], &ss), "OK\n");
}

#[test]
fn exit_codes() {
    let (_, err, code) = run(&["oracle", "tau"], "HG 3 4 1\n0 1 x\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (_, _, code) = run(&["gen", "random", "--n", "5", "--t", "3", "--p", "0.5"], "");
    assert_eq!(code, 3);
    assert_eq!(run(&["--lenient", "gen", "random", "--n", "5", "--t", "3", "--p", "0.5"], "").2, 0);
    let (_, _, code) = run(&["--guard", "enum=10", "gen", "complete", "--n", "10", "--t", "3"], "");
    assert_eq!(code, 4);
    let (_, _, code) = run(&["blowup", "--k", "3"], "HG 3 3 1\n0 1 2\n");
    assert_eq!(code, 3);
    let (_, _, code) = run(&["verify", "simple"], "HG 3 4 2\n0 1 2\n0 1 3\n");
    assert_eq!(code, 5);
}

#[test]
fn size_guard_env() {
    let g = ok(&["gen", "complete", "--n", "8", "--t", "3"], "");
    let out = Command::new(env!("CARGO_BIN_EXE_turancover"))
        .args(["--input", "/dev/stdin", "lp", "vc"])
        .env("TURANCOVER_SIZE_GUARD", "10")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(g.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn dedup_flag() {
    let dup = "HG 3 4 2\n0 1 2\n2 1 0\n";
    assert_eq!(run(&["oracle", "tau"], dup).2, 2);
    assert_eq!(ok(&["--dedup", "oracle", "tau"], dup), "1\n");
}
