use std::path::PathBuf;
use std::process::{Command, Output};

use exactalg::json::parse_poly;
use exactalg::{vars_of, MPoly};
use serde_json::Value;

fn jackpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jackpow"))
        .args(args)
        .env_remove("JACK_MAX_WEIGHT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn theta_of_two_is_alpha() {
    let out = jackpow(&["jack", "theta", "--lambda", "2", "--rho", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"vars\":[\"alpha\"],\"terms\":[{\"exp\":[1],\"coef\":\"1\"}]}\n"
    );
}

#[test]
fn rect_theta_first_row() {
    let out = jackpow(&["rect", "theta", "--mu", "2"]);
    assert!(out.status.success());
    let got = parse_poly(stdout(&out).trim()).unwrap();
    let v = vars_of(&["p", "q", "alpha", "beta"]);
    let x = |n: &str| MPoly::var(&v, n);
    let expected = -&(&(&x("p") * &x("q")) * &(&(&x("p") - &(&x("alpha") * &x("q"))) + &x("beta")));
    assert_eq!(got, expected);
}

#[test]
fn identities_up_to_three_pass() {
    let out = jackpow(&["verify", "identities", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let s = &v["summary"];
    assert_eq!(s["fail"], 0);
    assert!(s["pass"].as_u64().unwrap() > 0);
    assert_eq!(s["pass"], s["total"]);
    assert_eq!(
        v["reports"].as_array().unwrap().len() as u64,
        s["total"].as_u64().unwrap()
    );
    assert!(v["reports"][0].get("runtime_ms").is_none());
}

#[test]
fn golden_files_match() {
    let dir = golden_dir();
    let out = jackpow(&["verify", "golden", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn failing_report_exits_one() {
    let tmp = std::env::temp_dir().join(format!("jackpow-golden-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    for e in std::fs::read_dir(golden_dir()).unwrap() {
        let e = e.unwrap();
        std::fs::copy(e.path(), tmp.join(e.file_name())).unwrap();
    }
    std::fs::write(tmp.join("rect_theta_2.json"), "{}\n").unwrap();
    let out = jackpow(&["verify", "golden", "--dir", tmp.to_str().unwrap()]);
    std::fs::remove_dir_all(&tmp).unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["summary"]["fail"], 1);
    assert_eq!(
        v["summary"]["first_failures"][0]["params"]["case"],
        "rect_theta_2"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["jack", "theta", "--lambda", "1,2", "--rho", "2"][..],
        &["theta", "hat", "--lambda", "3", "--mu", "4"],
        &["rect", "theta", "--mu", "2,1"],
        &["rect", "boundary", "--mu", "2", "--which", "sideways"],
        &["verify", "identities", "--check", "I9"],
        &["frobnicate"],
    ] {
        let out = jackpow(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = jackpow(&["theta", "hat", "--lambda", "3", "--mu", "4"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string());
}

#[test]
fn weight_limit_from_environment() {
    let run = |w: &str| {
        Command::new(env!("CARGO_BIN_EXE_jackpow"))
            .args(["jack", "expand", "--lambda", "2,2"])
            .env("JACK_MAX_WEIGHT", w)
            .output()
            .unwrap()
    };
    assert_eq!(run("3").status.code(), Some(2));
    assert_eq!(run("4").status.code(), Some(0));
    assert_eq!(run("0").status.code(), Some(2));
    let out = jackpow(&["--max-weight", "3", "jack", "expand", "--lambda", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sampled_sweep_is_reproducible() {
    let args = |jobs: &'static str, seed: &'static str| {
        [
            "--jobs",
            jobs,
            "--seed",
            seed,
            "verify",
            "identities",
            "--max-n",
            "6",
            "--sample",
            "5",
        ]
    };
    let a = jackpow(&args("1", "7"));
    let b = jackpow(&args("1", "7"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let sorted = |o: &Output| {
        let mut r: Vec<String> = json(o)["reports"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        r.sort();
        r
    };
    assert_eq!(sorted(&a), sorted(&jackpow(&args("2", "7"))));
    assert_ne!(sorted(&a), sorted(&jackpow(&args("1", "8"))));
}

#[test]
fn timings_are_opt_in() {
    let out = jackpow(&[
        "--timings",
        "verify",
        "identities",
        "--max-n",
        "3",
        "--check",
        "I3_e0_raise",
    ]);
    let v = json(&out);
    assert!(v["reports"][0]["runtime_ms"].is_u64());
}

#[test]
fn text_output() {
    let out = jackpow(&["--output", "text", "partitions", "--n", "3"]);
    assert_eq!(stdout(&out), "3\n2,1\n1,1,1\n");
    let out = jackpow(&["--output", "text", "partitions", "--n", "0"]);
    assert_eq!(stdout(&out), "-\n");
    let out = jackpow(&["partitions", "--n", "3", "--inside", "2,1"]);
    assert_eq!(stdout(&out), "[[2,1]]\n");
    let out = jackpow(&["--output", "text", "verify", "table6"]);
    assert!(stdout(&out).ends_with("total 10, pass 10, fail 0, finding 0\n"));
}

#[test]
fn audit_block() {
    let out = jackpow(&["theta", "rect", "--m", "1", "--mu", "3,2"]);
    let v = json(&out);
    assert_eq!(
        v["audit"],
        serde_json::json!({"nonneg": true, "integer": true, "unit": true})
    );
    let closed = jackpow(&[
        "theta", "rect", "--m", "1", "--mu", "3,2", "--mode", "closed",
    ]);
    assert_eq!(json(&closed)["poly"], v["poly"]);
    let out = jackpow(&["theta", "rect", "--m", "2", "--mu", "2", "--mode", "closed"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn boundary_and_divisibility() {
    let out = jackpow(&["rect", "boundary", "--mu", "2", "--which", "remove_box"]);
    assert!(out.status.success());
    let out = jackpow(&[
        "rect",
        "divisibility",
        "--mu",
        "3,2",
        "--p",
        "3",
        "--q",
        "1",
    ]);
    let v = json(&out);
    assert_eq!(v["divisible"], true);
    assert!(v["quotient"].is_object());
    let out = jackpow(&["rect", "divisibility", "--mu", "2", "--p", "0", "--q", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
