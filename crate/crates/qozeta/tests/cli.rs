//! The command-line driver: formats, exit codes and JSON round trips.

mod common;

use common::pair;
use qozeta::cli::{execute, run, Command, JobSpec, RatFuncJson, ZmotJson};
use qozeta::zeta::{zmot_curve, ztop_qo};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["qozeta"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn plain_and_latex() {
    let (code, out, _) = call(&["ztop", "z^2-x^3"]);
    assert_eq!((code, out.trim()), (0, "(4*s+5)/((s+1)*(6*s+5))"));
    let (code, out, _) = call(&["ztop", "--format", "latex", "z^2-x^3"]);
    assert_eq!(code, 0);
    assert!(out.contains("\\frac"));
    let (code, out, _) = call(&["monodromy", "x^2+z^3"]);
    assert_eq!((code, out.trim()), (0, "(1-t^2)*(1-t^3)/(1-t^6)"));
    let (code, out, _) = call(&["validate", "--vars", "x1,x2,z", "z^2-x1^3*x2^3"]);
    assert_eq!((code, out.trim()), (0, "OK: recursion == nondegenerate formula"));
}

#[test]
fn input_errors_exit_with_one() {
    for args in [
        vec!["ztop", "z^2-"],
        vec!["ztop", "z^2-y^3"],
        vec!["ztop", "(z^2-x^3)^2"],
        vec!["ztop", "--form", "0", "z^2-x^3"],
        vec!["ztop", "--form", "2", "z^2-x^3"],
        vec!["zmot", "--vars", "x1,x2,z", "(z^2-x1^3*x2)^2+x1^7*x2^2"],
        vec!["nondeg", "--vars", "x1,x2,x3,x4,x5", "--max-dim", "4", "x1^3+x2^3+x3^3+x4^3+x5^6"],
        vec!["frobnicate", "z"],
        vec!["ztop"],
    ] {
        let (code, out, err) = call(&args);
        assert_eq!(code, 1, "{args:?}: {out} {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn internal_errors_map_to_two() {
    assert!(!qozeta::Error::Internal("x".into()).is_input_error());
    assert!(qozeta::Error::NotSquarefree.is_input_error());
}

#[test]
fn json_round_trip() {
    let (code, out, _) = call(&["ztop", "--format", "json", "(z^2-x^3)^2+x^7"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let z: RatFuncJson = serde_json::from_value(v["ztop"].clone()).unwrap();
    assert_eq!(z.to_ratfunc().unwrap(), ztop_qo(&pair("(z^2-x^3)^2+x^7", "x,z"), 64).unwrap());
    assert_eq!(v["poles"][1]["s0"], "-3/7");
    assert!(z.num.iter().all(|c| c.parse::<i64>().is_ok() || c.contains('/')));

    let (code, out, _) = call(&["zmot", "--format", "json", "z^3-x^5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let m: ZmotJson = serde_json::from_value(v["zmot"].clone()).unwrap();
    assert_eq!(m.method, "curve-recursion");
    assert_eq!(m.to_motivic().unwrap(), zmot_curve(&pair("z^3-x^5", "x,z"), 64).unwrap().simplify());
}

#[test]
fn json_is_deterministic() {
    let args = ["check", "--format", "json", "--vars", "x,y,z", "(z^2-x^3)^2+x^11*y"];
    let (_, a, _) = call(&args);
    let (_, b, _) = call(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["status"] != "FAILED"));
}

#[test]
fn file_input_and_form() {
    let path = std::env::temp_dir().join(format!("qozeta-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "x*(z^2-x^3)\n").unwrap();
    let (code, out, _) = call(&["ztop", "--form", "2", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(s^2+7*s+7)/((s+1)*(s+2)*(8*s+7))");
}

#[test]
fn library_jobs() {
    let mut job = JobSpec::new(Command::Poles, "z^2-x1^2*x2", &["x1", "x2", "z"]);
    let r = execute(&job).unwrap();
    assert!(r.cp.unwrap().iter().any(|&(n, nu, _)| (n, nu) == (2, 3)));
    assert!(!r.scp.unwrap().iter().any(|&(n, nu, _)| n * 3 == nu * 2));
    job.command = Command::Tree;
    assert!(execute(&job).unwrap().tree.is_some());
}
