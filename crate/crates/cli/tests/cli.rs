use std::path::PathBuf;
use std::process::{Command, Output};

use num_complex::Complex64;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsstqft")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn complex(v: &Value, re: &str, im: &str) -> Complex64 {
    Complex64::new(v[re].as_f64().unwrap(), v[im].as_f64().unwrap())
}

#[test]
fn verlinde_genus_one() {
    let v = json(&["verlinde", "--r", "5", "--genus", "1", "--beta", "1/3"]);
    let z = complex(&v["result"], "value_re", "value_im");
    assert!((z - Complex64::new(5.0, 0.0)).norm() < 1e-12);
    assert_eq!(v["input"]["beta"], "1/3");
    assert_eq!(v["tolerances"]["tol"], 1e-9);
}

#[test]
fn r_divisible_by_four_is_rejected() {
    let out = run(&["verlinde", "--r", "4", "--genus", "1", "--beta", "1/3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("r ≥ 2, r ≢ 0 mod 4"));
}

#[test]
fn zinv_on_s1xs2_fixture() {
    let path = fixture("s1xs2.json");
    for r in ["2", "3", "5"] {
        let v = json(&["zinv", "--r", r, "--input", path.to_str().unwrap()]);
        let res = &v["result"];
        for key in ["Z_re", "Z_im", "m", "sigma", "b1"] {
            assert!(!res[key].is_null(), "{key}");
        }
        assert_eq!((res["m"].as_u64(), res["b1"].as_u64(), res["sigma"].as_i64()), (Some(1), Some(1), Some(0)));
        let ctx = nsstqft::RootParams::new(r.parse().unwrap()).unwrap();
        let expected = nsstqft::tqftdim::verlinde(&ctx, 0, Complex64::new(1.0 / 3.0, 0.0), &[]).unwrap();
        let z = complex(res, "Z_re", "Z_im");
        assert!((z - expected).norm() <= 1e-9 * (1.0 + expected.norm()), "r={r}");
    }
}

#[test]
fn surgery_file_can_reference_a_diagram_file() {
    let v = json(&["zinv", "--r", "3", "--input", fixture("hopf_surgery.json").to_str().unwrap()]);
    let res = &v["result"];
    let (z, zd) = (complex(res, "Z_re", "Z_im"), complex(res, "Z_defi_re", "Z_defi_im"));
    assert!((z - zd).norm() < 1e-9 * (1.0 + z.norm()));
    assert!(v["input"]["diagram"].is_object());
}

#[test]
fn flink_fixtures() {
    let ctx = nsstqft::RootParams::new(3).unwrap();
    let val = |name: &str| {
        let v = json(&["flink", "--r", "3", "--input", fixture(name).to_str().unwrap()]);
        complex(&v["result"], "F_re", "F_im")
    };
    let unknot = val("unknot.json");
    assert!((unknot - ctx.mdim(Complex64::new(0.25, 0.0)).unwrap()).norm() < 1e-10);
    assert!((val("trefoil.json") - unknot).norm() > 1e-3);
    assert!(val("hopf.json").norm() > 1e-6);
}

#[test]
fn genus_two_graph() {
    let path = fixture("genus2.json");
    let a = json(&["tqftdim", "--r", "5", "--input", path.to_str().unwrap()]);
    let b = json(&["hh0", "--r", "5", "--input", path.to_str().unwrap()]);
    assert_eq!(a["result"]["total"], 125);
    assert_eq!(a["result"]["coefficients"], b["result"]["coefficients"]);
    let legs = fixture("genus2_leg.json");
    let c = json(&["tqftdim", "--r", "3", "--input", legs.to_str().unwrap(), "--beta", "0.3,0.1"]);
    let d = json(&["verlinde", "--r", "3", "--genus", "2", "--beta", "0.3,0.1", "--point", "1/4", "--point", "-1/4"]);
    let (x, y) = (complex(&c["result"]["dim_t"], "re", "im"), complex(&d["result"], "value_re", "value_im"));
    assert!((x - y).norm() < 1e-8 * (1.0 + y.norm()));
}

#[test]
fn schema_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"components": [{"name": "K"}], "width-changes": [{"kind": "cap", "map": "ev"}]}"#).unwrap();
    let out = run(&["flink", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("width-changes[0]") && msg.contains("line"), "{msg}");
    let missing = run(&["flink", "--input", dir.path().join("none.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let surgery = dir.path().join("f1.json");
    let text = std::fs::read_to_string(fixture("s1xs2.json")).unwrap().replace("\"L\": 0", "\"L\": 1").replace("1/3", "1/2");
    std::fs::write(&surgery, text).unwrap();
    let out = run(&["zinv", "--input", surgery.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not computable"));

    let graph = dir.path().join("g.json");
    let text = std::fs::read_to_string(fixture("genus2.json"))
        .unwrap()
        .replace("\"1/3\"", "\"1\"")
        .replace("\"-5/6\"", "\"-3/2\"");
    std::fs::write(&graph, text).unwrap();
    let out = run(&["tqftdim", "--input", graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-generic"));
}

#[test]
fn echoed_input_reproduces_the_result() {
    let dir = tempfile::tempdir().unwrap();
    let first = json(&["zinv", "--r", "5", "--input", fixture("hopf_surgery.json").to_str().unwrap()]);
    let echo = dir.path().join("echo.json");
    std::fs::write(&echo, serde_json::to_string(&first["input"]).unwrap()).unwrap();
    let second = json(&["zinv", "--r", "5", "--input", echo.to_str().unwrap()]);
    assert_eq!(first["result"], second["result"]);

    let first = json(&["tqftdim", "--r", "6", "--input", fixture("genus2.json").to_str().unwrap(), "--beta", "2/7"]);
    std::fs::write(&echo, serde_json::to_string(&first["input"]["graph"]).unwrap()).unwrap();
    let second = json(&["tqftdim", "--r", "6", "--input", echo.to_str().unwrap(), "--beta", "2/7"]);
    assert_eq!(first["result"], second["result"]);
}

#[test]
fn sequential_jobs_match() {
    let path = fixture("hopf_surgery.json");
    let a = json(&["zinv", "--r", "3", "--jobs", "1", "--input", path.to_str().unwrap()]);
    let b = json(&["zinv", "--r", "3", "--input", path.to_str().unwrap()]);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--r", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["failed"], 0);
    assert!(v["result"]["passed"].as_u64().unwrap() >= 20);
}

#[test]
fn table_output() {
    let out = run(&["verlinde", "--r", "3", "--genus", "2", "--beta", "1/5"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("value_re") && text.contains("command"));
}
