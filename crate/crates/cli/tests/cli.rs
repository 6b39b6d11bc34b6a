use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn legtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legtwist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn info_on_unknot() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u.front", "# standard unknot\nL1 R1\n");
    let v = json(&legtwist(&["front", "info", &f]));
    assert_eq!(v["tb"], -1);
    assert_eq!(v["rot"], 0);
    assert_eq!(v["components"], 1);
    assert_eq!(v["cusps"], 2);
    assert_eq!(v["crossings"], 0);
}

#[test]
fn generated_front_round_trips_through_info() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.front");
    let out = out.to_str().unwrap();
    json(&legtwist(&[
        "twist", "front", "--m", "-4", "--word", "Z+ Z-", "--out", out,
    ]));
    let v = json(&legtwist(&["front", "info", out]));
    assert_eq!(v["tb"], 1);
    assert_eq!(v["rot"], 0);
}

#[test]
fn stabilized_file_has_lower_tb() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.front", "L1 L3 R2 R1");
    let v = json(&legtwist(&["front", "info", &f]));
    assert_eq!(v["tb"], -2);
    let v = json(&legtwist(&["front", "rulings", &f, "--rho", "1"]));
    assert_eq!(v["count"], 0);
}

#[test]
fn rulings_for_one_and_all_rho() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.front");
    let out = out.to_str().unwrap();
    json(&legtwist(&[
        "twist", "front", "--m", "-4", "--word", "Z+ Z-", "--out", out,
    ]));
    let v = json(&legtwist(&["front", "rulings", out, "--rho", "1"]));
    assert_eq!(v["rho"], 1);
    assert_eq!(v["count"], 2);
    assert_eq!(v["rulings"].as_array().unwrap().len(), 2);
    let v = json(&legtwist(&["front", "rulings", out, "--rho", "all"]));
    assert_eq!(v["signature"]["0"], 1);
    assert_eq!(v["signature"]["1"], 2);
    assert_eq!(v["signature"]["2"], 2);
}

#[test]
fn rho_must_divide_twice_rot() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.front", "L1 L3 R2 R1");
    let out = legtwist(&["front", "rulings", &f, "--rho", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn atlas_json_and_refusal() {
    let v = json(&legtwist(&["twist", "atlas", "--m", "-4"]));
    assert_eq!(v["m"], -4);
    assert_eq!(v["max_tb"], 1);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    assert_eq!(v["mountain_range"]["(0,1)"], 2);
    assert_eq!(v["mountain_range"]["(1,0)"], 1);
    assert_eq!(v["transverse"]["max_sl"], 1);
    let v = json(&legtwist(&["twist", "atlas", "--m", "-7"]));
    assert_eq!(v["mountain_range"]["(0,-3)"], 3);
    assert_eq!(v["mountain_range"]["(1,-4)"], 1);
    let v = json(&legtwist(&["twist", "atlas", "--m", "0"]));
    assert_eq!(v["mountain_range"]["(0,-1)"], 1);
    let out = legtwist(&["twist", "atlas", "--m", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknot"));
    let out = legtwist(&["twist", "atlas", "--m", "-6", "--table"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("tb\\rot"));
}

#[test]
fn classes_counts() {
    let v = json(&legtwist(&["twist", "classes", "--m", "-8"]));
    assert_eq!(v["count"], 8);
    let v = json(&legtwist(&["twist", "classes", "--m", "-8", "--pos", "1"]));
    assert_eq!(v["count"], 2);
    let v = json(&legtwist(&[
        "twist", "classes", "--m", "-8", "--pos", "1", "--neg", "1",
    ]));
    assert_eq!(v["count"], 1);
}

#[test]
fn shuffle_is_deterministic_and_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("k.front");
    let f = f.to_str().unwrap();
    json(&legtwist(&[
        "twist",
        "front",
        "--m",
        "-6",
        "--word",
        "Z+ S- S+ Z-",
        "--out",
        f,
    ]));
    let a = json(&legtwist(&[
        "moves", "shuffle", f, "--steps", "40", "--seed", "5",
    ]));
    let b = json(&legtwist(&[
        "moves", "shuffle", f, "--steps", "40", "--seed", "5",
    ]));
    assert_eq!(a, b);
    assert_eq!(a["tb"], 1);
    assert_eq!(a["rot"], 0);
    assert_eq!(a["trace"].as_array().unwrap().len(), 40);
}

#[test]
fn render_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.front", "L1 L1 X2 X2 X2 R1 R1");
    for format in ["ascii", "svg"] {
        let a = dir.path().join(format!("a.{format}"));
        let b = dir.path().join(format!("b.{format}"));
        for p in [&a, &b] {
            let out = legtwist(&[
                "render",
                &f,
                "--format",
                format,
                "--out",
                p.to_str().unwrap(),
            ]);
            assert!(out.status.success());
        }
        assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    }
}

#[test]
fn usage_and_domain_errors() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.front", "L1 X2 R1");
    let out = legtwist(&["front", "info", &f]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("token 2"));
    let out = legtwist(&["render", &f, "--format", "png"]);
    assert_eq!(out.status.code(), Some(2));
    let out = legtwist(&["front", "rulings", &f, "--rho", "many"]);
    assert_eq!(out.status.code(), Some(2));
    let out = legtwist(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
