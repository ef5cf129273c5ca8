use std::process::{Command, Output};

use kv_cli::report::{KvJson, SCHEMA};

fn kv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kv")).args(args).env_remove("KV_DEFAULT_P").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hilbert_of_three_points() {
    let o = kv(&["hilbert", "--quotient", "xy,xz,yz"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("polynomial: 3\n"), "{text}");
    assert!(text.contains("stable from: 1\n"), "{text}");
}

#[test]
fn syzygies_and_saturation() {
    assert_eq!(stdout(&kv(&["syz", "xy,xz,yz"])), "(z, -y, 0)\n(0, y, -x)\n");
    assert_eq!(stdout(&kv(&["saturate", "x^2,x*y,x*z"])), "x\n");
    assert_eq!(stdout(&kv(&["saturate", "x^2,x*y"])), "x^2\nx*y\n");
    assert_eq!(stdout(&kv(&["gb", "x,y,x^2"])), "y\nx\n");
}

#[test]
fn check_verdicts_and_exit_codes() {
    let lci = kv(&["check", "xy,xz,yz"]);
    assert_eq!(lci.status.code(), Some(0));
    assert!(stdout(&lci).contains("K=V: true\nlci: true\n"));

    let fat = kv(&["check", "x^2,x*y,y^2"]);
    assert_eq!(fat.status.code(), Some(0));
    let text = stdout(&fat);
    assert!(text.contains("K=V: false\nlci: false\n") && text.contains("Herzog slack: 1\n"), "{text}");

    let regular = kv(&["check", "x,y,z"]);
    assert_eq!(regular.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&regular.stderr).contains("codimension"));

    let bad = kv(&["check", "x + w"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position 4"));

    assert_eq!(kv(&["verify", "nope"]).status.code(), Some(1));
    assert_eq!(kv(&["--p", "32001", "gb", "x"]).status.code(), Some(1));
}

#[test]
fn json_round_trip_and_determinism() {
    let a = kv(&["--json", "check", "x^2,x*y,y^2"]);
    let b = kv(&["--json", "check", "x^2,x*y,y^2"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let doc: KvJson = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.schema, SCHEMA);
    assert_eq!(doc.field_char, 32003);
    assert_eq!((doc.deg_z, doc.herzog_slack), (3, 1));
    assert_eq!(doc.hilbert.I_mod_I2.polynomial, "7");
    assert_eq!(doc.witnesses.len(), 1);
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", text);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["schema", "field_char", "input", "degrees", "deg_Z", "hilbert", "verdicts", "witnesses"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_is_deterministic() {
    let a = kv(&["--json", "--seed", "5", "verify", "herzog", "--trials", "8"]);
    let b = kv(&["--json", "--seed", "5", "verify", "herzog", "--trials", "8"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let arr = kv(&["verify", "arrangements"]);
    assert!(stdout(&arr).ends_with("arrangements: 16/16 passed\n"));
    assert!(stdout(&kv(&["verify", "five-points", "--seed", "7"])).contains("witness ("));
}

#[test]
fn prime_from_environment_and_file_input() {
    let o = Command::new(env!("CARGO_BIN_EXE_kv"))
        .args(["--json", "check", "xy,xz,yz"])
        .env("KV_DEFAULT_P", "101")
        .output()
        .unwrap();
    let doc: KvJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc.field_char, 101);

    let path = std::env::temp_dir().join(format!("kv-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, "xy\nxz\n\nyz\n").unwrap();
    let o = kv(&["hilbert", "--quotient", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert!(stdout(&o).contains("polynomial: 3\n"));
}
