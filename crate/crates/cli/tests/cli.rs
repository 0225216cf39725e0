use std::process::{Command, Output};

fn threecore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_threecore"))
        .args(args)
        .env_remove("CORE3_BRUTE_CAP")
        .env_remove("CORE3_SIEVE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_records() {
    let o = threecore(&["compute", "A3", "6", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"kind\":\"A3\",\"n\":6,\"value\":\"14\",\"method\":\"formula\"}\n");

    let o = threecore(&["compute", "B3", "0", "--method", "brute"]);
    assert!(stdout(&o).contains("\"value\":\"1\""));
    let o = threecore(&["compute", "a3", "3", "--method", "series"]);
    assert!(stdout(&o).contains("\"value\":\"0\""));
    let o = threecore(&["compute", "B3", "4", "--method", "lambert", "--format", "csv"]);
    assert_eq!(stdout(&o), "kind,n,value,method\nB3,4,24,lambert\n");
}

#[test]
fn tables() {
    let o = threecore(&["table", "a3", "--nmax", "5", "--method", "formula", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "kind,n,value,method\na3,0,1,formula\na3,1,1,formula\na3,2,2,formula\na3,3,0,formula\na3,4,2,formula\n"
    );
    let o = threecore(&["table", "B3", "--nmax", "4", "--format", "jsonl"]);
    let values: Vec<String> = stdout(&o)
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            let obj = v.as_object().unwrap();
            let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
            assert_eq!(keys.len(), 4);
            v["value"].as_str().unwrap().to_string()
        })
        .collect();
    assert_eq!(values, ["1", "3", "9", "13"]);

    let o = threecore(&["table", "A3", "--nmax", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "kind,n,value,method\n");
}

#[test]
fn jsonl_key_order_is_fixed() {
    let o = threecore(&["table", "A3", "--nmax", "3", "--format", "jsonl", "--method", "series"]);
    for line in stdout(&o).lines() {
        let k = line.find("\"kind\"").unwrap();
        let n = line.find("\"n\"").unwrap();
        let v = line.find("\"value\"").unwrap();
        let m = line.find("\"method\"").unwrap();
        assert!(k < n && n < v && v < m, "{line}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "B3", "--nmax", "300", "--method", "lambert", "--format", "jsonl"];
    assert_eq!(threecore(&args).stdout, threecore(&args).stdout);
}

#[test]
fn methods_agree_through_the_cli() {
    let rows = |method: &str| {
        let o = threecore(&["table", "B3", "--nmax", "40", "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        stdout(&o)
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(2).unwrap().to_string())
            .collect::<Vec<_>>()
    };
    let reference = rows("formula");
    for method in ["series", "lambert", "brute"] {
        assert_eq!(rows(method), reference, "{method}");
    }
}

#[test]
fn verify_families() {
    let o = threecore(&["verify", "xia-congruence", "--nmax", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("xia-congruence: PASS"));
    let report: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(report["family"], "xia-congruence");
    assert_eq!(report["checked"], 2002);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);

    let o = threecore(&["verify", "BN", "--kmax", "5", "--nmax", "200"]);
    assert_eq!(o.status.code(), Some(0));

    let o = threecore(&["verify", "xia-conjecture", "--p", "5", "--j", "2", "--alpha-max", "1", "--nmax", "50"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "relation-general", "--p", "3"][..],
        &["verify", "no-such-family"],
        &["verify", "xia-conjecture", "--p", "2"],
        &["compute", "a4", "1"],
        &["compute", "a3", "1", "--method", "abacus"],
        &["compute", "a3", "41", "--method", "brute"],
        &["compute", "a3", "2000", "--method", "series"],
        &["table", "a3", "--nmax", "5", "--format", "xml"],
        &["selfcheck", "--nmax", "0"],
    ] {
        assert_eq!(threecore(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn environment_overrides() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_threecore"))
            .args(["compute", "a3", "45", "--method", "brute"])
            .env("CORE3_BRUTE_CAP", cap)
            .output()
            .unwrap()
    };
    let o = run("50");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"n\":45"));
    assert_eq!(run("0").status.code(), Some(2));
    assert_eq!(run("many").status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_threecore"))
        .args(["compute", "A3", "100000"])
        .env("CORE3_SIEVE_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn selfcheck_small() {
    let o = threecore(&["selfcheck", "--nmax", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("cross-validate: PASS"));
    assert!(out.contains("brute n<40"));
    assert!(out.trim_end().ends_with("selfcheck: PASS"));
}

#[test]
fn overflow_exits_1() {
    let o = threecore(&["compute", "A3", "18446744073709551615"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflow"));
}
