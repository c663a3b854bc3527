use std::process::{Command, Output};

fn canon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canon")).args(args).env_remove("CANON_THREADS").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = canon(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn poly_text_and_json() {
    assert_eq!(ok(&["poly", "UUDUDD"]), "3*t^2 + 3*t^3\n");
    assert_eq!(ok(&["poly", "UD"]), "1\n");
    assert_eq!(ok(&["poly", "UUDUDDUD", "--json"]), "{\"coeffs\":[0,0,4,16,4]}\n");
    assert_eq!(ok(&["poly", "110100"]), "3*t^2 + 3*t^3\n");
}

#[test]
fn exit_codes() {
    assert_eq!(canon(&["poly", "UDDU"]).status.code(), Some(2));
    assert_eq!(canon(&["poly", "UUDX"]).status.code(), Some(2));
    assert_eq!(canon(&["poly", "UDUDUDUDUDUDUDUDUDUD"]).status.code(), Some(3));
    assert_eq!(canon(&["poly", "UDUDUD", "--brute-force-bound", "2"]).status.code(), Some(3));
    assert_eq!(canon(&["poset", "UUDUDD", "UDUDUD"]).status.code(), Some(2));
    assert_eq!(canon(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(canon(&["sequence", "nope"]).status.code(), Some(2));
    assert_eq!(canon(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn algorithms() {
    assert_eq!(ok(&["bperm", "UUUDDUDUDUUDDD"]), "7625143\n");
    assert_eq!(ok(&["vperm", "UUUDUDUDDUUDDUDD"]), "86172534\n");
    assert_eq!(ok(&["bperm", "UUDUUDDUDDUUDUDUUDDDUUDUDD"]), "13,1,12,2,11,10,8,9,7,6,5,3,4\n");
    assert_eq!(ok(&["bounce", "UUUDDUUDUUDDUUDUDDDD"]).lines().nth(1), Some("bcomp (3,4,3)"));
    assert_eq!(ok(&["tableau-poly", "1,4,7/2,5,8/3,6,9"]), "t^2 + 2*t^3 + 0*t^4 + 2*t^5 + t^6\n");
}

#[test]
fn maximizer_reports() {
    let text = ok(&["maximizers", "UUDUDDUD"]);
    assert!(text.contains("m_d 4\n") && text.contains("bperm 4132\n"));
    assert!(text.contains("M_d 4: 3421 4132 4231 4321"));
    let v: serde_json::Value = serde_json::from_str(&ok(&["maximizers", "UD", "--json"])).unwrap();
    assert_eq!(v["m_d"], 0);
    assert_eq!(v["M_d"], serde_json::json!([[1]]));
    let v: serde_json::Value = serde_json::from_str(&ok(&["maximizers", "UUDUUDDUDUDD", "--json"])).unwrap();
    assert_eq!(v["B_d"].as_array().unwrap().len(), 3);
    let blocks: usize =
        v["partition"].as_array().unwrap().iter().map(|b| b["extensions"].as_array().unwrap().len()).sum();
    assert_eq!(blocks, v["M_d"].as_array().unwrap().len());
    let big = canon(&["maximizers", "UUDUDUDUDUDUDUDUDUDUDD", "--json"]);
    assert_eq!(big.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&big.stderr).contains("not listed"));
}

#[test]
fn poset_output() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["poset", "UUDUDUDUDD", "UUDDUDUUDD", "--json"])).unwrap();
    assert_eq!(v["relations"], serde_json::json!([[1, 2], [1, 3], [3, 2], [3, 5], [4, 3], [4, 5]]));
    assert_eq!(v["extensions"].as_array().unwrap().len(), 4);
}

#[test]
fn json_is_stable_across_thread_counts() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_canon"))
            .args(["maximizers", "UUDUDUDUDUDD", "--json"])
            .env("CANON_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("3"));
    let a = ok(&["sequence", "candy", "--max-n", "5", "--json", "--threads", "1"]);
    let b = ok(&["sequence", "candy", "--max-n", "5", "--json", "--threads", "2"]);
    assert_eq!(a, b);
}

#[test]
fn sequences_and_bfile() {
    let dir = std::env::temp_dir().join(format!("canon-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("candy.txt");
    let text = ok(&["sequence", "candy", "--max-n", "6", "--bfile", file.to_str().unwrap()]);
    assert!(text.starts_with("# candy\n1 1\n2 1\n3 3\n4 9\n5 34\n6 152\n"));
    assert_eq!(std::fs::read_to_string(&file).unwrap(), "1 1\n2 1\n3 3\n4 9\n5 34\n6 152\n");
    std::fs::remove_dir_all(&dir).ok();
    assert!(ok(&["sequence", "pk-eq-bpk", "--max-n", "4"]).contains("4 13\n"));
    assert!(ok(&["sequence", "bd-singleton", "--max-n", "3"]).contains("3 4\n"));
    assert!(ok(&["sequence", "md-dist", "--max-n", "2"]).contains("# md-dist\n1 1\n2 1\n3 1\n"));
}

#[test]
fn verify_runs() {
    assert!(ok(&["verify", "--max-n", "1"]).ends_with("PASS\n"));
    let out = ok(&["verify", "--max-n", "6", "--suite", "partition,dessets"]);
    assert!(out.contains("partition: PASS") && out.contains("dessets: PASS"));
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["verify", "--max-n", "4", "--suite", "all", "--json"])).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 9);
}
