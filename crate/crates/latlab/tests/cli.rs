use std::process::{Command, Output};

use latlab_core::IntMatrix;
use serde_json::Value;

fn latlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latlab")).args(args).env_remove("LATLAB_JOBS").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = latlab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    latlab(args).status.code().unwrap()
}

#[test]
fn build_outputs_lattice_json() {
    let l = json(&["build", "Ld:7"]);
    assert_eq!(l["det"], "540");
    assert_eq!(l["rank"], "7");
    assert_eq!(l["labels"].as_array().unwrap().len(), 9);
    assert_eq!(l["basis"].as_array().unwrap().len(), 7);
    assert_eq!(l["rows"][1]["modulus"], "0");
    assert_eq!(json(&["build", "T:3"])["det"], "64");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["build", "Ld:7:excl=99"]), 2);
    assert_eq!(code(&["build", "Xy:3"]), 2);
    assert_eq!(code(&["table", "nope"]), 2);
    assert_eq!(code(&["verify", "SidonInv:q=11"]), 2);
    assert_eq!(code(&["craig", "--q", "9", "--k", "2", "--method", "formula"]), 2);
    assert_eq!(code(&["craig", "--q", "5", "--k", "5"]), 3);
    assert_eq!(code(&["analyze", "Craig:q=7,k=2", "--norm-cap", "4"]), 3);
    assert_eq!(code(&["analyze", "LA:Z/7", "--jobs", "0"]), 2);
    assert_eq!(code(&["table", "O9"]), 1);
}

#[test]
fn analyze_reports() {
    let r = json(&["analyze", "LA:Z/7"]);
    assert_eq!((r["d"].as_u64(), r["mp"].as_u64(), r["pd"].as_u64()), (Some(6), Some(21), Some(0)));
    assert_eq!(r["family"], "LA");
    let r = json(&["analyze", "Mneg:Z/16"]);
    assert_eq!((r["d"].as_u64(), r["det"].as_str(), r["pd"].as_u64()), (Some(9), Some("1024"), Some(0)));
    let r = json(&["analyze", "Od:10:excl=1"]);
    assert_eq!((r["det"].as_str(), r["mp"].as_u64(), r["pd"].as_u64()), (Some("2299"), Some(81), Some(0)));
    assert_eq!(r["params"], "10:excl=1");
}

#[test]
fn verify_reports_agreement() {
    let r = json(&["verify", "Craig:q=11,k=2"]);
    let pairs = &r.as_array().unwrap()[1];
    assert_eq!((pairs["formula"].as_str(), pairs["agree"].as_bool()), (Some("55"), Some(true)));
    let r = json(&["verify", "Ld:12"]);
    assert!(r.as_array().unwrap().iter().all(|x| x["agree"] == true));
    let r = json(&["verify", "LAsub:Z/9:drop=0"]);
    assert_eq!(r[0]["computed"], "30");
}

#[test]
fn minvec() {
    let m = json(&["minvec", "Ld:6"]);
    assert_eq!((m["norm"].as_str(), m["count"].as_str()), (Some("4"), Some("22")));
    assert_eq!(m["vectors"].as_array().unwrap().len(), 22);
    assert_eq!(json(&["minvec", "Ld:7", "--norm", "2"])["count"], "0");
}

#[test]
fn tables() {
    let t = json(&["table", "L8-single"]);
    assert_eq!(t["status"], "match");
    assert_eq!(t["rows"].as_array().unwrap().len(), 5);
    assert_eq!(t["rows"][0]["mp"], "46");
    let t = json(&["table", "D-scan-k1"]);
    let ds: Vec<&str> = t["rows"].as_array().unwrap()[..10].iter().map(|r| r["D"].as_str().unwrap()).collect();
    assert_eq!(ds.join(" "), "7 8 8 7 8 9 7 8 8 7");
    assert_eq!(t["rows"][10]["D"], "9");
}

#[test]
fn o9_table_lists_the_single_differing_cell() {
    let out = latlab(&["table", "O9"]);
    assert_eq!(out.status.code(), Some(1));
    let t: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(t["rows"].as_array().unwrap().len(), 10);
    assert_eq!(t["status"], "mismatch");
    let diffs = t["diffs"].as_array().unwrap();
    assert_eq!(diffs.len(), 1);
    assert_eq!((diffs[0]["row"].as_str(), diffs[0]["field"].as_str()), (Some("O9(1)"), Some("mp")));
    assert_eq!((diffs[0]["expected"].as_str(), diffs[0]["got"].as_str()), (Some("59"), Some("57")));
}

#[test]
fn scan_d() {
    let s = json(&["scan-D", "--excl", "6", "--dmax", "15"]);
    assert_eq!(s["D"].as_u64(), Some(9));
    assert_eq!(s["tail_bound"].as_u64(), Some(15));
    assert_eq!(s["entries"].as_array().unwrap().len(), 15);
    assert!(json(&["scan-D", "--excl", "6", "--dmax", "10"])["D"].is_null());
    assert_eq!(json(&["scan-D", "--dmax", "7"])["D"].as_u64(), Some(7));
    assert_eq!(code(&["scan-D", "--excl", "x", "--dmax", "5"]), 2);
}

#[test]
fn graph_output() {
    let out = latlab(&["graph", "T:3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let split = text.find('{').unwrap();
    let adj: IntMatrix = text[..split].parse().unwrap();
    assert_eq!((adj.rows(), adj.cols()), (27, 27));
    assert_eq!(adj.transpose(), adj);
    let summary: Value = serde_json::from_str(&text[split..]).unwrap();
    assert_eq!(summary["srg"], serde_json::json!(["27", "10", "1", "5"]));
    assert_eq!(summary["spectrum"], serde_json::json!({"10": "1", "1": "20", "-5": "6"}));
    let explicit = latlab(&["graph", "T:3", "--base-vector", "1,1,1,0,0,0,0"]);
    assert_eq!(String::from_utf8(explicit.stdout).unwrap(), text);
    assert_eq!(code(&["graph", "Ld:7"]), 2);
    assert_eq!(code(&["graph", "T:3", "--base-vector", "1,0,0,0,0,0,0"]), 2);
}

#[test]
fn craig_methods_agree() {
    for method in ["formula", "histogram", "enumerate"] {
        let r = json(&["craig", "--q", "11", "--k", "2", "--method", method]);
        assert_eq!((r["pairs"].as_str(), r["norm"].as_str()), (Some("55"), Some("6")), "{method}");
    }
}

#[test]
fn csv_output() {
    let out = latlab(&["analyze", "Ld:7", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "family,params,d,det,min,mp,sym_rank,pd\nLd,7,7,540,4,34,28,0\n");
    let out = latlab(&["table", "L8-double", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "\"L8(2,3)\",1041,0,43"), "{text}");
}

#[test]
fn output_independent_of_parallelism() {
    for args in [&["table", "M8"][..], &["scan-D", "--excl", "2", "--dmax", "12"], &["minvec", "Ld:9"], &["table", "craig-k3"]] {
        let base = latlab(&[args, &["--jobs", "1"]].concat()).stdout;
        let wide = latlab(&[args, &["--jobs", "4"]].concat()).stdout;
        assert_eq!(base, wide, "{args:?}");
        let env = Command::new(env!("CARGO_BIN_EXE_latlab")).args(args).env("LATLAB_JOBS", "3").output().unwrap().stdout;
        assert_eq!(base, env, "{args:?}");
    }
}
