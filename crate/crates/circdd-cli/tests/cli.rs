//! End-to-end tests of the command-line interface: subcommand surfaces,
//! output determinism and exit-code semantics.

use std::process::{Command, Output};

fn circdd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circdd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bounds_reports_m_ac() {
    let out = circdd(&["bounds", "--degree", "10", "--diameter", "4"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["m_ac"], 681);
    assert_eq!(v["results"]["conjectured_leading"], "512/3125");
    assert_eq!(v["status"], 0);
}

#[test]
fn family_gen_pins_table_values() {
    let out = circdd(&[
        "family", "gen", "--degree", "10", "--class", "0", "--set", "1", "--k", "10",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["order"], 22805);
    assert_eq!(
        v["results"]["gens"],
        serde_json::json!([1, 313, 2495, 2846, 5662])
    );
    let out = circdd(&["family", "order", "--degree", "11", "--class", "0", "--k", "10"]);
    assert_eq!(json_of(&out)["results"]["order"], 35880);
}

#[test]
fn family_list_names_all_classes() {
    let out = circdd(&["family", "list"]);
    let v = json_of(&out);
    let fams = v["results"]["families"].as_array().unwrap();
    assert_eq!(fams.len(), 13);
}

#[test]
fn diameter_of_a_cycle() {
    let out = circdd(&["diameter", "--order", "5", "--gens", "1", "--degree", "2"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["results"]["diameter"], 2);
}

#[test]
fn gensets_enumerates_primitive_sets() {
    let out = circdd(&[
        "gensets", "--order", "22805", "--gens", "1,313,2495,2846,5662",
    ]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["results"]["count"], 4);
}

#[test]
fn identical_requests_yield_identical_bytes() {
    let a = circdd(&["bounds", "--degree", "11", "--diameter", "3"]);
    let b = circdd(&["bounds", "--degree", "11", "--diameter", "3"]);
    assert_eq!(a.stdout, b.stdout);
    // verify runs carry timings only under the isolated perf key, so the
    // deterministic payload is byte-stable as well
    let a = circdd(&["verify", "--degree", "10", "--k-max", "5"]);
    let b = circdd(&["verify", "--degree", "10", "--k-max", "5"]);
    assert_eq!(a.stdout, b.stdout);
    // round trip: parse(emit(report)) succeeds and re-emits identically
    let v = json_of(&a);
    let re = serde_json::to_string_pretty(&v).unwrap();
    let v2: serde_json::Value = serde_json::from_str(&re).unwrap();
    assert_eq!(v, v2);
}

#[test]
fn verify_suite_passes_and_exit_codes_work() {
    let out = circdd(&["verify", "--degree", "10", "--k-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["results"]["failed"] == 0);
    // below the family threshold: empty suite, warning, exit 0
    let out = circdd(&["verify", "--degree", "10", "--k-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(!v["warnings"].as_array().unwrap().is_empty());
    // unknown flag: usage error, exit 1
    let out = circdd(&["verify", "--degree", "10", "--k-max", "5", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    // starved memory budget: skips recorded, exit 3
    let out = circdd(&[
        "verify", "--degree", "10", "--k-max", "5", "--mem-cap", "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert!(v["results"]["skipped"].as_u64().unwrap() > 0);
    for skip in v["results"]["skips"].as_array().unwrap() {
        assert!(!skip["reason"].as_str().unwrap().is_empty());
    }
}

#[test]
fn verify_csv_has_fixed_columns() {
    let out = circdd(&["verify", "--degree", "10", "--k-max", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "degree,class,set,subset,k,n,diameter,engine,pass,ms"
    );
    assert!(lines.clone().count() >= 10);
    assert!(lines.all(|l| l.split(',').count() == 10));
}

#[test]
fn verify_paper_tables_summary() {
    let out = circdd(&[
        "verify", "--degree", "10", "--k-max", "6", "--paper-tables",
    ]);
    let v = json_of(&out);
    let rows = v["results"]["paper_tables"].as_array().unwrap();
    // k=2..6 rows including the odd-order class at k=6
    assert!(rows.iter().any(|r| r["k"] == 2 && r["order"] == 51 && r["checked_to"] == 61));
    assert!(rows.iter().any(|r| r["k"] == 6 && r["order"] == 2329));
}

#[test]
fn tables_env_override_and_verification_failure_exit_2() {
    // tamper the degree-10 class-1 generating set into constants: the file
    // still validates structurally, but BFS finds the wrong diameter
    let dir = std::env::temp_dir().join("circdd-cli-tamper");
    std::fs::create_dir_all(&dir).unwrap();
    let data10 = include_str!("../../circdd/data/degree10.json");
    let data11 = include_str!("../../circdd/data/degree11.json");
    let mut v: serde_json::Value = serde_json::from_str(data10).unwrap();
    let fam = v["families"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|f| f["class"] == "1")
        .unwrap();
    let gens = &mut fam["sets"][0]["subsets"][0]["generators"];
    for (i, c0) in [3i64, 7, 9, 11].iter().enumerate() {
        gens[i + 1] = serde_json::json!({"coeffs": [0, 0, 0, 0, 0, c0], "div": 1});
    }
    std::fs::write(dir.join("degree10.json"), serde_json::to_string(&v).unwrap()).unwrap();
    std::fs::write(dir.join("degree11.json"), data11).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_circdd"))
        .args(["verify", "--degree", "10", "--k-max", "6"])
        .env("CIRCDD_TABLES", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "stdout: {}", String::from_utf8_lossy(&out.stdout));
    let v = json_of(&out);
    assert!(v["results"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn lattice_check_suites() {
    let out = circdd(&["lattice", "check", "--theorem", "3", "--k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["results"]["determinant"], "1099");
    assert_eq!(v["results"]["combos_pass"], true);
    assert_eq!(v["results"]["covering_pass"], true);
    assert!(v["results"]["orthants_pass"].is_null());
    assert!(!v["warnings"].as_array().unwrap().is_empty());

    let out = circdd(&["lattice", "check", "--theorem", "3", "--k", "10", "--suite", "orthants"]);
    assert_eq!(json_of(&out)["results"]["orthants_pass"], true);

    let out = circdd(&["lattice", "check", "--theorem", "12", "--k", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_small_case_and_checkpoint() {
    let out = circdd(&["search", "--degree", "4", "--diameter", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["results"]["best_order"], 13);
    assert_eq!(v["results"]["exhaustive"], true);

    // zero budget: resumable checkpoint written, exit 3
    let cp = std::env::temp_dir().join("circdd-cli-checkpoint.json");
    let _ = std::fs::remove_file(&cp);
    let out = circdd(&[
        "search", "--degree", "10", "--diameter", "3",
        "--budget-secs", "0", "--checkpoint", cp.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let saved: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cp).unwrap()).unwrap();
    assert_eq!(saved["next_n"], 231);

    let out = circdd(&["search", "--degree", "2", "--diameter", "7", "--confirm", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["results"]["extremal_confirmed"], true);
}
