use std::process::{Command, Output};

use serde_json::Value;

fn rhs5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhs5"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = rhs5(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn link_of_genus_one_curve() {
    let v = json(&["link", "--weights", "1,2,3", "--degree", "7", "--format", "json"]);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["betti"], 2);
    assert_eq!(v["betti_label"], "b1");
    assert_eq!(v["delta_poly"].as_array().unwrap().len(), 21);
}

#[test]
fn poincare_link_is_a_homology_sphere() {
    let v = json(&["link", "--weights", "15,10,6", "--degree", "30"]);
    assert_eq!(v["betti"], 0);
    assert_eq!(v["delta_at_one"], "1");
    assert_eq!(v["genus"], 0);
}

#[test]
fn realize_order_64_has_three_candidates() {
    let v = json(&["realize", "8"]);
    assert_eq!(v["h2_order"], "64");
    assert_eq!(v["b2"], 0);
    assert_eq!(v["group_undetermined"], true);
    assert!(v["manifold"].is_null());
    let names: Vec<&str> = v["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["M_8", "M_4 # M_2", "M_2 # M_2 # M_2"]);
}

#[test]
fn realize_squarefree_is_unique() {
    let v = json(&["realize", "6"]);
    assert_eq!(v["chosen_p"], 7);
    assert_eq!(v["manifold"]["name"], "M_2 # M_3");
    assert_eq!(v["h2_order"], "36");
}

#[test]
fn cover_requires_coprime_k() {
    let out = rhs5(&["cover", "--weights", "1,1,1", "--degree", "3", "-k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("coprime"));
}

#[test]
fn cover_diagnostic_reports_non_coprime_case() {
    let v = json(&["cover", "--weights", "1,1,1", "--degree", "3", "-k", "3", "--diagnostic"]);
    assert_eq!(v["coprime"], false);
    assert_eq!(v["b2"], 6);
}

#[test]
fn cover_with_and_without_direct_path() {
    let v = json(&["cover", "--weights", "1,2,3", "--degree", "7", "-k", "5"]);
    assert_eq!(v["paths_agree"], true);
    assert_eq!(v["h2_order"], "25");
    let v = json(&["cover", "--weights", "1,2,3", "--degree", "7", "-k", "5", "--skip-direct-path"]);
    assert!(v["paths_agree"].is_null());
    assert_eq!(v["h2_order"], "25");
}

#[test]
fn bad_input_exits_one() {
    for args in [
        &["genus", "--weights", "1,2", "--degree", "7"][..],
        &["genus", "--weights", "0,1,1", "--degree", "3"],
        &["link", "--weights", "1,4,6", "--degree", "8"],
        &["realize", "2", "--prime", "13"],
        &["realize", "1"],
        &["link", "--weights", "a,b", "--degree", "3"],
        &["verify", "--max-degree", "1000"],
        &["smale-enum", "0"],
        &["frobnicate"],
    ] {
        let out = rhs5(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(rhs5(&["--help"]).status.code(), Some(0));
}

#[test]
fn small_verify_passes() {
    let v = json(&["verify", "--max-degree", "3"]);
    assert_eq!(v["grid_size"], 12);
    for p in v["properties"].as_array().unwrap() {
        assert_eq!(p["failed"], 0);
    }
    let v = json(&["verify", "--max-degree", "0"]);
    assert_eq!(v["grid_size"], 0);
}

#[test]
fn listings() {
    let v = json(&["primes", "--limit", "50"]);
    assert_eq!(v["primes"], serde_json::json!([3, 7, 11, 19, 23, 31, 43, 47]));
    let v = json(&["smale-enum", "12"]);
    assert_eq!(v["unique"], false);
    assert_eq!(v["candidates"].as_array().unwrap().len(), 2);
    let v = json(&["search", "--genus", "1", "--max-degree", "7"]);
    let systems = v["systems"].as_array().unwrap();
    assert!(systems.contains(&serde_json::json!({"weights": [1, 2, 3], "degree": 7})));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["realize", "12"][..],
        &["link", "--weights", "15,10,6", "--degree", "30"],
        &["--format", "text", "cover", "--weights", "1,1,1", "--degree", "4", "-k", "7"],
        &["search", "--genus", "2", "--max-degree", "12"],
    ] {
        let a = rhs5(args);
        let b = rhs5(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_format() {
    let out = rhs5(&["--format", "text", "genus", "--weights", "1,1,1", "--degree", "5"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "(1,1,1; 5): genus 6\n");
}
