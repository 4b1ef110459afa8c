use std::process::{Command, Output};

fn mcg(args: &[&str]) -> Output {
    mcg_env(args, None)
}

fn mcg_env(args: &[&str], budget: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_mcg"));
    c.args(args).env_remove("MCG_SEARCH_BUDGET");
    if let Some(b) = budget {
        c.env("MCG_SEARCH_BUDGET", b);
    }
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn twist_relation_verifies() {
    let o = mcg(&["twist", "verify", "lemma7.9.star"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("verified"));
    for id in ["lemma7.9.chain", "lemma7.10", "q1.chain", "q2.chain", "torus.order6"] {
        assert_eq!(code(&mcg(&["twist", "verify", id])), 0, "{id}");
    }
}

#[test]
fn roots_json_for_rootless_matrix() {
    let o = mcg(&["sl2z", "roots", "--matrix", "[[2,1],[1,1]]", "-m", "2", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), r#"{"kind":"finite","roots":[]}"#);
}

#[test]
fn big_entries_survive_json() {
    let o = mcg(&["sl2z", "roots", "--matrix", "[[1,100000000000000000000],[0,1]]", "-m", "4", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), r#"{"kind":"finite","roots":[[[-1,-25000000000000000000],[0,-1]],[[1,25000000000000000000],[0,1]]]}"#);
}

#[test]
fn charpoly_of_f2() {
    let o = mcg(&["glue", "charpoly", "--pattern", "f:2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "(x+1)^4");
}

#[test]
fn sphere_bound() {
    let o = mcg(&["orb", "maxfix", "-m", "3"]);
    assert_eq!((code(&o), stdout(&o)), (0, "2".to_string()));
}

#[test]
fn failed_claims_exit_one() {
    assert_eq!(code(&mcg(&["sym", "verify-522", "--rho", "8"])), 1);
    assert_eq!(code(&mcg(&["sym", "verify-521", "--rho", "4"])), 0);
    assert_eq!(code(&mcg(&["glue", "compare", "--first", "f:3", "--second", "g:3"])), 1);
    assert_eq!(code(&mcg(&["orb", "prongs", "--chi", "2", "--prongs", "1,1,1"])), 1);
    assert_eq!(code(&mcg(&["orb", "prongs", "--chi", "2", "--prongs", "1,1,1,1"])), 0);
    let bad_graph = r#"{"components":[{"id":1,"genus":0}],"leaves":["a","b"],"edges":[{"id":1,"ends":[1,"a"]},{"id":2,"ends":[1,"b"]}]}"#;
    assert_eq!(code(&mcg(&["graph", "validate", "--graph", bad_graph])), 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&mcg(&["sl2z", "order", "--matrix", "[[2,1],[1,2]]"])), 2);
    assert_eq!(code(&mcg(&["sl2z", "order", "--matrix", "[[1,0],[0,1]]", "--unknown"])), 2);
    assert_eq!(code(&mcg(&["twist", "verify", "no.such.relation"])), 2);
    assert_eq!(code(&mcg(&["glue", "analyze", "--pattern", "h:3"])), 2);
    assert_eq!(code(&mcg(&["orb", "maxfix", "-m", "1"])), 2);
    assert_eq!(code(&mcg(&["frobnicate"])), 2);
    let o = mcg(&["glue", "analyze", "--pattern", "f:1"]);
    assert_eq!(code(&o), 2);
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
}

#[test]
fn search_budget_from_environment() {
    assert_eq!(code(&mcg_env(&["graph", "autos", "--example", "case4"], Some("graph=5"))), 2);
    assert_eq!(code(&mcg_env(&["graph", "autos", "--example", "case4"], Some("graph=12"))), 0);
    assert_eq!(code(&mcg_env(&["orb", "maxfix", "-m", "3"], Some("nonsense"))), 2);
    let o = mcg_env(&["orb", "liftk", "--degree", "3", "--perm", "(1 2 3)", "--perm", "()", "--phi", "[[2],[1]]"], Some("lift=1"));
    assert_eq!(code(&o), 1);
    let o = mcg_env(&["sl2z", "oracle-roots", "--matrix", "[[1,2],[0,1]]", "-m", "2", "--json"], Some("brute=1"));
    assert_eq!(stdout(&o), r#"{"bound":1,"roots":[[[-1,-1],[0,-1]],[[1,1],[0,1]]]}"#);
}

#[test]
fn graph_commands() {
    let o = mcg(&["graph", "classify", "--example", "case3"]);
    assert_eq!(stdout(&o), "Case3");
    let o = mcg(&["graph", "autos", "--example", "case2", "--json"]);
    assert!(stdout(&o).contains(r#""count":2"#));
    let o = mcg(&["graph", "rank", "--example", "case1"]);
    assert_eq!(stdout(&o), "0");
}

#[test]
fn verify_all_is_deterministic_and_reports_every_recipe() {
    let a = mcg(&["verify", "all", "--json"]);
    let b = mcg(&["verify", "all", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let recipes = v["recipes"].as_array().unwrap();
    assert_eq!(recipes.len(), 10);
    let all_pass = recipes.iter().all(|r| r["passed"] == true);
    assert_eq!(v["passed"], all_pass);
    assert_eq!(code(&a), if all_pass { 0 } else { 1 });
    let timed = mcg(&["verify", "recipe", "gluing-spectra", "--timing", "--json"]);
    let t: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(t["elapsed_ms"].is_u64());
}

#[test]
fn json_output_is_deterministic_across_commands() {
    let cmds: [&[&str]; 4] = [
        &["twist", "certify", "--model", "genus1_q3", "--json"],
        &["sym", "elements", "--group", "D2nxC2:6", "--order", "6", "--json"],
        &["orb", "orders", "--genus", "2", "--q", "1", "--json"],
        &["order", "demo", "--json"],
    ];
    for c in cmds {
        assert_eq!(mcg(c).stdout, mcg(c).stdout, "{c:?}");
    }
}
