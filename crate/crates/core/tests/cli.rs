use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mdens(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mdens"))
        .args(args)
        .env_remove("MD_BUDGET")
        .env_remove("MD_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn member_outside_catalog() {
    let o = mdens(&["catalog", "member", "14/11"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not in B");
}

#[test]
fn witness_pipes_into_balanced() {
    let w = mdens(&["catalog", "witness", "20/13"], None);
    assert_eq!(w.status.code(), Some(0));
    let o = mdens(&["balanced", "--strict", "-"], Some(&stdout(&w)));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
}

#[test]
fn fan_cliques_one_density() {
    let g = stdout(&mdens(&["construct", "fan-cliques:3,1"], None));
    let o = mdens(&["tdensity", "-t", "1", g.trim()], None);
    assert_eq!(stdout(&o).trim(), "25/11");
}

#[test]
fn construct_matches_in_process() {
    let g = stdout(&mdens(&["construct", "gkm:2,3"], None));
    let expected = minor_density::families::build_gkm(2, 3).unwrap();
    assert_eq!(g.trim(), minor_density::emit_graph6(&expected));
    let o = mdens(&["density", "-"], Some(&g));
    assert_eq!(stdout(&o).trim(), "2");
    let o = mdens(&["balanced"], Some(&g));
    let report = minor_density::minor::balance_check(&expected, minor_density::minor::BalanceMode::MinorBalanced).unwrap();
    assert_eq!(stdout(&o).trim(), report.verdict.to_string());
}

#[test]
fn false_verdict_and_usage_errors() {
    // C4 contracts onto C3 at the same density.
    let o = mdens(&["balanced", "--strict", "Cr"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "false");
    assert_eq!(mdens(&["density", "not graph6!"], None).status.code(), Some(2));
    assert_eq!(mdens(&["density"], None).status.code(), Some(2));
    assert_eq!(mdens(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(mdens(&["construct", "gkm:1,0"], None).status.code(), Some(2));
}

#[test]
fn budget_and_size_limits() {
    let g = stdout(&mdens(&["construct", "bowtie-star:2"], None));
    let o = mdens(&["balanced", "--budget", "2", g.trim()], None);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_mdens"))
        .args(["balanced", g.trim()])
        .env("MD_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    // The flag wins over the environment.
    let o = Command::new(env!("CARGO_BIN_EXE_mdens"))
        .args(["balanced", "--budget", "100000000", g.trim()])
        .env("MD_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(mdens(&["scan", "--max-n", "9"], None).status.code(), Some(3));
}

#[test]
fn plant_output() {
    let o = mdens(&["plant", "Cr"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not_plant");
    let o = mdens(&["plant", "C~"], None);
    assert!(stdout(&o).starts_with("plant_plus"));
    let g = stdout(&mdens(&["construct", "star-of-plants:3,4,0"], None));
    let o = mdens(&["plant", "--cover", "3", g.trim()], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("covered=true e=20 bound=20"));
}

#[test]
fn catalog_list_formats() {
    let o = mdens(&["catalog", "list", "1", "3/2", "--max-order", "5"], None);
    let text = stdout(&o);
    let betas: Vec<&str> = text.lines().map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(betas, ["1", "6/5", "5/4"]);
    let o = mdens(&["--json", "catalog", "list", "1", "3/2", "--max-order", "4"], None);
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        r#"{"beta":"1","kind":"interval_endpoint","k":2,"n":null,"t":null,"m":null,"witness":"Bw","parametrizations":[]}"#
    );
    let o = mdens(&["catalog", "list", "0", "1", "--max-order", "3", "--csv"], None);
    assert_eq!(stdout(&o).lines().next().unwrap(), "beta,kind,k,n,t,m,witness,parametrizations");
    // Infinite slice without a limit.
    assert_eq!(mdens(&["catalog", "list", "0", "1"], None).status.code(), Some(2));
}

#[test]
fn gap_and_json_member() {
    assert_eq!(stdout(&mdens(&["catalog", "gap", "1"], None)).trim(), "1/5 (next 6/5)");
    let o = mdens(&["--json", "catalog", "member", "20/13"], None);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "in_b");
    assert_eq!(v["entry"]["beta"], "20/13");
}

#[test]
fn minor_commands() {
    // K4 is a minor of the 3-cube, K5 is not.
    let edges: Vec<(usize, usize)> =
        (0..8usize).flat_map(|a| (0..3).map(move |i| (a, a ^ (1 << i)))).filter(|&(a, b)| a < b).collect();
    let cube = &minor_density::emit_graph6(&minor_density::Graph::from_edges(8, &edges).unwrap());
    let o = mdens(&["minor", "test", "C~", cube], None);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(0), "true".to_string()));
    let o = mdens(&["minor", "test", "D~{", cube], None);
    assert_eq!(o.status.code(), Some(1));
    let o = mdens(&["minor", "densest", cube], None);
    let g = minor_density::parse_graph6(cube).unwrap();
    let (best, _) = minor_density::oracle::max_density(&minor_density::oracle::minor_closure(&g, false));
    assert_eq!(stdout(&o).split(' ').next().unwrap(), best.to_string());
}

#[test]
fn scan_from_stream_matches_enumeration() {
    let mut lines = String::new();
    for n in 1..=5 {
        for g in minor_density::searchlab::enumerate_graphs(n, false).unwrap() {
            lines.push_str(&minor_density::emit_graph6(&g));
            lines.push('\n');
        }
    }
    let a = mdens(&["--json", "scan", "--max-n", "5", "--strict"], None);
    let b = mdens(&["--json", "scan", "--strict", "--input", "-"], Some(&lines));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let c = mdens(&["--json", "--jobs", "3", "scan", "--max-n", "5", "--strict"], None);
    assert_eq!(stdout(&a), stdout(&c));
    let o = mdens(&["crosscheck", "--max-n", "5"], None);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_single_row() {
    let o = mdens(&["verify", "--only", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[pass]"));
    assert_eq!(mdens(&["verify", "--only", "nope"], None).status.code(), Some(2));
}
