use std::process::Command;

use rota_mzv::cli::{run_command, EXIT_DOMAIN, EXIT_OK, EXIT_PRECISION, EXIT_SYNTAX};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = run_command(args.iter().copied());
    (out.code, out.stdout, out.stderr)
}

#[test]
fn eval_products() {
    assert_eq!(run(&["eval", "sh([1],[2])"]).1.trim(), "[1,2] + 2*[2,1]");
    assert_eq!(run(&["eval", "I([0])"]).1.trim(), "[1]");
    assert_eq!(run(&["eval", "phi((1,2))"]).1.trim(), "[0,1,0]");
    assert_eq!(run(&["eval", "st([2],[2]) - sh([2],[2])"]).1.trim(), "-4*[3,1] + [4]");
    assert_eq!(run(&["eval", "eta(x0x1x1)"]).1.trim(), "[2,1]");
}

#[test]
fn eval_json_schema() {
    let (code, out, _) = run(&["--format", "json", "eval", "sh([1],[2])"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "composition");
    assert_eq!(v["terms"][1]["basis"], "[2,1]");
    assert_eq!(v["terms"][1]["coeff"], "2/1");
}

#[test]
fn eval_is_byte_identical_across_runs() {
    let args = ["--format", "json", "eval", "msh(1/2; [1,2], [0]) - 3*I([1])"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn syntax_and_kind_errors() {
    let (code, _, err) = run(&["eval", "x0x1]"]);
    assert_eq!(code, EXIT_SYNTAX);
    assert!(err.contains("offset 4"), "{err}");
    let (code, _, err) = run(&["eval", "st(x0, x1)"]);
    assert_eq!(code, EXIT_SYNTAX);
    assert!(err.contains("kind mismatch"), "{err}");
    assert_eq!(run(&["frobnicate"]).0, EXIT_SYNTAX);
}

#[test]
fn relation_tables() {
    let (code, out, _) = run(&["eds", "--weight", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("weight,source_pair,term_composition,coefficient"));
    assert!(out.contains("3,\"([1], [2])\",\"[2,1]\",1/1"));
    assert!(out.contains("3,\"([1], [2])\",[3],-1/1"));
    let (_, out, _) = run(&["dsh", "--weight", "4"]);
    assert!(out.contains("4*[3,1] - [4]"), "{out}");
    assert_eq!(run(&["rank", "--weight", "5"]).1.trim(), "weight 5: rank 6, dimension bound 2");
}

#[test]
fn regularization_commands() {
    assert_eq!(run(&["zsh", "[1,2]"]).1.trim(), "ζ(2)*T - 2*ζ(2,1)");
    assert_eq!(run(&["zst", "[1,2]"]).1.trim(), "ζ(2)*T - ζ(2,1) - ζ(3)");
    let (_, out, _) = run(&["--format", "json", "zst", "[1,2]"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["T^1"]["monomials"][0]["symbols"][0][0], 2);
    assert_eq!(run(&["zsh", "[0,1]"]).0, EXIT_DOMAIN);
}

#[test]
fn numeric_commands() {
    let (code, out, _) = run(&["zeta", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("1.2020569032"), "{out}");
    assert_eq!(run(&["zeta", "-3"]).1.trim(), "1/120");
    assert_eq!(run(&["zeta", "1"]).0, EXIT_DOMAIN);
    assert_eq!(run(&["zeta", "2", "--digits", "20"]).0, EXIT_PRECISION);
    assert!(run(&["zeta", "[2,1]"]).1.starts_with("1.20205"));
    assert!(run(&["li", "[1,1]", "--z", "0.4"]).1.starts_with("0.1304714"));
    assert_eq!(run(&["li", "[1]", "--z", "1.5"]).0, EXIT_DOMAIN);
    let (code, out, _) = run(&["--format", "json", "zdir", "[2|1]", "--eps", "-0.1"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["value"].as_f64().unwrap() > 1.3);
}

#[test]
fn rho_and_beta() {
    // ρ(T^2) = T^2 + ζ(2), and β takes it back; --order grows to fit the input
    let (code, out, _) = run(&["--format", "json", "rho", "0,0,1", "--order", "1"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let z2 = v["T^0"].as_f64().unwrap();
    assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    let (_, out, _) = run(&["--format", "json", "beta", &format!("{z2},0,1")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["T^2"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(v.get("T^0").is_none_or(|c| c.as_f64().unwrap().abs() < 1e-12), "{v}");
    assert_eq!(run(&["rho", "1,x"]).0, EXIT_SYNTAX);
}

#[test]
fn verify_all_passes() {
    let (code, out, _) = run(&["verify", "all", "--max-weight", "4"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 9, "{out}");
}

#[test]
fn out_file_receives_stdout() {
    let path = std::env::temp_dir().join(format!("rota-mzv-out-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["--out", p, "eval", "sh([1],[1])"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "2*[1,1]");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rota-mzv");
    let ok = Command::new(bin).args(["eval", "sh(x1, x1)"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "2*x1x1");
    let bad = Command::new(bin).args(["eval", "sh(["]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_SYNTAX));
    assert!(!bad.stderr.is_empty());
}
