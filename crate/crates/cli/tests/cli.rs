use ttmin_cli::{run_args, EXIT_REJECT, EXIT_SUITE_FAILED, EXIT_USAGE};

fn run(args: &[&str]) -> ttmin_cli::Outcome {
    run_args(std::iter::once("ttmin").chain(args.iter().copied()))
}

#[test]
fn parity_ldt_is_one_test() {
    let out = run(&["min", "--model", "ldt", "--tt", "01101001"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "model ldt\nsize 3 (nodes)\n(node (lin 111 b=1) (leaf 0) (leaf 1))\n");
}

#[test]
fn majority_has_no_read_once_form() {
    let out = run(&["min", "--model", "rofxor", "--tt", "00010111"]);
    assert_eq!(out.code, EXIT_REJECT);
    assert_eq!(out.stdout, "reject: indecomposable\n");
    let out = run(&["min", "--model", "rofxor", "--tt", "00010111", "--json"]);
    assert_eq!(out.stdout, "{\"reject\":\"indecomposable\"}\n");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["run_suite", "bogus"]).code, EXIT_USAGE);
    assert_eq!(run(&["min", "--model", "dt", "--tt", "011"]).code, EXIT_USAGE);
    assert_eq!(run(&["min", "--tt", "0110"]).code, EXIT_USAGE);
    assert_eq!(run(&["min", "--model", "nope", "--tt", "0110"]).code, EXIT_USAGE);
    // a 7-variable table is past the decision-tree cap
    let big = "01".repeat(64);
    let out = run(&["oracle", "--model", "dt", "--tt", &big]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("exceeds cap"), "{}", out.stderr);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn set_cover_to_tree_instance() {
    let out = run(&["gen", "sc2tree", "--m", "2", "--sets", "1,2", "--k", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("0011"));
    let side: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(side["u"], 2);
    assert_eq!(side["tests"], serde_json::json!([[2, 3]]));
    assert_eq!(side["k"], 1);
}

#[test]
fn instance_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("ttmin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let prefix = dir.join("inst");
    let out = run(&["gen", "sc2tree", "--m", "4", "--sets", "1,2;3,4", "--sets", "2,3", "--out", prefix.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(std::fs::read_to_string(prefix.with_extension("tt")).unwrap(), "00001111\n");
    let side: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(prefix.with_extension("json")).unwrap()).unwrap();
    assert_eq!(side["sets"], serde_json::json!([[1, 2], [3, 4], [2, 3]]));

    let inst = dir.join("sc.txt");
    std::fs::write(&inst, "4\n2\n1,2\n3,4\n2,3\n").unwrap();
    for model in ["setcover", "sc2tree"] {
        let out = run(&["verify", "--model", model, "--file", inst.to_str().unwrap()]);
        assert_eq!(out.stdout, "yes\nminimum 2\n", "{model}");
        let out = run(&["verify", "--model", model, "--file", inst.to_str().unwrap(), "--k", "1"]);
        assert_eq!(out.stdout, "no\nminimum 2\n", "{model}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn three_partite_generation() {
    let out = run(&["gen", "3psc2dnf", "--m", "3", "--partition", "1,2,3", "--sets", "1,2,3", "--json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let side: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((side["q"].as_u64(), side["t"].as_u64()), (Some(4), Some(12)));
    assert_eq!(side["zeros_below_w"], 6);
    let a = run(&["gen", "random-3psc", "--seed", "9"]);
    assert_eq!(a, run(&["gen", "random-3psc", "--seed", "9"]));
    assert!(a.stdout.starts_with("# seed 9\n"));
}

#[test]
fn models_and_oracles_agree_on_small_tables() {
    for tt in ["0110", "0001", "01111110", "00010111", "11011000"] {
        for model in ["dt", "ldt", "srodt", "f2a", "obdd"] {
            let size = |cmd: &str| {
                let out = run(&[cmd, "--model", model, "--tt", tt, "--json"]);
                assert_eq!(out.code, 0, "{cmd} {model} {tt}: {}", out.stderr);
                serde_json::from_str::<serde_json::Value>(&out.stdout).unwrap()["size"].as_u64().unwrap()
            };
            assert_eq!(size("min"), size("oracle"), "{model} {tt}");
        }
    }
}

#[test]
fn obdd_with_fixed_order() {
    let out = run(&["min", "--model", "obdd", "--tt", "00010001", "--order", "3,1,2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("model obdd\nsize 2 (nodes)\norder 3,1,2\n"), "{}", out.stdout);
    assert_eq!(run(&["min", "--model", "obdd", "--tt", "0001", "--order", "1,3"]).code, EXIT_USAGE);
}

#[test]
fn negation_patterns_and_evaluation() {
    // x1 and not x2
    let out = run(&["min", "--model", "rofxor-a", "--tt", "0100", "--a", "01"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("model rofxor-a\nsize 1 (gates)\n"), "{}", out.stdout);
    assert_eq!(run(&["min", "--model", "rofxor-a", "--tt", "0100", "--a", "10"]).code, EXIT_REJECT);
    let out = run(&["eval", "--tt", "0110", "--a", "10"]);
    assert!(out.stdout.contains("anf x1 + x2\n"), "{}", out.stdout);
    assert!(out.stdout.contains("decomposition xor {1} {2}\n"), "{}", out.stdout);
    assert!(out.stdout.ends_with("value 1\n"));
}

#[test]
fn verify_decides_size_bounds() {
    assert_eq!(run(&["verify", "--model", "dt", "--tt", "0110", "--k", "7"]).stdout, "yes\nminimum 7\n");
    assert_eq!(run(&["verify", "--model", "dt", "--tt", "0110", "--k", "6"]).stdout, "no\nminimum 7\n");
    assert_eq!(run(&["verify", "--model", "mubp", "--tt", "0110", "--k", "6"]).stdout, "no\nminimum none\n");
}

#[test]
fn small_suites_report() {
    let out = run(&["run_suite", "obdd-orders", "--max-n", "3", "--seed", "1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let r: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r["passed"], true);
    assert_eq!(r["seed"], 1);
    assert_eq!(r["checks"][0]["checked"], 150);
    assert_eq!(out, run(&["run_suite", "obdd-orders", "--max-n", "3", "--seed", "1"]));
    let out = run(&["run_suite", "reductions", "--max-n", "5"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = run(&["run_suite", "reductions"]);
    assert_eq!(out.code, EXIT_SUITE_FAILED);
    assert_eq!(run(&["run_suite", "trichotomy", "--max-n", "9"]).code, EXIT_USAGE);
}
