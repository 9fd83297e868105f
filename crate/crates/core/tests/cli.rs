use minaff::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(
        std::iter::once("minaff").chain(args.iter().copied()),
        &mut out,
    );
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json", "--no-cache"];
    full.extend_from_slice(args);
    let (code, out) = cli(&full);
    assert_eq!(code, EXIT_PASS, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn adjoint_dimension() {
    let (code, out) = cli(&["--type", "B4", "--no-cache", "char", "--weight", "0,1,0,0"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.ends_with("total dimension 36\n"), "{out}");
    assert_eq!(
        json(&["--type", "B4", "char", "--weight", "0,1,0,0"])["dim"],
        36
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--type",
        "B4",
        "--no-cache",
        "coeffs",
        "--weight",
        "1,1,1,0",
    ];
    let first = cli(&args);
    for _ in 0..3 {
        assert_eq!(cli(&args), first);
    }
}

#[test]
fn json_outputs_parse() {
    let kr = json(&["--type", "B3", "kr", "--node", "2", "--level", "1"]);
    assert_eq!(kr["dim_at_1"], 22);
    assert_eq!(kr["layers"]["1"], serde_json::json!([[[0, 0, 0], 1]]));

    let g = json(&["--type", "B3", "gamma", "--weight", "0,1,0"]);
    assert!(g.is_object());

    let c = json(&["--type", "B4", "coeffs", "--weight", "1,1,1,0"]);
    assert_eq!(c["entries"].as_array().unwrap().len(), 8);
    assert_eq!(c["nonzero"], 6);

    let v = json(&["--type", "B4", "verify", "thm2", "--weight", "1,1,1,0"]);
    assert_eq!(v["residual_is_zero"], true);
}

#[test]
fn verification_exit_codes() {
    assert_eq!(
        cli(&[
            "--type",
            "B3",
            "--no-cache",
            "verify",
            "matrix",
            "--weight",
            "0,1,0"
        ])
        .0,
        EXIT_PASS
    );
    assert_eq!(
        cli(&[
            "--type",
            "C4",
            "--no-cache",
            "verify",
            "conjecture",
            "--weight",
            "1,1,1,0",
            "--mode",
            "symbolic"
        ])
        .0,
        EXIT_PASS
    );
    assert_eq!(
        cli(&[
            "--type",
            "B4",
            "--no-cache",
            "verify",
            "stable",
            "--weight",
            "2,2,2,0"
        ])
        .0,
        EXIT_PASS
    );
    assert_ne!(EXIT_FAIL, EXIT_PASS);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&["char", "--weight", "0,0,0"]).0, EXIT_USAGE);
    assert_eq!(
        cli(&["--type", "B3", "char", "--weight", "1,0"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["--type", "B3", "char", "--weight", "1,-1,0"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["--type", "C3", "verify", "conjecture", "--weight", "1,1,1"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["--type", "B4", "verify", "stable", "--weight", "1,1,1,0"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["--type", "Q3", "char", "--weight", "0,0,0"]).0,
        EXIT_USAGE
    );
}

#[test]
fn cache_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chars.ndjson");
    let path = path.to_str().unwrap();
    for args in [
        &[
            "--format", "json", "--type", "C3", "char", "--weight", "2,1,0",
        ][..],
        &[
            "--format", "json", "--type", "C3", "verify", "thm2", "--weight", "2,1,0",
        ],
    ] {
        let plain = cli(&[&["--no-cache"][..], args].concat());
        let cold = cli(&[&["--cache", path][..], args].concat());
        let warm = cli(&[&["--cache", path][..], args].concat());
        assert_eq!(plain, cold);
        assert_eq!(plain, warm);
    }
    assert!(std::fs::metadata(path).unwrap().len() > 0);

    // a corrupted line is skipped, not trusted
    std::fs::write(path, "{not json\n").unwrap();
    let args = [
        "--format", "json", "--type", "C3", "char", "--weight", "2,1,0",
    ];
    assert_eq!(
        cli(&[&["--cache", path][..], &args[..]].concat()),
        cli(&[&["--no-cache"][..], &args[..]].concat())
    );
}
