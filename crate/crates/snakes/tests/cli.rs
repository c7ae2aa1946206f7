use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("snakes").chain(args.iter().copied());
    let code = snakes::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = format!("{}/../../docs/schemas/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

fn assert_valid(schema_name: &str, text: &str) -> Value {
    let value: Value = serde_json::from_str(text).unwrap();
    let s = schema(schema_name);
    if let Err(errors) = s.validate(&value) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect();
        panic!("{schema_name}: {msgs:?}\n{text}");
    }
    value
}

#[test]
fn spec_examples() {
    let (code, out, _) = run(&["verify", "branching", "--n", "2", "--snake", "1:4,1:8"]);
    assert_eq!(code, 0);
    assert_eq!(assert_valid("report.schema.json", &out)["equal"], true);

    let (code, out, _) = run(&["paths", "--type", "A", "--m", "4", "--i", "1", "--k", "0"]);
    assert_eq!(code, 0);
    assert_eq!(
        assert_valid("paths.schema.json", &out)
            .as_array()
            .unwrap()
            .len(),
        4
    );

    let (code, _, _) = run(&[
        "verify",
        "identity",
        "--n",
        "3",
        "--segments",
        "0-1,2-3",
        "--M",
        "1",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn every_verify_report_matches_the_schema() {
    let cases: &[&[&str]] = &[
        &["verify", "dominance", "--n", "2", "--snake", "1:0,2:6"],
        &["verify", "branching", "--n", "3", "--snake", "1:6,2:16"],
        &["verify", "decomposition", "--n", "2", "--snake", "2:2,2:6"],
        &["verify", "bijection", "--n", "2", "--snake", "1:0,1:4"],
        &["verify", "gap0", "--n", "3", "--snake", "3:2,1:10"],
        &["verify", "tensor", "--n", "2", "--snake", "2:2"],
        &[
            "verify",
            "identity",
            "--n",
            "3",
            "--segments",
            "-2--1,0-2",
            "--M",
            "2",
        ],
        &["verify", "det", "--n", "4", "--segments", "0-2,1-4,3-5"],
        &["verify", "g-weight", "--n", "3", "--i", "2", "--k", "-4"],
        &[
            "verify", "gkr", "--n", "2", "--i", "2", "--t", "2", "--k", "1",
        ],
        &["verify", "corners", "--n", "3", "--i", "1", "--k", "-1"],
        &[
            "verify", "ab", "--n", "5", "--x0", "0,4,8", "--xn", "1,3,5", "--M", "1",
        ],
    ];
    for args in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        let v = assert_valid("report.schema.json", &out);
        assert_eq!(v["holds"], true, "{args:?}");
        assert_eq!(v["theorem"], args[1]);
    }
}

#[test]
fn other_verbs_match_their_schemas() {
    let (_, out, _) = run(&["paths", "--type", "B", "--n", "3", "--i", "2", "--k", "4"]);
    assert!(!assert_valid("paths.schema.json", &out)
        .as_array()
        .unwrap()
        .is_empty());
    let (_, out, _) = run(&["char", "--type", "B", "--rank", "2", "--snake", "2:2"]);
    assert_eq!(assert_valid("character.schema.json", &out)["family"], "B");
    let (_, out, _) = run(&["fold", "--rank", "3", "--snake", "1:0,1:2"]);
    assert_eq!(assert_valid("character.schema.json", &out)["family"], "TW");
    let (_, out, _) = run(&["qchar", "--type", "A", "--rank", "3", "--snake", "1:0"]);
    assert_eq!(
        assert_valid("qchar.schema.json", &out)["terms"]
            .as_array()
            .unwrap()
            .len(),
        4
    );
    let (_, out, _) = run(&["dual", "--n", "2", "--snake", "1:0"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_valid("character.schema.json", &v["character"].to_string());
    let (code, out, _) = run(&["verify", "suite", "--criteria", "1,7-8"]);
    assert_eq!(code, 0);
    let v = assert_valid("suite.schema.json", &out);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 3);
}

#[test]
fn quantities_agree_with_known_values() {
    // the fundamental representation of A_3
    let (_, out, _) = run(&[
        "char", "--type", "A", "--rank", "3", "--snake", "1:0", "--format", "csv",
    ]);
    assert_eq!(
        out,
        "w1,w2,w3,mult\n-1,1,0,1\n0,-1,1,1\n0,0,-1,1\n1,0,0,1\n"
    );
    // KR tuples split by gap: shifts (d, 0) with d <= i
    let (_, out, _) = run(&["branch", "--n", "2", "--snake", "1:0,1:4"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let shifts: Vec<Value> = v["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["shifts"].clone())
        .collect();
    assert_eq!(
        shifts,
        vec![serde_json::json!([0, 0]), serde_json::json!([1, 0])]
    );
    let (_, out, _) = run(&["gap", "--n", "2", "--snake", "1:0,2:6", "--format", "csv"]);
    assert_eq!(out, "gap,tuples\n0,20\n1,16\n2,4\n");
}

#[test]
fn exit_codes() {
    // malformed input and parity errors are usage errors
    let (code, _, err) = run(&["verify", "dominance", "--n", "2", "--snake", "1:3"]);
    assert_eq!(code, 1);
    assert!(err.contains("(1,3)"), "{err}");
    assert_eq!(
        run(&["verify", "branching", "--n", "2", "--snake", "1;4"]).0,
        1
    );
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["paths", "--type", "A", "--i", "1", "--k", "0"]).0, 1);
    assert_eq!(
        run(&[
            "verify",
            "branching",
            "--n",
            "2",
            "--snake",
            "1:4",
            "--threads",
            "0"
        ])
        .0,
        1
    );
    // resource cap
    let (code, _, err) = run(&[
        "verify",
        "dominance",
        "--n",
        "3",
        "--snake",
        "1:6,2:16",
        "--max-tuples",
        "3",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("limit"), "{err}");
    // help is not an error
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("i:k,i:k"));
}

#[test]
fn non_snake_segments_are_rejected() {
    assert_eq!(
        run(&["verify", "det", "--n", "2", "--segments", "0-3"]).0,
        1
    );
    assert_eq!(
        run(&[
            "verify",
            "identity",
            "--n",
            "3",
            "--segments",
            "2-3,0-1",
            "--M",
            "1"
        ])
        .0,
        1
    );
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["verify", "suite", "--criteria", "4-6"];
    let one = run(&[&args[..], &["--threads", "1"]].concat()).1;
    let four = run(&[&args[..], &["--threads", "4"]].concat()).1;
    assert_eq!(one, four);
    for format in ["csv", "pretty"] {
        let a = run(&[&args[..], &["--threads", "1", "--format", format]].concat()).1;
        let b = run(&[&args[..], &["--threads", "3", "--format", format]].concat()).1;
        assert_eq!(a, b);
    }
}
