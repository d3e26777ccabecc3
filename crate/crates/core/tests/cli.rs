use std::fs;

use regsc::cli::run_with;
use regsc::witness;
use regsc::{parse_document, Automaton};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("regsc").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn sc_prints_the_value() {
    assert_eq!(
        run(&["sc", "--op", "revcat", "--m", "2", "--n", "2"]),
        (0, "12\n".into(), String::new())
    );
    assert_eq!(
        run(&["sc", "--op", "starcat", "--m", "4", "--n", "4"]).1,
        "137\n"
    );
    assert_eq!(
        run(&["sc", "--op", "starcat-special", "--m", "4", "--n", "3"]).1,
        "25\n"
    );
    assert_eq!(
        run(&["sc", "--op", "starcat", "--m", "3", "--n", "2", "--k1", "2"]).1,
        "12\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["sc", "--op", "union", "--m", "2", "--n", "2"]).0, 2);
    assert_eq!(run(&["sc", "--op", "revcat", "--m", "0", "--n", "2"]).0, 2);
    assert_eq!(
        run(&["sc", "--op", "revcat", "--m", "2", "--n", "2", "--k1", "1"]).0,
        2
    );
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    assert_eq!(
        run(&["verify", "--op", "revcat", "--m", "3..2", "--n", "2"]).0,
        2
    );
    assert_eq!(run(&["witness", "--family", "revcat-M", "--m", "1"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn witness_json_and_dot() {
    let (code, out, _) = run(&[
        "witness",
        "--family",
        "starcat-A",
        "--m",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let d = match parse_document(&out).unwrap() {
        Automaton::Dfa(d) => d,
        other => panic!("{other:?}"),
    };
    assert_eq!(d.state_count(), 2);
    assert_eq!(d.finals().collect::<Vec<_>>(), vec![1]);
    assert_eq!(d, witness::starcat_witness_a(2).unwrap());

    let (_, out, _) = run(&["witness", "--family", "revcat-N", "--m", "9", "--n", "3"]);
    assert_eq!(parse_document(&out).unwrap().state_count(), 3);

    let (code, dot, _) = run(&[
        "witness", "--family", "revcat-M", "--m", "2", "--format", "dot",
    ]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 8);
}

#[test]
fn verify_rows() {
    let (code, out, _) = run(&["verify", "--op", "revcat", "--m", "2..3", "--n", "2..3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with("PASS")));
    let (code, out, _) = run(&["verify", "--op", "starcat", "--m", "1..3", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn compose_methods_agree() {
    let dir = tempfile::tempdir().unwrap();
    let lhs = dir.path().join("a.json");
    let rhs = dir.path().join("b.json");
    fs::write(
        &lhs,
        run(&["witness", "--family", "revcat-M", "--m", "3"]).1,
    )
    .unwrap();
    fs::write(
        &rhs,
        run(&["witness", "--family", "revcat-N", "--m", "2"]).1,
    )
    .unwrap();
    let (l, r) = (lhs.to_str().unwrap(), rhs.to_str().unwrap());

    let summary = |method: &str, op: &str| {
        let (code, out, err) = run(&[
            "compose", "--op", op, "--lhs", l, "--rhs", r, "--method", method,
        ]);
        assert_eq!(code, 0, "{err}");
        let last = out.lines().last().unwrap().to_string();
        let body: String = out
            .lines()
            .take_while(|x| !x.starts_with("states="))
            .collect::<Vec<_>>()
            .join("\n");
        assert!(parse_document(&body).is_ok());
        last
    };
    let direct = summary("direct", "revcat");
    let oracle = summary("oracle", "revcat");
    assert_eq!(direct, "states=24 minimal=24");
    assert_eq!(direct.split(' ').nth(1), oracle.split(' ').nth(1));
    assert_eq!(
        summary("direct", "starcat").split(' ').nth(1),
        summary("oracle", "starcat").split(' ').nth(1)
    );

    let (code, out, _) = run(&[
        "compose",
        "--op",
        "revcat",
        "--lhs",
        l,
        "--rhs",
        r,
        "--minimize",
    ]);
    assert_eq!(code, 0);
    assert!(out.ends_with("states=24 minimal=24\n"));
}

#[test]
fn compose_rejects_bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let other = dir.path().join("other.json");
    let broken = dir.path().join("broken.json");
    fs::write(
        &good,
        run(&["witness", "--family", "revcat-M", "--m", "2"]).1,
    )
    .unwrap();
    fs::write(
        &other,
        run(&["witness", "--family", "revcat-n1", "--m", "2"]).1,
    )
    .unwrap();
    fs::write(&broken, "{\"kind\": \"dfa\"}").unwrap();
    let g = good.to_str().unwrap();
    for rhs in [
        other.to_str().unwrap(),
        broken.to_str().unwrap(),
        "/nonexistent/x.json",
    ] {
        let (code, _, err) = run(&["compose", "--op", "revcat", "--lhs", g, "--rhs", rhs]);
        assert_eq!(code, 2, "{rhs}");
        assert!(err.starts_with("error:"));
    }
}

#[test]
fn search_writes_argmax() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = run(&[
        "search", "--op", "revcat", "--m", "1", "--n", "3", "--sigma", "2", "--out", d,
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("op=revcat m=1 n=3 sigma=2 max_minimal=4 pairs=11664"));
    let rhs = fs::read_to_string(dir.path().join("revcat_m1_n3_s2_rhs.json")).unwrap();
    let fixture = fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/revcat_m1_n3_s2_rhs.json"
    ))
    .unwrap();
    assert_eq!(rhs, fixture);

    let sampled = [
        "search", "--op", "starcat", "--m", "3", "--n", "2", "--sigma", "2", "--sample", "50",
        "--seed", "4", "--out", d,
    ];
    let first = run(&sampled);
    assert_eq!(first.0, 0);
    assert_eq!(run(&sampled), first);

    let (code, _, err) = run(&[
        "search", "--op", "revcat", "--m", "2", "--n", "2", "--sigma", "4", "--budget", "10",
        "--out", d,
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("budget"));
}
