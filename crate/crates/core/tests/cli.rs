//! Command-line behaviour: exit codes, witnesses, error locations and
//! determinism.

use fuzzysoft::cli::{run, Output};
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn fuzzysoft(args: &str) -> Output {
    let mut argv = vec!["fuzzysoft".to_string()];
    for word in args.split_whitespace() {
        argv.push(match word.strip_prefix('@') {
            Some(name) => fixture(name),
            None => word.to_string(),
        });
    }
    run(argv)
}

#[test]
fn validate_indiscrete() {
    let out = fuzzysoft("validate --file @indiscrete.json");
    assert_eq!(out.code, 0, "{}", out.text);
    assert_eq!(out.text, "tau: valid topology with 2 opens\n");
}

#[test]
fn exact_subcover_has_size_two() {
    let out = fuzzysoft("subcover --file @fixture.json --target UNIV --sets f,p1,p2,g --mode exact");
    assert_eq!(out.code, 0);
    assert_eq!(out.text, "exact subcover of UNIV (2 of 4 members): [f, p1]\n");
}

#[test]
fn uncovered_target_reports_the_deficient_cell() {
    let out = fuzzysoft("subcover --file @fixture.json --sets g,p2");
    assert_eq!(out.code, 1);
    assert!(out.text.contains("deficient cell (e1, x1): union grade 1/2 < target grade 1"), "{}", out.text);
}

#[test]
fn indiscrete_space_is_not_hausdorff() {
    let out = fuzzysoft("hausdorff --file @indiscrete2.json");
    assert_eq!(out.code, 1);
    assert!(out.text.contains("witness: (x1, x2)"), "{}", out.text);
    let out = fuzzysoft("hausdorff --file @fixture.json --topology discrete --rule all-one");
    assert_eq!(out.code, 0, "{}", out.text);
}

#[test]
fn invalid_topologies_fail_at_load_unless_asked_not_to() {
    let out = fuzzysoft("validate --file @invalid-topology.json");
    assert_eq!(out.code, 2);
    assert!(out.text.contains("topologies.tau"), "{}", out.text);
    let out = fuzzysoft("validate --file @invalid-topology.json --no-validate");
    assert_eq!(out.code, 1);
    assert!(out.text.contains("[[1/2, 1]] ∩ [[1, 0]] = [[1/2, 0]]"), "{}", out.text);
}

#[test]
fn malformed_files_name_the_field() {
    for (file, location) in [
        ("bad-grade.json", "sets.f.e1.x1: bad grade `5/4`"),
        ("unknown-label.json", "sets.f.e1: unknown label `x3`"),
        ("syntax-error.json", "syntax error at line 4, column 3"),
    ] {
        let out = fuzzysoft(&format!("validate --file @{file}"));
        assert_eq!(out.code, 2, "{file}");
        assert!(out.text.contains(location), "{file}: {}", out.text);
    }
}

#[test]
fn generate_and_compact() {
    let out = fuzzysoft("generate --file @fixture.json --sets f,p1");
    assert_eq!(out.code, 0);
    assert!(out.text.starts_with("generated topology with 5 opens\n"));
    assert!(out.text.contains("  g: [[1/2, 0]]"));
    let out = fuzzysoft("generate --file @fixture.json --sets f,p1 --cap 4");
    assert_eq!(out.code, 1);

    let out = fuzzysoft("compact --file @fixture.json --topology discrete");
    assert_eq!(out.code, 0);
    assert!(out.text.contains("subfamilies examined: 16"));
    assert!(out.text.contains("minimum subcover: [UNIV]"));
    let out = fuzzysoft("compact --file @fixture.json --topology discrete --cap 8");
    assert_eq!(out.code, 1);
    assert!(out.text.starts_with("undetermined"));
    let out = fuzzysoft("compact --file @fixture.json");
    assert_eq!(out.code, 2, "two topologies need --topology");
}

#[test]
fn mapping_checks() {
    let out = fuzzysoft("continuous --file @fixture.json --map id --topology tau");
    assert_eq!(out.code, 0, "{}", out.text);
    let out = fuzzysoft("continuous --file @fixture.json --map swap --topology discrete --codomain-topology tau");
    assert_eq!(out.code, 1);
    assert!(out.text.contains("witness: open f has preimage [[1, 1/2]]"), "{}", out.text);
    let out = fuzzysoft("openmap --file @fixture.json --map swap --topology tau --codomain-topology tau");
    assert_eq!(out.code, 1);
    assert!(out.text.contains("witness: open f has image [[1, 1/2]]"), "{}", out.text);
    let out = fuzzysoft("closedmap --file @fixture.json --map swap --topology discrete --codomain-topology discrete");
    assert_eq!(out.code, 0, "{}", out.text);
    let out = fuzzysoft("continuous --file @fixture.json --topology tau");
    assert_eq!(out.code, 2, "two mappings need --map");
}

#[test]
fn fip_reports_a_minimal_witness() {
    let out = fuzzysoft("fip --file @fixture.json --sets f,g");
    assert_eq!(out.code, 0);
    let out = fuzzysoft("fip --file @fixture.json --sets f,p1,p2");
    assert_eq!(out.code, 1);
    assert!(out.text.contains("witness: [p1, p2] has a null intersection"), "{}", out.text);
    assert!(out.text.contains("union of complements: true"));
}

#[test]
fn audits_are_deterministic() {
    let args = "audit compact-subset-closed --seed 9 --trials 20 --rule all-positive";
    let first = fuzzysoft(args);
    assert_eq!(first, fuzzysoft(args));
    assert!(first.text.contains("trials: 20"));
    let clean = fuzzysoft("audit fip-characterization --seed 1 --trials 10");
    assert_eq!(clean.code, 0, "{}", clean.text);
    assert!(clean.text.contains("verified: 10\ncounterexamples: 0\n"));
}

#[test]
fn numbered_aliases_name_the_same_audits() {
    for (alias, slug) in [("prop3.7", "compact-subset-closed"), ("thm3.12", "fip-characterization")] {
        let a = fuzzysoft(&format!("audit {alias} --trials 5"));
        let b = fuzzysoft(&format!("audit {slug} --trials 5"));
        assert_eq!(a, b);
    }
}

#[test]
fn stored_counterexamples_rerun() {
    let report = fuzzysoft("audit continuous-closed-map --seed 1 --trials 10");
    assert_eq!(report.code, 1, "seed 1 has counterexamples");
    let start = report.text.find("\n{\n").expect("a serialized instance") + 1;
    let end = start + report.text[start..].find("\n}\n").unwrap() + 3;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("instance.json");
    std::fs::write(&path, &report.text[start..end]).unwrap();
    let out = run(["fuzzysoft", "audit", "continuous-closed-map", "--file", path.to_str().unwrap()]);
    assert_eq!(out.code, 1, "{}", out.text);
    assert!(out.text.contains("verdict: violated"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "",
        "frobnicate",
        "validate",
        "audit hairy-ball",
        "audit compact-subset-closed --cap 100",
        "audit compact-subset-closed --rule sometimes",
        "subcover --file @fixture.json --sets f --mode fastest",
        "subcover --file @fixture.json --sets nope",
        "hausdorff --file @fixture.json --topology nope",
        "validate --file /nonexistent/space.json",
    ] {
        let out = fuzzysoft(args);
        assert_eq!(out.code, 2, "`{args}`: {}", out.text);
        assert!(!out.text.is_empty());
    }
    assert_eq!(fuzzysoft("--help").code, 0);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn arbitrary_files_never_panic(text in "\\PC{0,200}", json in r#"\{"universe": \[("x1"|"x1","x2"|)\], "parameters": \["e1"\](, "sets": \{"f": \{"e1": \{"x[12]": "-?[0-9]/[0-9]"\}\}\})?(, "topologies": \{"t": \["NULL"(,"UNIV")?(,"f")?\]\})?\}"#) {
        let dir = tempfile::tempdir().unwrap();
        for (i, body) in [text, json].iter().enumerate() {
            let path = dir.path().join(format!("{i}.json"));
            std::fs::write(&path, body).unwrap();
            let out = run(["fuzzysoft", "hausdorff", "--file", path.to_str().unwrap()]);
            prop_assert!((0..=2).contains(&out.code));
        }
    }
}
