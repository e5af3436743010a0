use std::process::Command;

fn wb(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wb")).args(args).output().expect("run wb");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("utf8"))
}

const VPOSET: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/vposet.alg");

#[test]
fn query_exit_codes() {
    let (code, out) = wb(&["query", "--kb", "seed", "--kind", "TW", "1", "0"]);
    assert_eq!((code, out.trim()), (0, "YES"));
    let (code, out) = wb(&["query", "--kind", "SW", "1", "0"]);
    assert_eq!((code, out.trim()), (1, "NO"));
    let (code, out) = wb(&["query", "--kind", "W", "LPO", "WKL"]);
    assert_eq!((code, out.trim()), (2, "UNKNOWN"));
    assert_eq!(wb(&["query", "--kind", "W", "nope", "LPO"]).0, 3);
    assert_eq!(wb(&["query", "--kind", "XX", "1", "0"]).0, 3);
    assert_eq!(wb(&["query", "--kb", "/no/such/file", "1", "0"]).0, 3);
    assert_eq!(wb(&["frobnicate"]).0, 3);
}

#[test]
fn equivalence_and_flags() {
    assert_eq!(wb(&["query", "--equiv", "--kind", "TW", "id", "zero"]).0, 0);
    assert_eq!(wb(&["query", "--equiv", "--kind", "W", "id", "zero"]).0, 1);
    assert_eq!(wb(&["query", "--prop", "complete", "WKL"]).0, 0);
}

#[test]
fn explain_prints_the_trace() {
    let (code, out) = wb(&["explain", "--kind", "TW", "id", "constC"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "YES");
    assert!(lines[1].starts_with("le TW id constC   [D2"));
    assert!(lines[2].starts_with("  le W id constC   [seed"));
}

#[test]
fn normalize_with_and_without_facts() {
    assert_eq!(wb(&["normalize", "--kind", "SW", "comp(comp(lim))"]), (0, "comp(lim)\n".into()));
    assert_eq!(wb(&["normalize", "--kb", "seed", "--kind", "SW", "comp(comp(lim))"]), (0, "lim\n".into()));
    let (_, out) = wb(&["normalize", "--explain", "--kind", "W", "par(par(LPO))"]);
    assert_eq!(out.lines().next(), Some("par(LPO)"));
    assert!(out.contains("R2"));
    assert_eq!(wb(&["normalize", "meet(LPO"]).0, 3);
}

#[test]
fn validate_and_check_algebra() {
    let (code, out) = wb(&["validate", "--algebra", VPOSET, "--formula", "~~A | ~A"]);
    assert_eq!(code, 1);
    assert!(out.contains("invalid at A={1} with value {1,2}"), "{out}");
    assert_eq!(wb(&["validate", "--algebra", "chain:6", "--algebra", "chain:3", "--formula", "~~A | ~A"]).0, 0);
    assert_eq!(wb(&["validate", "--algebra", "random:5:2", "--axioms"]).0, 0);
    assert_eq!(wb(&["validate", "--algebra", "chain:3"]).0, 3);

    let (code, out) = wb(&["check-algebra", "--expect", "brouwer", "upsets:3"]);
    assert_eq!((code, out.lines().count()), (0, 10));
    let (code, out) = wb(&["check-algebra", "--expect", "brouwer", "m3", VPOSET]);
    assert_eq!(code, 1);
    assert!(out.starts_with("m3: NotWeihrauch"));
    assert!(out.contains("vposet.alg: Brouwer"));
}

#[test]
fn stream_demos() {
    for w in ["lpo", "sort", "acc2", "accn"] {
        let (code, out) = wb(&["stream-demo", w]);
        assert_eq!(code, 0, "{out}");
        assert!(out.trim_end().ends_with("19456 names checked, 0 failures"), "{out}");
        assert!(!out.contains("WRONG"));
    }
    assert_eq!(wb(&["stream-demo", "precompletion"]).0, 0);
    assert_eq!(wb(&["stream-demo", "totalize", "--samples", "100"]).0, 0);
    assert_eq!(wb(&["stream-demo", "lpo", "1,2;()"]).0, 3);
}

#[test]
fn rules_catalog() {
    let (code, out) = wb(&["rules"]);
    assert_eq!(code, 0);
    assert!(out.contains("# rewrite rules\nR1 "));
    assert!(out.contains("# inference rules\nD1.1 "));
    assert!(out.lines().filter(|l| !l.starts_with('#')).all(|l| l.contains(" -- ")));
}

#[test]
fn close_is_reproducible_and_reloads() {
    let dir = std::env::temp_dir().join(format!("wb-close-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let kb = dir.join("small.kb");
    std::fs::write(&kb, "atom f\natom g\nfact le SW f g\nfact nle W g f\n").unwrap();
    let kb = kb.to_str().unwrap();
    let (a, b) = (dir.join("a.kb"), dir.join("b.kb"));
    assert_eq!(wb(&["close", "--kb", kb, "--out", a.to_str().unwrap()]).0, 0);
    assert_eq!(wb(&["close", "--kb", kb, "--out", b.to_str().unwrap()]).0, 0);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.contains("fact le TW f g\n") && text.contains("fact nle SW g f\n"));
    // the saturated file loads back as a consistent knowledge base
    let (code, again) = wb(&["close", "--depth", "0", "--kb", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(again.contains("fact le TW f g\n") && again.contains("fact nle SW g f\n"));

    let bad = dir.join("bad.kb");
    std::fs::write(&bad, "atom f\nfact le W id zero\n").unwrap();
    assert_eq!(wb(&["close", "--kb", bad.to_str().unwrap()]).0, 3);
    std::fs::write(&bad, "atom f\nfact le SW f 0\nfact nle W f 0\n").unwrap();
    let (code, out) = wb(&["close", "--kb", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("# contradiction"));
    std::fs::remove_dir_all(&dir).unwrap();
}
