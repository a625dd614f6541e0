use std::path::PathBuf;
use std::process::{Command, Output};

use imagebin_cli::format::{parse_automaton, write_dfa, write_kdis};
use imagebin_cli::{write_automaton, Automaton};
use imagebin_core::equiv::equivalent;
use imagebin_core::fixtures::conjugated_ifa;
use imagebin_core::samples::{branching_nba, even_a_ifa};
use imagebin_core::{kdis, Rational};
use tempfile::TempDir;

const UNARY_MC: &str = "kind: mc\nalphabet: a\nstates: 1\ninitial: 1\nrow 1: 1\n";
const HALF_MC: &str = "kind: mc\nalphabet: a b\nstates: 2\ninitial: 1/3 2/3\nrow 1: 1/2 1/2\nrow 2: 1/2 1/2\n";

fn imagebin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_imagebin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.0.path().join(name).to_str().unwrap().to_string()
    }
}

fn even_a_text() -> String {
    write_automaton(&Automaton::Rational(even_a_ifa()))
}

#[test]
fn check_ifa_on_even_a() {
    let d = Dir::new();
    let f = d.file("even_a.wa", &even_a_text());
    let o = imagebin(&["check-ifa", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "yes");
}

#[test]
fn check_ifa_rejects_doubled_automaton_with_witness() {
    let d = Dir::new();
    let doubled = even_a_ifa().add(&even_a_ifa()).unwrap();
    let f = d.file("double.wa", &write_automaton(&Automaton::Rational(doubled)));
    let o = imagebin(&["check-ifa", &f]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.starts_with("no"), "{out}");
    assert!(out.contains("has value 2/1"), "{out}");
}

#[test]
fn modelcheck_kdis_of_branching_on_unary_chain() {
    let d = Dir::new();
    let kd = kdis(&branching_nba(), 4).unwrap();
    let iba = d.file("kdis_branching.iba", &write_kdis(&kd));
    let mc = d.file("unary.mc", UNARY_MC);
    let o = imagebin(&["modelcheck", &iba, &mc]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "1/1");
}

#[test]
fn kdis_command_output_has_comments_and_checks_out() {
    let d = Dir::new();
    let nba = d.file("branching.nba", &write_automaton(&Automaton::Nba(branching_nba())));
    let o = imagebin(&["kdis", &nba, "--k", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("# state 3: (1,bot):1 (2,bot):1"), "{text}");
    assert!(text.contains("states: 21"));
    let iba = d.file("k.iba", &text);
    let o = imagebin(&["lasso-eval", &iba, "--cycle", "a"]);
    assert_eq!(stdout(&o).trim(), "1/1");
    let mc = d.file("unary.mc", UNARY_MC);
    assert_eq!(stdout(&imagebin(&["modelcheck", &iba, &mc])).trim(), "1/1");
}

#[test]
fn kdis_refuses_too_small_bound() {
    let d = Dir::new();
    let nba = d.file("branching.nba", &write_automaton(&Automaton::Nba(branching_nba())));
    let o = imagebin(&["kdis", &nba, "--k", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not 3-ambiguous"));
}

#[test]
fn modelcheck_rejects_ambiguous_nba_as_iba() {
    let d = Dir::new();
    let nba = d.file("branching.nba", &write_automaton(&Automaton::Nba(branching_nba())));
    let mc = d.file("unary.mc", UNARY_MC);
    let o = imagebin(&["modelcheck", &nba, &mc]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not image-binary"));
    let o = imagebin(&["modelcheck", &nba, &mc, "--k", "4"]);
    assert_eq!(stdout(&o).trim(), "1/1");
}

#[test]
fn modelcheck_first_letter() {
    let d = Dir::new();
    let nba = "kind: nba\nalphabet: a b\nstates: 2\ninitial: 1\nfinal: 2\ntrans a 1 2\ntrans a 2 2\ntrans b 2 2\n";
    let a = d.file("sa.nba", nba);
    let mc = d.file("half.mc", HALF_MC);
    let o = imagebin(&["modelcheck", &a, &mc]);
    assert_eq!(stdout(&o).trim(), "1/3");
}

#[test]
fn lfsr_report_d3() {
    let o = imagebin(&["lfsr-report", "--d", "3", "--taps", "011", "--init", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in [
        "rank: 7",
        "diagonal: 4/1",
        "off-diagonal: 2/1",
        "period: 7",
        "uniform: yes",
    ] {
        assert!(out.lines().any(|l| l == line), "missing `{line}` in\n{out}");
    }
    assert!(out.contains("inverse with -2^(2-2d) off the diagonal: yes"));
}

#[test]
fn lfsr_report_rejects_non_maximal_register() {
    let o = imagebin(&["lfsr-report", "--d", "3", "--taps", "001", "--init", "100"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lfsr_bits_and_automata() {
    let o = imagebin(&["lfsr", "--d", "3", "--taps", "011", "--init", "100", "--len", "14"]);
    assert_eq!(stdout(&o).lines().next(), Some("10010111001011"));
    let d = Dir::new();
    let ma = d.file(
        "l.wa",
        &stdout(&imagebin(&[
            "lfsr", "--d", "3", "--taps", "011", "--init", "100", "--emit", "mod2",
        ])),
    );
    let dfa = d.file(
        "l.nfa",
        &stdout(&imagebin(&[
            "lfsr", "--d", "3", "--taps", "011", "--init", "100", "--emit", "dfa",
        ])),
    );
    for n in 0..14 {
        let word = "#".repeat(n);
        let expected = if b"10010111001011"[n] == b'1' { "1" } else { "0" };
        assert_eq!(stdout(&imagebin(&["eval", &ma, &word])).trim(), expected);
        assert_eq!(
            stdout(&imagebin(&["eval", &dfa, &word])).trim(),
            format!("{expected}/1")
        );
    }
}

#[test]
fn gen_is_deterministic() {
    for kind in ["dfa", "ifa", "nba", "mc"] {
        let args = ["gen", kind, "--seed", "42", "--states", "3", "--alphabet", "2"];
        let a = imagebin(&args);
        let b = imagebin(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{kind}");
        assert!(!a.stdout.is_empty());
    }
    let other = imagebin(&["gen", "ifa", "--seed", "43", "--states", "3", "--alphabet", "2"]);
    assert_ne!(
        other.stdout,
        imagebin(&["gen", "ifa", "--seed", "42", "--states", "3", "--alphabet", "2"]).stdout
    );
}

#[test]
fn generated_conjugated_ifa_passes_checks() {
    let d = Dir::new();
    let (dfa, ifa) = conjugated_ifa(42, 3, 2);
    let gen = stdout(&imagebin(&[
        "gen",
        "ifa",
        "--seed",
        "42",
        "--states",
        "3",
        "--alphabet",
        "2",
    ]));
    assert_eq!(parse_automaton(&gen).unwrap(), Automaton::Rational(ifa));
    let f = d.file("g.wa", &gen);
    assert_eq!(stdout(&imagebin(&["check-ifa", &f])).trim(), "yes");
    let src = d.file("g.nfa", &write_dfa(&dfa));
    let o = imagebin(&["equiv", &f, &src]);
    assert_eq!(stdout(&o).trim(), "yes");
    let dfa_out = d.file("back.nfa", &stdout(&imagebin(&["to-dfa", &f])));
    assert_eq!(stdout(&imagebin(&["equiv", &dfa_out, &src])).trim(), "yes");
}

#[test]
fn generated_nba_passes_ambiguity_check_at_k() {
    let d = Dir::new();
    let gen = stdout(&imagebin(&[
        "gen",
        "nba",
        "--seed",
        "7",
        "--states",
        "2",
        "--alphabet",
        "2",
        "--k",
        "3",
    ]));
    let f = d.file("u.nba", &gen);
    let o = imagebin(&["ambiguity-check", &f, "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "yes");
}

#[test]
fn boolean_operations_and_equivalence() {
    let d = Dir::new();
    let a = d.file("a.wa", &even_a_text());
    let comp = d.file("c.wa", &stdout(&imagebin(&["complement", &a])));
    let inter = d.file("i.wa", &stdout(&imagebin(&["intersect", &a, &comp])));
    let zero = d.file("z.wa", "kind: wa\nalphabet: a b\nstates: 1\ninitial: 0\nfinal: 0\n");
    assert_eq!(stdout(&imagebin(&["equiv", &inter, &zero])).trim(), "yes");
    let uni = d.file("u.wa", &stdout(&imagebin(&["union", &a, &comp])));
    let one = d.file(
        "o.wa",
        "kind: wa\nalphabet: a b\nstates: 1\ninitial: 1\nfinal: 1\ntrans a 1 1\ntrans b 1 1\n",
    );
    assert_eq!(stdout(&imagebin(&["equiv", &uni, &one])).trim(), "yes");
    let o = imagebin(&["equiv", &a, &comp]);
    let out = stdout(&o);
    assert!(out.starts_with("no\nwitness: \"\""), "{out}");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn minimize_and_mod2() {
    let d = Dir::new();
    let a = d.file("a.wa", &even_a_text());
    let m = stdout(&imagebin(&["minimize", &a]));
    let m = parse_automaton(&m).unwrap();
    match &m {
        Automaton::Rational(r) => assert!(equivalent(r, &even_a_ifa()).unwrap()),
        other => panic!("{other:?}"),
    }
    let g = stdout(&imagebin(&["to-mod2", &a]));
    let g = d.file("g.wa", &g);
    for (w, v) in [
        ("aa", "1"),
        ("aab", "1"),
        ("a", "0"),
        ("aaa", "0"),
        ("aaba", "1"),
        ("ba", "0"),
    ] {
        assert_eq!(stdout(&imagebin(&["eval", &g, w])).trim(), v, "{w}");
    }
}

#[test]
fn nfa_to_ifa_gives_language_indicator() {
    let d = Dir::new();
    let nfa = "kind: nfa\nalphabet: a\nstates: 2\ninitial: 1 2\nfinal: 1 2\ntrans a 1 1\ntrans a 2 2\n";
    let f = d.file("amb.nfa", nfa);
    let o = imagebin(&["--json", "nfa-to-ifa", &f]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ifa = d.file("amb.wa", doc["result"]["automaton"].as_str().unwrap());
    assert_eq!(stdout(&imagebin(&["check-ifa", &ifa])).trim(), "yes");
    assert_eq!(stdout(&imagebin(&["eval", &ifa, "aa"])).trim(), "1/1");
    assert_eq!(stdout(&imagebin(&["eval", &f, "aa"])).trim(), "1/1");
}

#[test]
fn json_document_shape() {
    let d = Dir::new();
    let f = d.file("even_a.wa", &even_a_text());
    let o = imagebin(&["--json", "eval", &f, "aab"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["command"], "eval");
    assert_eq!(doc["inputs"]["word"], "aab");
    assert_eq!(doc["result"]["value"], "1/1");
    assert!(doc["diagnostics"].is_array());

    let o = imagebin(&["--json", "check-ifa", &d.path("missing.wa")]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "usage");
}

#[test]
fn exit_codes() {
    let d = Dir::new();
    let parse = d.file("p.wa", "kind: wa\nalphabet: a\nstates: 1\ninitial: x\nfinal: 1\n");
    let valid = d.file(
        "v.wa",
        "kind: wa\nalphabet: a\nstates: 1\ninitial: 1\nfinal: 1\ntrans a 1 1\ntrans a 1 1 2\n",
    );
    let semantic = d.file("s.wa", "kind: wa\nalphabet: a\nstates: 1\ninitial: 3\nfinal: 1\n");
    let mc_bad = d.file("m.mc", "kind: mc\nalphabet: a\nstates: 1\ninitial: 1\nrow 1: 1/2\n");
    let nba = d.file("n.nba", &write_automaton(&Automaton::Nba(branching_nba())));

    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec![], 1),
        (vec!["frobnicate"], 1),
        (vec!["eval"], 1),
        (vec!["eval", &parse, "a"], 1),
        (vec!["eval", &valid, "a"], 2),
        (vec!["eval", &semantic, "z"], 2),
        (vec!["complement", &semantic], 3),
        (vec!["check-ifa", &semantic], 3),
        (vec!["modelcheck", &nba, &mc_bad, "--k", "4"], 2),
        (vec!["eval", &nba, "a"], 2),
        (vec!["lfsr", "--d", "3", "--taps", "01", "--init", "100"], 2),
        (vec!["lfsr", "--d", "3", "--taps", "0x1", "--init", "100"], 2),
        (vec!["eval", &semantic, "aa"], 0),
    ];
    for (args, code) in cases {
        let o = imagebin(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}: {}", stderr(&o));
        let err = stderr(&o);
        if code != 0 {
            assert_eq!(
                err.trim_end().lines().count(),
                1,
                "{args:?}: multi-line diagnostic:\n{err}"
            );
            assert!(!err.contains("panicked"), "{err}");
        }
    }
}

#[test]
fn parse_errors_name_file_and_line() {
    let d = Dir::new();
    let f = d.file(
        "p.wa",
        "kind: wa\nalphabet: a\nstates: 1\n\ninitial: 1\nfinal: 1\ntrans a 1\n",
    );
    let o = imagebin(&["eval", &f, "a"]);
    let err = stderr(&o);
    assert!(err.contains("p.wa") && err.contains("line 7"), "{err}");
}

#[test]
fn scalars_are_exact() {
    let d = Dir::new();
    let f = d.file(
        "r.wa",
        "kind: wa\nalphabet: a\nstates: 1\ninitial: 1/3\nfinal: 3/7\ntrans a 1 1 -2/5\n",
    );
    let got = stdout(&imagebin(&["eval", &f, "aa"]));
    let expected: Rational = "4/175".parse().unwrap();
    assert_eq!(got.trim(), format!("{}/{}", expected.numer(), expected.denom()));
}
