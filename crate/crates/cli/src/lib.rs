//! Command-line front end for `imagebin-core`: file formats, commands and
//! their text or JSON reports.

pub mod error;
pub mod format;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use imagebin_core::buchi::PathCount;
use imagebin_core::field::{fmt_ratio, Rational};
use imagebin_core::ifa::{
    complement, ensure_image_binary, ifa_to_dfa, intersect, nfa_to_ifa, non_binary_witness, union,
};
use imagebin_core::mod2::{
    ifa_to_mod2, lfsr_dfa, lfsr_period, lfsr_sequence, lfsr_to_mod2ma, shift_register_rank_report, LfsrSpec,
};
use imagebin_core::{
    distinguishing_word, fixtures, iba_lasso_eval, kdis, minimize, model_check, Field, Iba, Lasso, Nba,
    WeightedAutomaton,
};
use serde_json::{json, Value};

pub use error::CliError;
pub use format::{parse_automaton, parse_markov_chain, write_automaton, write_markov_chain, Automaton};

#[derive(Debug, Parser)]
#[command(name = "imagebin", version, about = "Exact algorithms for image-binary automata")]
pub struct Cli {
    /// Emit one JSON document with fields command, inputs, result, diagnostics.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Value of a weighted automaton on a finite word.
    Eval { file: PathBuf, word: String },
    /// Decide whether two weighted automata compute the same function.
    Equiv { a: PathBuf, b: PathBuf },
    /// Minimal equivalent weighted automaton.
    Minimize { file: PathBuf },
    /// Decide whether a rational automaton only takes the values 0 and 1.
    CheckIfa { file: PathBuf },
    /// Complement of an IFA.
    Complement { file: PathBuf },
    /// Intersection of two IFAs.
    Intersect { a: PathBuf, b: PathBuf },
    /// Union of two IFAs.
    Union { a: PathBuf, b: PathBuf },
    /// Deterministic automaton for the language of an IFA.
    ToDfa { file: PathBuf },
    /// IFA for the language of an NFA (subset construction).
    NfaToIfa { file: PathBuf },
    /// Mod-2 multiplicity automaton for the language of an IFA.
    ToMod2 { file: PathBuf },
    /// Output of a linear feedback shift register.
    Lfsr {
        #[command(flatten)]
        spec: LfsrArgs,
        /// Number of bits to print (default: one period).
        #[arg(long)]
        len: Option<usize>,
        /// Print an automaton for the periodic language instead of the bits.
        #[arg(long, value_enum)]
        emit: Option<LfsrEmit>,
    },
    /// Rank and square of the circulant Hankel block of a maximal LFSR.
    LfsrReport {
        #[command(flatten)]
        spec: LfsrArgs,
    },
    /// Disambiguate a k-ambiguous NBA into an IBA.
    Kdis {
        file: PathBuf,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        check: LassoBounds,
    },
    /// Value of an IBA (or acceptance by an NBA) on a lasso word u v^ω.
    LassoEval {
        file: PathBuf,
        #[arg(long, default_value = "")]
        stem: String,
        #[arg(long)]
        cycle: String,
    },
    /// Check that an NBA has at most k final paths on all small lasso words.
    AmbiguityCheck {
        file: PathBuf,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        bounds: LassoBounds,
    },
    /// Probability that a Markov chain run is accepted by an IBA.
    Modelcheck {
        automaton: PathBuf,
        chain: PathBuf,
        /// Disambiguate an NBA input with this ambiguity bound first.
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        check: LassoBounds,
    },
    /// Write a seeded pseudo-random fixture.
    Gen {
        #[command(subcommand)]
        what: GenKind,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct LfsrArgs {
    /// Register length.
    #[arg(long)]
    pub d: usize,
    /// Feedback coefficients c_1 .. c_d as a bit string.
    #[arg(long)]
    pub taps: String,
    /// Initial bits a_0 .. a_{d-1}.
    #[arg(long)]
    pub init: String,
}

#[derive(Debug, Clone, clap::Args)]
pub struct LassoBounds {
    /// Longest stem of the lasso words checked.
    #[arg(long, default_value_t = 3)]
    pub max_stem: usize,
    /// Longest cycle of the lasso words checked (0 disables the check).
    #[arg(long, default_value_t = 3)]
    pub max_cycle: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LfsrEmit {
    /// Companion-matrix mod-2 automaton over the unary alphabet.
    Mod2,
    /// Cyclic DFA over the unary alphabet.
    Dfa,
}

#[derive(Debug, Clone, Subcommand)]
pub enum GenKind {
    /// Complete DFA (written as a deterministic `nfa` file).
    Dfa {
        #[command(flatten)]
        size: GenSize,
    },
    /// DFA conjugated by a random unimodular integer matrix.
    Ifa {
        #[command(flatten)]
        size: GenSize,
    },
    /// Disjoint union of k deterministic Büchi components.
    Nba {
        #[command(flatten)]
        size: GenSize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Markov chain with rational transition probabilities.
    Mc {
        #[command(flatten)]
        size: GenSize,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct GenSize {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of states (per component for `nba`).
    #[arg(long, default_value_t = 3)]
    pub states: usize,
    /// Alphabet size.
    #[arg(long, default_value_t = 2)]
    pub alphabet: usize,
}

/// Outcome of a successful command run. `exit` is nonzero when the command
/// ran but answered a property check negatively.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub text: String,
    pub result: Value,
    pub diagnostics: Vec<String>,
    pub exit: u8,
}

impl Report {
    fn new(command: &'static str, inputs: Value, text: String, result: Value) -> Self {
        Report {
            command,
            inputs,
            text,
            result,
            diagnostics: Vec::new(),
            exit: 0,
        }
    }

    fn automaton(command: &'static str, inputs: Value, text: String) -> Self {
        let result = json!({ "automaton": text });
        Report::new(command, inputs, text, result)
    }

    fn note(mut self, d: impl Into<String>) -> Self {
        self.diagnostics.push(d.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "diagnostics": self.diagnostics,
        })
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Equiv { .. } => "equiv",
            Command::Minimize { .. } => "minimize",
            Command::CheckIfa { .. } => "check-ifa",
            Command::Complement { .. } => "complement",
            Command::Intersect { .. } => "intersect",
            Command::Union { .. } => "union",
            Command::ToDfa { .. } => "to-dfa",
            Command::NfaToIfa { .. } => "nfa-to-ifa",
            Command::ToMod2 { .. } => "to-mod2",
            Command::Lfsr { .. } => "lfsr",
            Command::LfsrReport { .. } => "lfsr-report",
            Command::Kdis { .. } => "kdis",
            Command::LassoEval { .. } => "lasso-eval",
            Command::AmbiguityCheck { .. } => "ambiguity-check",
            Command::Modelcheck { .. } => "modelcheck",
            Command::Gen { .. } => "gen",
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: Result<T, CliError>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
        CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn load_automaton(path: &Path) -> Result<Automaton, CliError> {
    let text = read(path)?;
    with_file(path, parse_automaton(&text))
}

fn wrong_kind(path: &Path, a: &Automaton, wanted: &str) -> CliError {
    CliError::Validation(format!(
        "{}: expected {wanted}, found a `{}` file",
        path.display(),
        a.kind_name()
    ))
}

/// A rational weighted automaton; NFA files are read as the IFA of their language.
fn load_rational(path: &Path) -> Result<WeightedAutomaton<Rational>, CliError> {
    match load_automaton(path)? {
        Automaton::Rational(a) => Ok(a),
        Automaton::Nfa(n) => Ok(nfa_to_ifa(&n)),
        other => Err(wrong_kind(path, &other, "a rational weighted automaton")),
    }
}

/// A rational automaton checked to be an IFA.
fn load_ifa(path: &Path) -> Result<WeightedAutomaton<Rational>, CliError> {
    let a = load_rational(path)?;
    ensure_image_binary(&a).map_err(|e| CliError::Semantic(format!("{}: {e}", path.display())))?;
    Ok(a)
}

fn load_nba(path: &Path) -> Result<Nba, CliError> {
    match load_automaton(path)? {
        Automaton::Nba(a) => Ok(a),
        other => Err(wrong_kind(path, &other, "an `nba` file")),
    }
}

fn lfsr_spec(a: &LfsrArgs) -> Result<LfsrSpec, CliError> {
    Ok(LfsrSpec::parse(a.d, &a.taps, &a.init)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn path_json(p: &Path) -> Value {
    Value::String(p.display().to_string())
}

fn equiv_report<F: Field>(
    inputs: Value,
    a: &WeightedAutomaton<F>,
    b: &WeightedAutomaton<F>,
) -> Result<Report, CliError> {
    Ok(match distinguishing_word(a, b)? {
        None => Report::new("equiv", inputs, "yes".into(), json!({ "equivalent": true })),
        Some(w) => {
            let word = a.alphabet().render(&w);
            let (va, vb) = (a.eval(&w).to_string(), b.eval(&w).to_string());
            let text = format!("no\nwitness: \"{word}\" ({va} vs {vb})");
            Report::new(
                "equiv",
                inputs,
                text,
                json!({ "equivalent": false, "witness": word, "values": [va, vb] }),
            )
        }
    })
}

/// Checks that `a` takes only the values 0 and 1 on lassos within `bounds`.
fn spot_check_binary(a: &Iba, bounds: &LassoBounds) -> Result<usize, CliError> {
    let lassos = Lasso::enumerate(a.alphabet(), bounds.max_stem, bounds.max_cycle);
    for l in &lassos {
        let word = l.render(a.alphabet());
        match iba_lasso_eval(a, l) {
            Ok(v) if v.is_zero() || v.is_one() => {}
            Ok(v) => {
                return Err(CliError::Semantic(format!(
                    "not image-binary: value {} on lasso {word}",
                    fmt_ratio(&v)
                )))
            }
            Err(e) => return Err(CliError::Semantic(format!("not image-binary on lasso {word}: {e}"))),
        }
    }
    Ok(lassos.len())
}

fn ambiguity_guard(a: &Nba, k: u64, bounds: &LassoBounds) -> Result<usize, CliError> {
    if let Some((l, count)) = a.ambiguity_violation(k, bounds.max_stem, bounds.max_cycle) {
        let count = match count {
            PathCount::Finite(c) => c.to_string(),
            PathCount::Infinite => "infinitely many".into(),
        };
        return Err(CliError::Semantic(format!(
            "not {k}-ambiguous: {count} final paths on lasso {}",
            l.render(a.alphabet())
        )));
    }
    Ok(Lasso::enumerate(a.alphabet(), bounds.max_stem, bounds.max_cycle).len())
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Eval { file, word } => {
            let inputs = json!({ "file": path_json(file), "word": word });
            let (value, text) = match load_automaton(file)? {
                Automaton::Gf2(a) => {
                    let v = a.eval_word(word)?.to_string();
                    (v.clone(), v)
                }
                Automaton::Rational(a) => {
                    let v = fmt_ratio(&a.eval_word(word)?);
                    (v.clone(), v)
                }
                Automaton::Nfa(n) => {
                    let v = fmt_ratio(&nfa_to_ifa::<Rational>(&n).eval_word(word)?);
                    (v.clone(), v)
                }
                other => return Err(wrong_kind(file, &other, "a finite-word automaton (use lasso-eval)")),
            };
            Ok(Report::new("eval", inputs, text, json!({ "value": value })))
        }
        Command::Equiv { a, b } => {
            let inputs = json!({ "a": path_json(a), "b": path_json(b) });
            match (load_automaton(a)?, load_automaton(b)?) {
                (Automaton::Gf2(x), Automaton::Gf2(y)) => equiv_report(inputs, &x, &y),
                (Automaton::Gf2(_), _) | (_, Automaton::Gf2(_)) => Err(CliError::Validation(
                    "cannot compare a gf2 automaton with a rational one".into(),
                )),
                _ => equiv_report(inputs, &load_rational(a)?, &load_rational(b)?),
            }
        }
        Command::Minimize { file } => {
            let inputs = json!({ "file": path_json(file) });
            let (before, out) = match load_automaton(file)? {
                Automaton::Gf2(a) => (a.state_count(), Automaton::Gf2(minimize(&a))),
                _ => {
                    let a = load_rational(file)?;
                    (a.state_count(), Automaton::Rational(minimize(&a)))
                }
            };
            let after = out.state_count();
            Ok(
                Report::automaton("minimize", inputs, write_automaton(&out))
                    .note(format!("{before} states -> {after}")),
            )
        }
        Command::CheckIfa { file } => {
            let inputs = json!({ "file": path_json(file) });
            let a = load_rational(file)?;
            Ok(match non_binary_witness(&a)? {
                None => Report::new("check-ifa", inputs, "yes".into(), json!({ "image_binary": true })),
                Some(w) => {
                    let word = a.alphabet().render(&w);
                    let value = fmt_ratio(&a.eval(&w));
                    let mut r = Report::new(
                        "check-ifa",
                        inputs,
                        format!("no\nnot image-binary: witness \"{word}\" has value {value}"),
                        json!({ "image_binary": false, "witness": word, "value": value }),
                    );
                    r.exit = 3;
                    r
                }
            })
        }
        Command::Complement { file } => {
            let a = load_ifa(file)?;
            let out = Automaton::Rational(complement(&a));
            Ok(Report::automaton(
                "complement",
                json!({ "file": path_json(file) }),
                write_automaton(&out),
            ))
        }
        Command::Intersect { a, b } => {
            let out = Automaton::Rational(intersect(&load_ifa(a)?, &load_ifa(b)?)?);
            let inputs = json!({ "a": path_json(a), "b": path_json(b) });
            Ok(Report::automaton("intersect", inputs, write_automaton(&out)))
        }
        Command::Union { a, b } => {
            let out = Automaton::Rational(union(&load_ifa(a)?, &load_ifa(b)?)?);
            let inputs = json!({ "a": path_json(a), "b": path_json(b) });
            Ok(Report::automaton("union", inputs, write_automaton(&out)))
        }
        Command::ToDfa { file } => {
            let a = load_ifa(file)?;
            let d = ifa_to_dfa(&a)?;
            Ok(
                Report::automaton("to-dfa", json!({ "file": path_json(file) }), format::write_dfa(&d)).note(format!(
                    "{} IFA states -> {} DFA states",
                    a.state_count(),
                    d.state_count()
                )),
            )
        }
        Command::NfaToIfa { file } => match load_automaton(file)? {
            Automaton::Nfa(n) => {
                let a = nfa_to_ifa::<Rational>(&n);
                let note = format!("{} NFA states -> {} IFA states", n.state_count(), a.state_count());
                let text = write_automaton(&Automaton::Rational(a));
                Ok(Report::automaton("nfa-to-ifa", json!({ "file": path_json(file) }), text).note(note))
            }
            other => Err(wrong_kind(file, &other, "an `nfa` file")),
        },
        Command::ToMod2 { file } => {
            let a = load_ifa(file)?;
            let m = ifa_to_mod2(&a)?;
            let note = format!("{} IFA states -> {} mod-2 states", a.state_count(), m.state_count());
            Ok(Report::automaton(
                "to-mod2",
                json!({ "file": path_json(file) }),
                write_automaton(&Automaton::Gf2(m)),
            )
            .note(note))
        }
        Command::Lfsr { spec, len, emit } => {
            let s = lfsr_spec(spec)?;
            let inputs = json!({ "d": spec.d, "taps": spec.taps, "init": spec.init, "len": len });
            let period = lfsr_period(&s);
            match emit {
                Some(LfsrEmit::Mod2) => {
                    let a = Automaton::Gf2(lfsr_to_mod2ma(&s));
                    Ok(Report::automaton("lfsr", inputs, write_automaton(&a)).note(format!("period {period}")))
                }
                Some(LfsrEmit::Dfa) => Ok(Report::automaton("lfsr", inputs, format::write_dfa(&lfsr_dfa(&s)))
                    .note(format!("period {period}"))),
                None => {
                    let bits: String = lfsr_sequence(&s, len.unwrap_or(period))
                        .iter()
                        .map(|&b| if b { '1' } else { '0' })
                        .collect();
                    let text = format!("{bits}\nperiod: {period}");
                    Ok(Report::new(
                        "lfsr",
                        inputs,
                        text,
                        json!({ "bits": bits, "period": period }),
                    ))
                }
            }
        }
        Command::LfsrReport { spec } => {
            let s = lfsr_spec(spec)?;
            let inputs = json!({ "d": spec.d, "taps": spec.taps, "init": spec.init });
            let r = shift_register_rank_report(&s)?;
            let (diag, off) = (fmt_ratio(&r.diagonal), fmt_ratio(&r.off_diagonal));
            let text = format!(
                "dimension: {}\nperiod: {}\nrank: {}\ndiagonal: {diag}\noff-diagonal: {off}\nuniform: {}\n\
                 inverse with +2^(2-2d) off the diagonal: {}\ninverse with -2^(2-2d) off the diagonal: {}",
                r.dimension,
                r.period,
                r.rank,
                yes_no(r.uniform),
                yes_no(r.inverse_check.0),
                yes_no(r.inverse_check.1),
            );
            let result = json!({
                "dimension": r.dimension,
                "period": r.period,
                "rank": r.rank,
                "diagonal": diag,
                "off_diagonal": off,
                "uniform": r.uniform,
                "inverse_plus": r.inverse_check.0,
                "inverse_minus": r.inverse_check.1,
            });
            Ok(Report::new("lfsr-report", inputs, text, result))
        }
        Command::Kdis { file, k, check } => {
            let a = load_nba(file)?;
            let checked = ambiguity_guard(&a, u64::from(*k), check)?;
            let kd = kdis(&a, *k)?;
            let inputs = json!({ "file": path_json(file), "k": k });
            Ok(Report::automaton("kdis", inputs, format::write_kdis(&kd))
                .note(format!("{checked} lasso words checked for {k}-ambiguity"))
                .note(format!(
                    "{} states explored, {} kept",
                    kd.untrimmed,
                    kd.iba.state_count()
                )))
        }
        Command::LassoEval { file, stem, cycle } => {
            let inputs = json!({ "file": path_json(file), "stem": stem, "cycle": cycle });
            match load_automaton(file)? {
                Automaton::Iba(a) => {
                    let l = Lasso::parse(a.alphabet(), stem, cycle)?;
                    let v = fmt_ratio(&iba_lasso_eval(&a, &l)?);
                    Ok(Report::new("lasso-eval", inputs, v.clone(), json!({ "value": v })))
                }
                Automaton::Nba(a) => {
                    let l = Lasso::parse(a.alphabet(), stem, cycle)?;
                    let paths = match a.lasso_final_paths(&l)? {
                        PathCount::Finite(c) => json!(c),
                        PathCount::Infinite => json!("infinite"),
                    };
                    let accepted = a.lasso_accepts(&l)?;
                    let text = format!(
                        "accepted: {}\nfinal paths: {}",
                        yes_no(accepted),
                        paths.as_str().map_or(paths.to_string(), String::from)
                    );
                    Ok(Report::new(
                        "lasso-eval",
                        inputs,
                        text,
                        json!({ "accepted": accepted, "final_paths": paths }),
                    ))
                }
                other => Err(wrong_kind(file, &other, "an `iba` or `nba` file")),
            }
        }
        Command::AmbiguityCheck { file, k, bounds } => {
            let a = load_nba(file)?;
            let inputs =
                json!({ "file": path_json(file), "k": k, "max_stem": bounds.max_stem, "max_cycle": bounds.max_cycle });
            Ok(match ambiguity_guard(&a, *k, bounds) {
                Ok(n) => Report::new(
                    "ambiguity-check",
                    inputs,
                    "yes".into(),
                    json!({ "within_bound": true, "lassos": n }),
                ),
                Err(CliError::Semantic(m)) => {
                    let mut r = Report::new(
                        "ambiguity-check",
                        inputs,
                        format!("no\n{m}"),
                        json!({ "within_bound": false, "reason": m }),
                    );
                    r.exit = 3;
                    r
                }
                Err(e) => return Err(e),
            })
        }
        Command::Modelcheck {
            automaton,
            chain,
            k,
            check,
        } => {
            let inputs = json!({ "automaton": path_json(automaton), "chain": path_json(chain), "k": k });
            let mut notes = Vec::new();
            let iba = match (load_automaton(automaton)?, k) {
                (Automaton::Iba(a), None) => a,
                (Automaton::Nba(a), Some(k)) => {
                    let checked = ambiguity_guard(&a, u64::from(*k), check)?;
                    notes.push(format!("{checked} lasso words checked for {k}-ambiguity"));
                    kdis(&a, *k)?.iba
                }
                (Automaton::Nba(a), None) => Iba::from_nba(&a),
                (Automaton::Iba(_), Some(_)) => {
                    return Err(CliError::Usage("--k only applies to `nba` inputs".into()));
                }
                (other, _) => return Err(wrong_kind(automaton, &other, "an `iba` or `nba` file")),
            };
            let m = with_file(chain, parse_markov_chain(&read(chain)?))?;
            let checked = spot_check_binary(&iba, check)?;
            notes.push(format!("{checked} lasso words spot-checked for 0/1 values"));
            let r = model_check(&iba, &m)?;
            notes.push(format!(
                "{} product nodes, {} SCCs",
                r.product.node_count(),
                r.product.sccs().count()
            ));
            if !r.z_in_unit_interval {
                notes.push("some product node has a value outside [0, 1]".into());
            }
            let p = fmt_ratio(&r.probability);
            let mut report = Report::new("modelcheck", inputs, p.clone(), json!({ "probability": p }));
            report.diagnostics = notes;
            Ok(report)
        }
        Command::Gen { what } => {
            let (kind, size) = match what {
                GenKind::Dfa { size } => ("dfa", size),
                GenKind::Ifa { size } => ("ifa", size),
                GenKind::Nba { size, .. } => ("nba", size),
                GenKind::Mc { size } => ("mc", size),
            };
            if size.states == 0 || !(1..=26).contains(&size.alphabet) {
                return Err(CliError::Usage(
                    "need at least one state and an alphabet of 1 to 26 letters".into(),
                ));
            }
            let mut inputs =
                json!({ "kind": kind, "seed": size.seed, "states": size.states, "alphabet": size.alphabet });
            let text = match what {
                GenKind::Dfa { .. } => format::write_dfa(&fixtures::random_dfa(size.seed, size.states, size.alphabet)),
                GenKind::Ifa { .. } => {
                    let (_, ifa) = fixtures::conjugated_ifa(size.seed, size.states, size.alphabet);
                    write_automaton(&Automaton::Rational(ifa))
                }
                GenKind::Nba { k, .. } => {
                    if *k == 0 {
                        return Err(CliError::Usage("--k must be at least 1".into()));
                    }
                    inputs["k"] = json!(k);
                    write_automaton(&Automaton::Nba(fixtures::dba_union(
                        size.seed,
                        *k,
                        size.states,
                        size.alphabet,
                    )))
                }
                GenKind::Mc { .. } => {
                    write_markov_chain(&fixtures::random_markov_chain(size.seed, size.states, size.alphabet))
                }
            };
            let result = json!({ "file": text });
            Ok(Report::new("gen", inputs, text, result))
        }
    }
}
