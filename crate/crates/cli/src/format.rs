//! Line-based text formats for automata and Markov chains.
//!
//! ```text
//! # even positive number of a, then nothing or b and anything
//! kind: wa
//! field: rational
//! alphabet: a b
//! states: 3
//! initial: 1 0 0
//! final: 0 0 1
//! trans a 1 1 -1
//! trans a 1 2 1
//! ```
//!
//! `kind` is one of `wa` (weighted automaton over `field`), `iba` (rational
//! weights, `final` lists accepting states), `nba` and `nfa` (unweighted,
//! `initial` and `final` list states). State indices are 1-based, scalars are
//! integers or `p/q`, omitted transitions have weight 0 and a transition
//! without a weight has weight 1. Markov chains use `kind: mc` with
//! `initial`, an optional `labels` line (defaulting to one letter per state)
//! and one `row <i>:` line per state. Lines starting with `#` are comments.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use imagebin_core::buchi::Kdis;
use imagebin_core::field::Rational;
use imagebin_core::{
    Alphabet, Dfa, Field, FieldKind, Gf2, Iba, Letter, MarkovChain, Matrix, Nba, Nfa, WeightedAutomaton,
};

use crate::error::CliError;

/// Any automaton the tool reads or writes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Rational(WeightedAutomaton<Rational>),
    Gf2(WeightedAutomaton<Gf2>),
    Iba(Iba),
    Nba(Nba),
    Nfa(Nfa),
}

impl Automaton {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Automaton::Rational(_) | Automaton::Gf2(_) => "wa",
            Automaton::Iba(_) => "iba",
            Automaton::Nba(_) => "nba",
            Automaton::Nfa(_) => "nfa",
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Rational(a) => a.alphabet(),
            Automaton::Gf2(a) => a.alphabet(),
            Automaton::Iba(a) => a.alphabet(),
            Automaton::Nba(a) => a.alphabet(),
            Automaton::Nfa(a) => a.alphabet(),
        }
    }

    pub fn state_count(&self) -> usize {
        match self {
            Automaton::Rational(a) => a.state_count(),
            Automaton::Gf2(a) => a.state_count(),
            Automaton::Iba(a) => a.state_count(),
            Automaton::Nba(a) => a.state_count(),
            Automaton::Nfa(a) => a.state_count(),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse(format!("line {line}: {}", msg.into()))
}

fn invalid(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Validation(format!("line {line}: {}", msg.into()))
}

/// Parses an integer or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

/// Integers as `n`, everything else as `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

trait Scalar: Field {
    fn parse_scalar(s: &str) -> Option<Self>;
    fn format_scalar(&self) -> String;
}

impl Scalar for Rational {
    fn parse_scalar(s: &str) -> Option<Self> {
        parse_rational(s)
    }
    fn format_scalar(&self) -> String {
        format_rational(self)
    }
}

impl Scalar for Gf2 {
    fn parse_scalar(s: &str) -> Option<Self> {
        match s {
            "0" => Some(Gf2(false)),
            "1" => Some(Gf2(true)),
            _ => None,
        }
    }
    fn format_scalar(&self) -> String {
        self.to_string()
    }
}

#[derive(Default)]
struct Raw {
    kind: Option<(usize, String)>,
    field: Option<(usize, String)>,
    alphabet: Option<(usize, Vec<String>)>,
    states: Option<(usize, usize)>,
    initial: Option<(usize, Vec<String>)>,
    fin: Option<(usize, Vec<String>)>,
    labels: Option<(usize, Vec<String>)>,
    rows: BTreeMap<usize, (usize, Vec<String>)>,
    trans: Vec<(usize, String, usize, usize, Option<String>)>,
}

fn set_once<T>(slot: &mut Option<(usize, T)>, line: usize, key: &str, value: T) -> Result<(), CliError> {
    if let Some((first, _)) = slot {
        return Err(parse_err(
            line,
            format!("duplicate `{key}` (first given on line {first})"),
        ));
    }
    *slot = Some((line, value));
    Ok(())
}

fn parse_index(s: &str, line: usize) -> Result<usize, CliError> {
    match s.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i),
        _ => Err(parse_err(line, format!("expected a 1-based state index, got `{s}`"))),
    }
}

fn tokenize(text: &str) -> Result<Raw, CliError> {
    let mut raw = Raw::default();
    for (i, full) in text.lines().enumerate() {
        let line = i + 1;
        let content = full.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content
            .strip_prefix("trans ")
            .or_else(|| content.strip_prefix("trans\t"))
        {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 && parts.len() != 4 {
                return Err(parse_err(line, "expected `trans <letter> <from> <to> [<weight>]`"));
            }
            let from = parse_index(parts[1], line)?;
            let to = parse_index(parts[2], line)?;
            raw.trans.push((
                line,
                parts[0].to_string(),
                from,
                to,
                parts.get(3).map(|s| s.to_string()),
            ));
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            return Err(parse_err(line, format!("unrecognized line `{content}`")));
        };
        let key = key.trim();
        let words: Vec<String> = value.split_whitespace().map(String::from).collect();
        match key {
            "kind" => set_once(&mut raw.kind, line, key, value.trim().to_string())?,
            "field" => set_once(&mut raw.field, line, key, value.trim().to_string())?,
            "alphabet" => set_once(&mut raw.alphabet, line, key, words)?,
            "states" => {
                let n = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(line, "`states` must be a number"))?;
                set_once(&mut raw.states, line, key, n)?;
            }
            "initial" => set_once(&mut raw.initial, line, key, words)?,
            "final" => set_once(&mut raw.fin, line, key, words)?,
            "labels" => set_once(&mut raw.labels, line, key, words)?,
            _ => {
                let Some(idx) = key.strip_prefix("row ") else {
                    return Err(parse_err(line, format!("unknown key `{key}`")));
                };
                let idx = parse_index(idx.trim(), line)?;
                if let Some((first, _)) = raw.rows.get(&idx) {
                    return Err(parse_err(
                        line,
                        format!("duplicate row {idx} (first given on line {first})"),
                    ));
                }
                raw.rows.insert(idx, (line, words));
            }
        }
    }
    Ok(raw)
}

fn require<T>(slot: Option<(usize, T)>, key: &str) -> Result<(usize, T), CliError> {
    slot.ok_or_else(|| CliError::Parse(format!("missing `{key}` line")))
}

fn alphabet_of(raw: &mut Raw) -> Result<Alphabet, CliError> {
    let (line, letters) = require(raw.alphabet.take(), "alphabet")?;
    if letters.is_empty() {
        return Err(parse_err(line, "empty alphabet"));
    }
    Alphabet::new(letters).map_err(|e| invalid(line, e.to_string()))
}

fn scalars<F: Scalar>(line: usize, words: &[String], n: usize, what: &str) -> Result<Vec<F>, CliError> {
    if words.len() != n {
        return Err(invalid(
            line,
            format!("{what} has {} entries, expected {n}", words.len()),
        ));
    }
    words
        .iter()
        .map(|w| F::parse_scalar(w).ok_or_else(|| parse_err(line, format!("bad scalar `{w}`"))))
        .collect()
}

fn state_list(line: usize, words: &[String], n: usize) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for w in words {
        let i = parse_index(w, line)?;
        if i > n {
            return Err(invalid(line, format!("state {i} out of range (have {n})")));
        }
        if out.contains(&(i - 1)) {
            return Err(invalid(line, format!("state {i} listed twice")));
        }
        out.push(i - 1);
    }
    Ok(out)
}

/// Transition triples with parsed weights; rejects unknown letters, states out
/// of range and duplicate `(letter, from, to)` lines.
fn transitions<F: Scalar>(
    raw: &Raw,
    alphabet: &Alphabet,
    n: usize,
) -> Result<Vec<(Letter, usize, usize, F)>, CliError> {
    let mut seen: HashMap<(Letter, usize, usize), usize> = HashMap::new();
    let mut out = Vec::new();
    for (line, letter, from, to, weight) in &raw.trans {
        let a = alphabet.index(letter).map_err(|e| invalid(*line, e.to_string()))?;
        for q in [from, to] {
            if *q > n {
                return Err(invalid(*line, format!("state {q} out of range (have {n})")));
            }
        }
        if let Some(first) = seen.insert((a, from - 1, to - 1), *line) {
            return Err(invalid(
                *line,
                format!("duplicate transition `{letter} {from} {to}` (first on line {first})"),
            ));
        }
        let w = match weight {
            Some(w) => F::parse_scalar(w).ok_or_else(|| parse_err(*line, format!("bad weight `{w}`")))?,
            None => F::one(),
        };
        out.push((a, from - 1, to - 1, w));
    }
    Ok(out)
}

fn matrices<F: Scalar>(trans: &[(Letter, usize, usize, F)], letters: usize, n: usize) -> Vec<Matrix<F>> {
    let mut ms = vec![Matrix::zeros(n, n); letters];
    for (a, p, q, w) in trans {
        ms[*a].set(*p, *q, w.clone());
    }
    ms
}

fn weighted<F: Scalar>(raw: &mut Raw, alphabet: Alphabet, n: usize) -> Result<WeightedAutomaton<F>, CliError> {
    let (il, iw) = require(raw.initial.take(), "initial")?;
    let (fl, fw) = require(raw.fin.take(), "final")?;
    let init = scalars::<F>(il, &iw, n, "initial vector")?;
    let fin = scalars::<F>(fl, &fw, n, "final vector")?;
    let trans = transitions::<F>(raw, &alphabet, n)?;
    let ms = matrices(&trans, alphabet.len(), n);
    WeightedAutomaton::new(alphabet, ms, init, fin).map_err(CliError::from)
}

fn unweighted(
    raw: &mut Raw,
    alphabet: &Alphabet,
    n: usize,
) -> Result<(Vec<(usize, Letter, usize)>, Vec<usize>, Vec<usize>), CliError> {
    let (il, iw) = require(raw.initial.take(), "initial")?;
    let (fl, fw) = require(raw.fin.take(), "final")?;
    let init = state_list(il, &iw, n)?;
    let fin = state_list(fl, &fw, n)?;
    let trans = transitions::<Rational>(raw, alphabet, n)?;
    let mut triples = Vec::new();
    for (line, (a, p, q, w)) in raw.trans.iter().map(|t| t.0).zip(trans) {
        if !w.is_one() {
            return Err(invalid(
                line,
                "transitions of an unweighted automaton must have weight 1",
            ));
        }
        triples.push((p, a, q));
    }
    Ok((triples, init, fin))
}

fn reject_extra(raw: &Raw, kind: &str) -> Result<(), CliError> {
    if let Some((line, _)) = &raw.labels {
        return Err(parse_err(*line, format!("`labels` is not allowed in a `{kind}` file")));
    }
    if let Some((_, (line, _))) = raw.rows.iter().next() {
        return Err(parse_err(*line, format!("`row` is not allowed in a `{kind}` file")));
    }
    Ok(())
}

/// Parses an automaton file.
pub fn parse_automaton(text: &str) -> Result<Automaton, CliError> {
    let mut raw = tokenize(text)?;
    let (kl, kind) = require(raw.kind.take(), "kind")?;
    if kind == "mc" {
        return Err(parse_err(kl, "expected an automaton, found a Markov chain"));
    }
    reject_extra(&raw, &kind)?;
    let alphabet = alphabet_of(&mut raw)?;
    let (_, n) = require(raw.states, "states")?;
    if n == 0 {
        return Err(CliError::Validation("an automaton needs at least one state".into()));
    }
    let field = raw.field.take();
    if kind != "wa" {
        if let Some((line, f)) = &field {
            if f != "rational" {
                return Err(parse_err(*line, format!("`{kind}` files are over the rationals")));
            }
        }
    }
    match kind.as_str() {
        "wa" => match field.as_ref().map(|f| f.1.as_str()).unwrap_or("rational") {
            "rational" => Ok(Automaton::Rational(weighted(&mut raw, alphabet, n)?)),
            "gf2" => Ok(Automaton::Gf2(weighted(&mut raw, alphabet, n)?)),
            other => Err(parse_err(
                field.as_ref().map_or(0, |f| f.0),
                format!("unknown field `{other}`"),
            )),
        },
        "iba" => {
            let (il, iw) = require(raw.initial.take(), "initial")?;
            let (fl, fw) = require(raw.fin.take(), "final")?;
            let init = scalars::<Rational>(il, &iw, n, "initial vector")?;
            let acc_states = state_list(fl, &fw, n)?;
            let mut accepting = vec![false; n];
            for q in acc_states {
                accepting[q] = true;
            }
            let trans = transitions::<Rational>(&raw, &alphabet, n)?;
            let ms = matrices(&trans, alphabet.len(), n);
            Ok(Automaton::Iba(Iba::new(alphabet, ms, init, accepting)?))
        }
        "nba" => {
            let (t, i, f) = unweighted(&mut raw, &alphabet, n)?;
            Ok(Automaton::Nba(Nba::new(alphabet, n, &t, &i, &f)?))
        }
        "nfa" => {
            let (t, i, f) = unweighted(&mut raw, &alphabet, n)?;
            Ok(Automaton::Nfa(Nfa::new(alphabet, n, &t, &i, &f)?))
        }
        other => Err(parse_err(
            kl,
            format!("unknown kind `{other}` (expected wa, iba, nba, nfa)"),
        )),
    }
}

/// Parses a Markov chain file.
pub fn parse_markov_chain(text: &str) -> Result<MarkovChain, CliError> {
    let mut raw = tokenize(text)?;
    let (kl, kind) = require(raw.kind.take(), "kind")?;
    if kind != "mc" {
        return Err(parse_err(kl, format!("expected `kind: mc`, found `{kind}`")));
    }
    for (key, slot) in [
        ("final", raw.fin.as_ref().map(|x| x.0)),
        ("field", raw.field.as_ref().map(|x| x.0)),
    ] {
        if let Some(line) = slot {
            return Err(parse_err(
                line,
                format!("`{key}` is not allowed in a Markov chain file"),
            ));
        }
    }
    if let Some((line, ..)) = raw.trans.first() {
        return Err(parse_err(*line, "`trans` is not allowed in a Markov chain file"));
    }
    let alphabet = alphabet_of(&mut raw)?;
    let (_, n) = require(raw.states, "states")?;
    if n == 0 {
        return Err(CliError::Validation("a Markov chain needs at least one state".into()));
    }
    let (il, iw) = require(raw.initial.take(), "initial")?;
    let init = scalars::<Rational>(il, &iw, n, "initial distribution")?;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let (line, words) = raw
            .rows
            .remove(&i)
            .ok_or_else(|| CliError::Parse(format!("missing `row {i}:` line")))?;
        rows.push(scalars::<Rational>(line, &words, n, &format!("row {i}"))?);
    }
    if let Some((i, (line, _))) = raw.rows.iter().next() {
        return Err(invalid(*line, format!("row {i} out of range (have {n} states)")));
    }
    let labels = match raw.labels.take() {
        Some((line, words)) => {
            if words.len() != n {
                return Err(invalid(line, format!("{} labels for {n} states", words.len())));
            }
            words
                .iter()
                .map(|w| alphabet.index(w).map_err(|e| invalid(line, e.to_string())))
                .collect::<Result<Vec<_>, _>>()?
        }
        None => {
            if alphabet.len() != n {
                return Err(CliError::Validation(format!(
                    "no `labels` line: the default labeling needs one letter per state ({n}), alphabet has {}",
                    alphabet.len()
                )));
            }
            (0..n).collect()
        }
    };
    let p = Matrix::from_rows(rows)?;
    Ok(MarkovChain::new(alphabet, p, init, labels)?)
}

fn header(out: &mut String, kind: &str, field: Option<FieldKind>, alphabet: &Alphabet, n: usize) {
    writeln!(out, "kind: {kind}").unwrap();
    if let Some(f) = field {
        writeln!(out, "field: {}", if f == FieldKind::Gf2 { "gf2" } else { "rational" }).unwrap();
    }
    writeln!(out, "alphabet: {}", alphabet.names().join(" ")).unwrap();
    writeln!(out, "states: {n}").unwrap();
}

fn join<F: Scalar>(v: &[F]) -> String {
    v.iter().map(Scalar::format_scalar).collect::<Vec<_>>().join(" ")
}

fn index_list(v: impl Iterator<Item = usize>) -> String {
    v.map(|q| (q + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn weighted_lines<F: Scalar>(out: &mut String, alphabet: &Alphabet, ms: &[Matrix<F>], unit_implicit: bool) {
    for (a, m) in ms.iter().enumerate() {
        for (p, q, w) in m.nonzeros() {
            if unit_implicit && w.is_one() {
                writeln!(out, "trans {} {} {}", alphabet.name(a), p + 1, q + 1).unwrap();
            } else {
                writeln!(
                    out,
                    "trans {} {} {} {}",
                    alphabet.name(a),
                    p + 1,
                    q + 1,
                    w.format_scalar()
                )
                .unwrap();
            }
        }
    }
}

fn write_weighted<F: Scalar>(a: &WeightedAutomaton<F>) -> String {
    let mut out = String::new();
    header(&mut out, "wa", Some(F::KIND), a.alphabet(), a.state_count());
    writeln!(out, "initial: {}", join(a.initial())).unwrap();
    writeln!(out, "final: {}", join(a.final_vector())).unwrap();
    weighted_lines(&mut out, a.alphabet(), a.transitions(), false);
    out
}

fn write_iba(a: &Iba, comments: Option<&[String]>) -> String {
    let mut out = String::new();
    header(&mut out, "iba", None, a.alphabet(), a.state_count());
    writeln!(out, "initial: {}", join(a.initial())).unwrap();
    writeln!(
        out,
        "final: {}",
        index_list((0..a.state_count()).filter(|&q| a.is_accepting(q)))
    )
    .unwrap();
    if let Some(c) = comments {
        for (q, text) in c.iter().enumerate() {
            writeln!(out, "# state {}: {text}", q + 1).unwrap();
        }
    }
    weighted_lines(&mut out, a.alphabet(), a.transitions(), false);
    out
}

fn write_unweighted(
    kind: &str,
    alphabet: &Alphabet,
    n: usize,
    initial: impl Fn(usize) -> bool,
    accepting: impl Fn(usize) -> bool,
    succ: impl Fn(usize, Letter) -> Vec<usize>,
) -> String {
    let mut out = String::new();
    header(&mut out, kind, None, alphabet, n);
    writeln!(out, "initial: {}", index_list((0..n).filter(|&q| initial(q)))).unwrap();
    writeln!(out, "final: {}", index_list((0..n).filter(|&q| accepting(q)))).unwrap();
    for a in 0..alphabet.len() {
        for p in 0..n {
            for q in succ(p, a) {
                writeln!(out, "trans {} {} {}", alphabet.name(a), p + 1, q + 1).unwrap();
            }
        }
    }
    out
}

/// Serializes an automaton; `parse_automaton` inverts it.
pub fn write_automaton(a: &Automaton) -> String {
    match a {
        Automaton::Rational(w) => write_weighted(w),
        Automaton::Gf2(w) => write_weighted(w),
        Automaton::Iba(i) => write_iba(i, None),
        Automaton::Nba(b) => write_unweighted(
            "nba",
            b.alphabet(),
            b.state_count(),
            |q| b.is_initial(q),
            |q| b.is_accepting(q),
            |p, x| b.successors(p, x).to_vec(),
        ),
        Automaton::Nfa(f) => write_unweighted(
            "nfa",
            f.alphabet(),
            f.state_count(),
            |q| f.is_initial(q),
            |q| f.is_accepting(q),
            |p, x| f.successors(p, x).to_vec(),
        ),
    }
}

/// Serializes a DFA as a deterministic `nfa` file.
pub fn write_dfa(d: &Dfa) -> String {
    write_unweighted(
        "nfa",
        d.alphabet(),
        d.state_count(),
        |q| q == d.initial(),
        |q| d.is_accepting(q),
        |p, x| vec![d.step(p, x)],
    )
}

/// Serializes a disambiguation result with each state's count vector as a comment.
pub fn write_kdis(k: &Kdis) -> String {
    let comments: Vec<String> = k.states.iter().map(ToString::to_string).collect();
    write_iba(
        &k.iba,
        if comments.len() == k.iba.state_count() {
            Some(&comments)
        } else {
            None
        },
    )
}

/// Serializes a Markov chain; `parse_markov_chain` inverts it.
pub fn write_markov_chain(m: &MarkovChain) -> String {
    let mut out = String::new();
    header(&mut out, "mc", None, m.alphabet(), m.state_count());
    writeln!(out, "initial: {}", join(m.initial())).unwrap();
    let labels: Vec<&str> = m.labels().iter().map(|&a| m.alphabet().name(a)).collect();
    writeln!(out, "labels: {}", labels.join(" ")).unwrap();
    for s in 0..m.state_count() {
        writeln!(out, "row {}: {}", s + 1, join(m.transition_matrix().row(s))).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use imagebin_core::samples::{branching_nba, even_a_ifa};

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6"), Some(Rational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("4"), Some(Rational::from_integer(4.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&Rational::new(2.into(), 4.into())), "1/2");
        assert_eq!(format_rational(&Rational::from_integer((-2).into())), "-2");
    }

    #[test]
    fn even_a_round_trip() {
        let a = Automaton::Rational(even_a_ifa());
        let text = write_automaton(&a);
        assert!(text.contains("trans a 1 1 -1"));
        assert_eq!(parse_automaton(&text).unwrap(), a);
    }

    #[test]
    fn nba_round_trip() {
        let a = Automaton::Nba(branching_nba());
        assert_eq!(parse_automaton(&write_automaton(&a)).unwrap(), a);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "kind: wa\nalphabet: a\nstates: 1\ninitial: 1\nfinal: 1\ntrans a 1 2\n";
        match parse_automaton(text) {
            Err(CliError::Validation(m)) => assert!(m.starts_with("line 6:"), "{m}"),
            other => panic!("{other:?}"),
        }
        let text = "kind: wa\nalphabet: a\nstates: 1\ninitial: x\nfinal: 1\n";
        match parse_automaton(text) {
            Err(CliError::Parse(m)) => assert!(m.starts_with("line 4:"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn duplicate_transition_rejected() {
        let text = "kind: wa\nalphabet: a\nstates: 1\ninitial: 1\nfinal: 1\ntrans a 1 1\ntrans a 1 1 2\n";
        assert!(matches!(parse_automaton(text), Err(CliError::Validation(_))));
    }

    #[test]
    fn markov_chain_default_labels() {
        let text = "kind: mc\nalphabet: a b\nstates: 2\ninitial: 1/3 2/3\nrow 1: 1/2 1/2\nrow 2: 0 1\n";
        let m = parse_markov_chain(text).unwrap();
        assert_eq!(m.labels(), &[0, 1]);
        assert_eq!(parse_markov_chain(&write_markov_chain(&m)).unwrap(), m);
        let bad = text.replace("row 2: 0 1", "row 2: 1/2 1/3");
        assert!(matches!(parse_markov_chain(&bad), Err(CliError::Validation(_))));
    }
}
