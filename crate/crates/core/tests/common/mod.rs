#![allow(dead_code)]

use std::collections::HashMap;

use imagebin_core::buchi::{Bit, CountVector};
use imagebin_core::field::int;
use imagebin_core::{Alphabet, Letter, MarkovChain, Nba, Rational, WeightedAutomaton, Word};
use num_traits::{One, Zero};

/// Calls `f(w, value)` for every word of length at most `max_len`, sharing
/// forward vectors between words with a common prefix.
pub fn for_each_value(a: &WeightedAutomaton<Rational>, max_len: usize, mut f: impl FnMut(&[Letter], &Rational)) {
    fn go(
        a: &WeightedAutomaton<Rational>,
        w: &mut Word,
        v: &[Rational],
        max_len: usize,
        f: &mut dyn FnMut(&[Letter], &Rational),
    ) {
        let value = v
            .iter()
            .zip(a.final_vector())
            .fold(Rational::zero(), |acc, (x, y)| acc + x * y);
        f(w, &value);
        if w.len() == max_len {
            return;
        }
        for letter in 0..a.alphabet().len() {
            let next = a.transition(letter).vec_mul(v);
            w.push(letter);
            go(a, w, &next, max_len, f);
            w.pop();
        }
    }
    go(a, &mut Vec::new(), a.initial(), max_len, &mut f);
}

pub fn bool_value(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Solves a square system by Gauss-Jordan elimination; `None` if singular.
pub fn gauss_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    let t = &factor * &a[col][j];
                    a[r][j] -= t;
                }
                let t = &factor * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Probability that a run of `m` is accepted by the deterministic Büchi
/// automaton `d`: the probability of reaching a bottom SCC of the product that
/// contains a final automaton state. A missing transition rejects.
pub fn dba_probability(d: &Nba, m: &MarkovChain) -> Rational {
    assert!(d.is_deterministic());
    let Some(q0) = (0..d.state_count()).find(|&q| d.is_initial(q)) else {
        return Rational::zero();
    };
    let ns = m.state_count();
    let n = d.state_count() * ns;
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let (q, s) = (v / ns, v % ns);
            match d.successors(q, m.label(s)).first() {
                Some(&q2) => m.successors(s).iter().map(|&t| q2 * ns + t).collect(),
                None => Vec::new(),
            }
        })
        .collect();
    let reach: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            let mut seen = vec![false; n];
            let mut stack = vec![v];
            seen[v] = true;
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            seen
        })
        .collect();
    // v lies in a bottom SCC iff it has a successor and everything it reaches reaches it back.
    let bottom: Vec<bool> = (0..n)
        .map(|v| !succ[v].is_empty() && (0..n).all(|w| !reach[v][w] || reach[w][v]))
        .collect();
    let good: Vec<bool> = (0..n)
        .map(|v| bottom[v] && (0..n).any(|w| reach[v][w] && d.is_accepting(w / ns)))
        .collect();
    let can_reach_good: Vec<bool> = (0..n).map(|v| (0..n).any(|w| reach[v][w] && good[w])).collect();

    let mut a = vec![vec![Rational::zero(); n]; n];
    let mut b = vec![Rational::zero(); n];
    for v in 0..n {
        a[v][v] = Rational::one();
        if good[v] {
            b[v] = Rational::one();
        } else if can_reach_good[v] {
            let (q, s) = (v / ns, v % ns);
            let q2 = d.successors(q, m.label(s))[0];
            for &t in m.successors(s) {
                a[v][q2 * ns + t] -= m.probability(s, t);
            }
        }
    }
    let x = gauss_solve(a, b).expect("reachability system is regular");
    (0..ns).fold(Rational::zero(), |acc, s| acc + &m.initial()[s] * &x[q0 * ns + s])
}

/// Ten deterministic Büchi automata over `{a, b}` with their descriptions.
pub fn handcrafted_dbas() -> Vec<(&'static str, Nba)> {
    let s = Alphabet::from_chars("ab");
    let (a, b) = (0, 1);
    let dba = |n: usize, t: &[(usize, Letter, usize)], f: &[usize]| Nba::new(s.clone(), n, t, &[0], f).unwrap();
    vec![
        (
            "infinitely many a",
            dba(2, &[(0, a, 1), (0, b, 0), (1, a, 1), (1, b, 0)], &[1]),
        ),
        ("starts with a", dba(2, &[(0, a, 1), (1, a, 1), (1, b, 1)], &[1])),
        (
            "infinitely many ab",
            dba(
                3,
                &[(0, a, 1), (0, b, 0), (1, a, 1), (1, b, 2), (2, a, 1), (2, b, 0)],
                &[2],
            ),
        ),
        (
            "contains aa",
            dba(
                3,
                &[(0, a, 1), (0, b, 0), (1, a, 2), (1, b, 0), (2, a, 2), (2, b, 2)],
                &[2],
            ),
        ),
        ("never bb", dba(2, &[(0, a, 0), (0, b, 1), (1, a, 0)], &[0, 1])),
        (
            "infinitely many a and b",
            dba(
                3,
                &[(0, a, 1), (0, b, 0), (1, a, 1), (1, b, 2), (2, a, 1), (2, b, 0)],
                &[2],
            ),
        ),
        (
            "a at every even position",
            dba(2, &[(0, a, 1), (1, a, 0), (1, b, 0)], &[0, 1]),
        ),
        (
            "second letter b",
            dba(3, &[(0, a, 1), (0, b, 1), (1, b, 2), (2, a, 2), (2, b, 2)], &[2]),
        ),
        (
            "infinitely many aab",
            dba(
                4,
                &[
                    (0, a, 1),
                    (0, b, 0),
                    (1, a, 2),
                    (1, b, 0),
                    (2, a, 2),
                    (2, b, 3),
                    (3, a, 1),
                    (3, b, 0),
                ],
                &[3],
            ),
        ),
        (
            "b then later a",
            dba(
                3,
                &[(0, a, 0), (0, b, 1), (1, b, 1), (1, a, 2), (2, a, 2), (2, b, 2)],
                &[2],
            ),
        ),
    ]
}

/// All count vectors over `states` states with total size in `lo..=hi`.
pub fn count_vectors(states: usize, lo: u32, hi: u32) -> Vec<CountVector> {
    let slots = 2 * states;
    let mut out = Vec::new();
    let mut c = vec![0u32; slots];
    loop {
        let size: u32 = c.iter().sum();
        if (lo..=hi).contains(&size) {
            let entries: Vec<(usize, Bit, u32)> = c
                .iter()
                .enumerate()
                .filter(|(_, &n)| n > 0)
                .map(|(i, &n)| (i / 2, if i % 2 == 0 { Bit::Bot } else { Bit::Top }, n))
                .collect();
            out.push(CountVector::from_entries(states, &entries));
        }
        let mut i = 0;
        while i < slots && c[i] == hi {
            c[i] = 0;
            i += 1;
        }
        if i == slots {
            break;
        }
        c[i] += 1;
    }
    out
}

/// A concrete run prefix: its history is irrelevant to the successor
/// structure but makes distinct prefixes distinct.
#[derive(Clone, Debug)]
pub struct Prefix {
    pub history: Vec<usize>,
    pub state: usize,
    pub bit: Bit,
}

/// A concrete prefix set with count vector `r`. `variant` changes the
/// histories and the order of the prefixes.
pub fn witness(r: &CountVector, variant: usize) -> Vec<Prefix> {
    let mut out = Vec::new();
    for (q, b, n) in r.entries() {
        for i in 0..n as usize {
            out.push(Prefix {
                history: vec![variant, i, q],
                state: q,
                bit: b,
            });
        }
    }
    if variant % 2 == 1 {
        out.reverse();
    }
    out
}

/// Extends every prefix of `p` by a nonempty set of `letter`-successors in
/// every possible way and tallies the resulting count vectors. A successor
/// carries the `Top` bit iff some prefix of `p` still has `Bot` and the
/// extended prefix has `Top` or ends its step in a final state.
pub fn brute_force_successors(a: &Nba, p: &[Prefix], letter: Letter) -> HashMap<CountVector, u64> {
    let any_bot = p.iter().any(|x| x.bit == Bit::Bot);
    let choices: Vec<(Vec<usize>, Bit)> = p
        .iter()
        .map(|x| {
            let top = (a.is_accepting(x.state) || x.bit == Bit::Top) && any_bot;
            (
                a.successors(x.state, letter).to_vec(),
                if top { Bit::Top } else { Bit::Bot },
            )
        })
        .collect();
    let mut out = HashMap::new();
    let mut masks = vec![1u32; choices.len()];
    if choices.iter().any(|(t, _)| t.is_empty()) {
        return out;
    }
    loop {
        let mut entries: Vec<(usize, Bit, u32)> = Vec::new();
        for ((targets, bit), &mask) in choices.iter().zip(&masks) {
            for (i, &t) in targets.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    entries.push((t, *bit, 1));
                }
            }
        }
        let mut counts: HashMap<(usize, Bit), u32> = HashMap::new();
        for (t, b, c) in entries {
            *counts.entry((t, b)).or_default() += c;
        }
        let merged: Vec<(usize, Bit, u32)> = counts.into_iter().map(|((t, b), c)| (t, b, c)).collect();
        *out.entry(CountVector::from_entries(a.state_count(), &merged))
            .or_default() += 1;

        let mut i = 0;
        while i < masks.len() && masks[i] == (1u32 << choices[i].0.len()) - 1 {
            masks[i] = 1;
            i += 1;
        }
        if i == masks.len() {
            break;
        }
        masks[i] += 1;
    }
    out
}

pub fn half_half_first_letter_chain() -> MarkovChain {
    use imagebin_core::field::rat;
    use imagebin_core::Matrix;
    let p = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(1, 2)]]).unwrap();
    MarkovChain::identity_labeled(Alphabet::from_chars("ab"), p, vec![rat(1, 3), rat(2, 3)]).unwrap()
}

pub fn unary_chain() -> MarkovChain {
    use imagebin_core::Matrix;
    MarkovChain::new(Alphabet::from_chars("a"), Matrix::identity(1), vec![int(1)], vec![0]).unwrap()
}
