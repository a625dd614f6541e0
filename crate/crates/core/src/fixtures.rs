//! Seeded pseudo-random automata and Markov chains for tests and benchmarks.
//! The same seed always yields the same object.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::buchi::Nba;
use crate::field::{int, Field, Rational};
use crate::ifa::{Dfa, Ifa};
use crate::matrix::Matrix;
use crate::mc::MarkovChain;

/// Alphabet of the first `n` lowercase letters.
pub fn letters(n: usize) -> Alphabet {
    assert!((1..=26).contains(&n));
    Alphabet::from_chars(&"abcdefghijklmnopqrstuvwxyz"[..n])
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn dfa_with(r: &mut ChaCha8Rng, states: usize, alphabet: &Alphabet) -> Dfa {
    let delta = (0..states)
        .map(|_| (0..alphabet.len()).map(|_| r.gen_range(0..states)).collect())
        .collect();
    let mut accepting: Vec<bool> = (0..states).map(|_| r.gen_bool(0.5)).collect();
    if !accepting.iter().any(|&b| b) {
        accepting[r.gen_range(0..states)] = true;
    }
    Dfa::new(alphabet.clone(), delta, 0, accepting).expect("well-formed")
}

/// Complete DFA with uniformly random transitions and at least one accepting state.
pub fn random_dfa(seed: u64, states: usize, alphabet_size: usize) -> Dfa {
    dfa_with(&mut rng(seed), states, &letters(alphabet_size))
}

/// Unimodular integer matrix `L·U` with small random off-diagonal entries.
pub fn random_unimodular(seed: u64, n: usize) -> Matrix<Rational> {
    let mut r = rng(seed);
    let mut l = Matrix::<Rational>::identity(n);
    let mut u = Matrix::<Rational>::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, int(r.gen_range(-2..=2)));
            u.set(j, i, int(r.gen_range(-2..=2)));
        }
    }
    l.mul(&u)
}

/// The forward conjugate of `a` by `f`: `M' = F M F⁻¹`, `α' = α F⁻¹`, `η' = F η`.
/// It has the same value on every word.
pub fn conjugate(a: &Ifa, f: &Matrix<Rational>) -> Ifa {
    let inv = f.inverse().expect("invertible base");
    let trans = a.transitions().iter().map(|m| f.mul(m).mul(&inv)).collect();
    let init = inv.vec_mul(a.initial());
    let fin = f.mul_vec(a.final_vector());
    Ifa::new(a.alphabet().clone(), trans, init, fin).expect("same dimensions")
}

/// A random DFA together with a conjugated IFA accepting the same language;
/// the IFA generally has weights outside `{0, 1}`.
pub fn conjugated_ifa(seed: u64, states: usize, alphabet_size: usize) -> (Dfa, Ifa) {
    let dfa = random_dfa(seed, states, alphabet_size);
    let base = random_unimodular(seed.wrapping_add(0x9e37_79b9), states);
    let ifa = conjugate(&dfa.to_weighted(), &base);
    (dfa, ifa)
}

/// Complete deterministic Büchi automaton with random transitions.
pub fn random_dba(seed: u64, states: usize, alphabet_size: usize) -> Nba {
    let mut r = rng(seed);
    let alphabet = letters(alphabet_size);
    dba_components(&mut r, &alphabet, &[states])
}

fn dba_components(r: &mut ChaCha8Rng, alphabet: &Alphabet, sizes: &[usize]) -> Nba {
    let mut trans = Vec::new();
    let mut init = Vec::new();
    let mut acc = Vec::new();
    let mut offset = 0;
    for &n in sizes {
        init.push(offset);
        let mut any = false;
        for q in 0..n {
            for a in 0..alphabet.len() {
                trans.push((offset + q, a, offset + r.gen_range(0..n)));
            }
            if r.gen_bool(0.4) {
                acc.push(offset + q);
                any = true;
            }
        }
        if !any {
            acc.push(offset + r.gen_range(0..n));
        }
        offset += n;
    }
    Nba::new(alphabet.clone(), offset, &trans, &init, &acc).expect("well-formed")
}

/// Disjoint union of `k` random complete DBAs with `states` states each. Every
/// word has at most one run per component, so the union is `k`-ambiguous.
pub fn dba_union(seed: u64, k: usize, states: usize, alphabet_size: usize) -> Nba {
    let mut r = rng(seed);
    dba_components(&mut r, &letters(alphabet_size), &vec![states; k])
}

/// NBA where each transition is present independently with probability `density`.
/// State 0 is initial; each state is final with probability 1/3.
pub fn random_nba(seed: u64, states: usize, alphabet_size: usize, density: f64) -> Nba {
    let mut r = rng(seed);
    let mut trans = Vec::new();
    for q in 0..states {
        for a in 0..alphabet_size {
            for t in 0..states {
                if r.gen_bool(density) {
                    trans.push((q, a, t));
                }
            }
        }
    }
    let mut init = vec![0];
    if states > 1 && r.gen_bool(0.3) {
        init.push(r.gen_range(1..states));
    }
    let acc: Vec<usize> = (0..states).filter(|_| r.gen_bool(1.0 / 3.0)).collect();
    Nba::new(letters(alphabet_size), states, &trans, &init, &acc).expect("well-formed")
}

fn random_distribution(r: &mut ChaCha8Rng, n: usize, density: f64) -> Vec<Rational> {
    let mut w: Vec<i64> = (0..n)
        .map(|_| if r.gen_bool(density) { r.gen_range(1..=4) } else { 0 })
        .collect();
    if w.iter().all(|&x| x == 0) {
        w[r.gen_range(0..n)] = 1;
    }
    let total: i64 = w.iter().sum();
    w.into_iter().map(|x| Rational::new(x.into(), total.into())).collect()
}

/// Markov chain with random rational rows. Every letter labels at least one
/// state when there are enough states.
pub fn random_markov_chain(seed: u64, states: usize, alphabet_size: usize) -> MarkovChain {
    let mut r = rng(seed);
    let alphabet = letters(alphabet_size);
    let rows: Vec<Vec<Rational>> = (0..states).map(|_| random_distribution(&mut r, states, 0.6)).collect();
    let init = random_distribution(&mut r, states, 0.7);
    let mut labels: Vec<usize> = (0..states).map(|s| s % alphabet_size).collect();
    labels.shuffle(&mut r);
    MarkovChain::new(alphabet, Matrix::from_rows(rows).expect("square"), init, labels).expect("stochastic")
}

/// Chain whose every state has probability `1/|S|` of moving to every state.
pub fn uniform_markov_chain(alphabet: &Alphabet) -> MarkovChain {
    let n = alphabet.len();
    let p = Rational::new(1.into(), (n as i64).into());
    let rows = vec![vec![p.clone(); n]; n];
    MarkovChain::identity_labeled(alphabet.clone(), Matrix::from_rows(rows).expect("square"), vec![p; n])
        .expect("stochastic")
}

/// Random rational weighted automaton with small integer weights.
pub fn random_weighted(seed: u64, states: usize, alphabet_size: usize) -> Ifa {
    let mut r = rng(seed);
    let alphabet = letters(alphabet_size);
    let entry = |r: &mut ChaCha8Rng| {
        if r.gen_bool(0.4) {
            int(r.gen_range(-2..=2))
        } else {
            Rational::zero()
        }
    };
    let trans = (0..alphabet_size)
        .map(|_| {
            let rows = (0..states)
                .map(|_| (0..states).map(|_| entry(&mut r)).collect())
                .collect();
            Matrix::from_rows(rows).expect("square")
        })
        .collect();
    let init = (0..states).map(|_| entry(&mut r)).collect();
    let fin = (0..states).map(|_| entry(&mut r)).collect();
    Ifa::new(alphabet, trans, init, fin).expect("well-formed")
}
