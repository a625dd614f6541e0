//! Small hand-written automata used throughout the tests, benches and docs.

use crate::alphabet::{Alphabet, Letter};
use crate::automaton::WeightedAutomaton;
use crate::buchi::Nba;
use crate::field::{int, Field, Rational};
use crate::matrix::Matrix;

/// Three-state IFA over `{a, b}` accepting the words that begin with an even,
/// positive number of `a`s followed by either nothing or `b` and anything.
pub fn even_a_ifa() -> WeightedAutomaton<Rational> {
    WeightedAutomaton::new(
        Alphabet::from_chars("ab"),
        vec![
            Matrix::from_ints(&[&[-1, 1, 0], &[0, 0, 1], &[0, 0, 1]]),
            Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
        ],
        vec![int(1), int(0), int(0)],
        vec![int(0), int(0), int(1)],
    )
    .expect("well-formed")
}

/// Unambiguous automaton for the same language as [`even_a_ifa`].
pub fn even_a_ufa() -> WeightedAutomaton<Rational> {
    WeightedAutomaton::new(
        Alphabet::from_chars("ab"),
        vec![
            Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 1], &[0, 0, 0]]),
            Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[1, 1, 1]]),
        ],
        vec![int(1), int(0), int(0)],
        vec![int(0), int(0), int(1)],
    )
    .expect("well-formed")
}

/// Base matrix conjugating [`even_a_ufa`] into [`even_a_ifa`].
pub fn even_a_base() -> Matrix<Rational> {
    Matrix::from_ints(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1]])
}

/// Membership predicate of the [`even_a_ifa`] language.
pub fn even_a_language(w: &[Letter]) -> bool {
    let lead = w.iter().take_while(|&&a| a == 0).count();
    lead > 0 && lead % 2 == 0 && (lead == w.len() || w[lead] == 1)
}

/// Automaton with value 1 on `w` and 0 on every other word.
pub fn word_indicator<F: Field>(alphabet: &Alphabet, w: &[Letter]) -> WeightedAutomaton<F> {
    let n = w.len() + 1;
    let mut trans = vec![Matrix::zeros(n, n); alphabet.len()];
    for (i, &a) in w.iter().enumerate() {
        trans[a].set(i, i + 1, F::one());
    }
    let mut init = vec![F::zero(); n];
    init[0] = F::one();
    let mut fin = vec![F::zero(); n];
    fin[n - 1] = F::one();
    WeightedAutomaton::new(alphabet.clone(), trans, init, fin).expect("well-formed")
}

/// Unary five-state NBA with four final paths on its only word: `q1`, `q2`
/// initial, both moving to `q3`, which branches to the final self-looping
/// states `q4` and `q5`.
pub fn branching_nba() -> Nba {
    Nba::new(
        Alphabet::from_chars("a"),
        5,
        &[(0, 0, 2), (1, 0, 2), (2, 0, 3), (2, 0, 4), (3, 0, 3), (4, 0, 4)],
        &[0, 1],
        &[3, 4],
    )
    .expect("well-formed")
}

/// Deterministic Büchi automaton over `{a, b}` for "infinitely many `a`".
pub fn infinitely_many_a() -> Nba {
    Nba::new(
        Alphabet::from_chars("ab"),
        2,
        &[(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)],
        &[0],
        &[1],
    )
    .expect("well-formed")
}

/// Deterministic Büchi automaton over `{a, b}` for the words starting with `a`.
pub fn starts_with_a() -> Nba {
    Nba::new(
        Alphabet::from_chars("ab"),
        2,
        &[(0, 0, 1), (1, 0, 1), (1, 1, 1)],
        &[0],
        &[1],
    )
    .expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_a_predicate() {
        let s = Alphabet::from_chars("ab");
        let yes = ["aa", "aab", "aaaab", "aabab"];
        let no = ["", "a", "aaa", "b", "ab", "aaab"];
        for w in yes {
            assert!(even_a_language(&s.parse_word(w).unwrap()), "{w}");
        }
        for w in no {
            assert!(!even_a_language(&s.parse_word(w).unwrap()), "{w}");
        }
    }

    #[test]
    fn indicator() {
        let s = Alphabet::from_chars("ab");
        let w = s.parse_word("ab").unwrap();
        let a: WeightedAutomaton<Rational> = word_indicator(&s, &w);
        for x in s.words_up_to(4) {
            assert_eq!(a.eval(&x), if x == w { int(1) } else { int(0) });
        }
    }
}
