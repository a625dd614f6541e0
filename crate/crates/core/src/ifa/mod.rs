//! Image-binary finite automata: rational automata whose value on every word is 0 or 1.

mod dfa;
mod hankel;

pub use dfa::{dfa_to_ifa, nfa_to_ifa, Dfa, Nfa};
pub use hankel::{hankel_block, HankelBlock};

use std::collections::{HashMap, VecDeque};

use crate::alphabet::Word;
use crate::automaton::WeightedAutomaton;
use crate::equiv::{backward_basis, distinguishing_word};
use crate::error::{Error, Result};
use crate::field::{fmt_ratio, Field, Rational};
use crate::matrix::dot;

/// A rational weighted automaton intended to be image-binary.
pub type Ifa = WeightedAutomaton<Rational>;

/// A word on which `a` takes a value outside `{0, 1}`, or `None` if `a` is an IFA.
///
/// Decided by checking `L_A = L_A · L_A` with the equivalence procedure; the
/// distinguishing word of that check is the witness.
pub fn non_binary_witness(a: &Ifa) -> Result<Option<Word>> {
    let square = a.hadamard(a)?;
    distinguishing_word(a, &square)
}

pub fn is_image_binary(a: &Ifa) -> bool {
    matches!(non_binary_witness(a), Ok(None))
}

/// Returns `Err(NotImageBinary)` carrying the witness when `a` is not an IFA.
pub fn ensure_image_binary(a: &Ifa) -> Result<()> {
    match non_binary_witness(a)? {
        None => Ok(()),
        Some(w) => Err(Error::NotImageBinary {
            value: Some(fmt_ratio(&a.eval(&w))),
            witness: Some(a.alphabet().render(&w)),
        }),
    }
}

/// `1 - L_A`; one state more than `a`.
pub fn complement(a: &Ifa) -> Ifa {
    WeightedAutomaton::const_one(a.alphabet().clone())
        .add(&a.negate())
        .expect("same alphabet")
}

/// `L_A · L_B`.
pub fn intersect(a: &Ifa, b: &Ifa) -> Result<Ifa> {
    a.hadamard(b)
}

/// `L_A + L_B - L_A · L_B`, the inclusion-exclusion form of the union.
pub fn union(a: &Ifa, b: &Ifa) -> Result<Ifa> {
    a.add(b)?.add(&a.hadamard(b)?.negate())
}

/// Extracts an equivalent DFA with at most `2^n` states.
///
/// Each reachable forward vector `α·M(w)` is identified by its inner products
/// with a basis of the backward space `span{M(y)·η}`. Those products determine
/// the whole Hankel row of `w`, so distinct signatures are exactly the
/// Myhill-Nerode classes. States are numbered in breadth-first order.
pub fn ifa_to_dfa(a: &Ifa) -> Result<Dfa> {
    let n = a.state_count();
    let cap = if n >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        1usize << n
    };
    let back = backward_basis(a);
    let signature = |v: &[Rational]| -> Vec<Rational> { back.iter().map(|b| dot(v, b)).collect() };

    let mut ids: HashMap<Vec<Rational>, usize> = HashMap::new();
    let mut reps: Vec<(Word, Vec<Rational>)> = Vec::new();
    let mut queue = VecDeque::new();
    let start = a.initial().to_vec();
    ids.insert(signature(&start), 0);
    reps.push((Vec::new(), start));
    queue.push_back(0usize);
    let mut delta: Vec<Vec<usize>> = vec![Vec::new()];

    while let Some(i) = queue.pop_front() {
        let (word, vec) = reps[i].clone();
        let mut row = Vec::with_capacity(a.alphabet().len());
        for letter in 0..a.alphabet().len() {
            let next = a.transition(letter).vec_mul(&vec);
            let sig = signature(&next);
            let id = match ids.get(&sig) {
                Some(&id) => id,
                None => {
                    let id = reps.len();
                    if id >= cap {
                        return Err(Error::Invariant(format!(
                            "more than 2^{n} Myhill-Nerode classes; the automaton is not image-binary"
                        )));
                    }
                    ids.insert(sig, id);
                    let mut w2 = word.clone();
                    w2.push(letter);
                    reps.push((w2, next));
                    delta.push(Vec::new());
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        delta[i] = row;
    }

    let mut accepting = Vec::with_capacity(reps.len());
    for (w, v) in &reps {
        let value = dot(v, a.final_vector());
        if value.is_one() {
            accepting.push(true);
        } else if value.is_zero() {
            accepting.push(false);
        } else {
            return Err(Error::NotImageBinary {
                witness: Some(a.alphabet().render(w)),
                value: Some(fmt_ratio(&value)),
            });
        }
    }
    Dfa::new(a.alphabet().clone(), delta, 0, accepting)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::equiv::equivalent;
    use crate::field::int;
    use crate::samples::even_a_ifa;

    fn doubled(a: &Ifa) -> Ifa {
        let init = a.initial().iter().map(|x| x * int(2)).collect();
        WeightedAutomaton::new(
            a.alphabet().clone(),
            a.transitions().to_vec(),
            init,
            a.final_vector().to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn even_a_is_image_binary() {
        assert!(is_image_binary(&even_a_ifa()));
    }

    #[test]
    fn doubled_initial_vector_is_not_binary() {
        let a = doubled(&even_a_ifa());
        let w = non_binary_witness(&a).unwrap().unwrap();
        assert_eq!(a.alphabet().render(&w), "aa");
        assert_eq!(a.eval(&w), int(2));
        match ensure_image_binary(&a) {
            Err(Error::NotImageBinary { witness, value }) => {
                assert_eq!(witness.as_deref(), Some("aa"));
                assert_eq!(value.as_deref(), Some("2/1"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complement_flips_membership() {
        let c = complement(&even_a_ifa());
        assert_eq!(c.eval_word("a").unwrap(), int(1));
        assert_eq!(c.eval_word("aa").unwrap(), int(0));
        assert_eq!(c.state_count(), 4);
        assert!(equivalent(&complement(&c), &even_a_ifa()).unwrap());
    }

    #[test]
    fn boolean_identities() {
        let a = even_a_ifa();
        let all = WeightedAutomaton::const_one(a.alphabet().clone());
        assert!(equivalent(&intersect(&a, &all).unwrap(), &a).unwrap());
        let u = union(&a, &complement(&a)).unwrap();
        assert!(equivalent(&u, &all).unwrap());
        assert_eq!(u.state_count(), 3 + 4 + 12);
        assert!(is_image_binary(&u));
    }

    #[test]
    fn even_a_to_dfa() {
        let a = even_a_ifa();
        let d = ifa_to_dfa(&a).unwrap();
        assert!(d.state_count() <= 8);
        for w in a.alphabet().words_up_to(10) {
            assert_eq!(d.accepts(&w), a.eval(&w) == int(1));
        }
    }

    #[test]
    fn zero_automaton_to_dfa() {
        let z = Ifa::zero(Alphabet::from_chars("ab"));
        let d = ifa_to_dfa(&z).unwrap();
        assert_eq!(d.state_count(), 1);
        assert!(!d.accepts(&[0, 1]));
    }

    #[test]
    fn non_binary_to_dfa_fails() {
        assert!(matches!(
            ifa_to_dfa(&doubled(&even_a_ifa())),
            Err(Error::NotImageBinary { .. })
        ));
        // Counter automaton: value of a^n is n, infinitely many classes.
        let s = Alphabet::from_chars("a");
        let m = crate::matrix::Matrix::<Rational>::from_ints(&[&[1, 1], &[0, 1]]);
        let counter = WeightedAutomaton::new(s, vec![m], vec![int(1), int(0)], vec![int(0), int(1)]).unwrap();
        assert!(!is_image_binary(&counter));
        assert!(ifa_to_dfa(&counter).is_err());
    }
}
