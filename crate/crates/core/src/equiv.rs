//! Equivalence checking and minimization by exploring forward/backward spaces.

use std::collections::VecDeque;

use crate::alphabet::Word;
use crate::automaton::WeightedAutomaton;
use crate::error::Result;
use crate::field::Field;
use crate::matrix::{dot, Matrix, SpanBasis};

/// Breadth-first basis of the forward space `span{α·M(w)}`; words are explored
/// in length-lexicographic order, and each basis vector comes with the word
/// that produced it.
fn forward_basis<F: Field>(a: &WeightedAutomaton<F>) -> (SpanBasis<F>, Vec<Word>) {
    let mut basis = SpanBasis::new(a.state_count());
    let mut words = Vec::new();
    let mut queue = VecDeque::new();
    if basis.insert(a.initial().to_vec()).is_some() {
        words.push(Vec::new());
        queue.push_back((Vec::new(), a.initial().to_vec()));
    }
    while let Some((w, v)) = queue.pop_front() {
        for letter in 0..a.alphabet().len() {
            let next = a.transition(letter).vec_mul(&v);
            if basis.insert(next.clone()).is_some() {
                let mut w2 = w.clone();
                w2.push(letter);
                words.push(w2.clone());
                queue.push_back((w2, next));
            }
        }
    }
    (basis, words)
}

/// A shortest word on which `a` and `b` differ, or `None` when they are equivalent.
///
/// Explores the forward space of the difference automaton breadth-first; the
/// first basis vector with a nonzero value is a shortest counterexample, and its
/// length is below `n_a + n_b`.
pub fn distinguishing_word<F: Field>(a: &WeightedAutomaton<F>, b: &WeightedAutomaton<F>) -> Result<Option<Word>> {
    let diff = a.add(&b.negate())?;
    let fin = diff.final_vector();
    let mut basis = SpanBasis::new(diff.state_count());
    let mut queue = VecDeque::new();
    let init = diff.initial().to_vec();
    if basis.insert(init.clone()).is_some() {
        if !dot(&init, fin).is_zero() {
            return Ok(Some(Vec::new()));
        }
        queue.push_back((Vec::new(), init));
    }
    while let Some((w, v)) = queue.pop_front() {
        for letter in 0..diff.alphabet().len() {
            let next = diff.transition(letter).vec_mul(&v);
            if basis.insert(next.clone()).is_some() {
                let mut w2 = w.clone();
                w2.push(letter);
                if !dot(&next, fin).is_zero() {
                    return Ok(Some(w2));
                }
                queue.push_back((w2, next));
            }
        }
    }
    Ok(None)
}

pub fn equivalent<F: Field>(a: &WeightedAutomaton<F>, b: &WeightedAutomaton<F>) -> Result<bool> {
    Ok(distinguishing_word(a, b)?.is_none())
}

/// Restricts `a` to its forward space, in the basis found by breadth-first exploration.
fn forward_reduce<F: Field>(a: &WeightedAutomaton<F>) -> WeightedAutomaton<F> {
    let (basis, _) = forward_basis(a);
    let k = basis.len();
    if k == 0 {
        return WeightedAutomaton::zero(a.alphabet().clone());
    }
    let trans = (0..a.alphabet().len())
        .map(|letter| {
            let rows = basis
                .vectors()
                .iter()
                .map(|f| {
                    basis
                        .coordinates(&a.transition(letter).vec_mul(f))
                        .expect("forward space is closed under transitions")
                })
                .collect();
            Matrix::from_rows(rows).expect("square")
        })
        .collect();
    let init = basis
        .coordinates(a.initial())
        .expect("initial vector spans the first basis element");
    let fin = basis.vectors().iter().map(|f| dot(f, a.final_vector())).collect();
    WeightedAutomaton::new(a.alphabet().clone(), trans, init, fin).expect("consistent dimensions")
}

/// The transposed automaton: matrices transposed, initial and final swapped.
/// Its value on `w` equals the original value on the reversal of `w`.
pub fn transpose<F: Field>(a: &WeightedAutomaton<F>) -> WeightedAutomaton<F> {
    WeightedAutomaton::new(
        a.alphabet().clone(),
        a.transitions().iter().map(Matrix::transpose).collect(),
        a.final_vector().to_vec(),
        a.initial().to_vec(),
    )
    .expect("consistent dimensions")
}

/// Minimal equivalent automaton: forward reduction followed by backward
/// reduction. The state count equals the Hankel rank of the language, except
/// that the constant-zero language is represented by the one-state zero automaton.
pub fn minimize<F: Field>(a: &WeightedAutomaton<F>) -> WeightedAutomaton<F> {
    let fwd = forward_reduce(a);
    if is_zero_automaton(&fwd) {
        return fwd;
    }
    let back = forward_reduce(&transpose(&fwd));
    if is_zero_automaton(&back) {
        return back;
    }
    transpose(&back)
}

fn is_zero_automaton<F: Field>(a: &WeightedAutomaton<F>) -> bool {
    a.state_count() == 1 && a.initial()[0].is_zero()
}

/// Dimension of the forward space `span{α·M(w)}`.
pub fn forward_dimension<F: Field>(a: &WeightedAutomaton<F>) -> usize {
    forward_basis(a).0.len()
}

/// Basis of the backward space `span{M(w)·η}`, built breadth-first starting from `η`.
pub fn backward_basis<F: Field>(a: &WeightedAutomaton<F>) -> Vec<Vec<F>> {
    forward_basis(&transpose(a)).0.vectors().to_vec()
}
