//! Classical finite automata and their embedding as weighted automata.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::alphabet::{Alphabet, Letter};
use crate::automaton::WeightedAutomaton;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Deterministic automaton with a total transition function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<usize>>,
    initial: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// `delta[q][a]` is the successor of state `q` on letter `a`.
    pub fn new(alphabet: Alphabet, delta: Vec<Vec<usize>>, initial: usize, accepting: Vec<bool>) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::Invalid("a DFA needs at least one state".into()));
        }
        if accepting.len() != n {
            return Err(Error::Dimension(format!(
                "{} acceptance flags for {n} states",
                accepting.len()
            )));
        }
        if initial >= n {
            return Err(Error::Invalid(format!("initial state {initial} out of range")));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::Invalid(format!("transition function not total at state {q}")));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::Invalid(format!("state {q} moves to out-of-range state {t}")));
            }
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn step(&self, q: usize, a: Letter) -> usize {
        self.delta[q][a]
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn run(&self, w: &[Letter]) -> usize {
        w.iter().fold(self.initial, |q, &a| self.delta[q][a])
    }

    pub fn accepts(&self, w: &[Letter]) -> bool {
        self.accepting[self.run(w)]
    }

    /// Embeds the DFA as a 0/1-weighted automaton over any field.
    pub fn to_weighted<F: Field>(&self) -> WeightedAutomaton<F> {
        let n = self.state_count();
        let trans = (0..self.alphabet.len())
            .map(|a| {
                let mut m = Matrix::zeros(n, n);
                for q in 0..n {
                    m.set(q, self.delta[q][a], F::one());
                }
                m
            })
            .collect();
        let mut init = vec![F::zero(); n];
        init[self.initial] = F::one();
        let fin = self
            .accepting
            .iter()
            .map(|&acc| if acc { F::one() } else { F::zero() })
            .collect();
        WeightedAutomaton::new(self.alphabet.clone(), trans, init, fin).expect("consistent dimensions")
    }
}

/// Nondeterministic automaton; `succ[q][a]` lists the successors of `q` on `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    succ: Vec<Vec<Vec<usize>>>,
    initial: Vec<bool>,
    accepting: Vec<bool>,
}

impl Nfa {
    /// Builds an NFA from `(from, letter, to)` triples.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        transitions: &[(usize, Letter, usize)],
        initial: &[usize],
        accepting: &[usize],
    ) -> Result<Self> {
        let check = |q: usize| {
            if q >= state_count {
                Err(Error::Invalid(format!("state {q} out of range (have {state_count})")))
            } else {
                Ok(())
            }
        };
        let mut succ = vec![vec![Vec::new(); alphabet.len()]; state_count];
        for &(p, a, q) in transitions {
            check(p)?;
            check(q)?;
            if a >= alphabet.len() {
                return Err(Error::Invalid(format!("letter index {a} out of range")));
            }
            if !succ[p][a].contains(&q) {
                succ[p][a].push(q);
            }
        }
        for row in &mut succ {
            for s in row.iter_mut() {
                s.sort_unstable();
            }
        }
        let mut init = vec![false; state_count];
        for &q in initial {
            check(q)?;
            init[q] = true;
        }
        let mut acc = vec![false; state_count];
        for &q in accepting {
            check(q)?;
            acc[q] = true;
        }
        Ok(Nfa {
            alphabet,
            succ,
            initial: init,
            accepting: acc,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, q: usize, a: Letter) -> &[usize] {
        &self.succ[q][a]
    }

    pub fn is_initial(&self, q: usize) -> bool {
        self.initial[q]
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepts(&self, w: &[Letter]) -> bool {
        let mut current: BTreeSet<usize> = (0..self.state_count()).filter(|&q| self.initial[q]).collect();
        for &a in w {
            current = current.iter().flat_map(|&q| self.succ[q][a].iter().copied()).collect();
        }
        current.iter().any(|&q| self.accepting[q])
    }

    /// Subset construction over the reachable subsets (the empty set included
    /// when reachable, as a rejecting sink).
    pub fn determinize(&self) -> Dfa {
        let start: BTreeSet<usize> = (0..self.state_count()).filter(|&q| self.initial[q]).collect();
        let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut sets = vec![start.clone()];
        ids.insert(start, 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = Vec::with_capacity(self.alphabet.len());
            for a in 0..self.alphabet.len() {
                let next: BTreeSet<usize> = sets[i].iter().flat_map(|&q| self.succ[q][a].iter().copied()).collect();
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = sets.len();
                        ids.insert(next.clone(), id);
                        sets.push(next);
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            if delta.len() <= i {
                delta.resize(i + 1, Vec::new());
            }
            delta[i] = row;
        }
        let accepting = sets.iter().map(|s| s.iter().any(|&q| self.accepting[q])).collect();
        Dfa::new(self.alphabet.clone(), delta, 0, accepting).expect("subset construction is total")
    }
}

/// Embeds a DFA as a 0/1 rational automaton.
pub fn dfa_to_ifa<F: Field>(d: &Dfa) -> WeightedAutomaton<F> {
    d.to_weighted()
}

/// Subset construction followed by the DFA embedding.
pub fn nfa_to_ifa<F: Field>(n: &Nfa) -> WeightedAutomaton<F> {
    n.determinize().to_weighted()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};

    fn contains_a() -> Nfa {
        let s = Alphabet::from_chars("ab");
        Nfa::new(
            s,
            2,
            &[(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 1)],
            &[0],
            &[1],
        )
        .unwrap()
    }

    #[test]
    fn nfa_for_contains_a() {
        let n = contains_a();
        let ifa = nfa_to_ifa::<Rational>(&n);
        for w in n.alphabet().words_up_to(8) {
            let expected = if w.contains(&0) { int(1) } else { int(0) };
            assert_eq!(ifa.eval(&w), expected, "word {w:?}");
        }
        assert_eq!(ifa, dfa_to_ifa(&n.determinize()));
    }

    #[test]
    fn dfa_validation() {
        let s = Alphabet::from_chars("a");
        assert!(Dfa::new(s.clone(), vec![vec![1]], 0, vec![true]).is_err());
        assert!(Dfa::new(s.clone(), vec![vec![0]], 1, vec![true]).is_err());
        assert!(Dfa::new(s, vec![vec![0]], 0, vec![true]).is_ok());
        assert!(Nfa::new(Alphabet::from_chars("a"), 1, &[(0, 0, 3)], &[0], &[]).is_err());
    }

    #[test]
    fn empty_subset_is_a_sink() {
        let s = Alphabet::from_chars("ab");
        let n = Nfa::new(s, 1, &[(0, 0, 0)], &[0], &[0]).unwrap();
        let d = n.determinize();
        assert_eq!(d.state_count(), 2);
        assert!(!d.accepts(&[1, 0]));
        assert!(d.accepts(&[0, 0]));
    }
}
