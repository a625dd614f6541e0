//! Büchi automata over infinite words, tested on ultimately periodic (lasso) words.

mod iba;
mod kdis;
mod lasso;

pub use iba::{iba_lasso_eval, Iba};
pub use kdis::{kdis, kdis_weight_w, num_succ, Bit, CountVector, Kdis};
pub use lasso::{Lasso, PathCount};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use lasso::LassoProduct;

/// Nondeterministic Büchi automaton `(Q, Σ, δ, Q0, F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nba {
    alphabet: Alphabet,
    succ: Vec<Vec<Vec<usize>>>,
    initial: Vec<bool>,
    accepting: Vec<bool>,
}

impl Nba {
    /// Builds an NBA from `(from, letter, to)` triples; states are 0-based.
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
        Ok(Nba {
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

    /// All transitions as `(from, letter, to)`, sorted.
    pub fn transitions(&self) -> Vec<(usize, Letter, usize)> {
        let mut out = Vec::new();
        for (p, row) in self.succ.iter().enumerate() {
            for (a, targets) in row.iter().enumerate() {
                out.extend(targets.iter().map(|&q| (p, a, q)));
            }
        }
        out
    }

    /// True when every state has at most one successor per letter and there is
    /// at most one initial state.
    pub fn is_deterministic(&self) -> bool {
        self.initial.iter().filter(|&&b| b).count() <= 1 && self.succ.iter().flatten().all(|t| t.len() <= 1)
    }

    fn product(&self, lasso: &Lasso) -> Result<LassoProduct<()>> {
        lasso.check_alphabet(&self.alphabet)?;
        Ok(LassoProduct::build(
            lasso,
            self.state_count(),
            |q| self.initial[q],
            |q| self.accepting[q],
            |q, a| self.succ[q][a].iter().map(|&t| (t, ())).collect(),
        ))
    }

    /// Whether the lasso word has a final path.
    pub fn lasso_accepts(&self, lasso: &Lasso) -> Result<bool> {
        Ok(self.product(lasso)?.has_final_path())
    }

    /// Exact number of final paths over the lasso word, or `Infinite`.
    pub fn lasso_final_paths(&self, lasso: &Lasso) -> Result<PathCount> {
        Ok(self.product(lasso)?.count_final_paths())
    }

    /// Final-path count capped at `cap`; `None` means more than `cap` (or infinitely many).
    pub fn lasso_count_final(&self, lasso: &Lasso, cap: u64) -> Result<Option<u64>> {
        Ok(match self.lasso_final_paths(lasso)? {
            PathCount::Finite(c) if c <= cap => Some(c),
            _ => None,
        })
    }

    /// Checks that every lasso with `|u| <= max_stem` and `1 <= |v| <= max_cycle`
    /// has at most `k` final paths. Returns the first offending lasso, if any.
    pub fn ambiguity_violation(&self, k: u64, max_stem: usize, max_cycle: usize) -> Option<(Lasso, PathCount)> {
        for lasso in Lasso::enumerate(&self.alphabet, max_stem, max_cycle) {
            let count = self.lasso_final_paths(&lasso).expect("enumerated over own alphabet");
            match count {
                PathCount::Finite(c) if c <= k => {}
                _ => return Some((lasso, count)),
            }
        }
        None
    }

    pub fn check_ambiguity_on_lassos(&self, k: u64, max_stem: usize, max_cycle: usize) -> bool {
        self.ambiguity_violation(k, max_stem, max_cycle).is_none()
    }
}
