//! Probability that a Markov chain run is accepted by an image-binary Büchi automaton.

mod product;
mod solve;
mod spectral;

pub use product::{build_product, Classification, CutVector, Fiber, FiberStep, ProductSystem, SccKind};
pub use solve::{model_check, solve_values, ModelCheck};
pub use spectral::{spectral_radius_bounds, SpectralBounds};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::field::{fmt_ratio, Field, Rational};
use crate::matrix::Matrix;
use num_traits::Signed;

/// Finite Markov chain whose states emit letters: state `s` emits `λ(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovChain {
    alphabet: Alphabet,
    p: Matrix<Rational>,
    init: Vec<Rational>,
    labels: Vec<Letter>,
    succ: Vec<Vec<usize>>,
}

fn check_distribution(v: &[Rational], what: &str) -> Result<()> {
    if let Some(x) = v.iter().find(|x| x.is_negative()) {
        return Err(Error::Invalid(format!("{what} has negative entry {}", fmt_ratio(x))));
    }
    let total = v.iter().fold(Rational::zero(), |acc, x| acc + x);
    if !total.is_one() {
        return Err(Error::Invalid(format!("{what} sums to {}, not 1", fmt_ratio(&total))));
    }
    Ok(())
}

impl MarkovChain {
    pub fn new(alphabet: Alphabet, p: Matrix<Rational>, init: Vec<Rational>, labels: Vec<Letter>) -> Result<Self> {
        let n = p.rows();
        if n == 0 {
            return Err(Error::Invalid("Markov chain needs at least one state".into()));
        }
        if !p.is_square() {
            return Err(Error::Dimension(format!(
                "transition matrix is {}x{}",
                p.rows(),
                p.cols()
            )));
        }
        if init.len() != n {
            return Err(Error::Dimension(format!(
                "initial distribution has {} entries for {n} states",
                init.len()
            )));
        }
        if labels.len() != n {
            return Err(Error::Dimension(format!("{} labels for {n} states", labels.len())));
        }
        if let Some(&a) = labels.iter().find(|&&a| a >= alphabet.len()) {
            return Err(Error::Invalid(format!("label index {a} outside the alphabet")));
        }
        for s in 0..n {
            check_distribution(p.row(s), &format!("row {} of the transition matrix", s + 1))?;
        }
        check_distribution(&init, "initial distribution")?;
        let succ = (0..n)
            .map(|s| (0..n).filter(|&t| !p.get(s, t).is_zero()).collect())
            .collect();
        Ok(MarkovChain {
            alphabet,
            p,
            init,
            labels,
            succ,
        })
    }

    /// State `i` emits the `i`-th letter; the alphabet must have one letter per state.
    pub fn identity_labeled(alphabet: Alphabet, p: Matrix<Rational>, init: Vec<Rational>) -> Result<Self> {
        if alphabet.len() != p.rows() {
            return Err(Error::Dimension(format!(
                "identity labeling needs {} letters, alphabet has {}",
                p.rows(),
                alphabet.len()
            )));
        }
        let labels = (0..p.rows()).collect();
        Self::new(alphabet, p, init, labels)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn transition_matrix(&self) -> &Matrix<Rational> {
        &self.p
    }

    pub fn probability(&self, s: usize, t: usize) -> &Rational {
        self.p.get(s, t)
    }

    pub fn initial(&self) -> &[Rational] {
        &self.init
    }

    pub fn labels(&self) -> &[Letter] {
        &self.labels
    }

    pub fn label(&self, s: usize) -> Letter {
        self.labels[s]
    }

    /// States reachable in one step with positive probability, ascending.
    pub fn successors(&self, s: usize) -> &[usize] {
        &self.succ[s]
    }
}
