//! Weighted automata over an exact field and their algebraic combinators.

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{dot, Matrix};

/// A weighted automaton `(Q, Σ, M, α, η)`: one `n×n` transition matrix per
/// letter, an initial row vector and a final column vector. The value of a
/// word `w` is `α · M(w) · η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedAutomaton<F: Field> {
    alphabet: Alphabet,
    trans: Vec<Matrix<F>>,
    init: Vec<F>,
    fin: Vec<F>,
}

impl<F: Field> WeightedAutomaton<F> {
    pub fn new(alphabet: Alphabet, trans: Vec<Matrix<F>>, init: Vec<F>, fin: Vec<F>) -> Result<Self> {
        let n = init.len();
        if fin.len() != n {
            return Err(Error::Dimension(format!(
                "initial vector has {n} entries, final vector {}",
                fin.len()
            )));
        }
        if trans.len() != alphabet.len() {
            return Err(Error::Dimension(format!(
                "{} transition matrices for {} letters",
                trans.len(),
                alphabet.len()
            )));
        }
        for (a, m) in trans.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!(
                    "matrix of letter `{}` is {}x{}, expected {n}x{n}",
                    alphabet.name(a),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(WeightedAutomaton {
            alphabet,
            trans,
            init,
            fin,
        })
    }

    /// The canonical automaton of the constant-zero language: one state, all weights zero.
    pub fn zero(alphabet: Alphabet) -> Self {
        let trans = vec![Matrix::zeros(1, 1); alphabet.len()];
        WeightedAutomaton {
            alphabet,
            trans,
            init: vec![F::zero()],
            fin: vec![F::zero()],
        }
    }

    /// One state, every weight 1: the constant-one language.
    pub fn const_one(alphabet: Alphabet) -> Self {
        let trans = vec![Matrix::identity(1); alphabet.len()];
        WeightedAutomaton {
            alphabet,
            trans,
            init: vec![F::one()],
            fin: vec![F::one()],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.init.len()
    }

    pub fn transition(&self, a: Letter) -> &Matrix<F> {
        &self.trans[a]
    }

    pub fn transitions(&self) -> &[Matrix<F>] {
        &self.trans
    }

    pub fn initial(&self) -> &[F] {
        &self.init
    }

    pub fn final_vector(&self) -> &[F] {
        &self.fin
    }

    /// `α · M(w)`.
    pub fn forward(&self, w: &[Letter]) -> Vec<F> {
        w.iter().fold(self.init.clone(), |v, &a| self.trans[a].vec_mul(&v))
    }

    /// `M(w) · η`.
    pub fn backward(&self, w: &[Letter]) -> Vec<F> {
        w.iter().rev().fold(self.fin.clone(), |v, &a| self.trans[a].mul_vec(&v))
    }

    /// Value of a word given as letter indices.
    pub fn eval(&self, w: &[Letter]) -> F {
        dot(&self.forward(w), &self.fin)
    }

    /// Value of a word given by letter names; unknown letters are rejected.
    pub fn eval_word(&self, word: &str) -> Result<F> {
        let w = self.alphabet.parse_word(word)?;
        Ok(self.eval(&w))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "[{}] vs [{}]",
                self.alphabet, other.alphabet
            )));
        }
        Ok(())
    }

    /// Disjoint-union block construction: `L = L_A + L_B`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let (n, m) = (self.state_count(), other.state_count());
        let trans = self
            .trans
            .iter()
            .zip(&other.trans)
            .map(|(a, b)| {
                let mut out = Matrix::zeros(n + m, n + m);
                for (i, j, v) in a.nonzeros() {
                    out.set(i, j, v.clone());
                }
                for (i, j, v) in b.nonzeros() {
                    out.set(n + i, n + j, v.clone());
                }
                out
            })
            .collect();
        let init = self.init.iter().chain(&other.init).cloned().collect();
        let fin = self.fin.iter().chain(&other.fin).cloned().collect();
        Ok(WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            trans,
            init,
            fin,
        })
    }

    /// `L = -L_A`, by negating the initial vector.
    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        out.init = self.init.iter().map(F::neg).collect();
        out
    }

    /// Kronecker-product construction: `L = L_A · L_B` pointwise.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let trans = self.trans.iter().zip(&other.trans).map(|(a, b)| a.kron(b)).collect();
        let init = Matrix::row_vector(self.init.clone()).kron(&Matrix::row_vector(other.init.clone()));
        let fin = Matrix::column_vector(self.fin.clone()).kron(&Matrix::column_vector(other.fin.clone()));
        Ok(WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            trans,
            init: init.entries().to_vec(),
            fin: fin.entries().to_vec(),
        })
    }

    /// Reinterprets every weight in another field.
    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<WeightedAutomaton<G>> {
        let trans = self.trans.iter().map(|m| m.try_map(&f)).collect::<Result<_>>()?;
        let init = self.init.iter().map(&f).collect::<Result<_>>()?;
        let fin = self.fin.iter().map(&f).collect::<Result<_>>()?;
        Ok(WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            trans,
            init,
            fin,
        })
    }
}

/// Checks that `target` is a forward conjugate of `source` with base `base`:
/// `base · M_source(a) = M_target(a) · base` for every letter,
/// `α_source = α_target · base` and `η_target = base · η_source`.
pub fn check_forward_conjugate<F: Field>(
    source: &WeightedAutomaton<F>,
    target: &WeightedAutomaton<F>,
    base: &Matrix<F>,
) -> Result<bool> {
    source.check_compatible(target)?;
    let (n, m) = (source.state_count(), target.state_count());
    if base.rows() != m || base.cols() != n {
        return Err(Error::Dimension(format!(
            "base is {}x{}, expected {m}x{n}",
            base.rows(),
            base.cols()
        )));
    }
    let commutes = source
        .transitions()
        .iter()
        .zip(target.transitions())
        .all(|(ms, mt)| base.mul(ms) == mt.mul(base));
    Ok(commutes
        && base.vec_mul(target.initial()) == source.initial()
        && base.mul_vec(source.final_vector()) == target.final_vector())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};
    use crate::samples::{even_a_base, even_a_ifa, even_a_ufa};

    #[test]
    fn even_a_values() {
        let a = even_a_ifa();
        assert_eq!(a.eval_word("aa").unwrap(), int(1));
        assert_eq!(a.eval_word("").unwrap(), int(0));
        assert_eq!(a.eval_word("aab").unwrap(), int(1));
        assert_eq!(a.eval_word("aaa").unwrap(), int(0));
        assert_eq!(a.eval_word("ac"), Err(Error::UnknownLetter("c".into())));
    }

    #[test]
    fn aab_by_explicit_products() {
        // Oracle: multiply the matrices of the IFA by hand-built literals.
        let ma = Matrix::<Rational>::from_ints(&[&[-1, 1, 0], &[0, 0, 1], &[0, 0, 1]]);
        let mb = Matrix::<Rational>::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        let alpha = Matrix::<Rational>::from_ints(&[&[1, 0, 0]]);
        let eta = Matrix::<Rational>::from_ints(&[&[0], &[0], &[1]]);
        let v = alpha.mul(&ma).mul(&ma).mul(&mb).mul(&eta);
        assert_eq!(v.get(0, 0), &int(1));
        assert_eq!(even_a_ifa().eval_word("aab").unwrap(), *v.get(0, 0));
    }

    #[test]
    fn conjugacy_example() {
        let (ufa, ifa, base) = (even_a_ufa(), even_a_ifa(), even_a_base());
        assert!(check_forward_conjugate(&ufa, &ifa, &base).unwrap());
        assert!(check_forward_conjugate(&ifa, &ifa, &Matrix::identity(3)).unwrap());
        let mut bad = base.clone();
        bad.set(2, 0, int(2));
        assert!(!check_forward_conjugate(&ufa, &ifa, &bad).unwrap());
        let wrong_shape = Matrix::<Rational>::identity(2);
        assert!(matches!(
            check_forward_conjugate(&ufa, &ifa, &wrong_shape),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn combinators() {
        let a = even_a_ifa();
        let s = a.alphabet().clone();
        let diff = a.add(&a.negate()).unwrap();
        let one = WeightedAutomaton::<Rational>::const_one(s.clone());
        for w in s.words_up_to(5) {
            assert_eq!(diff.eval(&w), int(0));
            assert_eq!(one.eval(&w), int(1));
        }
        let other = WeightedAutomaton::<Rational>::const_one(Alphabet::from_chars("xy"));
        assert!(matches!(a.add(&other), Err(Error::AlphabetMismatch(_))));
        assert_eq!(a.hadamard(&a).unwrap().state_count(), 9);
    }

    #[test]
    fn empty_alphabet_language_is_alpha_eta() {
        let a = WeightedAutomaton::<Rational>::new(Alphabet::default(), vec![], vec![int(2)], vec![int(3)]).unwrap();
        assert_eq!(a.eval(&[]), int(6));
    }
}
