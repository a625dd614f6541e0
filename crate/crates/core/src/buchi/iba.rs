use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::graph::{can_reach_good_cycle, reachable, sccs};
use crate::matrix::Matrix;

use super::lasso::{Lasso, LassoProduct, PathCount};
use super::Nba;

/// Weighted Büchi automaton `(Q, Σ, M, α, F)` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iba {
    alphabet: Alphabet,
    trans: Vec<Matrix<Rational>>,
    init: Vec<Rational>,
    accepting: Vec<bool>,
}

impl Iba {
    pub fn new(
        alphabet: Alphabet,
        trans: Vec<Matrix<Rational>>,
        init: Vec<Rational>,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = init.len();
        if accepting.len() != n {
            return Err(Error::Dimension(format!(
                "{} acceptance flags for {n} states",
                accepting.len()
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
        Ok(Iba {
            alphabet,
            trans,
            init,
            accepting,
        })
    }

    /// One non-accepting state with zero initial weight: the empty language.
    pub fn empty(alphabet: Alphabet) -> Self {
        let trans = vec![Matrix::zeros(1, 1); alphabet.len()];
        Iba {
            alphabet,
            trans,
            init: vec![Rational::zero()],
            accepting: vec![false],
        }
    }

    /// One accepting state looping on every letter: the language `Σ^ω`.
    pub fn accept_all(alphabet: Alphabet) -> Self {
        let trans = vec![Matrix::identity(1); alphabet.len()];
        Iba {
            alphabet,
            trans,
            init: vec![Rational::one()],
            accepting: vec![true],
        }
    }

    /// The 0/1 embedding of an NBA. It is an IBA exactly when the NBA is unambiguous.
    pub fn from_nba(a: &Nba) -> Self {
        let n = a.state_count();
        let trans = (0..a.alphabet().len())
            .map(|l| {
                let mut m = Matrix::zeros(n, n);
                for q in 0..n {
                    for &t in a.successors(q, l) {
                        m.set(q, t, Rational::one());
                    }
                }
                m
            })
            .collect();
        let init = (0..n)
            .map(|q| {
                if a.is_initial(q) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let accepting = (0..n).map(|q| a.is_accepting(q)).collect();
        Iba {
            alphabet: a.alphabet().clone(),
            trans,
            init,
            accepting,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.init.len()
    }

    pub fn transition(&self, a: Letter) -> &Matrix<Rational> {
        &self.trans[a]
    }

    pub fn transitions(&self) -> &[Matrix<Rational>] {
        &self.trans
    }

    pub fn initial(&self) -> &[Rational] {
        &self.init
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    /// Graph of nonzero edges over all letters.
    pub fn edge_graph(&self) -> Vec<Vec<usize>> {
        let n = self.state_count();
        let mut adj = vec![Vec::new(); n];
        for m in &self.trans {
            for (i, j, _) in m.nonzeros() {
                if !adj[i].contains(&j) {
                    adj[i].push(j);
                }
            }
        }
        for s in &mut adj {
            s.sort_unstable();
        }
        adj
    }

    /// Every nonzero edge lying inside a strongly connected component of the
    /// nonzero-edge graph (self-loops included) has weight exactly 1.
    pub fn is_ultimately_stable(&self) -> bool {
        self.unstable_edge().is_none()
    }

    /// First edge `(from, letter, to)` violating ultimate stability.
    pub fn unstable_edge(&self) -> Option<(usize, Letter, usize)> {
        let adj = self.edge_graph();
        let comps = sccs(&adj);
        for (a, m) in self.trans.iter().enumerate() {
            for (i, j, v) in m.nonzeros() {
                if comps.comp[i] == comps.comp[j] && !v.is_one() {
                    return Some((i, a, j));
                }
            }
        }
        None
    }

    /// Restricts to states reachable from the support of `α` that can reach a
    /// cycle through an accepting state. Returns the kept states (in the
    /// original numbering) alongside the trimmed automaton; an automaton with
    /// nothing left becomes [`Iba::empty`].
    pub fn trim(&self) -> (Iba, Vec<usize>) {
        let adj = self.edge_graph();
        let reach = reachable(&adj, (0..self.state_count()).filter(|&q| !self.init[q].is_zero()));
        let live = can_reach_good_cycle(&adj, |q| self.accepting[q]);
        let keep: Vec<usize> = (0..self.state_count()).filter(|&q| reach[q] && live[q]).collect();
        if keep.is_empty() {
            return (Iba::empty(self.alphabet.clone()), keep);
        }
        (self.restrict(&keep), keep)
    }

    /// Sub-automaton on the given states, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Iba {
        Iba {
            alphabet: self.alphabet.clone(),
            trans: self.trans.iter().map(|m| m.select(keep, keep)).collect(),
            init: keep.iter().map(|&q| self.init[q].clone()).collect(),
            accepting: keep.iter().map(|&q| self.accepting[q]).collect(),
        }
    }

    fn product(&self, lasso: &Lasso) -> Result<LassoProduct<Rational>> {
        lasso.check_alphabet(&self.alphabet)?;
        Ok(LassoProduct::build(
            lasso,
            self.state_count(),
            |q| !self.init[q].is_zero(),
            |q| self.accepting[q],
            |q, a| {
                let row = self.trans[a].row(q);
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(t, v)| (t, v.clone()))
                    .collect()
            },
        ))
    }

    /// Number of final paths over the lasso word.
    pub fn lasso_final_paths(&self, lasso: &Lasso) -> Result<PathCount> {
        Ok(self.product(lasso)?.count_final_paths())
    }
}

/// Sum of the weights of the final paths over `u · v^ω`.
///
/// A final path eventually cycles through the lasso product forever; when
/// there are finitely many final paths, every useful cycle is a simple cycle
/// with no exit, so the weight of a path is the product of its edge weights up
/// to that cycle, times `α` of its first state.
pub fn iba_lasso_eval(a: &Iba, lasso: &Lasso) -> Result<Rational> {
    let prod = a.product(lasso)?;
    let an = prod.analyze();
    if an.infinite {
        return Err(Error::Semantic(
            "not an IBA on this word: infinitely many final paths".into(),
        ));
    }
    let mut value = vec![Rational::zero(); an.useful.len()];
    for &v in &an.order {
        if an.on_cycle[v] {
            for (w, weight) in prod.successors(v) {
                if an.on_cycle[*w] && !weight.is_one() {
                    return Err(Error::Semantic(format!(
                        "not an IBA on this word: cycle edge from state {} has weight {weight}",
                        prod.state_of(v) + 1
                    )));
                }
            }
            value[v] = Rational::one();
        } else {
            let mut acc = Rational::zero();
            for (w, weight) in prod.successors(v) {
                if an.useful[*w] {
                    acc += weight * &value[*w];
                }
            }
            value[v] = acc;
        }
    }
    let mut total = Rational::zero();
    for &v in prod.initial_nodes() {
        if an.useful[v] {
            total += &a.init[prod.state_of(v)] * &value[v];
        }
    }
    Ok(total)
}
