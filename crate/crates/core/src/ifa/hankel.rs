use crate::alphabet::Word;
use crate::automaton::WeightedAutomaton;
use crate::error::{Error, Result};
use crate::field::{rational_to_gf2, Field, FieldKind, Rational};
use crate::matrix::Matrix;

/// Finite block of the Hankel matrix `H[x, y] = L(xy)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelBlock<F: Field> {
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    pub values: Matrix<F>,
}

/// Rows indexed by all words of length at most `row_len`, columns by all words
/// of length at most `col_len`, both in length-lexicographic order.
pub fn hankel_block<F: Field>(a: &WeightedAutomaton<F>, row_len: usize, col_len: usize) -> HankelBlock<F> {
    let rows = a.alphabet().words_up_to(row_len);
    let cols = a.alphabet().words_up_to(col_len);
    let back: Vec<Vec<F>> = cols.iter().map(|y| a.backward(y)).collect();
    let mut values = Matrix::zeros(rows.len(), cols.len());
    for (i, x) in rows.iter().enumerate() {
        let fwd = a.forward(x);
        for (j, b) in back.iter().enumerate() {
            values.set(i, j, crate::matrix::dot(&fwd, b));
        }
    }
    HankelBlock { rows, cols, values }
}

impl<F: Field> HankelBlock<F> {
    /// Rank over the field the block was computed in.
    pub fn rank(&self) -> usize {
        self.values.rank()
    }
}

impl HankelBlock<Rational> {
    pub fn is_binary(&self) -> bool {
        self.values.entries().iter().all(|v| v.is_zero() || v.is_one())
    }

    /// Rank over the requested field. GF(2) requires every entry to be 0 or 1.
    pub fn rank_over(&self, kind: FieldKind) -> Result<usize> {
        match kind {
            FieldKind::Rational => Ok(self.values.rank()),
            FieldKind::Gf2 => {
                let m = self.values.try_map(|v| {
                    rational_to_gf2(v).ok_or_else(|| Error::Invalid(format!("Hankel entry {v} is not 0 or 1")))
                })?;
                Ok(m.rank())
            }
        }
    }
}
