use super::product::{build_product, ProductSystem};
use super::MarkovChain;
use crate::buchi::Iba;
use crate::error::{Error, Result};
use crate::field::{fmt_ratio, in_unit_interval, Field, Rational};
use crate::matrix::{Matrix, Solution};

/// Solves `ζ = Bζ` together with `μᵀζ_D = 1` for every accepting recurrent
/// SCC `D` (with `μ` its cut vector) and `ζ_D = 0` for every non-accepting
/// recurrent one. The system must have a unique solution.
pub fn solve_values(ps: &ProductSystem) -> Result<Vec<Rational>> {
    let n = ps.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        let mut r = vec![Rational::zero(); n];
        r[i] = Rational::one();
        for (j, w) in ps.row(i) {
            r[*j] = r[*j].sub(w);
        }
        rows.push(r);
        rhs.push(Rational::zero());
    }
    for (c, class) in ps.classifications().iter().enumerate() {
        if !class.recurrent {
            continue;
        }
        if class.accepting {
            let cut = class.cut.as_ref().expect("recurrent SCC has a cut");
            let mut r = vec![Rational::zero(); n];
            for &i in &cut.support {
                r[i] = Rational::one();
            }
            rows.push(r);
            rhs.push(Rational::one());
        } else {
            for &i in &ps.sccs().members[c] {
                let mut r = vec![Rational::zero(); n];
                r[i] = Rational::one();
                rows.push(r);
                rhs.push(Rational::zero());
            }
        }
    }
    let system = Matrix::from_rows(rows)?;
    match system.solve(&rhs) {
        Solution::Unique(z) => Ok(z),
        Solution::Inconsistent => Err(Error::Invariant(
            "value system is inconsistent; the input is probably not an IBA".into(),
        )),
        Solution::Underdetermined { rank } => Err(Error::Invariant(format!(
            "value system has rank {rank} for {n} unknowns; the input is probably not an IBA"
        ))),
    }
}

/// Outcome of [`model_check`].
#[derive(Clone, Debug)]
pub struct ModelCheck {
    pub probability: Rational,
    pub product: ProductSystem,
    /// Value of each product node.
    pub z: Vec<Rational>,
    /// Whether every entry of `z` lies in `[0, 1]`.
    pub z_in_unit_interval: bool,
}

impl ModelCheck {
    /// `B·z = z`.
    pub fn residual_is_zero(&self) -> bool {
        (0..self.product.node_count()).all(|i| {
            let bz = self
                .product
                .row(i)
                .iter()
                .fold(Rational::zero(), |acc, (j, w)| acc.add(&w.mul(&self.z[*j])));
            bz == self.z[i]
        })
    }

    /// `μᵀz_D = 1` for the cut vector of every accepting recurrent SCC.
    pub fn normalizers_hold(&self) -> bool {
        self.product
            .classifications()
            .iter()
            .filter(|c| c.recurrent && c.accepting)
            .all(|c| {
                let cut = c.cut.as_ref().expect("recurrent SCC has a cut");
                cut.support
                    .iter()
                    .fold(Rational::zero(), |acc, &i| acc.add(&self.z[i]))
                    .is_one()
            })
    }

    /// `z_D = 0` on every non-accepting recurrent SCC.
    pub fn nonaccepting_recurrent_zero(&self) -> bool {
        let ps = &self.product;
        ps.classifications()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.recurrent && !c.accepting)
            .all(|(k, _)| ps.sccs().members[k].iter().all(|&i| self.z[i].is_zero()))
    }

    /// Value of node `⟨q, s⟩` (0 for nodes dropped from the product).
    pub fn value(&self, q: usize, s: usize) -> Rational {
        self.product
            .node_index(q, s)
            .map_or_else(Rational::zero, |i| self.z[i].clone())
    }
}

/// Probability `Σ_s ι(s) Σ_q α(q) z⟨q,s⟩` that a run of `m` is accepted by `a`.
pub fn model_check(a: &Iba, m: &MarkovChain) -> Result<ModelCheck> {
    let product = build_product(a, m)?;
    let z = solve_values(&product)?;
    let iba = product.iba();
    let mut probability = Rational::zero();
    for (s, iota) in m.initial().iter().enumerate() {
        if iota.is_zero() {
            continue;
        }
        for (q, alpha) in iba.initial().iter().enumerate() {
            if let Some(i) = product.node_index(q, s) {
                probability = probability.add(&iota.mul(alpha).mul(&z[i]));
            }
        }
    }
    if !in_unit_interval(&probability) {
        return Err(Error::Semantic(format!(
            "input not image-binary: acceptance probability {} lies outside [0, 1]",
            fmt_ratio(&probability)
        )));
    }
    let z_in_unit_interval = z.iter().all(in_unit_interval);
    Ok(ModelCheck {
        probability,
        product,
        z,
        z_in_unit_interval,
    })
}
