use num_traits::ToPrimitive;

use super::product::ProductSystem;

/// Floating-point enclosure `lower <= ρ <= upper` of a spectral radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralBounds {
    pub lower: f64,
    pub upper: f64,
}

impl SpectralBounds {
    pub fn midpoint(&self) -> f64 {
        (self.lower + self.upper) / 2.0
    }
}

/// Collatz–Wielandt bounds on the spectral radius of `B` restricted to one
/// SCC, by power iteration on `(I + B_DD) / 2`, which is primitive.
/// Only meant as a numeric sanity check.
pub fn spectral_radius_bounds(ps: &ProductSystem, scc: usize) -> SpectralBounds {
    let members = &ps.sccs().members[scc];
    let n = members.len();
    let local: std::collections::HashMap<usize, usize> = members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut a: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (k, &i) in members.iter().enumerate() {
        for (j, w) in ps.row(i) {
            if let Some(&l) = local.get(j) {
                a[k].push((l, w.to_f64().unwrap_or(f64::NAN)));
            }
        }
    }
    if a.iter().all(|r| r.is_empty()) {
        return SpectralBounds { lower: 0.0, upper: 0.0 };
    }
    let mut x = vec![1.0f64; n];
    let mut best = SpectralBounds {
        lower: f64::NEG_INFINITY,
        upper: f64::INFINITY,
    };
    for _ in 0..200_000 {
        let y: Vec<f64> = (0..n)
            .map(|k| 0.5 * x[k] + 0.5 * a[k].iter().map(|&(l, w)| w * x[l]).sum::<f64>())
            .collect();
        let ratios = y.iter().zip(&x).map(|(yi, xi)| yi / xi);
        let lo = ratios.clone().fold(f64::INFINITY, f64::min);
        let hi = ratios.fold(f64::NEG_INFINITY, f64::max);
        best.lower = best.lower.max(2.0 * lo - 1.0);
        best.upper = best.upper.min(2.0 * hi - 1.0);
        if best.upper - best.lower < 1e-12 {
            break;
        }
        let norm = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|v| v / norm).collect();
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::buchi::Iba;
    use crate::field::rat;
    use crate::matrix::Matrix;
    use crate::mc::{build_product, MarkovChain};
    use crate::samples::infinitely_many_a;

    #[test]
    fn recurrent_scc_has_radius_one() {
        let h = rat(1, 2);
        let p = Matrix::from_rows(vec![vec![h.clone(), h.clone()], vec![h.clone(), h.clone()]]).unwrap();
        let m = MarkovChain::identity_labeled(Alphabet::from_chars("ab"), p, vec![h.clone(), h]).unwrap();
        let ps = build_product(&Iba::from_nba(&infinitely_many_a()), &m).unwrap();
        let b = spectral_radius_bounds(&ps, 0);
        assert!((b.lower - 1.0).abs() < 1e-9 && (b.upper - 1.0).abs() < 1e-9, "{b:?}");
    }

    #[test]
    fn leaky_loop_is_below_one() {
        let s = Alphabet::from_chars("ab");
        let nba = crate::buchi::Nba::new(s, 2, &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)], &[0], &[0]).unwrap();
        let h = rat(1, 2);
        let p = Matrix::from_rows(vec![vec![h.clone(), h.clone()], vec![h.clone(), h.clone()]]).unwrap();
        let m = MarkovChain::identity_labeled(Alphabet::from_chars("ab"), p, vec![h.clone(), h]).unwrap();
        let ps = build_product(&Iba::from_nba(&nba), &m).unwrap();
        let b = spectral_radius_bounds(&ps, 0);
        assert!((b.midpoint() - 0.5).abs() < 1e-9, "{b:?}");
    }
}
