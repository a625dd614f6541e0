//! Mod-2 multiplicity automata and shift-register languages.

use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::automaton::WeightedAutomaton;
use crate::equiv::minimize;
use crate::error::{Error, Result};
use crate::field::{Field, Gf2, Rational};
use crate::ifa::{ensure_image_binary, ifa_to_dfa, Dfa, Ifa};
use crate::matrix::Matrix;

/// Weighted automaton over GF(2); a word is accepted iff its value is 1.
pub type Mod2Ma = WeightedAutomaton<Gf2>;

/// Equivalent mod-2 automaton with at most as many states as the IFA: the IFA
/// is turned into a DFA, read over GF(2) and minimized there.
pub fn ifa_to_mod2(a: &Ifa) -> Result<Mod2Ma> {
    ensure_image_binary(a)?;
    let dfa = ifa_to_dfa(a)?;
    Ok(minimize(&dfa.to_weighted::<Gf2>()))
}

/// Linear recurrence `a_n = c_1 a_{n-1} + ... + c_d a_{n-d} (mod 2)` with
/// initial bits `a_0 .. a_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfsrSpec {
    taps: Vec<bool>,
    init: Vec<bool>,
}

fn parse_bits(s: &str, what: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Invalid(format!(
                "{what} must be a string of 0s and 1s, got {s:?}"
            ))),
        })
        .collect()
}

impl LfsrSpec {
    /// `taps[i]` is `c_{i+1}`; `init[i]` is `a_i`.
    pub fn new(taps: Vec<bool>, init: Vec<bool>) -> Result<Self> {
        let d = taps.len();
        if d == 0 {
            return Err(Error::Invalid("register dimension must be positive".into()));
        }
        if init.len() != d {
            return Err(Error::Dimension(format!(
                "{} initial bits for dimension {d}",
                init.len()
            )));
        }
        if !taps[d - 1] {
            return Err(Error::Invalid(format!("last tap c_{d} must be 1")));
        }
        Ok(LfsrSpec { taps, init })
    }

    /// Parses bit strings such as `taps = "011"`, `init = "100"`.
    pub fn parse(d: usize, taps: &str, init: &str) -> Result<Self> {
        let t = parse_bits(taps, "taps")?;
        let i = parse_bits(init, "initial bits")?;
        if t.len() != d {
            return Err(Error::Dimension(format!("{} taps for dimension {d}", t.len())));
        }
        Self::new(t, i)
    }

    pub fn dimension(&self) -> usize {
        self.taps.len()
    }

    pub fn taps(&self) -> &[bool] {
        &self.taps
    }

    pub fn initial_bits(&self) -> &[bool] {
        &self.init
    }

    fn next_bit(&self, window: &[bool]) -> bool {
        // window holds a_{n-d} .. a_{n-1}
        let d = self.dimension();
        (1..=d).filter(|&i| self.taps[i - 1] && window[d - i]).count() % 2 == 1
    }
}

/// The first `len` terms of the sequence.
pub fn lfsr_sequence(spec: &LfsrSpec, len: usize) -> Vec<bool> {
    let d = spec.dimension();
    let mut out: Vec<bool> = spec.init.clone();
    while out.len() < len {
        let b = spec.next_bit(&out[out.len() - d..]);
        out.push(b);
    }
    out.truncate(len);
    out
}

/// Least period of the sequence, found by detecting the first repeated state window.
pub fn lfsr_period(spec: &LfsrSpec) -> usize {
    let d = spec.dimension();
    let mut seen: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut seq = spec.init.clone();
    let mut n = 0;
    loop {
        let window = seq[n..n + d].to_vec();
        if let Some(&first) = seen.get(&window) {
            return n - first;
        }
        seen.insert(window, n);
        let b = spec.next_bit(&seq[n..n + d]);
        seq.push(b);
        n += 1;
    }
}

/// The unary alphabet `{#}` of shift-register languages.
pub fn unary_alphabet() -> Alphabet {
    Alphabet::from_chars("#")
}

/// `d`-state mod-2 automaton with value `a_n` on `#^n`. The state after `#^n`
/// is the row vector `(a_n, ..., a_{n+d-1})`, advanced by the companion matrix.
pub fn lfsr_to_mod2ma(spec: &LfsrSpec) -> Mod2Ma {
    let d = spec.dimension();
    let mut c = Matrix::<Gf2>::zeros(d, d);
    for j in 1..d {
        c.set(j, j - 1, Gf2(true));
    }
    for i in 1..=d {
        if spec.taps[i - 1] {
            c.set(d - i, d - 1, Gf2(true));
        }
    }
    let init = spec.init.iter().map(|&b| Gf2(b)).collect();
    let mut fin = vec![Gf2::zero(); d];
    fin[0] = Gf2::one();
    WeightedAutomaton::new(unary_alphabet(), vec![c], init, fin).expect("consistent dimensions")
}

/// The cyclic DFA over `{#}` with one state per position of a period.
pub fn lfsr_dfa(spec: &LfsrSpec) -> Dfa {
    let p = lfsr_period(spec);
    let seq = lfsr_sequence(spec, p);
    let delta = (0..p).map(|i| vec![(i + 1) % p]).collect();
    Dfa::new(unary_alphabet(), delta, 0, seq).expect("cyclic DFA")
}

/// Rank and autocorrelation facts about the circulant matrix of a maximal-period sequence.
#[derive(Clone, Debug)]
pub struct ShiftRegisterReport {
    pub dimension: usize,
    pub period: usize,
    /// `H[i, j] = a_{(i + j) mod p}`.
    pub h: Matrix<Rational>,
    pub rank: usize,
    pub diagonal: Rational,
    pub off_diagonal: Rational,
    /// `H²` has the same value on every diagonal entry and the same value off the diagonal.
    pub uniform: bool,
    /// Whether `H² · H' = I` holds for `H'` with diagonal `2^(-d+2) - 2^(-2d+2)`
    /// and off-diagonal `+2^(-2d+2)` (first entry) or `-2^(-2d+2)` (second entry).
    pub inverse_check: (bool, bool),
}

fn pow2(e: i32) -> Rational {
    let two = Rational::from_integer(2.into());
    if e >= 0 {
        num_traits::pow(two, e as usize)
    } else {
        num_traits::pow(two, (-e) as usize).recip()
    }
}

pub fn shift_register_rank_report(spec: &LfsrSpec) -> Result<ShiftRegisterReport> {
    let d = spec.dimension();
    let p = lfsr_period(spec);
    let maximal = (1usize << d) - 1;
    if p != maximal {
        return Err(Error::Invalid(format!(
            "period is {p}, not the maximal 2^{d} - 1 = {maximal}"
        )));
    }
    let seq = lfsr_sequence(spec, p);
    let mut h = Matrix::<Rational>::zeros(p, p);
    for i in 0..p {
        for j in 0..p {
            if seq[(i + j) % p] {
                h.set(i, j, Rational::one());
            }
        }
    }
    let rank = h.rank();
    let h2 = h.mul(&h);
    let diagonal = h2.get(0, 0).clone();
    let off_diagonal = if p > 1 { h2.get(0, 1).clone() } else { Rational::zero() };
    let uniform = (0..p).all(|i| (0..p).all(|j| h2.get(i, j) == if i == j { &diagonal } else { &off_diagonal }));

    let di = d as i32;
    let inverse_with = |off: Rational| {
        let mut inv = Matrix::<Rational>::zeros(p, p);
        let diag = pow2(-di + 2) - pow2(-2 * di + 2);
        for i in 0..p {
            for j in 0..p {
                inv.set(i, j, if i == j { diag.clone() } else { off.clone() });
            }
        }
        h2.mul(&inv) == Matrix::identity(p)
    };
    let inverse_check = (inverse_with(pow2(-2 * di + 2)), inverse_with(-pow2(-2 * di + 2)));
    Ok(ShiftRegisterReport {
        dimension: d,
        period: p,
        h,
        rank,
        diagonal,
        off_diagonal,
        uniform,
        inverse_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::equivalent;
    use crate::field::int;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn d3_sequence_and_period() {
        let spec = LfsrSpec::parse(3, "011", "100").unwrap();
        assert_eq!(lfsr_sequence(&spec, 14), bits("10010111001011"));
        assert_eq!(lfsr_period(&spec), 7);
    }

    #[test]
    fn zero_register_has_period_one() {
        let spec = LfsrSpec::parse(2, "11", "00").unwrap();
        assert_eq!(lfsr_sequence(&spec, 5), bits("00000"));
        assert_eq!(lfsr_period(&spec), 1);
    }

    #[test]
    fn d4_maximal() {
        let spec = LfsrSpec::parse(4, "0011", "1000").unwrap();
        assert_eq!(lfsr_period(&spec), 15);
    }

    #[test]
    fn parse_errors() {
        assert!(LfsrSpec::parse(3, "010", "100").is_err());
        assert!(LfsrSpec::parse(3, "01", "100").is_err());
        assert!(LfsrSpec::parse(3, "0x1", "100").is_err());
        assert!(LfsrSpec::parse(3, "011", "10").is_err());
    }

    #[test]
    fn companion_automaton_generates_the_sequence() {
        let spec = LfsrSpec::parse(3, "011", "100").unwrap();
        let m = lfsr_to_mod2ma(&spec);
        assert_eq!(m.state_count(), 3);
        let seq = lfsr_sequence(&spec, 21);
        for (n, &b) in seq.iter().enumerate() {
            assert_eq!(m.eval(&vec![0; n]), Gf2(b));
        }
    }

    #[test]
    fn report_d3() {
        let spec = LfsrSpec::parse(3, "011", "100").unwrap();
        let r = shift_register_rank_report(&spec).unwrap();
        assert_eq!(r.rank, 7);
        assert_eq!(r.diagonal, int(4));
        assert_eq!(r.off_diagonal, int(2));
        assert!(r.uniform);
        assert_eq!(r.inverse_check, (false, true));
        assert_eq!(r.h, r.h.transpose());
    }

    #[test]
    fn report_rejects_short_period() {
        let spec = LfsrSpec::parse(3, "001", "100").unwrap();
        assert_eq!(lfsr_period(&spec), 3);
        assert!(shift_register_rank_report(&spec).is_err());
    }

    #[test]
    fn cyclic_dfa_to_mod2() {
        let spec = LfsrSpec::parse(3, "011", "100").unwrap();
        let dfa = lfsr_dfa(&spec);
        assert_eq!(dfa.state_count(), 7);
        let m = ifa_to_mod2(&dfa.to_weighted()).unwrap();
        assert_eq!(m.state_count(), 3);
        assert!(equivalent(&m, &lfsr_to_mod2ma(&spec)).unwrap());
    }

    #[test]
    fn accept_all_to_mod2() {
        let all = Ifa::const_one(Alphabet::from_chars("ab"));
        assert_eq!(ifa_to_mod2(&all).unwrap().state_count(), 1);
    }
}
