//! Disambiguation of k-ambiguous Büchi automata into image-binary ones.
//!
//! A state of the result is a vector counting, for every automaton state `q`
//! and bit `b`, how many tracked run prefixes currently end in `q` with bit
//! `b`. The bit records whether the prefix has visited a final state since the
//! last time all tracked prefixes had. Weights count how many concrete
//! successor sets of prefixes map to the same count vector, with the sign
//! `(-1)^(size' - size)` implementing inclusion-exclusion over run sets.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::matrix::Matrix;

use super::{Iba, Nba};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bit {
    Bot,
    Top,
}

impl Bit {
    fn index(self) -> usize {
        match self {
            Bit::Bot => 0,
            Bit::Top => 1,
        }
    }

    fn from_bool(b: bool) -> Bit {
        if b {
            Bit::Top
        } else {
            Bit::Bot
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bit::Bot => "bot",
            Bit::Top => "top",
        })
    }
}

/// Counts indexed by `(state, bit)`, stored state-major with `Bot` before `Top`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CountVector {
    counts: Vec<u32>,
}

impl CountVector {
    pub fn zero(states: usize) -> Self {
        CountVector {
            counts: vec![0; 2 * states],
        }
    }

    pub fn from_entries(states: usize, entries: &[(usize, Bit, u32)]) -> Self {
        let mut v = Self::zero(states);
        for &(q, b, c) in entries {
            v.counts[2 * q + b.index()] += c;
        }
        v
    }

    pub fn states(&self) -> usize {
        self.counts.len() / 2
    }

    pub fn get(&self, q: usize, b: Bit) -> u32 {
        self.counts[2 * q + b.index()]
    }

    pub fn size(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// True when no tracked prefix carries the `Bot` bit.
    pub fn all_top(&self) -> bool {
        self.counts.iter().step_by(2).all(|&c| c == 0)
    }

    /// Nonzero entries in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Bit, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i / 2, if i % 2 == 0 { Bit::Bot } else { Bit::Top }, c))
    }
}

impl fmt::Display for CountVector {
    /// `(q,bit):count` entries with 1-based states, e.g. `(3,bot):2 (4,top):1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().map(|(q, b, c)| format!("({},{b}):{c}", q + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Number of ways to give each of `n` run prefixes ending in the same state a
/// nonempty set of successors, such that successor `i` is chosen by exactly
/// `g[i]` prefixes:
/// `Σ_{j=0..n} (-1)^j C(n, j) Π_i C(n - j, g[i])`.
pub fn num_succ(n: u32, g: &[u32]) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=n {
        let mut term: BigInt = binomial(BigInt::from(n), BigInt::from(j));
        for &gi in g {
            if gi > n - j {
                term = BigInt::zero();
                break;
            }
            term *= binomial(BigInt::from(n - j), BigInt::from(gi));
        }
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// One source group: the `n` prefixes counted at `(q, b)`, all of which move
/// to targets with the same bit.
struct Group {
    targets: Vec<usize>,
    bit: Bit,
    /// Admissible count assignments over `targets` with their multiplicities.
    options: Vec<(Vec<u32>, BigInt)>,
}

fn groups(a: &Nba, r: &CountVector, letter: Letter) -> Vec<Group> {
    // b'' is Top iff some prefix still carries Bot.
    let any_bot = !r.all_top();
    let mut out = Vec::new();
    for (q, b, n) in r.entries() {
        let targets = a.successors(q, letter).to_vec();
        let bit = Bit::from_bool((a.is_accepting(q) || b == Bit::Top) && any_bot);
        let mut options = Vec::new();
        let mut g = vec![0u32; targets.len()];
        loop {
            let m = num_succ(n, &g);
            if !m.is_zero() {
                options.push((g.clone(), m));
            }
            // odometer over {0..n}^targets
            let mut i = 0;
            while i < g.len() && g[i] == n {
                g[i] = 0;
                i += 1;
            }
            if i == g.len() {
                break;
            }
            g[i] += 1;
        }
        out.push(Group { targets, bit, options });
    }
    out
}

/// All successors of `r` on `letter`, with unsigned multiplicities, restricted
/// to vectors accepted by `admit` (which must be monotone: once it rejects a
/// partial vector, every extension is rejected too).
fn successors(
    a: &Nba,
    r: &CountVector,
    letter: Letter,
    admit: &dyn Fn(&CountVector) -> bool,
) -> BTreeMap<CountVector, BigInt> {
    let gs = groups(a, r, letter);
    let mut out = BTreeMap::new();
    if gs.iter().any(|g| g.options.is_empty()) {
        return out;
    }
    fn go(
        gs: &[Group],
        i: usize,
        acc: &mut CountVector,
        weight: &BigInt,
        admit: &dyn Fn(&CountVector) -> bool,
        out: &mut BTreeMap<CountVector, BigInt>,
    ) {
        if i == gs.len() {
            *out.entry(acc.clone()).or_insert_with(BigInt::zero) += weight;
            return;
        }
        let g = &gs[i];
        for (assign, m) in &g.options {
            for (&t, &c) in g.targets.iter().zip(assign) {
                acc.counts[2 * t + g.bit.index()] += c;
            }
            if admit(acc) {
                go(gs, i + 1, acc, &(weight * m), admit, out);
            }
            for (&t, &c) in g.targets.iter().zip(assign) {
                acc.counts[2 * t + g.bit.index()] -= c;
            }
        }
    }
    let mut acc = CountVector::zero(a.state_count());
    go(&gs, 0, &mut acc, &BigInt::one(), admit, &mut out);
    out.retain(|_, w| !w.is_zero());
    out
}

/// `w(r, a, r')`: the number of `a`-successors `P'` with count vector `r'` of
/// any concrete set of prefixes `P` with count vector `r`.
pub fn kdis_weight_w(a: &Nba, r: &CountVector, letter: Letter, r2: &CountVector) -> BigInt {
    let admit = |v: &CountVector| v.counts.iter().zip(&r2.counts).all(|(x, y)| x <= y);
    successors(a, r, letter, &admit).remove(r2).unwrap_or_else(BigInt::zero)
}

/// Result of the disambiguation, with the count vector of every state.
#[derive(Clone, Debug)]
pub struct Kdis {
    pub iba: Iba,
    /// Count vector of each state of `iba`; empty when the language is empty.
    pub states: Vec<CountVector>,
    /// Number of states explored before trimming.
    pub untrimmed: usize,
}

impl Kdis {
    pub fn index_of(&self, v: &CountVector) -> Option<usize> {
        self.states.iter().position(|s| s == v)
    }

    /// Weight of the transition between two count vectors, zero if either is absent.
    pub fn weight(&self, from: &CountVector, letter: Letter, to: &CountVector) -> Rational {
        match (self.index_of(from), self.index_of(to)) {
            (Some(i), Some(j)) => self.iba.transition(letter).get(i, j).clone(),
            _ => Rational::zero(),
        }
    }
}

fn sign(exp: u32) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Builds the k-disambiguation of `a`. Only count vectors of size at most `k`
/// are explored, starting from the nonempty subsets of `Q0 × {Bot}`; the result
/// is trimmed to states that can reach a cycle through a state without `Bot`
/// entries. The answer is only meaningful when `a` is at most k-ambiguous.
pub fn kdis(a: &Nba, k: u32) -> Result<Kdis> {
    if k == 0 {
        return Err(Error::Invalid("ambiguity bound must be at least 1".into()));
    }
    let n = a.state_count();
    let bound = (k as u128 + 1).checked_pow(2 * n as u32).unwrap_or(u128::MAX);
    let admit = |v: &CountVector| v.size() <= k;

    let mut ids: HashMap<CountVector, usize> = HashMap::new();
    let mut states: Vec<CountVector> = Vec::new();
    let mut init: Vec<Rational> = Vec::new();
    let mut queue = VecDeque::new();

    let q0: Vec<usize> = (0..n).filter(|&q| a.is_initial(q)).collect();
    for mask in 1u64..(1u64 << q0.len()) {
        if mask.count_ones() > k {
            continue;
        }
        let entries: Vec<(usize, Bit, u32)> = q0
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &q)| (q, Bit::Bot, 1))
            .collect();
        let v = CountVector::from_entries(n, &entries);
        ids.insert(v.clone(), states.len());
        init.push(Rational::from_integer(sign(mask.count_ones() - 1)));
        queue.push_back(states.len());
        states.push(v);
    }

    let mut edges: Vec<(usize, Letter, usize, BigInt)> = Vec::new();
    while let Some(i) = queue.pop_front() {
        let r = states[i].clone();
        for letter in 0..a.alphabet().len() {
            for (r2, w) in successors(a, &r, letter, &admit) {
                let j = match ids.get(&r2) {
                    Some(&j) => j,
                    None => {
                        let j = states.len();
                        if j as u128 >= bound {
                            return Err(Error::Invariant(format!(
                                "more than (k+1)^(2n) = {bound} count vectors"
                            )));
                        }
                        ids.insert(r2.clone(), j);
                        init.push(Rational::zero());
                        queue.push_back(j);
                        states.push(r2.clone());
                        j
                    }
                };
                edges.push((i, letter, j, sign(r2.size() - r.size()) * w));
            }
        }
    }

    let total = states.len();
    let mut trans = vec![Matrix::zeros(total, total); a.alphabet().len()];
    for (i, letter, j, w) in edges {
        trans[letter].set(i, j, Rational::from_integer(w));
    }
    let accepting = states.iter().map(CountVector::all_top).collect();
    let full = Iba::new(a.alphabet().clone(), trans, init, accepting)?;
    let (iba, keep) = full.trim();
    let kept = keep.iter().map(|&q| states[q].clone()).collect();
    Ok(Kdis {
        iba,
        states: kept,
        untrimmed: total,
    })
}
