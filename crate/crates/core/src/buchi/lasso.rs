use std::fmt;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::graph::{can_reach_good_cycle, reachable, sccs};

/// The ultimately periodic word `u · v^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lasso {
    stem: Word,
    cycle: Word,
}

impl Lasso {
    pub fn new(stem: Word, cycle: Word) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Invalid("the cycle of a lasso must be nonempty".into()));
        }
        Ok(Lasso { stem, cycle })
    }

    pub fn parse(alphabet: &Alphabet, stem: &str, cycle: &str) -> Result<Self> {
        Self::new(alphabet.parse_word(stem)?, alphabet.parse_word(cycle)?)
    }

    pub fn stem(&self) -> &[Letter] {
        &self.stem
    }

    pub fn cycle(&self) -> &[Letter] {
        &self.cycle
    }

    /// Number of positions of the lasso shape, `|u| + |v|`.
    pub fn len(&self) -> usize {
        self.stem.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter read at position `p` of the shape.
    pub fn letter(&self, p: usize) -> Letter {
        if p < self.stem.len() {
            self.stem[p]
        } else {
            self.cycle[p - self.stem.len()]
        }
    }

    /// Position following `p`; the last position loops back to the start of the cycle.
    pub fn next(&self, p: usize) -> usize {
        if p + 1 == self.len() {
            self.stem.len()
        } else {
            p + 1
        }
    }

    /// The first `n` letters of the infinite word.
    pub fn prefix(&self, n: usize) -> Word {
        let mut out = Vec::with_capacity(n);
        let mut p = 0;
        while out.len() < n {
            out.push(self.letter(p));
            p = self.next(p);
        }
        out
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        if let Some(&a) = self.stem.iter().chain(&self.cycle).find(|&&a| a >= alphabet.len()) {
            return Err(Error::Invalid(format!("lasso letter index {a} outside the alphabet")));
        }
        Ok(())
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!("{}({})^w", alphabet.render(&self.stem), alphabet.render(&self.cycle))
    }

    /// All lassos with `|u| <= max_stem` and `1 <= |v| <= max_cycle`, stems in
    /// length-lexicographic order, then cycles likewise.
    pub fn enumerate(alphabet: &Alphabet, max_stem: usize, max_cycle: usize) -> Vec<Lasso> {
        let cycles: Vec<Word> = (1..=max_cycle).flat_map(|l| alphabet.words_of_length(l)).collect();
        let mut out = Vec::new();
        for u in alphabet.words_up_to(max_stem) {
            for v in &cycles {
                out.push(Lasso {
                    stem: u.clone(),
                    cycle: v.clone(),
                });
            }
        }
        out
    }
}

impl fmt::Display for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({:?})^w", self.stem, self.cycle)
    }
}

/// Number of final paths over a lasso word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathCount {
    Finite(u64),
    Infinite,
}

/// Product of an automaton with the positions of a lasso shape. Node
/// `q * len + p` stands for "in state `q` about to read position `p`"; runs
/// over the lasso word correspond one-to-one to infinite paths from initial nodes.
pub(crate) struct LassoProduct<W> {
    len: usize,
    succ: Vec<Vec<(usize, W)>>,
    initial: Vec<usize>,
    accepting: Vec<bool>,
}

/// Structure of the useful part of a lasso product.
pub(crate) struct Analysis {
    /// Reachable from an initial node and able to reach an accepting cycle.
    pub useful: Vec<bool>,
    /// Useful nodes lying on a cycle of the useful subgraph.
    pub on_cycle: Vec<bool>,
    /// Some useful cycle has a second way to continue, giving infinitely many final paths.
    pub infinite: bool,
    /// Useful nodes ordered so that successors come first.
    pub order: Vec<usize>,
}

impl<W> LassoProduct<W> {
    pub fn build(
        lasso: &Lasso,
        states: usize,
        is_initial: impl Fn(usize) -> bool,
        is_accepting: impl Fn(usize) -> bool,
        step: impl Fn(usize, Letter) -> Vec<(usize, W)>,
    ) -> Self {
        let len = lasso.len();
        let mut succ = Vec::with_capacity(states * len);
        let mut accepting = Vec::with_capacity(states * len);
        for q in 0..states {
            for p in 0..len {
                let np = lasso.next(p);
                succ.push(
                    step(q, lasso.letter(p))
                        .into_iter()
                        .map(|(t, w)| (t * len + np, w))
                        .collect(),
                );
                accepting.push(is_accepting(q));
            }
        }
        let initial = (0..states).filter(|&q| is_initial(q)).map(|q| q * len).collect();
        LassoProduct {
            len,
            succ,
            initial,
            accepting,
        }
    }

    pub fn state_of(&self, node: usize) -> usize {
        node / self.len
    }

    pub fn initial_nodes(&self) -> &[usize] {
        &self.initial
    }

    pub fn successors(&self, node: usize) -> &[(usize, W)] {
        &self.succ[node]
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        self.succ.iter().map(|s| s.iter().map(|&(t, _)| t).collect()).collect()
    }

    pub fn has_final_path(&self) -> bool {
        let adj = self.adjacency();
        let live = can_reach_good_cycle(&adj, |v| self.accepting[v]);
        self.initial.iter().any(|&v| live[v])
    }

    pub fn analyze(&self) -> Analysis {
        let adj = self.adjacency();
        let reach = reachable(&adj, self.initial.iter().copied());
        let live = can_reach_good_cycle(&adj, |v| self.accepting[v]);
        let useful: Vec<bool> = reach.iter().zip(&live).map(|(a, b)| *a && *b).collect();
        let sub: Vec<Vec<usize>> = adj
            .iter()
            .enumerate()
            .map(|(v, s)| {
                if useful[v] {
                    s.iter().copied().filter(|&w| useful[w]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        let comps = sccs(&sub);
        let mut on_cycle = vec![false; sub.len()];
        let mut infinite = false;
        let mut order = Vec::new();
        for c in 0..comps.count() {
            let members = &comps.members[c];
            if !useful[members[0]] {
                continue;
            }
            if comps.is_nontrivial(c, &sub) {
                for &v in members {
                    on_cycle[v] = true;
                    if sub[v].len() != 1 {
                        infinite = true;
                    }
                }
            }
            order.extend(members.iter().copied());
        }
        Analysis {
            useful,
            on_cycle,
            infinite,
            order,
        }
    }

    pub fn count_final_paths(&self) -> PathCount {
        let an = self.analyze();
        if an.infinite {
            return PathCount::Infinite;
        }
        let mut count = vec![0u64; self.succ.len()];
        for &v in &an.order {
            count[v] = if an.on_cycle[v] {
                1
            } else {
                self.succ[v]
                    .iter()
                    .filter(|(w, _)| an.useful[*w])
                    .fold(0u64, |acc, (w, _)| acc.saturating_add(count[*w]))
            };
        }
        let total = self
            .initial
            .iter()
            .filter(|&&v| an.useful[v])
            .fold(0u64, |acc, &v| acc.saturating_add(count[v]));
        PathCount::Finite(total)
    }
}
