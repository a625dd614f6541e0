use std::collections::{HashMap, VecDeque};

use super::MarkovChain;
use crate::buchi::Iba;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::graph::{can_reach_good_cycle, sccs, Sccs};
use crate::matrix::Matrix;

/// Product of a trimmed IBA with a Markov chain, restricted to the nodes
/// `⟨q, s⟩` from which a cycle through an accepting automaton state can be
/// reached. `B[⟨q,s⟩, ⟨q',s'⟩] = P[s,s'] · M(λ(s))[q,q']`.
#[derive(Clone, Debug)]
pub struct ProductSystem {
    iba: Iba,
    chain: MarkovChain,
    nodes: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    rows: Vec<Vec<(usize, Rational)>>,
    adj: Vec<Vec<usize>>,
    sccs: Sccs,
    classes: Vec<Classification>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SccKind {
    RecurrentAccepting,
    RecurrentNonaccepting,
    Transient,
}

/// Set `A × {s}` of product nodes inside one SCC.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fiber {
    pub scc: usize,
    pub chain_state: usize,
    /// Sorted automaton states.
    pub states: Vec<usize>,
}

/// Result of `α ▷ t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberStep {
    /// `P[s, t] = 0`.
    Undefined,
    Empty,
    Fiber(Fiber),
}

/// Characteristic vector of a cut, stored as its support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutVector {
    pub scc: usize,
    /// Sorted product node indices.
    pub support: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub recurrent: bool,
    pub accepting: bool,
    pub cut: Option<CutVector>,
}

impl Classification {
    pub fn kind(&self) -> SccKind {
        match (self.recurrent, self.accepting) {
            (true, true) => SccKind::RecurrentAccepting,
            (true, false) => SccKind::RecurrentNonaccepting,
            (false, _) => SccKind::Transient,
        }
    }
}

/// Builds the product of `a` (trimmed first) with `m` and classifies its SCCs.
pub fn build_product(a: &Iba, m: &MarkovChain) -> Result<ProductSystem> {
    if a.alphabet() != m.alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "automaton over {{{}}}, chain over {{{}}}",
            a.alphabet().names().join(","),
            m.alphabet().names().join(",")
        )));
    }
    let (iba, _) = a.trim();
    let ns = m.state_count();
    let full = iba.state_count() * ns;
    let id = |q: usize, s: usize| q * ns + s;
    let mut full_adj = vec![Vec::new(); full];
    for q in 0..iba.state_count() {
        for s in 0..ns {
            let row = iba.transition(m.label(s)).row(q);
            for &t in m.successors(s) {
                for (q2, w) in row.iter().enumerate() {
                    if !w.is_zero() {
                        full_adj[id(q, s)].push(id(q2, t));
                    }
                }
            }
        }
    }
    let live = can_reach_good_cycle(&full_adj, |v| iba.is_accepting(v / ns));

    let nodes: Vec<(usize, usize)> = (0..full).filter(|&v| live[v]).map(|v| (v / ns, v % ns)).collect();
    let index: HashMap<(usize, usize), usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut rows = vec![Vec::new(); nodes.len()];
    for (i, &(q, s)) in nodes.iter().enumerate() {
        let arow = iba.transition(m.label(s)).row(q);
        for &t in m.successors(s) {
            for (q2, w) in arow.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                if let Some(&j) = index.get(&(q2, t)) {
                    rows[i].push((j, m.probability(s, t).mul(w)));
                }
            }
        }
        rows[i].sort_by_key(|e| e.0);
    }
    let adj: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|e| e.0).collect()).collect();
    let sccs = sccs(&adj);
    let mut ps = ProductSystem {
        iba,
        chain: m.clone(),
        nodes,
        index,
        rows,
        adj,
        sccs,
        classes: Vec::new(),
    };
    ps.classes = (0..ps.sccs.count()).map(|c| ps.classify_scc(c)).collect();
    Ok(ps)
}

impl ProductSystem {
    /// The trimmed automaton the product was built from.
    pub fn iba(&self) -> &Iba {
        &self.iba
    }

    pub fn chain(&self) -> &MarkovChain {
        &self.chain
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// `(automaton state, chain state)` of each node.
    pub fn nodes(&self) -> &[(usize, usize)] {
        &self.nodes
    }

    pub fn node_index(&self, q: usize, s: usize) -> Option<usize> {
        self.index.get(&(q, s)).copied()
    }

    /// Nonzero entries of row `i` of `B`, by ascending column.
    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.rows[i]
    }

    pub fn b_matrix(&self) -> Matrix<Rational> {
        let n = self.node_count();
        let mut b = Matrix::zeros(n, n);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, w) in row {
                b.set(i, *j, w.clone());
            }
        }
        b
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn sccs(&self) -> &Sccs {
        &self.sccs
    }

    pub fn scc_of(&self, node: usize) -> usize {
        self.sccs.comp[node]
    }

    pub fn classification(&self, scc: usize) -> &Classification {
        &self.classes[scc]
    }

    pub fn classifications(&self) -> &[Classification] {
        &self.classes
    }

    /// `α ▷ t`: the automaton states reached from `α` under `λ(s)` whose node
    /// with chain state `t` lies in the same SCC.
    pub fn fiber_step(&self, fiber: &Fiber, t: usize) -> FiberStep {
        let s = fiber.chain_state;
        if self.chain.probability(s, t).is_zero() {
            return FiberStep::Undefined;
        }
        let m = self.iba.transition(self.chain.label(s));
        let mut states: Vec<usize> = (0..self.iba.state_count())
            .filter(|&q2| fiber.states.iter().any(|&q| !m.get(q, q2).is_zero()))
            .filter(|&q2| self.node_index(q2, t).is_some_and(|i| self.sccs.comp[i] == fiber.scc))
            .collect();
        states.sort_unstable();
        if states.is_empty() {
            FiberStep::Empty
        } else {
            FiberStep::Fiber(Fiber {
                scc: fiber.scc,
                chain_state: t,
                states,
            })
        }
    }

    /// Explores the fibers `d ▷ v` of the SCC reachable from its singletons.
    /// The SCC is recurrent iff one of them can never be mapped to the empty
    /// fiber; the first such fiber in breadth-first order is returned as cut.
    pub fn classify_scc(&self, scc: usize) -> Classification {
        let members = &self.sccs.members[scc];
        let accepting = members.iter().any(|&i| self.iba.is_accepting(self.nodes[i].0));

        let mut seen: HashMap<Fiber, usize> = HashMap::new();
        let mut fibers: Vec<Fiber> = Vec::new();
        let mut succ: Vec<Vec<usize>> = Vec::new();
        let mut dies: Vec<bool> = Vec::new();
        let mut queue = VecDeque::new();
        let mut sorted = members.clone();
        sorted.sort_unstable();
        for &i in &sorted {
            let (q, s) = self.nodes[i];
            let f = Fiber {
                scc,
                chain_state: s,
                states: vec![q],
            };
            if !seen.contains_key(&f) {
                seen.insert(f.clone(), fibers.len());
                fibers.push(f);
                succ.push(Vec::new());
                dies.push(false);
                queue.push_back(fibers.len() - 1);
            }
        }
        while let Some(k) = queue.pop_front() {
            let f = fibers[k].clone();
            for &t in self.chain.successors(f.chain_state) {
                match self.fiber_step(&f, t) {
                    FiberStep::Undefined => {}
                    FiberStep::Empty => dies[k] = true,
                    FiberStep::Fiber(g) => {
                        let j = match seen.get(&g) {
                            Some(&j) => j,
                            None => {
                                seen.insert(g.clone(), fibers.len());
                                fibers.push(g);
                                succ.push(Vec::new());
                                dies.push(false);
                                queue.push_back(fibers.len() - 1);
                                fibers.len() - 1
                            }
                        };
                        succ[k].push(j);
                    }
                }
            }
        }

        // Backward propagation of "can reach the empty fiber".
        let mut pred = vec![Vec::new(); fibers.len()];
        for (k, out) in succ.iter().enumerate() {
            for &j in out {
                pred[j].push(k);
            }
        }
        let mut stack: Vec<usize> = (0..fibers.len()).filter(|&k| dies[k]).collect();
        while let Some(k) = stack.pop() {
            for &p in &pred[k] {
                if !dies[p] {
                    dies[p] = true;
                    stack.push(p);
                }
            }
        }
        let cut = (0..fibers.len()).find(|&k| !dies[k]).map(|k| {
            let f = &fibers[k];
            let mut support: Vec<usize> = f
                .states
                .iter()
                .map(|&q| self.node_index(q, f.chain_state).expect("fiber inside product"))
                .collect();
            support.sort_unstable();
            CutVector { scc, support }
        });
        Classification {
            recurrent: cut.is_some(),
            accepting,
            cut,
        }
    }
}
