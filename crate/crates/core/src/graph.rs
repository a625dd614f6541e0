//! Small directed-graph utilities over adjacency lists.

use std::collections::VecDeque;

/// Strongly connected components. Components are numbered in the order
/// Tarjan's algorithm completes them, which is a reverse topological order:
/// every edge leaving a component points to a component with a smaller id.
#[derive(Clone, Debug)]
pub struct Sccs {
    pub comp: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl Sccs {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    /// True when the component contains a cycle: more than one node, or a self-loop.
    pub fn is_nontrivial(&self, c: usize, adj: &[Vec<usize>]) -> bool {
        let m = &self.members[c];
        m.len() > 1 || adj[m[0]].contains(&m[0])
    }
}

/// Iterative Tarjan.
pub fn sccs(adj: &[Vec<usize>]) -> Sccs {
    let n = adj.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut members = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(v, edge)) = call.last() {
            if edge < adj[v].len() {
                let w = adj[v][edge];
                call.last_mut().expect("nonempty").1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let id = members.len();
                let mut group = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = id;
                    group.push(w);
                    if w == v {
                        break;
                    }
                }
                group.sort_unstable();
                members.push(group);
            }
        }
    }
    Sccs { comp, members }
}

/// Nodes reachable from any of `starts` (the starts included).
pub fn reachable(adj: &[Vec<usize>], starts: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::new();
    for s in starts {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

pub fn reverse(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut rev = vec![Vec::new(); adj.len()];
    for (v, succ) in adj.iter().enumerate() {
        for &w in succ {
            rev[w].push(v);
        }
    }
    rev
}

/// Nodes from which some node of a nontrivial SCC satisfying `good` is reachable.
pub fn can_reach_good_cycle(adj: &[Vec<usize>], good: impl Fn(usize) -> bool) -> Vec<bool> {
    let s = sccs(adj);
    let targets = (0..s.count())
        .filter(|&c| s.is_nontrivial(c, adj) && s.members[c].iter().any(|&v| good(v)))
        .flat_map(|c| s.members[c].clone());
    reachable(&reverse(adj), targets)
}
