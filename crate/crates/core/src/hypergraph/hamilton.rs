//! Spanning-cycle search under two cycle formalisms.
//!
//! A *loose* cycle `x₁ e₁ x₂ … x_k e_k x₁` needs distinct vertices, `k ≥ 3`,
//! and `x_j, x_{j+1} ∈ e_j` with indices mod `k`; edges may repeat. Such a
//! cycle exists iff the 2-section has a Hamiltonian cycle, so the loose
//! search runs on the 2-section. A *strict* cycle additionally requires
//! the `k` chosen edges to be pairwise distinct.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{Graph, Hypergraph};

/// Default cap on search-node expansions.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget(pub u64);

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonSearch<W> {
    Found(W),
    Absent,
    BudgetExhausted { expansions: u64 },
}

impl<W> HamiltonSearch<W> {
    pub fn found(&self) -> Option<&W> {
        match self {
            HamiltonSearch::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, HamiltonSearch::Absent)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LooseWalk {
    pub vertices: Vec<usize>,
    /// One edge id per hop; a closed walk has one hop per vertex.
    pub edge_choices: Vec<usize>,
    pub closed: bool,
}

impl LooseWalk {
    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        let k = self.vertices.len();
        let mut seen = FixedBitSet::with_capacity(h.vertex_count());
        for &v in &self.vertices {
            if v >= h.vertex_count() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        let hops = if self.closed { k } else { k.saturating_sub(1) };
        if self.edge_choices.len() != hops || (self.closed && k < 3) {
            return false;
        }
        self.edge_choices.iter().enumerate().all(|(j, &e)| {
            let (a, b) = (self.vertices[j], self.vertices[(j + 1) % k]);
            h.edges()
                .get(e)
                .is_some_and(|edge| edge.binary_search(&a).is_ok() && edge.binary_search(&b).is_ok())
        })
    }

    pub fn is_spanning_cycle(&self, h: &Hypergraph) -> bool {
        self.closed && self.vertices.len() == h.vertex_count() && self.is_valid(h)
    }
}

/// A walk whose chosen edges are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictWalk(LooseWalk);

impl StrictWalk {
    pub fn walk(&self) -> &LooseWalk {
        &self.0
    }

    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        let mut used = FixedBitSet::with_capacity(h.edge_count());
        self.0.is_valid(h)
            && self.0.edge_choices.iter().all(|&e| {
                let fresh = !used.contains(e);
                used.insert(e);
                fresh
            })
    }

    pub fn is_spanning_cycle(&self, h: &Hypergraph) -> bool {
        self.0.is_spanning_cycle(h) && self.is_valid(h)
    }
}

struct Exhausted;

struct Counter {
    expansions: u64,
    limit: u64,
}

impl Counter {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.expansions += 1;
        if self.expansions > self.limit {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }
}

/// Exact backtracking on the 2-section, branching on the neighbor with the
/// fewest unvisited neighbors first.
pub fn find_hamiltonian_cycle_loose(h: &Hypergraph, budget: SearchBudget) -> HamiltonSearch<LooseWalk> {
    let n = h.vertex_count();
    if n < 3 {
        return HamiltonSearch::Absent;
    }
    let g = h.two_section();
    if (0..n).any(|v| g.degree(v) < 2) || !h.is_connected() {
        return HamiltonSearch::Absent;
    }
    let start = (0..n).min_by_key(|&v| g.degree(v)).expect("n >= 3");
    let mut search = GraphCycleSearch {
        g: &g,
        start,
        path: vec![start],
        unvisited: {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert_range(..);
            s.set(start, false);
            s
        },
        counter: Counter { expansions: 0, limit: budget.0 },
    };
    match search.extend() {
        Err(Exhausted) => HamiltonSearch::BudgetExhausted { expansions: search.counter.expansions },
        Ok(false) => HamiltonSearch::Absent,
        Ok(true) => {
            let vertices = search.path;
            let edge_choices = (0..n)
                .map(|j| {
                    let (a, b) = (vertices[j], vertices[(j + 1) % n]);
                    h.edges()
                        .iter()
                        .position(|e| e.binary_search(&a).is_ok() && e.binary_search(&b).is_ok())
                        .expect("2-section adjacency comes from a shared edge")
                })
                .collect();
            HamiltonSearch::Found(LooseWalk { vertices, edge_choices, closed: true })
        }
    }
}

struct GraphCycleSearch<'a> {
    g: &'a Graph,
    start: usize,
    path: Vec<usize>,
    unvisited: FixedBitSet,
    counter: Counter,
}

impl GraphCycleSearch<'_> {
    fn extend(&mut self) -> Result<bool, Exhausted> {
        let cur = *self.path.last().expect("path starts at start");
        if self.unvisited.is_clear() {
            return Ok(self.g.has_edge(cur, self.start));
        }
        self.counter.tick()?;
        let mut next: Vec<usize> = self.g.neighbors(cur).intersection(&self.unvisited).collect();
        next.sort_by_key(|&v| (self.g.neighbors(v).intersection_count(&self.unvisited), v));
        for v in next {
            self.unvisited.set(v, false);
            self.path.push(v);
            if self.feasible(v) && self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.unvisited.insert(v);
        }
        Ok(false)
    }

    /// Every unvisited vertex still needs two usable neighbors, and the
    /// start needs one to close the cycle.
    fn feasible(&self, cur: usize) -> bool {
        let mut open = self.unvisited.clone();
        open.insert(cur);
        open.insert(self.start);
        if self.unvisited.is_clear() {
            return true;
        }
        let mut start_side = self.unvisited.clone();
        start_side.insert(cur);
        if self.g.neighbors(self.start).intersection_count(&start_side) == 0 {
            return false;
        }
        self.unvisited
            .ones()
            .all(|u| self.g.neighbors(u).intersection_count(&open) >= 2)
    }
}

/// Exact backtracking over vertex order and edge assignment. Rejects
/// immediately when there are fewer edges than vertices, or a vertex lies
/// in fewer than two edges.
pub fn find_hamiltonian_cycle_strict(h: &Hypergraph, budget: SearchBudget) -> HamiltonSearch<StrictWalk> {
    let n = h.vertex_count();
    if n < 3 || h.edge_count() < n {
        return HamiltonSearch::Absent;
    }
    let degrees = h.degree_sequence();
    if degrees.iter().any(|&d| d < 2) {
        return HamiltonSearch::Absent;
    }
    let mut incident = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let start = (0..n).min_by_key(|&v| degrees[v]).expect("n >= 3");
    let mut search = StrictSearch {
        incident: &incident,
        start,
        path: vec![start],
        choices: Vec::new(),
        visited: {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(start);
            s
        },
        used: FixedBitSet::with_capacity(h.edge_count()),
        counter: Counter { expansions: 0, limit: budget.0 },
    };
    match search.extend() {
        Err(Exhausted) => HamiltonSearch::BudgetExhausted { expansions: search.counter.expansions },
        Ok(false) => HamiltonSearch::Absent,
        Ok(true) => HamiltonSearch::Found(StrictWalk(LooseWalk {
            vertices: search.path,
            edge_choices: search.choices,
            closed: true,
        })),
    }
}

struct StrictSearch<'a> {
    incident: &'a [Vec<usize>],
    start: usize,
    path: Vec<usize>,
    choices: Vec<usize>,
    visited: FixedBitSet,
    used: FixedBitSet,
    counter: Counter,
}

impl StrictSearch<'_> {
    fn shared_unused(&self, a: usize, b: usize) -> Vec<usize> {
        self.incident[a]
            .iter()
            .copied()
            .filter(|e| !self.used.contains(*e) && self.incident[b].binary_search(e).is_ok())
            .collect()
    }

    fn extend(&mut self) -> Result<bool, Exhausted> {
        let n = self.incident.len();
        let cur = *self.path.last().expect("non-empty path");
        if self.path.len() == n {
            if let Some(&e) = self.shared_unused(cur, self.start).first() {
                self.choices.push(e);
                return Ok(true);
            }
            return Ok(false);
        }
        self.counter.tick()?;
        for v in 0..n {
            if self.visited.contains(v) {
                continue;
            }
            for e in self.shared_unused(cur, v) {
                self.visited.insert(v);
                self.used.insert(e);
                self.path.push(v);
                self.choices.push(e);
                if self.extend()? {
                    return Ok(true);
                }
                self.choices.pop();
                self.path.pop();
                self.used.set(e, false);
                self.visited.set(v, false);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::maximal_cliques;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn complete_single_edge() {
        let h = Hypergraph::unlabeled(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let walk = find_hamiltonian_cycle_loose(&h, budget());
        assert!(walk.found().unwrap().is_spanning_cycle(&h));
        assert!(find_hamiltonian_cycle_strict(&h, budget()).is_absent());
    }

    #[test]
    fn two_vertices_never_form_a_cycle() {
        let h = Hypergraph::unlabeled(2, vec![vec![0, 1]]).unwrap();
        assert!(find_hamiltonian_cycle_loose(&h, budget()).is_absent());
        assert!(find_hamiltonian_cycle_strict(&h, budget()).is_absent());
    }

    #[test]
    fn triangle_has_strict_cycle() {
        let h = Hypergraph::unlabeled(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let walk = find_hamiltonian_cycle_strict(&h, budget());
        let w = walk.found().expect("strict cycle");
        assert!(w.is_spanning_cycle(&h));
        let mut e = w.walk().edge_choices.clone();
        e.sort_unstable();
        assert_eq!(e, vec![0, 1, 2]);
    }

    #[test]
    fn isolated_vertex_blocks_loose_cycle() {
        let h = Hypergraph::unlabeled(4, vec![vec![0, 1, 2]]).unwrap();
        assert!(find_hamiltonian_cycle_loose(&h, budget()).is_absent());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // Petersen graph: no Hamiltonian cycle, so the search must explore.
        let mut g = Graph::unlabeled(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        let h = maximal_cliques(&g);
        assert!(matches!(
            find_hamiltonian_cycle_loose(&h, SearchBudget(3)),
            HamiltonSearch::BudgetExhausted { .. }
        ));
        assert!(find_hamiltonian_cycle_loose(&h, budget()).is_absent());
    }

    #[test]
    fn walk_validation_rejects_bad_walks() {
        let h = Hypergraph::unlabeled(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let misplaced = LooseWalk { vertices: vec![0, 1, 2], edge_choices: vec![0, 1, 1], closed: true };
        assert!(!misplaced.is_valid(&h));
        let good = LooseWalk { vertices: vec![0, 1, 2], edge_choices: vec![0, 2, 1], closed: true };
        assert!(good.is_valid(&h));
        assert!(StrictWalk(good).is_spanning_cycle(&h));
        let repeated = Hypergraph::unlabeled(3, vec![vec![0, 1, 2]]).unwrap();
        let reuse = LooseWalk { vertices: vec![0, 1, 2], edge_choices: vec![0, 0, 0], closed: true };
        assert!(reuse.is_spanning_cycle(&repeated));
        assert!(!StrictWalk(reuse).is_valid(&repeated));
        let open = LooseWalk { vertices: vec![0, 1], edge_choices: vec![0], closed: false };
        assert!(open.is_valid(&h));
        assert!(!open.is_spanning_cycle(&h));
    }
}
