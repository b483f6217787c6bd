//! Exact coloring and the list-coloring propagation engine.
//!
//! Colors are 1-based, matching the palette notation [k] = {1, ..., k}.
//! A list is a bitset with bit `c` set iff color `c` is allowed.

use crate::graph::{iter_bits, Graph};
use thiserror::Error;

/// Palette size cap, mirroring the vertex cap.
pub const MAX_COLORS: usize = 62;

/// A total vertex coloring; `colors[v]` is in 1..=k.
pub type Coloring = Vec<usize>;

/// Check that `colors` is a proper coloring of `g` using at most `k` colors.
pub fn is_proper_coloring(g: &Graph, colors: &[usize], k: usize) -> bool {
    if colors.len() != g.n() {
        return false;
    }
    for v in 0..g.n() {
        if colors[v] == 0 || colors[v] > k {
            return false;
        }
        for u in iter_bits(g.neighbors(v)) {
            if colors[u] == colors[v] {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PropagationError {
    #[error("list of vertex {0} is not a singleton")]
    NotForced(usize),
}

/// Per-vertex allowed color sets over the palette [k].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    pub k: usize,
    lists: Vec<u64>,
}

impl ListAssignment {
    /// Every vertex gets the full palette [k].
    pub fn full(n: usize, k: usize) -> ListAssignment {
        assert!(k <= MAX_COLORS);
        ListAssignment { k, lists: vec![palette_mask(k); n] }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> u64 {
        self.lists[v]
    }

    pub fn list_size(&self, v: usize) -> usize {
        self.lists[v].count_ones() as usize
    }

    pub fn colors(&self, v: usize) -> impl Iterator<Item = usize> {
        iter_bits(self.lists[v])
    }

    /// Replace the list of `v` by the given colors.
    pub fn set_list(&mut self, v: usize, colors: &[usize]) {
        let mut m = 0;
        for &c in colors {
            assert!(c >= 1 && c <= self.k);
            m |= 1u64 << c;
        }
        self.lists[v] = m;
    }

    pub fn remove_color(&mut self, v: usize, c: usize) {
        self.lists[v] &= !(1u64 << c);
    }

    /// The forced color of `v` if its list is a singleton.
    pub fn forced(&self, v: usize) -> Option<usize> {
        if self.list_size(v) == 1 {
            Some(self.lists[v].trailing_zeros() as usize)
        } else {
            None
        }
    }
}

fn palette_mask(k: usize) -> u64 {
    ((1u64 << k) - 1) << 1
}

/// Remove the forced color of `v` from the list of every neighbor of `v`.
pub fn propagate_once(g: &Graph, l: &ListAssignment, v: usize) -> Result<ListAssignment, PropagationError> {
    let c = l.forced(v).ok_or(PropagationError::NotForced(v))?;
    let mut out = l.clone();
    for u in iter_bits(g.neighbors(v)) {
        out.remove_color(u, c);
    }
    Ok(out)
}

/// Fixpoint of repeated single propagations: a vertex enters the worklist
/// when its list first becomes a singleton and propagates at most once.
/// On feasible instances the result is independent of the processing
/// order; when a list empties, the cascade past it is order-dependent but
/// every order witnesses the infeasibility. Ties are broken by vertex
/// index for reproducibility.
pub fn propagate_exhaustive(g: &Graph, l: &ListAssignment, v: usize) -> Result<ListAssignment, PropagationError> {
    let priority: Vec<usize> = (0..g.n()).collect();
    propagate_exhaustive_ordered(g, l, v, &priority)
}

/// Same fixpoint, but the worklist is drained in the order given by
/// `priority` (lowest first). Exists so confluence can be exercised.
pub fn propagate_exhaustive_ordered(
    g: &Graph,
    l: &ListAssignment,
    v: usize,
    priority: &[usize],
) -> Result<ListAssignment, PropagationError> {
    if l.forced(v).is_none() {
        return Err(PropagationError::NotForced(v));
    }
    let mut out = l.clone();
    let mut queued = vec![false; g.n()];
    let mut work = vec![v];
    queued[v] = true;
    while !work.is_empty() {
        let i = (0..work.len()).min_by_key(|&i| priority[work[i]]).unwrap();
        let w = work.swap_remove(i);
        let c = match out.forced(w) {
            Some(c) => c,
            // list emptied by an earlier propagation: infeasible state, no
            // color to push further
            None => continue,
        };
        for u in iter_bits(g.neighbors(w)) {
            out.remove_color(u, c);
            if !queued[u] && out.list_size(u) == 1 {
                queued[u] = true;
                work.push(u);
            }
        }
    }
    Ok(out)
}

/// Exact list-coloring: a proper coloring with every color drawn from its
/// vertex list, or None. Empty lists are an ordinary infeasible state.
pub fn solve_list_coloring(g: &Graph, l: &ListAssignment) -> Option<Coloring> {
    assert_eq!(l.n(), g.n());
    let mut lists: Vec<u64> = (0..g.n()).map(|v| l.list(v)).collect();
    let mut colors = vec![0usize; g.n()];
    if solve_rec(g, &mut lists, &mut colors, 0) {
        Some(colors)
    } else {
        None
    }
}

fn solve_rec(g: &Graph, lists: &mut [u64], colors: &mut [usize], done: usize) -> bool {
    if done == g.n() {
        return true;
    }
    // most-constrained uncolored vertex first
    let v = (0..g.n())
        .filter(|&v| colors[v] == 0)
        .min_by_key(|&v| lists[v].count_ones())
        .unwrap();
    let avail = lists[v];
    if avail == 0 {
        return false;
    }
    for c in iter_bits(avail) {
        colors[v] = c;
        let saved: Vec<(usize, u64)> = iter_bits(g.neighbors(v))
            .filter(|&u| colors[u] == 0)
            .map(|u| (u, lists[u]))
            .collect();
        let mut dead = false;
        for &(u, _) in &saved {
            lists[u] &= !(1u64 << c);
            if lists[u] == 0 {
                dead = true;
            }
        }
        if !dead && solve_rec(g, lists, colors, done + 1) {
            return true;
        }
        for &(u, old) in &saved {
            lists[u] = old;
        }
    }
    colors[v] = 0;
    false
}

/// A proper k-coloring of `g`, or None if there is none. Exact.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(vec![]);
    }
    if k == 0 {
        return None;
    }
    let k = k.min(MAX_COLORS);
    let mut colors = vec![0usize; g.n()];
    if dsatur_rec(g, k, &mut colors, 0, 0) {
        Some(colors)
    } else {
        None
    }
}

/// DSATUR-ordered branch and bound: pick the uncolored vertex with the most
/// distinctly colored neighbors, try colors up to one beyond the current
/// maximum (new colors are interchangeable).
fn dsatur_rec(g: &Graph, k: usize, colors: &mut [usize], done: usize, max_used: usize) -> bool {
    if done == g.n() {
        return true;
    }
    let v = (0..g.n())
        .filter(|&v| colors[v] == 0)
        .max_by_key(|&v| {
            let mut sat = 0u64;
            for u in iter_bits(g.neighbors(v)) {
                if colors[u] != 0 {
                    sat |= 1 << colors[u];
                }
            }
            (sat.count_ones(), g.degree(v))
        })
        .unwrap();
    let mut forbidden = 0u64;
    for u in iter_bits(g.neighbors(v)) {
        forbidden |= 1 << colors[u];
    }
    let limit = k.min(max_used + 1);
    for c in 1..=limit {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        if dsatur_rec(g, k, colors, done + 1, max_used.max(c)) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// Exact chromatic number with a witness coloring. The empty graph has
/// chromatic number 0.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    if g.n() == 0 {
        return (0, vec![]);
    }
    let lb = greedy_clique(g).count_ones() as usize;
    for q in lb.max(1).. {
        if let Some(c) = is_k_colorable(g, q) {
            return (q, c);
        }
    }
    unreachable!("every graph is n-colorable")
}

/// A maximal clique grown greedily from each start vertex; lower bound for χ.
fn greedy_clique(g: &Graph) -> u64 {
    let mut best = 0u64;
    for s in 0..g.n() {
        let mut clique = 1u64 << s;
        let mut cands = g.neighbors(s);
        while cands != 0 {
            let v = iter_bits(cands).max_by_key(|&v| (g.neighbors(v) & cands).count_ones()).unwrap();
            clique |= 1 << v;
            cands &= g.neighbors(v);
        }
        if clique.count_ones() > best.count_ones() {
            best = clique;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn path4() -> Graph {
        catalog::path(4)
    }

    /// The worked list assignment on the path w-x-y-z.
    fn path4_lists() -> ListAssignment {
        let mut l = ListAssignment::full(4, 3);
        l.set_list(0, &[1]);
        l.set_list(1, &[1, 2]);
        l.set_list(2, &[2, 3]);
        l.set_list(3, &[1, 2]);
        l
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&catalog::cycle(5)).0, 3);
        assert_eq!(chromatic_number(&catalog::complete(4)).0, 4);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).0, 0);
        let (chi, witness) = chromatic_number(&catalog::graph_g1());
        assert_eq!(chi, 5);
        assert!(is_proper_coloring(&catalog::graph_g1(), &witness, 5));
    }

    #[test]
    fn g1_is_not_4_colorable_but_vertex_deleted_is() {
        let g1 = catalog::graph_g1();
        assert!(is_k_colorable(&g1, 4).is_none());
        for v in 0..g1.n() {
            let h = g1.delete_vertex(v).unwrap();
            let c = is_k_colorable(&h, 4).expect("every G1 - v is 4-colorable");
            assert!(is_proper_coloring(&h, &c, 4));
        }
        assert!(is_k_colorable(&Graph::empty(4).unwrap(), 1).is_some());
    }

    #[test]
    fn single_propagation_matches_the_worked_example() {
        let l2 = propagate_once(&path4(), &path4_lists(), 0).unwrap();
        assert_eq!(l2.colors(1).collect::<Vec<_>>(), vec![2]);
        assert_eq!(l2.colors(2).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(l2.colors(3).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn exhaustive_propagation_matches_the_worked_example() {
        let l2 = propagate_exhaustive(&path4(), &path4_lists(), 0).unwrap();
        assert_eq!(l2.colors(0).collect::<Vec<_>>(), vec![1]);
        assert_eq!(l2.colors(1).collect::<Vec<_>>(), vec![2]);
        assert_eq!(l2.colors(2).collect::<Vec<_>>(), vec![3]);
        assert_eq!(l2.colors(3).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn propagation_requires_a_forced_vertex() {
        assert_eq!(
            propagate_once(&path4(), &path4_lists(), 1),
            Err(PropagationError::NotForced(1))
        );
    }

    #[test]
    fn neighbor_list_may_empty() {
        let k2 = catalog::complete(2);
        let mut l = ListAssignment::full(2, 1);
        l.set_list(0, &[1]);
        l.set_list(1, &[1]);
        let l2 = propagate_once(&k2, &l, 0).unwrap();
        assert_eq!(l2.list_size(1), 0);
        assert!(solve_list_coloring(&k2, &l2).is_none());
    }

    #[test]
    fn forced_triangle_goes_infeasible() {
        let k3 = catalog::complete(3);
        let mut l = ListAssignment::full(3, 2);
        l.set_list(0, &[1]);
        let l2 = propagate_exhaustive(&k3, &l, 0).unwrap();
        assert!((0..3).any(|v| l2.list_size(v) == 0));
    }

    #[test]
    fn list_coloring_solves_the_worked_example() {
        let c = solve_list_coloring(&path4(), &path4_lists()).unwrap();
        assert!(is_proper_coloring(&path4(), &c, 3));
        for v in 0..4 {
            assert!(path4_lists().list(v) >> c[v] & 1 == 1);
        }
    }

    #[test]
    fn empty_list_is_infeasible() {
        let mut l = ListAssignment::full(3, 2);
        l.set_list(1, &[]);
        assert!(solve_list_coloring(&catalog::path(3), &l).is_none());
    }
}
