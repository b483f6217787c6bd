//! Canonical forms for isomorph rejection.
//!
//! Canonicalization is iterated degree/neighborhood refinement followed by
//! backtracking over the remaining choices, selecting the lexicographically
//! least upper-triangle adjacency bit string. The key is the graph6 line of
//! the canonically relabeled graph, so dedup stores, output listings, and
//! fixtures share one representation.

use crate::graph::{iter_bits, Graph};
use crate::graph6::emit_graph6;
use std::collections::HashSet;
use std::sync::Mutex;

/// A byte string equal across relabelings of a graph and distinct for
/// non-isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub String);

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The canonically relabeled copy of `g` and its key.
pub fn canonical_graph(g: &Graph) -> Graph {
    let perm = canonical_permutation(g);
    g.permute(&perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalKey {
    CanonicalKey(emit_graph6(&canonical_graph(g)))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// Permutation (old -> new) that minimizes the relabeled adjacency string.
fn canonical_permutation(g: &Graph) -> Vec<usize> {
    if g.n() <= 1 {
        return vec![0; g.n()];
    }
    let cells = refine(g, initial_partition(g));
    let mut best: Option<Vec<u8>> = None;
    let mut best_order = Vec::new();
    search(g, &cells, &mut best, &mut best_order);
    let mut perm = vec![0usize; g.n()];
    for (new, &old) in best_order.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

/// Upper-triangle adjacency bits of `g` relabeled by the placed prefix
/// `order`, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ... Placing more
/// vertices only appends bits, so prefixes compare soundly.
fn triangle_bits(g: &Graph, order: &[usize]) -> Vec<u8> {
    let p = order.len();
    let mut bits = Vec::with_capacity(p * (p.max(1) - 1) / 2);
    for j in 1..p {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]) as u8);
        }
    }
    bits
}

/// Ordered partition of the vertices; each cell is a bitset.
type Partition = Vec<u64>;

fn initial_partition(g: &Graph) -> Partition {
    vec![g.full_mask()]
}

/// Equitable refinement: split cells by the vector of neighbor counts into
/// every cell, iterating to a fixpoint. Cell order is kept deterministic.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let mut changed = false;
        let snapshot = cells.clone();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for &cell in &cells {
            if cell.count_ones() <= 1 {
                next.push(cell);
                continue;
            }
            // signature of v: neighbor count into each current cell
            let mut sigs: Vec<(Vec<u32>, usize)> = iter_bits(cell)
                .map(|v| {
                    let sig = snapshot.iter().map(|&c| (g.neighbors(v) & c).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            sigs.sort();
            let mut parts = 0usize;
            let mut cur_sig = &sigs[0].0;
            let mut cur = 0u64;
            for (sig, v) in &sigs {
                if sig != cur_sig {
                    next.push(cur);
                    parts += 1;
                    cur = 0;
                    cur_sig = sig;
                }
                cur |= 1u64 << v;
            }
            next.push(cur);
            parts += 1;
            if parts > 1 {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// True when every permutation of `cell` extends to an automorphism fixing
/// all other vertices: identical neighborhoods outside the cell, and the
/// cell induces a clique or an independent set. Such cells contribute a
/// single branch to the canonical search.
fn interchangeable(g: &Graph, cell: u64) -> bool {
    let mut vs = iter_bits(cell);
    let first = match vs.next() {
        Some(v) => v,
        None => return true,
    };
    let outside = g.neighbors(first) & !cell;
    if !iter_bits(cell).skip(1).all(|v| g.neighbors(v) & !cell == outside) {
        return false;
    }
    g.is_clique(cell) || g.is_independent(cell)
}

/// Individualization-refinement search over the remaining choices. The
/// placed prefix of the labeling (new label -> old vertex) is exactly the
/// run of leading singleton cells of the current partition.
fn search(g: &Graph, cells: &Partition, best: &mut Option<Vec<u8>>, best_order: &mut Vec<usize>) {
    let mut order = Vec::with_capacity(g.n());
    let mut split_at = None;
    for (i, &cell) in cells.iter().enumerate() {
        if cell.count_ones() == 1 {
            order.push(cell.trailing_zeros() as usize);
        } else {
            split_at = Some(i);
            break;
        }
    }

    // bound: a prefix already lexicographically above the incumbent cannot
    // lead to a smaller leaf
    if let Some(b) = best {
        let partial = triangle_bits(g, &order);
        if partial.as_slice() > &b[..partial.len()] {
            return;
        }
    }

    match split_at {
        None => {
            debug_assert_eq!(order.len(), g.n());
            let cand = triangle_bits(g, &order);
            let better = match best {
                None => true,
                Some(b) => cand < *b,
            };
            if better {
                *best = Some(cand);
                *best_order = order;
            }
        }
        Some(i) => {
            let cell = cells[i];
            let branch_once = interchangeable(g, cell);
            for v in iter_bits(cell) {
                let mut split: Partition = cells[..i].to_vec();
                split.push(1u64 << v);
                split.push(cell & !(1u64 << v));
                split.extend_from_slice(&cells[i + 1..]);
                let refined = refine(g, split);
                search(g, &refined, best, best_order);
                if branch_once {
                    break;
                }
            }
        }
    }
}

/// Concurrent check-and-insert store of canonical keys.
#[derive(Default)]
pub struct KeyStore {
    inner: Mutex<HashSet<CanonicalKey>>,
}

impl KeyStore {
    pub fn new() -> KeyStore {
        KeyStore::default()
    }

    /// Atomically: was the key present before, ensuring it is afterwards.
    pub fn seen_before(&self, key: &CanonicalKey) -> bool {
        !self.inner.lock().unwrap().insert(key.clone())
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn relabelings_share_a_key() {
        let c5 = catalog::cycle(5);
        let relabeled = c5.permute(&[2, 4, 1, 3, 0]);
        assert_eq!(canonical_form(&c5), canonical_form(&relabeled));
        assert!(are_isomorphic(&c5, &relabeled));
    }

    #[test]
    fn distinct_graphs_get_distinct_keys() {
        assert_ne!(canonical_form(&catalog::cycle(5)), canonical_form(&catalog::path(5)));
        assert!(!are_isomorphic(&catalog::paw(), &catalog::claw()));
        assert!(are_isomorphic(&catalog::complete(3), &catalog::cycle(3)));
    }

    #[test]
    fn p4_is_self_complementary() {
        let p4 = catalog::path(4);
        assert!(are_isomorphic(&p4.complement(), &p4));
    }

    #[test]
    fn highly_symmetric_graphs_are_fast_enough() {
        // empty and complete graphs drive the search through maximal cells
        let empty = Graph::empty(14).unwrap();
        assert_eq!(canonical_form(&empty).0.len(), emit_graph6(&empty).len());
        let k10 = catalog::complete(10);
        assert_eq!(canonical_form(&k10), CanonicalKey(emit_graph6(&k10)));
    }

    #[test]
    fn keystore_check_and_insert() {
        let store = KeyStore::new();
        let k1 = canonical_form(&catalog::cycle(5));
        let k2 = canonical_form(&catalog::path(5));
        assert!(!store.seen_before(&k1));
        assert!(store.seen_before(&k1));
        assert!(!store.seen_before(&k2));
        assert_eq!(store.len(), 2);
    }
}
