//! Criticality certification and the structural necessary conditions that
//! vertex-critical graphs satisfy (no clique cutsets, no dominated subsets).

use crate::coloring::{chromatic_number, is_k_colorable, is_proper_coloring, Coloring};
use crate::graph::{iter_bits, subsets_up_to, Graph};
use crate::graph6::emit_graph6;
use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Evidence that a graph is k-vertex-critical: χ(G) = k together with a
/// proper (k-1)-coloring of G - v for every vertex v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityCertificate {
    pub k: usize,
    /// Hash over the graph and the exhaustive χ(G) >= k search outcome.
    pub witness_no_k_minus_1: u64,
    /// `per_vertex[v]` properly colors G - v (deletion-compacted labels)
    /// with at most k-1 colors.
    pub per_vertex: Vec<Coloring>,
}

impl CriticalityCertificate {
    /// Re-verify the certificate with a fresh proper-coloring checker.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.k == 0 || self.per_vertex.len() != g.n() {
            return false;
        }
        if is_k_colorable(g, self.k - 1).is_some() {
            return false;
        }
        for v in 0..g.n() {
            let h = g.delete_vertex(v).unwrap();
            if !is_proper_coloring(&h, &self.per_vertex[v], self.k - 1) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for CriticalityCertificate {
    /// Text block: k, then one line per vertex with the (k-1)-coloring of
    /// G - v in deletion-compacted vertex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k: {}", self.k)?;
        for (v, coloring) in self.per_vertex.iter().enumerate() {
            let cols: Vec<String> = coloring.iter().map(|c| c.to_string()).collect();
            writeln!(f, "{}: {}", v, cols.join(" "))?;
        }
        Ok(())
    }
}

/// Certify that χ(g) = k and every vertex-deleted subgraph is
/// (k-1)-colorable, or report that it is not.
pub fn is_k_vertex_critical(g: &Graph, k: usize) -> Option<CriticalityCertificate> {
    if k == 0 || g.n() == 0 {
        return None;
    }
    if k > 1 && is_k_colorable(g, k - 1).is_some() {
        return None;
    }
    if is_k_colorable(g, k).is_none() {
        return None;
    }
    let mut per_vertex = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let h = g.delete_vertex(v).unwrap();
        per_vertex.push(is_k_colorable(&h, k - 1)?);
    }
    let mut hasher = DefaultHasher::new();
    emit_graph6(g).hash(&mut hasher);
    k.hash(&mut hasher);
    Some(CriticalityCertificate { k, witness_no_k_minus_1: hasher.finish(), per_vertex })
}

/// A clique K with g - K having more components than g, if one exists.
///
/// For a disconnected graph with at least two nonempty components the empty
/// clique is reported (criticality implies connectivity, so generation
/// treats any answer here as disqualifying).
pub fn has_clique_cutset(g: &Graph) -> Option<u64> {
    if g.n() == 0 {
        return None;
    }
    let base = g.components().len();
    if base >= 2 {
        return Some(0);
    }
    // enumerate every nonempty clique and test whether its removal
    // disconnects; fine for the search sizes this crate targets
    let mut found = None;
    let full = g.full_mask();
    let mut try_clique = |clique: u64| -> bool {
        let rest = full & !clique;
        if rest == 0 {
            return false;
        }
        if g.components_within(rest).len() > base {
            found = Some(clique);
            true
        } else {
            false
        }
    };
    fn grow(g: &Graph, clique: u64, cands: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        for v in iter_bits(cands) {
            let next = clique | 1u64 << v;
            if visit(next) {
                return true;
            }
            // only extend with higher-indexed common neighbors so each
            // clique is enumerated once
            let higher = cands & !((1u64 << (v + 1)) - 1);
            if grow(g, next, higher & g.neighbors(v), visit) {
                return true;
            }
        }
        false
    }
    grow(g, 0, full, &mut try_clique);
    found
}

/// Nonadjacent u, v with N(v) ⊆ N(u), if any.
pub fn find_dominated_pair(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in 0..g.n() {
            if u != v && !g.has_edge(u, v) && g.neighbors(v) & !g.neighbors(u) == 0 {
                return Some((u, v));
            }
        }
    }
    None
}

/// Disjoint nonempty X, Y with |X|, |Y| <= max_size that are anticomplete,
/// with χ(G[X]) <= χ(G[Y]) and Y complete to N(X). First hit in
/// lexicographic order; None means none within the bound only.
pub fn find_dominated_subsets(g: &Graph, max_size: usize) -> Option<(u64, u64)> {
    assert!(max_size >= 1);
    let full = g.full_mask();
    for x in subsets_up_to(full, max_size) {
        let nx = g.neighborhood_of_set(x);
        let chi_x = chromatic_number(&g.induced(x)).0;
        // Y must avoid X, its neighborhood (anticompleteness), and be
        // complete to N(X)
        let y_universe = full & !x & !nx;
        for y in subsets_up_to(y_universe, max_size) {
            let complete_to_nx = iter_bits(y).all(|w| nx & !g.neighbors(w) == 0);
            if !complete_to_nx {
                continue;
            }
            if chi_x <= chromatic_number(&g.induced(y)).0 {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn odd_cycle_and_wheel_criticality() {
        let cert = is_k_vertex_critical(&catalog::cycle(5), 3).unwrap();
        assert!(cert.verify(&catalog::cycle(5)));
        assert!(is_k_vertex_critical(&catalog::wheel(5), 4).is_some());
        // χ(C6) = 2, so it is not 3-vertex-critical
        assert!(is_k_vertex_critical(&catalog::cycle(6), 3).is_none());
    }

    #[test]
    fn golden_graphs_certify() {
        for (g, name) in [(catalog::graph_g1(), "G1"), (catalog::graph_g2(), "G2")] {
            let cert = is_k_vertex_critical(&g, 5).unwrap_or_else(|| panic!("{name} not critical"));
            assert!(cert.verify(&g), "{name} certificate re-check");
        }
    }

    #[test]
    fn certificate_text_round_trips_visually() {
        let cert = is_k_vertex_critical(&catalog::cycle(5), 3).unwrap();
        let text = cert.to_string();
        assert!(text.starts_with("k: 3\n"));
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn clique_cutsets() {
        let p3 = catalog::path(3);
        let cut = has_clique_cutset(&p3).unwrap();
        assert_eq!(cut, 0b010);
        assert!(has_clique_cutset(&catalog::cycle(5)).is_none());
        assert!(has_clique_cutset(&catalog::graph_g2()).is_none());
        // disconnected: empty clique reported
        let two = catalog::complete(2).disjoint_union(&catalog::complete(2)).unwrap();
        assert_eq!(has_clique_cutset(&two), Some(0));
    }

    #[test]
    fn dominated_pairs() {
        let p3 = catalog::path(3);
        let (u, v) = find_dominated_pair(&p3).unwrap();
        assert!(matches!((u, v), (0, 2) | (2, 0)));
        assert!(find_dominated_pair(&catalog::cycle(5)).is_none());
        assert!(find_dominated_pair(&catalog::graph_g1()).is_none());
    }

    #[test]
    fn dominated_subsets() {
        let p3 = catalog::path(3);
        let (x, y) = find_dominated_subsets(&p3, 1).unwrap();
        assert_eq!((x | y), 0b101);
        // two disjoint edges: N(X) is empty, completeness is vacuous
        let two = catalog::complete(2).disjoint_union(&catalog::complete(2)).unwrap();
        let (x, y) = find_dominated_subsets(&two, 2).unwrap();
        assert!(two.is_clique(x) && two.is_clique(y));
        assert!(find_dominated_subsets(&catalog::graph_g2(), 2).is_none());
        assert!(find_dominated_subsets(&catalog::cycle(5), 2).is_none());
    }
}
