//! Exhaustive induced-subgraph search.

use crate::graph::{iter_bits, Graph};

/// An injective map from V(H) into V(G) witnessing an induced copy of H:
/// `image[u]` is the G-vertex playing the role of H-vertex `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub image: Vec<usize>,
}

impl Embedding {
    /// Re-verify the embedding against the definition.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        if self.image.len() != h.n() {
            return false;
        }
        let mut seen = 0u64;
        for &x in &self.image {
            if x >= g.n() || seen >> x & 1 == 1 {
                return false;
            }
            seen |= 1 << x;
        }
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                if h.has_edge(u, v) != g.has_edge(self.image[u], self.image[v]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Search for an induced copy of `h` in `g`. Exhaustive backtracking with
/// degree and neighborhood pruning; returns the first embedding found.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Embedding> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(Embedding { image: vec![] });
    }
    // Order the pattern vertices so each (after the first) touches as many
    // already-placed vertices as possible.
    let order = connect_order(h);
    let mut image = vec![usize::MAX; h.n()];
    if place(g, h, &order, 0, &mut image, 0) {
        Some(Embedding { image })
    } else {
        None
    }
}

fn connect_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = 0u64;
    for _ in 0..h.n() {
        let best = (0..h.n())
            .filter(|v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((h.neighbors(v) & placed).count_ones(), h.degree(v)))
            .unwrap();
        order.push(best);
        placed |= 1 << best;
    }
    order
}

fn place(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let hdeg = h.degree(hv);
    // candidates must agree with every placed pattern vertex
    let mut cands = g.full_mask() & !used;
    for &hu in &order[..depth] {
        let gu = image[hu];
        if h.has_edge(hv, hu) {
            cands &= g.neighbors(gu);
        } else {
            cands &= !g.neighbors(gu);
        }
        if cands == 0 {
            return false;
        }
    }
    for gv in iter_bits(cands) {
        if g.degree(gv) < hdeg {
            continue;
        }
        image[hv] = gv;
        if place(g, h, order, depth + 1, image, used | 1 << gv) {
            return true;
        }
    }
    image[hv] = usize::MAX;
    false
}

/// True iff `g` contains no induced copy of any member of `forbidden`.
pub fn is_free(g: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|h| find_induced(g, h).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn c5_has_no_induced_p5() {
        assert!(find_induced(&catalog::cycle(5), &catalog::path(5)).is_none());
    }

    #[test]
    fn p5_in_itself_is_found() {
        let p5 = catalog::path(5);
        let emb = find_induced(&p5, &p5).unwrap();
        assert!(emb.verify(&p5, &p5));
    }

    #[test]
    fn g1_contains_w5_but_not_k4() {
        let g1 = catalog::graph_g1();
        let emb = find_induced(&g1, &catalog::wheel(5)).unwrap();
        assert!(emb.verify(&g1, &catalog::wheel(5)));
        assert!(find_induced(&g1, &catalog::complete(4)).is_none());
    }

    #[test]
    fn freeness_over_sets() {
        let g2 = catalog::graph_g2();
        assert!(is_free(&g2, &[catalog::path(5), catalog::complete(4)]));
        assert!(!is_free(&g2, &[catalog::graph_f()]));
        assert!(!is_free(&catalog::complete(3), &[catalog::complete(3)]));
    }

    #[test]
    fn pattern_larger_than_host_is_absent() {
        assert!(find_induced(&catalog::path(3), &catalog::path(4)).is_none());
    }
}
