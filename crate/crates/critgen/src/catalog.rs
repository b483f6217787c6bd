//! Fixed graphs referred to by name throughout the crate and the CLI.

use crate::graph::Graph;

pub fn path(t: usize) -> Graph {
    let edges: Vec<_> = (1..t).map(|i| (i - 1, i)).collect();
    Graph::from_edges(t, &edges).unwrap()
}

pub fn cycle(s: usize) -> Graph {
    assert!(s >= 3);
    let mut edges: Vec<_> = (1..s).map(|i| (i - 1, i)).collect();
    edges.push((s - 1, 0));
    Graph::from_edges(s, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// The s-wheel: C_s plus a universal vertex (the hub is the last vertex).
pub fn wheel(s: usize) -> Graph {
    cycle(s).add_universal_vertices(1).unwrap()
}

/// 5-hole 0-1-2-3-4 plus vertex 5 adjacent to {1,2,3,4}; the nonneighbor of
/// the extra vertex is hole vertex 0.
pub fn graph_f() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 1), (5, 2), (5, 3), (5, 4)],
    )
    .unwrap()
}

pub fn diamond() -> Graph {
    // K4 minus the edge 0-1
    Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn paw() -> Graph {
    // triangle 0-1-2 plus pendant 3 on 0
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
}

pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

pub fn antihole7() -> Graph {
    cycle(7).complement()
}

/// The 13-vertex 5-vertex-critical (P5,K4)-free graph: two disjoint 5-holes
/// {3..7} and {0,1,2,8,9}, vertex 12 complete to both holes, 11 complete to
/// the first hole, 10 complete to the second, with 10 adjacent to 11.
pub fn graph_g1() -> Graph {
    Graph::from_edges(
        13,
        &[
            (0, 1), (0, 2), (0, 10), (0, 12),
            (1, 8), (1, 10), (1, 12),
            (2, 9), (2, 10), (2, 12),
            (3, 4), (3, 5), (3, 11), (3, 12),
            (4, 6), (4, 11), (4, 12),
            (5, 7), (5, 11), (5, 12),
            (6, 7), (6, 11), (6, 12),
            (7, 11), (7, 12),
            (8, 9), (8, 10), (8, 12),
            (9, 10), (9, 12),
            (10, 11),
        ],
    )
    .unwrap()
}

/// The 14-vertex 5-vertex-critical (P5,K4)-free graph: a 5-hole {0..4}
/// complete to the nonadjacent cutset {12,13}, whose removal leaves a second
/// component on {5..11}.
pub fn graph_g2() -> Graph {
    Graph::from_edges(
        14,
        &[
            (0, 1), (0, 2), (0, 12), (0, 13),
            (1, 3), (1, 12), (1, 13),
            (2, 4), (2, 12), (2, 13),
            (3, 4), (3, 12), (3, 13),
            (4, 12), (4, 13),
            (5, 6), (5, 7), (5, 9), (5, 11), (5, 12),
            (6, 8), (6, 10), (6, 11), (6, 13),
            (7, 8), (7, 9), (7, 11), (7, 13),
            (8, 10), (8, 11), (8, 12),
            (9, 10), (9, 12), (9, 13),
            (10, 12), (10, 13),
            (11, 12), (11, 13),
        ],
    )
    .unwrap()
}

/// Resolve a catalog name. `P<t>`, `C<s>` (s >= 3) and `K<n>` are accepted
/// generically; the remaining names are fixed graphs. Case sensitive.
pub fn by_name(name: &str) -> Option<Graph> {
    match name {
        "2P2" => return path(2).disjoint_union(&path(2)).ok(),
        "P2+2P1" => return path(2).disjoint_union(&path(1)).unwrap().disjoint_union(&path(1)).ok(),
        "P1+P3" => return path(1).disjoint_union(&path(3)).ok(),
        "P1+K3" => return path(1).disjoint_union(&complete(3)).ok(),
        "4P1" => return Graph::empty(4).ok(),
        "diamond" => return Some(diamond()),
        "paw" => return Some(paw()),
        "claw" => return Some(claw()),
        "W5" => return Some(wheel(5)),
        "F" => return Some(graph_f()),
        "C7bar" => return Some(antihole7()),
        "G1" => return Some(graph_g1()),
        "G2" => return Some(graph_g2()),
        _ => {}
    }
    if !name.is_char_boundary(1) || name.len() < 2 {
        return None;
    }
    let (kind, num) = name.split_at(1);
    let num: usize = num.parse().ok()?;
    if num == 0 || num > crate::graph::MAX_VERTICES {
        return None;
    }
    match kind {
        "P" => Some(path(num)),
        "C" if num >= 3 => Some(cycle(num)),
        "K" => Some(complete(num)),
        _ => None,
    }
}
