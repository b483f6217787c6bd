//! Recursive exhaustive generation of k-vertex-critical H-free graphs by
//! 1-vertex extensions with pruning.
//!
//! The search expands a graph G (depth-first) into every graph G + w where
//! the new vertex w takes each of the 2^|V(G)| candidate neighborhoods in
//! increasing numeric order. A candidate survives the pruning pipeline
//! R1-R5 before being visited:
//!
//!   R1  not H-free;
//!   R2  already generated (canonical dedup);
//!   R3  the parent has nonadjacent u, v with N(u) ⊆ N(v) and w fails to
//!       resolve the pair (w must be adjacent to u and not to v);
//!   R4  not (k-1)-colorable and contains a clique cutset — such a graph
//!       can be neither extended nor critical;
//!   R5  the parent has a dominated size-<=2 configuration and w fails to
//!       break it; two forms: anticomplete subsets X, Y with Y complete to
//!       N(X) and χ(G[X]) <= χ(G[Y]) (breaker: adjacent to X, not complete
//!       to Y), and disjoint edges ab, cd with N(a)∖{b} ⊆ N(c) and
//!       N(b)∖{a} ⊆ N(d) (breaker: in N(a)∖N(c) or N(b)∖N(d); such a
//!       graph is never critical — color a like c and b like d);
//!   R6  the parent has a vertex of degree < k-1 and w is not adjacent to
//!       the first such vertex (critical graphs have min degree >= k-1).
//!
//! R3, R5 and R6 are resolution rules: a critical supergraph of the parent
//! contains a vertex breaking the configuration, and extension chains can
//! be reordered to add a breaker first, so restricting the next vertex to
//! breakers loses no critical graph (given R2 dedup). Only one
//! configuration per parent is enforced — requiring one vertex to break
//! two configurations at once would be incomplete.
//!
//! Visited graphs with χ < k recurse; graphs with χ >= k are tested for
//! criticality and reported.

use crate::canon::{canonical_form, CanonicalKey, KeyStore};
use crate::criticality::{
    find_dominated_pair, find_dominated_subsets, has_clique_cutset, is_k_vertex_critical,
    CriticalityCertificate,
};
use crate::coloring::is_k_colorable;
use crate::graph::{Graph, MAX_VERTICES};
use crate::induced::is_free;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone)]
pub struct GenerationConfig {
    /// Target criticality k.
    pub k: usize,
    /// Forbidden induced subgraphs H.
    pub forbidden: Vec<Graph>,
    /// Seed graph S; every reported graph contains it.
    pub seed: Graph,
    /// Cap on the order of expanded graphs.
    pub max_vertices: usize,
    /// Wall-clock budget.
    pub time_budget: Duration,
    /// Worker threads for frontier expansion.
    pub worker_count: usize,
    /// Per-rule switches for R1..R5 (R1/R2 should stay on; switching them
    /// off exists for ablation experiments only).
    pub prune_flags: PruneFlags,
}

impl GenerationConfig {
    pub fn new(k: usize, forbidden: Vec<Graph>, seed: Graph) -> GenerationConfig {
        GenerationConfig {
            k,
            forbidden,
            seed,
            max_vertices: 20,
            time_budget: Duration::from_secs(600),
            worker_count: 1,
            prune_flags: PruneFlags::default(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PruneFlags {
    pub r1_forbidden: bool,
    pub r2_seen: bool,
    pub r3_dominated_pair: bool,
    pub r4_clique_cutset: bool,
    pub r5_dominated_subsets: bool,
    pub r6_min_degree: bool,
}

impl Default for PruneFlags {
    fn default() -> Self {
        PruneFlags {
            r1_forbidden: true,
            r2_seen: true,
            r3_dominated_pair: true,
            r4_clique_cutset: true,
            r5_dominated_subsets: true,
            r6_min_degree: true,
        }
    }
}

impl PruneFlags {
    /// Only the two rules forced by the extension algorithm itself.
    pub fn minimal() -> Self {
        PruneFlags {
            r1_forbidden: true,
            r2_seen: true,
            r3_dominated_pair: false,
            r4_clique_cutset: false,
            r5_dominated_subsets: false,
            r6_min_degree: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneRule {
    R1Forbidden,
    R2Seen,
    R3DominatedPair,
    R4CliqueCutset,
    R5DominatedSubsets,
    R6MinDegree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneOutcome {
    Keep,
    Reject(PruneRule),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerationStatus {
    Completed,
    VertexCapHit,
    TimeCapHit,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerationError {
    #[error("seed graph contains a forbidden induced subgraph")]
    SeedNotFree,
    #[error("k must be at least 1")]
    BadK,
}

#[derive(Debug, Default, Clone)]
pub struct GenerationStats {
    pub nodes_expanded: u64,
    pub extensions_tried: u64,
    pub pruned_r1: u64,
    pub pruned_r2: u64,
    pub pruned_r3: u64,
    pub pruned_r4: u64,
    pub pruned_r5: u64,
    pub pruned_r6: u64,
}

#[derive(Debug)]
pub struct FoundGraph {
    pub key: CanonicalKey,
    pub graph: Graph,
    pub certificate: CriticalityCertificate,
}

#[derive(Debug)]
pub struct GenerationReport {
    pub status: GenerationStatus,
    /// Certified critical graphs, sorted by canonical key.
    pub found: Vec<FoundGraph>,
    pub stats: GenerationStats,
}

impl GenerationReport {
    /// Sorted canonical graph6 lines plus count and status. Byte-identical
    /// across runs and worker counts; work counters live in
    /// [`GenerationReport::stats_block`] because races over who rejects a
    /// shared duplicate make them nondeterministic under parallelism.
    pub fn listing(&self) -> String {
        let mut out = String::new();
        for f in &self.found {
            out.push_str(&f.key.0);
            out.push('\n');
        }
        out.push_str(&format!("count: {}\n", self.found.len()));
        out.push_str(&format!(
            "status: {}\n",
            match self.status {
                GenerationStatus::Completed => "completed",
                GenerationStatus::VertexCapHit => "vertex_cap_hit",
                GenerationStatus::TimeCapHit => "time_cap_hit",
            }
        ));
        out
    }

    /// Diagnostic work counters (nondeterministic under parallelism).
    pub fn stats_block(&self) -> String {
        let s = &self.stats;
        format!(
            "nodes expanded: {}\nextensions tried: {}\npruned: r1={} r2={} r3={} r4={} r5={} r6={}\n",
            s.nodes_expanded,
            s.extensions_tried,
            s.pruned_r1,
            s.pruned_r2,
            s.pruned_r3,
            s.pruned_r4,
            s.pruned_r5,
            s.pruned_r6
        )
    }
}

/// All 1-vertex extensions of `g`: one new vertex per subset of V(g), in
/// increasing numeric order of the neighborhood bitset.
pub fn one_vertex_extensions(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    assert!(g.n() < MAX_VERTICES);
    (0..=g.full_mask()).map(|mask| g.extend_with(mask).unwrap())
}

struct Shared<'a> {
    cfg: &'a GenerationConfig,
    seen: KeyStore,
    found: Mutex<Vec<FoundGraph>>,
    deadline: Instant,
    timed_out: AtomicBool,
    capped: AtomicBool,
    nodes_expanded: AtomicU64,
    extensions_tried: AtomicU64,
    pruned: [AtomicU64; 6],
}

/// A requirement on the next vertex's neighborhood: a disjunction of
/// clauses (x, y), each satisfied when the neighborhood meets x and, for
/// nonzero y, misses at least one vertex of y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Constraint {
    clauses: [(u64, u64); 2],
    rule: PruneRule,
}

impl Constraint {
    fn one(x: u64, y: u64, rule: PruneRule) -> Constraint {
        Constraint { clauses: [(x, y), (0, 0)], rule }
    }

    fn satisfied_by(&self, neighborhood: u64) -> bool {
        self.clauses
            .iter()
            .any(|&(x, y)| neighborhood & x != 0 && (y == 0 || y & !neighborhood != 0))
    }
}

/// Disjoint edges ab, cd with N(a)∖{b} ⊆ N(c) and N(b)∖{a} ⊆ N(d). Such a
/// graph cannot be k-vertex-critical: a (k-1)-coloring of G - {a, b}
/// extends by coloring a like c and b like d (the inclusions force a≁c and
/// b≁d). The breaker clause: a neighbor of a missing c, or of b missing d.
fn find_dominated_edges(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let edges = g.edges();
    for &(a, b) in &edges {
        for &(e, f) in &edges {
            if (1u64 << a | 1 << b) & (1u64 << e | 1 << f) != 0 {
                continue;
            }
            for (c, d) in [(e, f), (f, e)] {
                let na = g.neighbors(a) & !(1u64 << b);
                let nb = g.neighbors(b) & !(1u64 << a);
                if na & !g.neighbors(c) == 0 && nb & !g.neighbors(d) == 0 {
                    return Some((a, b, c, d));
                }
            }
        }
    }
    None
}

/// The single dominated configuration of `parent` that the next vertex is
/// required to break, if any. A dominated pair gives the R3 form; next the
/// two R5 forms (anticomplete subsets, then componentwise edge
/// domination); last the R6 minimum-degree requirement.
fn active_constraint(parent: &Graph, k: usize, flags: &PruneFlags) -> Option<Constraint> {
    if flags.r3_dominated_pair {
        // (u, v) with N(v) ⊆ N(u): the breaker is adjacent to the
        // dominated vertex v and not to the dominating vertex u
        if let Some((u, v)) = find_dominated_pair(parent) {
            return Some(Constraint::one(1u64 << v, 1u64 << u, PruneRule::R3DominatedPair));
        }
    }
    if flags.r5_dominated_subsets {
        if let Some((x, y)) = find_dominated_subsets(parent, 2) {
            return Some(Constraint::one(x, y, PruneRule::R5DominatedSubsets));
        }
        if let Some((a, b, c, d)) = find_dominated_edges(parent) {
            return Some(Constraint {
                clauses: [(1u64 << a, 1 << c), (1u64 << b, 1 << d)],
                rule: PruneRule::R5DominatedSubsets,
            });
        }
    }
    if flags.r6_min_degree {
        if let Some(v) = (0..parent.n()).find(|&v| parent.degree(v) < k - 1) {
            return Some(Constraint::one(1u64 << v, 0, PruneRule::R6MinDegree));
        }
    }
    None
}

/// Standalone pruning decision for a freshly built 1-vertex extension, per
/// the pipeline above. The parent is the extension minus its last vertex.
/// R3/R5 run before R2 because the dedup store must only record graphs
/// that are actually kept; R2 check-and-inserts into `seen`.
pub fn prune(g_ext: &Graph, cfg: &GenerationConfig, seen: &KeyStore) -> PruneOutcome {
    let flags = &cfg.prune_flags;
    if flags.r1_forbidden && !is_free(g_ext, &cfg.forbidden) {
        return PruneOutcome::Reject(PruneRule::R1Forbidden);
    }
    let w = g_ext.n() - 1;
    let parent = g_ext.delete_vertex(w).unwrap();
    if let Some(c) = active_constraint(&parent, cfg.k, flags) {
        if !c.satisfied_by(g_ext.neighbors(w)) {
            return PruneOutcome::Reject(c.rule);
        }
    }
    if flags.r2_seen && seen.seen_before(&canonical_form(g_ext)) {
        return PruneOutcome::Reject(PruneRule::R2Seen);
    }
    if let Some(rule) = prune_r4(g_ext, cfg, None) {
        return PruneOutcome::Reject(rule);
    }
    PruneOutcome::Keep
}

/// R4: a graph that is not (k-1)-colorable can only matter as a critical
/// graph itself (it is never extended), and the clique-cutset lemma rules
/// criticality out. `k1_colorable` is passed when the caller already knows.
fn prune_r4(g_ext: &Graph, cfg: &GenerationConfig, k1_colorable: Option<bool>) -> Option<PruneRule> {
    if !cfg.prune_flags.r4_clique_cutset {
        return None;
    }
    let colorable =
        k1_colorable.unwrap_or_else(|| is_k_colorable(g_ext, cfg.k - 1).is_some());
    if colorable {
        return None;
    }
    if has_clique_cutset(g_ext).is_some() {
        return Some(PruneRule::R4CliqueCutset);
    }
    None
}

/// Run the generation. When the status is Completed, `found` is the set of
/// all k-vertex-critical H-free graphs containing the seed, up to
/// isomorphism (soundness unconditional, completeness per the termination
/// theorem of the underlying algorithm).
pub fn generate(cfg: &GenerationConfig) -> Result<GenerationReport, GenerationError> {
    if cfg.k == 0 {
        return Err(GenerationError::BadK);
    }
    if !is_free(&cfg.seed, &cfg.forbidden) {
        return Err(GenerationError::SeedNotFree);
    }
    let shared = Shared {
        cfg,
        seen: KeyStore::new(),
        found: Mutex::new(Vec::new()),
        deadline: Instant::now() + cfg.time_budget,
        timed_out: AtomicBool::new(false),
        capped: AtomicBool::new(false),
        nodes_expanded: AtomicU64::new(0),
        extensions_tried: AtomicU64::new(0),
        pruned: Default::default(),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.worker_count.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        shared.seen.seen_before(&canonical_form(&cfg.seed));
        visit(&shared, cfg.seed.clone());
    });

    let status = if shared.timed_out.load(Ordering::Relaxed) {
        GenerationStatus::TimeCapHit
    } else if shared.capped.load(Ordering::Relaxed) {
        GenerationStatus::VertexCapHit
    } else {
        GenerationStatus::Completed
    };
    let mut found = shared.found.into_inner().unwrap();
    found.sort_by(|a, b| a.key.cmp(&b.key));
    let p = &shared.pruned;
    Ok(GenerationReport {
        status,
        found,
        stats: GenerationStats {
            nodes_expanded: shared.nodes_expanded.load(Ordering::Relaxed),
            extensions_tried: shared.extensions_tried.load(Ordering::Relaxed),
            pruned_r1: p[0].load(Ordering::Relaxed),
            pruned_r2: p[1].load(Ordering::Relaxed),
            pruned_r3: p[2].load(Ordering::Relaxed),
            pruned_r4: p[3].load(Ordering::Relaxed),
            pruned_r5: p[4].load(Ordering::Relaxed),
            pruned_r6: p[5].load(Ordering::Relaxed),
        },
    })
}

/// Visit a deduplicated H-free graph: report it if critical, else expand
/// its surviving 1-vertex extensions.
fn visit(shared: &Shared<'_>, g: Graph) {
    let cfg = shared.cfg;
    if Instant::now() >= shared.deadline {
        shared.timed_out.store(true, Ordering::Relaxed);
        return;
    }
    let k1_colorable = is_k_colorable(&g, cfg.k - 1).is_some();
    if !k1_colorable {
        // χ(g) >= k: a leaf; check criticality (R4 is a cheap refutation
        // ahead of the per-vertex colorings)
        if prune_r4(&g, cfg, Some(false)).is_none() {
            if let Some(cert) = is_k_vertex_critical(&g, cfg.k) {
                let key = canonical_form(&g);
                shared.found.lock().unwrap().push(FoundGraph { key, graph: g, certificate: cert });
            }
        }
        return;
    }
    if g.n() >= cfg.max_vertices {
        shared.capped.store(true, Ordering::Relaxed);
        return;
    }
    shared.nodes_expanded.fetch_add(1, Ordering::Relaxed);

    // the R3/R5/R6 constraint comes from this node, shared by candidates
    let constraint = active_constraint(&g, cfg.k, &cfg.prune_flags);

    let expand_child = |mask: u64| {
        if shared.timed_out.load(Ordering::Relaxed) {
            return;
        }
        shared.extensions_tried.fetch_add(1, Ordering::Relaxed);
        if let Some(c) = constraint {
            if !c.satisfied_by(mask) {
                let slot = match c.rule {
                    PruneRule::R3DominatedPair => 2,
                    PruneRule::R6MinDegree => 5,
                    _ => 4,
                };
                shared.pruned[slot].fetch_add(1, Ordering::Relaxed);
                return;
            }
        }
        let child = g.extend_with(mask).unwrap();
        if cfg.prune_flags.r1_forbidden && !is_free(&child, &cfg.forbidden) {
            shared.pruned[0].fetch_add(1, Ordering::Relaxed);
            return;
        }
        if cfg.prune_flags.r2_seen && shared.seen.seen_before(&canonical_form(&child)) {
            shared.pruned[1].fetch_add(1, Ordering::Relaxed);
            return;
        }
        visit(shared, child);
    };

    if cfg.worker_count > 1 {
        rayon::scope(|s| {
            for mask in 0..=g.full_mask() {
                s.spawn(move |_| expand_child(mask));
            }
        });
    } else {
        for mask in 0..=g.full_mask() {
            expand_child(mask);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn extension_counts() {
        let k1 = catalog::complete(1);
        assert_eq!(one_vertex_extensions(&k1).count(), 2);
        let k2 = catalog::complete(2);
        let exts: Vec<Graph> = one_vertex_extensions(&k2).collect();
        assert_eq!(exts.len(), 4);
        let keys: std::collections::HashSet<_> =
            exts.iter().map(crate::canon::canonical_form).collect();
        assert_eq!(keys.len(), 3); // P1+K2, P3, K3
        assert_eq!(one_vertex_extensions(&catalog::cycle(5)).count(), 32);
    }

    #[test]
    fn prune_rejects_in_order() {
        let cfg = GenerationConfig::new(5, vec![catalog::path(5), catalog::complete(4)], catalog::cycle(5));
        let seen = KeyStore::new();
        // C5 + isolated vertex contains an induced P5? no; but C5 + vertex
        // adjacent to one cycle vertex does
        let c5 = catalog::cycle(5);
        let pendant = c5.extend_with(0b00001).unwrap();
        assert_eq!(prune(&pendant, &cfg, &seen), PruneOutcome::Reject(PruneRule::R1Forbidden));
        // R6 requires adjacency to vertex 0 here (deg 2 < k-1 = 4)
        let skips_zero = c5.extend_with(0b01010).unwrap();
        assert_eq!(prune(&skips_zero, &cfg, &seen), PruneOutcome::Reject(PruneRule::R6MinDegree));
        // duplicates are rejected by R2
        let chord_free = c5.extend_with(0b00101).unwrap();
        assert_eq!(prune(&chord_free, &cfg, &seen), PruneOutcome::Keep);
        let again = c5.extend_with(0b01001).unwrap(); // isomorphic image
        assert_eq!(prune(&again, &cfg, &seen), PruneOutcome::Reject(PruneRule::R2Seen));
    }

    #[test]
    fn prune_r3_on_p3_parent() {
        // parent P3 has the dominated pair of its two ends; an extension
        // adjacent to neither end fails R3
        let cfg = GenerationConfig::new(3, vec![], catalog::path(3));
        let seen = KeyStore::new();
        let p3 = catalog::path(3);
        let bad = p3.extend_with(0b010).unwrap();
        assert_eq!(prune(&bad, &cfg, &seen), PruneOutcome::Reject(PruneRule::R3DominatedPair));
    }

    #[test]
    fn seed_must_be_free() {
        let cfg = GenerationConfig::new(3, vec![catalog::complete(3)], catalog::complete(3));
        assert_eq!(generate(&cfg).unwrap_err(), GenerationError::SeedNotFree);
    }

    #[test]
    fn odd_cycles_from_an_edge() {
        // the 3-vertex-critical graphs containing K2 are the odd cycles
        let mut cfg = GenerationConfig::new(3, vec![], catalog::complete(2));
        cfg.max_vertices = 7;
        let report = generate(&cfg).unwrap();
        assert_eq!(report.status, GenerationStatus::VertexCapHit);
        let keys: Vec<&str> = report.found.iter().map(|f| f.key.0.as_str()).collect();
        let want: Vec<String> = [3, 5, 7]
            .iter()
            .map(|&s| canonical_form(&catalog::cycle(s)).0)
            .collect();
        for w in &want {
            assert!(keys.contains(&w.as_str()), "missing C{} in {:?}", w, keys);
        }
        assert_eq!(keys.len(), 3);
    }
}
