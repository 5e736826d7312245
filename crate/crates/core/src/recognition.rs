//! Recognition of elimination structure: perfect elimination orderings for
//! simple graphs, threshold graphs, and link-simplicial elimination for
//! signed graphs.
//!
//! A vertex of a signed graph is *link simplicial* when every pair of its
//! incident signed edges with distinct far endpoints closes into a balanced
//! triangle: edges `{v,u}` with sign `e` and `{v,u'}` with sign `e'` require
//! the edge `{u,u'}` with sign `e*e'`. The two copies of a double edge have
//! the same far endpoint and impose no condition.

use std::collections::HashSet;

use crate::graph::{Sign, SignedGraph, SimpleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingKind {
    Perfect,
    Link,
}

/// An elimination ordering `v_1 .. v_l`: `v_i` is (link) simplicial in the
/// subgraph induced on `{v_1, .., v_i}`. Elimination proceeds from the back
/// of the list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
    pub kind: OrderingKind,
}

fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

fn full_mask(l: usize) -> u64 {
    assert!(l <= 60, "vertex masks support at most 60 vertices");
    if l == 0 {
        0
    } else {
        (1u64 << l) - 1
    }
}

fn iter_mask(mask: u64) -> impl Iterator<Item = usize> {
    (1..=60).filter(move |&v| mask & bit(v) != 0)
}

fn simplicial_within(g: &SimpleGraph, v: usize, mask: u64) -> bool {
    let nbrs: Vec<usize> = iter_mask(mask)
        .filter(|&u| u != v && g.has_edge(u, v))
        .collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in nbrs.iter().skip(i + 1) {
            if !g.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}

/// Greedy perfect elimination ordering: repeatedly removes the smallest
/// simplicial vertex. Succeeds exactly on chordal graphs (removing a
/// simplicial vertex preserves chordality, and every chordal graph has one).
pub fn perfect_elimination_ordering(g: &SimpleGraph) -> Option<EliminationOrdering> {
    let mut mask = full_mask(g.vertex_count());
    let mut peel: Vec<usize> = Vec::new();
    while mask != 0 {
        let v = iter_mask(mask).find(|&v| simplicial_within(g, v, mask))?;
        peel.push(v);
        mask &= !bit(v);
    }
    peel.reverse();
    Some(EliminationOrdering {
        order: peel,
        kind: OrderingKind::Perfect,
    })
}

/// Replays `order` and checks the perfect elimination property at every step.
pub fn is_perfect_elimination_ordering(g: &SimpleGraph, order: &[usize]) -> bool {
    if !covers_exactly(order, g.vertex_count()) {
        return false;
    }
    let mut mask = full_mask(g.vertex_count());
    for &v in order.iter().rev() {
        if !simplicial_within(g, v, mask) {
            return false;
        }
        mask &= !bit(v);
    }
    true
}

fn covers_exactly(order: &[usize], l: usize) -> bool {
    if order.len() != l {
        return false;
    }
    let mut seen = vec![false; l + 1];
    for &v in order {
        if v < 1 || v > l || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Threshold test, run through two independent characterizations whose
/// agreement is asserted: iteratively stripping isolated or dominating
/// vertices must empty the graph, and no four vertices may induce a pair of
/// disjoint edges, a path on four vertices, or a four-cycle.
pub fn is_threshold(g: &SimpleGraph) -> bool {
    let by_stripping = threshold_by_stripping(g);
    let by_forbidden = threshold_by_forbidden_subgraphs(g);
    assert_eq!(
        by_stripping, by_forbidden,
        "threshold characterizations disagree on {g:?}"
    );
    by_stripping
}

fn threshold_by_stripping(g: &SimpleGraph) -> bool {
    let mut mask = full_mask(g.vertex_count());
    while mask != 0 {
        let size = mask.count_ones() as usize;
        let pick = iter_mask(mask).find(|&v| {
            let deg = iter_mask(mask).filter(|&u| u != v && g.has_edge(u, v)).count();
            deg == 0 || deg == size - 1
        });
        match pick {
            Some(v) => mask &= !bit(v),
            None => return false,
        }
    }
    true
}

fn threshold_by_forbidden_subgraphs(g: &SimpleGraph) -> bool {
    let l = g.vertex_count();
    let vs: Vec<usize> = (1..=l).collect();
    for a in 0..l {
        for b in a + 1..l {
            for c in b + 1..l {
                for d in c + 1..l {
                    let w = [vs[a], vs[b], vs[c], vs[d]];
                    let mut m = 0usize;
                    let mut deg = [0usize; 4];
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(w[i], w[j]) {
                                m += 1;
                                deg[i] += 1;
                                deg[j] += 1;
                            }
                        }
                    }
                    let mut sorted = deg;
                    sorted.sort_unstable();
                    // Two disjoint edges, an induced four-path, or a four-cycle.
                    if (m == 2 && sorted == [1, 1, 1, 1])
                        || (m == 3 && sorted == [1, 1, 2, 2])
                        || (m == 4 && sorted == [2, 2, 2, 2])
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub(crate) fn is_link_simplicial_within(g: &SignedGraph, v: usize, mask: u64) -> bool {
    debug_assert!(mask & bit(v) != 0);
    let mut incident: Vec<(usize, Sign)> = Vec::new();
    for u in iter_mask(mask) {
        if u == v {
            continue;
        }
        if g.has_edge(u, v, Sign::Pos) {
            incident.push((u, Sign::Pos));
        }
        if g.has_edge(u, v, Sign::Neg) {
            incident.push((u, Sign::Neg));
        }
    }
    for (i, &(u, e)) in incident.iter().enumerate() {
        for &(u2, e2) in incident.iter().skip(i + 1) {
            if u == u2 {
                continue; // two copies of a double edge
            }
            if !g.has_edge(u, u2, e.product(e2)) {
                return false;
            }
        }
    }
    true
}

/// Whether `v` is link simplicial in `g`.
pub fn is_link_simplicial(g: &SignedGraph, v: usize) -> bool {
    assert!(
        v >= 1 && v <= g.vertex_count(),
        "vertex {v} out of range 1..={}",
        g.vertex_count()
    );
    is_link_simplicial_within(g, v, full_mask(g.vertex_count()))
}

/// Backtracking search for a link elimination ordering, memoizing failed
/// vertex subsets. At each step the smallest currently link-simplicial vertex
/// is tried first, so the result is deterministic.
pub fn link_elimination_ordering(g: &SignedGraph) -> Option<EliminationOrdering> {
    let mut dead: HashSet<u64> = HashSet::new();
    fn go(g: &SignedGraph, mask: u64, dead: &mut HashSet<u64>) -> Option<Vec<usize>> {
        if mask == 0 {
            return Some(Vec::new());
        }
        if dead.contains(&mask) {
            return None;
        }
        for v in iter_mask(mask) {
            if is_link_simplicial_within(g, v, mask) {
                if let Some(mut order) = go(g, mask & !bit(v), dead) {
                    order.push(v);
                    return Some(order);
                }
            }
        }
        dead.insert(mask);
        None
    }
    go(g, full_mask(g.vertex_count()), &mut dead).map(|order| EliminationOrdering {
        order,
        kind: OrderingKind::Link,
    })
}

/// Replays `order` and checks link simpliciality at every elimination step.
pub fn is_link_elimination_ordering(g: &SignedGraph, order: &[usize]) -> bool {
    if !covers_exactly(order, g.vertex_count()) {
        return false;
    }
    let mut mask = full_mask(g.vertex_count());
    for &v in order.iter().rev() {
        if !is_link_simplicial_within(g, v, mask) {
            return false;
        }
        mask &= !bit(v);
    }
    true
}

/// Vertices sorted by decreasing signed degree (double edges count twice),
/// ties by increasing label. For graphs with complete underlying graph that
/// pass the freeness conditions, this ordering is itself a link elimination
/// ordering; the engine's complete-underlying case analysis leans on that.
#[allow(dead_code)]
pub(crate) fn degree_ordering(g: &SignedGraph) -> Vec<usize> {
    let mut vs: Vec<usize> = g.vertices().collect();
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    vs
}
