//! Helpers shared by the integration suites. Signed graphs on `l` labeled
//! vertices are coded by assigning each vertex pair, in lexicographic order,
//! one of four states: 0 = no edge, 1 = positive, 2 = negative, 3 = double.
#![allow(dead_code)]

use rand::Rng;
use sgfree_core::{EdgeTag, Sign, SignedGraph, SwitchingFunction};

pub fn pair_list(l: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l {
            pairs.push((i, j));
        }
    }
    pairs
}

pub fn pair_count(l: usize) -> usize {
    l * l.saturating_sub(1) / 2
}

/// Total number of labeled signed graphs on `l` vertices: 4^C(l,2).
pub fn graph_count(l: usize) -> u64 {
    4u64.pow(pair_count(l) as u32)
}

pub fn graph_from_states(l: usize, states: &[u8]) -> SignedGraph {
    let pairs = pair_list(l);
    assert_eq!(states.len(), pairs.len(), "one state per vertex pair");
    let mut edges = Vec::new();
    for (&(i, j), &s) in pairs.iter().zip(states) {
        match s {
            0 => {}
            1 => edges.push((i, j, EdgeTag::Pos)),
            2 => edges.push((i, j, EdgeTag::Neg)),
            3 => edges.push((i, j, EdgeTag::Double)),
            _ => panic!("pair state {s} out of range"),
        }
    }
    SignedGraph::build(l, &edges).expect("states encode a valid graph")
}

/// Decodes `code` as base-4 digits, least significant digit first.
pub fn graph_from_code(l: usize, code: u64) -> SignedGraph {
    let k = pair_count(l);
    let mut states = Vec::with_capacity(k);
    let mut c = code;
    for _ in 0..k {
        states.push((c % 4) as u8);
        c /= 4;
    }
    assert_eq!(c, 0, "code {code} exceeds the graph count for l = {l}");
    graph_from_states(l, &states)
}

/// A random graph with the given relative weights for the four pair states
/// (none, positive, negative, double).
pub fn random_graph<R: Rng>(rng: &mut R, l: usize, weights: [u32; 4]) -> SignedGraph {
    let total: u32 = weights.iter().sum();
    let states: Vec<u8> = (0..pair_count(l))
        .map(|_| {
            let mut roll = rng.random_range(0..total);
            for (s, &w) in weights.iter().enumerate() {
                if roll < w {
                    return s as u8;
                }
                roll -= w;
            }
            unreachable!("roll below the total weight")
        })
        .collect();
    graph_from_states(l, &states)
}

/// Removes one signed copy of the pair `{i, j}`; a double edge keeps its
/// other copy.
pub fn delete_edge_copy(g: &SignedGraph, i: usize, j: usize, sign: Sign) -> SignedGraph {
    assert!(g.has_edge(i, j, sign), "copy must exist to be deleted");
    let target = (i.min(j), i.max(j));
    let mut edges: Vec<(usize, usize, EdgeTag)> = Vec::new();
    for (a, b) in pair_list(g.vertex_count()) {
        let Some(tag) = g.pair_tag(a, b) else {
            continue;
        };
        let kept = if (a, b) == target {
            match (tag, sign) {
                (EdgeTag::Double, Sign::Pos) => Some(EdgeTag::Neg),
                (EdgeTag::Double, Sign::Neg) => Some(EdgeTag::Pos),
                _ => None, // the pair had only this copy
            }
        } else {
            Some(tag)
        };
        if let Some(t) = kept {
            edges.push((a, b, t));
        }
    }
    SignedGraph::build(g.vertex_count(), &edges).expect("deletion keeps the graph valid")
}

pub fn random_switching<R: Rng>(rng: &mut R, l: usize) -> SwitchingFunction {
    let mask = if l == 0 {
        0
    } else {
        rng.random_range(0..(1u64 << l))
    };
    SwitchingFunction::from_mask(l, mask)
}
