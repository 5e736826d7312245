//! Signed graphs, switching, and the basic constructions on them.
//!
//! Vertices are labeled `1..=l`. Edges are unordered pairs stored normalized
//! as `(i, j)` with `i < j`; a pair may carry a positive edge, a negative
//! edge, or both (a double edge). Loops are not allowed.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

/// Sign of an edge, `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn product(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// Edge descriptor used when building a graph: positive, negative, or both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeTag {
    Pos,
    Neg,
    Double,
}

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("pair {{{0}, {1}}} listed more than once")]
    DuplicatePair(usize, usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("switching function covers {got} vertices, graph has {want}")]
    SwitchingLength { got: usize, want: usize },
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("edge {{{i}, {j}}} with sign {sign} not present")]
    MissingEdge { i: usize, j: usize, sign: Sign },
}

/// A simple graph on vertices `1..=l`, used for underlying graphs and for the
/// chordality / threshold recognizers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            let (i, j) = normalize_pair(a, b, vertex_count)?;
            if !set.insert((i, j)) {
                return Err(GraphError::DuplicatePair(i, j));
            }
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: set,
        })
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        1..=self.vertex_count
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (i, j) = (a.min(b), a.max(b));
        self.edges.contains(&(i, j))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.vertices().filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertices().filter(|&u| self.has_edge(u, v)).count()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.vertex_count * self.vertex_count.saturating_sub(1) / 2
    }

    /// Induced subgraph on `w`, relabeled `1..=|w|` by increasing original
    /// label. Returns the map from new label (index + 1) to original label.
    pub fn induced(&self, w: &BTreeSet<usize>) -> Result<(SimpleGraph, Vec<usize>), GraphError> {
        let map = check_subset(w, self.vertex_count)?;
        let mut edges = BTreeSet::new();
        for (ni, &oi) in map.iter().enumerate() {
            for (nj, &oj) in map.iter().enumerate().skip(ni + 1) {
                if self.has_edge(oi, oj) {
                    edges.insert((ni + 1, nj + 1));
                }
            }
        }
        Ok((
            SimpleGraph {
                vertex_count: map.len(),
                edges,
            },
            map,
        ))
    }
}

/// Switching function: a sign for every vertex. Switching by it flips the
/// sign of every single edge whose endpoints get opposite signs; double edges
/// are unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn new(signs: Vec<Sign>) -> Self {
        SwitchingFunction(signs)
    }

    pub fn all_pos(vertex_count: usize) -> Self {
        SwitchingFunction(vec![Sign::Pos; vertex_count])
    }

    /// Switching function that is negative exactly on `neg`, positive elsewhere.
    pub fn from_neg_set(vertex_count: usize, neg: &[usize]) -> Self {
        let mut signs = vec![Sign::Pos; vertex_count];
        for &v in neg {
            signs[v - 1] = Sign::Neg;
        }
        SwitchingFunction(signs)
    }

    /// Bits of `mask` select the vertices switched negatively (bit `v-1` for
    /// vertex `v`). Used to enumerate all 2^l switchings deterministically.
    pub fn from_mask(vertex_count: usize, mask: u64) -> Self {
        SwitchingFunction(
            (0..vertex_count)
                .map(|b| {
                    if mask >> b & 1 == 1 {
                        Sign::Neg
                    } else {
                        Sign::Pos
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn at(&self, v: usize) -> Sign {
        self.0[v - 1]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }
}

impl fmt::Display for SwitchingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A signed graph: positive and negative edge sets over a shared vertex set.
/// A pair present in both sets is a double edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedGraph {
    vertex_count: usize,
    pos: BTreeSet<(usize, usize)>,
    neg: BTreeSet<(usize, usize)>,
}

impl SignedGraph {
    /// Builds a graph from a list of tagged pairs. Each unordered pair may be
    /// listed at most once; its tag says which of the two signed copies exist.
    pub fn build(
        vertex_count: usize,
        edges: &[(usize, usize, EdgeTag)],
    ) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        for &(a, b, tag) in edges {
            let (i, j) = normalize_pair(a, b, vertex_count)?;
            if !seen.insert((i, j)) {
                return Err(GraphError::DuplicatePair(i, j));
            }
            match tag {
                EdgeTag::Pos => {
                    pos.insert((i, j));
                }
                EdgeTag::Neg => {
                    neg.insert((i, j));
                }
                EdgeTag::Double => {
                    pos.insert((i, j));
                    neg.insert((i, j));
                }
            }
        }
        Ok(SignedGraph {
            vertex_count,
            pos,
            neg,
        })
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        SignedGraph {
            vertex_count,
            pos: BTreeSet::new(),
            neg: BTreeSet::new(),
        }
    }

    /// The complete signed graph: every pair carries both signed copies.
    pub fn complete_signed(vertex_count: usize) -> Self {
        let mut pairs = BTreeSet::new();
        for i in 1..=vertex_count {
            for j in i + 1..=vertex_count {
                pairs.insert((i, j));
            }
        }
        SignedGraph {
            vertex_count,
            pos: pairs.clone(),
            neg: pairs,
        }
    }

    /// The four-vertex obstruction graph: double edges {1,2} and {3,4},
    /// positive edges {1,4}, {2,4}, {2,3}, negative edge {1,3}. Any graph with
    /// an induced subgraph switching-isomorphic to it is non-free.
    pub fn obstruction() -> Self {
        SignedGraph::build(
            4,
            &[
                (1, 2, EdgeTag::Double),
                (3, 4, EdgeTag::Double),
                (1, 4, EdgeTag::Pos),
                (2, 4, EdgeTag::Pos),
                (2, 3, EdgeTag::Pos),
                (1, 3, EdgeTag::Neg),
            ],
        )
        .expect("valid by construction")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        1..=self.vertex_count
    }

    pub fn pos_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.pos
    }

    pub fn neg_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.neg
    }

    pub fn has_edge(&self, a: usize, b: usize, sign: Sign) -> bool {
        let (i, j) = (a.min(b), a.max(b));
        match sign {
            Sign::Pos => self.pos.contains(&(i, j)),
            Sign::Neg => self.neg.contains(&(i, j)),
        }
    }

    pub fn has_pair(&self, a: usize, b: usize) -> bool {
        self.has_edge(a, b, Sign::Pos) || self.has_edge(a, b, Sign::Neg)
    }

    pub fn is_double(&self, a: usize, b: usize) -> bool {
        self.has_edge(a, b, Sign::Pos) && self.has_edge(a, b, Sign::Neg)
    }

    /// Tag of the pair `{a, b}`, if any copy is present.
    pub fn pair_tag(&self, a: usize, b: usize) -> Option<EdgeTag> {
        match (self.has_edge(a, b, Sign::Pos), self.has_edge(a, b, Sign::Neg)) {
            (true, true) => Some(EdgeTag::Double),
            (true, false) => Some(EdgeTag::Pos),
            (false, true) => Some(EdgeTag::Neg),
            (false, false) => None,
        }
    }

    pub fn double_edges(&self) -> BTreeSet<(usize, usize)> {
        self.pos.intersection(&self.neg).copied().collect()
    }

    pub fn single_edges(&self) -> BTreeSet<((usize, usize), Sign)> {
        let mut out = BTreeSet::new();
        for &e in self.pos.difference(&self.neg) {
            out.insert((e, Sign::Pos));
        }
        for &e in self.neg.difference(&self.pos) {
            out.insert((e, Sign::Neg));
        }
        out
    }

    /// Union of the positive and negative edge sets.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph {
            vertex_count: self.vertex_count,
            edges: self.pos.union(&self.neg).copied().collect(),
        }
    }

    /// Number of signed edge copies incident to `v`; a double edge counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.incident_edges(v).len()
    }

    /// All signed edge copies at `v`, as (far endpoint, sign), sorted.
    pub fn incident_edges(&self, v: usize) -> Vec<(usize, Sign)> {
        assert!(v >= 1 && v <= self.vertex_count, "vertex {v} out of range");
        let mut out = Vec::new();
        for u in 1..=self.vertex_count {
            if u == v {
                continue;
            }
            if self.has_edge(u, v, Sign::Pos) {
                out.push((u, Sign::Pos));
            }
            if self.has_edge(u, v, Sign::Neg) {
                out.push((u, Sign::Neg));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    /// Induced subgraph on `w`, relabeled `1..=|w|` by increasing original
    /// label. Returns the map from new label (index + 1) to original label.
    pub fn induced(&self, w: &BTreeSet<usize>) -> Result<(SignedGraph, Vec<usize>), GraphError> {
        let map = check_subset(w, self.vertex_count)?;
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        for (ni, &oi) in map.iter().enumerate() {
            for (nj, &oj) in map.iter().enumerate().skip(ni + 1) {
                if self.has_edge(oi, oj, Sign::Pos) {
                    pos.insert((ni + 1, nj + 1));
                }
                if self.has_edge(oi, oj, Sign::Neg) {
                    neg.insert((ni + 1, nj + 1));
                }
            }
        }
        Ok((
            SignedGraph {
                vertex_count: map.len(),
                pos,
                neg,
            },
            map,
        ))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<SignedGraph, GraphError> {
        let w: BTreeSet<usize> = self.vertices().filter(|&u| u != v).collect();
        if w.len() == self.vertex_count {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            });
        }
        if w.is_empty() {
            // Deleting the only vertex leaves the zero-vertex graph.
            return Ok(SignedGraph::edgeless(0));
        }
        Ok(self.induced(&w)?.0)
    }

    /// Switches by `nu`: a single edge keeps its sign iff `nu` agrees on its
    /// endpoints; double edges are fixed.
    pub fn switch(&self, nu: &SwitchingFunction) -> Result<SignedGraph, GraphError> {
        if nu.len() != self.vertex_count {
            return Err(GraphError::SwitchingLength {
                got: nu.len(),
                want: self.vertex_count,
            });
        }
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        for &(i, j) in &self.pos {
            match nu.at(i).product(nu.at(j)) {
                Sign::Pos => pos.insert((i, j)),
                Sign::Neg => neg.insert((i, j)),
            };
        }
        for &(i, j) in &self.neg {
            match nu.at(i).product(nu.at(j)) {
                Sign::Pos => neg.insert((i, j)),
                Sign::Neg => pos.insert((i, j)),
            };
        }
        Ok(SignedGraph {
            vertex_count: self.vertex_count,
            pos,
            neg,
        })
    }

    /// Relabels by the bijection `pi` (`pi[v-1]` is the new label of `v`).
    pub fn relabel(&self, pi: &[usize]) -> SignedGraph {
        assert_eq!(pi.len(), self.vertex_count, "bijection length mismatch");
        let map = |v: usize| pi[v - 1];
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        for &(i, j) in &self.pos {
            let (a, b) = (map(i).min(map(j)), map(i).max(map(j)));
            pos.insert((a, b));
        }
        for &(i, j) in &self.neg {
            let (a, b) = (map(i).min(map(j)), map(i).max(map(j)));
            neg.insert((a, b));
        }
        SignedGraph {
            vertex_count: self.vertex_count,
            pos,
            neg,
        }
    }

    /// The companion graph used throughout the structural arguments: positive
    /// part is the union of both edge sets, negative part their intersection.
    /// It is invariant under switching of `self`.
    pub fn tilde(&self) -> SignedGraph {
        SignedGraph {
            vertex_count: self.vertex_count,
            pos: self.pos.union(&self.neg).copied().collect(),
            neg: self.pos.intersection(&self.neg).copied().collect(),
        }
    }

    /// Contracts the signed edge copy `{i, j}` with sign `sign`. The smaller
    /// endpoint is removed: writing `a < b`, the relation `x_a = sign * x_b`
    /// substitutes `a` away, every edge `{k, a}` with sign `d` becomes
    /// `{k, b}` with sign `d * sign`, and the surviving vertices are relabeled
    /// `1..=l-1` in increasing order of their old labels. The other copy of a
    /// double edge collapses into the (always present) coordinate hyperplane
    /// and disappears; parallel copies of opposite sign merge into a double
    /// edge.
    pub fn contract_edge(&self, i: usize, j: usize, sign: Sign) -> Result<SignedGraph, GraphError> {
        let (a, b) = normalize_pair(i, j, self.vertex_count)?;
        if !self.has_edge(a, b, sign) {
            return Err(GraphError::MissingEdge { i: a, j: b, sign });
        }
        Ok(self.contract_pair_onto(a, b, sign))
    }

    /// Contraction with `removed` substituted by `sign * survivor`. The public
    /// direction removes the smaller endpoint; the reverse direction yields a
    /// switching-equivalent graph and is kept for that equivalence test.
    fn contract_onto(&self, removed: usize, survivor: usize, sign: Sign) -> SignedGraph {
        let mut pos: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut neg: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut insert = |x: usize, y: usize, s: Sign| {
            let (p, q) = (x.min(y), x.max(y));
            match s {
                Sign::Pos => pos.insert((p, q)),
                Sign::Neg => neg.insert((p, q)),
            };
        };
        for (&(x, y), s) in self
            .pos
            .iter()
            .map(|e| (e, Sign::Pos))
            .chain(self.neg.iter().map(|e| (e, Sign::Neg)))
        {
            if (x, y) == (removed.min(survivor), removed.max(survivor)) {
                continue; // both copies of the contracted pair are absorbed
            }
            if x == removed {
                insert(survivor, y, s.product(sign));
            } else if y == removed {
                insert(x, survivor, s.product(sign));
            } else {
                insert(x, y, s);
            }
        }
        let keep: BTreeSet<usize> = self.vertices().filter(|&u| u != removed).collect();
        let g = SignedGraph {
            vertex_count: self.vertex_count,
            pos,
            neg,
        };
        g.induced(&keep).expect("nonempty strict subset").0
    }

    fn contract_pair_onto(&self, a: usize, b: usize, sign: Sign) -> SignedGraph {
        self.contract_onto(a, b, sign)
    }

    #[cfg(test)]
    fn contract_pair_onto_smaller(&self, a: usize, b: usize, sign: Sign) -> SignedGraph {
        self.contract_onto(b, a, sign)
    }
}

fn normalize_pair(a: usize, b: usize, count: usize) -> Result<(usize, usize), GraphError> {
    if a == b {
        return Err(GraphError::Loop(a));
    }
    for v in [a, b] {
        if v < 1 || v > count {
            return Err(GraphError::VertexOutOfRange { vertex: v, count });
        }
    }
    Ok((a.min(b), a.max(b)))
}

fn check_subset(w: &BTreeSet<usize>, count: usize) -> Result<Vec<usize>, GraphError> {
    if w.is_empty() {
        return Err(GraphError::EmptySubset);
    }
    for &v in w {
        if v < 1 || v > count {
            return Err(GraphError::VertexOutOfRange { vertex: v, count });
        }
    }
    Ok(w.iter().copied().collect())
}

/// Searches for `(pi, nu)` with `switch(relabel(g, pi), nu) == h`. With
/// `up_to_isomorphism` false only the identity relabeling is tried, deciding
/// switching equivalence on the nose. Permutations are tried in lexicographic
/// order and switchings in mask order, so the returned witness is the first
/// one in that order. Exhaustive; meant for small graphs (the obstruction
/// check uses it on 4 vertices).
pub fn switching_equivalence_witness(
    g: &SignedGraph,
    h: &SignedGraph,
    up_to_isomorphism: bool,
) -> Result<Option<(Vec<usize>, SwitchingFunction)>, GraphError> {
    let l = g.vertex_count();
    if l != h.vertex_count() {
        return Err(GraphError::VertexCountMismatch(l, h.vertex_count()));
    }
    // Switching preserves double edges, the underlying graph, and therefore
    // these counts; relabeling preserves them as multisets.
    if g.double_edges().len() != h.double_edges().len()
        || g.single_edges().len() != h.single_edges().len()
        || sorted_degrees(&g.underlying()) != sorted_degrees(&h.underlying())
    {
        return Ok(None);
    }
    let perms: Vec<Vec<usize>> = if up_to_isomorphism {
        (1..=l).permutations(l).collect()
    } else {
        vec![(1..=l).collect()]
    };
    for pi in perms {
        let relabeled = g.relabel(&pi);
        // A switching cannot change the underlying graph or the double edges.
        if relabeled.underlying() != h.underlying()
            || relabeled.double_edges() != h.double_edges()
        {
            continue;
        }
        for mask in 0..(1u64 << l) {
            let nu = SwitchingFunction::from_mask(l, mask);
            if relabeled.switch(&nu).expect("length matches") == *h {
                return Ok(Some((pi, nu)));
            }
        }
    }
    Ok(None)
}

fn sorted_degrees(g: &SimpleGraph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn tag(c: char) -> EdgeTag {
        match c {
            '+' => EdgeTag::Pos,
            '-' => EdgeTag::Neg,
            '2' => EdgeTag::Double,
            _ => panic!("bad tag"),
        }
    }

    pub(crate) fn graph(l: usize, edges: &[(usize, usize, char)]) -> SignedGraph {
        let e: Vec<_> = edges.iter().map(|&(i, j, c)| (i, j, tag(c))).collect();
        SignedGraph::build(l, &e).unwrap()
    }

    #[test]
    fn build_rejects_loops() {
        let err = SignedGraph::build(3, &[(2, 2, EdgeTag::Pos)]).unwrap_err();
        assert_eq!(err, GraphError::Loop(2));
    }

    #[test]
    fn build_rejects_out_of_range() {
        let err = SignedGraph::build(3, &[(1, 4, EdgeTag::Neg)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::VertexOutOfRange {
                vertex: 4,
                count: 3
            }
        );
    }

    #[test]
    fn build_rejects_duplicate_pairs() {
        let err =
            SignedGraph::build(3, &[(1, 2, EdgeTag::Pos), (2, 1, EdgeTag::Neg)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicatePair(1, 2));
    }

    #[test]
    fn double_edge_from_tag() {
        let g = graph(2, &[(1, 2, '2')]);
        assert!(g.has_edge(1, 2, Sign::Pos));
        assert!(g.has_edge(1, 2, Sign::Neg));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn induced_relabels_in_increasing_order() {
        // Path 1 -+ 3 -- 5 plus an untouched vertex; induce on {1, 3, 5}.
        let g = graph(5, &[(1, 3, '+'), (3, 5, '-'), (2, 4, '+')]);
        let w: BTreeSet<usize> = [1, 3, 5].into_iter().collect();
        let (h, map) = g.induced(&w).unwrap();
        assert_eq!(map, vec![1, 3, 5]);
        assert_eq!(h, graph(3, &[(1, 2, '+'), (2, 3, '-')]));
    }

    #[test]
    fn induced_rejects_empty_and_foreign_sets() {
        let g = SignedGraph::edgeless(3);
        assert_eq!(g.induced(&BTreeSet::new()).unwrap_err(), GraphError::EmptySubset);
        let w: BTreeSet<usize> = [2, 9].into_iter().collect();
        assert!(matches!(
            g.induced(&w).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 9, .. }
        ));
    }

    #[test]
    fn switching_flips_disagreeing_single_edges_only() {
        let g = graph(3, &[(1, 2, '+'), (2, 3, '-'), (1, 3, '2')]);
        let nu = SwitchingFunction::from_neg_set(3, &[1]);
        let s = g.switch(&nu).unwrap();
        assert_eq!(s, graph(3, &[(1, 2, '-'), (2, 3, '-'), (1, 3, '2')]));
    }

    #[test]
    fn switching_is_an_involution() {
        let g = graph(4, &[(1, 2, '+'), (2, 3, '-'), (3, 4, '2'), (1, 4, '-')]);
        for mask in 0..16 {
            let nu = SwitchingFunction::from_mask(4, mask);
            assert_eq!(g.switch(&nu).unwrap().switch(&nu).unwrap(), g);
        }
    }

    #[test]
    fn switch_rejects_wrong_length() {
        let g = SignedGraph::edgeless(3);
        let nu = SwitchingFunction::all_pos(2);
        assert_eq!(
            g.switch(&nu).unwrap_err(),
            GraphError::SwitchingLength { got: 2, want: 3 }
        );
    }

    #[test]
    fn tilde_takes_union_and_intersection() {
        // Square with one negative side and one double diagonal-free chord.
        let g = graph(
            4,
            &[(1, 2, '+'), (2, 3, '+'), (3, 4, '+'), (1, 4, '-'), (2, 4, '2')],
        );
        let t = g.tilde();
        assert_eq!(
            t,
            graph(
                4,
                &[(1, 2, '+'), (2, 3, '+'), (3, 4, '+'), (1, 4, '+'), (2, 4, '2')],
            )
        );
    }

    #[test]
    fn tilde_is_switching_invariant() {
        let g = graph(4, &[(1, 2, '+'), (2, 3, '-'), (3, 4, '2'), (1, 3, '-')]);
        for mask in 0..16 {
            let nu = SwitchingFunction::from_mask(4, mask);
            assert_eq!(g.switch(&nu).unwrap().tilde(), g.tilde());
        }
    }

    #[test]
    fn tilde_positive_contains_negative() {
        let g = graph(3, &[(1, 2, '-'), (2, 3, '2')]);
        let t = g.tilde();
        assert!(t.neg_edges().is_subset(t.pos_edges()));
    }

    #[test]
    fn contract_positive_path_edge() {
        // Contracting {1,2}+ of the path 1 -+ 2 -- 3 substitutes x1 = x2 and
        // leaves a single negative edge.
        let g = graph(3, &[(1, 2, '+'), (2, 3, '-')]);
        let c = g.contract_edge(1, 2, Sign::Pos).unwrap();
        assert_eq!(c, graph(2, &[(1, 2, '-')]));
    }

    #[test]
    fn contract_negative_edge_flips_reattached_edges() {
        // x1 = -x2 turns x1 - x3 into -(x2 + x3): edge {2,3} negative.
        let g = graph(3, &[(1, 2, '-'), (1, 3, '+')]);
        let c = g.contract_edge(1, 2, Sign::Neg).unwrap();
        assert_eq!(c, graph(2, &[(1, 2, '-')]));
    }

    #[test]
    fn contract_double_edge_absorbs_other_copy() {
        let g = graph(2, &[(1, 2, '2')]);
        let c = g.contract_edge(1, 2, Sign::Pos).unwrap();
        assert_eq!(c, SignedGraph::edgeless(1));
    }

    #[test]
    fn contract_merges_opposite_parallels_into_double() {
        // Unbalanced triangle: contracting any edge leaves a double edge.
        let g = graph(3, &[(1, 2, '+'), (2, 3, '+'), (1, 3, '-')]);
        let c = g.contract_edge(1, 2, Sign::Pos).unwrap();
        assert_eq!(c, graph(2, &[(1, 2, '2')]));
    }

    #[test]
    fn contract_requires_present_copy() {
        let g = graph(2, &[(1, 2, '+')]);
        assert_eq!(
            g.contract_edge(1, 2, Sign::Neg).unwrap_err(),
            GraphError::MissingEdge {
                i: 1,
                j: 2,
                sign: Sign::Neg
            }
        );
    }

    #[test]
    fn contract_either_end_gives_switching_equivalent_results() {
        // Contracting {i,j} onto j (removing i) and onto i (removing j) keep
        // different vertex sets; under the correspondence matching survivor
        // to survivor and every other vertex to itself, the results agree up
        // to switching.
        let g = graph(
            4,
            &[(1, 2, '+'), (2, 3, '-'), (3, 4, '2'), (1, 4, '-'), (1, 3, '+')],
        );
        let l = g.vertex_count();
        let mut checked = 0;
        for (edges, sign) in [
            (g.pos_edges().clone(), Sign::Pos),
            (g.neg_edges().clone(), Sign::Neg),
        ] {
            for &(i, j) in edges.iter() {
                let a = g.contract_pair_onto(i, j, sign); // removes i
                let b = g.contract_pair_onto_smaller(i, j, sign); // removes j
                let keep_a: Vec<usize> = (1..=l).filter(|&u| u != i).collect();
                let keep_b: Vec<usize> = (1..=l).filter(|&u| u != j).collect();
                let new_in_b = |old: usize| {
                    keep_b.iter().position(|&u| u == old).unwrap() + 1
                };
                let pi: Vec<usize> = keep_a
                    .iter()
                    .map(|&u| new_in_b(if u == j { i } else { u }))
                    .collect();
                let w = switching_equivalence_witness(&a.relabel(&pi), &b, false).unwrap();
                assert!(w.is_some(), "contracting {{{i},{j}}}{sign} either way");
                checked += 1;
            }
        }
        assert_eq!(checked, g.edge_count());
    }

    #[test]
    fn switching_witness_on_the_nose() {
        let g = graph(3, &[(1, 2, '+'), (2, 3, '+'), (1, 3, '-')]);
        let h = g
            .switch(&SwitchingFunction::from_neg_set(3, &[2]))
            .unwrap();
        let (pi, nu) = switching_equivalence_witness(&g, &h, false)
            .unwrap()
            .expect("switching equivalent by construction");
        assert_eq!(pi, vec![1, 2, 3]);
        assert_eq!(g.relabel(&pi).switch(&nu).unwrap(), h);
    }

    #[test]
    fn switching_witness_needs_isomorphism_flag() {
        // Same graph up to relabeling, not up to switching alone: the negative
        // edge moves to a different pair.
        let g = graph(3, &[(1, 2, '-'), (1, 3, '2')]);
        let h = graph(3, &[(2, 3, '-'), (1, 2, '2')]);
        assert_eq!(switching_equivalence_witness(&g, &h, false).unwrap(), None);
        let (pi, nu) = switching_equivalence_witness(&g, &h, true)
            .unwrap()
            .expect("isomorphic");
        assert_eq!(g.relabel(&pi).switch(&nu).unwrap(), h);
    }

    #[test]
    fn switching_witness_respects_balance() {
        // Balanced vs unbalanced triangles are not switching-isomorphic.
        let balanced = graph(3, &[(1, 2, '+'), (2, 3, '+'), (1, 3, '+')]);
        let unbalanced = graph(3, &[(1, 2, '+'), (2, 3, '+'), (1, 3, '-')]);
        assert_eq!(
            switching_equivalence_witness(&balanced, &unbalanced, true).unwrap(),
            None
        );
    }

    #[test]
    fn switching_witness_rejects_size_mismatch() {
        let g = SignedGraph::edgeless(2);
        let h = SignedGraph::edgeless(3);
        assert_eq!(
            switching_equivalence_witness(&g, &h, true).unwrap_err(),
            GraphError::VertexCountMismatch(2, 3)
        );
    }

    #[test]
    fn obstruction_graph_shape() {
        let g = SignedGraph::obstruction();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.double_edges().len(), 2);
        assert_eq!(g.single_edges().len(), 4);
        assert_eq!(g.edge_count(), 8);
        assert!(g.underlying().is_complete());
    }

    #[test]
    fn induce_and_switch_commute() {
        let g = graph(
            5,
            &[(1, 2, '+'), (2, 3, '-'), (3, 4, '2'), (4, 5, '-'), (1, 5, '+'), (2, 5, '-')],
        );
        let w: BTreeSet<usize> = [1, 2, 5].into_iter().collect();
        let nu = SwitchingFunction::from_neg_set(5, &[2, 5]);
        let (ind, map) = g.switch(&nu).unwrap().induced(&w).unwrap();
        let restricted = SwitchingFunction::new(map.iter().map(|&v| nu.at(v)).collect());
        let (ind2, _) = g.induced(&w).unwrap();
        assert_eq!(ind, ind2.switch(&restricted).unwrap());
    }
}
