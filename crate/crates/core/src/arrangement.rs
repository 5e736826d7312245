//! Hyperplane arrangements of signed graphs and their characteristic
//! polynomials, computed two independent ways: by closing the intersection
//! lattice and summing Möbius values, and by counting points over small
//! prime fields followed by interpolation.
//!
//! The arrangement of a signed graph on `l` vertices lives in `l`-space and
//! consists of the coordinate hyperplane `x_i = 0` for every vertex, the
//! difference hyperplane `x_i - x_j = 0` for every positive edge, and the sum
//! hyperplane `x_i + x_j = 0` for every negative edge; a double edge
//! contributes both.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::{GraphError, Sign, SignedGraph};
use crate::poly::{interpolate_integer, CharPoly};

/// Default cap on the ambient dimension for full lattice computation; the
/// lattice of the complete signed graph grows very quickly with `l`.
pub const DEFAULT_LATTICE_BOUND: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hyperplane {
    /// `x_i = 0`
    Coordinate(usize),
    /// `x_i - x_j = 0` with `i < j`
    Difference(usize, usize),
    /// `x_i + x_j = 0` with `i < j`
    Sum(usize, usize),
}

impl Hyperplane {
    /// Defining normal vector in the ambient `dim`-space.
    pub fn normal(&self, dim: usize) -> Vec<i64> {
        let mut n = vec![0i64; dim];
        match *self {
            Hyperplane::Coordinate(i) => n[i - 1] = 1,
            Hyperplane::Difference(i, j) => {
                n[i - 1] = 1;
                n[j - 1] = -1;
            }
            Hyperplane::Sum(i, j) => {
                n[i - 1] = 1;
                n[j - 1] = 1;
            }
        }
        n
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Hyperplane::Coordinate(_) => "coordinate",
            Hyperplane::Difference(_, _) => "difference",
            Hyperplane::Sum(_, _) => "sum",
        }
    }

    fn normalized(self) -> Hyperplane {
        match self {
            Hyperplane::Coordinate(i) => Hyperplane::Coordinate(i),
            Hyperplane::Difference(i, j) => Hyperplane::Difference(i.min(j), i.max(j)),
            Hyperplane::Sum(i, j) => Hyperplane::Sum(i.min(j), i.max(j)),
        }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Hyperplane::Coordinate(i) => write!(f, "x{i} = 0"),
            Hyperplane::Difference(i, j) => write!(f, "x{i} - x{j} = 0"),
            Hyperplane::Sum(i, j) => write!(f, "x{i} + x{j} = 0"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("intersection lattice limited to {limit} coordinates, graph has {got} (raise the bound to override)")]
    LatticeBoundExceeded { got: usize, limit: usize },
    #[error("arrangement has {0} hyperplanes; containment masks support at most 64")]
    TooManyHyperplanes(usize),
    #[error("point counts did not interpolate to a monic integer polynomial")]
    NonIntegerInterpolation,
    #[error("hyperplane {0} is not in the arrangement of this graph")]
    HyperplaneNotInArrangement(Hyperplane),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// All hyperplanes of the graph's arrangement, deduplicated and sorted:
/// coordinates first, then differences, then sums, each lexicographically.
pub fn hyperplanes_of(g: &SignedGraph) -> Vec<Hyperplane> {
    let mut hs: Vec<Hyperplane> = g.vertices().map(Hyperplane::Coordinate).collect();
    hs.extend(g.pos_edges().iter().map(|&(i, j)| Hyperplane::Difference(i, j)));
    hs.extend(g.neg_edges().iter().map(|&(i, j)| Hyperplane::Sum(i, j)));
    hs.sort_unstable();
    hs
}

/// One element of the intersection lattice: a subspace cut out by some of the
/// hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Canonical basis of the span of the defining normals: reduced row
    /// echelon form scaled to primitive integer rows with positive pivots.
    pub basis: Vec<Vec<i64>>,
    /// Dimension of the subspace (ambient dimension minus rank).
    pub dim: usize,
    /// Bit `k` set iff hyperplane `k` (in `hyperplanes` order) contains the
    /// subspace; closed under taking spans.
    pub contains: u64,
    /// Möbius value of the flat in the lattice ordered by reverse inclusion.
    pub mobius: i64,
}

#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    hyperplanes: Vec<Hyperplane>,
    /// Flats sorted by (rank, basis); the ambient space comes first.
    flats: Vec<Flat>,
    ambient_dim: usize,
}

impl IntersectionLattice {
    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Characteristic polynomial: the Möbius-weighted sum of `t^dim` over
    /// all flats.
    pub fn char_poly(&self) -> CharPoly {
        let mut coeffs = vec![0i64; self.ambient_dim + 1];
        for f in &self.flats {
            coeffs[f.dim] += f.mobius;
        }
        let p = CharPoly::new(coeffs);
        debug_assert!(self.ambient_dim == 0 || p.is_monic());
        // The second-highest coefficient counts the hyperplanes (each rank-1
        // flat has Möbius value -1).
        debug_assert!(
            self.ambient_dim == 0
                || p.coeffs().get(self.ambient_dim - 1).copied().unwrap_or(0)
                    == -(self.hyperplanes.len() as i64)
        );
        p
    }
}

/// Reduced row echelon form over the rationals, returned as primitive integer
/// rows (content 1) with positive pivot entries; zero rows are dropped. The
/// result is a canonical representative of the row space.
fn rref(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<Ratio<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(src) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].clone();
        for x in m[pivot_row].iter_mut() {
            *x /= inv.clone();
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let sub = factor.clone() * m[pivot_row][c].clone();
                    m[r][c] -= sub;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(1i64, |acc, x| acc.lcm(x.denom()));
            let ints: Vec<i64> = row.iter().map(|x| (x.clone() * lcm).to_integer()).collect();
            let gcd = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            if gcd > 1 {
                ints.into_iter().map(|x| x / gcd).collect()
            } else {
                ints
            }
        })
        .collect()
}

/// Whether `v` lies in the row space of the RREF basis `rows`.
fn in_row_space(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let mut w: Vec<Ratio<i64>> = v.iter().map(|&x| Ratio::from_integer(x)).collect();
    for row in rows {
        let pivot = row
            .iter()
            .position(|&x| x != 0)
            .expect("RREF rows are nonzero");
        if w[pivot].is_zero() {
            continue;
        }
        let factor = w[pivot].clone() / Ratio::from_integer(row[pivot]);
        for (wc, &rc) in w.iter_mut().zip(row.iter()) {
            *wc -= factor.clone() * Ratio::from_integer(rc);
        }
    }
    w.iter().all(|x| x.is_zero())
}

/// Builds the full intersection lattice with the default dimension bound.
pub fn intersection_lattice(g: &SignedGraph) -> Result<IntersectionLattice, ArrangementError> {
    intersection_lattice_with_bound(g, DEFAULT_LATTICE_BOUND)
}

/// Breadth-first closure of the intersection lattice: every flat is
/// intersected with every hyperplane not already containing it, deduplicating
/// by the canonical basis. Möbius values follow the recursion μ(ambient) = 1,
/// μ(X) = -Σ μ(Y) over flats Y strictly below X (equivalently, with strictly
/// smaller containment mask).
pub fn intersection_lattice_with_bound(
    g: &SignedGraph,
    bound: usize,
) -> Result<IntersectionLattice, ArrangementError> {
    let l = g.vertex_count();
    if l > bound {
        return Err(ArrangementError::LatticeBoundExceeded { got: l, limit: bound });
    }
    let hyperplanes = hyperplanes_of(g);
    if hyperplanes.len() > 64 {
        return Err(ArrangementError::TooManyHyperplanes(hyperplanes.len()));
    }
    let normals: Vec<Vec<i64>> = hyperplanes.iter().map(|h| h.normal(l)).collect();
    let closure_mask = |basis: &[Vec<i64>]| -> u64 {
        normals
            .iter()
            .enumerate()
            .filter(|(_, n)| in_row_space(basis, n))
            .fold(0u64, |m, (k, _)| m | 1u64 << k)
    };

    let mut seen: BTreeMap<Vec<Vec<i64>>, u64> = BTreeMap::new();
    let ambient: Vec<Vec<i64>> = Vec::new();
    seen.insert(ambient.clone(), closure_mask(&ambient));
    let mut queue: VecDeque<Vec<Vec<i64>>> = VecDeque::from([ambient]);
    while let Some(basis) = queue.pop_front() {
        let mask = seen[&basis];
        for (k, normal) in normals.iter().enumerate() {
            if mask & (1u64 << k) != 0 {
                continue;
            }
            let mut rows = basis.clone();
            rows.push(normal.clone());
            let next = rref(&rows);
            if !seen.contains_key(&next) {
                let next_mask = closure_mask(&next);
                seen.insert(next.clone(), next_mask);
                queue.push_back(next);
            }
        }
    }

    let mut flats: Vec<Flat> = seen
        .into_iter()
        .map(|(basis, contains)| {
            let dim = l - basis.len();
            Flat {
                basis,
                dim,
                contains,
                mobius: 0,
            }
        })
        .collect();
    flats.sort_by(|a, b| (l - a.dim, &a.basis).cmp(&(l - b.dim, &b.basis)));
    for i in 0..flats.len() {
        if flats[i].dim == l {
            flats[i].mobius = 1;
            continue;
        }
        let mask = flats[i].contains;
        let mut sum = 0i64;
        for below in &flats[..i] {
            if below.contains & mask == below.contains && below.contains != mask {
                sum += below.mobius;
            }
        }
        flats[i].mobius = -sum;
    }
    Ok(IntersectionLattice {
        hyperplanes,
        flats,
        ambient_dim: l,
    })
}

/// Characteristic polynomial via the intersection lattice.
pub fn char_poly_lattice(g: &SignedGraph) -> Result<CharPoly, ArrangementError> {
    Ok(intersection_lattice(g)?.char_poly())
}

/// Same as [`char_poly_lattice`] but with an explicit vertex-count guard
/// instead of [`DEFAULT_LATTICE_BOUND`].
pub fn char_poly_lattice_with_bound(
    g: &SignedGraph,
    bound: usize,
) -> Result<CharPoly, ArrangementError> {
    Ok(intersection_lattice_with_bound(g, bound)?.char_poly())
}

/// Number of points of the `l`-fold product of the `p`-element field avoiding
/// every hyperplane: all coordinates nonzero, `x_i != x_j` per positive edge,
/// `x_i != -x_j` per negative edge. `p` must be an odd prime for the count to
/// evaluate the characteristic polynomial.
pub fn point_count_mod_p(g: &SignedGraph, p: u64) -> u64 {
    assert!(p >= 3 && p % 2 == 1, "need an odd prime, got {p}");
    let l = g.vertex_count();
    // For vertex v, constraints against already-assigned smaller vertices.
    let mut constraints: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); l + 1];
    for (&(i, j), s) in g
        .pos_edges()
        .iter()
        .map(|e| (e, Sign::Pos))
        .chain(g.neg_edges().iter().map(|e| (e, Sign::Neg)))
    {
        constraints[j].push((i, s));
    }
    // A vertex whose value no later constraint consults contributes a bare
    // factor (number of allowed values) instead of a branching level; this is
    // what keeps sparse graphs cheap.
    let mut consulted_later = vec![false; l + 1];
    for cs in &constraints {
        for &(u, _) in cs {
            consulted_later[u] = true;
        }
    }
    fn count(
        v: usize,
        l: usize,
        p: u64,
        values: &mut Vec<u64>,
        constraints: &[Vec<(usize, Sign)>],
        consulted_later: &[bool],
        forbidden: &mut Vec<u64>,
    ) -> u64 {
        if v > l {
            return 1;
        }
        forbidden.clear();
        for &(u, s) in &constraints[v] {
            let f = match s {
                Sign::Pos => values[u],
                Sign::Neg => p - values[u],
            };
            if !forbidden.contains(&f) {
                forbidden.push(f);
            }
        }
        let allowed = (p - 1) - forbidden.len() as u64;
        if allowed == 0 {
            return 0;
        }
        if !consulted_later[v] {
            let rest = count(v + 1, l, p, values, constraints, consulted_later, forbidden);
            return allowed * rest;
        }
        let banned = forbidden.clone();
        let mut total = 0u64;
        for x in 1..p {
            if banned.contains(&x) {
                continue;
            }
            values[v] = x;
            total += count(v + 1, l, p, values, constraints, consulted_later, forbidden);
        }
        total
    }
    let mut values = vec![0u64; l + 1];
    let mut scratch = Vec::new();
    count(1, l, p, &mut values, &constraints, &consulted_later, &mut scratch)
}

fn odd_primes_above(floor: u64, how_many: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(how_many);
    let mut candidate = if floor < 3 { 3 } else { floor + 1 };
    if candidate % 2 == 0 {
        candidate += 1;
    }
    while primes.len() < how_many {
        if (3u64..)
            .step_by(2)
            .take_while(|d| d * d <= candidate)
            .all(|d| candidate % d != 0)
        {
            primes.push(candidate);
        }
        candidate += 2;
    }
    primes
}

/// Characteristic polynomial via finite-field point counts: the counts at the
/// `l+1` smallest odd primes above `2l` interpolate the unique degree-`l`
/// integer polynomial. Cross-checked against the lattice method whenever the
/// graph is small enough for the lattice to be computed.
pub fn char_poly_finite_field(g: &SignedGraph) -> Result<CharPoly, ArrangementError> {
    let l = g.vertex_count();
    if l == 0 {
        return Ok(CharPoly::one());
    }
    let primes = odd_primes_above(2 * l as u64, l + 1);
    let points: Vec<(i64, i64)> = primes
        .iter()
        .map(|&p| (p as i64, point_count_mod_p(g, p) as i64))
        .collect();
    let coeffs =
        interpolate_integer(&points).ok_or(ArrangementError::NonIntegerInterpolation)?;
    let poly = CharPoly::new(coeffs);
    if poly.degree() != l || !poly.is_monic() {
        return Err(ArrangementError::NonIntegerInterpolation);
    }
    if l <= DEFAULT_LATTICE_BOUND {
        let lattice = char_poly_lattice(g)?;
        assert_eq!(
            poly, lattice,
            "finite-field and lattice characteristic polynomials disagree on {g:?}"
        );
    }
    Ok(poly)
}

/// The restriction of the arrangement to one of its hyperplanes, expressed as
/// a signed graph on one fewer vertex: restricting to a coordinate hyperplane
/// deletes that vertex, restricting to an edge hyperplane contracts that edge
/// copy.
pub fn restrict_to_hyperplane(
    g: &SignedGraph,
    h: Hyperplane,
) -> Result<SignedGraph, ArrangementError> {
    let h = h.normalized();
    let ok = match h {
        Hyperplane::Coordinate(i) => i >= 1 && i <= g.vertex_count(),
        Hyperplane::Difference(i, j) => g.has_edge(i, j, Sign::Pos),
        Hyperplane::Sum(i, j) => g.has_edge(i, j, Sign::Neg),
    };
    if !ok {
        return Err(ArrangementError::HyperplaneNotInArrangement(h));
    }
    let restricted = match h {
        Hyperplane::Coordinate(i) => g.delete_vertex(i)?,
        Hyperplane::Difference(i, j) => g.contract_edge(i, j, Sign::Pos)?,
        Hyperplane::Sum(i, j) => g.contract_edge(i, j, Sign::Neg)?,
    };
    Ok(restricted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph;

    fn utriangle() -> SignedGraph {
        graph(3, &[(1, 2, '+'), (2, 3, '+'), (1, 3, '-')])
    }

    #[test]
    fn hyperplane_display_and_order() {
        assert_eq!(Hyperplane::Coordinate(1).to_string(), "x1 = 0");
        assert_eq!(Hyperplane::Difference(1, 2).to_string(), "x1 - x2 = 0");
        assert_eq!(Hyperplane::Sum(2, 3).to_string(), "x2 + x3 = 0");
        assert!(Hyperplane::Coordinate(9) < Hyperplane::Difference(1, 2));
        assert!(Hyperplane::Difference(9, 10) < Hyperplane::Sum(1, 2));
    }

    #[test]
    fn normals() {
        assert_eq!(Hyperplane::Coordinate(2).normal(3), vec![0, 1, 0]);
        assert_eq!(Hyperplane::Difference(1, 3).normal(3), vec![1, 0, -1]);
        assert_eq!(Hyperplane::Sum(2, 3).normal(3), vec![0, 1, 1]);
    }

    #[test]
    fn hyperplane_counts() {
        assert_eq!(
            hyperplanes_of(&SignedGraph::edgeless(2)),
            vec![Hyperplane::Coordinate(1), Hyperplane::Coordinate(2)]
        );
        assert_eq!(hyperplanes_of(&utriangle()).len(), 6);
        assert_eq!(hyperplanes_of(&SignedGraph::obstruction()).len(), 12);
        // A double edge contributes both hyperplanes.
        assert_eq!(hyperplanes_of(&graph(2, &[(1, 2, '2')])).len(), 4);
    }

    #[test]
    fn rref_canonicalizes() {
        assert_eq!(rref(&[vec![0, 2, 4], vec![0, 1, 2]]), vec![vec![0, 1, 2]]);
        assert_eq!(
            rref(&[vec![1, 1, 0], vec![1, -1, 0]]),
            vec![vec![1, 0, 0], vec![0, 1, 0]]
        );
        // Same row space, same canonical form.
        assert_eq!(
            rref(&[vec![1, 1], vec![0, 2]]),
            rref(&[vec![1, 3], vec![1, -1]])
        );
        assert_eq!(rref(&[vec![0, 0]]), Vec::<Vec<i64>>::new());
    }

    #[test]
    fn row_space_membership() {
        let basis = rref(&[vec![1, 0, -1], vec![0, 1, 1]]);
        assert!(in_row_space(&basis, &[1, 1, 0]));
        assert!(in_row_space(&basis, &[0, 0, 0]));
        assert!(!in_row_space(&basis, &[1, 0, 0]));
    }

    #[test]
    fn boolean_lattice_on_two_coordinates() {
        let lat = intersection_lattice(&SignedGraph::edgeless(2)).unwrap();
        assert_eq!(lat.flats().len(), 4);
        let origin = lat.flats().iter().find(|f| f.dim == 0).unwrap();
        assert_eq!(origin.mobius, 1);
        assert_eq!(lat.char_poly().coeffs(), &[1, -2, 1]);
    }

    #[test]
    fn single_coordinate_lattice() {
        let lat = intersection_lattice(&SignedGraph::edgeless(1)).unwrap();
        let mob: Vec<i64> = lat.flats().iter().map(|f| f.mobius).collect();
        assert_eq!(mob, vec![1, -1]);
    }

    #[test]
    fn unbalanced_triangle_char_poly() {
        let p = char_poly_lattice(&utriangle()).unwrap();
        assert_eq!(p.coeffs(), &[-7, 12, -6, 1]);
        assert_eq!(p.to_string(), "t^3 - 6*t^2 + 12*t - 7");
    }

    #[test]
    fn obstruction_char_poly() {
        let p = char_poly_lattice(&SignedGraph::obstruction()).unwrap();
        assert_eq!(p.coeffs(), &[51, -92, 52, -12, 1]);
    }

    #[test]
    fn edgeless_char_poly_is_power_of_t_minus_one() {
        let p = char_poly_lattice(&SignedGraph::edgeless(3)).unwrap();
        assert_eq!(p.coeffs(), &[-1, 3, -3, 1]);
    }

    #[test]
    fn complete_signed_pair_char_poly() {
        let p = char_poly_lattice(&SignedGraph::complete_signed(2)).unwrap();
        assert_eq!(p, CharPoly::from_roots(&[1, 3]));
    }

    #[test]
    fn lattice_bound_is_enforced() {
        let g = SignedGraph::edgeless(7);
        assert_eq!(
            intersection_lattice(&g).unwrap_err(),
            ArrangementError::LatticeBoundExceeded { got: 7, limit: 6 }
        );
        assert!(intersection_lattice_with_bound(&g, 7).is_ok());
    }

    #[test]
    fn frozen_point_counts() {
        // Boolean arrangement on 2 coordinates at p=3: (3-1)^2 = 4.
        assert_eq!(point_count_mod_p(&SignedGraph::edgeless(2), 3), 4);
        // Unbalanced triangle at p=3 equals its polynomial at t=3.
        assert_eq!(point_count_mod_p(&utriangle(), 3), 2);
        // Complete signed pair over p in {5, 7, 11}: (p-1)(p-3).
        let k2 = SignedGraph::complete_signed(2);
        assert_eq!(point_count_mod_p(&k2, 5), 8);
        assert_eq!(point_count_mod_p(&k2, 7), 24);
        assert_eq!(point_count_mod_p(&k2, 11), 80);
    }

    #[test]
    fn prime_selection() {
        assert_eq!(odd_primes_above(4, 3), vec![5, 7, 11]);
        assert_eq!(odd_primes_above(6, 4), vec![7, 11, 13, 17]);
        assert_eq!(odd_primes_above(10, 6), vec![11, 13, 17, 19, 23, 29]);
        assert_eq!(odd_primes_above(2, 1), vec![3]);
    }

    #[test]
    fn finite_field_matches_lattice_on_examples() {
        for g in [
            SignedGraph::edgeless(2),
            utriangle(),
            SignedGraph::complete_signed(2),
            SignedGraph::complete_signed(3),
            SignedGraph::obstruction(),
            graph(3, &[(1, 2, '2'), (2, 3, '+')]),
        ] {
            // char_poly_finite_field asserts agreement internally at this size.
            let ff = char_poly_finite_field(&g).unwrap();
            assert_eq!(ff, char_poly_lattice(&g).unwrap());
        }
    }

    #[test]
    fn finite_field_works_above_the_lattice_bound() {
        let g = SignedGraph::edgeless(7);
        let p = char_poly_finite_field(&g).unwrap();
        assert_eq!(p, CharPoly::from_roots(&[1; 7]));
    }

    #[test]
    fn zero_vertex_graph() {
        let g = SignedGraph::edgeless(0);
        assert_eq!(char_poly_finite_field(&g).unwrap(), CharPoly::one());
        assert_eq!(char_poly_lattice(&g).unwrap(), CharPoly::one());
    }

    #[test]
    fn restriction_examples() {
        // Coordinate restriction deletes the vertex.
        let g = graph(3, &[(1, 2, '+'), (2, 3, '-')]);
        let r = restrict_to_hyperplane(&g, Hyperplane::Coordinate(1)).unwrap();
        assert_eq!(r, graph(2, &[(1, 2, '-')]));
        // Edge restriction contracts the edge copy.
        let r = restrict_to_hyperplane(&g, Hyperplane::Difference(1, 2)).unwrap();
        assert_eq!(r, graph(2, &[(1, 2, '-')]));
        // Contracting any edge of the unbalanced triangle leaves a double edge.
        let r = restrict_to_hyperplane(&utriangle(), Hyperplane::Difference(1, 2)).unwrap();
        assert_eq!(r, graph(2, &[(1, 2, '2')]));
        let r = restrict_to_hyperplane(&utriangle(), Hyperplane::Sum(1, 3)).unwrap();
        assert_eq!(r, graph(2, &[(1, 2, '2')]));
    }

    #[test]
    fn restriction_rejects_missing_hyperplanes() {
        let g = graph(2, &[(1, 2, '+')]);
        assert_eq!(
            restrict_to_hyperplane(&g, Hyperplane::Sum(1, 2)).unwrap_err(),
            ArrangementError::HyperplaneNotInArrangement(Hyperplane::Sum(1, 2))
        );
        // Unnormalized pairs are accepted and normalized.
        assert!(restrict_to_hyperplane(&g, Hyperplane::Difference(2, 1)).is_ok());
    }

    #[test]
    fn restriction_satisfies_deletion_restriction_on_the_triangle() {
        // Removing the negative edge copy from the unbalanced triangle leaves
        // an all-positive path; chi(G) = chi(G minus e) - chi(G / e).
        let g = utriangle();
        let deleted = graph(3, &[(1, 2, '+'), (2, 3, '+')]);
        let restricted = restrict_to_hyperplane(&g, Hyperplane::Sum(1, 3)).unwrap();
        let chi = |g: &SignedGraph| char_poly_lattice(g).unwrap();
        let lhs = chi(&g);
        let expect: Vec<i64> = {
            let a = chi(&deleted);
            let b = chi(&restricted);
            // pad b to a's length before subtracting
            let mut c = a.coeffs().to_vec();
            for (k, &x) in b.coeffs().iter().enumerate() {
                c[k] -= x;
            }
            c
        };
        assert_eq!(lhs.coeffs(), &expect[..]);
    }
}
