//! Simple undirected graphs stored as a bit-packed upper triangle.
//!
//! Vertices are numbered `1..=n` in the public API. Pair `{i, j}` with
//! `0 <= i < j` (zero-based) lives at bit `j(j-1)/2 + i`, which is the same
//! column-wise order graph6 uses, so a graph on few vertices can be read
//! straight off an enumeration bitmask.

mod generate;
mod graph6;

use std::fmt;

pub use generate::{generate, GraphKind};

use crate::error::{Error, Result};
use crate::limits::check_order;
use crate::spectra::SymMatrix;

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

#[inline]
pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    bits: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self::empty_unchecked(n))
    }

    pub(crate) fn empty_unchecked(n: usize) -> Self {
        Graph {
            order: n,
            bits: vec![0; pair_count(n).div_ceil(64)],
            edges: 0,
        }
    }

    /// Builds a graph from 1-based edge pairs. Repeated pairs are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            g.set(u - 1, v - 1, true);
        }
        Ok(g)
    }

    /// Builds a graph whose pair `p` (graph6 order) is an edge iff bit `p` of
    /// `mask` is set. Requires `n(n-1)/2 <= 64`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        check_order(n)?;
        let m = pair_count(n);
        if m > 64 {
            return Err(Error::param(format!("order {n} does not fit a 64-bit pair mask")));
        }
        if m < 64 && mask >> m != 0 {
            return Err(Error::param("pair mask has bits beyond n(n-1)/2"));
        }
        let mut g = Self::empty_unchecked(n);
        if m > 0 {
            g.bits[0] = mask;
        }
        g.edges = mask.count_ones() as usize;
        Ok(g)
    }

    /// Inverse of [`Graph::from_pair_mask`], for graphs with at most 11 vertices.
    pub fn pair_mask(&self) -> Option<u64> {
        (pair_count(self.order) <= 64).then(|| self.bits.first().copied().unwrap_or(0))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges, e(G).
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Adjacency test on 1-based vertices. Out-of-range vertices are never adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u == 0 || v == 0 || u > self.order || v > self.order {
            return false;
        }
        self.adjacent0(u - 1, v - 1)
    }

    #[inline]
    pub(crate) fn adjacent0(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let p = pair_index(i, j);
        self.bits[p / 64] >> (p % 64) & 1 == 1
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let p = pair_index(i, j);
        let word = &mut self.bits[p / 64];
        let bit = 1u64 << (p % 64);
        let was = *word & bit != 0;
        if was != on {
            *word ^= bit;
            if on {
                self.edges += 1;
            } else {
                self.edges -= 1;
            }
        }
    }

    /// Flips the pair `{u, v}` (zero-based).
    pub(crate) fn toggle0(&mut self, u: usize, v: usize) {
        let on = !self.adjacent0(u, v);
        self.set(u, v, on);
    }

    pub fn degree(&self, u: usize) -> usize {
        if u == 0 || u > self.order {
            return 0;
        }
        (0..self.order).filter(|&v| self.adjacent0(u - 1, v)).count()
    }

    /// Edges as 1-based pairs `(u, v)` with `u < v`, ordered by `(v, u)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.order).flat_map(move |j| {
            (0..j).filter(move |&i| self.adjacent0(i, j)).map(move |i| (i + 1, j + 1))
        })
    }

    pub fn complement(&self) -> Graph {
        let m = pair_count(self.order);
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        if !m.is_multiple_of(64) {
            if let Some(last) = bits.last_mut() {
                *last &= (1u64 << (m % 64)) - 1;
            }
        }
        Graph {
            order: self.order,
            bits,
            edges: m - self.edges,
        }
    }

    /// G^(t): each vertex becomes `t` independent vertices and each edge a
    /// complete bipartite join. Block vertex `(u, j)` is `(u-1)t + j`.
    pub fn blowup_independent(&self, t: usize) -> Result<Graph> {
        self.blowup(t, false)
    }

    /// G^[t]: as [`Graph::blowup_independent`] but each block is a clique K_t.
    pub fn blowup_clique(&self, t: usize) -> Result<Graph> {
        self.blowup(t, true)
    }

    fn blowup(&self, t: usize, cliques: bool) -> Result<Graph> {
        if t == 0 {
            return Err(Error::param("blow-up factor t must be at least 1"));
        }
        let n = self.order.checked_mul(t).ok_or(Error::OrderTooLarge {
            order: usize::MAX,
            cap: crate::limits::max_order(),
        })?;
        check_order(n)?;
        let mut g = Graph::empty_unchecked(n);
        for x in 1..n {
            for y in 0..x {
                let (bu, bv) = (x / t, y / t);
                let on = if bu == bv { cliques } else { self.adjacent0(bu, bv) };
                if on {
                    g.set(x, y, true);
                }
            }
        }
        Ok(g)
    }

    /// The subgraph induced by the 1-based vertex list `vertices`, relabelled
    /// `1..=|S|` in the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::param("induced subgraph needs a nonempty vertex set"));
        }
        let mut seen = vec![false; self.order];
        for &v in vertices {
            self.check_vertex(v)?;
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::param(format!("vertex {v} repeated in subset")));
            }
        }
        let mut h = Graph::empty_unchecked(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().take(a) {
                if self.adjacent0(u - 1, v - 1) {
                    h.set(a, b, true);
                }
            }
        }
        Ok(h)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v-1]` (1-based).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::param("permutation length must equal the order"));
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::param("relabelling is not a permutation"));
            }
        }
        Graph::from_edges(self.order, self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])))
    }

    /// True iff every vertex has the same degree.
    pub fn is_regular(&self) -> bool {
        let d = self.degree(1);
        (2..=self.order).all(|u| self.degree(u) == d)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> SymMatrix {
        let n = self.order;
        let mut m = SymMatrix::zeros(n);
        for (u, v) in self.edges() {
            m.set(u - 1, v - 1, 1.0);
        }
        m
    }

    pub(crate) fn fill_adjacency(&self, out: &mut [f64]) {
        let n = self.order;
        out[..n * n].iter_mut().for_each(|x| *x = 0.0);
        for j in 1..n {
            for i in 0..j {
                if self.adjacent0(i, j) {
                    out[i * n + j] = 1.0;
                    out[j * n + i] = 1.0;
                }
            }
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.order {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, n={}, e={})", self.to_graph6(), self.order, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        generate(&GraphKind::Cycle(n), 0).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generate(&GraphKind::Complete(n), 0).unwrap()
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = complete(4);
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        // 1->1, 2->3, 3->5, 4->2, 5->4 maps C5 onto its complement.
        let image = c5.relabel(&[1, 3, 5, 2, 4]).unwrap();
        assert_eq!(image, c5.complement());
    }

    #[test]
    fn blowup_of_an_edge_is_complete_bipartite() {
        let k2 = complete(2);
        let k33 = generate(&GraphKind::CompleteBipartite(3, 3), 0).unwrap();
        assert_eq!(k2.blowup_independent(3).unwrap(), k33);
        assert_eq!(k2.blowup_clique(2).unwrap(), complete(4));
    }

    #[test]
    fn blowup_identity_and_counts() {
        let c5 = cycle(5);
        assert_eq!(c5.blowup_independent(1).unwrap(), c5);
        assert_eq!(c5.blowup_clique(1).unwrap(), c5);
        let b = c5.blowup_independent(2).unwrap();
        assert_eq!((b.order(), b.edge_count()), (10, 20));
        assert!(c5.blowup_independent(0).is_err());
        assert!(c5.blowup_clique(0).is_err());
    }

    #[test]
    fn clique_blowup_of_empty_is_disjoint_cliques() {
        let g = Graph::empty(3).unwrap().blowup_clique(4).unwrap();
        assert_eq!(g.edge_count(), 3 * 6);
        for u in 1..=12 {
            for v in 1..=12 {
                if u != v {
                    assert_eq!(g.has_edge(u, v), (u - 1) / 4 == (v - 1) / 4);
                }
            }
        }
    }

    #[test]
    fn induced_subgraphs() {
        assert_eq!(complete(5).induced_subgraph(&[1, 2, 3]).unwrap(), complete(3));
        let p3 = generate(&GraphKind::Path(3), 0).unwrap();
        assert_eq!(cycle(5).induced_subgraph(&[1, 2, 3]).unwrap(), p3);
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(&[1, 2, 3, 4, 5]).unwrap(), c5);
        assert!(c5.induced_subgraph(&[]).is_err());
        assert!(matches!(
            c5.induced_subgraph(&[1, 6]),
            Err(Error::VertexOutOfRange { vertex: 6, .. })
        ));
        assert!(c5.induced_subgraph(&[0]).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::empty(0), Err(Error::EmptyOrder));
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 4)]).is_err());
        assert!(matches!(
            Graph::empty(crate::limits::DEFAULT_MAX_ORDER + 1),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn pair_mask_round_trip() {
        let g = Graph::from_pair_mask(4, 0b101_001).unwrap();
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(1, 3));
        assert!(g.has_edge(1, 4) && g.has_edge(3, 4));
        assert_eq!(g.pair_mask(), Some(0b101_001));
        assert!(Graph::from_pair_mask(4, 1 << 6).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut p = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[p] {
                            g.set(i, j, true);
                        }
                        p += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(g in arb_graph(20)) {
            let c = g.complement();
            prop_assert_eq!(c.edge_count() + g.edge_count(), pair_count(g.order()));
            for (u, v) in c.edges() {
                prop_assert!(!g.has_edge(u, v));
            }
            prop_assert_eq!(c.complement(), g);
        }

        #[test]
        fn blowup_edge_counts_and_duality(g in arb_graph(9), t in 1usize..5) {
            let n = g.order();
            let ind = g.blowup_independent(t).unwrap();
            let cl = g.blowup_clique(t).unwrap();
            prop_assert_eq!(ind.edge_count(), t * t * g.edge_count());
            prop_assert_eq!(cl.edge_count(), t * t * g.edge_count() + n * t * (t - 1) / 2);
            prop_assert_eq!(g.complement().blowup_independent(t).unwrap().complement(), cl);
        }

        #[test]
        fn edges_iterator_matches_count(g in arb_graph(16)) {
            prop_assert_eq!(g.edges().count(), g.edge_count());
            let degree_sum: usize = (1..=g.order()).map(|u| g.degree(u)).sum();
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
        }
    }
}
