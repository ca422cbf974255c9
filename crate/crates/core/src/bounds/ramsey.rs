use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest homogeneous set the certificate search will look for.
pub const MAX_RAMSEY_SET: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyKind {
    Clique,
    Independent,
}

/// `k + 1` vertices (1-based, increasing) inducing a clique or an independent set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyCertificate {
    pub kind: RamseyKind,
    pub vertices: Vec<usize>,
}

impl RamseyCertificate {
    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let want = self.kind == RamseyKind::Clique;
        self.vertices.iter().enumerate().all(|(a, &u)| {
            self.vertices[a + 1..].iter().all(|&v| u != v && g.has_edge(u, v) == want)
        })
    }
}

/// Finds `k + 1` vertices inducing a clique or an independent set, searching
/// cliques first and each in lexicographic order.
///
/// Every graph with at least `4^k` vertices has one. Below that order the
/// search may come back empty (`Ok(None)`); above it an empty result would be
/// a bug and is reported as an internal error.
pub fn ramsey_certificate(g: &Graph, k: usize) -> Result<Option<RamseyCertificate>> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let size = k + 1;
    if size > MAX_RAMSEY_SET {
        return Err(Error::param(format!(
            "homogeneous set of size {size} exceeds the search cap of {MAX_RAMSEY_SET}"
        )));
    }
    for kind in [RamseyKind::Clique, RamseyKind::Independent] {
        let want = kind == RamseyKind::Clique;
        let all: Vec<usize> = (0..g.order()).collect();
        let mut chosen = Vec::with_capacity(size);
        if extend(g, want, size, &all, &mut chosen) {
            return Ok(Some(RamseyCertificate {
                kind,
                vertices: chosen.iter().map(|v| v + 1).collect(),
            }));
        }
    }
    let guaranteed = 4usize.checked_pow(k as u32).is_some_and(|q| g.order() >= q);
    if guaranteed {
        return Err(Error::Internal(format!(
            "no clique or independent set of size {size} in a graph of order {}",
            g.order()
        )));
    }
    Ok(None)
}

/// `candidates` are vertices after the last chosen one that are compatible with all chosen.
fn extend(g: &Graph, want: bool, size: usize, candidates: &[usize], chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == size {
        return true;
    }
    let needed = size - chosen.len();
    for (pos, &v) in candidates.iter().enumerate() {
        if candidates.len() - pos < needed {
            return false;
        }
        let next: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&w| g.adjacent0(v, w) == want)
            .collect();
        chosen.push(v);
        if extend(g, want, size, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn cycle_edge_is_first_clique() {
        let c5 = generate(&GraphKind::Cycle(5), 0).unwrap();
        let cert = ramsey_certificate(&c5, 1).unwrap().unwrap();
        assert_eq!(cert, RamseyCertificate { kind: RamseyKind::Clique, vertices: vec![1, 2] });
    }

    #[test]
    fn empty_graph_gives_independent_pair() {
        let g = Graph::empty(4).unwrap();
        let cert = ramsey_certificate(&g, 1).unwrap().unwrap();
        assert_eq!(cert.kind, RamseyKind::Independent);
        assert!(cert.verify(&g));
    }

    /// Brute force over all (k+1)-subsets; independent of the backtracking.
    fn has_homogeneous_set(g: &Graph, size: usize) -> bool {
        let n = g.order();
        (0u64..1 << n).filter(|m| m.count_ones() as usize == size).any(|m| {
            let vs: Vec<usize> = (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect();
            [true, false].iter().any(|&want| {
                vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&v| g.has_edge(u, v) == want))
            })
        })
    }

    #[test]
    fn random_order_16_triples() {
        for seed in 0..20 {
            let g = generate(&GraphKind::ErdosRenyi { n: 16, p: 0.5 }, seed).unwrap();
            assert!(has_homogeneous_set(&g, 3));
            let cert = ramsey_certificate(&g, 2).unwrap().unwrap();
            assert_eq!(cert.vertices.len(), 3);
            assert!(cert.verify(&g));
        }
    }

    #[test]
    fn below_threshold_may_fail() {
        // C5 has neither a triangle nor an independent triple.
        let c5 = generate(&GraphKind::Cycle(5), 0).unwrap();
        assert!(!has_homogeneous_set(&c5, 3));
        assert_eq!(ramsey_certificate(&c5, 2).unwrap(), None);
    }

    #[test]
    fn parameter_errors() {
        let g = Graph::empty(4).unwrap();
        assert!(ramsey_certificate(&g, 0).is_err());
        assert!(ramsey_certificate(&g, MAX_RAMSEY_SET).is_err());
    }
}
