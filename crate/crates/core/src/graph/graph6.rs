//! graph6 codec (McKay's format): size prefix `N(n)` followed by the upper
//! triangle read column by column, six bits per printable byte.

use std::str::FromStr;

use super::{pair_count, Graph};
use crate::error::{Error, Result};
use crate::limits::check_order;

const HEADER: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn push_sextets(out: &mut Vec<u8>, value: u64, count: usize) {
    for k in (0..count).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

impl Graph {
    /// Encodes the graph as graph6 text. No header and no trailing newline.
    pub fn to_graph6(&self) -> String {
        let n = self.order;
        let mut out = Vec::with_capacity(8 + pair_count(n).div_ceil(6));
        if n <= SMALL_MAX {
            out.push(n as u8 + 63);
        } else if n <= MEDIUM_MAX {
            out.push(126);
            push_sextets(&mut out, n as u64, 3);
        } else {
            out.extend([126, 126]);
            push_sextets(&mut out, n as u64, 6);
        }

        let m = pair_count(n);
        let mut acc = 0u8;
        let mut filled = 0;
        for p in 0..m {
            let bit = (self.bits[p / 64] >> (p % 64) & 1) as u8;
            acc = (acc << 1) | bit;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        // Every byte is in 63..=126.
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }

    /// Decodes graph6 text. An optional `>>graph6<<` header and surrounding
    /// whitespace are accepted.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let body = text.trim();
        let body = body.strip_prefix(HEADER).unwrap_or(body).as_bytes();
        if body.is_empty() {
            return Err(malformed("empty input"));
        }
        if let Some(&c) = body.iter().find(|&&c| !(63..=126).contains(&c)) {
            return Err(malformed(format!("byte {c} outside 63..=126")));
        }

        let sextet = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
        let (n, data) = if body[0] != 126 {
            ((body[0] - 63) as usize, &body[1..])
        } else if body.len() >= 2 && body[1] == 126 {
            if body.len() < 8 {
                return Err(malformed("truncated size prefix"));
            }
            (sextet(&body[2..8]), &body[8..])
        } else {
            if body.len() < 4 {
                return Err(malformed("truncated size prefix"));
            }
            (sextet(&body[1..4]), &body[4..])
        };
        check_order(n).map_err(|e| match e {
            Error::EmptyOrder => malformed("order 0 is not a graph"),
            other => other,
        })?;

        let m = pair_count(n);
        let expected = m.div_ceil(6);
        if data.len() != expected {
            return Err(malformed(format!(
                "order {n} needs {expected} data bytes, found {}",
                data.len()
            )));
        }
        let mut g = Graph::empty_unchecked(n);
        for (b, &c) in data.iter().enumerate() {
            let chunk = c - 63;
            for k in 0..6 {
                let p = 6 * b + k;
                let bit = (chunk >> (5 - k)) & 1 == 1;
                if p >= m {
                    if bit {
                        return Err(malformed("nonzero padding bits"));
                    }
                    continue;
                }
                if bit {
                    g.bits[p / 64] |= 1 << (p % 64);
                    g.edges += 1;
                }
            }
        }
        Ok(g)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::from_graph6(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use proptest::prelude::*;

    #[test]
    fn triangle_by_hand() {
        // n=3 -> 'B'; bits 111 padded to 111000 = 56 -> 'w'.
        let k3 = generate(&GraphKind::Complete(3), 0).unwrap();
        assert_eq!(k3.to_graph6(), "Bw");
        assert_eq!(Graph::from_graph6("Bw").unwrap(), k3);
    }

    #[test]
    fn petgraph_reference_string() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(1, 3), (1, 5), (2, 4), (4, 5)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
    }

    #[test]
    fn header_and_whitespace_accepted() {
        let g = Graph::from_graph6(">>graph6<<Bw\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.to_graph6(), "Bw");
    }

    #[test]
    fn rejects_malformed_inputs() {
        for bad in ["", "   ", "!!", "B", "Bww", "Bx", "?", "~", "~??", "C\u{e9}"] {
            assert!(Graph::from_graph6(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn large_order_prefix() {
        let g = Graph::empty(100).unwrap();
        let text = g.to_graph6();
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(g.to_graph6(), "@");
        assert_eq!(Graph::from_graph6("@").unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..80, seed in any::<u64>(), p in 0.0f64..=1.0) {
            let g = generate(&GraphKind::ErdosRenyi { n, p }, seed).unwrap();
            let text = g.to_graph6();
            let back = Graph::from_graph6(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.to_graph6(), text);
        }
    }
}
