//! graph6 codec, single-byte size form only (`n <= 62`).
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian into 6-bit groups, each group offset by 63, zero padded.

use super::Graph;
use crate::error::Graph6Error;
use crate::vertex_set::VertexSet;

pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;
const MAX_PRINTABLE: u8 = 126;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&size, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(OFFSET..=MAX_PRINTABLE).contains(&b))
    {
        return Err(Graph6Error::ByteOutOfRange { byte, offset });
    }
    if size == MAX_PRINTABLE {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let n = (size - OFFSET) as usize;
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            extra: body.len() - expected,
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    let bit = |k: usize| ((body[k / 6] - OFFSET) >> (5 - k % 6)) & 1 == 1;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    while k < expected * 6 {
        if bit(k) {
            return Err(Graph6Error::NonZeroPadding);
        }
        k += 1;
    }
    // Symmetric and loop-free by construction.
    Ok(Graph::from_adjacency(adj).expect("graph6 decoding yields a simple graph"))
}

/// Encodes `g` under its current labelling (no canonicalisation).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tiny_graphs() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(encode_graph6(&k1).unwrap(), "@");

        // 'A' = 65 -> n = 2; '_' = 95 -> 32 = 0b100000 -> x(0,1) = 1
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        assert_eq!(encode_graph6(&k2).unwrap(), "A_");

        let k0 = parse_graph6("?").unwrap();
        assert_eq!(k0.order(), 0);
        assert_eq!(encode_graph6(&k0).unwrap(), "?");
    }

    #[test]
    fn petgraph_reference_string() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A "),
            Err(Graph6Error::ByteOutOfRange {
                byte: b' ',
                offset: 1
            })
        );
        assert_eq!(
            parse_graph6("A\x7f"),
            Err(Graph6Error::ByteOutOfRange {
                byte: 0x7f,
                offset: 1
            })
        );
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedOrder));
        assert_eq!(
            parse_graph6("A"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("A__"),
            Err(Graph6Error::TrailingData { extra: 1 })
        );
        // x(0,1) = 1 followed by a set padding bit.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn encode_rejects_large_orders() {
        let g = Graph::empty(63).unwrap();
        assert_eq!(encode_graph6(&g), Err(Graph6Error::OrderTooLarge(63)));
        let g = Graph::empty(62).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for j in 1..n {
                        for i in 0..j {
                            if bits[k] {
                                edges.push((i, j));
                            }
                            k += 1;
                        }
                    }
                    Graph::from_edges(n, edges).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_encode(g in arb_graph(24)) {
            let s = encode_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
