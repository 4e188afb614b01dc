//! graph6 encoding for simple graphs.
//!
//! Only the header-less form is produced. Orders up to 62 use the one-byte
//! size prefix; 63 and 64 use the four-byte `~`-prefixed form. The upper
//! triangle is packed column by column, six bits per printable byte.

use super::{bit, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decode one graph6 string. A single trailing newline is tolerated.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.strip_suffix('\n').unwrap_or(text).as_bytes();
    let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    let body = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let skipped = bytes.len() - body.len();

    if let Some((i, &b)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(parse_err(skipped + i, format!("byte {b:#04x} outside 63..=126")));
    }
    let first = *body.first().ok_or_else(|| parse_err(skipped, "empty input"))?;

    let (n, header_len) = if first == 126 {
        if body.get(1) == Some(&126) {
            return Err(parse_err(skipped + 1, "orders above 258047 are not supported"));
        }
        if body.len() < 4 {
            return Err(parse_err(skipped + body.len(), "truncated size header"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 4)
    } else {
        ((first - BIAS) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(skipped, format!("order {n} exceeds {MAX_VERTICES}")));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = header_len + pairs.div_ceil(6);
    if body.len() < expected {
        return Err(parse_err(skipped + body.len(), "truncated adjacency data"));
    }
    if body.len() > expected {
        return Err(parse_err(skipped + expected, "trailing data after graph"));
    }

    let data = &body[header_len..];
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if !k.is_multiple_of(6) {
        let last = data[k / 6] - BIAS;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(parse_err(
                skipped + header_len + k / 6,
                "non-zero padding bits",
            ));
        }
    }
    Ok(Graph::from_masks(adj, 0))
}

/// Encode a simple graph. Graphs with loops are rejected.
pub fn to_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::UnsupportedFormat(
            "graph6 cannot represent loops".into(),
        ));
    }
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8, ((n >> 6) & 63) as u8, (n & 63) as u8].map(|x| x + BIAS));
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// graph6 of the simple part followed by `;loops=` and the looped vertices,
/// e.g. `A_;loops=0,1`. Loopless graphs give plain graph6.
pub fn to_graph6_with_loops(g: &Graph) -> Result<String> {
    let mut s = to_graph6(&g.simple_part())?;
    if g.loop_mask() != 0 {
        let list: Vec<String> = super::bits(g.loop_mask()).map(|v| v.to_string()).collect();
        s.push_str(";loops=");
        s.push_str(&list.join(","));
    }
    Ok(s)
}

/// Inverse of [`to_graph6_with_loops`]; plain graph6 is accepted too.
pub fn from_graph6_with_loops(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let Some((g6, loops)) = text.split_once(';') else {
        return from_graph6(text);
    };
    let mut g = from_graph6(g6)?;
    let list = loops
        .strip_prefix("loops=")
        .ok_or_else(|| parse_err(g6.len() + 1, "expected `loops=` after `;`"))?;
    for item in list.split(',').filter(|s| !s.is_empty()) {
        let v: usize = item
            .trim()
            .parse()
            .map_err(|_| parse_err(g6.len() + 1, format!("bad loop vertex `{item}`")))?;
        if v >= g.order() {
            return Err(parse_err(g6.len() + 1, format!("loop vertex {v} out of range")));
        }
        g.add_loop(v);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    // Reference strings produced by networkx's graph6 writer.
    #[test]
    fn known_strings() {
        assert_eq!(from_graph6("A_").unwrap(), path(2));
        assert_eq!(to_graph6(&path(2)).unwrap(), "A_");
        assert_eq!(from_graph6("C~").unwrap(), complete(4));
        assert_eq!(to_graph6(&path(4)).unwrap(), "Ch");
        assert_eq!(from_graph6("Ch").unwrap(), path(4));
        assert_eq!(to_graph6(&path(3)).unwrap(), "Bg");
        assert_eq!(to_graph6(&cycle(4)).unwrap(), "Cl");
    }

    #[test]
    fn cr_is_a_four_cycle() {
        let g = from_graph6("Cr").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(g.is_regular(2));
    }

    #[test]
    fn long_header_for_63_vertices() {
        let mut g = Graph::new(63);
        g.add_edge(0, 62);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let mut g = Graph::new(64);
        g.add_edge(5, 63);
        assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn empty_and_single_vertex() {
        assert_eq!(to_graph6(&Graph::new(0)).unwrap(), "?");
        assert_eq!(to_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(from_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn errors_name_offsets() {
        assert!(matches!(from_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(from_graph6("C~~"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(from_graph6("C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(from_graph6("C\x10"), Err(Error::Graph6 { offset: 1, .. })));
        // Padding bits set: "A" + 0b111111.
        assert!(matches!(from_graph6("A~"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(from_graph6("A_\n").is_ok());
        assert!(from_graph6(">>graph6<<A_").is_ok());
    }

    #[test]
    fn loops_are_unsupported() {
        let mut g = path(2);
        g.add_loop(0);
        assert!(matches!(to_graph6(&g), Err(Error::UnsupportedFormat(_))));
    }

    #[test]
    fn loops_suffix_round_trip() {
        let mut g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(to_graph6_with_loops(&g).unwrap(), "Bg");
        g.add_loop(0);
        g.add_loop(2);
        let s = to_graph6_with_loops(&g).unwrap();
        assert_eq!(s, "Bg;loops=0,2");
        assert_eq!(from_graph6_with_loops(&s).unwrap(), g);
        assert!(from_graph6_with_loops("Bg;loops=5").is_err());
        assert!(from_graph6_with_loops("Bg;x=1").is_err());
    }
}
