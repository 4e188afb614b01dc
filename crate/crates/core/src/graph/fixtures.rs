//! Named example graphs used throughout the tests and the CLI.
//!
//! Each fixture is written out as an edge list (or, for the two circulant-like
//! graphs, as the offset rule that generates them) so that it can be checked
//! independently of the family generators.

use super::Graph;
use crate::error::{Error, Result};

pub const FIXTURE_NAMES: &[&str] = &[
    "k1",
    "p2",
    "p3",
    "p4",
    "c3",
    "c4",
    "k4",
    "diamond",
    "star3",
    "paw",
    "ipso15",
    "ladder_l3",
    "e8",
    "ladder5_partial",
    "radialene3",
    "comb3",
    "fig4_k4_base",
    "fig6reg24",
];

/// Look up a fixture graph by name.
pub fn fixture(name: &str) -> Result<Graph> {
    let g = match name {
        "k1" => Graph::new(1),
        "p2" => Graph::from_edges(2, &[(0, 1)]),
        "p3" => Graph::from_edges(3, &[(0, 1), (1, 2)]),
        "p4" => Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]),
        "c3" => Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]),
        "c4" => Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
        "k4" => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        // K4 minus the edge 1-3.
        "diamond" => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
        "star3" => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]),
        // Triangle 0-1-2 with pendant 3 on vertex 0.
        "paw" => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
        "ipso15" => ipso15(),
        // 2 x 3 grid: rails 0-1-2 and 3-4-5, rungs on every row.
        "ladder_l3" => Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]),
        // Rail 0..4 of length five, rail 5-6-7 of length three, rungs 1-6 and 2-7.
        "e8" => Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (1, 6), (2, 7)],
        ),
        // Two rails of length five with rungs on the three middle rows.
        "ladder5_partial" => Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (1, 6),
                (2, 7),
                (3, 8),
            ],
        ),
        "radialene3" => Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        "comb3" => Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]),
        "fig4_k4_base" => fig4_k4_base(),
        "fig6reg24" => fig6reg24(),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Ok(g)
}

/// Offset rule of a circulant-like drawing on `n` positions numbered
/// `1..=n`: position `i` is joined to `i + o (mod n)` for every offset `o`
/// in `offsets[i % offsets.len()]`. Position `n` is vertex 0.
fn offset_graph(n: usize, offsets: &[&[usize]]) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..=n {
        for &o in offsets[i % offsets.len()] {
            g.add_edge(i % n, (i + o) % n);
        }
    }
    g
}

/// Order-15 ipso omni-insulator: positions congruent to 1, 2 and 0 mod 3
/// use offsets {1,4,6,9,11,14}, {1,3,11,12,14} and {1,3,4,12,14}.
fn ipso15() -> Graph {
    offset_graph(15, &[&[1, 3, 4, 12, 14], &[1, 4, 6, 9, 11, 14], &[1, 3, 11, 12, 14]])
}

/// 6-regular graph on 24 vertices with eight position classes mod 8.
fn fig6reg24() -> Graph {
    offset_graph(
        24,
        &[
            &[1, 3, 5, 7, 17, 23],
            &[1, 3, 5, 7, 17, 23],
            &[1, 3, 7, 9, 11, 23],
            &[1, 3, 11, 15, 21, 23],
            &[1, 3, 17, 19, 21, 23],
            &[1, 7, 13, 19, 21, 23],
            &[1, 13, 17, 19, 21, 23],
            &[1, 5, 7, 17, 21, 23],
        ],
    )
}

/// Minimum-degree-two conduction-isomorphic graph on 16 vertices: an inner
/// 8-cycle 0..7, a pendant 8+j on every inner vertex j, and the pendants
/// paired as 8-9, 10-11, 12-13, 14-15.
fn fig4_k4_base() -> Graph {
    let mut g = Graph::new(16);
    for j in 0..8 {
        g.add_edge(j, (j + 1) % 8);
        g.add_edge(j, 8 + j);
    }
    for i in 0..4 {
        g.add_edge(8 + 2 * i, 9 + 2 * i);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            assert!(g.is_simple() && g.is_connected(), "{name}");
        }
        assert!(matches!(fixture("petersen"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn ipso15_edge_rule() {
        let g = fixture("ipso15").unwrap();
        assert_eq!(g.order(), 15);
        assert_eq!(g.edge_count(), 40);
        // Ten vertices of degree 5, five of degree 6.
        let d = g.degree_sequence();
        assert_eq!(d.iter().filter(|&&x| x == 6).count(), 5);
        assert_eq!(d.iter().filter(|&&x| x == 5).count(), 10);
        // The class 1 offset list is closed under negation mod 15, so that
        // class only meets itself through mutual offsets.
        let first = [1usize, 4, 6, 9, 11, 14];
        assert!(first.iter().all(|o| first.contains(&(15 - o))));
    }

    #[test]
    fn reg24_graph_is_six_regular() {
        let g = fixture("fig6reg24").unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.is_regular(6));
        assert_eq!(g.edge_count(), 72);
    }

    #[test]
    fn small_fixtures() {
        let d = fixture("diamond").unwrap();
        assert_eq!(d.edge_count(), 5);
        assert_eq!(d.degree_sequence(), vec![3, 3, 2, 2]);
        let p4 = fixture("p4").unwrap();
        assert_eq!(p4.degree_sequence(), vec![2, 2, 1, 1]);
        let r = fixture("radialene3").unwrap();
        assert!(r.is_chemical() && !r.is_bipartite());
        for name in ["ladder_l3", "e8", "ladder5_partial", "comb3", "fig4_k4_base"] {
            let g = fixture(name).unwrap();
            assert!(g.is_chemical() && g.is_bipartite(), "{name}");
        }
        assert_eq!(fixture("fig4_k4_base").unwrap().min_degree(), 2);
    }
}
