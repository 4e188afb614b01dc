//! Infinite families of conduction-isomorphic graphs and their explicit
//! isomorphisms onto their conduction graphs.
//!
//! Vertices are numbered in the block order of the defining block matrices,
//! so the witness maps apply verbatim.

use std::fmt;

use crate::classify::conduction_isomorphism;
use crate::error::{Error, Result};
use crate::graph::named::{cycle, path};
use crate::graph::{Graph, MAX_VERTICES};
use crate::linalg::IntMatrix;

/// `n x n` 0-1 matrix with a single one per row: column `i + a` on even rows
/// and `i - a` on odd rows, indices mod `n`.
pub fn f_matrix(n: usize, a: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    let n_i = n as i64;
    for i in 0..n {
        let j = if i % 2 == 0 { i as i64 + a } else { i as i64 - a };
        m.set(i, j.rem_euclid(n_i) as usize, 1);
    }
    m
}

/// Cyclic permutation matrix with `P[i][i-1] = 1`.
pub fn cyclic_permutation(n: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, (i + n - 1) % n, 1);
    }
    m
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

/// Iterated corona: each round attaches a pendant vertex `j + m` to every
/// vertex `j` of the current `m`-vertex graph.
pub fn corona(base: &Graph, iterations: usize) -> Result<Graph> {
    if iterations == 0 {
        return Err(Error::Domain("corona needs at least one iteration".into()));
    }
    if !base.is_simple() {
        return Err(Error::Domain("corona base must be simple".into()));
    }
    let mut g = base.clone();
    for _ in 0..iterations {
        let m = g.order();
        check_order(2 * m)?;
        let mut next = Graph::new(2 * m);
        for (u, v) in g.edges() {
            next.add_edge(u, v);
        }
        for j in 0..m {
            next.add_edge(j, j + m);
        }
        g = next;
    }
    Ok(g)
}

/// Spectrum of the corona of a graph with spectrum `base`: each `λ` gives
/// the two roots of `μ^2 - λμ - 1`. Returned in descending order.
pub fn corona_spectrum(base: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = base
        .iter()
        .flat_map(|&l| {
            let r = (l * l + 4.0).sqrt();
            [(l + r) / 2.0, (l - r) / 2.0]
        })
        .collect();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

fn from_blocks(blocks: [[&IntMatrix; 2]; 2]) -> Graph {
    let top = blocks[0][0].rows();
    let n = top + blocks[1][1].rows();
    let mut g = Graph::new(n);
    for (bi, row) in blocks.iter().enumerate() {
        for (bj, m) in row.iter().enumerate() {
            let (oi, oj) = (bi * top, bj * top);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let (u, v) = (oi + i, oj + j);
                    if u < v && m.get(i, j) != 0 {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    g
}

/// Chemical graph on `4k` vertices with minimum degree 2.
pub fn min_deg2_graph(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::Domain("min_deg2 needs k >= 2".into()));
    }
    check_order(4 * k)?;
    let n = 2 * k;
    let ring = f_matrix(n, 1).add(&f_matrix(n, -1));
    let id = f_matrix(n, 0);
    let matching = f_matrix(n, 1);
    Ok(from_blocks([[&ring, &id], [&id, &matching]]))
}

/// Graph on `2k` vertices with minimum degree `2k - 5`.
pub fn large_min_deg_graph(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Domain("large_min_deg needs k >= 3".into()));
    }
    check_order(2 * k)?;
    let j = IntMatrix::from_rows(&vec![vec![1; k]; k]);
    let i = IntMatrix::identity(k);
    let p = cyclic_permutation(k);
    let p_inv = p.transpose();
    let j_i = j.add(&i.scale(-1));
    let tr = j_i.add(&p.scale(-1));
    let bl = j_i.add(&p_inv.scale(-1));
    let br = bl.add(&p.scale(-1));
    Ok(from_blocks([[&j_i, &tr], [&bl, &br]]))
}

/// Canonical double cover: vertex `(u, j)` is `u + j n`, and every edge `uv`
/// gives `(u, 0)(v, 1)` and `(u, 1)(v, 0)`.
pub fn canonical_double_cover(base: &Graph) -> Result<Graph> {
    if !base.is_simple() {
        return Err(Error::Domain("double cover base must be simple".into()));
    }
    let n = base.order();
    check_order(2 * n)?;
    let mut g = Graph::new(2 * n);
    for (u, v) in base.edges() {
        g.add_edge(u, v + n);
        g.add_edge(u + n, v);
    }
    Ok(g)
}

/// Chemical graph on `4k - 4` vertices with minimum degree 1: the path
/// `0 .. 2k-1`, a pendant-pair block on `2k .. 4k-5`, and vertex `i` of the
/// path joined to `2k + i - 3` for `3 <= i <= 2k - 2`.
pub fn appendix_family_graph(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Domain("appendix family needs k >= 3".into()));
    }
    let n = 2 * k;
    let m = 2 * k - 4;
    check_order(n + m)?;
    let mut top = f_matrix(n, 1).add(&f_matrix(n, -1));
    top.set(0, n - 1, 0);
    top.set(n - 1, 0, 0);
    let mut a = IntMatrix::zeros(n, m);
    for r in 0..m {
        a.set(r + 3, r, 1);
    }
    let g = {
        let mut g = Graph::new(n + m);
        for u in 0..n {
            for v in u + 1..n {
                if top.get(u, v) != 0 {
                    g.add_edge(u, v);
                }
            }
            for c in 0..m {
                if a.get(u, c) != 0 {
                    g.add_edge(u, n + c);
                }
            }
        }
        let pairs = f_matrix(m, 1);
        for i in 0..m {
            for j in i + 1..m {
                if pairs.get(i, j) != 0 {
                    g.add_edge(n + i, n + j);
                }
            }
        }
        g
    };
    Ok(g)
}

/// A member of one of the families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Corona { base: Graph, iterations: usize },
    /// Corona of the path on `k` vertices.
    Comb { k: usize },
    /// Corona of the cycle on `k` vertices.
    Radialene { k: usize },
    MinDeg2 { k: usize },
    LargeMinDeg { k: usize },
    /// Double cover of a connected non-bipartite conduction-isomorphic graph.
    Cdc { base: Graph },
    Appendix { k: usize },
}

impl FamilySpec {
    pub const NAMES: [&'static str; 7] = [
        "corona",
        "comb",
        "radialene",
        "min_deg2",
        "large_min_deg",
        "cdc",
        "appendix",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Corona { .. } => "corona",
            FamilySpec::Comb { .. } => "comb",
            FamilySpec::Radialene { .. } => "radialene",
            FamilySpec::MinDeg2 { .. } => "min_deg2",
            FamilySpec::LargeMinDeg { .. } => "large_min_deg",
            FamilySpec::Cdc { .. } => "cdc",
            FamilySpec::Appendix { .. } => "appendix",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Domain(msg.into()));
        match self {
            FamilySpec::Corona { iterations, .. } if *iterations == 0 => {
                bad("corona needs at least one iteration")
            }
            FamilySpec::Comb { k } if *k == 0 => bad("comb needs k >= 1"),
            FamilySpec::Radialene { k } if *k < 3 => bad("radialene needs k >= 3"),
            FamilySpec::MinDeg2 { k } if *k < 2 => bad("min_deg2 needs k >= 2"),
            FamilySpec::LargeMinDeg { k } if *k < 3 => bad("large_min_deg needs k >= 3"),
            FamilySpec::Appendix { k } if *k < 3 => bad("appendix needs k >= 3"),
            FamilySpec::Cdc { base } if !base.is_connected() || base.is_bipartite() => {
                bad("cdc base must be connected and non-bipartite")
            }
            _ => Ok(()),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            FamilySpec::Corona { base, iterations } => corona(base, *iterations),
            FamilySpec::Comb { k } => corona(&path(*k), 1),
            FamilySpec::Radialene { k } => corona(&cycle(*k), 1),
            FamilySpec::MinDeg2 { k } => min_deg2_graph(*k),
            FamilySpec::LargeMinDeg { k } => large_min_deg_graph(*k),
            FamilySpec::Cdc { base } => canonical_double_cover(base),
            FamilySpec::Appendix { k } => appendix_family_graph(*k),
        }
    }

    /// The explicit isomorphism from the family member onto its conduction
    /// graph, `h[v]` being the image of `v`.
    pub fn witness(&self) -> Result<Vec<usize>> {
        self.validate()?;
        let swap_halves = |n: usize| -> Vec<usize> { (0..n).map(|j| (j + n / 2) % n).collect() };
        Ok(match self {
            FamilySpec::Corona { .. } | FamilySpec::Comb { .. } | FamilySpec::Radialene { .. } => {
                swap_halves(self.graph()?.order())
            }
            FamilySpec::MinDeg2 { k } => (0..4 * k).map(|u| min_deg2_witness(*k, u)).collect(),
            FamilySpec::LargeMinDeg { k } => {
                (0..2 * k).map(|u| large_min_deg_witness(*k, u)).collect()
            }
            FamilySpec::Appendix { k } => {
                (0..4 * k - 4).map(|u| appendix_witness(*k, u)).collect()
            }
            FamilySpec::Cdc { base } => {
                let h = conduction_isomorphism(base)?.ok_or_else(|| {
                    Error::Domain("cdc base is not conduction-isomorphic".into())
                })?;
                let n = base.order();
                (0..2 * n).map(|x| h[x % n] + (x / n) * n).collect()
            }
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Corona { base, iterations } => {
                write!(f, "corona(n={}, k={iterations})", base.order())
            }
            FamilySpec::Cdc { base } => write!(f, "cdc(n={})", base.order()),
            FamilySpec::Comb { k }
            | FamilySpec::Radialene { k }
            | FamilySpec::MinDeg2 { k }
            | FamilySpec::LargeMinDeg { k }
            | FamilySpec::Appendix { k } => write!(f, "{}(k={k})", self.name()),
        }
    }
}

fn min_deg2_witness(k: usize, u: usize) -> usize {
    let n = 2 * k;
    match (u < n, u.is_multiple_of(2)) {
        (true, true) => u + n,
        (true, false) => (u + 2) % n + n,
        (false, true) => (u + 2) % n,
        (false, false) => u - n,
    }
}

fn large_min_deg_witness(k: usize, u: usize) -> usize {
    if u < k {
        k + (u + k - 1) % k
    } else {
        u - k
    }
}

/// The second case is applied as `u - (2k - 2)`: the literal `2k - 2 - u`
/// sends `2k - 1` to `-1`.
fn appendix_witness(k: usize, u: usize) -> usize {
    let (a, b) = (2 * k - 2, 2 * k - 1);
    if u <= 1 {
        a + u
    } else if u == a || u == b {
        u - a
    } else if u.is_multiple_of(2) {
        4 * k - 4 - u
    } else {
        4 * k - 2 - u
    }
}

/// The appendix witness exactly as displayed, with the second case taken
/// literally. `None` where it leaves the vertex range.
pub fn appendix_witness_as_printed(k: usize) -> Vec<Option<usize>> {
    let (a, b) = (2 * k as i64 - 2, 2 * k as i64 - 1);
    (0..4 * k as i64 - 4)
        .map(|u| {
            let h = if u <= 1 {
                a + u
            } else if u == a || u == b {
                a - u
            } else if u % 2 == 0 {
                4 * k as i64 - 4 - u
            } else {
                4 * k as i64 - 2 - u
            };
            (0..4 * k as i64 - 4).contains(&h).then_some(h as usize)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conduction::conduction_graph;
    use crate::graph::fixture;
    use crate::isomorphism::is_isomorphism;
    use crate::linalg::{float_spectrum, inverse, Rational};

    fn int(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn f_matrix_identities() {
        for k in 1..=6usize {
            let n = 2 * k;
            assert_eq!(f_matrix(n, 0), IntMatrix::identity(n));
            for a in -4i64..=4 {
                let t = f_matrix(n, a).transpose();
                let expected = if a % 2 != 0 { f_matrix(n, a) } else { f_matrix(n, -a) };
                assert_eq!(t, expected, "transpose k={k} a={a}");
                for b in -4i64..=4 {
                    let prod = f_matrix(n, a).mul(&f_matrix(n, b));
                    let expected = if a % 2 != 0 { f_matrix(n, a - b) } else { f_matrix(n, a + b) };
                    assert_eq!(prod, expected, "product k={k} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn corona_examples() {
        assert_eq!(corona(&path(3), 1).unwrap(), fixture("comb3").unwrap());
        assert_eq!(corona(&cycle(3), 1).unwrap(), fixture("radialene3").unwrap());
        assert_eq!(corona(&Graph::new(1), 1).unwrap(), path(2));
        assert_eq!(corona(&path(3), 3).unwrap().order(), 24);
        assert!(corona(&path(5), 4).is_err());
    }

    #[test]
    fn corona_spectrum_examples() {
        assert_eq!(corona_spectrum(&[0.0]), vec![1.0, -1.0]);
        let s2 = 2f64.sqrt();
        let predicted = corona_spectrum(&[s2, 0.0, -s2]);
        let actual = float_spectrum(&corona(&path(3), 1).unwrap().adjacency_matrix());
        for (a, b) in predicted.iter().zip(&actual) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn min_deg2_matches_figure_and_inverse() {
        assert_eq!(min_deg2_graph(4).unwrap(), fixture("fig4_k4_base").unwrap());
        for k in 2..=5 {
            let g = min_deg2_graph(k).unwrap();
            assert!(g.is_chemical() && g.min_degree() == 2);
            let n = 2 * k;
            let inv = inverse(&g.adjacency_matrix()).unwrap();
            let tl = f_matrix(n, -1);
            let tr = f_matrix(n, -2).scale(-1);
            let bl = f_matrix(n, 2).scale(-1);
            let br = f_matrix(n, 1).add(&f_matrix(n, 3));
            for i in 0..2 * n {
                for j in 0..2 * n {
                    let block = match (i < n, j < n) {
                        (true, true) => &tl,
                        (true, false) => &tr,
                        (false, true) => &bl,
                        (false, false) => &br,
                    };
                    assert_eq!(inv.get(i, j), &int(block.get(i % n, j % n)), "k={k} ({i},{j})");
                }
            }
        }
        let h = FamilySpec::MinDeg2 { k: 2 }.witness().unwrap();
        assert_eq!((h[0], h[1], h[4], h[5]), (4, 7, 2, 1));
    }

    #[test]
    fn large_min_deg_degrees() {
        assert!(crate::isomorphism::are_isomorphic(
            &large_min_deg_graph(3).unwrap(),
            &fixture("radialene3").unwrap()
        )
        .is_some());
        for k in 3..=8 {
            let g = large_min_deg_graph(k).unwrap();
            let mut expected = vec![2 * k - 3; k];
            expected.extend(vec![2 * k - 5; k]);
            assert_eq!(g.degree_sequence(), expected);
        }
        assert_eq!(FamilySpec::LargeMinDeg { k: 3 }.witness().unwrap()[0], 5);
    }

    #[test]
    fn double_cover() {
        let r = fixture("radialene3").unwrap();
        let h = canonical_double_cover(&r).unwrap();
        assert!(h.is_bipartite() && h.is_connected() && h.order() == 12);
        assert!(!canonical_double_cover(&cycle(4)).unwrap().is_connected());
        let mut d = h.degree_sequence();
        d.dedup();
        let mut base = r.degree_sequence();
        base.dedup();
        assert_eq!(d, base);
    }

    #[test]
    fn appendix_family() {
        for k in 3..=6 {
            let g = appendix_family_graph(k).unwrap();
            assert_eq!(g.order(), 4 * k - 4);
            assert!(g.is_chemical() && g.min_degree() == 1 && g.is_connected());
        }
        assert_eq!(FamilySpec::Appendix { k: 3 }.witness().unwrap()[0], 4);
        // As printed, the second case sends 2k-1 outside the vertex set.
        let printed = appendix_witness_as_printed(4);
        assert_eq!(printed[7], None);
        assert!(printed.iter().enumerate().all(|(u, h)| u == 7 || h.is_some()));
    }

    #[test]
    fn witnesses_are_conduction_isomorphisms() {
        let specs = [
            FamilySpec::Comb { k: 4 },
            FamilySpec::Radialene { k: 5 },
            FamilySpec::MinDeg2 { k: 3 },
            FamilySpec::LargeMinDeg { k: 5 },
            FamilySpec::Appendix { k: 4 },
            FamilySpec::Cdc { base: fixture("radialene3").unwrap() },
        ];
        for spec in specs {
            let g = spec.graph().unwrap();
            let cg = conduction_graph(&g).unwrap();
            let h = spec.witness().unwrap();
            assert!(is_isomorphism(&g, cg.graph(), &h), "{spec}");
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(FamilySpec::MinDeg2 { k: 1 }.graph().is_err());
        assert!(FamilySpec::Cdc { base: cycle(4) }.graph().is_err());
        assert!(FamilySpec::Appendix { k: 2 }.witness().is_err());
    }

    #[test]
    fn orthogonal_zero_one_matrices_are_permutations() {
        for n in 1..=4usize {
            for mask in 0u32..(1 << (n * n)) {
                let m = IntMatrix::from_rows(
                    &(0..n)
                        .map(|i| (0..n).map(|j| ((mask >> (i * n + j)) & 1) as i64).collect())
                        .collect::<Vec<_>>(),
                );
                if m.mul(&m.transpose()) != IntMatrix::identity(n) {
                    continue;
                }
                for i in 0..n {
                    assert_eq!((0..n).map(|j| m.get(i, j)).sum::<i64>(), 1);
                    assert_eq!((0..n).map(|j| m.get(j, i)).sum::<i64>(), 1);
                }
            }
        }
    }
}
