//! Device verdicts and conduction graphs.
//!
//! A device `(G, l, r)` is classified by its nullity signature
//! `(η(G), η(G-l), η(G-r), η(G-l-r))`. Every signature except the all-equal
//! one decides the verdict outright; the all-equal case is settled exactly by
//! counting the zero roots of `ut - sv`, where `s, t, u, v` are the
//! characteristic polynomials of `G, G-l, G-r, G-l-r`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, AdjacencyMatrix, Graph};
use crate::linalg::{self, char_poly, nullity, IntMatrix, IntPolynomial, RationalMatrix};

/// Number of zero roots `ut - sv` must have, in units of `η(G)`, for an
/// equal-nullity device to conduct.
pub const JTEST_EXPONENT: usize = 2;

/// `(η(G), η(G-l), η(G-r), η(G-l-r))`; the last entry is absent for ipso
/// devices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NullitySignature {
    pub eta_g: usize,
    pub eta_gu: usize,
    pub eta_gv: usize,
    pub eta_guv: Option<usize>,
}

impl NullitySignature {
    pub fn is_ipso(&self) -> bool {
        self.eta_guv.is_none()
    }

    /// Offsets relative to `η(G)`, ordered so that the first is the larger of
    /// the two single deletions.
    pub fn offsets(&self) -> (i64, i64, Option<i64>) {
        let g = self.eta_g as i64;
        let a = self.eta_gu as i64 - g;
        let b = self.eta_gv as i64 - g;
        (a.max(b), a.min(b), self.eta_guv.map(|x| x as i64 - g))
    }
}

impl fmt::Display for NullitySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eta_guv {
            Some(w) => write!(f, "({}, {}, {}, {})", self.eta_g, self.eta_gu, self.eta_gv, w),
            None => write!(f, "({}, {}, {}, -)", self.eta_g, self.eta_gu, self.eta_gv),
        }
    }
}

/// One row of the selection-rule table. Names read as
/// `<kind of l><kind of r><change of η(G-l-r)>` where a vertex is upper,
/// middle or core according to whether deleting it raises, keeps or lowers
/// the nullity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SelectionRule {
    UpperUpperPlus2,
    UpperUpperZero,
    UpperMiddlePlus1,
    UpperMiddleZero,
    UpperCoreZero,
    MiddleMiddlePlus1,
    MiddleMiddleZero,
    MiddleCoreMinus1,
    CoreCoreZero,
    CoreCoreMinus1,
    CoreCoreMinus2,
    IpsoUpper,
    IpsoMiddle,
    IpsoCore,
}

impl SelectionRule {
    pub const ALL: [SelectionRule; 14] = [
        SelectionRule::UpperUpperPlus2,
        SelectionRule::UpperUpperZero,
        SelectionRule::UpperMiddlePlus1,
        SelectionRule::UpperMiddleZero,
        SelectionRule::UpperCoreZero,
        SelectionRule::MiddleMiddlePlus1,
        SelectionRule::MiddleMiddleZero,
        SelectionRule::MiddleCoreMinus1,
        SelectionRule::CoreCoreZero,
        SelectionRule::CoreCoreMinus1,
        SelectionRule::CoreCoreMinus2,
        SelectionRule::IpsoUpper,
        SelectionRule::IpsoMiddle,
        SelectionRule::IpsoCore,
    ];

    /// Row lookup. Signatures outside the table are an internal error: they
    /// are excluded by interlacing.
    pub fn from_signature(sig: &NullitySignature) -> Result<SelectionRule> {
        use SelectionRule::*;
        let rule = match sig.offsets() {
            (1, 1, Some(2)) => UpperUpperPlus2,
            (1, 1, Some(0)) => UpperUpperZero,
            (1, 0, Some(1)) => UpperMiddlePlus1,
            (1, 0, Some(0)) => UpperMiddleZero,
            (1, -1, Some(0)) => UpperCoreZero,
            (0, 0, Some(1)) => MiddleMiddlePlus1,
            (0, 0, Some(0)) => MiddleMiddleZero,
            (0, -1, Some(-1)) => MiddleCoreMinus1,
            (-1, -1, Some(0)) => CoreCoreZero,
            (-1, -1, Some(-1)) => CoreCoreMinus1,
            (-1, -1, Some(-2)) => CoreCoreMinus2,
            (1, 1, None) => IpsoUpper,
            (0, 0, None) => IpsoMiddle,
            (-1, -1, None) => IpsoCore,
            _ => {
                return Err(Error::Internal(format!(
                    "nullity signature {sig} matches no selection rule"
                )))
            }
        };
        Ok(rule)
    }

    /// Verdict of the row; `None` for the undecided all-equal row.
    pub fn conducts(self) -> Option<bool> {
        use SelectionRule::*;
        match self {
            UpperUpperPlus2 | UpperMiddlePlus1 | UpperCoreZero | MiddleCoreMinus1 | CoreCoreMinus2
            | IpsoUpper => Some(false),
            UpperUpperZero | UpperMiddleZero | MiddleMiddlePlus1 | CoreCoreZero | CoreCoreMinus1
            | IpsoMiddle | IpsoCore => Some(true),
            MiddleMiddleZero => None,
        }
    }

    pub fn is_ipso(self) -> bool {
        matches!(
            self,
            SelectionRule::IpsoUpper | SelectionRule::IpsoMiddle | SelectionRule::IpsoCore
        )
    }
}

/// Which reasoning produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A decided row of the selection-rule table.
    Table(SelectionRule),
    /// All four nullities equal; decided by the zero roots of `ut - sv`.
    EqualNullityJTest,
    /// Nullity-0 shortcut: the entry of `A^-1`.
    InverseEntry,
    /// Nullity-1 shortcut: at least one endpoint is a core vertex.
    CoreBlock,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeviceVerdict {
    pub conducts: bool,
    pub rule: Rule,
}

/// Conduction graph plus the verdict behind every entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductionGraph {
    graph: Graph,
    // Upper triangle including the diagonal, row-major.
    verdicts: Vec<DeviceVerdict>,
}

fn tri_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u <= v { (u, v) } else { (v, u) };
    a * n - a * (a + 1) / 2 + b
}

impl ConductionGraph {
    fn from_verdicts(n: usize, verdicts: Vec<DeviceVerdict>) -> Self {
        debug_assert_eq!(verdicts.len(), n * (n + 1) / 2);
        let mut graph = Graph::new(n);
        for u in 0..n {
            for v in u..n {
                if verdicts[tri_index(n, u, v)].conducts {
                    if u == v {
                        graph.add_loop(u);
                    } else {
                        graph.add_edge(u, v);
                    }
                }
            }
        }
        ConductionGraph { graph, verdicts }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn verdict(&self, u: usize, v: usize) -> DeviceVerdict {
        self.verdicts[tri_index(self.graph.order(), u, v)]
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        self.graph.adjacency_matrix()
    }

    pub fn component_count(&self) -> usize {
        self.graph.components().len()
    }

    pub fn loop_count(&self) -> usize {
        self.graph.loop_count()
    }

    /// `(u, v, verdict)` for every device with `u <= v`.
    pub fn verdicts(&self) -> impl Iterator<Item = (usize, usize, DeviceVerdict)> + '_ {
        let n = self.graph.order();
        (0..n).flat_map(move |u| (u..n).map(move |v| (u, v, self.verdict(u, v))))
    }
}

/// Entrywise 0 / 1 (nonzero off-diagonal) / 2 (nonzero diagonal).
pub fn booleanise(m: &RationalMatrix) -> Result<AdjacencyMatrix> {
    if !m.is_square() {
        return Err(Error::Domain("booleanise needs a square matrix".into()));
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    let mut out = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if !num_traits::Zero::is_zero(m.get(i, j)) {
                out.set(i, j, if i == j { 2 } else { 1 });
            }
        }
    }
    Ok(AdjacencyMatrix::from_int_unchecked(out))
}

fn require_simple_connected(g: &Graph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::Domain("conduction is defined for simple graphs".into()));
    }
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Domain("conduction is defined for connected graphs".into()));
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::Domain(format!(
            "vertex {v} out of range for order {}",
            g.order()
        )));
    }
    Ok(())
}

/// Nullity of `g` with the vertices in `remove` deleted. The empty graph has
/// nullity 0.
fn eta_without(g: &Graph, remove: u64) -> usize {
    nullity(&g.delete_vertices(remove).adjacency_matrix())
}

fn phi_without(g: &Graph, remove: u64) -> IntPolynomial {
    char_poly(&g.delete_vertices(remove).adjacency_matrix())
}

pub fn nullity_signature(g: &Graph, u: usize, v: usize) -> Result<NullitySignature> {
    require_simple_connected(g)?;
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    Ok(signature_unchecked(g, u, v))
}

fn signature_unchecked(g: &Graph, u: usize, v: usize) -> NullitySignature {
    let eta_g = eta_without(g, 0);
    let eta_gu = eta_without(g, bit(u));
    let eta_gv = if u == v { eta_gu } else { eta_without(g, bit(v)) };
    let eta_guv = (u != v).then(|| eta_without(g, bit(u) | bit(v)));
    NullitySignature {
        eta_g,
        eta_gu,
        eta_gv,
        eta_guv,
    }
}

/// `ut - sv` for the distinct device `(g, l, r)`.
pub(crate) fn jacobi_numerator(g: &Graph, l: usize, r: usize) -> IntPolynomial {
    let s = phi_without(g, 0);
    let t = phi_without(g, bit(l));
    let u = phi_without(g, bit(r));
    let v = phi_without(g, bit(l) | bit(r));
    &(&u * &t) - &(&s * &v)
}

/// Equal-nullity resolution: conducts iff `ut - sv` has exactly
/// `JTEST_EXPONENT * η` zero roots.
fn jtest(g: &Graph, l: usize, r: usize, eta: usize) -> bool {
    let p = jacobi_numerator(g, l, r);
    match p.zero_root_multiplicity() {
        Ok(m) => m == JTEST_EXPONENT * eta,
        Err(_) => false,
    }
}

fn verdict_from_signature(
    g: &Graph,
    u: usize,
    v: usize,
    sig: &NullitySignature,
) -> Result<DeviceVerdict> {
    let row = SelectionRule::from_signature(sig)?;
    Ok(match row.conducts() {
        Some(conducts) => DeviceVerdict {
            conducts,
            rule: Rule::Table(row),
        },
        None => DeviceVerdict {
            conducts: jtest(g, u, v, sig.eta_g),
            rule: Rule::EqualNullityJTest,
        },
    })
}

/// Verdict for one device by the selection rules (never a shortcut).
pub fn device_verdict(g: &Graph, u: usize, v: usize) -> Result<DeviceVerdict> {
    let sig = nullity_signature(g, u, v)?;
    verdict_from_signature(g, u, v, &sig)
}

/// Conduction graph, using the nullity-0 and nullity-1 shortcuts where they
/// apply.
pub fn conduction_graph(g: &Graph) -> Result<ConductionGraph> {
    require_simple_connected(g)?;
    let a = g.adjacency_matrix();
    if let Some(support) = linalg::inverse_support(&a) {
        return Ok(from_inverse_support(&support));
    }
    let eta = nullity(&a);
    if eta == 1 {
        return Ok(nullity_one(g, eta)?.conduction);
    }
    selection_rule_graph(g, eta)
}

/// Conduction graph with every device decided by its own signature.
pub fn conduction_graph_by_selection_rules(g: &Graph) -> Result<ConductionGraph> {
    require_simple_connected(g)?;
    let eta = nullity(&g.adjacency_matrix());
    selection_rule_graph(g, eta)
}

fn from_inverse_support(support: &[u64]) -> ConductionGraph {
    let n = support.len();
    let mut verdicts = Vec::with_capacity(n * (n + 1) / 2);
    for u in 0..n {
        for v in u..n {
            verdicts.push(DeviceVerdict {
                conducts: support[u] & bit(v) != 0,
                rule: Rule::InverseEntry,
            });
        }
    }
    ConductionGraph::from_verdicts(n, verdicts)
}

fn selection_rule_graph(g: &Graph, eta: usize) -> Result<ConductionGraph> {
    let n = g.order();
    let single: Vec<usize> = (0..n).map(|v| eta_without(g, bit(v))).collect();
    let mut verdicts = Vec::with_capacity(n * (n + 1) / 2);
    for u in 0..n {
        for v in u..n {
            let sig = NullitySignature {
                eta_g: eta,
                eta_gu: single[u],
                eta_gv: single[v],
                eta_guv: (u != v).then(|| eta_without(g, bit(u) | bit(v))),
            };
            verdicts.push(verdict_from_signature(g, u, v, &sig)?);
        }
    }
    Ok(ConductionGraph::from_verdicts(n, verdicts))
}

/// Vertex classes of a nullity-1 graph together with its conduction graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullityOneBlocks {
    /// Vertices whose deletion lowers the nullity.
    pub core: u64,
    /// Core-forbidden vertices whose deletion keeps the nullity.
    pub middle: u64,
    /// Core-forbidden vertices whose deletion raises the nullity.
    pub upper: u64,
    pub conduction: ConductionGraph,
}

pub fn conduction_graph_nullity1_blocks(g: &Graph) -> Result<NullityOneBlocks> {
    require_simple_connected(g)?;
    let eta = nullity(&g.adjacency_matrix());
    if eta != 1 {
        return Err(Error::Domain(format!("nullity is {eta}, expected 1")));
    }
    nullity_one(g, eta)
}

fn nullity_one(g: &Graph, eta: usize) -> Result<NullityOneBlocks> {
    let n = g.order();
    let kernel = linalg::integer_kernel_basis(&g.adjacency_matrix());
    let x = &kernel[0];
    let core = (0..n)
        .filter(|&i| !num_traits::Zero::is_zero(&x[i]))
        .fold(0u64, |m, i| m | bit(i));

    let mut single = vec![0usize; n];
    let (mut middle, mut upper) = (0u64, 0u64);
    for v in 0..n {
        if core & bit(v) != 0 {
            continue;
        }
        single[v] = eta_without(g, bit(v));
        match single[v] {
            1 => middle |= bit(v),
            2 => upper |= bit(v),
            other => {
                return Err(Error::Internal(format!(
                    "core-forbidden vertex {v} has deletion nullity {other}"
                )))
            }
        }
    }

    let mut verdicts = Vec::with_capacity(n * (n + 1) / 2);
    for u in 0..n {
        for v in u..n {
            let touches_core = (core & (bit(u) | bit(v))) != 0;
            let verdict = if touches_core {
                // Core-core and ipso-core conduct; core to core-forbidden
                // insulates.
                let both = core & bit(u) != 0 && core & bit(v) != 0;
                DeviceVerdict {
                    conducts: both,
                    rule: Rule::CoreBlock,
                }
            } else {
                let sig = NullitySignature {
                    eta_g: eta,
                    eta_gu: single[u],
                    eta_gv: single[v],
                    eta_guv: (u != v).then(|| eta_without(g, bit(u) | bit(v))),
                };
                verdict_from_signature(g, u, v, &sig)?
            };
            verdicts.push(verdict);
        }
    }
    Ok(NullityOneBlocks {
        core,
        middle,
        upper,
        conduction: ConductionGraph::from_verdicts(n, verdicts),
    })
}

/// Nonzero pattern of the adjugate of `A(g)` as a graph (diagonal entries
/// become loops).
pub fn adjugate_pattern(g: &Graph) -> Graph {
    let adj = linalg::adjugate(&g.adjacency_matrix());
    let pattern = booleanise(&adj).expect("adjugate of a symmetric matrix is symmetric");
    Graph::from_adjacency(&pattern).expect("booleanised matrix is a valid adjacency matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bits, fixture};
    use crate::graph::named::*;
    use crate::linalg::{inverse, Rational};

    fn looped(n: usize, edges: &[(usize, usize)], loops: &[usize]) -> Graph {
        let mut g = Graph::from_edges(n, edges);
        for &v in loops {
            g.add_loop(v);
        }
        g
    }

    #[test]
    fn booleanise_examples() {
        let m = RationalMatrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), Rational::from_integer(0.into())],
            vec![Rational::from_integer(0.into()), Rational::from_integer((-2).into())],
        ]);
        assert_eq!(booleanise(&m).unwrap().to_rows(), vec![vec![2, 0], vec![0, 2]]);
        let k2 = inverse(&path(2).adjacency_matrix()).unwrap();
        assert_eq!(booleanise(&k2).unwrap().to_rows(), vec![vec![0, 1], vec![1, 0]]);
        // P4 inverts to the path 1-0-3-2.
        let p4 = inverse(&path(4).adjacency_matrix()).unwrap();
        let relabelled = path(4).permute(&[1, 0, 3, 2]);
        assert_eq!(booleanise(&p4).unwrap(), relabelled.adjacency_matrix());

        let asym = RationalMatrix::from_rows(vec![
            vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())],
            vec![Rational::from_integer(0.into()), Rational::from_integer(0.into())],
        ]);
        assert_eq!(booleanise(&asym), Err(Error::NotSymmetric));
    }

    #[test]
    fn signatures() {
        let sig = |g: &Graph, u, v| nullity_signature(g, u, v).unwrap();
        let k2 = path(2);
        assert_eq!(
            sig(&k2, 0, 1),
            NullitySignature { eta_g: 0, eta_gu: 1, eta_gv: 1, eta_guv: Some(0) }
        );
        assert_eq!(
            sig(&path(3), 0, 2),
            NullitySignature { eta_g: 1, eta_gu: 0, eta_gv: 0, eta_guv: Some(1) }
        );
        assert_eq!(
            sig(&cycle(4), 0, 0),
            NullitySignature { eta_g: 2, eta_gu: 1, eta_gv: 1, eta_guv: None }
        );
    }

    #[test]
    fn table_rows() {
        let s = |g, gu, gv, guv| NullitySignature {
            eta_g: g,
            eta_gu: gu,
            eta_gv: gv,
            eta_guv: guv,
        };
        let row = |x: NullitySignature| SelectionRule::from_signature(&x).unwrap();
        assert_eq!(row(s(2, 1, 1, Some(0))).conducts(), Some(false));
        assert_eq!(row(s(1, 1, 1, None)).conducts(), Some(true));
        assert_eq!(row(s(1, 2, 2, None)).conducts(), Some(false));
        assert_eq!(row(s(1, 1, 1, Some(1))), SelectionRule::MiddleMiddleZero);
        // Order of the two single deletions does not matter.
        assert_eq!(row(s(1, 0, 1, Some(0))), row(s(1, 1, 0, Some(0))));
        for bad in [s(0, 1, 1, Some(1)), s(1, 1, 1, Some(0)), s(1, 1, 0, Some(1))] {
            assert!(matches!(SelectionRule::from_signature(&bad), Err(Error::Internal(_))));
        }
        assert_eq!(
            SelectionRule::ALL.iter().filter(|r| r.conducts().is_none()).count(),
            1
        );
    }

    #[test]
    fn small_conduction_graphs() {
        let cg = |g: &Graph| conduction_graph(g).unwrap().into_graph();
        assert_eq!(cg(&path(2)), path(2));
        assert_eq!(cg(&path(4)), Graph::from_edges(4, &[(1, 0), (0, 3), (3, 2)]));
        assert_eq!(cg(&Graph::new(1)), looped(1, &[], &[0]));
        assert_eq!(cg(&path(3)), looped(3, &[(0, 2)], &[0, 2]));
        assert_eq!(cg(&complete(3)), looped(3, &[(0, 1), (0, 2), (1, 2)], &[0, 1, 2]));
        assert_eq!(cg(&cycle(4)), looped(4, &[(0, 2), (1, 3)], &[0, 1, 2, 3]));
        let diamond = fixture("diamond").unwrap();
        assert_eq!(cg(&diamond), looped(4, &[(1, 3), (0, 2)], &[0, 1, 2, 3]));
        assert_eq!(cg(&star(3)), looped(4, &[], &[1, 2, 3]));
    }

    #[test]
    fn shortcut_paths_agree_with_selection_rules() {
        for name in ["p3", "c4", "diamond", "star3", "paw", "k4", "ladder_l3", "radialene3", "e8"] {
            let g = fixture(name).unwrap();
            let fast = conduction_graph(&g).unwrap();
            let slow = conduction_graph_by_selection_rules(&g).unwrap();
            assert_eq!(fast.graph(), slow.graph(), "{name}");
            for u in 0..g.order() {
                for v in 0..g.order() {
                    assert_eq!(
                        device_verdict(&g, u, v).unwrap().conducts,
                        fast.verdict(u, v).conducts,
                        "{name} ({u}, {v})"
                    );
                }
            }
        }
    }

    #[test]
    fn equal_nullity_devices_match_the_inverse() {
        // Every single deletion of C6 is P5, of nullity 1, so no C6 device
        // reaches the equal-nullity row; the antipodal pair is decided by
        // the table.
        let c6 = cycle(6);
        let v = device_verdict(&c6, 0, 3).unwrap();
        assert_eq!(v.rule, Rule::Table(SelectionRule::UpperUpperZero));
        let inv = inverse(&c6.adjacency_matrix()).unwrap();
        assert_eq!(v.conducts, !num_traits::Zero::is_zero(inv.get(0, 3)));

        let mut seen = 0;
        for g in [complete(4), fixture("paw").unwrap(), fixture("radialene3").unwrap()] {
            let inv = inverse(&g.adjacency_matrix()).unwrap();
            for u in 0..g.order() {
                for w in u + 1..g.order() {
                    let v = device_verdict(&g, u, w).unwrap();
                    if v.rule == Rule::EqualNullityJTest {
                        seen += 1;
                    }
                    assert_eq!(v.conducts, !num_traits::Zero::is_zero(inv.get(u, w)));
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn nullity_one_blocks() {
        let b = conduction_graph_nullity1_blocks(&path(3)).unwrap();
        assert_eq!(b.core, 0b101);
        assert_eq!(b.middle | b.upper, 0b010);
        assert_eq!(b.conduction.graph(), &looped(3, &[(0, 2)], &[0, 2]));
        assert!(conduction_graph_nullity1_blocks(&cycle(4)).is_err());

        // The adjugate only sees the core block.
        for g in [path(5), path(7), Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])] {
            if nullity(&g.adjacency_matrix()) != 1 {
                continue;
            }
            let b = conduction_graph_nullity1_blocks(&g).unwrap();
            let pattern = adjugate_pattern(&g);
            let mut core_only = Graph::new(g.order());
            for u in bits(b.core) {
                core_only.add_loop(u);
                for v in bits(b.core & !bit(u)) {
                    core_only.add_edge(u, v);
                }
            }
            assert_eq!(pattern, core_only);
        }
        let b = conduction_graph_nullity1_blocks(&path(5)).unwrap();
        assert_eq!(b.core, 0b10101);
        assert_eq!(b.upper, 0b01010);
        assert_eq!(adjugate_pattern(&path(5)), *b.conduction.graph());
    }

    #[test]
    fn rejects_disconnected_and_looped_input() {
        let mut g = Graph::new(2);
        assert!(conduction_graph(&g).is_err());
        g.add_edge(0, 1);
        g.add_loop(0);
        assert!(conduction_graph(&g).is_err());
        assert!(device_verdict(&path(2), 0, 5).is_err());
    }
}
