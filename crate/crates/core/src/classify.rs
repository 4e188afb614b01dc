//! Graph-level conduction classes.

use std::fmt;

use crate::conduction::{conduction_graph, ConductionGraph};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::isomorphism::{are_isomorphic, is_isomorphism};
use crate::linalg::{self, integer_kernel_basis, nullity};

/// Behaviour of one class of devices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Behaviour {
    AllConduct,
    AllInsulate,
    Mixed,
    Empty,
}

impl Behaviour {
    fn of(verdicts: impl IntoIterator<Item = bool>) -> Behaviour {
        let (mut yes, mut no) = (false, false);
        for c in verdicts {
            if c {
                yes = true;
            } else {
                no = true;
            }
        }
        match (yes, no) {
            (true, false) => Behaviour::AllConduct,
            (false, true) => Behaviour::AllInsulate,
            (true, true) => Behaviour::Mixed,
            (false, false) => Behaviour::Empty,
        }
    }

    /// `C`, `I`, or `X` for mixed behaviour or an empty class.
    pub fn letter(self) -> char {
        match self {
            Behaviour::AllConduct => 'C',
            Behaviour::AllInsulate => 'I',
            Behaviour::Mixed | Behaviour::Empty => 'X',
        }
    }
}

/// Conduction class code: letters for distinct devices (split by distance
/// parity for the three-letter form) and for ipso devices, plus the nullity
/// capped at 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassCode {
    pub distinct: Behaviour,
    pub distinct_odd: Behaviour,
    pub distinct_even: Behaviour,
    pub ipso: Behaviour,
    pub nullity_digit: u8,
    /// For bipartite graphs odd/even distance coincides with inter/intra
    /// partite, and the letters may be read that way.
    pub bipartite_interpretation: bool,
}

impl ClassCode {
    pub fn two_letter(&self) -> String {
        format!(
            "{}{}{}",
            self.distinct.letter(),
            self.ipso.letter(),
            self.nullity_digit
        )
    }

    pub fn three_letter(&self) -> String {
        format!(
            "{}{}{}{}",
            self.distinct_odd.letter(),
            self.distinct_even.letter(),
            self.ipso.letter(),
            self.nullity_digit
        )
    }
}

impl fmt::Display for ClassCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.three_letter())
    }
}

fn require_simple_connected(g: &Graph) -> Result<()> {
    if !g.is_simple() || g.order() == 0 || !g.is_connected() {
        return Err(Error::Domain("expected a simple connected graph".into()));
    }
    Ok(())
}

/// Class code computed from an already built conduction graph.
pub fn class_code_from(g: &Graph, cg: &ConductionGraph) -> ClassCode {
    let n = g.order();
    let eta = nullity(&g.adjacency_matrix());
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|u| g.distances_from(u)).collect();
    let pairs = || (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let conducts = |u: usize, v: usize| cg.verdict(u, v).conducts;
    let odd = |u: usize, v: usize| dist[u][v].is_some_and(|d| d % 2 == 1);
    ClassCode {
        distinct: Behaviour::of(pairs().map(|(u, v)| conducts(u, v))),
        distinct_odd: Behaviour::of(pairs().filter(|&(u, v)| odd(u, v)).map(|(u, v)| conducts(u, v))),
        distinct_even: Behaviour::of(
            pairs().filter(|&(u, v)| !odd(u, v)).map(|(u, v)| conducts(u, v)),
        ),
        ipso: Behaviour::of((0..n).map(|u| conducts(u, u))),
        nullity_digit: eta.min(2) as u8,
        bipartite_interpretation: g.is_bipartite(),
    }
}

pub fn class_code(g: &Graph) -> Result<ClassCode> {
    let cg = conduction_graph(g)?;
    Ok(class_code_from(g, &cg))
}

/// Loopless conduction graph. Such graphs always have nullity 0, which is
/// checked on every positive answer.
pub fn is_ipso_omni_insulator(g: &Graph) -> Result<bool> {
    let cg = conduction_graph(g)?;
    let answer = cg.loop_count() == 0;
    if answer && nullity(&g.adjacency_matrix()) != 0 {
        return Err(Error::Internal(
            "ipso omni-insulator with nonzero nullity".into(),
        ));
    }
    Ok(answer)
}

/// Nullity one with a kernel vector free of zeros. `K1` is excluded as
/// trivial; see [`is_nut_including_k1`].
pub fn is_nut(g: &Graph) -> Result<bool> {
    if g.order() == 1 {
        require_simple_connected(g)?;
        return Ok(false);
    }
    is_nut_including_k1(g)
}

pub fn is_nut_including_k1(g: &Graph) -> Result<bool> {
    require_simple_connected(g)?;
    let a = g.adjacency_matrix();
    if nullity(&a) != 1 {
        return Ok(false);
    }
    let k = integer_kernel_basis(&a);
    Ok(k[0].iter().all(|x| !num_traits::Zero::is_zero(x)))
}

/// Every vertex is core and every distinct device has signature
/// `(η, η-1, η-1, η-2)`. The conduction graph of such a graph is `n` isolated
/// looped vertices, which is checked on every positive answer.
pub fn is_uniform_core_graph(g: &Graph) -> Result<bool> {
    require_simple_connected(g)?;
    let n = g.order();
    let eta = nullity(&g.adjacency_matrix());
    if eta == 0 {
        return Ok(false);
    }
    let eta_without = |mask: u64| nullity(&g.delete_vertices(mask).adjacency_matrix());
    for v in 0..n {
        if eta_without(bit(v)) + 1 != eta {
            return Ok(false);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if eta_without(bit(u) | bit(v)) + 2 != eta {
                return Ok(false);
            }
        }
    }
    let cg = conduction_graph(g)?;
    if cg.graph().edge_count() != 0 || cg.loop_count() != n {
        return Err(Error::Internal(
            "uniform core graph whose conduction graph is not nK1 with loops".into(),
        ));
    }
    Ok(true)
}

/// Isomorphism from `g` onto its conduction graph, if one exists.
///
/// Checks run cheapest first: nullity 0, loopless inverse diagonal, equal
/// degree sequences, then a full canonical comparison.
pub fn conduction_isomorphism(g: &Graph) -> Result<Option<Vec<usize>>> {
    require_simple_connected(g)?;
    let Some(support) = linalg::inverse_support(&g.adjacency_matrix()) else {
        return Ok(None);
    };
    if support.iter().enumerate().any(|(v, row)| row & bit(v) != 0) {
        return Ok(None);
    }
    let gc = Graph::from_masks(support, 0);
    if gc.degree_sequence() != g.degree_sequence() {
        return Ok(None);
    }
    let Some(h) = are_isomorphic(g, &gc) else {
        return Ok(None);
    };
    if !is_isomorphism(g, &gc, &h) {
        return Err(Error::Internal("conduction isomorphism failed verification".into()));
    }
    Ok(Some(h))
}

pub fn is_conduction_isomorphic(g: &Graph) -> Result<bool> {
    Ok(conduction_isomorphism(g)?.is_some())
}

/// Whether `h` maps `g` isomorphically onto its conduction graph.
pub fn verify_conduction_witness(g: &Graph, h: &[usize]) -> Result<bool> {
    let cg = conduction_graph(g)?;
    Ok(is_isomorphism(g, cg.graph(), h))
}

/// For a 3-regular nullity-0 graph, whether every row of `A^-1` has at least
/// four nonzero entries, i.e. every vertex of the conduction graph has at
/// least four neighbours when a loop counts as the vertex being its own
/// neighbour.
pub fn cubic_degree_theorem_check(g: &Graph) -> Result<bool> {
    require_simple_connected(g)?;
    if !g.is_regular(3) {
        return Err(Error::Domain("graph is not 3-regular".into()));
    }
    let Some(support) = linalg::inverse_support(&g.adjacency_matrix()) else {
        return Err(Error::Domain("graph is singular".into()));
    };
    let min = support
        .iter()
        
        .map(|row| row.count_ones())
        .min()
        .unwrap_or(0);
    Ok(min >= 4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: usize,
    pub nullity: usize,
    pub is_bipartite: bool,
    pub is_chemical: bool,
    pub is_ipso_omni_insulator: bool,
    pub is_nut: bool,
    pub is_uniform_core_graph: bool,
    pub conduction_isomorphism: Option<Vec<usize>>,
    pub class_code: ClassCode,
    pub conduction_components: usize,
    pub conduction_loops: usize,
    pub conduction_graph: Graph,
}

impl ClassificationReport {
    pub fn is_conduction_isomorphic(&self) -> bool {
        self.conduction_isomorphism.is_some()
    }
}

pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    require_simple_connected(g)?;
    let cg = conduction_graph(g)?;
    let eta = nullity(&g.adjacency_matrix());
    let code = class_code_from(g, &cg);
    let iso = conduction_isomorphism(g)?;
    let ipso_omni = cg.loop_count() == 0;
    if (iso.is_some() || ipso_omni) && eta != 0 {
        return Err(Error::Internal(format!(
            "loopless conduction graph at nullity {eta}"
        )));
    }
    if iso.is_some() && !ipso_omni {
        return Err(Error::Internal(
            "conduction-isomorphic graph with a looped conduction graph".into(),
        ));
    }
    Ok(ClassificationReport {
        order: g.order(),
        nullity: eta,
        is_bipartite: g.is_bipartite(),
        is_chemical: g.is_chemical(),
        is_ipso_omni_insulator: ipso_omni,
        is_nut: is_nut(g)?,
        is_uniform_core_graph: is_uniform_core_graph(g)?,
        conduction_isomorphism: iso,
        class_code: code,
        conduction_components: cg.component_count(),
        conduction_loops: cg.loop_count(),
        conduction_graph: cg.into_graph(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixture;
    use crate::graph::named::*;

    #[test]
    fn ipso_omni_insulators() {
        assert!(is_ipso_omni_insulator(&fixture("ipso15").unwrap()).unwrap());
        assert!(!is_ipso_omni_insulator(&cycle(4)).unwrap());
        assert!(is_ipso_omni_insulator(&path(4)).unwrap());
    }

    #[test]
    fn nut_flags() {
        assert!(!is_nut(&Graph::new(1)).unwrap());
        assert!(is_nut_including_k1(&Graph::new(1)).unwrap());
        assert!(!is_nut(&path(3)).unwrap());
    }

    #[test]
    fn uniform_core_graphs() {
        assert!(!is_uniform_core_graph(&cycle(4)).unwrap());
        assert!(is_uniform_core_graph(&complete_bipartite(3, 3)).unwrap());
        assert!(!is_uniform_core_graph(&path(2)).unwrap());
    }

    #[test]
    fn class_codes() {
        let k2 = class_code(&path(2)).unwrap();
        assert_eq!(k2.three_letter(), "CXI0");
        assert_eq!(k2.two_letter(), "CI0");
        assert!(k2.bipartite_interpretation);
        assert_eq!(k2.distinct_even, Behaviour::Empty);
        let k33 = class_code(&complete_bipartite(3, 3)).unwrap();
        assert_eq!(k33.two_letter(), "IC2");
        assert_eq!(k33.three_letter(), "IIC2");
        assert_eq!(class_code(&cycle(4)).unwrap().nullity_digit, 2);
    }

    #[test]
    fn conduction_isomorphic_examples() {
        assert!(is_conduction_isomorphic(&path(4)).unwrap());
        assert!(is_conduction_isomorphic(&path(2)).unwrap());
        assert!(!is_conduction_isomorphic(&cycle(4)).unwrap());
        let r = fixture("radialene3").unwrap();
        let h = conduction_isomorphism(&r).unwrap().unwrap();
        assert!(verify_conduction_witness(&r, &h).unwrap());
    }

    #[test]
    fn cubic_theorem() {
        assert!(cubic_degree_theorem_check(&complete(4)).unwrap());
        assert!(cubic_degree_theorem_check(&complete_bipartite(3, 3)).is_err());
        assert!(cubic_degree_theorem_check(&path(4)).is_err());
    }

    #[test]
    fn report_is_consistent() {
        let r = classify(&fixture("comb3").unwrap()).unwrap();
        assert!(r.is_conduction_isomorphic() && r.is_ipso_omni_insulator && r.nullity == 0);
        let r = classify(&cycle(4)).unwrap();
        assert_eq!((r.conduction_components, r.conduction_loops), (2, 4));
    }
}
