//! Orderly generation of connected graphs by vertex augmentation with
//! canonical-deletion acceptance.
//!
//! A child `G = P + x` (new vertex `x` joined to a nonempty set `S` of the
//! parent `P`) is kept iff `x` lies in the orbit of the canonical deletion
//! vertex of `G`: among the non-cut vertices with the largest invariant, the
//! one placed last by the coloured canonical labelling. Since deleting a
//! non-cut vertex keeps the graph connected, every connected graph has a
//! connected canonical parent, and each class is emitted exactly once.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};
use crate::isomorphism::canonical_labelling_coloured;

/// Built-in generation limits.
pub const MAX_CONNECTED_ORDER: usize = 10;
pub const MAX_CHEMICAL_ORDER: usize = 16;
pub const MAX_CUBIC_ORDER: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// All connected simple graphs.
    Connected,
    /// Connected graphs of maximum degree at most 3.
    Chemical,
    /// Connected 3-regular graphs.
    Cubic,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Connected => "connected",
            Mode::Chemical => "chemical",
            Mode::Cubic => "cubic",
        }
    }

    pub fn max_order(self) -> usize {
        match self {
            Mode::Connected => MAX_CONNECTED_ORDER,
            Mode::Chemical => MAX_CHEMICAL_ORDER,
            Mode::Cubic => MAX_CUBIC_ORDER,
        }
    }

    fn degree_cap(self) -> Option<usize> {
        match self {
            Mode::Connected => None,
            Mode::Chemical | Mode::Cubic => Some(3),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "connected" => Ok(Mode::Connected),
            "chemical" => Ok(Mode::Chemical),
            "cubic" => Ok(Mode::Cubic),
            other => Err(Error::Domain(format!("unknown census mode `{other}`"))),
        }
    }
}

fn check_range(mode: Mode, n: usize) -> Result<()> {
    if n == 0 || n > mode.max_order() {
        return Err(Error::Domain(format!(
            "built-in {mode} generation supports 1 <= n <= {}, got {n}",
            mode.max_order()
        )));
    }
    Ok(())
}

/// Vertex invariant used to pick the deletion vertex before any labelling:
/// degree, then the sum of neighbour degrees, then the triangle count.
fn invariants(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let deg: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    (0..n)
        .map(|v| {
            let nb = g.neighbors(v);
            let nds: u64 = bits(nb).map(|w| deg[w]).sum();
            let tri: u64 = bits(nb)
                .map(|w| (g.neighbors(w) & nb).count_ones() as u64)
                .sum::<u64>()
                / 2;
            (deg[v] << 32) | (nds << 16) | tri
        })
        .collect()
}

/// Dense ranks of `inv`, used as an invariant colouring.
fn ranks(inv: &[u64]) -> Vec<u32> {
    let mut sorted = inv.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    inv.iter()
        .map(|x| sorted.binary_search(x).expect("present") as u32)
        .collect()
}

/// Whether the last vertex of `g` is in the orbit of its canonical deletion
/// vertex. Returns the labelling certificate when one was computed.
fn accept(g: &Graph) -> (bool, Option<Vec<u64>>) {
    let n = g.order();
    let x = n - 1;
    let inv = invariants(g);
    let rivals: u64 = (0..x).filter(|&v| inv[v] >= inv[x]).fold(0, |m, v| m | bit(v));
    if rivals == 0 {
        return (true, None);
    }
    let noncut = !g.cut_vertices() & rivals;
    if bits(noncut).any(|v| inv[v] > inv[x]) {
        return (false, None);
    }
    if noncut == 0 {
        return (true, None);
    }
    let tied = noncut | bit(x);
    let mut colours: Vec<u32> = ranks(&inv).into_iter().map(|r| 2 * r).collect();
    let lab = canonical_labelling_coloured(g, &colours);
    let c = *lab
        .order
        .iter()
        .rev()
        .find(|&&v| tied & bit(v) != 0)
        .expect("x is tied");
    if c == x {
        return (true, Some(lab.certificate));
    }
    if lab.automorphisms.is_empty() {
        return (false, None);
    }
    colours[x] += 1;
    let with_x = canonical_labelling_coloured(g, &colours).certificate;
    colours[x] -= 1;
    colours[c] += 1;
    let with_c = canonical_labelling_coloured(g, &colours).certificate;
    (with_x == with_c, Some(lab.certificate))
}

/// Pruning data for the target order.
#[derive(Clone, Copy)]
struct Target {
    mode: Mode,
    n: usize,
}

impl Target {
    /// Whether a graph on `m` vertices can still grow into a target graph.
    fn viable(&self, g: &Graph) -> bool {
        match self.mode {
            Mode::Cubic => {
                let deficit: usize = (0..g.order()).map(|v| 3 - g.degree(v)).sum();
                deficit <= 3 * (self.n - g.order())
            }
            _ => true,
        }
    }

    fn emit(&self, g: &Graph) -> bool {
        match self.mode {
            Mode::Cubic => g.order() < self.n || g.is_regular(3),
            _ => true,
        }
    }
}

/// Children of `parent` accepted by the canonical-deletion test.
fn children(parent: &Graph, target: Target, visit: &mut dyn FnMut(Graph)) {
    let m = parent.order();
    let open: u64 = match target.mode.degree_cap() {
        Some(cap) => (0..m).filter(|&v| parent.degree(v) < cap).fold(0, |a, v| a | bit(v)),
        None => parent.vertex_mask(),
    };
    let max_size = target.mode.degree_cap().unwrap_or(m);
    let parent_rigid = {
        let inv = invariants(parent);
        let lab = canonical_labelling_coloured(parent, &ranks(&inv));
        lab.automorphisms.is_empty()
    };
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut adj: Vec<u64> = (0..m).map(|v| parent.neighbors(v)).collect();
    adj.push(0);
    // Enumerate nonempty submasks of `open`.
    let mut s = open;
    while s != 0 {
        let size = s.count_ones() as usize;
        if size <= max_size {
            let mut a = adj.clone();
            a[m] = s;
            for v in bits(s) {
                a[v] |= bit(m);
            }
            let child = Graph::from_masks(a, 0);
            if target.viable(&child) && target.emit(&child) {
                let (ok, cert) = accept(&child);
                if ok {
                    if parent_rigid {
                        visit(child);
                    } else {
                        let cert = cert.unwrap_or_else(|| {
                            let inv = invariants(&child);
                            canonical_labelling_coloured(&child, &ranks(&inv)).certificate
                        });
                        if seen.insert(cert) {
                            visit(child);
                        }
                    }
                }
            }
        }
        s = (s - 1) & open;
    }
}

fn level(parents: &[Graph], target: Target, jobs: Option<usize>) -> Vec<Graph> {
    let run = || {
        parents
            .par_iter()
            .flat_map_iter(|p| {
                let mut out = Vec::new();
                children(p, target, &mut |g| out.push(g));
                out
            })
            .collect()
    };
    with_pool(jobs, run)
}

pub(crate) fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// All graphs of order `n - 1` that can be parents of a target graph.
fn parents(mode: Mode, n: usize, jobs: Option<usize>) -> Vec<Graph> {
    let target = Target { mode, n };
    let mut cur = vec![Graph::new(1)];
    for _ in 2..n {
        cur = level(&cur, target, jobs);
    }
    cur
}

/// Calls `visit` (possibly from several threads) once per isomorphism class
/// of `mode` graphs on `n` vertices. `jobs = None` uses the global pool.
pub fn for_each_graph<F>(mode: Mode, n: usize, jobs: Option<usize>, visit: F) -> Result<()>
where
    F: Fn(Graph) + Sync + Send,
{
    check_range(mode, n)?;
    if n == 1 {
        if mode != Mode::Cubic {
            visit(Graph::new(1));
        }
        return Ok(());
    }
    let ps = parents(mode, n, jobs);
    let target = Target { mode, n };
    with_pool(jobs, || {
        ps.par_iter().for_each(|p| {
            children(p, target, &mut |g| {
                if mode != Mode::Cubic || g.is_regular(3) {
                    visit(g)
                }
            })
        })
    });
    Ok(())
}

fn collect(mode: Mode, n: usize) -> Result<Vec<Graph>> {
    let out = std::sync::Mutex::new(Vec::new());
    for_each_graph(mode, n, None, |g| out.lock().expect("poisoned").push(g))?;
    let mut v = out.into_inner().expect("poisoned");
    v.sort_by_cached_key(crate::isomorphism::canonical_form);
    Ok(v)
}

/// One representative per class of connected graphs on `n` vertices, sorted
/// by canonical form.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    collect(Mode::Connected, n)
}

/// One representative per class of connected graphs on `n` vertices with
/// maximum degree at most 3.
pub fn enumerate_chemical(n: usize) -> Result<Vec<Graph>> {
    collect(Mode::Chemical, n)
}

/// One representative per class of connected 3-regular graphs on `n`
/// vertices.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>> {
    collect(Mode::Cubic, n)
}

/// Number of classes without materialising them.
pub fn count(mode: Mode, n: usize, jobs: Option<usize>) -> Result<u64> {
    let c = std::sync::atomic::AtomicU64::new(0);
    for_each_graph(mode, n, jobs, |_| {
        c.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
    })?;
    Ok(c.into_inner())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isomorphism::canonical_form;

    #[test]
    fn connected_counts() {
        let expected = [1u64, 1, 2, 6, 21, 112, 853];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(count(Mode::Connected, i + 1, None).unwrap(), e, "n={}", i + 1);
        }
    }

    #[test]
    fn chemical_counts() {
        let expected = [1u64, 1, 2, 6, 10, 29, 64, 194, 531];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(count(Mode::Chemical, i + 1, None).unwrap(), e, "n={}", i + 1);
        }
    }

    #[test]
    fn cubic_counts() {
        let expected = [(4usize, 1u64), (6, 2), (8, 5), (10, 19), (12, 85)];
        for (n, e) in expected {
            assert_eq!(count(Mode::Cubic, n, None).unwrap(), e, "n={n}");
        }
        assert_eq!(count(Mode::Cubic, 7, None).unwrap(), 0);
    }

    #[test]
    fn representatives_are_distinct_and_valid() {
        let gs = enumerate_connected(6).unwrap();
        let forms: HashSet<_> = gs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), gs.len());
        assert!(gs.iter().all(|g| g.is_connected() && g.order() == 6));
        assert!(enumerate_chemical(7).unwrap().iter().all(Graph::is_chemical));
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(11).is_err());
        assert!(enumerate_chemical(17).is_err());
        assert_eq!("chemical".parse::<Mode>().unwrap(), Mode::Chemical);
        assert!("tree".parse::<Mode>().is_err());
    }
}
