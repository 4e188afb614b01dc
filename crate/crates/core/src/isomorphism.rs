//! Canonical labelling and isomorphism testing by individualisation and
//! refinement.
//!
//! Loops act as a vertex colour: the initial partition puts loopless vertices
//! before looped ones, so a vertex with a loop can only ever be matched with
//! another vertex with a loop.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, bits, to_graph6, Graph};

/// Canonical representative of an isomorphism class: graph6 of the simple
/// part after canonical relabelling, plus the relabelled loop set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub graph6: String,
    pub loops: u64,
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.loops == 0 {
            write!(f, "CanonicalForm({})", self.graph6)
        } else {
            write!(f, "CanonicalForm({}; loops={:#x})", self.graph6, self.loops)
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.graph6)?;
        if self.loops != 0 {
            let list: Vec<String> = bits(self.loops).map(|v| v.to_string()).collect();
            write!(f, ";loops={}", list.join(","))?;
        }
        Ok(())
    }
}

/// Result of a canonical labelling.
#[derive(Clone, Debug)]
pub struct Labelling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Comparable certificate: equal iff the (coloured) graphs are isomorphic.
    pub certificate: Vec<u64>,
    /// Automorphisms found during the search (not necessarily a full
    /// generating set).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labelling {
    /// Map from vertex to canonical position.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Canonical labelling of `g`, loops as colours.
pub fn canonical_labelling(g: &Graph) -> Labelling {
    label(g, None)
}

/// Canonical labelling with an extra vertex colouring. Vertices are only
/// ever mapped to vertices of the same colour, and colour classes are
/// ordered by colour value.
pub fn canonical_labelling_coloured(g: &Graph, colours: &[u32]) -> Labelling {
    assert_eq!(colours.len(), g.order());
    label(g, Some(colours))
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permute(&canonical_labelling(g).positions())
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let c = canonical_graph(g);
    CanonicalForm {
        graph6: to_graph6(&c.simple_part()).expect("simple part has no loops"),
        loops: c.loop_mask(),
    }
}

/// A vertex bijection `h` with `h[v]` the image of `v`, verified to map
/// edges onto edges and loops onto loops.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.order() != g2.order()
        || g1.edge_count() != g2.edge_count()
        || g1.loop_count() != g2.loop_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return None;
    }
    let l1 = canonical_labelling(g1);
    let l2 = canonical_labelling(g2);
    if l1.certificate != l2.certificate {
        return None;
    }
    let mut h = vec![0; g1.order()];
    for (&a, &b) in l1.order.iter().zip(&l2.order) {
        h[a] = b;
    }
    assert!(
        is_isomorphism(g1, g2, &h),
        "canonical labelling produced a non-isomorphism"
    );
    Some(h)
}

/// Whether `h` (vertex `v` to `h[v]`) is an isomorphism from `g1` onto `g2`.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, h: &[usize]) -> bool {
    let n = g1.order();
    if g2.order() != n || h.len() != n {
        return false;
    }
    let mut seen = 0u64;
    for &x in h {
        if x >= n || seen & bit(x) != 0 {
            return false;
        }
        seen |= bit(x);
    }
    &g1.permute(h) == g2
}

struct Partition {
    cells: Vec<u64>,
}

impl Partition {
    fn is_discrete(&self, n: usize) -> bool {
        self.cells.len() == n
    }

    fn first_nonsingleton(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.count_ones() > 1)
    }

    /// Refine to the coarsest equitable partition finer than the current
    /// one, using the flagged cells as initial splitters.
    fn refine(&mut self, adj: &[u64], flags: &mut Vec<bool>, n: usize) {
        let mut counts = [0u64; 65];
        let mut touched: Vec<u32> = Vec::with_capacity(65);
        while let Some(wi) = flags.iter().position(|&f| f) {
            flags[wi] = false;
            let w = self.cells[wi];
            let mut j = 0;
            while j < self.cells.len() {
                let x = self.cells[j];
                if x & (x - 1) == 0 {
                    j += 1;
                    continue;
                }
                touched.clear();
                for v in bits(x) {
                    let c = (adj[v] & w).count_ones();
                    if counts[c as usize] == 0 {
                        touched.push(c);
                    }
                    counts[c as usize] |= bit(v);
                }
                if touched.len() == 1 {
                    counts[touched[0] as usize] = 0;
                    j += 1;
                    continue;
                }
                touched.sort_unstable();
                let frags: Vec<u64> = touched
                    .iter()
                    .map(|&c| std::mem::take(&mut counts[c as usize]))
                    .collect();
                let was_flagged = flags[j];
                let largest = frags
                    .iter()
                    .enumerate()
                    .max_by(|a, b| {
                        a.1.count_ones()
                            .cmp(&b.1.count_ones())
                            .then(b.0.cmp(&a.0))
                    })
                    .map(|(i, _)| i)
                    .unwrap();
                let k = frags.len();
                self.cells.splice(j..j + 1, frags);
                flags.splice(
                    j..j + 1,
                    (0..k).map(|i| was_flagged || i != largest),
                );
                j += k;
            }
            if self.is_discrete(n) {
                break;
            }
        }
    }

    fn individualise(&self, j: usize, v: usize) -> (Partition, Vec<bool>) {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..j]);
        cells.push(bit(v));
        cells.push(self.cells[j] & !bit(v));
        cells.extend_from_slice(&self.cells[j + 1..]);
        let mut flags = vec![false; cells.len()];
        flags[j] = true;
        (Partition { cells }, flags)
    }
}

struct Leaf {
    path: Vec<usize>,
    cert: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    loops: u64,
    n: usize,
    header: Vec<u64>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut cert = Vec::with_capacity(self.header.len() + self.n + 1);
        cert.extend_from_slice(&self.header);
        for &v in order {
            cert.push(bits(self.adj[v]).fold(0u64, |m, w| m | bit(63 - pos[w])));
        }
        cert.push(bits(self.loops).fold(0u64, |m, w| m | bit(63 - pos[w])));
        cert
    }

    fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut g = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            g[a] = b;
        }
        g
    }

    fn record(&mut self, gamma: Vec<usize>) {
        if gamma.iter().enumerate().any(|(i, &x)| i != x) && !self.automorphisms.contains(&gamma) {
            self.automorphisms.push(gamma);
        }
    }

    /// Whether `v` lies in the orbit of one of `explored` under the known
    /// automorphisms that fix `path` pointwise.
    fn equivalent(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (a, &b) in gamma.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    /// Returns the depth to unwind to when an automorphism shows that the
    /// rest of the current subtree repeats one already seen.
    fn dfs(&mut self, part: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(j) = part.first_nonsingleton() else {
            return self.leaf(&part, path);
        };
        let cell = part.cells[j];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() && self.equivalent(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let (mut child, mut flags) = part.individualise(j, v);
            child.refine(self.adj, &mut flags, self.n);
            path.push(v);
            let jump = self.dfs(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < path.len() {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = part.cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = self.certificate(&order);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                path: path.to_vec(),
                cert,
                order,
            };
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                cert: leaf.cert.clone(),
                order: leaf.order.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let common = first
                .path
                .iter()
                .zip(path)
                .take_while(|(a, b)| a == b)
                .count();
            let gamma = Self::automorphism(&first.order, &order);
            self.record(gamma);
            return Some(common);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    path: path.to_vec(),
                    cert,
                    order,
                });
            }
            Ordering::Equal => {
                let gamma = Self::automorphism(&best.order, &order);
                self.record(gamma);
            }
            Ordering::Less => {}
        }
        None
    }
}

fn label(g: &Graph, colours: Option<&[u32]>) -> Labelling {
    let n = g.order();
    if n == 0 {
        return Labelling {
            order: Vec::new(),
            certificate: Vec::new(),
            automorphisms: Vec::new(),
        };
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
    let loops = g.loop_mask();

    let key = |v: usize| (colours.map_or(0, |c| c[v]), loops & bit(v) != 0);
    let mut keys: Vec<(u32, bool)> = (0..n).map(key).collect();
    keys.sort_unstable();
    keys.dedup();
    let cells: Vec<u64> = keys
        .iter()
        .map(|k| (0..n).filter(|&v| key(v) == *k).fold(0u64, |m, v| m | bit(v)))
        .collect();
    // Cell sizes and colour values go into the certificate so that graphs
    // with different colourings never compare equal.
    let mut header = vec![n as u64];
    for (k, c) in keys.iter().zip(&cells) {
        header.push(((k.0 as u64) << 8) | ((k.1 as u64) << 7) | c.count_ones() as u64);
    }

    let mut part = Partition { cells };
    let mut flags = vec![true; part.cells.len()];
    part.refine(&adj, &mut flags, n);

    let mut search = Search {
        adj: &adj,
        loops,
        n,
        header,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.dfs(part, &mut Vec::new());
    let best = search.best.take().expect("search visits at least one leaf");
    Labelling {
        order: best.order,
        certificate: best.cert,
        automorphisms: search.automorphisms,
    }
}
