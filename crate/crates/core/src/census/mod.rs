//! Exhaustive enumeration and classification of connected and chemical
//! graphs, with sharded, resumable on-disk output.

mod generate;
mod store;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::io::BufRead;
use std::path::Path;
use std::sync::Mutex;

use rayon::prelude::*;

pub use generate::*;
pub use store::{run_census_to_dir, shard_of, DirOutput};

use crate::classify::{classify, conduction_isomorphism};
use crate::error::{Error, Result};
use crate::families::{
    appendix_family_graph, canonical_double_cover, corona, large_min_deg_graph, min_deg2_graph,
};
use crate::graph::{from_graph6, to_graph6, Graph};
use crate::isomorphism::{canonical_form, canonical_graph, is_isomorphism};

pub const CSV_HEADER: [&str; 9] = [
    "n",
    "graph6",
    "nullity",
    "cond_iso",
    "bipartite",
    "chemical",
    "nut",
    "ipso_omni_ins",
    "class_code",
];

/// One classified isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusRecord {
    pub n: usize,
    /// graph6 of the canonically labelled representative.
    pub graph6: String,
    pub nullity: usize,
    pub is_conduction_isomorphic: bool,
    pub is_bipartite: bool,
    pub is_chemical: bool,
    pub is_nut: bool,
    pub is_ipso_omni_insulator: bool,
    pub class_code: String,
}

impl CensusRecord {
    /// Full classification of `g`. Positives are checked against the
    /// consequences of conduction isomorphism.
    pub fn from_graph(g: &Graph) -> Result<CensusRecord> {
        let report = classify(g)?;
        if let Some(h) = &report.conduction_isomorphism {
            let ok = report.nullity == 0
                && report.conduction_loops == 0
                && report.conduction_components == 1
                && is_isomorphism(g, &report.conduction_graph, h);
            if !ok {
                return Err(Error::Internal(format!(
                    "conduction-isomorphic graph {} violates nullity/loop/degree consequences",
                    to_graph6(g)?
                )));
            }
        }
        Ok(CensusRecord {
            n: g.order(),
            graph6: to_graph6(&canonical_graph(g))?,
            nullity: report.nullity,
            is_conduction_isomorphic: report.is_conduction_isomorphic(),
            is_bipartite: report.is_bipartite,
            is_chemical: report.is_chemical,
            is_nut: report.is_nut,
            is_ipso_omni_insulator: report.is_ipso_omni_insulator,
            class_code: report.class_code.three_letter(),
        })
    }

    pub fn to_row(&self) -> [String; 9] {
        let b = |x: bool| if x { "1" } else { "0" }.to_string();
        [
            self.n.to_string(),
            self.graph6.clone(),
            self.nullity.to_string(),
            b(self.is_conduction_isomorphic),
            b(self.is_bipartite),
            b(self.is_chemical),
            b(self.is_nut),
            b(self.is_ipso_omni_insulator),
            self.class_code.clone(),
        ]
    }

    pub fn from_row(row: &csv::StringRecord) -> Result<CensusRecord> {
        let field = |i: usize| {
            row.get(i)
                .ok_or_else(|| Error::Domain(format!("census row has {} fields", row.len())))
        };
        let num = |i: usize| -> Result<usize> {
            field(i)?
                .parse()
                .map_err(|_| Error::Domain(format!("bad number in column {}", CSV_HEADER[i])))
        };
        let flag = |i: usize| -> Result<bool> {
            match field(i)? {
                "1" => Ok(true),
                "0" => Ok(false),
                other => Err(Error::Domain(format!("bad flag `{other}`"))),
            }
        };
        Ok(CensusRecord {
            n: num(0)?,
            graph6: field(1)?.to_string(),
            nullity: num(2)?,
            is_conduction_isomorphic: flag(3)?,
            is_bipartite: flag(4)?,
            is_chemical: flag(5)?,
            is_nut: flag(6)?,
            is_ipso_omni_insulator: flag(7)?,
            class_code: field(8)?.to_string(),
        })
    }
}

/// Counts for one order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusRow {
    pub total: u64,
    pub conduction_isomorphic: u64,
    pub conduction_isomorphic_non_bipartite: u64,
}

impl CensusRow {
    pub fn triple(&self) -> (u64, u64, u64) {
        (
            self.total,
            self.conduction_isomorphic,
            self.conduction_isomorphic_non_bipartite,
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub rows: BTreeMap<usize, CensusRow>,
}

impl CensusSummary {
    pub fn row(&self, n: usize) -> CensusRow {
        self.rows.get(&n).copied().unwrap_or_default()
    }

    pub fn record(&mut self, n: usize, cond_iso: bool, bipartite: bool) {
        let r = self.rows.entry(n).or_default();
        r.total += 1;
        if cond_iso {
            r.conduction_isomorphic += 1;
            if !bipartite {
                r.conduction_isomorphic_non_bipartite += 1;
            }
        }
    }

    pub fn merge(&mut self, other: &CensusSummary) {
        for (&n, r) in &other.rows {
            let e = self.rows.entry(n).or_default();
            e.total += r.total;
            e.conduction_isomorphic += r.conduction_isomorphic;
            e.conduction_isomorphic_non_bipartite += r.conduction_isomorphic_non_bipartite;
        }
    }
}

impl fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n,total,cond_iso,cond_iso_non_bipartite")?;
        for (n, r) in &self.rows {
            writeln!(
                f,
                "{n},{},{},{}",
                r.total, r.conduction_isomorphic, r.conduction_isomorphic_non_bipartite
            )?;
        }
        Ok(())
    }
}

/// A skipped input graph, with its 1-based line number when it came from a
/// file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    /// Keep a record for every graph, not only the positives.
    pub all_records: bool,
    /// Parallel width; `None` uses the global pool.
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct CensusOutcome {
    pub summary: CensusSummary,
    /// Sorted by order, then canonical graph6.
    pub records: Vec<CensusRecord>,
    pub diagnostics: Vec<Diagnostic>,
}

impl CensusOutcome {
    pub fn positives(&self) -> impl Iterator<Item = &CensusRecord> {
        self.records.iter().filter(|r| r.is_conduction_isomorphic)
    }
}

/// Where the graphs of a census come from.
#[derive(Clone, Debug)]
pub enum Source {
    Builtin { mode: Mode, n: usize },
    Graphs(Vec<Graph>),
}

impl Source {
    pub(crate) fn drive<F>(&self, jobs: Option<usize>, visit: F) -> Result<()>
    where
        F: Fn(Graph) + Sync + Send,
    {
        match self {
            Source::Builtin { mode, n } => for_each_graph(*mode, *n, jobs, visit),
            Source::Graphs(gs) => {
                with_pool(jobs, || gs.par_iter().cloned().for_each(&visit));
                Ok(())
            }
        }
    }
}

/// Outcome of classifying a single graph.
pub(crate) enum Classified {
    Counted { n: usize, cond_iso: bool, bipartite: bool, record: Option<CensusRecord> },
    Skipped(Diagnostic),
}

pub(crate) fn classify_one(g: &Graph, all_records: bool) -> Result<Classified> {
    if !g.is_simple() || !g.is_connected() || g.order() == 0 {
        let label = to_graph6(&g.simple_part()).unwrap_or_default();
        return Ok(Classified::Skipped(Diagnostic {
            line: None,
            message: format!("skipped {label}: not a connected simple graph"),
        }));
    }
    let cond_iso = conduction_isomorphism(g)?.is_some();
    let record = if cond_iso || all_records {
        Some(CensusRecord::from_graph(g)?)
    } else {
        None
    };
    Ok(Classified::Counted { n: g.order(), cond_iso, bipartite: g.is_bipartite(), record })
}

#[derive(Default)]
struct Acc {
    summary: CensusSummary,
    records: Vec<CensusRecord>,
    diagnostics: Vec<Diagnostic>,
    error: Option<Error>,
}

/// Classifies every graph of `source`. Only the cheap conduction-isomorphism
/// filter runs on negatives unless `all_records` is set.
pub fn run_census(source: &Source, opts: CensusOptions) -> Result<CensusOutcome> {
    let acc = Mutex::new(Acc::default());
    source.drive(opts.jobs, |g| {
        let res = classify_one(&g, opts.all_records);
        let mut a = acc.lock().expect("poisoned");
        match res {
            Ok(Classified::Counted { n, cond_iso, bipartite, record }) => {
                a.summary.record(n, cond_iso, bipartite);
                a.records.extend(record);
            }
            Ok(Classified::Skipped(d)) => a.diagnostics.push(d),
            Err(e) => {
                a.error.get_or_insert(e);
            }
        }
    })?;
    let mut a = acc.into_inner().expect("poisoned");
    if let Some(e) = a.error {
        return Err(e);
    }
    a.records.sort();
    Ok(CensusOutcome { summary: a.summary, records: a.records, diagnostics: a.diagnostics })
}

/// Built-in census of `mode` graphs on `n` vertices.
pub fn census(mode: Mode, n: usize, opts: CensusOptions) -> Result<CensusOutcome> {
    run_census(&Source::Builtin { mode, n }, opts)
}

/// Parses graph6 lines. Blank lines and a `>>graph6<<` prefix are accepted;
/// bad lines become diagnostics and parsing continues. With `dedupe`, later
/// copies of an isomorphism class are dropped with a diagnostic.
pub fn ingest_graph6<R: BufRead>(reader: R, dedupe: bool) -> Result<(Vec<Graph>, Vec<Diagnostic>)> {
    let mut graphs = Vec::new();
    let mut diags = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            continue;
        }
        match from_graph6(text) {
            Ok(g) => {
                if dedupe && !seen.insert(canonical_form(&g)) {
                    diags.push(Diagnostic { line: Some(i + 1), message: "duplicate graph".into() });
                } else {
                    graphs.push(g);
                }
            }
            Err(e) => diags.push(Diagnostic { line: Some(i + 1), message: e.to_string() }),
        }
    }
    Ok((graphs, diags))
}

pub fn ingest_graph6_file(path: &Path, dedupe: bool) -> Result<(Vec<Graph>, Vec<Diagnostic>)> {
    let f = std::fs::File::open(path)?;
    ingest_graph6(std::io::BufReader::new(f), dedupe)
}

/// Match of census positives against generated family members.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyCoverage {
    /// (canonical graph6, family name) for each matched positive.
    pub matched: Vec<(String, String)>,
    /// Canonical graph6 of positives outside every family.
    pub residuals: Vec<String>,
}

/// Family members of order `n` keyed by canonical graph6. Corona bases are
/// drawn from the built-in connected enumeration; double covers from the
/// non-bipartite positives of order `n / 2` in `positives`.
fn family_members(n: usize, positives: &[CensusRecord]) -> Result<HashMap<String, &'static str>> {
    let mut out = HashMap::new();
    let mut add = |g: Graph, name: &'static str| -> Result<()> {
        out.entry(to_graph6(&canonical_graph(&g))?).or_insert(name);
        Ok(())
    };
    let mut base_n = n;
    let mut iterations = 0;
    while base_n.is_multiple_of(2) && base_n >= 2 {
        base_n /= 2;
        iterations += 1;
        if base_n <= MAX_CONNECTED_ORDER.min(8) {
            for base in enumerate_connected(base_n)? {
                add(corona(&base, iterations)?, "corona")?;
            }
        }
    }
    if n.is_multiple_of(4) && n >= 8 {
        add(min_deg2_graph(n / 4)?, "min_deg2")?;
    }
    if n.is_multiple_of(2) && n >= 6 {
        add(large_min_deg_graph(n / 2)?, "large_min_deg")?;
    }
    if n.is_multiple_of(4) && n >= 8 {
        add(appendix_family_graph((n + 4) / 4)?, "appendix")?;
    }
    if n.is_multiple_of(2) {
        for r in positives.iter().filter(|r| r.n == n / 2 && !r.is_bipartite) {
            add(canonical_double_cover(&from_graph6(&r.graph6)?)?, "cdc")?;
        }
    }
    Ok(out)
}

/// Matches every conduction-isomorphic record of order at most `n_max`
/// against the families and reports the rest.
pub fn verify_family_coverage(records: &[CensusRecord], n_max: usize) -> Result<FamilyCoverage> {
    let positives: Vec<CensusRecord> = records
        .iter()
        .filter(|r| r.is_conduction_isomorphic && r.n <= n_max)
        .cloned()
        .collect();
    let mut by_order: BTreeMap<usize, Vec<&CensusRecord>> = BTreeMap::new();
    for r in &positives {
        by_order.entry(r.n).or_default().push(r);
    }
    let mut cov = FamilyCoverage::default();
    for (n, rs) in by_order {
        let members = family_members(n, &positives)?;
        for r in rs {
            match members.get(&r.graph6) {
                Some(name) => cov.matched.push((r.graph6.clone(), name.to_string())),
                None => cov.residuals.push(r.graph6.clone()),
            }
        }
    }
    Ok(cov)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixture;

    fn quick(mode: Mode, n: usize) -> CensusOutcome {
        census(mode, n, CensusOptions::default()).unwrap()
    }

    #[test]
    fn connected_rows() {
        assert_eq!(quick(Mode::Connected, 4).summary.row(4).triple(), (6, 1, 0));
        assert_eq!(quick(Mode::Connected, 6).summary.row(6).triple(), (112, 4, 2));
        assert_eq!(quick(Mode::Connected, 7).summary.row(7).triple(), (853, 0, 0));
    }

    #[test]
    fn chemical_rows() {
        let o = quick(Mode::Chemical, 8);
        assert_eq!(o.summary.row(8).triple(), (194, 5, 0));
        assert_eq!(o.records.len(), 5);
        assert!(o.records.iter().all(|r| r.nullity == 0 && r.is_chemical));
    }

    #[test]
    fn records_round_trip() {
        let o = census(Mode::Connected, 5, CensusOptions { all_records: true, jobs: Some(2) }).unwrap();
        assert_eq!(o.records.len(), 21);
        for r in &o.records {
            let row = csv::StringRecord::from(r.to_row().to_vec());
            assert_eq!(&CensusRecord::from_row(&row).unwrap(), r);
        }
    }

    #[test]
    fn skips_disconnected_input() {
        let gs = vec![fixture("p4").unwrap(), Graph::new(3), fixture("c4").unwrap()];
        let o = run_census(&Source::Graphs(gs), CensusOptions::default()).unwrap();
        assert_eq!(o.summary.row(4).total, 2);
        assert_eq!(o.diagnostics.len(), 1);
    }

    #[test]
    fn ingest_reports_bad_lines() {
        let mut text = String::new();
        for g in enumerate_connected(4).unwrap() {
            text.push_str(&to_graph6(&g).unwrap());
            text.push('\n');
        }
        text.push_str("C~~\n");
        text.push_str(&to_graph6(&fixture("c4").unwrap()).unwrap());
        text.push('\n');
        let (gs, diags) = ingest_graph6(text.as_bytes(), false).unwrap();
        assert_eq!((gs.len(), diags.len()), (7, 1));
        assert_eq!(diags[0].line, Some(7));
        let (gs, diags) = ingest_graph6(text.as_bytes(), true).unwrap();
        assert_eq!((gs.len(), diags.len()), (6, 2));
        assert!(ingest_graph6("".as_bytes(), false).unwrap().0.is_empty());
    }

    #[test]
    fn family_coverage_small_chemical() {
        let mut records = Vec::new();
        for n in 1..=10 {
            records.extend(quick(Mode::Chemical, n).records);
        }
        let cov = verify_family_coverage(&records, 10).unwrap();
        let mut exceptional: Vec<String> = ["ladder_l3", "e8", "ladder5_partial"]
            .iter()
            .map(|f| to_graph6(&canonical_graph(&fixture(f).unwrap())).unwrap())
            .collect();
        exceptional.sort();
        let mut residuals = cov.residuals.clone();
        residuals.sort();
        assert_eq!(residuals, exceptional, "{cov:?}");
        assert_eq!(cov.matched.len(), 10);
    }
}
