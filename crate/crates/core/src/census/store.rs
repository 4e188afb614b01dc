//! On-disk census output: one CSV per shard, a manifest of completed shards,
//! and merged CSV / graph6 / summary files once every shard is done.
//!
//! Graphs are assigned to shards by a hash of their canonical graph6, so a
//! shard's content does not depend on enumeration order or thread count.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::sync::Mutex;

use sha2::{Digest, Sha256};

use super::{
    classify_one, CensusOptions, CensusOutcome, CensusRecord, CensusSummary, Classified,
    Diagnostic, Source, CSV_HEADER,
};
use crate::error::{Error, Result};
use crate::graph::to_graph6;
use crate::isomorphism::canonical_graph;

#[derive(Clone, Debug)]
pub struct DirOutput {
    pub dir: PathBuf,
    /// File name prefix, e.g. `connected-n8`.
    pub stem: String,
    pub shards: u32,
    /// Restrict this run to these shards; `None` runs all.
    pub only: Option<BTreeSet<u32>>,
}

impl DirOutput {
    fn path(&self, suffix: &str) -> PathBuf {
        self.dir.join(format!("{}.{suffix}", self.stem))
    }

    fn shard_path(&self, id: u32) -> PathBuf {
        self.path(&format!("shard-{id:04}.csv"))
    }

    pub fn manifest_path(&self) -> PathBuf {
        self.path("manifest.csv")
    }

    pub fn csv_path(&self) -> PathBuf {
        self.path("csv")
    }

    pub fn graph6_path(&self) -> PathBuf {
        self.path("g6")
    }

    pub fn summary_path(&self) -> PathBuf {
        self.path("summary.csv")
    }
}

pub fn shard_of(canonical_graph6: &str, shards: u32) -> u32 {
    let d = Sha256::digest(canonical_graph6.as_bytes());
    u32::from_be_bytes([d[0], d[1], d[2], d[3]]) % shards.max(1)
}

#[derive(Default)]
struct Shard {
    totals: BTreeMap<usize, u64>,
    records: Vec<CensusRecord>,
}

fn shard_bytes(shard: &mut Shard) -> Result<Vec<u8>> {
    shard.records.sort();
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in &shard.records {
        w.write_record(r.to_row()).map_err(csv_err)?;
    }
    let mut out = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    let totals: Vec<String> = shard.totals.iter().map(|(n, c)| format!("{n}={c}")).collect();
    writeln!(out, "# totals {}", totals.join(" "))?;
    Ok(out)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn read_shard(bytes: &[u8]) -> Result<Shard> {
    let mut shard = Shard::default();
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))?;
    let line = text
        .lines()
        .rev()
        .find(|l| l.starts_with("# totals"))
        .ok_or_else(|| Error::Io("shard file lacks a totals line".into()))?;
    for item in line.trim_start_matches("# totals").split_whitespace() {
        let (n, c) = item
            .split_once('=')
            .ok_or_else(|| Error::Io(format!("bad totals item `{item}`")))?;
        let parse = |s: &str| s.parse::<u64>().map_err(|_| Error::Io(format!("bad totals item `{item}`")));
        shard.totals.insert(parse(n)? as usize, parse(c)?);
    }
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(bytes);
    for row in r.records() {
        shard.records.push(CensusRecord::from_row(&row.map_err(csv_err)?)?);
    }
    Ok(shard)
}

/// Shards listed in the manifest whose file still matches its checksum.
fn completed(out: &DirOutput) -> Result<BTreeMap<u32, Shard>> {
    let mut done = BTreeMap::new();
    let Ok(text) = fs::read_to_string(out.manifest_path()) else {
        return Ok(done);
    };
    for line in text.lines().skip(1) {
        let parts: Vec<&str> = line.split(',').collect();
        let [id, count, sum] = parts[..] else {
            return Err(Error::Io(format!("bad manifest line `{line}`")));
        };
        let id: u32 = id.parse().map_err(|_| Error::Io(format!("bad shard id `{id}`")))?;
        let Ok(bytes) = fs::read(out.shard_path(id)) else {
            continue;
        };
        if hex::encode(Sha256::digest(&bytes)) != sum {
            continue;
        }
        let shard = read_shard(&bytes)?;
        if shard.totals.values().sum::<u64>().to_string() != count {
            continue;
        }
        done.insert(id, shard);
    }
    Ok(done)
}

/// Runs the census into `out.dir`, skipping shards already completed by an
/// earlier run. The merged outputs are written once all shards are done;
/// the returned outcome covers every completed shard.
pub fn run_census_to_dir(source: &Source, opts: CensusOptions, out: &DirOutput) -> Result<CensusOutcome> {
    if out.shards == 0 {
        return Err(Error::Domain("shard count must be positive".into()));
    }
    fs::create_dir_all(&out.dir)?;
    let mut done = completed(out)?;
    let todo: BTreeSet<u32> = (0..out.shards)
        .filter(|id| !done.contains_key(id) && out.only.as_ref().is_none_or(|s| s.contains(id)))
        .collect();
    let fresh: Mutex<BTreeMap<u32, Shard>> = Mutex::new(BTreeMap::new());
    let diags: Mutex<Vec<Diagnostic>> = Mutex::new(Vec::new());
    let error: Mutex<Option<Error>> = Mutex::new(None);
    if !todo.is_empty() {
        source.drive(opts.jobs, |g| {
            let canon = match to_graph6(&canonical_graph(&g.simple_part())) {
                Ok(c) => c,
                Err(e) => {
                    error.lock().expect("poisoned").get_or_insert(e);
                    return;
                }
            };
            let id = shard_of(&canon, out.shards);
            if !todo.contains(&id) {
                return;
            }
            match classify_one(&g, opts.all_records) {
                Ok(Classified::Counted { n, record, .. }) => {
                    let mut f = fresh.lock().expect("poisoned");
                    let s = f.entry(id).or_default();
                    *s.totals.entry(n).or_default() += 1;
                    s.records.extend(record);
                }
                Ok(Classified::Skipped(d)) => diags.lock().expect("poisoned").push(d),
                Err(e) => {
                    error.lock().expect("poisoned").get_or_insert(e);
                }
            }
        })?;
    }
    if let Some(e) = error.into_inner().expect("poisoned") {
        return Err(e);
    }
    let mut fresh = fresh.into_inner().expect("poisoned");
    let manifest = out.manifest_path();
    let new_manifest = !manifest.exists();
    let mut mf = fs::OpenOptions::new().create(true).append(true).open(&manifest)?;
    if new_manifest {
        writeln!(mf, "shard_id,count,checksum")?;
    }
    for &id in &todo {
        let mut shard = fresh.remove(&id).unwrap_or_default();
        let bytes = shard_bytes(&mut shard)?;
        fs::write(out.shard_path(id), &bytes)?;
        let count: u64 = shard.totals.values().sum();
        writeln!(mf, "{id},{count},{}", hex::encode(Sha256::digest(&bytes)))?;
        done.insert(id, shard);
    }
    mf.flush()?;

    let mut summary = CensusSummary::default();
    let mut records = Vec::new();
    for shard in done.values() {
        for (&n, &c) in &shard.totals {
            summary.rows.entry(n).or_default().total += c;
        }
        for r in &shard.records {
            if r.is_conduction_isomorphic {
                let row = summary.rows.entry(r.n).or_default();
                row.conduction_isomorphic += 1;
                if !r.is_bipartite {
                    row.conduction_isomorphic_non_bipartite += 1;
                }
            }
        }
        records.extend(shard.records.iter().cloned());
    }
    records.sort();
    let outcome = CensusOutcome {
        summary,
        records,
        diagnostics: diags.into_inner().expect("poisoned"),
    };
    if done.len() == out.shards as usize {
        write_merged(out, &outcome)?;
    }
    Ok(outcome)
}

fn write_merged(out: &DirOutput, o: &CensusOutcome) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(out.csv_path())
        .map_err(csv_err)?;
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in &o.records {
        w.write_record(r.to_row()).map_err(csv_err)?;
    }
    w.flush()?;
    let mut g6 = String::new();
    for r in o.positives() {
        g6.push_str(&r.graph6);
        g6.push('\n');
    }
    fs::write(out.graph6_path(), g6)?;
    fs::write(out.summary_path(), o.summary.to_string())?;
    Ok(())
}
