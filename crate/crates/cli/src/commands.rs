use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io::Write;

use condgraph::census::{
    self, run_census, run_census_to_dir, CensusOptions, CensusOutcome, CensusRecord, DirOutput,
    Mode, Source, CSV_HEADER,
};
use condgraph::classify::{classify, is_conduction_isomorphic, verify_conduction_witness};
use condgraph::conduction::{conduction_graph, ConductionGraph, Rule};
use condgraph::families::FamilySpec;
use condgraph::isomorphism::{are_isomorphic, canonical_form, canonical_graph};
use condgraph::transmission::{device_polynomials, sweep};
use condgraph::{fixture, from_graph6, graph::FIXTURE_NAMES, to_graph6, to_graph6_with_loops, Graph};

use crate::input::{read_graphs, Item};
use crate::{Cli, CliError, Command, Format, ModeArg};

type Out<'a> = &'a mut Vec<u8>;

pub fn run(cli: &Cli, out: Out) -> Result<(), CliError> {
    let c = &cli.common;
    let input = c.input.as_deref();
    match &cli.command {
        Command::Conduct { graphs, show_verdicts } => {
            conduct(&read_graphs(graphs, input)?, c.format, *show_verdicts, out)
        }
        Command::Classify { graphs } => classify_cmd(&read_graphs(graphs, input)?, c.format, out),
        Command::Census { mode, n, ingest, dedupe, all_records, out_dir, shards, only_shards } => {
            let mode = match mode {
                ModeArg::Connected => Mode::Connected,
                ModeArg::Chemical => Mode::Chemical,
                ModeArg::Cubic => Mode::Cubic,
            };
            let opts = CensusOptions { all_records: *all_records, jobs: c.jobs.map(|j| j as usize) };
            let (source, stem) = match (ingest, n) {
                (Some(path), _) => {
                    let (graphs, diags) = census::ingest_graph6_file(path, *dedupe)?;
                    for d in &diags {
                        eprintln!("{}: {d}", path.display());
                    }
                    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
                    (Source::Graphs(graphs), stem.unwrap_or_else(|| "ingest".into()))
                }
                (None, Some(n)) => (Source::Builtin { mode, n: *n }, format!("{mode}-n{n}")),
                (None, None) => return Err(CliError::Input("census needs --n or --ingest".into())),
            };
            let outcome = match out_dir {
                Some(dir) => {
                    let only = (!only_shards.is_empty()).then(|| only_shards.iter().copied().collect::<BTreeSet<_>>());
                    let o = DirOutput { dir: dir.clone(), stem, shards: *shards, only };
                    run_census_to_dir(&source, opts, &o)?
                }
                None => run_census(&source, opts)?,
            };
            for d in &outcome.diagnostics {
                eprintln!("{d}");
            }
            census_output(&outcome, c.format, c.verbose, out)
        }
        Command::Family { name, k, base, verify } => family(name, *k, base.as_deref(), *verify, out),
        Command::Iso { graphs } => iso(&read_graphs(graphs, input)?, graphs.len() == 2, out),
        Command::Transmit { graph, l, r, beta_sq, e_min, e_max, steps } => {
            let items = read_graphs(graph.as_slice(), input)?;
            let [item] = &items[..] else {
                return Err(CliError::Input(format!("transmit needs exactly one graph, got {}", items.len())));
            };
            let g = item.graph.clone()?;
            let dp = device_polynomials(&g, *l, *r)?;
            let curve = sweep(&dp, *beta_sq, *e_min, *e_max, *steps)?;
            for w in &curve.warnings {
                eprintln!("warning: {w}");
            }
            out.write_all(curve.to_csv().as_bytes())?;
            Ok(())
        }
        Command::Fixture { name, list } => {
            if *list {
                for n in FIXTURE_NAMES {
                    writeln!(out, "{n}")?;
                }
                return Ok(());
            }
            let name = name.as_deref().ok_or_else(|| CliError::Input("fixture name or --list required".into()))?;
            writeln!(out, "{}", to_graph6(&fixture(name)?)?)?;
            Ok(())
        }
    }
}

/// Runs `f` on every parsed graph, reporting bad lines on stderr. Any bad
/// line turns the final result into an input error.
fn each_graph(items: &[Item], mut f: impl FnMut(&Item, &Graph) -> Result<(), CliError>) -> Result<(), CliError> {
    let mut bad = 0;
    for item in items {
        let res = match &item.graph {
            Ok(g) => f(item, g),
            Err(e) => Err(CliError::Input(e.to_string())),
        };
        match res {
            Ok(()) => {}
            Err(CliError::Input(msg)) => {
                eprintln!("line {}: {msg}", item.line);
                bad += 1;
            }
            Err(e) => return Err(e),
        }
    }
    if bad > 0 {
        return Err(CliError::Input(format!("{bad} input line(s) rejected")));
    }
    Ok(())
}

fn simple_name(g: &Graph) -> String {
    let n = g.order();
    let m = g.edge_count();
    if m == n * (n - 1) / 2 {
        return format!("K{n}");
    }
    if g.is_connected() && g.max_degree() <= 2 {
        if m == n - 1 {
            return format!("P{n}");
        }
        return format!("C{n}");
    }
    to_graph6(&canonical_graph(g)).unwrap_or_default()
}

/// Short name of a connected component, e.g. `K2^loop` or `P4`.
fn component_name(g: &Graph) -> String {
    let base = simple_name(&g.simple_part());
    match g.loop_count() {
        0 => base,
        l if l == g.order() => format!("{base}^loop"),
        _ => format!("[{}]", canonical_form(g)),
    }
}

fn components(g: &Graph) -> String {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for comp in g.components() {
        *counts.entry(component_name(&g.induced(comp))).or_default() += 1;
    }
    counts
        .iter()
        .map(|(name, k)| format!("{k} × {name}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn loop_list(g: &Graph) -> String {
    if g.loop_count() == 0 {
        return "none".into();
    }
    (0..g.order())
        .filter(|&v| g.has_loop(v))
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn rule_name(rule: Rule) -> String {
    match rule {
        Rule::Table(r) => format!("table:{r:?}"),
        other => format!("{other:?}"),
    }
}

fn conduct(items: &[Item], format: Format, show_verdicts: bool, out: Out) -> Result<(), CliError> {
    if format == Format::Csv {
        writeln!(out, "graph6,conduction,components,loops,cond_iso")?;
    }
    each_graph(items, |item, g| {
        let cg: ConductionGraph = conduction_graph(g)?;
        let gc = cg.graph();
        let g6 = to_graph6_with_loops(gc)?;
        let iso = gc.loop_count() == 0 && are_isomorphic(g, gc).is_some();
        let whole = if gc.is_connected() { component_name(gc) } else { components(gc) };
        match format {
            Format::Graph6 => writeln!(out, "{g6}")?,
            Format::Csv => writeln!(
                out,
                "{},\"{g6}\",{},{},{}",
                item.text,
                components(gc),
                loop_list(gc).replace(',', " "),
                u8::from(iso)
            )?,
            Format::Text => {
                writeln!(out, "input: {}", item.text)?;
                writeln!(out, "conduction: {g6}")?;
                if iso {
                    writeln!(out, "G^C ≅ G ≅ {}; loops: none", simple_name(g))?;
                } else {
                    writeln!(out, "G^C ≅ {whole}; loops: {}", loop_list(gc))?;
                }
                writeln!(out, "components: {}", components(gc))?;
            }
        }
        if show_verdicts {
            for (l, r, v) in cg.verdicts() {
                writeln!(out, "  device {l} {r}: {} ({})", if v.conducts { "conducts" } else { "insulates" }, rule_name(v.rule))?;
            }
        }
        Ok(())
    })
}

fn classify_cmd(items: &[Item], format: Format, out: Out) -> Result<(), CliError> {
    if format == Format::Csv {
        writeln!(out, "{}", CSV_HEADER.join(","))?;
    }
    each_graph(items, |item, g| {
        let rec = CensusRecord::from_graph(g)?;
        match format {
            Format::Csv => writeln!(out, "{}", rec.to_row().join(","))?,
            Format::Graph6 => writeln!(out, "{}", rec.graph6)?,
            Format::Text => {
                let report = classify(g)?;
                writeln!(
                    out,
                    "{}: n={} nullity={} class={} cond_iso={} bipartite={} chemical={} nut={} ipso_omni_ins={} ucg={}",
                    item.text,
                    rec.n,
                    rec.nullity,
                    rec.class_code,
                    rec.is_conduction_isomorphic,
                    rec.is_bipartite,
                    rec.is_chemical,
                    rec.is_nut,
                    rec.is_ipso_omni_insulator,
                    report.is_uniform_core_graph
                )?;
            }
        }
        Ok(())
    })
}

fn census_output(o: &CensusOutcome, format: Format, verbose: bool, out: Out) -> Result<(), CliError> {
    let mut summary = String::new();
    for (n, r) in &o.summary.rows {
        let _ = writeln!(
            summary,
            "n={n}: {}, {}, {}",
            r.total, r.conduction_isomorphic, r.conduction_isomorphic_non_bipartite
        );
    }
    match format {
        Format::Text => out.write_all(summary.as_bytes())?,
        Format::Csv => {
            writeln!(out, "{}", CSV_HEADER.join(","))?;
            for r in &o.records {
                writeln!(out, "{}", r.to_row().join(","))?;
            }
        }
        Format::Graph6 => {
            for r in o.positives() {
                writeln!(out, "{}", r.graph6)?;
            }
        }
    }
    if verbose && format != Format::Text {
        eprint!("{summary}");
    }
    Ok(())
}

fn family(name: &str, k: Option<usize>, base: Option<&str>, verify: bool, out: Out) -> Result<(), CliError> {
    let need_k = || k.ok_or_else(|| CliError::Input(format!("family {name} needs --k")));
    let need_base = || -> Result<Graph, CliError> {
        let b = base.ok_or_else(|| CliError::Input(format!("family {name} needs --base")))?;
        Ok(from_graph6(b)?)
    };
    let spec = match name {
        "corona" => FamilySpec::Corona { base: need_base()?, iterations: k.unwrap_or(1) },
        "comb" => FamilySpec::Comb { k: need_k()? },
        "radialene" => FamilySpec::Radialene { k: need_k()? },
        "min_deg2" => FamilySpec::MinDeg2 { k: need_k()? },
        "large_min_deg" => FamilySpec::LargeMinDeg { k: need_k()? },
        "cdc" => FamilySpec::Cdc { base: need_base()? },
        "appendix" => FamilySpec::Appendix { k: need_k()? },
        other => return Err(CliError::Input(format!("unknown family `{other}`"))),
    };
    let g = spec.graph()?;
    writeln!(out, "{}", to_graph6(&g)?)?;
    if verify {
        let h = spec.witness()?;
        if !is_conduction_isomorphic(&g)? {
            return Err(CliError::Verification(format!("{spec} is not conduction-isomorphic")));
        }
        if !verify_conduction_witness(&g, &h)? {
            return Err(CliError::Verification(format!("the explicit map for {spec} is not an isomorphism onto G^C")));
        }
        writeln!(out, "verified")?;
    }
    Ok(())
}

/// Two positional graphs are compared; otherwise each input graph gets its
/// canonical form.
fn iso(items: &[Item], pair: bool, out: Out) -> Result<(), CliError> {
    if let ([a, b], true) = (items, pair) {
        let (Ok(g1), Ok(g2)) = (&a.graph, &b.graph) else {
            return each_graph(items, |_, _| Ok(()));
        };
        match are_isomorphic(g1, g2) {
            Some(h) => {
                let map: Vec<String> = h.iter().enumerate().map(|(v, w)| format!("{v}->{w}")).collect();
                writeln!(out, "isomorphic")?;
                writeln!(out, "map: {}", map.join(" "))?;
            }
            None => writeln!(out, "not isomorphic")?,
        }
        return Ok(());
    }
    each_graph(items, |_, g| {
        writeln!(out, "{}", canonical_form(g))?;
        Ok(())
    })
}
