use std::collections::BTreeMap;

use itdom_core::graph::{encode_graph6, named_graph, NamedFamily};
use itdom_core::invariants::{Analysis, InvariantReport};
use itdom_core::theorems::{
    check_many, check_with, figure1_graph, figure1_x, search_extremal_in, Expectation, SearchMode,
    Status, TheoremId, TheoremVerdict,
};
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Source;
use crate::cache::CatalogCache;
use crate::error::CliError;
use crate::input::{self, InputGraph};
use crate::report::{cell, sort_entries, Outcome, Table};

pub struct Context {
    pub pool: ThreadPool,
    pub cache: CatalogCache,
    pub omega_cap: usize,
}

impl Context {
    /// Maps `f` over `items` on the worker pool. Results come back in input
    /// order, and the first error in that order wins.
    fn par_map<T, R, F>(&self, items: &[T], f: F) -> Result<Vec<R>, CliError>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Result<R, CliError> + Sync,
    {
        let results: Vec<Result<R, CliError>> =
            self.pool.install(|| items.par_iter().map(&f).collect());
        results.into_iter().collect()
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn invariants(ctx: &Context, source: &Source) -> Result<Outcome, CliError> {
    let graphs = input::load(source, &ctx.cache)?;
    let reports = ctx.par_map(&graphs, |ig| {
        Analysis::with_omega_cap(&ig.graph, ctx.omega_cap)
            .report()
            .map_err(CliError::from)
    })?;
    let mut rows: Vec<(String, InvariantReport)> = graphs
        .into_iter()
        .zip(reports)
        .map(|(ig, r)| (ig.graph6, r))
        .collect();
    sort_entries(&mut rows);
    let table = Table {
        header: vec![
            "graph6",
            "order",
            "size",
            "min_degree",
            "alpha",
            "beta",
            "matching",
            "gamma",
            "tau_i",
            "xi",
            "gamma_it",
            "gamma_t",
            "gamma_tt",
            "omega_count",
        ],
        rows: rows
            .iter()
            .map(|(code, r)| {
                vec![
                    code.clone(),
                    r.order.to_string(),
                    r.size.to_string(),
                    r.min_degree.to_string(),
                    r.alpha.to_string(),
                    r.beta.to_string(),
                    r.matching.to_string(),
                    r.gamma.to_string(),
                    r.tau_i.to_string(),
                    r.xi.to_string(),
                    r.gamma_it.to_string(),
                    cell(r.gamma_t),
                    cell(r.gamma_tt),
                    r.omega_count.to_string(),
                ]
            })
            .collect(),
    };
    let summary = json!({ "graphs": rows.len() });
    let entries = rows
        .into_iter()
        .map(|(code, r)| {
            let v = json!({ "graph6": code, "invariants": to_value(&r) });
            (code, v)
        })
        .collect();
    Ok(Outcome {
        entries,
        summary,
        table,
        failed: false,
    })
}

pub fn parse_theorems(spec: &str) -> Result<Vec<TheoremId>, CliError> {
    if spec.trim() == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let id: TheoremId = part
            .parse()
            .map_err(|e: itdom_core::theorems::UnknownTheorem| CliError::Usage(e.to_string()))?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    if ids.is_empty() {
        return Err(CliError::Usage("no theorem ids given".into()));
    }
    Ok(ids)
}

#[derive(Debug, Default, Serialize)]
struct Tally {
    holds: usize,
    not_applicable: usize,
    violated: usize,
}

impl Tally {
    fn add(&mut self, s: Status) {
        match s {
            Status::Holds => self.holds += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Violated => self.violated += 1,
        }
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Holds => "Holds",
        Status::NotApplicable => "NotApplicable",
        Status::Violated => "Violated",
    }
}

fn expectation_name(e: Expectation) -> &'static str {
    match e {
        Expectation::Proven => "proven",
        Expectation::Refutable => "refutable",
    }
}

fn verdict_summary<'a>(graphs: usize, verdicts: impl Iterator<Item = &'a TheoremVerdict>) -> Value {
    let mut total = Tally::default();
    let mut per: BTreeMap<&'static str, Tally> = BTreeMap::new();
    let (mut proven, mut refutable, mut count) = (0, 0, 0);
    for v in verdicts {
        count += 1;
        total.add(v.status);
        per.entry(v.theorem_id.as_str()).or_default().add(v.status);
        if v.status == Status::Violated {
            match v.expected {
                Expectation::Proven => proven += 1,
                Expectation::Refutable => refutable += 1,
            }
        }
    }
    json!({
        "graphs": graphs,
        "verdicts": count,
        "status": to_value(&total),
        "proven_violations": proven,
        "refutable_violations": refutable,
        "per_theorem": to_value(&per),
    })
}

fn verdict_rows(verdicts: &[TheoremVerdict]) -> Vec<Vec<String>> {
    verdicts
        .iter()
        .map(|v| {
            vec![
                v.graph6.clone(),
                v.theorem_id.to_string(),
                expectation_name(v.expected).to_string(),
                status_name(v.status).to_string(),
            ]
        })
        .collect()
}

const VERDICT_HEADER: [&str; 4] = ["graph6", "theorem_id", "expected", "status"];

pub fn verify(ctx: &Context, theorems: &str, source: &Source) -> Result<Outcome, CliError> {
    let ids = parse_theorems(theorems)?;
    let graphs = input::load(source, &ctx.cache)?;
    let verdicts = ctx.par_map(&graphs, |ig: &InputGraph| {
        let a = Analysis::with_omega_cap(&ig.graph, ctx.omega_cap);
        ids.iter()
            .map(|&id| check_with(id, &a).map_err(CliError::from))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut rows: Vec<(String, Vec<TheoremVerdict>)> = graphs
        .into_iter()
        .zip(verdicts)
        .map(|(ig, v)| (ig.graph6, v))
        .collect();
    sort_entries(&mut rows);
    let all: Vec<TheoremVerdict> = rows.iter().flat_map(|(_, v)| v.iter().cloned()).collect();
    let summary = verdict_summary(rows.len(), all.iter());
    let failed = all.iter().any(TheoremVerdict::is_failure);
    let table = Table {
        header: VERDICT_HEADER.to_vec(),
        rows: verdict_rows(&all),
    };
    let entries = rows
        .into_iter()
        .map(|(code, v)| {
            let e = json!({ "graph6": code, "verdicts": to_value(&v) });
            (code, e)
        })
        .collect();
    Ok(Outcome {
        entries,
        summary,
        table,
        failed,
    })
}

pub fn generate(ctx: &Context, order: usize, all: bool) -> Result<Vec<String>, CliError> {
    Ok(ctx
        .cache
        .catalog(order, !all)?
        .into_iter()
        .map(|e| e.graph6)
        .collect())
}

/// The complement of the Petersen graph against the `⌈n/2⌉` conjecture, and
/// the two-pendant counterexample.
pub fn counterexamples(ctx: &Context) -> Result<Outcome, CliError> {
    let petersen = named_graph(NamedFamily::Petersen).expect("fixed construction");
    let pc = petersen.complement();
    let f1 = figure1_graph();

    let a = Analysis::with_omega_cap(&pc, ctx.omega_cap);
    let ap = Analysis::new(&petersen);
    let n = pc.order();
    let pc_verdicts = check_many(&[TheoremId::Conj1, TheoremId::L2_1, TheoremId::Gtt], &pc)?;
    let pc_code = encode_graph6(&pc).expect("order 10");
    let pc_entry = json!({
        "graph6": pc_code,
        "name": "complement_of_petersen",
        "invariants": to_value(&a.report()?),
        "verdicts": to_value(&pc_verdicts),
        "chain": {
            "n": n,
            "ceil_half_n": n.div_ceil(2),
            "gamma_it": a.gamma_it()?,
            "gamma_tt": a.gamma_tt()?,
            "tau_i": a.tau_i()?,
            "beta_complement": ap.beta()?,
            "n_minus_alpha_complement": n - ap.alpha()?,
        },
    });

    let b = Analysis::with_omega_cap(&f1, ctx.omega_cap);
    let f1_verdicts = check_many(&[TheoremId::T3_1Orig, TheoremId::T3_2], &f1)?;
    let f1_code = encode_graph6(&f1).expect("order 5");
    let f1_entry = json!({
        "graph6": f1_code,
        "name": "two_pendant_counterexample",
        "invariants": to_value(&b.report()?),
        "verdicts": to_value(&f1_verdicts),
        "x": to_value(&figure1_x()),
        "gamma_sets": to_value(&b.dominating_sets()?.sets),
        "omega": to_value(&b.omega()?.sets),
    });

    let all: Vec<TheoremVerdict> = pc_verdicts.iter().chain(&f1_verdicts).cloned().collect();
    let mut entries = vec![(pc_code, pc_entry), (f1_code, f1_entry)];
    sort_entries(&mut entries);
    let mut rows = verdict_rows(&all);
    rows.sort();
    Ok(Outcome {
        entries,
        summary: verdict_summary(2, all.iter()),
        table: Table {
            header: VERDICT_HEADER.to_vec(),
            rows,
        },
        failed: all.iter().any(TheoremVerdict::is_failure),
    })
}

pub fn search(ctx: &Context, mode: SearchMode, order: usize) -> Result<Outcome, CliError> {
    let catalog = ctx.cache.catalog(order, true)?;
    // Split the catalog across workers, then merge and re-sort.
    let chunk = catalog
        .len()
        .div_ceil(ctx.pool.current_num_threads())
        .max(1);
    let chunks: Vec<_> = catalog.chunks(chunk).collect();
    let partial = ctx.par_map(&chunks, |c| {
        search_extremal_in(mode, c).map_err(CliError::from)
    })?;
    let mut hits = Vec::new();
    let mut max_tau_i = None;
    for r in partial {
        if mode == SearchMode::MaxTauI {
            match (max_tau_i, r.max_tau_i) {
                (Some(best), Some(m)) if m < best => continue,
                (Some(best), Some(m)) if m > best => hits.clear(),
                _ => {}
            }
            max_tau_i = max_tau_i.max(r.max_tau_i);
        }
        hits.extend(r.hits);
    }
    hits.sort_by(|p, q| p.graph6.cmp(&q.graph6));
    let open = hits.iter().filter(|h| h.open_case).count();
    let mut summary = json!({
        "mode": mode.as_str(),
        "order": order,
        "examined": catalog.len(),
        "hits": hits.len(),
    });
    if mode == SearchMode::MaxTauI {
        summary["max_tau_i"] = json!(max_tau_i);
    } else {
        summary["open_case"] = json!(open);
    }
    let table = Table {
        header: vec![
            "graph6",
            "alpha",
            "gamma",
            "tau_i",
            "gamma_it",
            "case",
            "open_case",
        ],
        rows: hits
            .iter()
            .map(|h| {
                vec![
                    h.graph6.clone(),
                    h.alpha.to_string(),
                    h.gamma.to_string(),
                    h.tau_i.to_string(),
                    h.gamma_it.to_string(),
                    h.case.unwrap_or("").to_string(),
                    h.open_case.to_string(),
                ]
            })
            .collect(),
    };
    let entries = hits
        .iter()
        .map(|h| (h.graph6.clone(), to_value(h)))
        .collect();
    Ok(Outcome {
        entries,
        summary,
        table,
        failed: false,
    })
}
