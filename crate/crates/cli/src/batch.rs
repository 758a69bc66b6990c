use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use spectral_tsp::bounds::report_with_tol;
use spectral_tsp::solvers::{held_karp, HELD_KARP_MAX};

use crate::document::{BatchRow, InstanceInfo, OptimumSource, SCHEMA_VERSION};
use crate::input::{self, ManifestEntry};
use crate::CliError;

struct Evaluated {
    instance: InstanceInfo,
    bounds: spectral_tsp::bounds::BoundReport,
    optimum: Option<(f64, OptimumSource)>,
}

fn evaluate(entry: &ManifestEntry, tol: f64) -> Result<Evaluated, String> {
    let inst = input::tsp_file(&entry.problem, entry.sidecar.as_deref()).map_err(|e| e.to_string())?;
    let bounds = report_with_tol(&inst.distances, tol).map_err(|e| e.to_string())?;
    let optimum = if inst.distances.n() <= HELD_KARP_MAX {
        let exact = held_karp(&inst.distances).map_err(|e| e.to_string())?.length;
        if let Some(published) = inst.optimum {
            if published as f64 != exact {
                return Err(format!(
                    "sidecar optimum {published} disagrees with exact optimum {exact}"
                ));
            }
        }
        Some((exact, OptimumSource::HeldKarp))
    } else {
        inst.optimum.map(|v| (v as f64, OptimumSource::Sidecar))
    };
    Ok(Evaluated {
        instance: InstanceInfo::from(&inst),
        bounds,
        optimum,
    })
}

fn row(index: usize, entry: &ManifestEntry, tol: f64, timing: bool) -> BatchRow {
    let start = Instant::now();
    let result = evaluate(entry, tol);
    let timing_ms = timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let mut row = BatchRow {
        schema_version: SCHEMA_VERSION,
        command: "batch",
        row: index,
        problem: entry.problem.display().to_string(),
        sidecar: entry.sidecar.as_ref().map(|p| p.display().to_string()),
        status: "ok",
        error: None,
        instance: None,
        bounds: None,
        optimum: None,
        optimum_source: None,
        ratio: None,
        psd: None,
        timing_ms,
    };
    match result {
        Ok(ev) => {
            row.ratio = ev.optimum.map(|(opt, _)| ev.bounds.best() / opt);
            row.optimum = ev.optimum.map(|(opt, _)| opt);
            row.optimum_source = ev.optimum.map(|(_, src)| src);
            row.psd = Some(ev.bounds.psd);
            row.instance = Some(ev.instance);
            row.bounds = Some(ev.bounds);
        }
        Err(e) => {
            row.status = "error";
            row.error = Some(e);
        }
    }
    row
}

/// Evaluates every manifest entry on up to `jobs` threads. Rows come back in
/// manifest order.
pub fn run(manifest: &Path, jobs: usize, tol: f64, timing: bool) -> Result<Vec<BatchRow>, CliError> {
    let text = input::read(manifest)?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let entries = input::parse_manifest(&text, base)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    Ok(pool.install(|| {
        entries
            .par_iter()
            .enumerate()
            .map(|(i, e)| row(i, e, tol, timing))
            .collect()
    }))
}

/// Human-readable summary for stderr.
pub fn pretty_table(rows: &[BatchRow]) -> String {
    let mut out = format!(
        "{:<12} {:>5} {:>12} {:>10} {:>7} {:>4}  {}\n",
        "name", "n", "bound", "optimum", "ratio", "psd", "status"
    );
    for r in rows {
        let name = match &r.instance {
            Some(i) => i.name.clone(),
            None => Path::new(&r.problem)
                .file_stem()
                .map_or_else(|| r.problem.clone(), |s| s.to_string_lossy().into_owned()),
        };
        let n = r.instance.as_ref().map_or(String::from("-"), |i| i.n.to_string());
        let bound = r
            .bounds
            .as_ref()
            .map_or(String::from("-"), |b| format!("{:.3}", b.best()));
        let optimum = r.optimum.map_or(String::from("-"), |o| o.to_string());
        let ratio = r.ratio.map_or(String::from("-"), |v| format!("{v:.3}"));
        let psd = match r.psd {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        let status = r.error.as_deref().unwrap_or("ok");
        out.push_str(&format!(
            "{name:<12} {n:>5} {bound:>12} {optimum:>10} {ratio:>7} {psd:>4}  {status}\n"
        ));
    }
    out
}
