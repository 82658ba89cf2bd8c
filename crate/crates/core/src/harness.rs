//! Seeded experiment runners.
//!
//! An experiment is a grid of `(n, trial)` cells. Every cell derives its own
//! seed from the master seed with [`cell_seed`], so cells may run in parallel
//! and the output is identical for any execution order. Rows are always
//! emitted in `(n, trial)` order.
//!
//! CSV columns, in order:
//!
//! | column   | meaning                                                     |
//! |----------|-------------------------------------------------------------|
//! | family   | instance family                                             |
//! | n        | vertex count                                                |
//! | trial    | trial index, or `mean` / `frac` for summary rows            |
//! | seed     | instance seed of the cell                                   |
//! | algo     | finder name, or `exact`                                     |
//! | length   | length of the cycle found                                   |
//! | bound    | girth bound of the certificate (scaling) or the size bound (empirics) |
//! | accepted | whether the finder (scaling) or trial (empirics) succeeded  |
//! | retries  | trials used by a randomized finder                          |
//! | sizeS    | sampled vertex set size                                     |
//! | X        | matching classes with an edge inside the sample             |
//! | Y        | single classes inside the sample                            |
//! | sizeZ    | vertices untouched by the chosen matching edges             |
//!
//! Absent fields are empty. In a `mean` row the size columns hold means over
//! the trials of that `n`; in a `frac` row they hold the fraction of trials
//! meeting the corresponding sampling condition.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::{feasible_params, ParameterSet};
use crate::error::{Error, Result};
use crate::finders::{
    appendix_trial, find_matching_edge_sampled, find_matchings_appendix, find_mixed_with,
    find_simplified, find_triangle_edge, sampled_trial, FinderRun, MixedConfig, SampledBounds,
    TrialCondition, TrialRecord,
};
use crate::generators::{gen_half_matchings_gadget, gen_rainbow_ncycle, gen_random_mixed, InstanceSpec};
use crate::graph::ColoredGraph;
use crate::oracle::rainbow_girth_exact;
use crate::rng::{cell_seed, next_seed};

pub const CSV_HEADER: [&str; 13] = [
    "family", "n", "trial", "seed", "algo", "length", "bound", "accepted", "retries", "sizeS", "X",
    "Y", "sizeZ",
];

/// Largest `n` the exact oracle is run at.
pub const EXACT_MAX_N: usize = 24;
pub const DEFAULT_ALPHA: f64 = 0.6;
pub const DEFAULT_GAMMA: f64 = 0.93;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gadget,
    Ncycle,
    Mixed,
    MatchingsOnly,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Gadget => "gadget",
            Family::Ncycle => "ncycle",
            Family::Mixed => "mixed",
            Family::MatchingsOnly => "matchings-only",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gadget" => Ok(Family::Gadget),
            "ncycle" => Ok(Family::Ncycle),
            "mixed" => Ok(Family::Mixed),
            "matchings-only" => Ok(Family::MatchingsOnly),
            _ => Err(Error::Spec(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Exact,
    Sampled,
    Simplified,
    Triangle,
    Appendix,
    Mixed,
}

impl Algo {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Sampled => "sampled",
            Algo::Simplified => "simplified",
            Algo::Triangle => "triangle",
            Algo::Appendix => "appendix",
            Algo::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Algo::Exact),
            "sampled" => Ok(Algo::Sampled),
            "simplified" => Ok(Algo::Simplified),
            "triangle" => Ok(Algo::Triangle),
            "appendix" => Ok(Algo::Appendix),
            "mixed" => Ok(Algo::Mixed),
            _ => Err(Error::Spec(format!("unknown algo {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub family: Family,
    pub n_grid: Vec<usize>,
    pub trials: usize,
    pub algo: Algo,
    pub master_seed: u64,
    /// Mixed family: fraction of the first kind (matchings, or triangles for
    /// `triangle`). Matchings-only family: the color fraction gamma.
    pub alpha_mix: Option<f64>,
    pub retries: usize,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_grid.is_empty() {
            return Err(Error::Spec("empty n grid".into()));
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Spec(format!("n grid {:?} not strictly ascending", self.n_grid)));
        }
        if self.trials == 0 {
            return Err(Error::Spec("trials must be at least 1".into()));
        }
        if let Some(a) = self.alpha_mix {
            if !(a > 0.0 && a <= 1.0) {
                return Err(Error::Spec(format!("alphaMix={a} outside (0, 1]")));
            }
        }
        Ok(())
    }

    fn mix(&self) -> f64 {
        self.alpha_mix.unwrap_or(match self.family {
            Family::MatchingsOnly => DEFAULT_GAMMA,
            _ => DEFAULT_ALPHA,
        })
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        self.n_grid
            .iter()
            .flat_map(|&n| (0..self.trials).map(move |t| (n, t)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialLabel {
    Index(usize),
    Mean,
    Frac,
}

impl fmt::Display for TrialLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrialLabel::Index(i) => write!(f, "{i}"),
            TrialLabel::Mean => f.write_str("mean"),
            TrialLabel::Frac => f.write_str("frac"),
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub family: Family,
    pub n: usize,
    pub trial: TrialLabel,
    pub seed: Option<u64>,
    pub algo: Algo,
    pub length: Option<usize>,
    pub bound: Option<f64>,
    pub accepted: Option<bool>,
    pub retries: Option<usize>,
    pub size_s: Option<f64>,
    pub x: Option<f64>,
    pub y: Option<f64>,
    pub size_z: Option<f64>,
}

fn num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{x:.0}")
    } else {
        format!("{x}")
    }
}

fn opt<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_default()
}

impl CsvRow {
    fn blank(family: Family, n: usize, trial: TrialLabel, algo: Algo) -> Self {
        CsvRow {
            family,
            n,
            trial,
            seed: None,
            algo,
            length: None,
            bound: None,
            accepted: None,
            retries: None,
            size_s: None,
            x: None,
            y: None,
            size_z: None,
        }
    }

    pub fn record(&self) -> [String; 13] {
        [
            self.family.to_string(),
            self.n.to_string(),
            self.trial.to_string(),
            opt(self.seed, |s| s.to_string()),
            self.algo.to_string(),
            opt(self.length, |l| l.to_string()),
            opt(self.bound, num),
            opt(self.accepted, |a| a.to_string()),
            opt(self.retries, |r| r.to_string()),
            opt(self.size_s, num),
            opt(self.x, num),
            opt(self.y, num),
            opt(self.size_z, num),
        ]
    }

    /// `length <= bound`, when both are present.
    pub fn within_bound(&self) -> Option<bool> {
        Some(self.length? as f64 <= self.bound?)
    }

    fn fill_from_trial(&mut self, rec: &TrialRecord) {
        let f = |v: Option<usize>| v.map(|x| x as f64);
        self.size_s = f(rec.size_s);
        self.x = f(rec.x);
        self.y = f(rec.y);
        self.size_z = f(rec.size_z);
    }
}

pub fn write_csv<W: Write>(rows: &[CsvRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(rows: &[CsvRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

/// `key=value` lines, one row per line, empty fields omitted.
pub fn to_text(rows: &[CsvRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let fields: Vec<String> = CSV_HEADER
            .iter()
            .zip(row.record())
            .filter(|(_, v)| !v.is_empty())
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

fn round_count(frac: f64, n: usize) -> usize {
    (frac * n as f64).round() as usize
}

/// The instance for one cell.
pub fn instance_for(spec: &ExperimentSpec, n: usize, seed: u64) -> Result<ColoredGraph> {
    let mix = spec.mix();
    let inst = |matchings, triangles, singles| {
        gen_random_mixed(&InstanceSpec { n, matchings, triangles, singles, seed })
    };
    match spec.family {
        Family::Gadget => gen_half_matchings_gadget(n),
        Family::Ncycle => gen_rainbow_ncycle(n),
        Family::MatchingsOnly => inst((mix * n as f64).ceil() as usize, 0, 0),
        Family::Mixed => {
            let first = round_count(mix, n);
            match spec.algo {
                Algo::Triangle => inst(0, first, n - first),
                Algo::Mixed => inst(first, n - first, 0),
                _ => inst(first, 0, n - first),
            }
        }
    }
}

fn sampler_params(spec: &ExperimentSpec) -> Result<ParameterSet> {
    let alpha = spec.mix();
    feasible_params(alpha, None)?
        .ok_or_else(|| Error::Precondition(format!("no feasible parameters at alpha={alpha}")))
}

fn run_finder(spec: &ExperimentSpec, g: &ColoredGraph, seed: u64) -> Result<FinderRun> {
    match spec.algo {
        Algo::Sampled => find_matching_edge_sampled(g, &sampler_params(spec)?, seed, spec.retries),
        Algo::Simplified => find_simplified(g, &sampler_params(spec)?, seed, spec.retries),
        Algo::Triangle => find_triangle_edge(g, seed),
        Algo::Appendix => find_matchings_appendix(g, spec.mix(), seed, spec.retries),
        Algo::Mixed => {
            let config = MixedConfig { max_retries: spec.retries, ..MixedConfig::default() };
            find_mixed_with(g, seed, &config)
        }
        Algo::Exact => unreachable!("exact handled by caller"),
    }
}

fn scaling_row(spec: &ExperimentSpec, n: usize, trial: usize) -> CsvRow {
    let seed = cell_seed(spec.master_seed, n, trial);
    let mut row = CsvRow::blank(spec.family, n, TrialLabel::Index(trial), spec.algo);
    row.seed = Some(seed);
    row.accepted = Some(false);
    let g = match instance_for(spec, n, seed) {
        Ok(g) => g,
        Err(_) => return row,
    };
    if spec.algo == Algo::Exact {
        if n <= EXACT_MAX_N {
            if let Some(c) = rainbow_girth_exact(&g, None) {
                row.length = Some(c.length);
                row.accepted = Some(true);
            }
        }
        return row;
    }
    let deterministic = spec.algo == Algo::Triangle;
    match run_finder(spec, &g, next_seed(seed)) {
        Ok(run) => {
            row.length = Some(run.cycle.length);
            row.bound = run.certificate.bound;
            row.accepted = Some(true);
            if !deterministic {
                row.retries = Some(run.trials.len());
            }
            if let Some(last) = run.trials.last() {
                row.fill_from_trial(last);
            }
        }
        Err(Error::RetriesExhausted { trials }) => {
            row.retries = Some(trials.len());
        }
        Err(_) => {}
    }
    row
}

/// Runs the chosen finder (or the exact oracle) on every cell.
pub fn run_scaling(spec: &ExperimentSpec) -> Result<Vec<CsvRow>> {
    spec.validate()?;
    Ok(spec
        .cells()
        .into_par_iter()
        .map(|(n, t)| scaling_row(spec, n, t))
        .collect())
}

/// Satisfaction fractions and means over the trials of one `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricsSummary {
    pub n: usize,
    pub trials: usize,
    pub frac_size_s: Option<f64>,
    pub frac_x: Option<f64>,
    pub frac_y: Option<f64>,
    pub frac_z: Option<f64>,
    pub mean_size_s: Option<f64>,
    pub mean_x: Option<f64>,
    pub mean_y: Option<f64>,
    pub mean_z: Option<f64>,
}

/// Per-trial records for one `n`, with the size bound the trials are measured against.
#[derive(Debug, Clone)]
pub struct EmpiricsCell {
    pub n: usize,
    pub seeds: Vec<u64>,
    pub records: Vec<TrialRecord>,
    /// Sampled family: `np + n^(2/3)`. Matchings-only: `n 2^(-4 gamma)`.
    pub bound: f64,
    /// Present for the sampled family.
    pub sampled_bounds: Option<SampledBounds>,
    pub params: Option<ParameterSet>,
    pub summary: EmpiricsSummary,
}

fn mean_of(records: &[TrialRecord], f: impl Fn(&TrialRecord) -> Option<usize>) -> Option<f64> {
    let vals: Vec<f64> = records.iter().filter_map(|r| f(r).map(|v| v as f64)).collect();
    (!vals.is_empty()).then(|| vals.iter().sum::<f64>() / vals.len() as f64)
}

fn frac_ok(records: &[TrialRecord], cond: TrialCondition) -> f64 {
    records.iter().filter(|r| !r.failed(cond)).count() as f64 / records.len() as f64
}

fn empirics_cell(spec: &ExperimentSpec, n: usize) -> Result<EmpiricsCell> {
    let seeds: Vec<u64> = (0..spec.trials).map(|t| cell_seed(spec.master_seed, n, t)).collect();
    let sampled = spec.family == Family::Mixed;
    let params = if sampled { Some(sampler_params(spec)?) } else { None };

    let results: Vec<Result<(TrialRecord, Option<SampledBounds>)>> = seeds
        .par_iter()
        .map(|&seed| {
            let g = instance_for(spec, n, seed)?;
            let trial_seed = next_seed(seed);
            match &params {
                Some(ps) => Ok((sampled_trial(&g, ps, trial_seed)?, Some(SampledBounds::new(&g, ps)))),
                None => Ok((appendix_trial(&g, spec.mix(), trial_seed)?, None)),
            }
        })
        .collect();
    let mut records = Vec::with_capacity(results.len());
    let mut sampled_bounds = None;
    for r in results {
        let (rec, b) = r?;
        records.push(rec);
        sampled_bounds = sampled_bounds.or(b);
    }

    let bound = match sampled_bounds {
        Some(b) => b.size_s,
        None => n as f64 * 0.5f64.powf(4.0 * spec.mix()),
    };
    let summary = EmpiricsSummary {
        n,
        trials: records.len(),
        frac_size_s: sampled.then(|| frac_ok(&records, TrialCondition::SizeS)),
        frac_x: sampled.then(|| frac_ok(&records, TrialCondition::MatchingsKept)),
        frac_y: sampled.then(|| frac_ok(&records, TrialCondition::SinglesKept)),
        frac_z: (!sampled).then(|| frac_ok(&records, TrialCondition::Untouched)),
        mean_size_s: mean_of(&records, |r| r.size_s),
        mean_x: mean_of(&records, |r| r.x),
        mean_y: mean_of(&records, |r| r.y),
        mean_z: mean_of(&records, |r| r.size_z),
    };
    Ok(EmpiricsCell { n, seeds, records, bound, sampled_bounds, params, summary })
}

/// Measures how often the sampling conditions hold: one fresh instance and one trial per cell.
///
/// The mixed family runs the heavy-vertex sampler (matchings and singles at
/// fraction `alphaMix`); the matchings-only family runs the one-edge-per-matching
/// trial at `gamma = alphaMix`.
pub fn lemma_empirics(spec: &ExperimentSpec) -> Result<Vec<EmpiricsCell>> {
    spec.validate()?;
    match spec.family {
        Family::Mixed | Family::MatchingsOnly => {}
        f => return Err(Error::Spec(format!("empirics need mixed or matchings-only, got {f}"))),
    }
    spec.n_grid.iter().map(|&n| empirics_cell(spec, n)).collect()
}

/// [`lemma_empirics`] flattened to CSV rows: per-trial rows, then `mean` and
/// `frac` summary rows for each `n`.
pub fn run_lemma_empirics(spec: &ExperimentSpec) -> Result<Vec<CsvRow>> {
    let algo = match spec.family {
        Family::MatchingsOnly => Algo::Appendix,
        _ => Algo::Sampled,
    };
    let mut rows = Vec::new();
    for cell in lemma_empirics(spec)? {
        for (t, (rec, &seed)) in cell.records.iter().zip(&cell.seeds).enumerate() {
            let mut row = CsvRow::blank(spec.family, cell.n, TrialLabel::Index(t), algo);
            row.seed = Some(seed);
            row.bound = Some(cell.bound);
            row.accepted = Some(rec.accepted);
            row.fill_from_trial(rec);
            rows.push(row);
        }
        let s = &cell.summary;
        let mut mean = CsvRow::blank(spec.family, cell.n, TrialLabel::Mean, algo);
        mean.bound = Some(cell.bound);
        mean.size_s = s.mean_size_s;
        mean.x = s.mean_x;
        mean.y = s.mean_y;
        mean.size_z = s.mean_z;
        let mut frac = CsvRow::blank(spec.family, cell.n, TrialLabel::Frac, algo);
        frac.size_s = s.frac_size_s;
        frac.x = s.frac_x;
        frac.y = s.frac_y;
        frac.size_z = s.frac_z;
        rows.push(mean);
        rows.push(frac);
    }
    Ok(rows)
}
