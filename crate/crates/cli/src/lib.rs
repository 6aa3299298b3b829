//! Commands behind the `cubegraph` binary. Each command returns its records
//! and a rendered string; the binary only parses flags, writes output and
//! picks the exit code.

use std::fmt::Write as _;

use cubegraph::bounds::{bounds_report_with_epsilon, BoundsInput, DminBranch};
use cubegraph::cube::{coordinate_space, solved_state, unrank, CubeSize, CubeState, Metric, MetricName};
use cubegraph::gpg::{load_graph, validate_lower_bound, EtaMode, LowerBoundReport};
use cubegraph::graph::{CubeGraph, DistanceArray};
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// 2^28 coordinate slots.
pub const DEFAULT_BUDGET: u128 = 1 << 28;

/// God's number in the quarter-turn metric, established by exhaustive
/// computation (Rokicki, Kociemba, Davidson and Dethridge, 2014). Far
/// beyond desk-scale enumeration, so it is carried as a flagged constant.
pub const QUARTER_TURN_GODS_NUMBER: u32 = 26;
pub const EXTERNAL_SOURCE: &str = "Rokicki et al. 2014";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("lower bound failed: {0}")]
    BoundFailure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::BoundFailure(_) => 1,
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<cubegraph::Error> for CliError {
    fn from(e: cubegraph::Error) -> Self {
        match e {
            cubegraph::Error::GraphTooLarge { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DSource {
    Bfs,
    External,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    pub budget: u128,
    pub skip_bfs: bool,
    pub epsilon: f64,
    pub origin: u128,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget: DEFAULT_BUDGET,
            skip_bfs: false,
            epsilon: 0.0,
            origin: 0,
        }
    }
}

fn finite_or_inf<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_infinite() {
        s.serialize_str("inf")
    } else {
        s.serialize_f64(*x)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisRecord {
    pub cube_size: u32,
    pub metric_name: MetricName,
    /// Exact order, as a decimal string so it survives any JSON reader.
    pub n: String,
    pub k: u32,
    pub g: u32,
    pub eta: u64,
    pub r_max: f64,
    pub d_actual: Option<u32>,
    pub d_actual_source: Option<DSource>,
    pub d_min: i64,
    pub d_min_branch: DminBranch,
    #[serde(serialize_with = "finite_or_inf")]
    pub d_probab: f64,
    pub bv_lower: i64,
    pub bv_upper: i64,
}

impl AnalysisRecord {
    /// Three significant figures, e.g. `3.67e6`; small orders print as is.
    pub fn n_rounded(&self) -> String {
        let n: f64 = self.n.parse().expect("decimal order");
        if n < 1000.0 {
            self.n.clone()
        } else {
            format!("{n:.2e}")
        }
    }

    fn d_actual_text(&self) -> String {
        match (self.d_actual, self.d_actual_source) {
            (Some(d), Some(DSource::External)) => format!("{d}* (external: {EXTERNAL_SOURCE})"),
            (Some(d), _) => d.to_string(),
            (None, _) => "-".into(),
        }
    }

    fn d_probab_text(&self) -> String {
        if self.d_probab.is_infinite() {
            "inf".into()
        } else {
            format!("{:.1}", self.d_probab)
        }
    }
}

fn cube_origin(size: CubeSize, origin: u128) -> CliResult<CubeState> {
    if origin == 0 {
        return Ok(solved_state(size));
    }
    let space = coordinate_space(size);
    if origin >= space {
        return Err(CliError::Input(format!(
            "origin {origin} outside the {size} coordinate space (0..{space})"
        )));
    }
    let state = unrank(size, origin);
    if !state.is_valid() {
        return Err(CliError::Input(format!("origin {origin} is not a reachable {size} state")));
    }
    Ok(state)
}

pub fn parse_cube_size(n: u32) -> CliResult<CubeSize> {
    CubeSize::from_edge_length(n).map_err(CliError::Input)
}

fn metric(size: CubeSize, name: MetricName) -> CliResult<Metric> {
    Metric::new(size, name).map_err(|e| {
        let supported: Vec<_> = Metric::SUPPORTED
            .iter()
            .map(|(s, m)| format!("{} {m}", s.edge_length()))
            .collect();
        CliError::Input(format!("{e}; supported: {}", supported.join(", ")))
    })
}

pub fn analyze(size: CubeSize, name: MetricName, opts: &Options) -> CliResult<AnalysisRecord> {
    let metric = metric(size, name)?;
    let graph = CubeGraph::new(metric);
    let origin = cube_origin(size, opts.origin)?;
    let p = graph.local_params(&origin)?;
    let report = bounds_report_with_epsilon(
        &BoundsInput {
            n: p.n.clone(),
            k: p.k,
            g: p.g,
            eta: p.eta,
        },
        opts.epsilon,
    )?;

    let mut d_actual = None;
    if !opts.skip_bfs {
        match graph.distance_array(&origin, opts.budget) {
            Ok(da) => d_actual = Some((da.diameter() as u32, DSource::Bfs)),
            Err(cubegraph::Error::GraphTooLarge { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if d_actual.is_none() && (size, name) == (CubeSize::Three, MetricName::Quarter) {
        d_actual = Some((QUARTER_TURN_GODS_NUMBER, DSource::External));
    }

    Ok(AnalysisRecord {
        cube_size: size.edge_length(),
        metric_name: name,
        n: p.n.to_string(),
        k: p.k,
        g: p.g,
        eta: p.eta,
        r_max: report.r_max.to_f64().expect("finite ratio"),
        d_actual: d_actual.map(|d| d.0),
        d_actual_source: d_actual.map(|d| d.1),
        d_min: report.d_min,
        d_min_branch: report.branch,
        d_probab: report.d_probab,
        bv_lower: report.bv_lower,
        bv_upper: report.bv_upper,
    })
}

pub fn table1(opts: &Options) -> CliResult<Vec<AnalysisRecord>> {
    Metric::SUPPORTED
        .iter()
        .map(|&(size, name)| analyze(size, name, opts))
        .collect()
}

fn to_csv<T: Serialize>(rows: &[T]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Input(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn record_text(r: &AnalysisRecord) -> String {
    let mut s = String::new();
    let size = parse_cube_size(r.cube_size).expect("record size");
    let _ = writeln!(s, "cube       {size}");
    let _ = writeln!(s, "metric     {}", r.metric_name);
    let _ = writeln!(s, "n          {}", r.n);
    let _ = writeln!(s, "k          {}", r.k);
    let _ = writeln!(s, "g          {}", r.g);
    let _ = writeln!(s, "eta        {}", r.eta);
    let _ = writeln!(s, "r_max      {:.1}", r.r_max);
    let _ = writeln!(s, "d_actual   {}", r.d_actual_text());
    let _ = writeln!(s, "d_min      {}", r.d_min);
    let _ = writeln!(s, "d_probab   {}", r.d_probab_text());
    let _ = writeln!(s, "bv_lower   {}", r.bv_lower);
    let _ = writeln!(s, "bv_upper   {}", r.bv_upper);
    s
}

pub fn render_record(r: &AnalysisRecord, format: Format) -> CliResult<String> {
    match format {
        Format::Text => Ok(record_text(r)),
        Format::Csv => to_csv(std::slice::from_ref(r)),
        Format::Json => Ok(to_json(r)),
    }
}

pub fn render_table(rows: &[AnalysisRecord], format: Format) -> CliResult<String> {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => Ok(to_json(rows)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:<6} {:<13} {:>22} {:>9} {:>3} {:>2} {:>4} {:>6} {:>9} {:>6} {:>9} {:>9} {:>9}",
                "cube", "metric", "n", "n~", "k", "g", "eta", "r_max", "d_actual", "d_min",
                "d_probab", "bv_lower", "bv_upper"
            );
            let mut external = false;
            for r in rows {
                let d = match (r.d_actual, r.d_actual_source) {
                    (Some(d), Some(DSource::External)) => {
                        external = true;
                        format!("{d}*")
                    }
                    (Some(d), _) => d.to_string(),
                    (None, _) => "-".into(),
                };
                let size = parse_cube_size(r.cube_size)?;
                let _ = writeln!(
                    s,
                    "{:<6} {:<13} {:>22} {:>9} {:>3} {:>2} {:>4} {:>6.1} {:>9} {:>6} {:>9} {:>9} {:>9}",
                    size.to_string(),
                    r.metric_name.as_str(),
                    r.n,
                    r.n_rounded(),
                    r.k,
                    r.g,
                    r.eta,
                    r.r_max,
                    d,
                    r.d_min,
                    r.d_probab_text(),
                    r.bv_lower,
                    r.bv_upper
                );
            }
            if external {
                let _ = writeln!(s, "* external literature value ({EXTERNAL_SOURCE}), not computed here");
            }
            Ok(s)
        }
    }
}

pub fn distance_array(size: CubeSize, name: MetricName, opts: &Options) -> CliResult<DistanceArray> {
    let graph = CubeGraph::new(metric(size, name)?);
    let origin = cube_origin(size, opts.origin)?;
    Ok(graph.distance_array(&origin, opts.budget)?)
}

#[derive(Serialize)]
struct DistanceRow {
    distance: usize,
    count: u64,
}

pub fn render_distance_array(da: &DistanceArray, format: Format) -> CliResult<String> {
    let rows: Vec<_> = da
        .counts
        .iter()
        .enumerate()
        .map(|(distance, &count)| DistanceRow { distance, count })
        .collect();
    match format {
        Format::Csv => to_csv(&rows),
        Format::Json => Ok(to_json(&rows)),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(s, "{:>3} {:>12}", r.distance, r.count);
            }
            let _ = writeln!(s, "diameter {}, order {}", da.diameter(), da.order());
            Ok(s)
        }
    }
}

pub fn check_graph(source: &str, origin: usize, eta: EtaMode) -> CliResult<LowerBoundReport> {
    let graph = load_graph(source)?;
    Ok(validate_lower_bound(&graph, origin, eta)?)
}

#[derive(Serialize)]
struct CheckRow<'a> {
    n: usize,
    k: u32,
    g: u32,
    eta: u64,
    eta_used: u64,
    eta_mode: EtaMode,
    diameter: u32,
    origin_eccentricity: u32,
    #[serde(serialize_with = "d_min_or_inf")]
    d_min: &'a Option<i64>,
    pass: bool,
}

fn d_min_or_inf<S: Serializer>(d: &&Option<i64>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_i64(*d),
        None => s.serialize_str("inf"),
    }
}

pub fn render_check(r: &LowerBoundReport, format: Format) -> CliResult<String> {
    let row = CheckRow {
        n: r.n,
        k: r.k,
        g: r.g,
        eta: r.eta,
        eta_used: r.eta_used,
        eta_mode: r.eta_mode,
        diameter: r.diameter,
        origin_eccentricity: r.origin_eccentricity,
        d_min: &r.d_min,
        pass: r.pass,
    };
    match format {
        Format::Csv => to_csv(&[row]),
        Format::Json => Ok(to_json(&row)),
        Format::Text => {
            let d_min = r.d_min.map_or("inf".to_string(), |d| d.to_string());
            Ok(format!(
                "n {} k {} g {} eta {} (used {}) diameter {} d_min {} {}\n",
                r.n,
                r.k,
                r.g,
                r.eta,
                r.eta_used,
                r.diameter,
                d_min,
                if r.pass { "pass" } else { "FAIL" }
            ))
        }
    }
}
