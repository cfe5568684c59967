//! Verification reports: exhaustive good-pair matrices with certificates,
//! connectivity and decomposition checks, and the catalog sweep.

mod randomized;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::branchings::{
    find_strong_arc_decomposition, good_pair_matrix, validate_good_pair, ArcDecomposition, GoodPair, GoodPairMatrix,
};
use crate::catalog::{self, CatalogKey, Ce1Variant};
use crate::connectivity::arc_strong_connectivity;
use crate::constructions::constructive_good_pair;
use crate::digraph::{recognize_semicomplete_split, ArcId, Digraph, SplitPartition};
use crate::error::{Error, Result};

pub use randomized::{randomized_check, sample_spanning_tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Randomized { seed: u64, samples: u64 },
}

/// Matrix orientation, spelled out in every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixAxes {
    pub rows: String,
    pub columns: String,
}

impl Default for MatrixAxes {
    fn default() -> Self {
        MatrixAxes {
            rows: "out_root".to_string(),
            columns: "in_root".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub out: Vec<String>,
    #[serde(rename = "in")]
    pub in_: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub a1: Vec<String>,
    pub a2: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionStatus {
    Found,
    NoneProved,
    NotSearched,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitJson {
    pub v1: Vec<String>,
    pub v2: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveSummary {
    pub pairs: usize,
    pub constructed: usize,
    /// Cells where constructive and exhaustive existence differ.
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Timing {
    pub connectivity_ms: f64,
    pub matrix_ms: f64,
    pub constructive_ms: f64,
    pub decomposition_ms: f64,
}

/// A failed expectation, precise enough to locate the problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub graph: String,
    pub phase: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pair: Option<String>,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.graph, self.phase)?;
        if let Some(pair) = &self.pair {
            write!(f, " ({pair})")?;
        }
        write!(f, ": {}", self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graph: String,
    pub n: usize,
    pub vertices: Vec<String>,
    pub arcs: Vec<String>,
    pub mode: Mode,
    pub k_arc_strong: u32,
    pub witness_cut: Option<Vec<String>>,
    pub axes: MatrixAxes,
    pub matrix: Vec<Vec<bool>>,
    pub all_good: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificates: Option<BTreeMap<String, Certificate>>,
    pub decomposition: Option<DecompositionJson>,
    pub decomposition_status: DecompositionStatus,
    pub split_partition: Option<SplitJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub constructive: Option<ConstructiveSummary>,
    pub failures: Vec<Failure>,
    pub timing: Timing,
    pub runtime_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The report with every timing field zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            timing: Timing::default(),
            runtime_ms: 0.0,
            ..self.clone()
        }
    }

    fn fail(&mut self, phase: &str, pair: Option<String>, message: impl Into<String>) {
        self.failures.push(Failure {
            graph: self.graph.clone(),
            phase: phase.to_string(),
            pair,
            message: message.into(),
        });
    }
}

fn arc_names(d: &Digraph, arcs: &[ArcId]) -> Vec<String> {
    arcs.iter().map(|&a| d.arc_name(a)).collect()
}

fn pair_key(d: &Digraph, pair: &GoodPair) -> String {
    format!("{},{}", d.name(pair.out_root()), d.name(pair.in_root()))
}

pub fn certificate_json(d: &Digraph, pair: &GoodPair) -> Certificate {
    Certificate {
        out: arc_names(d, &pair.out_branching.arcs),
        in_: arc_names(d, &pair.in_branching.arcs),
    }
}

pub fn decomposition_json(d: &Digraph, dec: &ArcDecomposition) -> DecompositionJson {
    DecompositionJson {
        a1: arc_names(d, &dec.first),
        a2: arc_names(d, &dec.second),
    }
}

fn split_json(d: &Digraph, p: &SplitPartition) -> SplitJson {
    let names = |vs: &[crate::digraph::VertexId]| vs.iter().map(|&v| d.name(v)).collect();
    SplitJson {
        v1: names(&p.v1),
        v2: names(&p.v2),
    }
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Report skeleton: structure, connectivity and split recognition.
fn base_report(name: &str, d: &Digraph, mode: Mode) -> VerificationReport {
    let start = Instant::now();
    let cert = arc_strong_connectivity(d);
    let connectivity_ms = millis(start);
    VerificationReport {
        graph: name.to_string(),
        n: d.n(),
        vertices: d.vertices().map(|v| d.name(v)).collect(),
        arcs: arc_names(d, &d.arcs().iter().map(|a| a.id).collect::<Vec<_>>()),
        mode,
        k_arc_strong: cert.k,
        witness_cut: cert.witness_cut.as_deref().map(|cut| arc_names(d, cut)),
        axes: MatrixAxes::default(),
        matrix: Vec::new(),
        all_good: false,
        certificates: None,
        decomposition: None,
        decomposition_status: DecompositionStatus::NotSearched,
        split_partition: recognize_semicomplete_split(d).map(|p| split_json(d, &p)),
        constructive: None,
        failures: Vec::new(),
        timing: Timing {
            connectivity_ms,
            ..Timing::default()
        },
        runtime_ms: 0.0,
    }
}

fn fill_matrix(report: &mut VerificationReport, d: &Digraph, matrix: &GoodPairMatrix) {
    report.matrix = matrix.to_bools();
    report.all_good = matrix.all_good();
    let mut certificates = BTreeMap::new();
    for pair in matrix.cells().iter().flatten().flatten() {
        if !validate_good_pair(d, pair).unwrap_or(false) {
            report.fail("certificate", Some(pair_key(d, pair)), "certificate does not validate");
        }
        certificates.insert(pair_key(d, pair), certificate_json(d, pair));
    }
    report.certificates = Some(certificates);
}

fn search_decomposition(report: &mut VerificationReport, d: &Digraph) -> Result<Option<ArcDecomposition>> {
    let start = Instant::now();
    let found = find_strong_arc_decomposition(d)?;
    report.timing.decomposition_ms = millis(start);
    match &found {
        Some(dec) => {
            if !dec.validate(d) {
                report.fail("decomposition", None, "decomposition does not validate");
            }
            report.decomposition = Some(decomposition_json(d, dec));
            report.decomposition_status = DecompositionStatus::Found;
        }
        None => report.decomposition_status = DecompositionStatus::NoneProved,
    }
    Ok(found)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    pub certificates: bool,
    pub decomposition: bool,
}

/// Exhaustive report for an arbitrary digraph; no expectations attached.
pub fn exhaustive_report(name: &str, d: &Digraph, options: ReportOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = base_report(name, d, Mode::Exhaustive);
    let t = Instant::now();
    let matrix = good_pair_matrix(d);
    report.timing.matrix_ms = millis(t);
    fill_matrix(&mut report, d, &matrix);
    if !options.certificates {
        report.certificates = None;
    }
    if options.decomposition {
        search_decomposition(&mut report, d)?;
    }
    report.runtime_ms = millis(start);
    Ok(report)
}

/// What the case analysis claims about a catalog digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Expectations {
    pub k: Option<u32>,
    pub all_good: bool,
    pub no_decomposition: bool,
    pub constructive: bool,
    /// `Some(false)`: not semicomplete split. `Some(true)`: split with the
    /// recorded partition.
    pub split: Option<bool>,
}

pub fn expectations(key: CatalogKey) -> Expectations {
    let two_arc_strong = Expectations {
        k: Some(2),
        all_good: true,
        constructive: true,
        ..Expectations::default()
    };
    match key {
        CatalogKey::S4 | CatalogKey::S4Multi(_) => Expectations {
            no_decomposition: true,
            ..two_arc_strong
        },
        CatalogKey::Basic { barred: true, .. } | CatalogKey::Combination { .. } | CatalogKey::Appendix(_) => {
            two_arc_strong
        }
        CatalogKey::StructureCe1(Ce1Variant::V1Single) => Expectations {
            k: Some(2),
            all_good: true,
            no_decomposition: true,
            ..Expectations::default()
        },
        CatalogKey::StructureCe1(Ce1Variant::V1Pair) => Expectations {
            k: Some(2),
            all_good: true,
            split: Some(true),
            ..Expectations::default()
        },
        CatalogKey::StructureCe2 => Expectations {
            split: Some(false),
            ..Expectations::default()
        },
        _ => Expectations::default(),
    }
}

/// Full check of one catalog digraph against its expectations.
pub fn verify_key(key: CatalogKey) -> Result<VerificationReport> {
    let start = Instant::now();
    let d = catalog::build(key)?;
    let expect = expectations(key);
    let mut report = base_report(&key.slug(), &d, Mode::Exhaustive);

    if let Some(k) = expect.k {
        if report.k_arc_strong != k {
            let got = report.k_arc_strong;
            report.fail("connectivity", None, format!("expected k = {k}, found {got}"));
        }
    }

    let t = Instant::now();
    let matrix = good_pair_matrix(&d);
    report.timing.matrix_ms = millis(t);
    fill_matrix(&mut report, &d, &matrix);
    if expect.all_good {
        for u in d.vertices() {
            for v in d.vertices() {
                if !matrix.is_good(u, v) {
                    let pair = format!("{},{}", d.name(u), d.name(v));
                    report.fail("matrix", Some(pair), "no good pair");
                }
            }
        }
    }

    if expect.constructive {
        let t = Instant::now();
        let mut summary = ConstructiveSummary {
            pairs: d.n() * d.n(),
            constructed: 0,
            disagreements: 0,
        };
        for u in d.vertices() {
            for v in d.vertices() {
                let pair_name = format!("{},{}", d.name(u), d.name(v));
                let built = match constructive_good_pair(key, &d, u, v) {
                    Ok(Some(pair)) if validate_good_pair(&d, &pair).unwrap_or(false) => true,
                    Ok(Some(_)) => {
                        report.fail(
                            "constructive",
                            Some(pair_name.clone()),
                            "constructed pair does not validate",
                        );
                        false
                    }
                    Ok(None) => false,
                    Err(e) => {
                        report.fail("constructive", Some(pair_name.clone()), e.to_string());
                        false
                    }
                };
                summary.constructed += usize::from(built);
                if built != matrix.is_good(u, v) {
                    summary.disagreements += 1;
                    report.fail(
                        "constructive",
                        Some(pair_name),
                        "constructive and exhaustive existence differ",
                    );
                }
            }
        }
        report.timing.constructive_ms = millis(t);
        report.constructive = Some(summary);
    }

    if expect.no_decomposition && search_decomposition(&mut report, &d)?.is_some() {
        report.fail("decomposition", None, "found a strong arc decomposition");
    }

    match (expect.split, &report.split_partition) {
        (Some(false), Some(p)) => {
            let message = format!("unexpected split partition V1 = {:?}", p.v1);
            report.fail("split", None, message);
        }
        (Some(true), None) => report.fail("split", None, "no split partition"),
        _ => {}
    }

    report.runtime_ms = millis(start);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scope {
    /// The 16 edge sets of the original script.
    #[default]
    Paper16,
    /// Adds all 25 combinations in both dashed variants.
    AllCombinations,
    /// Adds `S4`, its multigraphs, `D1`, the dashed basic cases and the two
    /// split structures.
    Full,
}

impl Scope {
    pub const ALL: [Scope; 3] = [Scope::Paper16, Scope::AllCombinations, Scope::Full];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Paper16 => "paper16",
            Scope::AllCombinations => "all-combinations",
            Scope::Full => "full",
        }
    }

    pub fn keys(self) -> Vec<CatalogKey> {
        let mut keys: Vec<CatalogKey> = (1..=16).map(CatalogKey::Appendix).collect();
        if self == Scope::Paper16 {
            return keys;
        }
        keys.extend(catalog::combination_keys());
        if self == Scope::AllCombinations {
            return keys;
        }
        keys.push(CatalogKey::S4);
        keys.extend((1..=6).map(CatalogKey::S4Multi));
        keys.push(CatalogKey::D1);
        keys.extend(
            catalog::basic_keys(true)
                .into_iter()
                .filter(|k| matches!(k, CatalogKey::Basic { dashed: true, .. })),
        );
        keys.push(CatalogKey::StructureCe1(Ce1Variant::V1Single));
        keys.push(CatalogKey::StructureCe1(Ce1Variant::V1Pair));
        keys.push(CatalogKey::StructureCe2);
        keys
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scope> {
        Scope::ALL
            .into_iter()
            .find(|scope| scope.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown scope {s:?} (paper16, all-combinations, full)")))
    }
}

pub fn verify_catalog(scope: Scope) -> Result<Vec<VerificationReport>> {
    scope.keys().into_iter().map(verify_key).collect()
}
