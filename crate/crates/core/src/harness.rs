//! Parameter scans, bound-ratio reports and the flat-file output layer.
//!
//! Scans assemble [`TradeoffPoint`]s per code family; `check_bound` turns a
//! point set into empirical bound constants (max ratios, never asserted
//! against a specific coefficient) and flags any family whose ratio grows
//! with n. CSV columns are fixed: `family,n,k,d,d_is_exact,q_ratio,c_ratio`,
//! floats at 6 significant digits; JSON mirrors the same fields.

use crate::cacode::{self, CaError};
use crate::surface::{self, k_copies_point};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Debug)]
pub enum HarnessError {
    Io { path: PathBuf, message: String },
    Parse { line: usize, message: String },
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::Io { path, message } => {
                write!(f, "{}: {message}", path.display())
            }
            HarnessError::Parse { line, message } => {
                write!(f, "parse error at line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for HarnessError {}

/// The scanned code families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ca,
    Planar,
    Toric,
    KCopies,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Ca => write!(f, "ca"),
            Family::Planar => write!(f, "planar"),
            Family::Toric => write!(f, "toric"),
            Family::KCopies => write!(f, "kcopies"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ca" => Ok(Family::Ca),
            "planar" => Ok(Family::Planar),
            "toric" => Ok(Family::Toric),
            "kcopies" => Ok(Family::KCopies),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// A distance value that is either exact or only an upper bound (the
/// single-seed weight d' stands in for d above the exhaustive range).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceValue {
    Exact(u64),
    Upper(u64),
}

impl DistanceValue {
    pub fn value(&self) -> u64 {
        match *self {
            DistanceValue::Exact(d) | DistanceValue::Upper(d) => d,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DistanceValue::Exact(_))
    }
}

/// One (family, n, k, d) record. The ratios are recomputed from the stored
/// fields on demand, so they can never go stale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TradeoffPoint {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub d: DistanceValue,
}

impl TradeoffPoint {
    pub fn new(family: Family, n: usize, k: usize, d: DistanceValue) -> Self {
        assert!(d.value() >= 1, "distance must be at least 1");
        Self { family, n, k, d }
    }

    /// k·d²/n, the quantum-bound ratio.
    pub fn q_ratio(&self) -> f64 {
        let d = self.d.value() as f64;
        self.k as f64 * d * d / self.n as f64
    }

    /// k·√d/n, the classical-bound ratio.
    pub fn c_ratio(&self) -> f64 {
        self.k as f64 * (self.d.value() as f64).sqrt() / self.n as f64
    }

    /// Spatial dimension of every family built here.
    pub const SPATIAL_DIMENSION: u32 = 2;
}

/// The D-dimensional bound exponent alpha = 2/(D−1), reported alongside
/// bound checks (for D = 2 it is 2, matching the quantum ratio k·d²/n).
pub fn bound_exponent(spatial_dimension: u32) -> f64 {
    assert!(spatial_dimension >= 2);
    2.0 / (spatial_dimension as f64 - 1.0)
}

/// One row of a cellular-automaton scan: d' always, exhaustive d when the
/// side is within the requested range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaScanRow {
    pub l: usize,
    pub n: usize,
    pub k: usize,
    pub d_prime: u64,
    pub d_exhaustive: Option<u64>,
}

impl CaScanRow {
    pub fn best_distance(&self) -> DistanceValue {
        match self.d_exhaustive {
            Some(d) => DistanceValue::Exact(d),
            None => DistanceValue::Upper(self.d_prime),
        }
    }

    pub fn c_ratio(&self) -> f64 {
        self.to_point().c_ratio()
    }

    pub fn to_point(&self) -> TradeoffPoint {
        TradeoffPoint::new(Family::Ca, self.n, self.k, self.best_distance())
    }
}

/// Scans the automaton family over odd sides in `[l_min, l_max]`,
/// computing the exhaustive distance for sides up to `exhaustive_up_to`.
/// Sides are dispatched to a worker pool; output is ordered by L.
pub fn scan_ca(
    l_min: usize,
    l_max: usize,
    exhaustive_up_to: usize,
) -> Result<Vec<CaScanRow>, CaError> {
    if l_min.is_multiple_of(2) {
        return Err(CaError::EvenSide(l_min));
    }
    if l_max.is_multiple_of(2) {
        return Err(CaError::EvenSide(l_max));
    }
    if l_min < 3 {
        return Err(CaError::SideTooSmall(l_min));
    }
    let sides: Vec<usize> = (l_min..=l_max).step_by(2).collect();
    let mut rows = sides
        .into_par_iter()
        .map(|l| {
            let d_prime = cacode::single_seed_weight(l)?;
            let d_exhaustive = if l <= exhaustive_up_to {
                // An explicit range is an explicit override of the guard.
                Some(cacode::exhaustive_distance_with_guard(l, exhaustive_up_to)?)
            } else {
                None
            };
            Ok(CaScanRow {
                l,
                n: l * l,
                k: l - 1,
                d_prime,
                d_exhaustive,
            })
        })
        .collect::<Result<Vec<_>, CaError>>()?;
    rows.sort_by_key(|r| r.l);
    Ok(rows)
}

/// Scans the surface families: planar codes up to d_max, toric codes up to
/// l_max, and the tight k-copies packing (fixed distance d_max, a growing
/// number of side-by-side copies, so k·d²/n stays constant). k is
/// recomputed from the constraint rank of each constructed code.
pub fn scan_surface(d_max: usize, l_max: usize) -> Vec<TradeoffPoint> {
    assert!(d_max >= 2 && l_max >= 2, "sizes start at 2");
    let planar: Vec<TradeoffPoint> = (2..=d_max)
        .into_par_iter()
        .map(|d| {
            let code = surface::planar_surface_code(d).expect("d >= 2");
            TradeoffPoint::new(
                Family::Planar,
                code.num_qubits(),
                code.k(),
                DistanceValue::Exact(d as u64),
            )
        })
        .collect();
    let toric: Vec<TradeoffPoint> = (2..=l_max)
        .into_par_iter()
        .map(|l| {
            let code = surface::toric_code(l).expect("l >= 2");
            TradeoffPoint::new(
                Family::Toric,
                code.num_qubits(),
                code.k(),
                DistanceValue::Exact(l as u64),
            )
        })
        .collect();
    let copies: Vec<TradeoffPoint> = (1..=d_max)
        .map(|c| k_copies_point(d_max, c).expect("d >= 2"))
        .collect();
    let mut points = planar;
    points.extend(toric);
    points.extend(copies);
    points
}

/// Which bound a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Quantum,
    Classical,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Quantum => write!(f, "quantum"),
            BoundKind::Classical => write!(f, "classical"),
        }
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quantum" => Ok(BoundKind::Quantum),
            "classical" => Ok(BoundKind::Classical),
            other => Err(format!("unknown bound kind {other:?}")),
        }
    }
}

/// Slope tolerance above which a growing ratio is flagged.
pub const SLOPE_TOLERANCE: f64 = 0.02;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyBound {
    pub family: Family,
    pub points: usize,
    /// Empirical constants: suprema over the scanned set only.
    pub max_q_ratio: f64,
    pub max_c_ratio: f64,
    /// Log-log slope of the checked ratio against n, with RMS residual.
    pub slope: Option<f64>,
    pub residual: Option<f64>,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub which: BoundKind,
    pub tolerance: f64,
    /// The D-dimensional exponent 2/(D−1) at D = 2.
    pub alpha: f64,
    pub families: Vec<FamilyBound>,
}

fn fit_with_residual(xs: &[f64], ys: &[f64]) -> Option<(f64, f64)> {
    let points: Vec<(f64, f64)> = xs.iter().copied().zip(ys.iter().copied()).collect();
    let slope = cacode::fit_exponent(&points).ok()?;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / logs.len() as f64;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / logs.len() as f64;
    let intercept = my - slope * mx;
    let mse = logs
        .iter()
        .map(|&(lx, ly)| {
            let e = ly - (intercept + slope * lx);
            e * e
        })
        .sum::<f64>()
        / logs.len() as f64;
    Some((slope, mse.sqrt()))
}

/// Reduces a point set to per-family empirical constants and growth flags.
/// Order-invariant: points are grouped and sorted internally.
pub fn check_bound(points: &[TradeoffPoint], which: BoundKind) -> BoundReport {
    assert!(!points.is_empty(), "bound check needs at least one point");
    let mut families: Vec<Family> = points.iter().map(|p| p.family).collect();
    families.sort_by_key(|f| f.to_string());
    families.dedup();
    let mut out = Vec::new();
    for family in families {
        let mut group: Vec<&TradeoffPoint> =
            points.iter().filter(|p| p.family == family).collect();
        group.sort_by_key(|p| (p.n, p.k, p.d.value()));
        let max_q = group.iter().map(|p| p.q_ratio()).fold(f64::MIN, f64::max);
        let max_c = group.iter().map(|p| p.c_ratio()).fold(f64::MIN, f64::max);
        let ratio = |p: &TradeoffPoint| match which {
            BoundKind::Quantum => p.q_ratio(),
            BoundKind::Classical => p.c_ratio(),
        };
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for p in &group {
            xs.push(p.n as f64);
            ys.push(ratio(p));
        }
        let fitted = fit_with_residual(&xs, &ys);
        let (slope, residual) = match fitted {
            Some((s, r)) => (Some(s), Some(r)),
            None => (None, None),
        };
        out.push(FamilyBound {
            family,
            points: group.len(),
            max_q_ratio: max_q,
            max_c_ratio: max_c,
            slope,
            residual,
            flagged: slope.is_some_and(|s| s > SLOPE_TOLERANCE),
        });
    }
    BoundReport {
        which,
        tolerance: SLOPE_TOLERANCE,
        alpha: bound_exponent(TradeoffPoint::SPATIAL_DIMENSION),
        families: out,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// Formats a float with 6 significant digits, switching to scientific
/// notation outside a readable magnitude range.
fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-4..=8).contains(&exp) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

fn round_sig(x: f64) -> f64 {
    fmt_sig(x).parse().unwrap_or(x)
}

pub const POINTS_CSV_HEADER: &str = "family,n,k,d,d_is_exact,q_ratio,c_ratio";

#[derive(Serialize, Deserialize)]
struct PointJson {
    family: Family,
    n: usize,
    k: usize,
    d: u64,
    d_is_exact: bool,
    q_ratio: f64,
    c_ratio: f64,
}

impl From<&TradeoffPoint> for PointJson {
    fn from(p: &TradeoffPoint) -> Self {
        PointJson {
            family: p.family,
            n: p.n,
            k: p.k,
            d: p.d.value(),
            d_is_exact: p.d.is_exact(),
            q_ratio: round_sig(p.q_ratio()),
            c_ratio: round_sig(p.c_ratio()),
        }
    }
}

impl From<PointJson> for TradeoffPoint {
    fn from(j: PointJson) -> Self {
        let d = if j.d_is_exact {
            DistanceValue::Exact(j.d)
        } else {
            DistanceValue::Upper(j.d)
        };
        TradeoffPoint::new(j.family, j.n, j.k, d)
    }
}

pub fn emit_points(points: &[TradeoffPoint], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from(POINTS_CSV_HEADER);
            out.push('\n');
            for p in points {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    p.family,
                    p.n,
                    p.k,
                    p.d.value(),
                    p.d.is_exact(),
                    fmt_sig(p.q_ratio()),
                    fmt_sig(p.c_ratio())
                ));
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<PointJson> = points.iter().map(PointJson::from).collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("point serialization");
            s.push('\n');
            s
        }
    }
}

pub fn parse_points(input: &str, format: OutputFormat) -> Result<Vec<TradeoffPoint>, HarnessError> {
    match format {
        OutputFormat::Csv => {
            let mut out = Vec::new();
            for (idx, line) in input.lines().enumerate() {
                if idx == 0 {
                    if line != POINTS_CSV_HEADER {
                        return Err(HarnessError::Parse {
                            line: 1,
                            message: format!("expected header {POINTS_CSV_HEADER:?}"),
                        });
                    }
                    continue;
                }
                if line.trim().is_empty() {
                    continue;
                }
                let fields: Vec<&str> = line.split(',').collect();
                if fields.len() != 7 {
                    return Err(HarnessError::Parse {
                        line: idx + 1,
                        message: format!("expected 7 fields, got {}", fields.len()),
                    });
                }
                let parse_err = |message: String| HarnessError::Parse {
                    line: idx + 1,
                    message,
                };
                let family = Family::from_str(fields[0]).map_err(parse_err)?;
                let n = fields[1]
                    .parse::<usize>()
                    .map_err(|e| parse_err(e.to_string()))?;
                let k = fields[2]
                    .parse::<usize>()
                    .map_err(|e| parse_err(e.to_string()))?;
                let d = fields[3]
                    .parse::<u64>()
                    .map_err(|e| parse_err(e.to_string()))?;
                let exact = fields[4]
                    .parse::<bool>()
                    .map_err(|e| parse_err(e.to_string()))?;
                let d = if exact {
                    DistanceValue::Exact(d)
                } else {
                    DistanceValue::Upper(d)
                };
                out.push(TradeoffPoint::new(family, n, k, d));
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let rows: Vec<PointJson> =
                serde_json::from_str(input).map_err(|e| HarnessError::Parse {
                    line: e.line(),
                    message: e.to_string(),
                })?;
            Ok(rows.into_iter().map(TradeoffPoint::from).collect())
        }
    }
}

pub const CA_CSV_HEADER: &str = "family,L,n,k,d_prime,d_exhaustive,ratio_ksqrtd_over_n";

/// The automaton-scan CSV keeps d' and the optional exhaustive d side by
/// side (empty field when the side was not enumerated).
pub fn emit_ca_rows(rows: &[CaScanRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from(CA_CSV_HEADER);
            out.push('\n');
            for r in rows {
                out.push_str(&format!(
                    "ca,{},{},{},{},{},{}\n",
                    r.l,
                    r.n,
                    r.k,
                    r.d_prime,
                    r.d_exhaustive.map_or(String::new(), |d| d.to_string()),
                    fmt_sig(r.c_ratio())
                ));
            }
            out
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("row serialization");
            s.push('\n');
            s
        }
    }
}

/// Reads a point file in either schema: the generic tradeoff-point table
/// or the automaton-scan table (whose rows convert via `to_point`).
pub fn parse_points_any(
    input: &str,
    format: OutputFormat,
) -> Result<Vec<TradeoffPoint>, HarnessError> {
    match format {
        OutputFormat::Csv => {
            if input.lines().next() == Some(CA_CSV_HEADER) {
                return Ok(parse_ca_rows_csv(input)?.iter().map(CaScanRow::to_point).collect());
            }
            parse_points(input, format)
        }
        OutputFormat::Json => parse_points(input, format).or_else(|points_err| {
            serde_json::from_str::<Vec<CaScanRow>>(input)
                .map(|rows| rows.iter().map(CaScanRow::to_point).collect())
                .map_err(|_| points_err)
        }),
    }
}

fn parse_ca_rows_csv(input: &str) -> Result<Vec<CaScanRow>, HarnessError> {
    let mut out = Vec::new();
    for (idx, line) in input.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let parse_err = |message: String| HarnessError::Parse {
            line: idx + 1,
            message,
        };
        if fields.len() != 7 {
            return Err(parse_err(format!("expected 7 fields, got {}", fields.len())));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|e| parse_err(e.to_string()));
        let d_exhaustive = if fields[5].is_empty() {
            None
        } else {
            Some(
                fields[5]
                    .parse::<u64>()
                    .map_err(|e| parse_err(e.to_string()))?,
            )
        };
        out.push(CaScanRow {
            l: num(fields[1])?,
            n: num(fields[2])?,
            k: num(fields[3])?,
            d_prime: fields[4]
                .parse::<u64>()
                .map_err(|e| parse_err(e.to_string()))?,
            d_exhaustive,
        });
    }
    Ok(out)
}

pub fn emit_bound_report(report: &BoundReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out =
                String::from("family,points,max_q_ratio,max_c_ratio,slope,residual,flagged\n");
            for fb in &report.families {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    fb.family,
                    fb.points,
                    fmt_sig(fb.max_q_ratio),
                    fmt_sig(fb.max_c_ratio),
                    fb.slope.map_or(String::new(), fmt_sig),
                    fb.residual.map_or(String::new(), fmt_sig),
                    fb.flagged
                ));
            }
            out
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serialization");
            s.push('\n');
            s
        }
    }
}

/// Writes a deliverable to disk, surfacing IO failures with path context.
pub fn write_file(path: &Path, contents: &str) -> Result<(), HarnessError> {
    std::fs::write(path, contents).map_err(|e| HarnessError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_point_list_is_header_only() {
        let csv = emit_points(&[], OutputFormat::Csv);
        assert_eq!(csv, format!("{POINTS_CSV_HEADER}\n"));
    }

    #[test]
    fn csv_roundtrip_single_ca_point() {
        let rows = scan_ca(5, 5, 5).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].d_exhaustive, Some(11));
        let points = vec![rows[0].to_point()];
        assert!(points[0].d.is_exact());
        let csv = emit_points(&points, OutputFormat::Csv);
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.lines().nth(1).unwrap().starts_with("ca,25,4,11,true,"));
        let back = parse_points(&csv, OutputFormat::Csv).unwrap();
        assert_eq!(back, points);
    }

    #[test]
    fn json_roundtrip_identity() {
        let points = vec![
            TradeoffPoint::new(Family::Planar, 13, 1, DistanceValue::Exact(3)),
            TradeoffPoint::new(Family::Ca, 625, 24, DistanceValue::Upper(161)),
        ];
        let json = emit_points(&points, OutputFormat::Json);
        let back = parse_points(&json, OutputFormat::Json).unwrap();
        assert_eq!(back, points);
    }

    #[test]
    fn scan_ca_smallest_code() {
        let rows = scan_ca(3, 3, 3).unwrap();
        assert_eq!(rows[0].k, 2);
        assert_eq!(rows[0].n, 9);
        assert_eq!(rows[0].d_exhaustive, Some(rows[0].d_prime));
    }

    #[test]
    fn scan_ca_rejects_even_bounds() {
        assert!(scan_ca(4, 9, 0).is_err());
        assert!(scan_ca(3, 8, 0).is_err());
    }

    #[test]
    fn scan_surface_k_recomputed_from_rank() {
        let points = scan_surface(3, 3);
        for p in &points {
            match p.family {
                Family::Planar => assert_eq!(p.k, 1),
                Family::Toric => assert_eq!(p.k, 2),
                Family::KCopies => assert_eq!(p.d.value(), 3),
                Family::Ca => unreachable!(),
            }
        }
        assert_eq!(points.len(), 2 + 2 + 3);
    }

    #[test]
    fn single_point_bound_constant() {
        let points = [TradeoffPoint::new(
            Family::Planar,
            9,
            1,
            DistanceValue::Exact(3),
        )];
        let report = check_bound(&points, BoundKind::Quantum);
        assert_eq!(report.families.len(), 1);
        assert!((report.families[0].max_q_ratio - 1.0).abs() < 1e-12);
        assert_eq!(report.families[0].slope, None);
        assert!(!report.families[0].flagged);
    }

    #[test]
    fn k_copies_family_not_flagged() {
        // Fixed distance, growing copy count: the ratio formula is constant.
        let points: Vec<TradeoffPoint> = (1..=12)
            .map(|c| k_copies_point(5, c).unwrap())
            .collect();
        let report = check_bound(&points, BoundKind::Quantum);
        let fb = &report.families[0];
        assert!(fb.slope.unwrap().abs() < 1e-9);
        assert!(!fb.flagged);
        assert!(fb.max_q_ratio <= 1.0 + 1e-12);
        // Mixing distances makes the ratio fall toward 1/2 with n; a
        // decreasing ratio must not be flagged either.
        let mixed: Vec<TradeoffPoint> = (2..=12).map(|d| k_copies_point(d, d).unwrap()).collect();
        let report = check_bound(&mixed, BoundKind::Quantum);
        assert!(report.families[0].slope.unwrap() < 0.0);
        assert!(!report.families[0].flagged);
    }

    #[test]
    fn check_bound_order_invariant() {
        let mut points = scan_surface(4, 4);
        let forward = check_bound(&points, BoundKind::Quantum);
        points.reverse();
        let backward = check_bound(&points, BoundKind::Quantum);
        assert_eq!(forward, backward);
    }

    #[test]
    fn growing_ratio_is_flagged() {
        // A fake family whose q-ratio rises with n must trip the check.
        let points: Vec<TradeoffPoint> = (2..8)
            .map(|i| TradeoffPoint::new(Family::Planar, i * i, i * i, DistanceValue::Exact(i as u64)))
            .collect();
        let report = check_bound(&points, BoundKind::Quantum);
        assert!(report.families[0].flagged);
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(fmt_sig(9.0 / 13.0), "0.692308");
        assert_eq!(fmt_sig(1234.56789), "1234.57");
        assert_eq!(fmt_sig(0.0), "0");
    }

    #[test]
    fn ca_csv_optional_column() {
        let rows = vec![
            CaScanRow { l: 5, n: 25, k: 4, d_prime: 11, d_exhaustive: Some(11) },
            CaScanRow { l: 101, n: 10201, k: 100, d_prime: 1103, d_exhaustive: None },
        ];
        let csv = emit_ca_rows(&rows, OutputFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CA_CSV_HEADER);
        assert!(lines[1].starts_with("ca,5,25,4,11,11,"));
        assert!(lines[2].starts_with("ca,101,10201,100,1103,,"));
    }

    #[test]
    fn bounds_accept_ca_schema() {
        let rows = scan_ca(5, 9, 7).unwrap();
        let csv = emit_ca_rows(&rows, OutputFormat::Csv);
        let points = parse_points_any(&csv, OutputFormat::Csv).unwrap();
        assert_eq!(points.len(), 3);
        assert!(points[0].d.is_exact());
        assert!(!points[2].d.is_exact());
        let json = emit_ca_rows(&rows, OutputFormat::Json);
        assert_eq!(parse_points_any(&json, OutputFormat::Json).unwrap(), points);
    }

    #[test]
    fn write_file_reports_path() {
        let err = write_file(Path::new("/nonexistent-dir/out.csv"), "x").unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/out.csv"));
    }
}
