//! Metric distance matrices: parsing, serialization, generation and checks.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute tolerance for the triangle inequality.
pub const DEFAULT_EPS_TRI: f64 = 1e-9;

/// Symmetric matrix of distances between the home venues of `n` teams.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    /// Builds a matrix from rows and checks every metric axiom within `eps_tri`.
    pub fn new(rows: Vec<Vec<f64>>, eps_tri: f64) -> Result<Self> {
        let m = Self::from_rows_unchecked(rows)?;
        if let Some(v) = validate_metric(&m, eps_tri).into_iter().next() {
            return Err(Error::Metric(v.to_string()));
        }
        Ok(m)
    }

    /// Builds a matrix checking only the shape (square, even, n >= 4).
    pub fn from_rows_unchecked(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Shape(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                r.len(),
                n
            )));
        }
        if n < 4 {
            return Err(Error::Shape(format!("need at least 4 teams, got {n}")));
        }
        if n % 2 == 1 {
            return Err(Error::Shape(format!("team count must be even, got {n}")));
        }
        Ok(Self {
            n,
            d: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Uniform metric: every off-diagonal distance equals `w`.
    pub fn uniform(n: usize, w: f64) -> Result<Self> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0.0 } else { w }).collect())
            .collect();
        Self::new(rows, DEFAULT_EPS_TRI)
    }

    /// Distances between points on a line.
    pub fn from_line(coords: &[f64]) -> Result<Self> {
        let rows = coords
            .iter()
            .map(|a| coords.iter().map(|b| (a - b).abs()).collect())
            .collect();
        Self::new(rows, DEFAULT_EPS_TRI)
    }

    /// Euclidean distances between points in the plane.
    pub fn from_points(points: &[(f64, f64)]) -> Result<Self> {
        let rows = points
            .iter()
            .map(|&(x1, y1)| {
                points
                    .iter()
                    .map(|&(x2, y2)| (x1 - x2).hypot(y1 - y2))
                    .collect()
            })
            .collect();
        Self::new(rows, DEFAULT_EPS_TRI)
    }

    /// Restriction to the given teams, in the given order.
    pub fn submatrix(&self, teams: &[usize]) -> Vec<Vec<f64>> {
        teams
            .iter()
            .map(|&i| teams.iter().map(|&j| self.get(i, j)).collect())
            .collect()
    }
}

/// Text layout of an instance file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InstanceFormat {
    /// First line holds `n`, followed by `n` rows.
    Headered,
    /// Rows only; `n` is the row count.
    Bare,
}

/// Parses an instance and checks all metric axioms at [`DEFAULT_EPS_TRI`].
pub fn load_instance(content: &str, format: InstanceFormat) -> Result<DistanceMatrix> {
    load_instance_with(content, format, DEFAULT_EPS_TRI)
}

pub fn load_instance_with(
    content: &str,
    format: InstanceFormat,
    eps_tri: f64,
) -> Result<DistanceMatrix> {
    let mut lines = content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let declared = match format {
        InstanceFormat::Headered => {
            let head = lines
                .next()
                .ok_or_else(|| Error::Parse("empty instance".into()))?;
            let n: usize = head
                .parse()
                .map_err(|_| Error::Parse(format!("bad team count line {head:?}")))?;
            Some(n)
        }
        InstanceFormat::Bare => None,
    };
    let mut rows = Vec::new();
    for (r, line) in lines.enumerate() {
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>().map_err(|_| {
                    Error::Parse(format!("row {}: bad number {tok:?}", r + 1))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        if let Some(x) = row.iter().find(|x| !x.is_finite()) {
            return Err(Error::Parse(format!("row {}: non-finite value {x}", r + 1)));
        }
        rows.push(row);
    }
    if let Some(n) = declared {
        if rows.len() != n {
            return Err(Error::Shape(format!(
                "header declares {n} teams but {} rows follow",
                rows.len()
            )));
        }
    }
    DistanceMatrix::new(rows, eps_tri)
}

/// Writes the matrix; `load_instance` on the result gives back identical bits.
pub fn serialize_instance(d: &DistanceMatrix, format: InstanceFormat) -> String {
    let mut out = String::new();
    if format == InstanceFormat::Headered {
        let _ = writeln!(out, "{}", d.n());
    }
    for i in 0..d.n() {
        let row: Vec<String> = d.row(i).iter().map(|x| format!("{x}")).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Instance families for experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Euclidean,
    Circle,
    RandomMetric,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 3] = [Self::Euclidean, Self::Circle, Self::RandomMetric];

    pub fn name(self) -> &'static str {
        match self {
            Self::Euclidean => "euclidean",
            Self::Circle => "circle",
            Self::RandomMetric => "random-metric",
        }
    }
}

impl std::str::FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" => Ok(Self::Euclidean),
            "circle" => Ok(Self::Circle),
            "random-metric" | "random" => Ok(Self::RandomMetric),
            other => Err(Error::Parse(format!("unknown instance kind {other:?}"))),
        }
    }
}

impl std::fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Deterministic instance generator.
///
/// `RandomMetric` draws integer weights in `1..=100` and closes them under
/// shortest paths, so its distances are exact integers.
pub fn generate_instance(kind: InstanceKind, n: usize, seed: u64) -> Result<DistanceMatrix> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Domain(format!(
            "generator needs an even team count >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        InstanceKind::Euclidean => {
            let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
            DistanceMatrix::from_points(&pts)
        }
        InstanceKind::Circle => {
            let rows = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let k = i.abs_diff(j).min(n - i.abs_diff(j));
                            if k == 0 {
                                0.0
                            } else {
                                2.0 * (PI * k as f64 / n as f64).sin()
                            }
                        })
                        .collect()
                })
                .collect();
            DistanceMatrix::new(rows, DEFAULT_EPS_TRI)
        }
        InstanceKind::RandomMetric => {
            let mut w = vec![vec![0.0f64; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let x = rng.gen_range(1..=100) as f64;
                    w[i][j] = x;
                    w[j][i] = x;
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let via = w[i][k] + w[k][j];
                        if via < w[i][j] {
                            w[i][j] = via;
                        }
                    }
                }
            }
            DistanceMatrix::new(w, DEFAULT_EPS_TRI)
        }
    }
}

/// Which metric axiom a cell or triple breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MetricViolationKind {
    NonFinite,
    Negative,
    NonZeroDiagonal,
    Asymmetric,
    Triangle,
}

/// One failed axiom with 1-based witness indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricViolation {
    pub kind: MetricViolationKind,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl std::fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} at {:?}: {}", self.kind, self.witness, self.detail)
    }
}

/// Lists every broken metric axiom. Empty means the matrix is a metric.
pub fn validate_metric(d: &DistanceMatrix, eps_tri: f64) -> Vec<MetricViolation> {
    let n = d.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = d.get(i, j);
            if !x.is_finite() {
                out.push(MetricViolation {
                    kind: MetricViolationKind::NonFinite,
                    witness: vec![i + 1, j + 1],
                    detail: format!("d = {x}"),
                });
            } else if x < 0.0 {
                out.push(MetricViolation {
                    kind: MetricViolationKind::Negative,
                    witness: vec![i + 1, j + 1],
                    detail: format!("d = {x}"),
                });
            }
        }
        if d.get(i, i) != 0.0 {
            out.push(MetricViolation {
                kind: MetricViolationKind::NonZeroDiagonal,
                witness: vec![i + 1, i + 1],
                detail: format!("d = {}", d.get(i, i)),
            });
        }
        for j in i + 1..n {
            if d.get(i, j) != d.get(j, i) {
                out.push(MetricViolation {
                    kind: MetricViolationKind::Asymmetric,
                    witness: vec![i + 1, j + 1],
                    detail: format!("{} != {}", d.get(i, j), d.get(j, i)),
                });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                let via = d.get(i, k) + d.get(k, j);
                if d.get(i, j) > via + eps_tri {
                    out.push(MetricViolation {
                        kind: MetricViolationKind::Triangle,
                        witness: vec![i + 1, k + 1, j + 1],
                        detail: format!("{} > {} + {}", d.get(i, j), d.get(i, k), d.get(k, j)),
                    });
                }
            }
        }
    }
    out
}
