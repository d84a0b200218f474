//! Distance-, resistance- and degree-based topological indices.
//!
//! Every pair-sum index runs over unordered vertex pairs exactly once, with
//! no extra factor of one half. Under that convention the resistance indices
//! coincide with their distance analogues on trees (`Kf = W`, `RH = H`,
//! `RDR = RDD`).

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::rational::{format_float, format_rational, integer, to_f64, Rational};
use crate::resistance::{resistance_all_pairs, ResistanceError, ResistanceMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IndexError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Resistance(#[from] ResistanceError),
    #[error("{0} is only available in exact form for trees and unicyclic graphs")]
    NotExact(IndexSelector),
}

/// A resistance-based index value: exact for trees and unicyclic graphs,
/// floating point otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum IndexValue {
    Exact(Rational),
    Numeric(f64),
}

impl IndexValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, IndexValue::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            IndexValue::Exact(r) => Some(r),
            IndexValue::Numeric(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            IndexValue::Exact(r) => to_f64(r),
            IndexValue::Numeric(x) => *x,
        }
    }

    /// `"p/q"` when exact, 12 significant digits otherwise.
    pub fn render(&self) -> String {
        match self {
            IndexValue::Exact(r) => format_rational(r),
            IndexValue::Numeric(x) => format_float(*x),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            IndexValue::Exact(r) => Value::String(format_rational(r)),
            IndexValue::Numeric(x) => {
                let rounded: f64 = format_float(*x).parse().unwrap_or(*x);
                json!(rounded)
            }
        }
    }
}

/// Index names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum IndexSelector {
    Rdr,
    Wiener,
    Harary,
    Kirchhoff,
    Rh,
    M1,
    M2,
    Dd,
    Rdd,
}

impl std::fmt::Display for IndexSelector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            IndexSelector::Rdr => "rdr",
            IndexSelector::Wiener => "wiener",
            IndexSelector::Harary => "harary",
            IndexSelector::Kirchhoff => "kirchhoff",
            IndexSelector::Rh => "rh",
            IndexSelector::M1 => "m1",
            IndexSelector::M2 => "m2",
            IndexSelector::Dd => "dd",
            IndexSelector::Rdd => "rdd",
        };
        f.write_str(name)
    }
}

impl IndexSelector {
    /// Exact value of the selected index, failing for resistance indices on
    /// graphs outside the exact class.
    pub fn exact_value(self, g: &Graph) -> Result<Rational, IndexError> {
        let int = |x: u64| Rational::from_integer(BigInt::from(x));
        let exact = |v: IndexValue| v.as_exact().cloned().ok_or(IndexError::NotExact(self));
        Ok(match self {
            IndexSelector::Rdr => exact(rdr(g)?)?,
            IndexSelector::Wiener => int(wiener(g)?),
            IndexSelector::Harary => harary(g)?,
            IndexSelector::Kirchhoff => exact(kirchhoff(g)?)?,
            IndexSelector::Rh => exact(resistance_harary(g)?)?,
            IndexSelector::M1 => int(zagreb_m1(g)),
            IndexSelector::M2 => int(zagreb_m2(g)),
            IndexSelector::Dd => int(degree_distance(g)?),
            IndexSelector::Rdd => reciprocal_degree_distance(g)?,
        })
    }
}

fn distances(g: &Graph) -> Result<Vec<Vec<usize>>, IndexError> {
    Ok(g.distance_matrix()?)
}

fn resistances(g: &Graph) -> Result<ResistanceMatrix, IndexError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected.into());
    }
    Ok(resistance_all_pairs(g)?)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Sum of `weight(u, v) / r(u, v)` or `weight(u, v) · r(u, v)` over pairs.
fn resistance_sum(
    g: &Graph,
    r: &ResistanceMatrix,
    weight: impl Fn(usize, usize) -> i64,
    reciprocal: bool,
) -> IndexValue {
    let n = g.n();
    if r.is_exact() {
        let mut total = Rational::zero();
        for (u, v) in pairs(n) {
            let ruv = r.exact(u, v).unwrap();
            let w = integer(weight(u, v));
            total += if reciprocal { w / ruv } else { w * ruv };
        }
        IndexValue::Exact(total)
    } else {
        let total = pairs(n)
            .map(|(u, v)| {
                let w = weight(u, v) as f64;
                if reciprocal {
                    w / r.value(u, v)
                } else {
                    w * r.value(u, v)
                }
            })
            .sum();
        IndexValue::Numeric(total)
    }
}

/// Sum of shortest-path distances over unordered pairs.
pub fn wiener(g: &Graph) -> Result<u64, IndexError> {
    let d = distances(g)?;
    Ok(pairs(g.n()).map(|(u, v)| d[u][v] as u64).sum())
}

/// Sum of reciprocal distances over unordered pairs.
pub fn harary(g: &Graph) -> Result<Rational, IndexError> {
    let d = distances(g)?;
    Ok(harary_from(&d))
}

fn harary_from(d: &[Vec<usize>]) -> Rational {
    pairs(d.len()).map(|(u, v)| crate::rational::ratio(1, d[u][v] as i64)).sum()
}

pub fn kirchhoff(g: &Graph) -> Result<IndexValue, IndexError> {
    let r = resistances(g)?;
    Ok(resistance_sum(g, &r, |_, _| 1, false))
}

pub fn resistance_harary(g: &Graph) -> Result<IndexValue, IndexError> {
    let r = resistances(g)?;
    Ok(resistance_sum(g, &r, |_, _| 1, true))
}

/// First Zagreb index, `Σ_v d(v)²`.
pub fn zagreb_m1(g: &Graph) -> u64 {
    let m1: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    debug_assert_eq!(m1, zagreb_m1_edge_sum(g));
    m1
}

/// The same index written as `Σ_{uv ∈ E} (d(u) + d(v))`.
pub fn zagreb_m1_edge_sum(g: &Graph) -> u64 {
    g.edges().iter().map(|&(u, v)| (g.degree(u) + g.degree(v)) as u64).sum()
}

/// Second Zagreb index, `Σ_{uv ∈ E} d(u)·d(v)`.
pub fn zagreb_m2(g: &Graph) -> u64 {
    g.edges().iter().map(|&(u, v)| (g.degree(u) * g.degree(v)) as u64).sum()
}

pub fn degree_distance(g: &Graph) -> Result<u64, IndexError> {
    let d = distances(g)?;
    Ok(pairs(g.n())
        .map(|(u, v)| ((g.degree(u) + g.degree(v)) * d[u][v]) as u64)
        .sum())
}

pub fn reciprocal_degree_distance(g: &Graph) -> Result<Rational, IndexError> {
    let d = distances(g)?;
    Ok(rdd_from(g, &d))
}

fn rdd_from(g: &Graph, d: &[Vec<usize>]) -> Rational {
    pairs(g.n())
        .map(|(u, v)| {
            crate::rational::ratio((g.degree(u) + g.degree(v)) as i64, d[u][v] as i64)
        })
        .sum()
}

/// Reciprocal degree resistance distance: `Σ (d(u) + d(v)) / r(u, v)`.
pub fn rdr(g: &Graph) -> Result<IndexValue, IndexError> {
    let r = resistances(g)?;
    Ok(rdr_from(g, &r))
}

fn rdr_from(g: &Graph, r: &ResistanceMatrix) -> IndexValue {
    resistance_sum(g, r, |u, v| (g.degree(u) + g.degree(v)) as i64, true)
}

/// Exact RDR; fails unless `g` is a connected tree or unicyclic graph.
pub fn rdr_exact(g: &Graph) -> Result<Rational, IndexError> {
    IndexSelector::Rdr.exact_value(g)
}

/// All nine indices for one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexReport {
    pub wiener: u64,
    pub harary: Rational,
    pub kirchhoff: IndexValue,
    pub resistance_harary: IndexValue,
    pub zagreb_m1: u64,
    pub zagreb_m2: u64,
    pub degree_distance: u64,
    pub reciprocal_degree_distance: Rational,
    pub rdr: IndexValue,
}

pub const REPORT_COLUMNS: [&str; 12] = [
    "wiener",
    "harary",
    "kirchhoff",
    "resistance_harary",
    "zagreb_m1",
    "zagreb_m2",
    "degree_distance",
    "reciprocal_degree_distance",
    "rdr",
    "kirchhoff_exact",
    "resistance_harary_exact",
    "rdr_exact",
];

pub fn index_report(g: &Graph) -> Result<IndexReport, IndexError> {
    let d = distances(g)?;
    let r = resistances(g)?;
    let n = g.n();
    Ok(IndexReport {
        wiener: pairs(n).map(|(u, v)| d[u][v] as u64).sum(),
        harary: harary_from(&d),
        kirchhoff: resistance_sum(g, &r, |_, _| 1, false),
        resistance_harary: resistance_sum(g, &r, |_, _| 1, true),
        zagreb_m1: zagreb_m1(g),
        zagreb_m2: zagreb_m2(g),
        degree_distance: pairs(n)
            .map(|(u, v)| ((g.degree(u) + g.degree(v)) * d[u][v]) as u64)
            .sum(),
        reciprocal_degree_distance: rdd_from(g, &d),
        rdr: rdr_from(g, &r),
    })
}

impl IndexReport {
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("wiener".into(), json!(self.wiener));
        map.insert("harary".into(), json!(format_rational(&self.harary)));
        map.insert("kirchhoff".into(), self.kirchhoff.to_json());
        map.insert("resistance_harary".into(), self.resistance_harary.to_json());
        map.insert("zagreb_m1".into(), json!(self.zagreb_m1));
        map.insert("zagreb_m2".into(), json!(self.zagreb_m2));
        map.insert("degree_distance".into(), json!(self.degree_distance));
        map.insert(
            "reciprocal_degree_distance".into(),
            json!(format_rational(&self.reciprocal_degree_distance)),
        );
        map.insert("rdr".into(), self.rdr.to_json());
        map.insert("kirchhoff_exact".into(), json!(self.kirchhoff.is_exact()));
        map.insert(
            "resistance_harary_exact".into(),
            json!(self.resistance_harary.is_exact()),
        );
        map.insert("rdr_exact".into(), json!(self.rdr.is_exact()));
        Value::Object(map)
    }

    /// Fields in [`REPORT_COLUMNS`] order.
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.wiener.to_string(),
            format_rational(&self.harary),
            self.kirchhoff.render(),
            self.resistance_harary.render(),
            self.zagreb_m1.to_string(),
            self.zagreb_m2.to_string(),
            self.degree_distance.to_string(),
            format_rational(&self.reciprocal_degree_distance),
            self.rdr.render(),
            self.kirchhoff.is_exact().to_string(),
            self.resistance_harary.is_exact().to_string(),
            self.rdr.is_exact().to_string(),
        ]
    }
}
