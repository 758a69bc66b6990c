//! JSON documents written to stdout. Field order is the declaration order
//! below. Bump `SCHEMA_VERSION` on any incompatible change.

use serde::Serialize;
use spectral_tsp::bounds::BoundReport;
use spectral_tsp::graph::{AdjacencyScreen, DistanceScreen};
use spectral_tsp::solvers::Tour;

use crate::input::LoadedInstance;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct InstanceInfo {
    pub source: String,
    pub name: String,
    pub n: usize,
    pub weight_kind: Option<String>,
    pub optimum: Option<u64>,
}

impl From<&LoadedInstance> for InstanceInfo {
    fn from(inst: &LoadedInstance) -> Self {
        InstanceInfo {
            source: inst.source.clone(),
            name: inst.name.clone(),
            n: inst.distances.n(),
            weight_kind: inst.weight_kind.clone(),
            optimum: inst.optimum,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub instance: InstanceInfo,
    pub bounds: BoundReport,
    /// Best bound over the published optimum.
    pub ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct SolveDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub instance: InstanceInfo,
    pub method: &'static str,
    pub seed: Option<u64>,
    pub tour: Tour,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub regular: bool,
    /// Absent for disconnected graphs.
    pub transmission_regular: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct GraphDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub adjacency: Option<AdjacencyScreen>,
    pub distance: Option<DistanceScreen>,
    /// Screens that were skipped and why.
    pub skipped: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OptimumSource {
    HeldKarp,
    Sidecar,
}

#[derive(Debug, Serialize)]
pub struct BatchRow {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub row: usize,
    pub problem: String,
    pub sidecar: Option<String>,
    pub status: &'static str,
    pub error: Option<String>,
    pub instance: Option<InstanceInfo>,
    pub bounds: Option<BoundReport>,
    pub optimum: Option<f64>,
    pub optimum_source: Option<OptimumSource>,
    pub ratio: Option<f64>,
    pub psd: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}
