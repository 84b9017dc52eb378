//! Instance files, generators, conjecture scans and the serializable
//! summaries the CLI prints.

pub mod format;
pub mod generate;
pub mod scan;

use serde::Serialize;

use crate::mls::{Cell, Mls};
use crate::transversal::{two_thirds_bound, Method, SolveReport};

/// Flat, stably ordered view of a [`SolveReport`] for structured output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveSummary {
    pub method: Method,
    pub n: usize,
    pub size: usize,
    pub two_thirds_bound: usize,
    pub cells: Vec<Cell>,
    pub ids: Vec<usize>,
    pub optimal: bool,
    pub nodes: u64,
    pub anomaly: bool,
}

impl SolveSummary {
    pub fn new(mls: &Mls, report: &SolveReport) -> Self {
        SolveSummary {
            method: report.method,
            n: mls.n(),
            size: report.size(),
            two_thirds_bound: two_thirds_bound(mls.n()),
            cells: report.transversal.cells().to_vec(),
            ids: report.transversal.ids().to_vec(),
            optimal: report.optimal,
            nodes: report.nodes,
            anomaly: report.anomaly,
        }
    }
}
