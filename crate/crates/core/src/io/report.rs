//! JSON and CSV renderings of index reports, verification tables and
//! transformation traces. All numbers are exact integers; the edge-vertex
//! Szeged index always appears doubled, under an `_x2` name.

use serde::Serialize;

use super::graph6::{write_graph6, Graph6Error};
use crate::extremal::{Scope, VerificationReport};
use crate::graph::Graph;
use crate::szeged::{EdgePartition, IndexReport};
use crate::transform::TransformStep;

pub const INDEX_CSV_HEADER: &str = "graph,n,m,k,wiener,szeged,edge_szeged,edge_vertex_szeged_x2";

pub const VERIFICATION_CSV_HEADER: &str =
    "n,k,count_isoclasses,min_sz_e,bound_sz_e,min_sz_ev_x2,bound_sz_ev_x2,unique_minimizer,pass";

/// Serialisable index report for one graph. `k` is the cyclomatic number,
/// which for a cactus is the number of cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub edge_szeged: u64,
    pub edge_vertex_szeged_x2: u64,
    pub per_edge: Vec<EdgePartition>,
}

impl GraphReport {
    pub fn new(g: &Graph, report: IndexReport) -> Result<Self, Graph6Error> {
        Ok(GraphReport {
            graph: write_graph6(g)?,
            n: report.n,
            m: report.m,
            k: g.cyclomatic_number(),
            wiener: report.wiener,
            szeged: report.szeged,
            edge_szeged: report.edge_szeged,
            edge_vertex_szeged_x2: report.edge_vertex_szeged_x2,
            per_edge: report.per_edge,
        })
    }
}

/// One-line JSON object.
pub fn report_json(report: &GraphReport) -> String {
    serde_json::to_string(report).expect("report serialises")
}

fn csv_string<R: IntoIterator<Item = Vec<String>>>(header: &str, rows: R) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(header.split(',')).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
}

pub fn index_csv(reports: &[GraphReport]) -> String {
    csv_string(
        INDEX_CSV_HEADER,
        reports.iter().map(|r| {
            vec![
                r.graph.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.k.to_string(),
                r.wiener.to_string(),
                r.szeged.to_string(),
                r.edge_szeged.to_string(),
                r.edge_vertex_szeged_x2.to_string(),
            ]
        }),
    )
}

/// `pass` is `true`/`false`, or `outside` for orders below 5 where the bound
/// is not claimed.
pub fn verification_csv(reports: &[VerificationReport]) -> String {
    csv_string(
        VERIFICATION_CSV_HEADER,
        reports.iter().map(|r| {
            let pass = match r.scope {
                Scope::BelowOrderFive => "outside".to_string(),
                Scope::InRange | Scope::NoCycles => r.passed().to_string(),
            };
            vec![
                r.n.to_string(),
                r.k.to_string(),
                r.count_isoclasses.to_string(),
                r.sz_e_min.value.to_string(),
                r.bounds.sz_e_min.to_string(),
                r.sz_ev_x2_min.value.to_string(),
                r.bounds.sz_ev_x2_min.to_string(),
                r.unique_minimizer().to_string(),
                pass,
            ]
        }),
    )
}

/// Pretty-printed JSON array of steps.
pub fn trace_json(steps: &[TransformStep]) -> String {
    serde_json::to_string_pretty(steps).expect("trace serialises")
}
