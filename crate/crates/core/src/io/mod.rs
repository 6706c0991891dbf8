//! Text formats: graph6, plain edge lists, and index/verification reports.

mod edgelist;
mod graph6;
mod report;

pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, GRAPH6_MAX_ORDER};
pub use report::{
    index_csv, report_json, trace_json, verification_csv, GraphReport, INDEX_CSV_HEADER,
    VERIFICATION_CSV_HEADER,
};
