//! Benchmark inputs shared by the criterion targets.

use itdom_core::graph::{named_graph, NamedFamily};
use itdom_core::Graph;

/// Fixed graphs covering dense, sparse and structured cases.
pub fn fixed_inputs() -> Vec<(&'static str, Graph)> {
    let petersen = named_graph(NamedFamily::Petersen).expect("fixed");
    vec![
        ("petersen_complement", petersen.complement()),
        ("petersen", petersen),
        (
            "cycle_16",
            named_graph(NamedFamily::Cycle(16)).expect("fixed"),
        ),
        (
            "complete_bipartite_6_6",
            named_graph(NamedFamily::CompleteBipartite(6, 6)).expect("fixed"),
        ),
        (
            "path_18",
            named_graph(NamedFamily::Path(18)).expect("fixed"),
        ),
    ]
}
