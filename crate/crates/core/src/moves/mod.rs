//! Elementary operations on gluing patterns: surgery, curve tracing, vertex
//! typing, simplification and connected sums.

pub mod census;
pub mod curves;
pub mod simplify;
pub mod sum;
pub mod surgery;

pub use census::{classify, total_trisections, type_counts, vertex_census, TypeCounts, VertexInfo, VertexType};
pub use curves::{curve_decomposition, next_on_curve, one_simple_count, Curve, CurveDecomposition};
pub use simplify::{find_simplification, is_non_simplifiable, simplify_cascade};
pub use sum::{
    connected_sum, connected_sum_detailed, find_torus_blocks, split_torus_summand, sum_with_torus, SplitOutcome,
    SumOutcome,
};
pub use surgery::{intertwined_pairs, is_intertwined, surgery, surgery_detailed, SurgeryOutcome};
