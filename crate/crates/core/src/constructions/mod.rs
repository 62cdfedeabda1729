//! Explicit matchings, forcing sets and markings for the solved classes.

mod families;
mod forcing_sets;
mod marking;
mod search;

pub use families::{family_edges, family_vertices, EdgeFamily, VertexFamily};
pub use forcing_sets::{
    construct_forcing_set, construct_m1, default_m1_variant, ForcingSetConstruction,
    ForcingSetSource, M1Variant,
};
pub use marking::{
    construct_marking, marked_subgraph, marking_bound, MarkedSet, MarkedSubgraph, MarkingBound,
    MarkingStrategy, Shift,
};
pub use search::{shift_marking_search, MarkingCertificate};
