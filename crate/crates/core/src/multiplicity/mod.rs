//! Colourings of complete graphs, monochromatic copy counts and the
//! Ramsey multiplicity searches.

mod coloring;
mod count;
mod search;

pub use coloring::{blowup_coloring, partition_classes, partition_coloring, EdgeColoring};
pub use count::{
    binomial, copies_in_complete, count_copies, count_mono, count_mono_pendant, count_pendant_copies, MonoCount,
};
pub use search::{multiplicity_exact, multiplicity_upper_estimate, RandomEstimate};

pub(crate) use count::EmbeddingPlan;
