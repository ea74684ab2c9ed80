//! Exact linear algebra over the rationals and the coefficient-recovery
//! pipeline for the defining relation.

mod elim;
mod pipeline;

pub use elim::{LinearSystem, Solution, SolveOutcome};
pub use pipeline::{
    xi_pipeline, PipelineError, PipelineReport, StepEquation, XiVector, XI_LABELS,
};
