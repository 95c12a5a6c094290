//! Closed-form ratio bounds, the empirical-versus-theoretical experiment
//! harness, and curve data for plotting the bounds against gamma.

mod bounds;
mod curves;
mod experiment;

pub use bounds::{ratio_bound, RatioModel};
pub use curves::{emit_curves, gamma_grid, CURVE_COLUMNS};
pub use experiment::{
    guaranteed_bound, judge, run_experiment, summarize, ExperimentConfig, ExperimentRun, ExperimentSummary,
    InstanceDescriptor, Judgement, RatioReport,
};
