//! Approximate Pareto curves for multi-criteria traveling salesman problems.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: complete k-weighted graphs, structural solution types, Euler
//!   circuits and shortcutting.
//! * [`pareto`]: dominance, filtering, coverage factors, grid selection and
//!   amplification.
//! * [`instances`]: seeded generators, gamma validation and inference, and the
//!   JSON instance format.
//! * [`oracles`]: exhaustive Pareto fronts for tours, spanning trees, perfect
//!   matchings and cycle covers, the Tutte f-factor gadget, and grid-quantized
//!   approximate curves.
//! * [`algorithms`]: tree doubling, the multi-criteria Christofides variant and
//!   cycle-cover patching.
//! * [`analysis`]: closed-form ratio bounds, experiment harness and curve
//!   emission.
//!
//! With the default `parallel` feature the inner loops run on rayon; without
//! it every parallel helper in [`par`] degrades to a sequential iterator and
//! produces identical output.

pub mod algorithms;
pub mod analysis;
pub mod error;
pub mod graph;
pub mod instances;
pub mod oracles;
pub mod par;
pub mod pareto;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{Edge, Instance, WeightVector};
pub use pareto::{CoverageFactor, ParetoItem, ParetoSet, SolutionKind};
pub use rational::Rational;
