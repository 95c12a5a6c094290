use mctsp::algorithms::{Algorithm, JoinOrder, RemovalPolicy, SolveStats};
use mctsp::rational;
use mctsp::{ParetoItem, Rational, SolutionKind};
use serde::{Deserialize, Serialize};

/// Output of `solve`, input of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub version: u32,
    pub algorithm: Algorithm,
    #[serde(with = "rational::serde_str")]
    pub eps: Rational,
    pub seed: u64,
    #[serde(default, with = "rational::serde_str_opt")]
    pub gamma: Option<Rational>,
    pub removal: RemovalPolicy,
    pub joining: JoinOrder,
    #[serde(default, with = "rational::serde_str_opt", skip_serializing_if = "Option::is_none")]
    pub beta_cap: Option<Rational>,
    pub kind: SolutionKind,
    pub stats: SolveStats,
    pub items: Vec<ParetoItem>,
}

/// Anything carrying a tour front under `items`: a solution file or a saved
/// oracle front.
#[derive(Debug, Clone, Deserialize)]
pub struct FrontFile {
    #[serde(default = "tour_kind")]
    pub kind: SolutionKind,
    pub items: Vec<ParetoItem>,
}

fn tour_kind() -> SolutionKind {
    SolutionKind::Tour
}
