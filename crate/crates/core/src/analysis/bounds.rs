use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, ratio, Rational};

/// A closed-form approximation ratio together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum RatioModel {
    /// `min{1 + g, 2g^2 / (2g^2 - 2g + 1)} + eps`; the second branch only for `g < 1`.
    TreeDoubling {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
        #[serde(with = "rational::serde_str")]
        eps: Rational,
    },
    /// `(2g^3 + 2g^2) / (3g^2 - 2g + 1) + eps`.
    Christofides {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
        #[serde(with = "rational::serde_str")]
        eps: Rational,
    },
    /// `1 + alpha (beta - 1) + eps` for patching with at most `alpha n`
    /// removed edges and weight spread at most `beta`.
    CycleCoverGeneric {
        #[serde(with = "rational::serde_str")]
        alpha: Rational,
        #[serde(with = "rational::serde_str")]
        beta: Rational,
        #[serde(with = "rational::serde_str")]
        eps: Rational,
    },
    /// `(1 + g) / (1 + 3g - 4g^2) + eps`, undirected, `g < 1`.
    CycleCoverRefined {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
        #[serde(with = "rational::serde_str")]
        eps: Rational,
    },
    /// `1/2 + g^3 / (1 - 3g^2) + eps`, directed, `3g^2 < 1`.
    CycleCoverAtsp {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
        #[serde(with = "rational::serde_str")]
        eps: Rational,
    },
    /// 4/3 for undirected one-two weights.
    StspOneTwo,
    /// 3/2 for directed one-two weights.
    AtspOneTwo,
    /// Undirected `w_max / w_min` bound `2g^2 / (1 - g)`, `g < 1`.
    StspTrivial {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
    },
    /// Directed `w_max / w_min` bound `2g^3 / (1 - 3g^2)`, `3g^2 < 1`.
    AtspTrivial {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
    },
    /// Best known single-criterion undirected ratio
    /// `min{3g^2 / (3g^2 - 2g + 1), (2 - g) / (3 - 3g)}`.
    SingleStsp {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
    },
    /// Best known single-criterion directed ratio
    /// `min{(1 + g) / (2 - g - g^3), g / (1 - g)}`, `g < 1`.
    SingleAtsp {
        #[serde(with = "rational::serde_str")]
        gamma: Rational,
    },
}

fn check_gamma(gamma: &Rational) -> Result<()> {
    if *gamma < ratio(1, 2) || *gamma > Rational::one() {
        return Err(Error::Domain(format!("gamma {gamma} outside [1/2, 1]")));
    }
    Ok(())
}

fn below_one(gamma: &Rational, what: &str) -> Result<()> {
    if *gamma >= Rational::one() {
        return Err(Error::Domain(format!("{what} needs gamma < 1, got {gamma}")));
    }
    Ok(())
}

fn below_inv_sqrt3(gamma: &Rational, what: &str) -> Result<()> {
    if !rational::below_inv_sqrt3(gamma) {
        return Err(Error::Domain(format!(
            "{what} needs 3 gamma^2 < 1, got gamma = {gamma}: directed weight spread is unbounded beyond 1/sqrt(3)"
        )));
    }
    Ok(())
}

fn check_eps(eps: &Rational) -> Result<()> {
    if *eps < Rational::zero() {
        return Err(Error::Domain(format!("eps must be nonnegative, got {eps}")));
    }
    Ok(())
}

/// Exact value of the selected ratio.
pub fn ratio_bound(model: &RatioModel) -> Result<Rational> {
    let one = Rational::one();
    let two = rational::int(2);
    let three = rational::int(3);
    Ok(match model {
        RatioModel::TreeDoubling { gamma: g, eps } => {
            check_gamma(g)?;
            check_eps(eps)?;
            let first = one + g;
            let bound = if *g < one {
                let g2 = g * g;
                let second = two * g2 / (two * g2 - two * g + one);
                first.min(second)
            } else {
                first
            };
            bound + eps
        }
        RatioModel::Christofides { gamma: g, eps } => {
            check_gamma(g)?;
            check_eps(eps)?;
            let g2 = g * g;
            (two * g2 * g + two * g2) / (three * g2 - two * g + one) + eps
        }
        RatioModel::CycleCoverGeneric { alpha, beta, eps } => {
            check_eps(eps)?;
            if *alpha <= Rational::zero() || *alpha > one {
                return Err(Error::Domain(format!("alpha {alpha} outside (0, 1]")));
            }
            if *beta < one {
                return Err(Error::Domain(format!("beta {beta} below 1")));
            }
            one + alpha * (beta - one) + eps
        }
        RatioModel::CycleCoverRefined { gamma: g, eps } => {
            check_gamma(g)?;
            check_eps(eps)?;
            below_one(g, "the refined cycle-cover bound")?;
            (one + g) / (one + three * g - rational::int(4) * g * g) + eps
        }
        RatioModel::CycleCoverAtsp { gamma: g, eps } => {
            check_gamma(g)?;
            check_eps(eps)?;
            below_inv_sqrt3(g, "the directed cycle-cover bound")?;
            ratio(1, 2) + g * g * g / (one - three * g * g) + eps
        }
        RatioModel::StspOneTwo => ratio(4, 3),
        RatioModel::AtspOneTwo => ratio(3, 2),
        RatioModel::StspTrivial { gamma: g } => {
            check_gamma(g)?;
            below_one(g, "the undirected spread bound")?;
            two * g * g / (one - g)
        }
        RatioModel::AtspTrivial { gamma: g } => {
            check_gamma(g)?;
            below_inv_sqrt3(g, "the directed spread bound")?;
            two * g * g * g / (one - three * g * g)
        }
        RatioModel::SingleStsp { gamma: g } => {
            check_gamma(g)?;
            let g2 = g * g;
            let first = three * g2 / (three * g2 - two * g + one);
            if *g < one {
                first.min((two - g) / (three - three * g))
            } else {
                first
            }
        }
        RatioModel::SingleAtsp { gamma: g } => {
            check_gamma(g)?;
            below_one(g, "the single-criterion directed bound")?;
            let first = (one + g) / (two - g - g * g * g);
            first.min(g / (one - g))
        }
    })
}
