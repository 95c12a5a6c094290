use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::rational::{self, ratio, Rational};

fn check_range(gamma: &Rational) -> Result<()> {
    if *gamma < ratio(1, 2) || *gamma > rational::int(1) {
        return Err(Error::Parameter(format!(
            "gamma {} outside [1/2, 1]",
            rational::to_string(gamma)
        )));
    }
    Ok(())
}

/// Every criterion satisfies `w(u,v) <= gamma (w(u,x) + w(x,v))` for all
/// distinct `u, v, x` (ordered triples when directed).
pub fn validate_gamma(inst: &Instance, gamma: &Rational) -> Result<bool> {
    check_range(gamma)?;
    Ok(inst.gamma_violation(gamma).is_none())
}

/// Smallest gamma the instance satisfies, clamped below at 1/2.
pub fn infer_gamma(inst: &Instance) -> Result<Rational> {
    let n = inst.n();
    let mut best = ratio(1, 2);
    for c in 0..inst.k() {
        for u in 0..n {
            for v in 0..n {
                if u == v || (!inst.directed() && v < u) {
                    continue;
                }
                let w = inst.w(c, u, v) as i128;
                for x in 0..n {
                    if x == u || x == v {
                        continue;
                    }
                    let via = (inst.w(c, u, x) + inst.w(c, x, v)) as i128;
                    if w > via {
                        return Err(Error::TriangleViolation {
                            criterion: c,
                            u,
                            v,
                            x,
                        });
                    }
                    let r = Rational::new(w, via);
                    if r > best {
                        best = r;
                    }
                }
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionCheck {
    pub criterion: usize,
    /// `w_max / w_min`.
    #[serde(with = "rational::serde_str")]
    pub spread: Rational,
    #[serde(with = "rational::serde_str_opt")]
    pub spread_bound: Option<Rational>,
    /// Largest `w(e) / w(e')` over edges sharing an endpoint (undirected only).
    #[serde(with = "rational::serde_str_opt")]
    pub adjacent_ratio: Option<Rational>,
    #[serde(with = "rational::serde_str_opt")]
    pub adjacent_bound: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpreadReport {
    #[serde(with = "rational::serde_str")]
    pub gamma: Rational,
    pub directed: bool,
    pub criteria: Vec<CriterionCheck>,
    pub violations: Vec<String>,
}

impl SpreadReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Weight-ratio bounds implied by the strengthened triangle inequality.
///
/// Undirected: `w_max / w_min <= 2 gamma^2 / (1 - gamma)` and, for edges
/// sharing an endpoint, `w(e) / w(e') <= gamma / (1 - gamma)`.
/// Directed: `w_max / w_min <= 2 gamma^3 / (1 - 3 gamma^2)` when
/// `3 gamma^2 < 1`; no bound exists above that.
pub fn check_weight_spread(inst: &Instance, gamma: &Rational) -> Result<SpreadReport> {
    check_range(gamma)?;
    let one = rational::int(1);
    if *gamma >= one {
        return Err(Error::Domain(
            "weight-ratio bounds need gamma < 1 (w_max / w_min is unbounded for metric instances)"
                .into(),
        ));
    }
    let g = *gamma;
    let n = inst.n();
    let lo = inst.min_weights();
    let hi = inst.max_weights();
    let mut criteria = Vec::with_capacity(inst.k());
    let mut violations = Vec::new();
    for c in 0..inst.k() {
        let spread = ratio(hi[c] as i128, lo[c] as i128);
        let (spread_bound, adjacent_ratio, adjacent_bound) = if inst.directed() {
            let b = rational::below_inv_sqrt3(&g)
                .then(|| rational::int(2) * g * g * g / (one - rational::int(3) * g * g));
            (b, None, None)
        } else {
            let mut adj = one;
            for x in 0..n {
                let inc = (0..n).filter(|&y| y != x).map(|y| inst.w(c, x, y));
                let (mn, mx) = inc.fold((u64::MAX, 0), |(a, b), w| (a.min(w), b.max(w)));
                let r = ratio(mx as i128, mn as i128);
                if r > adj {
                    adj = r;
                }
            }
            (
                Some(rational::int(2) * g * g / (one - g)),
                Some(adj),
                Some(g / (one - g)),
            )
        };
        if let Some(b) = spread_bound {
            if spread > b {
                violations.push(format!(
                    "criterion {c}: w_max/w_min = {} exceeds {}",
                    rational::to_string(&spread),
                    rational::to_string(&b)
                ));
            }
        }
        if let (Some(r), Some(b)) = (adjacent_ratio, adjacent_bound) {
            if r > b {
                violations.push(format!(
                    "criterion {c}: adjacent-edge ratio {} exceeds {}",
                    rational::to_string(&r),
                    rational::to_string(&b)
                ));
            }
        }
        criteria.push(CriterionCheck {
            criterion: c,
            spread,
            spread_bound,
            adjacent_ratio,
            adjacent_bound,
        });
    }
    Ok(SpreadReport {
        gamma: g,
        directed: inst.directed(),
        criteria,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{generate, GenSpec, Variant};

    fn uniform(n: usize, directed: bool) -> Instance {
        Instance::from_fn(n, 2, directed, None, |_, _, _| 9).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_gamma(&uniform(5, false), &ratio(1, 2)).unwrap());
        // A 2-edge over two 1-edges breaks gamma = 3/4 (2 > 3/2).
        let spans = Instance::from_fn(4, 1, false, None, |_, u, v| if (u, v) == (0, 1) { 2 } else { 1 })
            .unwrap();
        assert!(!validate_gamma(&spans, &ratio(3, 4)).unwrap());
        assert!(validate_gamma(&spans, &rational::int(1)).unwrap());
        let all_ones = Instance::from_fn(4, 1, false, None, |_, _, _| 1).unwrap();
        assert!(validate_gamma(&all_ones, &ratio(3, 4)).unwrap());
        assert!(validate_gamma(&all_ones, &ratio(2, 5)).is_err());
        assert!(validate_gamma(&all_ones, &ratio(3, 2)).is_err());
    }

    #[test]
    fn infer_examples() {
        assert_eq!(infer_gamma(&uniform(5, false)).unwrap(), ratio(1, 2));
        let spans = Instance::from_fn(4, 1, false, None, |_, u, v| if (u, v) == (0, 1) { 2 } else { 1 })
            .unwrap();
        assert_eq!(infer_gamma(&spans).unwrap(), rational::int(1));
        let broken = Instance::from_fn(3, 1, false, None, |_, u, v| if (u, v) == (0, 1) { 5 } else { 1 })
            .unwrap();
        match infer_gamma(&broken) {
            Err(Error::TriangleViolation { u: 0, v: 1, x: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn spread_at_half() {
        let inst = uniform(5, false);
        let r = check_weight_spread(&inst, &ratio(1, 2)).unwrap();
        assert!(r.passes());
        for c in &r.criteria {
            assert_eq!(c.spread, rational::int(1));
            assert_eq!(c.spread_bound, Some(rational::int(1)));
            assert_eq!(c.adjacent_ratio, Some(rational::int(1)));
            assert_eq!(c.adjacent_bound, Some(rational::int(1)));
        }
    }

    #[test]
    fn spread_three_quarters_bound() {
        let spec = GenSpec::new(Variant::GammaMetricUndirected, 7, 2, 5).with_gamma(ratio(3, 4));
        let r = check_weight_spread(&generate(&spec).unwrap(), &ratio(3, 4)).unwrap();
        assert!(r.passes());
        assert_eq!(r.criteria[0].spread_bound, Some(ratio(9, 2)));
        assert_eq!(r.criteria[0].adjacent_bound, Some(rational::int(3)));
    }

    #[test]
    fn directed_spread_half() {
        let r = check_weight_spread(&uniform(5, true), &ratio(1, 2)).unwrap();
        assert_eq!(r.criteria[0].spread_bound, Some(rational::int(1)));
        assert!(r.passes());
        // Above 1/sqrt(3) no directed bound is asserted.
        let r = check_weight_spread(&uniform(5, true), &ratio(3, 5)).unwrap();
        assert_eq!(r.criteria[0].spread_bound, None);
    }

    #[test]
    fn spread_flags_bad_instances() {
        // Metric, but w_max/w_min = 2 exceeds the 3/5 bound 2*(9/25)/(2/5) = 9/5.
        let inst = Instance::from_fn(4, 1, false, None, |_, u, v| if (u, v) == (0, 1) { 4 } else { 2 })
            .unwrap();
        let r = check_weight_spread(&inst, &ratio(3, 5)).unwrap();
        assert!(!r.passes());
        assert!(check_weight_spread(&inst, &rational::int(1)).is_err());
    }
}
