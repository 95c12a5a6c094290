use num_traits::Zero;

use super::bounds::{ratio_bound, RatioModel};
use crate::error::{Error, Result};
use crate::rational::{self, ratio, Rational};

pub const CURVE_COLUMNS: [&str; 11] = [
    "gamma",
    "tree_doubling",
    "christofides",
    "cc_generic",
    "cc_refined",
    "randomized_best",
    "stsp_trivial",
    "atsp_cycle_cover",
    "atsp_trivial",
    "single_stsp",
    "single_atsp",
];

const PLACES: u32 = 6;

/// `start, start + step, ...` up to and including `end`.
pub fn gamma_grid(start: &Rational, end: &Rational, step: &Rational) -> Result<Vec<Rational>> {
    if *step <= Rational::zero() {
        return Err(Error::Parameter(format!("grid step must be positive, got {step}")));
    }
    if start > end {
        return Err(Error::Parameter(format!("grid start {start} exceeds end {end}")));
    }
    let count = ((end - start) / step).floor().to_integer() + 1;
    if count > 1_000_000 {
        return Err(Error::Parameter(format!("grid of {count} points is too large")));
    }
    Ok((0..count).map(|i| start + step * rational::int(i)).collect())
}

fn series(gamma: &Rational) -> Vec<Option<Rational>> {
    let g = *gamma;
    let z = Rational::zero();
    let eval = |m: RatioModel| ratio_bound(&m).ok();
    let christofides = eval(RatioModel::Christofides { gamma: g, eps: z });
    let refined = eval(RatioModel::CycleCoverRefined { gamma: g, eps: z });
    let stsp_trivial = eval(RatioModel::StspTrivial { gamma: g });
    let generic = stsp_trivial.and_then(|beta| {
        eval(RatioModel::CycleCoverGeneric {
            alpha: ratio(1, 3),
            beta,
            eps: z,
        })
    });
    let best = [christofides, refined, generic].into_iter().flatten().min();
    vec![
        eval(RatioModel::TreeDoubling { gamma: g, eps: z }),
        christofides,
        generic,
        refined,
        best,
        stsp_trivial,
        eval(RatioModel::CycleCoverAtsp { gamma: g, eps: z }),
        eval(RatioModel::AtspTrivial { gamma: g }),
        eval(RatioModel::SingleStsp { gamma: g }),
        eval(RatioModel::SingleAtsp { gamma: g }),
    ]
}

/// CSV with one row per grid point and one column per bound series. Values
/// are exact rationals rounded to six decimals; a cell is empty where the
/// series is undefined.
pub fn emit_curves(grid: &[Rational]) -> String {
    let mut out = CURVE_COLUMNS.join(",");
    out.push('\n');
    for g in grid {
        out.push_str(&rational::to_decimal(g, PLACES));
        for v in series(g) {
            out.push(',');
            if let Some(v) = v {
                out.push_str(&rational::to_decimal(&v, PLACES));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn grid_is_inclusive() {
        let g = gamma_grid(&ratio(1, 2), &int(1), &ratio(1, 100)).unwrap();
        assert_eq!(g.len(), 51);
        assert_eq!(g[50], int(1));
        assert!(gamma_grid(&int(1), &ratio(1, 2), &ratio(1, 10)).is_err());
        assert!(gamma_grid(&ratio(1, 2), &int(1), &int(0)).is_err());
    }

    #[test]
    fn half_row_is_all_ones() {
        let csv = emit_curves(&[ratio(1, 2)]);
        let row = csv.lines().nth(1).unwrap();
        assert_eq!(row, format!("0.500000{}", ",1.000000".repeat(10)));
    }

    #[test]
    fn metric_row_has_gaps_where_undefined() {
        let csv = emit_curves(&[int(1)]);
        let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(row.len(), CURVE_COLUMNS.len());
        assert_eq!(row[1], "2.000000");
        assert_eq!(row[2], "2.000000");
        assert_eq!(row[3], "");
        assert_eq!(row[4], "");
        assert_eq!(row[5], "2.000000");
        assert_eq!(row[9], "1.500000");
        assert_eq!(row[10], "");
    }

    #[test]
    fn out_of_range_gamma_gives_empty_cells() {
        let csv = emit_curves(&[ratio(2, 5)]);
        assert_eq!(csv.lines().nth(1).unwrap(), format!("0.400000{}", ",".repeat(10)));
    }
}
