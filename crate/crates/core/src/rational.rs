//! Exact rational arithmetic helpers.
//!
//! All ratios, gamma values and epsilons travel through the crate as
//! [`Rational`]. On the wire they are `p/q` strings.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn ratio(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

/// Parses `p/q`, a bare integer `p`, or a finite decimal such as `0.55`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parameter(format!("cannot parse rational {s:?}; expected p/q"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.trim().parse().map_err(|_| bad())?;
        let q: i128 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(Error::Parameter(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 30 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: i128 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let scale = 10i128.pow(frac.len() as u32);
        let frac: i128 = frac.parse().map_err(|_| bad())?;
        let magnitude = whole.abs() * scale + frac;
        let numer = if negative || whole < 0 { -magnitude } else { magnitude };
        return Ok(Rational::new(numer, scale));
    }
    let p: i128 = s.parse().map_err(|_| bad())?;
    Ok(int(p))
}

/// Renders `p/q` (always with an explicit denominator).
pub fn to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Rounds half away from zero to `places` decimals.
pub fn to_decimal(r: &Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let negative = r.is_negative();
    let abs = r.abs();
    let scaled = abs * int(scale) + ratio(1, 2);
    let units = scaled.floor().to_integer();
    let (whole, frac) = units.div_rem(&scale);
    let sign = if negative && units != 0 { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0width$}", width = places as usize)
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub fn clamp_at_least(r: Rational, floor: Rational) -> Rational {
    if r < floor {
        floor
    } else {
        r
    }
}

/// `gamma < 1/sqrt(3)`, decided exactly as `3 gamma^2 < 1`.
pub fn below_inv_sqrt3(gamma: &Rational) -> bool {
    int(3) * gamma * gamma < Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_str_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&super::to_string(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| super::parse(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse(" 3 ").unwrap(), int(3));
        assert_eq!(parse("0.55").unwrap(), ratio(11, 20));
        assert_eq!(parse("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse("1.").is_err());
    }

    #[test]
    fn decimals_round_half_up() {
        assert_eq!(to_decimal(&ratio(2, 3), 6), "0.666667");
        assert_eq!(to_decimal(&ratio(1, 1), 6), "1.000000");
        assert_eq!(to_decimal(&ratio(49, 29), 4), "1.6897");
        assert_eq!(to_decimal(&ratio(-1, 8), 2), "-0.13");
    }

    #[test]
    fn inv_sqrt3_threshold() {
        assert!(below_inv_sqrt3(&ratio(11, 20)));
        assert!(!below_inv_sqrt3(&ratio(58, 100)));
    }
}
