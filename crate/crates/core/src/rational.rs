//! Exact rational numbers plus the two conversions the artifacts need:
//! parsing user-supplied thresholds and printing fixed-precision decimals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Significant digits used for every rational written to JSON.
pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn ratio(numer: u64, denom: u64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: u64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"3"`, `"0.25"`, `"-1.5"`, `"1e-3"` or `"1/4"` into an exact rational.
///
/// Decimal input is converted digit by digit, so `"0.1"` is exactly 1/10.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(at) => {
            let exp: i32 = s[at + 1..].parse().map_err(|_| bad())?;
            (&s[..at], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if negative { -value } else { value })
}

/// Renders a float with [`SIGNIFICANT_DIGITS`] significant digits, trailing
/// zeros trimmed, switching to exponent notation outside `[1e-5, 1e12)`.
pub fn format_f64(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, value);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(format!("{value:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() && value.abs() < integer(1_000_000_000_000) {
        return value.to_integer().to_string();
    }
    format_f64(to_f64(value))
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("3").unwrap(), integer(3));
        assert_eq!(parse_rational(".5").unwrap(), half());
        assert_eq!(parse_rational("2.5e-1").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("1e2").unwrap(), integer(100));
        assert_eq!(parse_rational("-0.5").unwrap(), -half());
        assert_eq!(parse_rational("3/12").unwrap(), ratio(1, 4));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", ".", "abc", "1/0", "1.2.3", "0x10", "1e"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formats_twelve_significant_digits() {
        assert_eq!(format_f64(0.5), "0.5");
        assert_eq!(format_f64(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_f64(2.0 / 3.0), "0.666666666667");
        assert_eq!(format_f64(1.0 / 20.0), "0.05");
        assert_eq!(format_f64(123.0), "123");
        assert_eq!(format_f64(1.5e-7), "1.5e-7");
        assert_eq!(format_f64(0.0), "0");
        assert_eq!(format_rational(&ratio(1, 3)), "0.333333333333");
        assert_eq!(format_rational(&integer(7)), "7");
    }
}
