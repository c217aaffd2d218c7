//! Parsing and formatting of exact rationals.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Parses an integer (`-7`), a fraction (`3/22`) or a finite decimal
/// (`-0.05`, `1.5e-3`) into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_integer(num, s)?;
        let den = parse_integer(den, s)?;
        if den.cmp0().is_eq() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Rational::from((num, den)));
    }
    parse_decimal(s)
}

fn parse_integer(part: &str, whole: &str) -> Result<Integer> {
    let part = part.trim();
    let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed rational `{whole}`")));
    }
    Integer::from_str_radix(part.trim_start_matches('+'), 10)
        .map_err(|_| Error::Parse(format!("malformed rational `{whole}`")))
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("malformed number `{s}`"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut digits = Integer::from_str_radix(&all_digits, 10).map_err(|_| bad())?;
    if negative {
        digits = -digits;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = Integer::from(10);
    let value = if scale >= 0 {
        Rational::from(digits * ten.pow(scale as u32))
    } else {
        Rational::from((digits, ten.pow(scale.unsigned_abs())))
    };
    Ok(value)
}

/// Always `numerator/denominator`, including `n/1` for integers.
pub fn format_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Lowest-terms rational from small integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}
