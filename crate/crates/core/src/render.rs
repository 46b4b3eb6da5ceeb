//! Decimal rendering of exact values with round-half-even.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{RMatrix, Rational};

/// Default number of significant digits in rendered output.
pub const DEFAULT_DIGITS: usize = 5;

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

fn pow10_rational(e: i32) -> Rational {
    if e >= 0 {
        Rational::from_integer(pow10(e as u32))
    } else {
        Rational::new(BigInt::one(), pow10((-e) as u32))
    }
}

/// Nearest integer, ties to even.
pub fn round_half_even(x: &Rational) -> BigInt {
    let floor = x.numer().div_floor(x.denom());
    let frac = x - Rational::from_integer(floor.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1,
        std::cmp::Ordering::Equal if floor.is_even() => floor,
        std::cmp::Ordering::Equal => floor + 1,
    }
}

/// `floor(log10 |x|)` for nonzero `x`, computed exactly.
pub fn decimal_exponent(x: &Rational) -> i32 {
    assert!(!x.is_zero(), "zero has no decimal exponent");
    let a = x.abs();
    let mut e = a.numer().to_string().len() as i32 - a.denom().to_string().len() as i32;
    while pow10_rational(e) > a {
        e -= 1;
    }
    while pow10_rational(e + 1) <= a {
        e += 1;
    }
    e
}

/// Places a decimal point `decimals` digits from the right of `|q|`.
fn place_point(q: &BigInt, decimals: usize, negative: bool) -> String {
    let mut digits = q.abs().to_string();
    if digits.len() <= decimals {
        digits = format!("{}{}", "0".repeat(decimals + 1 - digits.len()), digits);
    }
    let sign = if negative && !q.is_zero() { "-" } else { "" };
    if decimals == 0 {
        return format!("{sign}{digits}");
    }
    let split = digits.len() - decimals;
    format!("{sign}{}.{}", &digits[..split], &digits[split..])
}

/// Fixed-point rendering with `decimals` digits after the point.
pub fn to_fixed(x: &Rational, decimals: usize) -> String {
    let q = round_half_even(&(x * pow10_rational(decimals as i32)));
    place_point(&q, decimals, x.is_negative())
}

/// Rendering with `digits` significant digits (trailing zeros kept).
/// Magnitudes below `1e-4` or at least `1e15` use scientific notation.
pub fn to_significant(x: &Rational, digits: usize) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if x.is_zero() {
        return "0".to_string();
    }
    let mut e = decimal_exponent(x);
    let shift = digits as i32 - 1 - e;
    let mut q = round_half_even(&(x.abs() * pow10_rational(shift)));
    if q == pow10(digits as u32) {
        q /= 10;
        e += 1;
    }
    let negative = x.is_negative();
    if !(-4..15).contains(&e) {
        let mantissa = place_point(&q, digits - 1, negative);
        return format!("{mantissa}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs());
    }
    let decimals = (digits as i32 - 1 - e).max(0) as usize;
    let value = if decimals == 0 {
        // integer part longer than the digit budget: pad with zeros
        &q * pow10((e + 1 - digits as i32) as u32)
    } else {
        q
    };
    place_point(&value, decimals, negative)
}

/// Matrix rendered against a common power-of-ten scale factor, e.g.
/// `1.0e+06 * [...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledRendering {
    pub exponent: i32,
    pub rows: Vec<Vec<String>>,
}

impl ScaledRendering {
    pub fn scale_label(&self) -> String {
        format!("1.0e{}{:02}", if self.exponent < 0 { '-' } else { '+' }, self.exponent.abs())
    }
}

/// Scales by `10^-e` where `e` is the decimal exponent of the largest
/// entry, then renders each entry with `decimals` fixed decimals.
pub fn render_scaled(m: &RMatrix, decimals: usize) -> ScaledRendering {
    let exponent = m.entries().filter(|v| !v.is_zero()).map(decimal_exponent).max().unwrap_or(0);
    let factor = pow10_rational(-exponent);
    let rows = m
        .rows()
        .map(|row| {
            row.iter()
                .map(|v| if v.is_zero() { "0".to_string() } else { to_fixed(&(v * &factor), decimals) })
                .collect()
        })
        .collect();
    ScaledRendering { exponent, rows }
}

pub fn render_matrix(m: &RMatrix, digits: usize) -> Vec<Vec<String>> {
    m.rows().map(|row| row.iter().map(|v| to_significant(v, digits)).collect()).collect()
}
