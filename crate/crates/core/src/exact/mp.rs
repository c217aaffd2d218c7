//! Multiprecision real and complex scalars.
//!
//! Reals are MPFR floats ([`rug::Float`]); [`MpComplex`] is a plain pair of
//! them. Precision is specified in decimal digits and always carries
//! [`GUARD_DIGITS`] extra digits internally.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::{CompleteRound, Pow};
use rug::{Float, Integer, Rational};

pub type MpReal = Float;

pub const GUARD_DIGITS: u32 = 10;

const BITS_PER_DIGIT: f64 = std::f64::consts::LOG2_10;

/// Target accuracy in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub fn digits(digits: u32) -> Self {
        Precision { digits: digits.max(1) }
    }

    pub fn target_digits(&self) -> u32 {
        self.digits
    }

    /// Working precision in bits, target plus guard digits.
    pub fn bits(&self) -> u32 {
        digits_to_bits(self.digits + GUARD_DIGITS)
    }

    /// A precision with `extra` more target digits.
    pub fn widened(&self, extra: u32) -> Self {
        Precision::digits(self.digits + extra)
    }

    /// `10^-digits` at working precision.
    pub fn epsilon(&self) -> Float {
        ten_pow(-(self.digits as i64), self.bits())
    }
}

pub fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * BITS_PER_DIGIT).ceil() as u32 + 8
}

pub fn ten_pow(e: i64, bits: u32) -> Float {
    Float::with_val(bits, Float::i_pow_u(10, e.unsigned_abs() as u32))
        .pow(if e < 0 { -1 } else { 1 })
}

pub fn pi(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi)
}

pub fn to_float(r: &Rational, bits: u32) -> Float {
    Float::with_val(bits, r)
}

/// `x` rounded to `decimals` places after the point, as a plain decimal string.
pub fn format_fixed(x: &Float, decimals: u32) -> String {
    format_decimal(x, decimals, Round::Nearest)
}

/// `x` cut off (towards zero) after `decimals` places.
pub fn format_truncated(x: &Float, decimals: u32) -> String {
    format_decimal(x, decimals, Round::Zero)
}

fn format_decimal(x: &Float, decimals: u32, round: Round) -> String {
    let scale = Integer::from(10).pow(decimals);
    let scaled = Float::with_val(x.prec() + 64, x * &scale);
    let rounded = match scaled.to_integer_round(round) {
        Some((i, _)) => i,
        None => return x.to_string(),
    };
    let negative = rounded.cmp0() == Ordering::Less;
    let digits = rounded.abs().to_string();
    let d = decimals as usize;
    let padded = if digits.len() <= d { format!("{}{digits}", "0".repeat(d + 1 - digits.len())) } else { digits };
    let (int_part, frac_part) = padded.split_at(padded.len() - d);
    let sign = if negative { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// `x` with `digits` significant decimal digits, scientific notation.
pub fn format_significant(x: &Float, digits: u32) -> String {
    x.to_string_radix(10, Some(digits.max(1) as usize))
}

/// Number of leading decimal digits on which `a` and `b` agree,
/// `-log10(|a - b| / |b|)`; `u32::MAX` when they are equal.
pub fn agreeing_digits(a: &Float, b: &Float) -> u32 {
    let diff = Float::with_val(a.prec().max(b.prec()), a - b).abs();
    if diff.is_zero() {
        return u32::MAX;
    }
    let scale = if b.is_zero() { Float::with_val(53, 1) } else { Float::with_val(b.prec(), b.abs_ref()) };
    let rel = Float::with_val(diff.prec(), &diff / &scale);
    let l = -rel.log10().to_f64();
    if l <= 0.0 {
        0
    } else {
        l.floor() as u32
    }
}

/// Best rational approximation of `x` with relative error below `tol`, via
/// continued fractions; `None` if the denominator would exceed `max_den`.
pub fn rational_reconstruct(x: &Float, tol: &Float, max_den: &Integer) -> Option<Rational> {
    let bits = x.prec();
    let target = Float::with_val(bits, x);
    let mut rest = target.clone();
    let (mut p0, mut q0) = (Integer::from(0), Integer::from(1));
    let (mut p1, mut q1) = (Integer::from(1), Integer::from(0));
    for _ in 0..200 {
        let a = rest.clone().floor().to_integer()?;
        let p2 = Integer::from(&a * &p1) + &p0;
        let q2 = Integer::from(&a * &q1) + &q0;
        if &q2 > max_den {
            return None;
        }
        let candidate = Rational::from((p2.clone(), q2.clone()));
        let err = Float::with_val(bits, &target - &candidate).abs();
        let scale = Float::with_val(bits, target.abs_ref());
        if err <= Float::with_val(bits, tol * &scale) {
            return Some(candidate);
        }
        let frac = Float::with_val(bits, &rest - &a);
        if frac.is_zero() {
            return Some(candidate);
        }
        rest = frac.recip();
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}

/// Complex number as a pair of MPFR floats sharing one precision.
#[derive(Clone, Debug, PartialEq)]
pub struct MpComplex {
    pub re: Float,
    pub im: Float,
}

impl MpComplex {
    pub fn new(re: Float, im: Float) -> Self {
        MpComplex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        MpComplex::new(Float::new(bits), Float::new(bits))
    }

    pub fn from_real(re: Float) -> Self {
        let bits = re.prec();
        MpComplex::new(re, Float::new(bits))
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        MpComplex::from_real(Float::with_val(bits, r))
    }

    pub fn from_f64(re: f64, im: f64, bits: u32) -> Self {
        MpComplex::new(Float::with_val(bits, re), Float::with_val(bits, im))
    }

    /// `r e^{i theta}`.
    pub fn from_polar(r: &Float, theta: &Float) -> Self {
        let (s, c) = Float::with_val(theta.prec(), theta).sin_cos(Float::new(theta.prec()));
        MpComplex::new(Float::with_val(r.prec(), r * &c), Float::with_val(r.prec(), r * &s))
    }

    /// `exp(2 pi i k / n)`.
    pub fn root_of_unity(k: i64, n: u64, bits: u32) -> Self {
        let theta = Float::with_val(bits, pi(bits) * 2 * k) / n;
        MpComplex::from_polar(&Float::with_val(bits, 1), &theta)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn with_prec(&self, bits: u32) -> Self {
        MpComplex::new(Float::with_val(bits, &self.re), Float::with_val(bits, &self.im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Float {
        let bits = self.prec();
        Float::with_val(bits, self.re.square_ref()) + Float::with_val(bits, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn conj(&self) -> Self {
        MpComplex::new(self.re.clone(), Float::with_val(self.prec(), -&self.im))
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        MpComplex::new(Float::with_val(self.prec(), &self.re / &n), Float::with_val(self.prec(), &self.im / &n).neg())
    }

    pub fn div(&self, rhs: &MpComplex) -> Self {
        self * &rhs.recip()
    }

    pub fn scale(&self, s: &Float) -> Self {
        MpComplex::new(Float::with_val(self.prec(), &self.re * s), Float::with_val(self.prec(), &self.im * s))
    }

    pub fn powu(&self, k: u32) -> Self {
        let mut result = MpComplex::from_real(Float::with_val(self.prec(), 1));
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Principal `k`-th root.
    pub fn principal_root(&self, k: u32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let bits = self.prec();
        let r = self.abs().root(k);
        let theta = Float::with_val(bits, self.arg() / k);
        MpComplex::from_polar(&r, &theta)
    }

    /// `exp(self)`.
    pub fn exp(&self) -> Self {
        let r = Float::with_val(self.prec(), self.re.exp_ref());
        MpComplex::from_polar(&r, &self.im)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn distance(&self, other: &MpComplex) -> Float {
        (self - other).abs()
    }
}

impl<'a> Add<&'a MpComplex> for &'a MpComplex {
    type Output = MpComplex;

    fn add(self, rhs: &MpComplex) -> MpComplex {
        let bits = self.prec();
        MpComplex::new((&self.re + &rhs.re).complete(bits), (&self.im + &rhs.im).complete(bits))
    }
}

impl<'a> Sub<&'a MpComplex> for &'a MpComplex {
    type Output = MpComplex;

    fn sub(self, rhs: &MpComplex) -> MpComplex {
        let bits = self.prec();
        MpComplex::new((&self.re - &rhs.re).complete(bits), (&self.im - &rhs.im).complete(bits))
    }
}

impl<'a> Mul<&'a MpComplex> for &'a MpComplex {
    type Output = MpComplex;

    fn mul(self, rhs: &MpComplex) -> MpComplex {
        let bits = self.prec();
        let ac = (&self.re * &rhs.re).complete(bits);
        let bd = (&self.im * &rhs.im).complete(bits);
        let ad = (&self.re * &rhs.im).complete(bits);
        let bc = (&self.im * &rhs.re).complete(bits);
        MpComplex::new(ac - bd, ad + bc)
    }
}

impl Neg for &MpComplex {
    type Output = MpComplex;

    fn neg(self) -> MpComplex {
        let bits = self.prec();
        MpComplex::new((-&self.re).complete(bits), (-&self.im).complete(bits))
    }
}

impl fmt::Display for MpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20) as u32;
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(
            f,
            "{} {sign} {}i",
            format_significant(&self.re, digits),
            format_significant(&Float::with_val(self.prec(), self.im.abs_ref()), digits)
        )
    }
}
