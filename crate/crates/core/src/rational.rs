//! Exact rationals and their text forms.

pub use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rational = num::BigRational;

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn from_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `p/q` in lowest terms; integers print as `p/1`.
pub fn fmt_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Six-decimal display form. Never used in decisions.
pub fn fmt_decimal(r: &Rational) -> String {
    format!("{:.6}", to_f64(r))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `p/q` or a bare integer.
pub fn parse_fraction(text: &str) -> Option<Rational> {
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<BigInt>().ok()?,
            q.trim().parse::<BigInt>().ok()?,
        ),
        None => (text.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!q.is_zero()).then(|| Rational::new(p, q))
}

/// The rational `k / 10^6` with `k = floor(x * 10^6)`, for positive finite `x`.
pub fn floor_micro(x: f64) -> Rational {
    ratio((x * 1e6).floor() as i64, 1_000_000)
}

/// `floor(base^(exp))` for `base >= 1` and a non-negative rational exponent.
///
/// Computed exactly: the answer is the largest integer `R` with
/// `R^q <= base^p` where `exp = p/q`.
pub fn floor_rational_power(base: &Rational, exp: &Rational) -> BigInt {
    assert!(base >= &Rational::one() && !exp.is_negative());
    let p = exp
        .numer()
        .to_u32()
        .expect("exponent numerator fits in u32");
    let q = exp
        .denom()
        .to_u32()
        .expect("exponent denominator fits in u32");
    let lhs_num = num::pow(base.numer().clone(), p as usize);
    let lhs_den = num::pow(base.denom().clone(), p as usize);
    // R^q * lhs_den <= lhs_num
    let fits = |r: &BigInt| num::pow(r.clone(), q as usize) * &lhs_den <= lhs_num;
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while fits(&hi) {
        lo = hi.clone();
        hi *= 2;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Smallest integer not below `r`.
pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}
