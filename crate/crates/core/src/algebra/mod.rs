//! Exact arithmetic over ℚ(i): rationals, Gaussian rationals, dense
//! univariate polynomials, polynomial matrices and Sturm root counting.

mod gaussian;
mod matrix;
mod poly;
mod sturm;

pub use gaussian::GaussianRational;
pub use matrix::{determinant, PolyMatrix};
pub use poly::{derivative, proportional, wronskian, Degree, Poly};
pub use sturm::{real_root_count, sturm_sequence, ExtendedReal};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        Some(Rational::from_integer(s.parse().ok()?))
    }
}

/// Nearest double to an exact rational, robust against huge numerators
/// and denominators.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Shift both sides down to a representable range.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift_n = (nb - 60).max(0) as usize;
    let shift_d = (db - 60).max(0) as usize;
    let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

/// Exact rational value of a finite double.
pub fn f64_to_rational(x: f64) -> Rational {
    Rational::from_float(x).expect("finite double")
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True when `r` is an odd multiple of 1/2.
pub fn is_half_odd_integer(r: &Rational) -> bool {
    *r.denom() == BigInt::from(2)
}

/// Greatest integer strictly less than `r` (the `[a]'` bracket).
pub fn floor_strict(r: &Rational) -> BigInt {
    if is_integer(r) {
        r.to_integer() - 1
    } else {
        r.floor().to_integer()
    }
}

/// Absolute value helper kept here so callers need not import `Signed`.
pub fn rat_abs(r: &Rational) -> Rational {
    r.abs()
}
