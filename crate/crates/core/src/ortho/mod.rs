//! Classical orthogonal polynomials built from their explicit finite sums,
//! plus the reversed-argument and imaginary-argument variants used by the
//! deformed systems.

use num_traits::{One, Zero};

use crate::algebra::{rat, GaussianRational, Poly, Rational};
use crate::error::{Error, Result};

/// Jacobi parameters (α, β); complex values are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    pub alpha: GaussianRational,
    pub beta: GaussianRational,
}

impl JacobiParams {
    pub fn new(alpha: GaussianRational, beta: GaussianRational) -> Self {
        Self { alpha, beta }
    }

    pub fn real(alpha: Rational, beta: Rational) -> Self {
        Self::new(alpha.into(), beta.into())
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * rat(k))
}

/// Generalized binomial C(a, k) = a(a−1)⋯(a−k+1)/k!.
pub fn binomial(a: &GaussianRational, k: usize) -> GaussianRational {
    let mut acc = GaussianRational::one();
    for j in 0..k {
        let num = a - &GaussianRational::real(rat(j as i64));
        acc = (&acc * &num).scale(&Rational::new(1.into(), (j as i64 + 1).into()));
    }
    acc
}

fn n_plus(n: usize, a: &GaussianRational) -> GaussianRational {
    a + &GaussianRational::real(rat(n as i64))
}

/// Hermite polynomial H_n, leading coefficient 2ⁿ.
pub fn hermite(n: usize) -> Poly {
    let nf = factorial(n);
    let mut c = vec![GaussianRational::zero(); n + 1];
    for m in 0..=n / 2 {
        let k = n - 2 * m;
        let mut v = &nf / &(factorial(m) * factorial(k));
        v *= Rational::from_integer(num_bigint::BigInt::from(2).pow(k as u32));
        if m % 2 == 1 {
            v = -v;
        }
        c[k] = GaussianRational::real(v);
    }
    Poly::from_coeffs(c)
}

/// Laguerre polynomial L_n^{(α)}.
pub fn laguerre(n: usize, alpha: &GaussianRational) -> Poly {
    let top = n_plus(n, alpha);
    let c = (0..=n)
        .map(|k| {
            let mut v = binomial(&top, n - k).scale(&factorial(k).recip());
            if k % 2 == 1 {
                v = -v;
            }
            v
        })
        .collect();
    Poly::from_coeffs(c)
}

/// Jacobi polynomial P_n^{(α,β)}. The degree may drop for special
/// parameters; the polynomial is returned as computed.
pub fn jacobi(n: usize, p: &JacobiParams) -> Poly {
    let half = Rational::new(1.into(), 2.into());
    let xm = Poly::linear(-half.clone(), half.clone());
    let xp = Poly::linear(half.clone(), half);
    let (ta, tb) = (n_plus(n, &p.alpha), n_plus(n, &p.beta));
    let mut acc = Poly::zero();
    for s in 0..=n {
        let c = &binomial(&ta, n - s) * &binomial(&tb, s);
        if c.is_zero() {
            continue;
        }
        let term = &xm.pow(s as u32) * &xp.pow((n - s) as u32);
        acc = &acc + &term.scale(&c);
    }
    acc
}

/// ηⁿ·L_n^{(α)}(c/η) as a polynomial in η.
pub fn reversed_laguerre(n: usize, alpha: &GaussianRational, c: &GaussianRational) -> Result<Poly> {
    if c.is_zero() {
        return Err(Error::ZeroScale);
    }
    let l = laguerre(n, alpha);
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    let mut cp = GaussianRational::one();
    for k in 0..=n {
        coeffs[n - k] = &l.coeff(k) * &cp;
        cp = &cp * c;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// i^{−v}·p(iη).
pub fn imaginary_twist(p: &Poly, v: usize) -> Poly {
    Poly::from_coeffs(
        p.coeffs().iter().enumerate().map(|(k, c)| c * &GaussianRational::i_pow(k as i64 - v as i64)).collect(),
    )
}
