use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{rational_to_f64, GaussianRational, PolyMatrix, Rational};
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial over ℚ(i), coefficients in ascending order.
/// The zero polynomial has no coefficients and the leading coefficient is
/// never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_rationals(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(GaussianRational::real).collect())
    }

    /// Convenience for tests and tables: integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_rationals(coeffs.iter().map(|&c| super::rat(c)))
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn constant_rat(c: Rational) -> Self {
        Self::constant(GaussianRational::real(c))
    }

    /// c·ηᵏ
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut v = vec![GaussianRational::zero(); k];
        v.push(c);
        Self::from_coeffs(v)
    }

    /// The identity polynomial η.
    pub fn x() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    /// a + bη with rational coefficients.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_rationals([a, b])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    /// Real coefficients, or `ComplexCoefficients` if any imaginary part is nonzero.
    pub fn real_coeffs(&self) -> Result<Vec<Rational>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_real() { Ok(c.re.clone()) } else { Err(Error::ComplexCoefficients) })
            .collect()
    }

    /// Real parts of the coefficients as doubles.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| rational_to_f64(&c.re)).collect()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// self(inner(η)) by Horner's rule.
    pub fn compose(&self, inner: &Poly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rational) -> GaussianRational {
        self.eval(&GaussianRational::real(x.clone()))
    }

    /// Horner evaluation of the real parts at a double.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rational_to_f64(&c.re))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_complex())
    }

    /// Euclidean division over ℚ(i). Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.leading().expect("division by the zero polynomial");
        let dn = d.coeffs.len() - 1;
        if self.coeffs.len() <= dn {
            return (Self::zero(), self.clone());
        }
        if dn == 0 {
            let inv = dl.inv();
            return (self.scale(&inv), Self::zero());
        }
        let inv = dl.inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![GaussianRational::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    r[k + j] -= &t;
                }
            }
            q[k] = c;
        }
        r.truncate(dn);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// Quotient of an exact division; `InexactDivision` if a remainder is left.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Monic greatest common divisor (Euclid over ℚ(i)).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => a.scale(&l.inv()),
            None => a,
        }
    }

    /// Coefficients as `"p/q"` strings (imaginary parts appended as `"a+bi"`).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Number of terms with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(v)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = self.coeffs.clone();
        v.resize(n, GaussianRational::zero());
        for (a, b) in v.iter_mut().zip(&o.coeffs) {
            *a -= b;
        }
        Poly::from_coeffs(v)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![GaussianRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += &(a * b);
                }
            }
        }
        Poly::from_coeffs(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = if c.is_real() { c.to_string() } else { format!("({c})") };
            let (sign, body) = match body.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", body),
            };
            if !first || sign == "-" {
                write!(f, "{sign}")?;
            }
            first = false;
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    if k == 1 {
                        write!(f, "η")?;
                    } else {
                        write!(f, "η^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// dp/dη.
pub fn derivative(p: &Poly) -> Poly {
    Poly::from_coeffs(p.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.scale(&super::rat(k as i64))).collect())
}

/// W[p₁,…,pₙ] as the determinant of the derivative matrix; W[] = 1.
pub fn wronskian(ps: &[Poly]) -> Poly {
    let n = ps.len();
    if n == 0 {
        return Poly::one();
    }
    let mut rows: Vec<Vec<Poly>> = vec![ps.to_vec()];
    for j in 1..n {
        let next = rows[j - 1].iter().map(derivative).collect();
        rows.push(next);
    }
    let m = PolyMatrix::from_rows(rows);
    super::determinant(&m).expect("square by construction")
}

/// Returns `c` with `p = c·q`. Both zero gives 1; a zero against a nonzero
/// polynomial, or a ratio that varies between coefficients, gives `None`.
pub fn proportional(p: &Poly, q: &Poly) -> Option<GaussianRational> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Some(GaussianRational::one()),
        (true, false) | (false, true) => return None,
        _ => {}
    }
    if p.coeffs.len() != q.coeffs.len() {
        return None;
    }
    let k0 = q.coeffs.iter().position(|c| !c.is_zero())?;
    let (p0, q0) = (&p.coeffs[k0], &q.coeffs[k0]);
    if p0.is_zero() {
        return None;
    }
    for (pi, qi) in p.coeffs.iter().zip(&q.coeffs) {
        if pi * q0 != p0 * qi {
            return None;
        }
    }
    Some(p0 / q0)
}
