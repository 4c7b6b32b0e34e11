//! Exact closed forms per system, on raw parameter slices. The public
//! wrappers in the parent module add range validation.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SystemId;
use crate::algebra::{floor_strict, rat, ratio, GaussianRational, Poly, Rational};
use crate::error::{Error, Result};
use crate::ortho::{hermite, imaginary_twist, jacobi, laguerre, reversed_laguerre, JacobiParams};

fn div(a: Rational, b: Rational) -> Result<Rational> {
    if b.is_zero() {
        Err(Error::NonGenericParameter(format!("division by zero in {a}/0")))
    } else {
        Ok(a / b)
    }
}

fn half() -> Rational {
    ratio(1, 2)
}

fn sq(r: &Rational) -> Rational {
    r * r
}

fn re(r: Rational) -> GaussianRational {
    GaussianRational::real(r)
}

/// The soliton polynomial cosh^n·P_n^{(h−n,h−n)}(tanh x) rewritten in
/// η = sinh x: tanhᵏ·coshⁿ = ηᵏ(1+η²)^{(n−k)/2}, and only k ≡ n (mod 2)
/// occurs.
fn soliton_poly(n: usize, h: &Rational) -> Poly {
    let a = h - rat(n as i64);
    let p = jacobi(n, &JacobiParams::real(a.clone(), a));
    let one_plus = Poly::from_ints(&[1, 0, 1]);
    let mut acc = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        debug_assert!((n - k).is_multiple_of(2));
        let term = &Poly::monomial(c.clone(), k) * &one_plus.pow(((n - k) / 2) as u32);
        acc = &acc + &term;
    }
    acc
}

impl SystemId {
    /// E_n(λ), any integer n.
    pub fn energy(self, n: i64, p: &[Rational]) -> Result<Rational> {
        use SystemId::*;
        let n = rat(n);
        Ok(match self {
            H => rat(2) * n,
            L => rat(4) * n,
            J => rat(4) * &n * (&n + &p[0] + &p[1]),
            C => {
                let (g, gn) = (&p[0], &p[0] + &n);
                div(rat(1), sq(g))? - div(rat(1), sq(&gn))?
            }
            K => {
                let (g, mu, gn) = (&p[0], &p[1], &p[0] + &n);
                sq(&gn) - sq(g) + div(sq(mu), sq(g))? - div(sq(mu), sq(&gn))?
            }
            M | S | Hst => sq(&p[0]) - sq(&(&p[0] - &n)),
            RM => {
                let (h, mu, hn) = (&p[0], &p[1], &p[0] - &n);
                sq(h) - sq(&hn) + div(sq(mu), sq(h))? - div(sq(mu), sq(&hn))?
            }
            Kh => {
                let (g, mu, gn) = (&p[0], &p[1], &p[0] + &n);
                sq(g) - sq(&gn) + div(sq(mu), sq(g))? - div(sq(mu), sq(&gn))?
            }
            HDPT => rat(4) * &n * (&p[1] - &p[0] - &n),
        })
    }

    /// f_n(λ) of the forward shift relation.
    pub fn f_coef(self, n: i64, p: &[Rational]) -> Result<Rational> {
        use SystemId::*;
        let n = rat(n);
        Ok(match self {
            H => rat(2) * n,
            L => rat(-2),
            J => rat(-2) * (&n + &p[0] + &p[1]),
            C => {
                let (g, gn) = (&p[0], &p[0] + &n);
                div(rat(-2), g * sq(&gn))?
            }
            K => {
                let (g, mu, gn) = (&p[0], &p[1], &p[0] + &n);
                div(sq(g) * sq(&gn) + sq(mu), g * sq(&gn))?
            }
            M => div(n - rat(2) * &p[0], rat(2) * &p[1])?,
            S => p[0].clone(),
            RM => {
                let (h, mu, hn) = (&p[0], &p[1], &p[0] - &n);
                div(sq(h) * sq(&hn) - sq(mu), h * sq(&hn))?
            }
            Hst => (n - rat(2) * &p[0]) * half(),
            Kh => {
                let (g, mu, gn) = (&p[0], &p[1], &p[0] + &n);
                div(sq(mu) - sq(g) * sq(&gn), g * sq(&gn))?
            }
            HDPT => rat(2) * (n + &p[0] - &p[1]),
        })
    }

    /// b_{n−1}(λ) of the backward shift relation, so that
    /// E_n = f_n·b_{n−1}.
    pub fn b_coef(self, n: i64, p: &[Rational]) -> Result<Rational> {
        use SystemId::*;
        let n = rat(n);
        Ok(match self {
            H => rat(1),
            L | J | HDPT | Hst => rat(-2) * n,
            C => div(-(&n * (rat(2) * &p[0] + &n)), rat(2) * &p[0])?,
            K | Kh => div(&n * (rat(2) * &p[0] + &n), p[0].clone())?,
            M => rat(-2) * n * &p[1],
            S | RM => div(&n * (rat(2) * &p[0] - &n), p[0].clone())?,
        })
    }

    /// Coefficient c̃_v(λ) in A(λ)φ̃_v(λ) = c̃_v(λ)·φ̃_{v+1}(λ+δ), namely
    /// −ε·b_v(−λ).
    pub fn c_tilde(self, v: i64, p: &[Rational]) -> Result<Rational> {
        let neg: Vec<Rational> = p.iter().map(|x| -x.clone()).collect();
        let eps = rat(self.descriptor().eps);
        Ok(-eps * self.b_coef(v + 1, &neg)?)
    }

    /// Coefficient in A(λ)†φ̃_{v+1}(λ+δ) = c̃′_v(λ)·φ̃_v(λ), namely
    /// −ε′·f_{v+1}(−λ).
    pub fn c_tilde_back(self, v: i64, p: &[Rational]) -> Result<Rational> {
        let neg: Vec<Rational> = p.iter().map(|x| -x.clone()).collect();
        let eps = rat(self.descriptor().eps_prime);
        Ok(-eps * self.f_coef(v + 1, &neg)?)
    }

    /// P_n(η;λ) without range validation.
    pub fn eigen_poly(self, n: usize, p: &[Rational]) -> Result<Poly> {
        use SystemId::*;
        let ni = rat(n as i64);
        let poly = match self {
            H => hermite(n),
            L => laguerre(n, &re(&p[0] - half())),
            J => jacobi(n, &JacobiParams::real(&p[0] - half(), &p[1] - half())),
            C => {
                let c = div(rat(2), &p[0] + &ni)?;
                reversed_laguerre(n, &re(rat(2) * &p[0] - rat(1)), &re(c))?
            }
            K => {
                let gn = &p[0] + &ni;
                let im = div(p[1].clone(), gn.clone())?;
                let a = GaussianRational::new(-gn.clone(), im.clone());
                let b = GaussianRational::new(-gn, -im);
                imaginary_twist(&jacobi(n, &JacobiParams::new(a, b)), n)
            }
            M => {
                let two_mu = rat(2) * &p[1];
                let c = re(two_mu.clone());
                let l = reversed_laguerre(n, &re(rat(2) * &p[0] - rat(2) * &ni), &c)?;
                l.scale_rat(&div(rat(1), two_mu)?.pow(n as i32))
            }
            S => soliton_poly(n, &p[0]),
            RM => {
                let hn = &p[0] - &ni;
                let s = div(p[1].clone(), hn.clone())?;
                jacobi(n, &JacobiParams::real(&hn + &s, &hn - &s))
            }
            Hst => {
                let a = -&p[0] - half();
                let alpha = GaussianRational::new(a.clone(), -p[1].clone());
                let beta = GaussianRational::new(a, p[1].clone());
                imaginary_twist(&jacobi(n, &JacobiParams::new(alpha, beta)), n)
            }
            Kh => {
                let gn = &p[0] + &ni;
                let s = div(p[1].clone(), gn.clone())?;
                jacobi(n, &JacobiParams::real(-&gn + &s, -&gn - &s))
            }
            HDPT => jacobi(n, &JacobiParams::real(&p[0] - half(), -&p[1] - half())),
        };
        if !poly.is_real() {
            return Err(Error::ComplexCoefficients);
        }
        Ok(poly)
    }

    /// ξ_v(η;λ) without range validation.
    pub fn pseudo_poly(self, v: usize, p: &[Rational]) -> Result<Poly> {
        match self {
            SystemId::H => Ok(imaginary_twist(&hermite(v), v)),
            SystemId::L => {
                let l = laguerre(v, &re(half() - &p[0]));
                Ok(l.compose(&Poly::from_ints(&[0, -1])))
            }
            _ => self.eigen_poly(v, &self.twist(p)),
        }
    }

    /// Validity of λ.
    pub fn param_range(self, p: &[Rational]) -> bool {
        use SystemId::*;
        let half = half();
        let zero = Rational::zero();
        match self {
            H => p.is_empty(),
            L | C => p[0] > half,
            J => p[0] > ratio(3, 2) && p[1] > ratio(3, 2),
            K => p[0] > ratio(3, 2) && p[1] > zero,
            M | Hst => p[0] > zero && p[1] > zero,
            S => p[0] > zero,
            RM => p[1] > zero && p[0] > zero && sq(&p[0]) > p[1],
            Kh => p[0] > half && p[1] > sq(&p[0]),
            HDPT => p[0] > half && p[1] > p[0],
        }
    }

    /// Greatest eigenstate index, `None` for an infinite spectrum.
    pub fn nmax(self, p: &[Rational]) -> Option<u64> {
        use SystemId::*;
        let to_u64 = |b: num_bigint::BigInt| b.to_i64().map(|v| v.max(0) as u64);
        match self {
            H | L | J | C | K => None,
            M | S | Hst => to_u64(floor_strict(&p[0])),
            HDPT => to_u64(floor_strict(&((&p[1] - &p[0]) * half()))),
            RM => {
                let (h, mu) = (&p[0], &p[1]);
                let mut n = 0u64;
                loop {
                    let hn = h - rat(n as i64 + 1);
                    if hn.is_positive() && sq(&hn) > *mu {
                        n += 1;
                    } else {
                        return Some(n);
                    }
                }
            }
            Kh => {
                let (g, mu) = (&p[0], &p[1]);
                let mut n = 0u64;
                while sq(&(g + rat(n as i64 + 1))) < *mu {
                    n += 1;
                }
                Some(n)
            }
        }
    }

    /// Whether ξ_v is a genuine pseudo virtual state for λ.
    pub fn pseudo_range(self, v: usize, p: &[Rational]) -> bool {
        use SystemId::*;
        let v = rat(v as i64);
        let one = Rational::one();
        match self {
            J => v < &p[0] + &p[1] - one,
            C => v < &p[0] - one,
            K => v < rat(2) * &p[0] - one,
            Kh => v < &p[0] - &one || v > &p[1] / &p[0] + &p[0] - one,
            _ => true,
        }
    }

    /// Closure polynomial q(η) = c_F⁻²·(dη/dx)², Group A only.
    pub fn closure_q(self) -> Option<Poly> {
        use SystemId::*;
        let quarter = ratio(1, 4);
        Some(match self {
            H => Poly::one(),
            L => Poly::x(),
            J => Poly::from_rationals([quarter.clone(), Rational::zero(), -quarter]),
            M => Poly::from_ints(&[0, 0, 1]),
            S | Hst => Poly::from_ints(&[1, 0, 1]),
            HDPT => Poly::from_rationals([-quarter.clone(), Rational::zero(), quarter]),
            C | K | RM | Kh => return None,
        })
    }
}
