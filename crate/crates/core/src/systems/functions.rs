//! Double-precision evaluators: sinusoidal coordinate, ground-state
//! exponents, potentials and normalization constants.

use num_complex::Complex64;

use super::{SystemId, TwistRule};
use crate::numeric::{gamma_sign, ln_gamma, ln_gamma_abs, Jet};

use std::f64::consts::{LN_2, PI};

/// Physical x-interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum XDomain {
    /// (−∞, ∞)
    Real,
    /// (0, ∞)
    HalfLine,
    /// (0, L)
    Interval(f64),
}

impl XDomain {
    pub fn bounds(self) -> (f64, f64) {
        match self {
            XDomain::Real => (f64::NEG_INFINITY, f64::INFINITY),
            XDomain::HalfLine => (0.0, f64::INFINITY),
            XDomain::Interval(l) => (0.0, l),
        }
    }

    pub fn contains(self, x: f64) -> bool {
        let (a, b) = self.bounds();
        x > a && x < b
    }
}

/// η(x) as a jet.
pub fn eta_jet(id: SystemId, x: &Jet) -> Jet {
    use SystemId::*;
    match id {
        H => x.clone(),
        L => x.clone() * x.clone(),
        J => x.scale(2.0).sin_cos().1,
        C => x.recip(),
        K => {
            let (s, c) = x.sin_cos();
            c / s
        }
        M => x.scale(-1.0).exp(),
        S | Hst => x.sinh_cosh().0,
        RM => x.tanh(),
        Kh => x.coth(),
        HDPT => x.scale(2.0).sinh_cosh().1,
    }
}

/// w(x;λ) = ln φ₀(x;λ) up to sign, as a jet. Also meaningful at twisted
/// and shifted parameters.
pub fn w_jet(id: SystemId, p: &[f64], x: &Jet) -> Jet {
    use SystemId::*;
    let sq = || x.clone() * x.clone();
    match id {
        H => sq().scale(-0.5),
        L => sq().scale(-0.5) + x.ln_abs().scale(p[0]),
        J => {
            let (s, c) = x.sin_cos();
            s.ln_abs().scale(p[0]) + c.ln_abs().scale(p[1])
        }
        C => x.ln_abs().scale(p[0]) - x.scale(1.0 / p[0]),
        K => x.sin_cos().0.ln_abs().scale(p[0]) - x.scale(p[1] / p[0]),
        M => x.scale(p[0]) - x.exp().scale(p[1]),
        S => x.ln_cosh().scale(-p[0]),
        RM => x.ln_cosh().scale(-p[0]) - x.scale(p[1] / p[0]),
        Hst => x.ln_cosh().scale(-p[0]) - x.sinh_cosh().0.atan().scale(p[1]),
        Kh => x.ln_abs_sinh().scale(p[0]) - x.scale(p[1] / p[0]),
        HDPT => x.ln_abs_sinh().scale(p[0]) - x.ln_cosh().scale(p[1]),
    }
}

/// 𝔱(λ) on doubles.
pub fn twist_f64(id: SystemId, p: &[f64]) -> Vec<f64> {
    id.descriptor()
        .twist
        .iter()
        .zip(p)
        .map(|(t, &v)| match t {
            TwistRule::Reflect(c) => *c as f64 - v,
            TwistRule::Keep => v,
            TwistRule::Negate => -v,
        })
        .collect()
}

/// λ + k·δ on doubles.
pub fn shift_f64(id: SystemId, p: &[f64], k: i64) -> Vec<f64> {
    p.iter().zip(id.delta()).map(|(v, &d)| v + (d * k) as f64).collect()
}

/// ln|φ̃_{0(v)}(x;λ)|, the prefactor of the pseudo virtual state ξ_v.
pub fn pseudo_w_jet(id: SystemId, p: &[f64], v: usize, x: &Jet) -> Jet {
    match id {
        SystemId::H => (x.clone() * x.clone()).scale(0.5),
        SystemId::L => (x.clone() * x.clone()).scale(0.5) + x.ln_abs().scale(1.0 - p[0]),
        _ => {
            let t = twist_f64(id, p);
            let t = match id.group() {
                super::Group::A => t,
                super::Group::B => shift_f64(id, &t, v as i64),
            };
            w_jet(id, &t, x)
        }
    }
}

/// U(x;λ) from its closed form.
pub fn potential(id: SystemId, p: &[f64], x: f64) -> f64 {
    use SystemId::*;
    match id {
        H => x * x - 1.0,
        L => {
            let g = p[0];
            x * x + g * (g - 1.0) / (x * x) - (1.0 + 2.0 * g)
        }
        J => {
            let (g, h) = (p[0], p[1]);
            let (s, c) = x.sin_cos();
            g * (g - 1.0) / (s * s) + h * (h - 1.0) / (c * c) - (g + h).powi(2)
        }
        C => {
            let g = p[0];
            g * (g - 1.0) / (x * x) - 2.0 / x + 1.0 / (g * g)
        }
        K => {
            let (g, mu) = (p[0], p[1]);
            let (s, c) = x.sin_cos();
            g * (g - 1.0) / (s * s) - 2.0 * mu * c / s + mu * mu / (g * g) - g * g
        }
        M => {
            let (h, mu) = (p[0], p[1]);
            let e = x.exp();
            mu * mu * e * e - mu * (2.0 * h + 1.0) * e + h * h
        }
        S => {
            let h = p[0];
            -h * (h + 1.0) / x.cosh().powi(2) + h * h
        }
        RM => {
            let (h, mu) = (p[0], p[1]);
            -h * (h + 1.0) / x.cosh().powi(2) + 2.0 * mu * x.tanh() + h * h + mu * mu / (h * h)
        }
        Hst => {
            let (h, mu) = (p[0], p[1]);
            (-h * (h + 1.0) + mu * mu + mu * (2.0 * h + 1.0) * x.sinh()) / x.cosh().powi(2) + h * h
        }
        Kh => {
            let (g, mu) = (p[0], p[1]);
            g * (g - 1.0) / x.sinh().powi(2) - 2.0 * mu / x.tanh() + g * g + mu * mu / (g * g)
        }
        HDPT => {
            let (g, h) = (p[0], p[1]);
            g * (g - 1.0) / x.sinh().powi(2) - h * (h + 1.0) / x.cosh().powi(2) + (h - g).powi(2)
        }
    }
}

/// Signed logarithm accumulator for products of gammas and powers.
#[derive(Clone, Copy, Debug)]
struct SignedLog {
    sign: f64,
    ln: f64,
}

impl SignedLog {
    fn one() -> Self {
        Self { sign: 1.0, ln: 0.0 }
    }

    fn mul(mut self, v: f64) -> Self {
        self.sign *= v.signum();
        self.ln += v.abs().ln();
        self
    }

    fn div(mut self, v: f64) -> Self {
        self.sign *= v.signum();
        self.ln -= v.abs().ln();
        self
    }

    fn mul_ln(mut self, l: f64) -> Self {
        self.ln += l;
        self
    }

    fn mul_gamma(self, x: f64) -> Self {
        let mut s = self.mul_ln(ln_gamma_abs(x));
        s.sign *= gamma_sign(x);
        s
    }

    fn div_gamma(self, x: f64) -> Self {
        let mut s = self.mul_ln(-ln_gamma_abs(x));
        s.sign *= gamma_sign(x);
        s
    }

    /// Divides by |Γ(a + ib)|².
    fn div_gamma_abs2(self, a: f64, b: f64) -> Self {
        self.mul_ln(-2.0 * ln_gamma(Complex64::new(a, b)).re)
    }
}

/// h_n(λ) = ∫φ_n² dx as (sign, ln|h_n|).
pub fn ln_norm(id: SystemId, n: usize, p: &[f64]) -> (f64, f64) {
    use SystemId::*;
    let nf = n as f64;
    let acc = SignedLog::one().div_gamma(nf + 1.0);
    let r = match id {
        H => acc.mul_gamma(nf + 1.0).mul_gamma(nf + 1.0).mul_ln(nf * LN_2 + 0.5 * PI.ln()),
        L => acc.mul_gamma(nf + p[0] + 0.5).div(2.0),
        J => {
            let (g, h) = (p[0], p[1]);
            acc.mul_gamma(nf + g + 0.5).mul_gamma(nf + h + 0.5).div(2.0 * (2.0 * nf + g + h)).div_gamma(nf + g + h)
        }
        C => {
            let gn = p[0] + nf;
            acc.mul_ln((2.0 * p[0] + 2.0) * (gn / 2.0).ln()).mul(4.0).mul_gamma(2.0 * p[0] + nf)
        }
        K => {
            let (g, mu) = (p[0], p[1]);
            let gn = g + nf;
            acc.mul_ln(-PI * mu / gn + (1.0 - 2.0 * gn) * LN_2)
                .mul(PI * gn)
                .mul_gamma(2.0 * g + nf)
                .div(gn * gn + (mu / gn).powi(2))
                .div_gamma_abs2(g, mu / gn)
        }
        M => {
            let (h, mu) = (p[0], p[1]);
            acc.mul_gamma(2.0 * h - nf + 1.0).mul_ln(-2.0 * h * (2.0 * mu).ln()).div(2.0 * (h - nf))
        }
        S => {
            let h = p[0];
            acc.mul_ln((2.0 * h - 2.0 * nf) * LN_2)
                .mul_gamma(h + 1.0)
                .mul_gamma(h + 1.0)
                .div(h - nf)
                .div_gamma(2.0 * h - nf + 1.0)
        }
        RM => {
            let (h, mu) = (p[0], p[1]);
            let hn = h - nf;
            let s = mu / hn;
            acc.mul_ln((2.0 * h - 2.0 * nf) * LN_2)
                .mul(hn)
                .mul_gamma(h + s + 1.0)
                .mul_gamma(h - s + 1.0)
                .div(hn * hn - s * s)
                .div_gamma(2.0 * h - nf + 1.0)
        }
        Hst => {
            let (h, mu) = (p[0], p[1]);
            acc.mul(PI)
                .mul_gamma(2.0 * h - nf + 1.0)
                .mul_ln(-2.0 * h * LN_2)
                .div(h - nf)
                .div_gamma_abs2(h - nf + 0.5, mu)
        }
        Kh => {
            let (g, mu) = (p[0], p[1]);
            let gn = g + nf;
            let s = mu / gn;
            acc.mul(gn)
                .mul_gamma(1.0 - g + s)
                .mul_gamma(2.0 * g + nf)
                .mul_ln(-(2.0 * g + 2.0 * nf) * LN_2)
                .div(s * s - gn * gn)
                .div_gamma(g + s)
        }
        HDPT => {
            let (g, h) = (p[0], p[1]);
            acc.mul_gamma(nf + g + 0.5)
                .mul_gamma(h - g - nf + 1.0)
                .div(2.0 * (h - g - 2.0 * nf))
                .div_gamma(h - nf + 0.5)
        }
    };
    (r.sign, r.ln)
}
