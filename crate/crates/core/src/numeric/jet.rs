use std::ops::{Add, Div, Mul, Neg, Sub};

/// Truncated Taylor series c₀ + c₁t + … + c_K t^K of a function around a
/// point, with cₖ = f⁽ᵏ⁾/k!. Arithmetic and elementary functions propagate
/// derivatives exactly up to the truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    c: Vec<f64>,
}

impl Jet {
    pub fn constant(v: f64, order: usize) -> Self {
        let mut c = vec![0.0; order + 1];
        c[0] = v;
        Self { c }
    }

    /// The independent variable at `x`.
    pub fn variable(x: f64, order: usize) -> Self {
        let mut j = Self::constant(x, order);
        if order >= 1 {
            j.c[1] = 1.0;
        }
        j
    }

    pub fn from_coeffs(c: Vec<f64>) -> Self {
        assert!(!c.is_empty());
        Self { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// k-th derivative at the expansion point.
    pub fn deriv(&self, k: usize) -> f64 {
        let f: f64 = (1..=k).map(|i| i as f64).product();
        self.c.get(k).copied().unwrap_or(0.0) * f
    }

    /// Jet of f′, one order lower.
    pub fn derivative(&self) -> Self {
        if self.c.len() == 1 {
            return Self::constant(0.0, 0);
        }
        Self { c: (1..self.c.len()).map(|k| self.c[k] * k as f64).collect() }
    }

    /// Same series with the constant term removed.
    pub fn centered(&self) -> Self {
        let mut c = self.c.clone();
        c[0] = 0.0;
        Self { c }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { c: self.c.iter().map(|v| v * s).collect() }
    }

    pub fn add_scalar(&self, s: f64) -> Self {
        let mut c = self.c.clone();
        c[0] += s;
        Self { c }
    }

    fn zip(&self, o: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let n = self.c.len().min(o.c.len());
        Self { c: (0..n).map(|k| f(self.c[k], o.c[k])).collect() }
    }

    pub fn recip(&self) -> Self {
        Self::constant(1.0, self.order()) / self.clone()
    }

    pub fn exp(&self) -> Self {
        let n = self.c.len();
        let mut e = vec![0.0; n];
        e[0] = self.c[0].exp();
        for k in 1..n {
            let s: f64 = (1..=k).map(|j| j as f64 * self.c[j] * e[k - j]).sum();
            e[k] = s / k as f64;
        }
        Self { c: e }
    }

    /// ln|f|.
    pub fn ln_abs(&self) -> Self {
        let n = self.c.len();
        let a0 = self.c[0];
        let mut l = vec![0.0; n];
        l[0] = a0.abs().ln();
        for k in 1..n {
            let s: f64 = (1..k).map(|j| j as f64 * l[j] * self.c[k - j]).sum();
            l[k] = (k as f64 * self.c[k] - s) / (k as f64 * a0);
        }
        Self { c: l }
    }

    /// (sin f, cos f).
    pub fn sin_cos(&self) -> (Self, Self) {
        self.trig(-1.0, self.c[0].sin(), self.c[0].cos())
    }

    /// (sinh f, cosh f).
    pub fn sinh_cosh(&self) -> (Self, Self) {
        self.trig(1.0, self.c[0].sinh(), self.c[0].cosh())
    }

    // s′ = c·f′, c′ = sign·s·f′.
    fn trig(&self, sign: f64, s0: f64, c0: f64) -> (Self, Self) {
        let n = self.c.len();
        let (mut s, mut c) = (vec![0.0; n], vec![0.0; n]);
        s[0] = s0;
        c[0] = c0;
        for k in 1..n {
            let mut ss = 0.0;
            let mut cc = 0.0;
            for j in 1..=k {
                let a = j as f64 * self.c[j];
                ss += a * c[k - j];
                cc += a * s[k - j];
            }
            s[k] = ss / k as f64;
            c[k] = sign * cc / k as f64;
        }
        (Self { c: s }, Self { c })
    }

    // Solution of y′ = (1 − y²)·f′ with y(0) = y0: tanh f or coth f.
    fn riccati(&self, y0: f64) -> Self {
        let n = self.c.len();
        let mut y = vec![0.0; n];
        let mut s = vec![0.0; n];
        y[0] = y0;
        s[0] = 1.0 - y0 * y0;
        for k in 1..n {
            let acc: f64 = (1..=k).map(|j| j as f64 * self.c[j] * s[k - j]).sum();
            y[k] = acc / k as f64;
            let sq: f64 = (0..=k).map(|i| y[i] * y[k - i]).sum();
            s[k] = -sq;
        }
        Self { c: y }
    }

    pub fn tanh(&self) -> Self {
        self.riccati(self.c[0].tanh())
    }

    pub fn coth(&self) -> Self {
        self.riccati(1.0 / self.c[0].tanh())
    }

    // Integral of g·f′ with a given constant term.
    fn integrate_against(&self, g: &Self, c0: f64) -> Self {
        let n = self.c.len();
        let mut r = vec![0.0; n];
        r[0] = c0;
        for (k, rk) in r.iter_mut().enumerate().skip(1) {
            let acc: f64 = (1..=k).map(|j| j as f64 * self.c[j] * g.c[k - j]).sum();
            *rk = acc / k as f64;
        }
        Self { c: r }
    }

    /// ln cosh f, stable for large |f|.
    pub fn ln_cosh(&self) -> Self {
        let a = self.c[0].abs();
        let v = a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2;
        self.integrate_against(&self.tanh(), v)
    }

    /// ln|sinh f|, stable for large |f|.
    pub fn ln_abs_sinh(&self) -> Self {
        let a = self.c[0].abs();
        let v = a + (-(-2.0 * a).exp()).ln_1p() - std::f64::consts::LN_2;
        self.integrate_against(&self.coth(), v)
    }

    pub fn atan(&self) -> Self {
        let one_plus_sq = (self.clone() * self.clone()).add_scalar(1.0);
        let inv = one_plus_sq.recip();
        self.integrate_against(&inv, self.c[0].atan())
    }

    /// Σ sⱼ·(self − self₀)ʲ for a Taylor series `s` around self₀.
    pub fn compose_series(&self, s: &[f64]) -> Self {
        let d = self.centered();
        let mut acc = Self::constant(0.0, self.order());
        for &sj in s.iter().rev() {
            acc = (acc * d.clone()).add_scalar(sj);
        }
        acc
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        self.zip(&o, |a, b| a + b)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self.zip(&o, |a, b| a - b)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let n = self.c.len().min(o.c.len());
        let c = (0..n).map(|k| (0..=k).map(|j| self.c[j] * o.c[k - j]).sum()).collect();
        Jet { c }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        let n = self.c.len().min(o.c.len());
        let mut q = vec![0.0; n];
        for k in 0..n {
            let s: f64 = (1..=k).map(|j| o.c[j] * q[k - j]).sum();
            q[k] = (self.c[k] - s) / o.c[0];
        }
        Jet { c: q }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}
