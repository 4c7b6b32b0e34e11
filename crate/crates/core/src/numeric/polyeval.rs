use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Jet;
use crate::algebra::Poly;
use crate::error::Result;

/// Evaluates a real polynomial at double-precision points with exact
/// integer arithmetic, so the only rounding happens when the final Taylor
/// coefficients are converted to doubles. Values are returned with a
/// separate log scale to avoid overflow.
#[derive(Clone, Debug)]
pub struct PolyEvaluator {
    coeffs: Vec<BigInt>,
    ln_denom: f64,
}

/// p(η₀ + δ) = e^{ln_scale}·Σ coeffs[j]·δʲ, with max |coeffs[j]| = 1.
#[derive(Clone, Debug)]
pub struct ScaledSeries {
    pub ln_scale: f64,
    pub coeffs: Vec<f64>,
}

fn ln_big(n: &BigInt) -> f64 {
    let bits = n.bits();
    let shift = bits.saturating_sub(64);
    let m = (n.abs() >> shift).to_f64().unwrap_or(f64::MAX);
    m.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Splits a finite double into (m, e) with x = m·2ᵉ.
fn decompose(x: f64) -> (BigInt, i64) {
    if x == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & 0xf_ffff_ffff_ffff;
    let (m, e) = if exp == 0 { (frac, -1074) } else { (frac | (1 << 52), exp - 1075) };
    let tz = m.trailing_zeros() as i64;
    (BigInt::from(sign) * BigInt::from(m >> tz), e + tz)
}

impl PolyEvaluator {
    /// Fails with `ComplexCoefficients` for non-real input.
    pub fn new(p: &Poly) -> Result<Self> {
        let rc = p.real_coeffs()?;
        let denom = rc.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = rc.iter().map(|c| c.numer() * (&denom / c.denom())).collect();
        Ok(Self { coeffs, ln_denom: ln_big(&denom) })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Taylor coefficients of p around `eta0` up to `order`.
    pub fn series(&self, eta0: f64, order: usize) -> ScaledSeries {
        let n = order + 1;
        if self.coeffs.is_empty() {
            return ScaledSeries { ln_scale: f64::NEG_INFINITY, coeffs: vec![0.0; n] };
        }
        let d = self.coeffs.len() - 1;
        let (mut m, mut e) = decompose(eta0);
        if e >= 0 {
            m <<= e as usize;
            e = 0;
        }
        let s = (-e) as usize;
        // Horner in t′ = (η − η₀)·2^s on truncated series:
        // acc ← acc·(m + t′) + c_k·2^{s(d−k)}.
        let mut acc = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            for j in (0..n).rev() {
                let mut v = &acc[j] * &m;
                if j > 0 {
                    v += &acc[j - 1];
                }
                acc[j] = v;
            }
            if !c.is_zero() {
                acc[0] += c << (s * (d - k));
            }
        }
        // δ-coefficient j is T_j·2^{s(j−d)}/denom.
        let ln2 = std::f64::consts::LN_2;
        let logs: Vec<Option<f64>> = acc
            .iter()
            .enumerate()
            .map(|(j, t)| (!t.is_zero()).then(|| ln_big(t) + (s as f64) * (j as f64 - d as f64) * ln2 - self.ln_denom))
            .collect();
        let Some(lmax) = logs.iter().flatten().copied().reduce(f64::max) else {
            return ScaledSeries { ln_scale: f64::NEG_INFINITY, coeffs: vec![0.0; n] };
        };
        let coeffs = acc
            .iter()
            .zip(&logs)
            .map(|(t, l)| match l {
                Some(l) => {
                    let sign = if t.is_negative() { -1.0 } else { 1.0 };
                    sign * (l - lmax).exp()
                }
                None => 0.0,
            })
            .collect();
        ScaledSeries { ln_scale: lmax, coeffs }
    }

    /// (sign, ln|p(η₀)|).
    pub fn eval_log(&self, eta0: f64) -> (f64, f64) {
        let s = self.series(eta0, 0);
        let v = s.coeffs[0];
        if v == 0.0 {
            (0.0, f64::NEG_INFINITY)
        } else {
            (v.signum(), s.ln_scale + v.abs().ln())
        }
    }

    /// p(η(x)) as (log scale, normalized jet) for a jet of η.
    pub fn compose(&self, eta: &Jet) -> (f64, Jet) {
        let s = self.series(eta.value(), eta.order());
        (s.ln_scale, eta.compose_series(&s.coeffs))
    }

    /// ln|p(η(x))| as a jet.
    pub fn ln_abs_jet(&self, eta: &Jet) -> Jet {
        let (scale, j) = self.compose(eta);
        j.ln_abs().add_scalar(scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Poly};

    #[test]
    fn matches_direct_evaluation() {
        let p = Poly::from_rationals([ratio(-3, 7), ratio(5, 2), ratio(0, 1), ratio(-1, 3)]);
        let ev = PolyEvaluator::new(&p).unwrap();
        for &x in &[0.0, 0.37, -2.5, 1e3, -1e-5] {
            let (sgn, l) = ev.eval_log(x);
            let direct = p.eval_f64(x);
            assert!((sgn * l.exp() - direct).abs() <= 1e-13 * direct.abs().max(1e-300));
        }
    }

    #[test]
    fn series_gives_derivatives() {
        let p = Poly::from_ints(&[1, -4, 0, 2]);
        let ev = PolyEvaluator::new(&p).unwrap();
        let s = ev.series(1.5, 3);
        let c: Vec<f64> = s.coeffs.iter().map(|v| v * s.ln_scale.exp()).collect();
        // p(1.5) = 1 − 6 + 6.75, p′ = −4 + 6x², p″/2 = 6x, p‴/6 = 2.
        let expect = [1.75, -4.0 + 13.5, 9.0, 2.0];
        for (a, b) in c.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn huge_arguments_stay_finite() {
        let p = Poly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let ev = PolyEvaluator::new(&p).unwrap();
        let (sgn, l) = ev.eval_log(1e200);
        assert_eq!(sgn, 1.0);
        assert!((l - 20.0 * 1e200f64.ln()).abs() < 1e-9);
    }
}
