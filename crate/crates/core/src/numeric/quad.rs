use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// One Gauss–Kronrod 7/15 panel: (Kronrod estimate, |K − G|).
fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Adaptive Gauss–Kronrod quadrature on a finite interval. Panels are
/// bisected until the summed error estimate is below
/// `max(abs_tol, rel_tol·|I|)`.
pub fn integrate(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<f64> {
    const MAX_PANELS: usize = 4000;
    let mut panels = vec![(a, b, gk15(&mut f, a, b))];
    loop {
        let total: f64 = panels.iter().map(|p| p.2 .0).sum();
        let err: f64 = panels.iter().map(|p| p.2 .1).sum();
        if !total.is_finite() {
            return Err(Error::QuadratureFailure("non-finite integrand".into()));
        }
        if err <= abs_tol.max(rel_tol * total.abs()) {
            return Ok(total);
        }
        if panels.len() >= MAX_PANELS {
            return Err(Error::QuadratureFailure(format!("no convergence: estimate {total:e}, error {err:e}")));
        }
        let (i, _) = panels.iter().enumerate().max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1)).expect("nonempty");
        let (lo, hi, _) = panels.swap_remove(i);
        let mid = 0.5 * (lo + hi);
        panels.push((lo, mid, gk15(&mut f, lo, mid)));
        panels.push((mid, hi, gk15(&mut f, mid, hi)));
    }
}

/// Integrates a function given as `(sign, ln|f|)` over `(a, b)`, where
/// either end may be infinite. Infinite ends are truncated where ln|f|
/// falls 80 below its running peak, searching outward from `window`.
/// Returns `(I·e^{−peak}, peak)` so that huge or tiny integrals stay
/// representable; `abs_tol` is in the scaled units.
pub fn integrate_log(
    f: impl Fn(f64) -> (f64, f64),
    (a, b): (f64, f64),
    window: (f64, f64),
    abs_tol: f64,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    const DROP: f64 = 80.0;
    let (wlo, whi) = (window.0.max(a), window.1.min(b));
    let mut peak = f64::NEG_INFINITY;
    for i in 1..400 {
        let x = wlo + (whi - wlo) * i as f64 / 400.0;
        let l = f(x).1;
        if l.is_finite() {
            peak = peak.max(l);
        }
    }
    if !peak.is_finite() {
        return Err(Error::QuadratureFailure("integrand vanishes on the window".into()));
    }
    let mut search = |start: f64, dir: f64| -> Result<f64> {
        let mut step = (whi - wlo).max(1.0) / 8.0;
        let mut x = start;
        let mut below = 0;
        for _ in 0..200 {
            let l = f(x).1;
            if l.is_finite() && l > peak {
                peak = l;
            }
            // Three consecutive low samples, so a node is not mistaken
            // for the tail.
            below = if l < peak - DROP { below + 1 } else { 0 };
            if below == 3 {
                return Ok(x);
            }
            x += dir * step;
            step *= 1.25;
        }
        Err(Error::QuadratureFailure("integrand does not decay".into()))
    };
    let lo = if a.is_finite() { a } else { search(wlo, -1.0)? };
    let hi = if b.is_finite() { b } else { search(whi, 1.0)? };
    let v = integrate(
        |x| {
            let (s, l) = f(x);
            if l.is_finite() {
                s * (l - peak).exp()
            } else {
                0.0
            }
        },
        lo,
        hi,
        abs_tol,
        rel_tol,
    )?;
    Ok((v, peak))
}
