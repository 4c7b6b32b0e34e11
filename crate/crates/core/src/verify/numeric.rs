//! Floating-point checks. Logs of Wronskians are built as jets from the
//! factorization prefactor(x)·Ξ(η(x)), so every x-derivative used here is
//! analytic. Finite differences appear only in the Schrödinger residual,
//! where they serve as the independent oracle.

// Early exits hand back a finished `CheckResult` through `Err`.
#![allow(clippy::result_large_err)]

use crate::algebra::{rational_to_f64, Rational};
use crate::deform::{
    bar_set, d_minus, d_plus, numerator_poly, p_bar, xi_bar_capital, xi_capital, DeletionSpec, IndexSet,
};
use crate::error::{Error, Result};
use crate::numeric::{integrate_log, Jet, PolyEvaluator};
use crate::systems::{eta_jet, ln_norm, potential, pseudo_w_jet, shift_f64, w_jet, Group, SystemId};

use super::{expect_nodeless, CheckResult, GridSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Pseudo,
    Eigen,
}

/// ln|W| for the Wronskian of the pseudo virtual states φ̃_D(λ) or of the
/// eigenstates φ_D(λ), split as ln A + ln|Ξ(η)|.
#[derive(Clone, Debug)]
pub struct DeformedSide {
    id: SystemId,
    p: Vec<f64>,
    set: IndexSet,
    kind: Kind,
    xi: PolyEvaluator,
}

impl DeformedSide {
    /// Darboux-Crum side W[φ̃_D](x;λ).
    pub fn pseudo(id: SystemId, lambda: &[Rational], d: &IndexSet) -> Result<Self> {
        let xi = PolyEvaluator::new(&xi_capital(id, lambda, d)?)?;
        Ok(Self { id, p: to_f64(lambda), set: d.clone(), kind: Kind::Pseudo, xi })
    }

    /// Eigenstate side W[φ_D](x;λ).
    pub fn eigen(id: SystemId, lambda: &[Rational], d: &IndexSet) -> Result<Self> {
        let xi = PolyEvaluator::new(&xi_bar_capital(id, lambda, d)?)?;
        Ok(Self { id, p: to_f64(lambda), set: d.clone(), kind: Kind::Eigen, xi })
    }

    pub fn dc(spec: &DeletionSpec) -> Result<Self> {
        Self::pseudo(spec.system, spec.lambda.values(), &spec.d)
    }

    pub fn ka(spec: &DeletionSpec) -> Result<Self> {
        Self::eigen(spec.system, spec.lambda_bar.values(), &spec.d_bar)
    }

    /// ln A, the non-polynomial factor of the Wronskian.
    pub fn ln_prefactor(&self, x0: f64, order: usize) -> Jet {
        let (id, m) = (self.id, self.set.len());
        let x = Jet::variable(x0, order);
        let mut acc = Jet::constant(0.0, order);
        if m == 0 {
            return acc;
        }
        match id.group() {
            Group::A => {
                let w = match self.kind {
                    Kind::Pseudo => pseudo_w_jet(id, &self.p, 0, &x),
                    Kind::Eigen => w_jet(id, &self.p, &x),
                };
                acc = acc + w.scale(m as f64);
                if m > 1 {
                    acc = acc + ln_eta_prime(id, x0, order).scale((m * (m - 1) / 2) as f64);
                }
            }
            Group::B => {
                for &d in self.set.as_slice() {
                    acc = acc
                        + match self.kind {
                            Kind::Pseudo => pseudo_w_jet(id, &self.p, d as usize, &x),
                            Kind::Eigen => w_jet(id, &shift_f64(id, &self.p, d as i64), &x),
                        };
                }
            }
        }
        acc
    }

    /// ln|W(x)| as a jet.
    pub fn ln_wronskian(&self, x0: f64, order: usize) -> Jet {
        let eta = eta_jet(self.id, &Jet::variable(x0, order));
        self.ln_prefactor(x0, order) + self.xi.ln_abs_jet(&eta)
    }

    /// U(x;λ) − 2∂²ₓ ln|W|.
    pub fn potential(&self, x0: f64) -> f64 {
        potential(self.id, &self.p, x0) - 2.0 * self.ln_wronskian(x0, 2).deriv(2)
    }

    /// Sign of Ξ(η(x)); zero on an exact root.
    pub fn xi_sign(&self, x0: f64) -> f64 {
        self.xi.eval_log(eta_value(self.id, x0)).0
    }
}

fn to_f64(p: &[Rational]) -> Vec<f64> {
    p.iter().map(rational_to_f64).collect()
}

fn eta_value(id: SystemId, x0: f64) -> f64 {
    eta_jet(id, &Jet::variable(x0, 0)).value()
}

/// ln|c_F⁻¹·η′(x)|.
fn ln_eta_prime(id: SystemId, x0: f64, order: usize) -> Jet {
    let cf = id.descriptor().c_f.expect("Group A") as f64;
    let d = eta_jet(id, &Jet::variable(x0, order + 1)).derivative();
    d.ln_abs().add_scalar(-cf.abs().ln())
}

/// A function of the form φ₀(x;μ)·P(η)/Q(η), kept in log form.
struct LogRatio {
    id: SystemId,
    w_params: Vec<f64>,
    num: PolyEvaluator,
    den: PolyEvaluator,
}

impl LogRatio {
    /// (sign, ln|f|) jet.
    fn ln_jet(&self, x0: f64, order: usize) -> (f64, Jet) {
        let x = Jet::variable(x0, order);
        let eta = eta_jet(self.id, &x);
        let sign = self.num.eval_log(eta.value()).0 * self.den.eval_log(eta.value()).0;
        let l = w_jet(self.id, &self.w_params, &x) + self.num.ln_abs_jet(&eta) - self.den.ln_abs_jet(&eta);
        (sign, l)
    }

    fn ln_value(&self, x0: f64) -> (f64, f64) {
        let (s, j) = self.ln_jet(x0, 0);
        (s, j.value())
    }

    /// Sign changes of numerator or denominator on the sorted points.
    fn signs(&self, x0: f64) -> [f64; 2] {
        let eta = eta_value(self.id, x0);
        [self.num.eval_log(eta).0, self.den.eval_log(eta).0]
    }
}

/// Φ^DC_n(x) = W[φ̃_D, φ_n]/W[φ̃_D].
fn dc_state(id: SystemId, lambda: &[Rational], d: &IndexSet, n: usize) -> Result<LogRatio> {
    let p = to_f64(lambda);
    let m = d.len() as i64;
    let w_params = match id.group() {
        Group::A => shift_f64(id, &p, -m),
        Group::B => shift_f64(id, &p, n as i64),
    };
    Ok(LogRatio {
        id,
        w_params,
        num: PolyEvaluator::new(&numerator_poly(id, lambda, d, n)?)?,
        den: PolyEvaluator::new(&xi_capital(id, lambda, d)?)?,
    })
}

/// W[φ_D, φ₀]/W[φ_D], the ground state after deleting eigenstates D.
fn ka_ground(id: SystemId, lambda: &[Rational], d: &IndexSet) -> Result<LogRatio> {
    let p = to_f64(lambda);
    let w_params = match id.group() {
        Group::A => shift_f64(id, &p, d.len() as i64),
        Group::B => p,
    };
    Ok(LogRatio {
        id,
        w_params,
        num: PolyEvaluator::new(&p_bar(id, lambda, d, 0)?)?,
        den: PolyEvaluator::new(&xi_bar_capital(id, lambda, d)?)?,
    })
}

fn energy_f64(id: SystemId, n: i64, lambda: &[Rational]) -> Result<f64> {
    Ok(rational_to_f64(&id.energy(n, lambda)?))
}

fn grid_points(id: SystemId, grid: &GridSpec) -> Result<Vec<f64>> {
    grid.points(id.descriptor().x_domain)
}

/// Drops grid points next to a sign change (or exact zero) of any of the
/// sampled sign functions. Returns the kept points and the number dropped.
fn regular_points(points: &[f64], signs: impl Fn(f64) -> Vec<f64>) -> (Vec<f64>, usize) {
    let s: Vec<Vec<f64>> = points.iter().map(|&x| signs(x)).collect();
    let mut bad = vec![false; points.len()];
    for i in 0..points.len() {
        if s[i].contains(&0.0) {
            bad[i] = true;
        }
        if i + 1 < points.len() && s[i].iter().zip(&s[i + 1]).any(|(a, b)| a * b < 0.0) {
            bad[i] = true;
            bad[i + 1] = true;
        }
    }
    let kept: Vec<f64> = points.iter().zip(&bad).filter(|(_, &b)| !b).map(|(&x, _)| x).collect();
    let dropped = points.len() - kept.len();
    (kept, dropped)
}

/// Singularity bookkeeping shared by the numeric checks. With `nodeless`
/// true, any detected zero is a failure.
fn screen(
    name: &str,
    points: &[f64],
    gap: Option<&str>,
    signs: impl Fn(f64) -> Vec<f64>,
) -> std::result::Result<(Vec<f64>, String), CheckResult> {
    let (kept, dropped) = regular_points(points, signs);
    if dropped > 0 && gap.is_none() {
        return Err(CheckResult::fail(
            name,
            format!("configuration should be nodeless but {dropped} grid points sit next to a zero"),
        ));
    }
    if kept.is_empty() {
        return Err(CheckResult::skipped(name, "no regular grid points"));
    }
    let note = match gap {
        None => String::new(),
        Some(why) => format!("{why}; {dropped} points next to singularities excluded"),
    };
    Ok((kept, note))
}

const NOT_NODELESS: &str = "configuration is not covered by the nodelessness gate";

/// Why a configuration makes no nodelessness claim, or `None` if it does.
fn nodeless_gap(spec: &DeletionSpec) -> Option<&'static str> {
    if expect_nodeless(spec) {
        None
    } else if !crate::deform::ka_condition(spec.d_bar.as_slice()) {
        Some("ka_condition false")
    } else if !spec.lambda_bar_valid() {
        Some("lambda_bar invalid")
    } else {
        Some("index outside pseudo_range")
    }
}

fn require_valid(spec: &DeletionSpec) -> Result<()> {
    if spec.lambda_bar_valid() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("λ̄ = {} is outside the valid range of {}", spec.lambda_bar, spec.system)))
    }
}

/// Grid samples (x, U^DC − E_{−N−1}(λ), U^KA), skipping points next to
/// singularities.
pub fn deformed_potentials(spec: &DeletionSpec, grid: &GridSpec) -> Result<(Vec<[f64; 3]>, usize)> {
    let dc = DeformedSide::dc(spec)?;
    let ka = DeformedSide::ka(spec)?;
    let e = energy_f64(spec.system, -spec.n - 1, spec.lambda.values())?;
    let pts = grid_points(spec.system, grid)?;
    let (kept, dropped) = regular_points(&pts, |x| vec![dc.xi_sign(x), ka.xi_sign(x)]);
    let rows = kept.iter().map(|&x| [x, dc.potential(x) - e, ka.potential(x)]).collect();
    Ok((rows, dropped))
}

/// max |U^DC − E_{−N−1}(λ) − U^KA| / (1 + |U^KA|) over the grid.
pub fn check_potential_equivalence(spec: &DeletionSpec, grid: &GridSpec, tol: f64) -> Result<CheckResult> {
    require_valid(spec)?;
    let name = "potential_equivalence";
    let (dc, ka) = match (DeformedSide::dc(spec), DeformedSide::ka(spec)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Ok(CheckResult::from_error(name, &e)),
    };
    let e = energy_f64(spec.system, -spec.n - 1, spec.lambda.values())?;
    let pts = grid_points(spec.system, grid)?;
    let (kept, note) = match screen(name, &pts, nodeless_gap(spec), |x| vec![dc.xi_sign(x), ka.xi_sign(x)]) {
        Ok(v) => v,
        Err(r) => return Ok(r),
    };
    let mut worst = (0.0f64, f64::NAN);
    for &x in &kept {
        let (a, b) = (dc.potential(x) - e, ka.potential(x));
        let err = (a - b).abs() / (1.0 + b.abs());
        if err.is_nan() || err > worst.0 {
            worst = (err, x);
        }
    }
    let details = join(&note, &format!("{} points, worst at x={:.6}", kept.len(), worst.1));
    Ok(CheckResult::verdict(name, worst.0 <= tol).error(worst.0).details(details))
}

fn join(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_string(),
        (_, true) => a.to_string(),
        _ => format!("{a}; {b}"),
    }
}

fn check_n(spec: &DeletionSpec, n: usize) -> Result<()> {
    if let Some(nmax) = spec.system.nmax(spec.lambda.values()) {
        if n as u64 > nmax {
            return Err(Error::InvalidParams(format!("n = {n} exceeds n_max = {nmax}")));
        }
    }
    Ok(())
}

/// Five-point second difference.
fn second_difference(f: &impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h)
}

fn boundary_distance(id: SystemId, x: f64) -> f64 {
    let (a, b) = id.descriptor().x_domain.bounds();
    (x - a).min(b - x)
}

/// max over the grid of |−Φ″ + (U^DC − E_n)Φ| relative to the local scale
/// |Φ″| + (1 + |U^DC| + |E_n|)·max|Φ| on the stencil. Φ″ is a Richardson
/// extrapolation of five-point differences at h and h/2.
pub fn check_schrodinger_residual(spec: &DeletionSpec, n: usize, grid: &GridSpec, tol: f64) -> Result<CheckResult> {
    check_n(spec, n)?;
    let name = format!("schrodinger_residual[{n}]");
    let id = spec.system;
    if !expect_nodeless(spec) {
        return Ok(CheckResult::skipped(name, NOT_NODELESS));
    }
    let (state, dc) = match (dc_state(id, spec.lambda.values(), &spec.d, n), DeformedSide::dc(spec)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Ok(CheckResult::from_error(name, &e)),
    };
    let e = energy_f64(id, n as i64, spec.lambda.values())?;
    let pts = grid_points(id, grid)?;
    let (kept, _) = match screen(&name, &pts, None, |x| vec![dc.xi_sign(x)]) {
        Ok(v) => v,
        Err(r) => return Ok(r),
    };
    let mut worst = (0.0f64, f64::NAN);
    for &x in &kept {
        let h = 1e-2f64.min(boundary_distance(id, x) / 20.0);
        let offsets = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
        let logs: Vec<(f64, f64)> = offsets.iter().map(|k| state.ln_value(x + k * h)).collect();
        let scale = logs.iter().map(|l| l.1).filter(|l| l.is_finite()).fold(f64::NEG_INFINITY, f64::max);
        if !scale.is_finite() {
            continue;
        }
        let phi = |t: f64| {
            let (s, l) = state.ln_value(t);
            if l.is_finite() {
                s * (l - scale).exp()
            } else {
                0.0
            }
        };
        let d2 = (16.0 * second_difference(&phi, x, h / 2.0) - second_difference(&phi, x, h)) / 15.0;
        let u = dc.potential(x);
        let v0 = phi(x);
        let res = (-d2 + (u - e) * v0).abs();
        let err = res / (d2.abs() + 1.0 + u.abs() + e.abs());
        if err.is_nan() || err > worst.0 {
            worst = (err, x);
        }
    }
    Ok(CheckResult::verdict(name, worst.0 <= tol).error(worst.0).details(format!(
        "{} points, worst at x={:.6}",
        kept.len(),
        worst.1
    )))
}

/// (sign, ln|·|) of Π_j(E_n(λ) − E_{−d_j−1}(λ))·h_n(λ).
fn ln_norm_formula(spec: &DeletionSpec, n: usize) -> Result<(f64, f64)> {
    let id = spec.system;
    let lam = spec.lambda.values();
    let (mut s, mut l) = ln_norm(id, n, &spec.lambda.to_f64());
    let en = id.energy(n as i64, lam)?;
    for &d in spec.d.as_slice() {
        let f = rational_to_f64(&(&en - id.energy(-(d as i64) - 1, lam)?));
        s *= f.signum();
        l += f.abs().ln();
    }
    Ok((s, l))
}

/// Quadrature of ∫Φ^DC_m Φ^DC_n over the x-domain. Diagonals must match
/// the closed-form norm to `tol` relative; off-diagonals must be below
/// `tol·√(norm_m·norm_n)`.
pub fn check_orthogonality(spec: &DeletionSpec, n_list: &[usize], tol: f64) -> Result<CheckResult> {
    let name = "orthogonality";
    let id = spec.system;
    for &n in n_list {
        check_n(spec, n)?;
    }
    if !expect_nodeless(spec) {
        return Ok(CheckResult::skipped(name, NOT_NODELESS));
    }
    let states =
        match n_list.iter().map(|&n| dc_state(id, spec.lambda.values(), &spec.d, n)).collect::<Result<Vec<_>>>() {
            Ok(s) => s,
            Err(e) => return Ok(CheckResult::from_error(name, &e)),
        };
    let norms = n_list.iter().map(|&n| ln_norm_formula(spec, n)).collect::<Result<Vec<_>>>()?;
    let desc = id.descriptor();
    let bounds = desc.x_domain.bounds();
    let mut worst = 0.0f64;
    let mut details = Vec::new();
    for i in 0..states.len() {
        for j in i..states.len() {
            let f = |x: f64| {
                let (a, b) = (states[i].ln_value(x), states[j].ln_value(x));
                (a.0 * b.0, a.1 + b.1)
            };
            let (v, peak) = match integrate_log(f, bounds, desc.window, 1e-3 * tol, 1e-3 * tol) {
                Ok(r) => r,
                Err(e) => return Ok(CheckResult::fail(name, e.to_string())),
            };
            let err = if i == j {
                let (s, l) = norms[i];
                if v * s <= 0.0 {
                    f64::INFINITY
                } else {
                    ((v.abs().ln() + peak - l).exp() - 1.0).abs()
                }
            } else {
                let scale = 0.5 * (norms[i].1 + norms[j].1);
                v.abs() * (peak - scale).exp()
            };
            if i == j {
                details.push(format!("<{0},{0}>={1:.12e}", n_list[i], v * peak.exp()));
            }
            worst = worst.max(err);
        }
    }
    Ok(CheckResult::verdict(name, worst <= tol).error(worst).details(details.join(", ")))
}

/// U(x;λ) − 2∂²ₓ ln F − E_{−N−1}(λ) = U(x;λ̄) with F = A_{0..N}(λ), and
/// ln A_D(λ) − ln Ā_D̄(λ̄) − ln F constant in x for several D. Both are
/// identities in λ, so λ̄ need not be in the valid range.
pub fn check_f_identity(id: SystemId, lambda: &[Rational], n: i64, grid: &GridSpec, tol: f64) -> Result<CheckResult> {
    if n < 0 || !id.param_range(lambda) {
        return Err(Error::InvalidParams(format!("λ is outside the valid range of {id}")));
    }
    let lbar = id.shift(lambda, -(n + 1));
    let name = "F_identity";
    let pts = grid_points(id, grid)?;
    let full = IndexSet::upto(n);
    let f_side = DeformedSide::pseudo(id, lambda, &full)?;
    let e = energy_f64(id, -n - 1, lambda)?;
    let (p, pbar) = (to_f64(lambda), to_f64(&lbar));
    let mut worst = 0.0f64;
    for &x in &pts {
        let lf = f_side.ln_prefactor(x, 2);
        let ub = potential(id, &pbar, x);
        let err = (potential(id, &p, x) - 2.0 * lf.deriv(2) - e - ub).abs() / (1.0 + ub.abs());
        worst = worst.max(err);
    }
    let mut sets = vec![IndexSet::empty(), full.clone(), IndexSet::upto(0)];
    for extra in [vec![n as u32], vec![0, n as u32], vec![(n - 1).max(0) as u32, n as u32]] {
        if let Ok(s) = IndexSet::new(extra) {
            if !sets.contains(&s) {
                sets.push(s);
            }
        }
    }
    for d in &sets {
        let db = bar_set(d, n)?;
        let a = DeformedSide::pseudo(id, lambda, d)?;
        let ab = DeformedSide::eigen(id, &lbar, &db)?;
        let diff =
            |x: f64| a.ln_prefactor(x, 0).value() - ab.ln_prefactor(x, 0).value() - f_side.ln_prefactor(x, 0).value();
        let c0 = diff(pts[0]);
        for &x in &pts {
            let scale = 1.0 + f_side.ln_prefactor(x, 0).value().abs();
            worst = worst.max((diff(x) - c0).abs() / scale);
        }
    }
    Ok(CheckResult::verdict(name, worst <= tol).error(worst).details(format!(
        "{} index sets, {} points",
        sets.len(),
        pts.len()
    )))
}

/// Residual of f′² − f″ at λ against g′² + g″ at λ+δ plus E₁(λ).
fn riccati_error(lhs: &LogRatio, rhs: &LogRatio, e1: f64, x: f64) -> f64 {
    let (_, f) = lhs.ln_jet(x, 2);
    let (_, g) = rhs.ln_jet(x, 2);
    let l = f.deriv(1).powi(2) - f.deriv(2);
    let r = g.deriv(1).powi(2) + g.deriv(2) + e1;
    (l - r).abs() / (1.0 + r.abs())
}

/// Enlarged shape invariance of the deformed ground states:
/// f_D = ln|W[φ̃_D, φ₀]/W[φ̃_D]| pairs with f_{D₊} at λ+δ, and
/// f̄_D = ln|W[φ_D, φ₀]/W[φ_D]| pairs with f̄_{D₋} at λ+δ (min D ≥ 2).
pub fn check_enlarged_si(
    id: SystemId,
    lambda: &[Rational],
    d: &IndexSet,
    grid: &GridSpec,
    tol: f64,
) -> Result<CheckResult> {
    let lp = id.shift(lambda, 1);
    if !id.param_range(lambda) || !id.param_range(&lp) {
        return Err(Error::InvalidParams(format!("λ or λ+δ is outside the valid range of {id}")));
    }
    let name = "enlarged_si";
    let pts = grid_points(id, grid)?;
    let e1 = energy_f64(id, 1, lambda)?;
    let mut worst = 0.0f64;
    let mut notes = Vec::new();

    // Both relations are identities between meromorphic functions; points
    // next to a zero of any factor are excluded, not treated as failures.
    let mut run = |name: &str, f: LogRatio, g: LogRatio| -> std::result::Result<usize, CheckResult> {
        let (kept, dropped) = regular_points(&pts, |x| [f.signs(x), g.signs(x)].concat());
        if kept.is_empty() {
            return Err(CheckResult::skipped(name, "no regular grid points"));
        }
        for &x in &kept {
            worst = worst.max(riccati_error(&f, &g, e1, x));
        }
        Ok(dropped)
    };
    match dc_state(id, lambda, d, 0).and_then(|a| Ok((a, dc_state(id, &lp, &d_plus(d), 0)?))) {
        Ok((f, g)) => match run(name, f, g) {
            Ok(k) => notes.push(format!("f_D checked ({k} points near zeros excluded)")),
            Err(r) => return Ok(r),
        },
        Err(e) => return Ok(CheckResult::from_error(name, &e)),
    }
    if d.min().is_some_and(|m| m >= 2) {
        match ka_ground(id, lambda, d).and_then(|a| Ok((a, ka_ground(id, &lp, &d_minus(d)?)?))) {
            Ok((f, g)) => match run(name, f, g) {
                Ok(k) => notes.push(format!("fbar_D checked ({k} points near zeros excluded)")),
                Err(r) => return Ok(r),
            },
            Err(e) => return Ok(CheckResult::from_error(name, &e)),
        }
    } else {
        notes.push("fbar_D skipped (needs min D >= 2)".to_string());
    }
    Ok(CheckResult::verdict(name, worst <= tol).error(worst).details(notes.join("; ")))
}

/// Determinant by LU with partial pivoting, as (sign, ln|det|).
fn ln_det(mut a: Vec<Vec<f64>>) -> (f64, f64) {
    let n = a.len();
    let (mut sign, mut l) = (1.0, 0.0);
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs())).expect("nonempty");
        if a[p][k] == 0.0 {
            return (0.0, f64::NEG_INFINITY);
        }
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        let piv = a[k][k];
        sign *= piv.signum();
        l += piv.abs().ln();
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let r = row[k] / piv;
            for (x, p) in row[k..n].iter_mut().zip(&pivot_row[k..n]) {
                *x -= r * p;
            }
        }
    }
    (sign, l)
}

/// The x-space Wronskian of the pseudo virtual states, from their jets and
/// an LU determinant, against A_D(x)·Ξ_D(η(x)).
pub fn check_x_wronskian(spec: &DeletionSpec, grid: &GridSpec, tol: f64) -> Result<CheckResult> {
    let name = "x_wronskian";
    let id = spec.system;
    let m = spec.m();
    if m == 0 {
        return Ok(CheckResult::skipped(name, "empty D"));
    }
    let lam = spec.lambda.values();
    let p = spec.lambda.to_f64();
    let built = DeformedSide::dc(spec).and_then(|dc| {
        let xis = spec
            .d
            .as_slice()
            .iter()
            .map(|&v| PolyEvaluator::new(&id.pseudo_poly(v as usize, lam)?))
            .collect::<Result<Vec<_>>>()?;
        Ok((dc, xis))
    });
    let (dc, xis) = match built {
        Ok(v) => v,
        Err(e) => return Ok(CheckResult::from_error(name, &e)),
    };
    let pts = grid_points(id, grid)?;
    let (kept, note) = match screen(name, &pts, nodeless_gap(spec), |x| vec![dc.xi_sign(x)]) {
        Ok(v) => v,
        Err(r) => return Ok(r),
    };
    let order = m - 1;
    let mut worst = 0.0f64;
    let mut sign_mismatch = 0usize;
    for &x0 in &kept {
        let x = Jet::variable(x0, order);
        let eta = eta_jet(id, &x);
        let mut cols = Vec::with_capacity(m);
        let mut shift = 0.0;
        let mut col_sign = 1.0;
        for (&v, xi) in spec.d.as_slice().iter().zip(&xis) {
            let l = pseudo_w_jet(id, &p, v as usize, &x) + xi.ln_abs_jet(&eta);
            let s = xi.eval_log(eta.value()).0;
            shift += l.value();
            col_sign *= s;
            let e = l.centered().exp();
            cols.push((0..m).map(|r| e.deriv(r)).collect::<Vec<_>>());
        }
        let rows: Vec<Vec<f64>> = (0..m).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        let (s, l) = ln_det(rows);
        let direct = (s * col_sign, l + shift);
        let expected = (dc.xi_sign(x0), dc.ln_wronskian(x0, 0).value());
        if direct.0 != expected.0 {
            sign_mismatch += 1;
        }
        worst = worst.max(((direct.1 - expected.1).exp() - 1.0).abs());
    }
    if sign_mismatch > 0 {
        return Ok(CheckResult::fail(name, format!("sign differs at {sign_mismatch} points")).error(worst));
    }
    let details = join(&note, &format!("{} points", kept.len()));
    Ok(CheckResult::verdict(name, worst <= tol).error(worst).details(details))
}
