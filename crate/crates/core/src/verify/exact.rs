//! Exact checks. Every comparison is in rational arithmetic; two
//! polynomials agree when one is a nonzero constant multiple of the other.

use crate::algebra::{proportional, rat, real_root_count, ExtendedReal, Poly, Rational};
use crate::deform::{
    d_minus, d_plus, ell, ka_condition, numerator_poly, p_bar, xi_bar_capital, xi_capital, DeletionSpec, IndexSet,
};
use crate::error::{Error, Result};
use crate::systems::{Bound, SystemId};

use super::CheckResult;

fn degree(p: &Poly) -> String {
    p.degree().finite().map_or_else(|| "-inf".to_string(), |d| d.to_string())
}

/// Records whether `lhs = c·rhs` for a nonzero c. Both sides vanishing
/// identically is treated as a non-generic point and skipped.
fn compare(name: &str, lhs: Result<Poly>, rhs: Result<Poly>) -> CheckResult {
    let (lhs, rhs) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return CheckResult::from_error(name, &e),
    };
    if lhs.is_zero() && rhs.is_zero() {
        return CheckResult::skipped(name, "both sides vanish identically");
    }
    let degs = format!("deg {} vs {}", degree(&lhs), degree(&rhs));
    match proportional(&lhs, &rhs) {
        Some(c) => CheckResult::pass(name).constant(c).details(degs),
        None => CheckResult::fail(name, format!("not proportional ({degs})")),
    }
}

/// Ξ_D(η;λ) ∝ Ξ̄_D̄(η;λ̄).
pub fn check_identity(spec: &DeletionSpec) -> CheckResult {
    let id = spec.system;
    let lhs = xi_capital(id, spec.lambda.values(), &spec.d);
    let rhs = xi_bar_capital(id, spec.lambda_bar.values(), &spec.d_bar);
    let expected = ell(&spec.d) as usize;
    let dropped = |p: &Result<Poly>| p.as_ref().is_ok_and(|p| p.degree().finite() != Some(expected));
    let drop = dropped(&lhs) || dropped(&rhs);
    let mut r = compare("identity", lhs, rhs);
    if drop {
        if r.is_fail() {
            // A degree collapse on one side signals non-generic parameters.
            return CheckResult::skipped("identity", format!("non-generic parameters: {}", r.details));
        }
        r.details = format!("{}; degree drop from {expected}", r.details);
    }
    r
}

/// P_{D,n}(η;λ) ∝ P̄_{D̄,N+1+n}(η;λ̄).
pub fn check_numerator_identity(spec: &DeletionSpec, n: usize) -> CheckResult {
    let id = spec.system;
    let m = spec.n as u32 + 1 + n as u32;
    let lhs = numerator_poly(id, spec.lambda.values(), &spec.d, n);
    let rhs = p_bar(id, spec.lambda_bar.values(), &spec.d_bar, m);
    compare(&format!("numerator[{n}]"), lhs, rhs)
}

/// Ξ_{D∖{d_j}}(η;λ) ∝ P̄_{D̄,N−d_j}(η;λ̄), with j counted from 1.
pub fn check_deleted_identity(spec: &DeletionSpec, j: usize) -> Result<CheckResult> {
    if j == 0 || j > spec.m() {
        return Err(Error::InvalidParams(format!("j = {j} is outside 1..={}", spec.m())));
    }
    let id = spec.system;
    let dj = spec.d.as_slice()[j - 1];
    let lhs = xi_capital(id, spec.lambda.values(), &spec.d.without(j - 1));
    let rhs = p_bar(id, spec.lambda_bar.values(), &spec.d_bar, spec.n as u32 - dj);
    Ok(compare(&format!("deleted[{j}]"), lhs, rhs))
}

/// P̄_{D,0}(η;λ) ∝ Ξ̄_{D₋}(η;λ+δ). Needs min(D) ≥ 1.
pub fn check_shift_down(id: SystemId, lambda: &[Rational], d: &IndexSet) -> Result<CheckResult> {
    let dm = d_minus(d)?;
    let lhs = p_bar(id, lambda, d, 0);
    let rhs = xi_bar_capital(id, &id.shift(lambda, 1), &dm);
    Ok(compare("shift_down", lhs, rhs))
}

/// P_{D,0}(η;λ) ∝ Ξ_{D₊}(η;λ+δ).
pub fn check_shift_up(id: SystemId, lambda: &[Rational], d: &IndexSet) -> CheckResult {
    let lhs = numerator_poly(id, lambda, d, 0);
    let rhs = xi_capital(id, &id.shift(lambda, 1), &d_plus(d));
    compare("shift_up", lhs, rhs)
}

/// Ξ̄_{0..N}(η;λ) is a nonzero constant.
pub fn check_xi_const(id: SystemId, lambda: &[Rational], n: i64) -> CheckResult {
    let name = "xi_const";
    match xi_bar_capital(id, lambda, &IndexSet::upto(n)) {
        Err(e) => CheckResult::from_error(name, &e),
        Ok(p) => match p.degree().finite() {
            Some(0) => CheckResult::pass(name).constant(p.coeff(0)),
            _ => CheckResult::fail(name, format!("degree {}", degree(&p))),
        },
    }
}

/// E_n(λ) − E_{−N−1}(λ) = E_{N+1+n}(λ̄) and
/// E_{−v−1}(λ) − E_{−N−1}(λ) = E_{N−v}(λ̄). These are rational identities,
/// so only λ is range-checked.
pub fn check_energy_formulas(
    id: SystemId,
    lambda: &[Rational],
    n: i64,
    n_range: std::ops::RangeInclusive<i64>,
    v_range: std::ops::RangeInclusive<i64>,
) -> Result<CheckResult> {
    if n < 0 || !id.param_range(lambda) {
        return Err(Error::InvalidParams(format!("λ is outside the valid range of {id}")));
    }
    let lbar = id.shift(lambda, -(n + 1));
    let name = "energy_formulas";
    let run = || -> Result<Option<String>> {
        let base = id.energy(-n - 1, lambda)?;
        for k in n_range.clone() {
            if id.energy(k, lambda)? - &base != id.energy(n + 1 + k, &lbar)? {
                return Ok(Some(format!("eigen level n={k}")));
            }
        }
        for v in v_range.clone() {
            if id.energy(-v - 1, lambda)? - &base != id.energy(n - v, &lbar)? {
                return Ok(Some(format!("pseudo level v={v}")));
            }
        }
        Ok(None)
    };
    Ok(match run() {
        Err(e) => CheckResult::from_error(name, &e),
        Ok(None) => CheckResult::pass(name),
        Ok(Some(what)) => CheckResult::fail(name, format!("mismatch at {what}")),
    })
}

fn eta_interval(id: SystemId) -> (ExtendedReal, ExtendedReal) {
    let conv = |b: Bound| match b {
        Bound::NegInf => ExtendedReal::NegInfinity,
        Bound::PosInf => ExtendedReal::PosInfinity,
        Bound::At(k) => ExtendedReal::Finite(rat(k)),
    };
    let (lo, hi) = id.descriptor().eta_domain;
    (conv(lo), conv(hi))
}

fn roots_in_domain(id: SystemId, p: &Poly) -> Result<usize> {
    let (lo, hi) = eta_interval(id);
    real_root_count(p, &lo, &hi)
}

/// Whether the configuration falls under the nodelessness statement:
/// ka_condition(D̄) holds, every index is in pseudo_range and λ̄ is valid,
/// so the eigenstates deleted on the Krein-Adler side are genuine.
pub fn expect_nodeless(spec: &DeletionSpec) -> bool {
    let lam = spec.lambda.values();
    ka_condition(spec.d_bar.as_slice())
        && spec.lambda_bar_valid()
        && spec.d.as_slice().iter().all(|&d| spec.system.pseudo_range(d as usize, lam))
}

/// Nodelessness gate. For configurations covered by [`expect_nodeless`],
/// Ξ_D(λ) and Ξ̄_D̄(λ̄) have no zeros in the η-domain. When ka_condition
/// fails for a single odd index, Ξ_D must have a zero.
pub fn check_ka_gate(spec: &DeletionSpec) -> CheckResult {
    let name = "ka_gate";
    let id = spec.system;
    let lam = spec.lambda.values();
    let ka = ka_condition(spec.d_bar.as_slice());
    let in_range = spec.d.as_slice().iter().all(|&d| id.pseudo_range(d as usize, lam));
    let run = || -> Result<CheckResult> {
        let xi = xi_capital(id, lam, &spec.d)?;
        if !in_range {
            return Ok(CheckResult::skipped(name, "an index lies outside pseudo_range"));
        }
        if !spec.lambda_bar_valid() {
            return Ok(CheckResult::skipped(name, "lambda_bar is outside the valid range"));
        }
        let roots = roots_in_domain(id, &xi)?;
        if ka {
            if roots != 0 {
                return Ok(CheckResult::fail(name, format!("ka_condition holds but Xi_D has {roots} zeros")));
            }
            let xb = xi_bar_capital(id, spec.lambda_bar.values(), &spec.d_bar)?;
            let rb = roots_in_domain(id, &xb)?;
            if rb != 0 {
                return Ok(CheckResult::fail(name, format!("ka_condition holds but Xibar has {rb} zeros")));
            }
            Ok(CheckResult::pass(name).details("Xi_D and Xibar nodeless"))
        } else if spec.m() == 1 {
            Ok(CheckResult::verdict(name, roots >= 1)
                .details(format!("ka_condition false; Xi_D has {roots} zeros in the eta-domain")))
        } else {
            Ok(CheckResult::skipped(name, format!("ka_condition false; Xi_D has {roots} zeros")))
        }
    };
    run().unwrap_or_else(|e| CheckResult::from_error(name, &e))
}

/// Single index: Ξ_{v} is nodeless in the η-domain iff v is even.
/// Returns `None` when v is outside pseudo_range or when the equivalent
/// eigenstate deletion (N = v) has λ̄ outside the valid range.
pub fn nodeless_parity(id: SystemId, lambda: &[Rational], v: u32) -> Option<CheckResult> {
    if !id.pseudo_range(v as usize, lambda) || !id.param_range(&id.shift(lambda, -(i64::from(v) + 1))) {
        return None;
    }
    let name = format!("nodeless_parity[{v}]");
    let d = IndexSet::new(vec![v]).expect("single index");
    let res = xi_capital(id, lambda, &d).and_then(|xi| roots_in_domain(id, &xi));
    Some(match res {
        Err(e) => CheckResult::from_error(name, &e),
        Ok(roots) => {
            let ok = (roots == 0) == v.is_multiple_of(2);
            CheckResult::verdict(name, ok).details(format!("{roots} zeros"))
        }
    })
}
