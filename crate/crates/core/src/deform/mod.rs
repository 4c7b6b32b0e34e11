//! Deletion data and the polynomial factors of the Wronskians: Ξ_D on the
//! pseudo virtual side, Ξ̄_D on the eigenstate side, the numerator
//! polynomials P_{D,n} and the Krein-Adler admissibility test.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::algebra::{determinant, rat, wronskian, Poly, PolyMatrix, Rational};
use crate::error::{Error, Result};
use crate::systems::{Group, ParamVec, SystemId};

/// Ordered set of distinct nonnegative indices d₁,…,d_M. Order is kept
/// because it fixes the sign of every determinant built from the set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn new(v: Vec<u32>) -> Result<Self> {
        let mut s = v.clone();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndexSet(format!("repeated index in {v:?}")));
        }
        Ok(Self(v))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// {0, 1, …, n}; empty for negative `n`.
    pub fn upto(n: i64) -> Self {
        Self((0..=n.max(-1)).filter(|&k| k >= 0).map(|k| k as u32).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    pub fn contains(&self, d: u32) -> bool {
        self.0.contains(&d)
    }

    /// The set with entry `j` (0-based position) removed.
    pub fn without(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(j);
        Self(v)
    }

    /// D ∪ {m}, appended last.
    pub fn with(&self, m: u32) -> Result<Self> {
        let mut v = self.0.clone();
        v.push(m);
        Self::new(v)
    }

    /// Ascending copy.
    pub fn sorted(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable();
        Self(v)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// D̄ = {0,…,N} ∖ {N − d_j}, ascending.
pub fn bar_set(d: &IndexSet, n: i64) -> Result<IndexSet> {
    if let Some(m) = d.max() {
        if n < i64::from(m) {
            return Err(Error::NTooSmall { n, max: m });
        }
    }
    let removed: Vec<i64> = d.as_slice().iter().map(|&dj| n - i64::from(dj)).collect();
    Ok(IndexSet((0..=n).filter(|k| !removed.contains(k)).map(|k| k as u32).collect()))
}

/// ℓ_D = Σd_j − M(M−1)/2, the generic degree of Ξ_D and Ξ̄_D.
pub fn ell(d: &IndexSet) -> i64 {
    let m = d.len() as i64;
    d.as_slice().iter().map(|&x| i64::from(x)).sum::<i64>() - m * (m - 1) / 2
}

/// D₋ = {d_j − 1}.
pub fn d_minus(d: &IndexSet) -> Result<IndexSet> {
    if d.min() == Some(0) {
        return Err(Error::NegativeIndex);
    }
    Ok(IndexSet(d.as_slice().iter().map(|x| x - 1).collect()))
}

/// D₊ = {d_j + 1}.
pub fn d_plus(d: &IndexSet) -> IndexSet {
    IndexSet(d.as_slice().iter().map(|x| x + 1).collect())
}

/// (D₋, D₊).
pub fn shifted_sets(d: &IndexSet) -> Result<(IndexSet, IndexSet)> {
    Ok((d_minus(d)?, d_plus(d)))
}

/// Krein-Adler condition: Π_j(m − e_j) ≥ 0 for every m ≥ 0. Scanning up to
/// max(E)+1 suffices because the product is positive beyond max(E).
pub fn ka_condition(e: &[u32]) -> bool {
    let top = e.iter().copied().max().map_or(0, |m| i64::from(m) + 1);
    (0..=top).all(|m| {
        let neg = e.iter().filter(|&&ej| m < i64::from(ej)).count();
        let zero = e.iter().any(|&ej| m == i64::from(ej));
        zero || neg % 2 == 0
    })
}

/// A choice (system, λ, D, N) with the induced D̄ and λ̄ = λ − (N+1)δ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionSpec {
    pub system: SystemId,
    pub lambda: ParamVec,
    #[serde(rename = "D")]
    pub d: IndexSet,
    #[serde(rename = "N")]
    pub n: i64,
    #[serde(rename = "Dbar")]
    pub d_bar: IndexSet,
    pub lambda_bar: ParamVec,
}

impl DeletionSpec {
    /// λ must be in the system's validity range; λ̄ need not be, since the
    /// polynomial identities are algebraic.
    pub fn new(system: SystemId, lambda: ParamVec, d: IndexSet, n: i64) -> Result<Self> {
        if lambda.names() != system.descriptor().param_names {
            return Err(Error::InvalidParams(format!("parameter names do not match {system}")));
        }
        if !system.param_range(lambda.values()) {
            return Err(Error::InvalidParams(format!("{lambda} is outside the valid range of {system}")));
        }
        let d_bar = bar_set(&d, n)?;
        let lambda_bar = lambda.shifted(system.delta(), -(n + 1));
        Ok(Self { system, lambda, d, n, d_bar, lambda_bar })
    }

    pub fn m(&self) -> usize {
        self.d.len()
    }

    pub fn lambda_bar_valid(&self) -> bool {
        self.system.param_range(self.lambda_bar.values())
    }
}

fn nonzero(r: Rational, what: &str) -> Result<Rational> {
    if r.is_zero() {
        Err(Error::NonGenericParameter(format!("{what} vanishes")))
    } else {
        Ok(r)
    }
}

fn cf_power(id: SystemId, m: usize) -> Rational {
    let cf = rat(id.descriptor().c_f.expect("Group A"));
    let e = (m * m.saturating_sub(1) / 2) as i32;
    cf.pow(e)
}

/// Group B matrix Π_{i=0}^{j−2} f_{d_k−i}(μ+iδ)·P_{d_k−j+1}(η; μ+(j−1)δ),
/// whose determinant is Ξ̄_D(η; μ).
fn lowering_matrix(id: SystemId, mu: &[Rational], d: &IndexSet) -> Result<PolyMatrix> {
    let m = d.len();
    let mut rows = Vec::with_capacity(m);
    for j in 0..m {
        let lam_j = id.shift(mu, j as i64);
        let mut row = Vec::with_capacity(m);
        for &dk in d.as_slice() {
            let dk = i64::from(dk);
            if dk < j as i64 {
                row.push(Poly::zero());
                continue;
            }
            let mut c = rat(1);
            for i in 0..j as i64 {
                let f = id.f_coef(dk - i, &id.shift(mu, i))?;
                c *= nonzero(f, &format!("f_{}", dk - i))?;
            }
            row.push(id.eigen_poly((dk - j as i64) as usize, &lam_j)?.scale_rat(&c));
        }
        rows.push(row);
    }
    Ok(PolyMatrix::from_rows(rows))
}

/// Ξ̄_D(η;λ), the polynomial factor of W[φ_{d₁},…,φ_{d_M}](x;λ).
/// λ is not range-checked.
pub fn xi_bar_capital(id: SystemId, lambda: &[Rational], d: &IndexSet) -> Result<Poly> {
    match id.group() {
        Group::A => {
            let ps = d.as_slice().iter().map(|&k| id.eigen_poly(k as usize, lambda)).collect::<Result<Vec<_>>>()?;
            Ok(wronskian(&ps).scale_rat(&cf_power(id, d.len())))
        }
        Group::B => determinant(&lowering_matrix(id, lambda, d)?),
    }
}

/// Ξ_D(η;λ), the polynomial factor of W[φ̃_{d₁},…,φ̃_{d_M}](x;λ).
/// λ is not range-checked.
pub fn xi_capital(id: SystemId, lambda: &[Rational], d: &IndexSet) -> Result<Poly> {
    match id.group() {
        Group::A => {
            let ps = d.as_slice().iter().map(|&k| id.pseudo_poly(k as usize, lambda)).collect::<Result<Vec<_>>>()?;
            Ok(wronskian(&ps).scale_rat(&cf_power(id, d.len())))
        }
        // φ̃_v(λ) = φ_v(𝔱(λ)) with no extra factor, so the eigenstate
        // construction applies verbatim at the twisted parameters.
        Group::B => determinant(&lowering_matrix(id, &id.twist(lambda), d)?),
    }
}

/// Column of the raising construction for a pseudo virtual state:
/// rows r = 0..rows hold Π_{i<r} c̃_{d+i}(λ+iδ)·ξ_{d+r}(η;λ+rδ).
fn pseudo_column(id: SystemId, lambda: &[Rational], d: u32, rows: usize) -> Result<Vec<Poly>> {
    let mut out = Vec::with_capacity(rows);
    let mut c = rat(1);
    for r in 0..rows {
        let lam_r = id.shift(lambda, r as i64);
        out.push(id.pseudo_poly(d as usize + r, &lam_r)?.scale_rat(&c));
        if r + 1 == rows {
            break;
        }
        let ct = id.c_tilde(i64::from(d) + r as i64, &lam_r)?;
        c *= nonzero(ct, "pseudo shift coefficient")?;
    }
    Ok(out)
}

/// Column for the eigenstate φ_n: Π_{i<r} f_{n−i}(λ+iδ)·P_{n−r}(η;λ+rδ),
/// times q(η)^r for Group A.
fn eigen_column(id: SystemId, lambda: &[Rational], n: usize, rows: usize) -> Result<Vec<Poly>> {
    let q = id.closure_q();
    let mut out = Vec::with_capacity(rows);
    let mut c = rat(1);
    let mut qr = Poly::one();
    for r in 0..rows {
        if r > n {
            out.push(Poly::zero());
            continue;
        }
        let lam_r = id.shift(lambda, r as i64);
        let p = id.eigen_poly(n - r, &lam_r)?.scale_rat(&c);
        out.push(match &q {
            Some(_) => &p * &qr,
            None => p,
        });
        c *= id.f_coef((n - r) as i64, &lam_r)?;
        if let Some(q) = &q {
            qr = &qr * q;
        }
    }
    Ok(out)
}

/// The M×M pseudo block of the raising construction. Its determinant is
/// q^{M(M−1)/2}·Ξ_D for Group A and Ξ_D for Group B, which gives an
/// independent route to Ξ_D.
pub fn xi_capital_raising(id: SystemId, lambda: &[Rational], d: &IndexSet) -> Result<Poly> {
    let m = d.len();
    let cols = d.as_slice().iter().map(|&dk| pseudo_column(id, lambda, dk, m)).collect::<Result<Vec<_>>>()?;
    let mat = PolyMatrix::from_fn(m, m, |r, k| cols[k][r].clone());
    let det = determinant(&mat)?;
    match id.closure_q() {
        Some(q) => det.div_exact(&q.pow((m * m.saturating_sub(1) / 2) as u32)),
        None => Ok(det),
    }
}

/// P_{D,n}(η;λ), the polynomial factor of W[φ̃_{d₁},…,φ̃_{d_M},φ_n](x;λ).
/// Built as a mixed determinant with covariant-derivative rows. For Group A
/// the determinant carries q^{M(M−1)/2}, which is divided out exactly.
pub fn numerator_poly(id: SystemId, lambda: &[Rational], d: &IndexSet, n: usize) -> Result<Poly> {
    let m = d.len();
    let rows = m + 1;
    let mut cols = d.as_slice().iter().map(|&dk| pseudo_column(id, lambda, dk, rows)).collect::<Result<Vec<_>>>()?;
    cols.push(eigen_column(id, lambda, n, rows)?);
    let mat = PolyMatrix::from_fn(rows, rows, |r, k| cols[k][r].clone());
    let det = determinant(&mat)?;
    match id.closure_q() {
        Some(q) => det.div_exact(&q.pow((m * m.saturating_sub(1) / 2) as u32)),
        None => Ok(det),
    }
}

/// P̄_{D,m}(η;λ) = Ξ̄_{D∪{m}}(η;λ), the numerator on the eigenstate side.
pub fn p_bar(id: SystemId, lambda: &[Rational], d: &IndexSet, m: u32) -> Result<Poly> {
    xi_bar_capital(id, lambda, &d.with(m)?)
}

#[cfg(test)]
mod tests;
