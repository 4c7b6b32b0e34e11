//! Check suites: exact polynomial identities, numeric potential and
//! eigenfunction equivalence, spectra, norms and the Krein-Adler gate.

mod exact;
mod numeric;
mod sampler;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use exact::{
    check_deleted_identity, check_energy_formulas, check_identity, check_ka_gate, check_numerator_identity,
    check_shift_down, check_shift_up, check_xi_const, expect_nodeless, nodeless_parity,
};
pub use numeric::{
    check_enlarged_si, check_f_identity, check_orthogonality, check_potential_equivalence, check_schrodinger_residual,
    check_x_wronskian, deformed_potentials, DeformedSide,
};
pub use sampler::{sample_exact, sample_nodeless, sample_params, trial_rng, SamplerConfig};

use crate::algebra::GaussianRational;
use crate::deform::DeletionSpec;
use crate::error::{Error, Result};
use crate::systems::{SystemId, XDomain};

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

/// One check's record.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub max_abs_error: Option<f64>,
    pub proportionality_constant: Option<GaussianRational>,
    pub details: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, status: Status) -> Self {
        Self { name: name.into(), status, max_abs_error: None, proportionality_constant: None, details: String::new() }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Self::new(name, Status::Pass)
    }

    pub fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        Self::new(name, Status::Fail).details(details)
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(name, Status::Skipped(reason.into()))
    }

    /// Pass or fail by a predicate.
    pub fn verdict(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn details(mut self, d: impl Into<String>) -> Self {
        self.details = d.into();
        self
    }

    pub fn error(mut self, e: f64) -> Self {
        self.max_abs_error = Some(e);
        self
    }

    pub fn constant(mut self, c: GaussianRational) -> Self {
        self.proportionality_constant = Some(c);
        self
    }

    /// Maps construction errors: non-generic parameters skip the check,
    /// everything else fails it.
    pub fn from_error(name: impl Into<String>, e: &Error) -> Self {
        match e {
            Error::NonGenericParameter(_) => Self::skipped(name, e.to_string()),
            _ => Self::fail(name, e.to_string()),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped(_))
    }
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckResult", 6)?;
        st.serialize_field("name", &self.name)?;
        let (status, reason) = match &self.status {
            Status::Pass => ("pass", None),
            Status::Fail => ("fail", None),
            Status::Skipped(r) => ("skipped", Some(r.as_str())),
        };
        st.serialize_field("status", status)?;
        st.serialize_field("reason", &reason)?;
        st.serialize_field("max_abs_error", &self.max_abs_error)?;
        st.serialize_field("proportionality_constant", &self.proportionality_constant.as_ref().map(|c| c.to_string()))?;
        st.serialize_field("details", &self.details)?;
        st.end()
    }
}

/// Pass/fail/skip counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Self::default();
        for r in results {
            s.add(r);
        }
        s
    }

    pub fn add(&mut self, r: &CheckResult) {
        match r.status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped(_) => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, o: Summary) {
        self.pass += o.pass;
        self.fail += o.fail;
        self.skipped += o.skipped;
    }
}

/// All checks run for one deletion spec.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub spec: DeletionSpec,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    /// Seconds; excluded from the determinism contract.
    pub wall_time: f64,
}

impl VerificationReport {
    /// Result names must be unique; a repeated name gets a `#k` suffix.
    pub fn new(spec: DeletionSpec, mut results: Vec<CheckResult>, wall_time: f64) -> Self {
        let mut seen = std::collections::HashMap::<String, usize>::new();
        for r in &mut results {
            let k = seen.entry(r.name.clone()).or_insert(0);
            *k += 1;
            if *k > 1 {
                r.name = format!("{}#{}", r.name, k);
            }
        }
        let summary = Summary::of(&results);
        Self { spec, results, summary, wall_time }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// Sample points for numeric checks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub spacing: Spacing,
    /// Fraction of the interval excluded next to a finite domain endpoint.
    pub margin: f64,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi || count == 0 {
            return Err(Error::InvalidParams(format!("bad grid {lo}:{hi}:{count}")));
        }
        Ok(Self { lo, hi, count, spacing: Spacing::Linear, margin: 1e-3 })
    }

    /// The system's default window.
    pub fn default_for(id: SystemId, count: usize) -> Self {
        let (lo, hi) = id.descriptor().window;
        Self { lo, hi, count, spacing: Spacing::Linear, margin: 1e-3 }
    }

    /// Parses `lo:hi:count`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::InvalidParams(format!("grid must be lo:hi:count, got `{s}`"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        Self::new(lo, hi, count)
    }

    /// Points clipped strictly inside the x-domain. Finite endpoints of
    /// the domain keep a margin of `margin·(hi−lo)`.
    pub fn points(&self, domain: XDomain) -> Result<Vec<f64>> {
        let (a, b) = domain.bounds();
        let pad = self.margin * (self.hi - self.lo);
        let lo = if a.is_finite() { self.lo.max(a + pad) } else { self.lo };
        let hi = if b.is_finite() { self.hi.min(b - pad) } else { self.hi };
        if lo >= hi {
            return Err(Error::InvalidParams(format!("grid {}:{} lies outside the domain", self.lo, self.hi)));
        }
        if self.count == 1 {
            return Ok(vec![0.5 * (lo + hi)]);
        }
        let t = |i: usize| i as f64 / (self.count - 1) as f64;
        Ok(match self.spacing {
            Spacing::Linear => (0..self.count).map(|i| lo + (hi - lo) * t(i)).collect(),
            Spacing::Log => {
                if lo <= 0.0 {
                    return Err(Error::InvalidParams("log spacing needs a positive grid".into()));
                }
                let (l0, l1) = (lo.ln(), hi.ln());
                (0..self.count).map(|i| (l0 + (l1 - l0) * t(i)).exp()).collect()
            }
        })
    }
}

#[cfg(test)]
mod tests;
