//! The eleven shape-invariant systems: static descriptors, exact closed
//! forms (energies, shift coefficients, eigen- and pseudo-polynomials) and
//! double-precision evaluators for the potentials and prefactors.

mod closed;
mod functions;
mod params;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use functions::{eta_jet, ln_norm, potential, pseudo_w_jet, shift_f64, twist_f64, w_jet, XDomain};
pub use params::ParamVec;

use crate::algebra::{rat, Poly, Rational};
use crate::error::{Error, Result};

/// System identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    H,
    L,
    J,
    C,
    K,
    M,
    S,
    RM,
    Hst,
    Kh,
    HDPT,
}

/// Eigenfunction pattern: Group A keeps φ₀(x;λ) for all levels, Group B
/// uses φ₀(x;λ+nδ) for level n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Group {
    A,
    B,
}

/// How the twist 𝔱 acts on one parameter component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistRule {
    /// λᵢ ↦ c − λᵢ
    Reflect(i64),
    /// λᵢ ↦ λᵢ
    Keep,
    /// λᵢ ↦ −λᵢ
    Negate,
}

/// Endpoint of an η-domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    At(i64),
}

/// Static metadata of a system.
#[derive(Debug)]
pub struct SystemDescriptor {
    pub id: SystemId,
    pub name: &'static str,
    pub title: &'static str,
    pub group: Group,
    pub param_names: &'static [&'static str],
    pub delta: &'static [i64],
    pub twist: &'static [TwistRule],
    /// c_F for Group A.
    pub c_f: Option<i64>,
    pub eps: i64,
    pub eps_prime: i64,
    pub finite_spectrum: bool,
    pub x_domain: XDomain,
    pub eta_domain: (Bound, Bound),
    /// Default numeric window inside the x-domain.
    pub window: (f64, f64),
    /// Virtual-state twist types that exist for this system but are not
    /// constructed here.
    pub virtual_types: &'static [&'static str],
}

use Bound::*;
use TwistRule::*;

const PI: f64 = std::f64::consts::PI;

static DESCRIPTORS: [SystemDescriptor; 11] = [
    SystemDescriptor {
        id: SystemId::H,
        name: "H",
        title: "harmonic oscillator",
        group: Group::A,
        param_names: &[],
        delta: &[],
        twist: &[],
        c_f: Some(1),
        eps: -1,
        eps_prime: 1,
        finite_spectrum: false,
        x_domain: XDomain::Real,
        eta_domain: (NegInf, PosInf),
        window: (-6.0, 6.0),
        virtual_types: &[],
    },
    SystemDescriptor {
        id: SystemId::L,
        name: "L",
        title: "radial oscillator",
        group: Group::A,
        param_names: &["g"],
        delta: &[1],
        twist: &[Reflect(1)],
        c_f: Some(2),
        eps: 1,
        eps_prime: -1,
        finite_spectrum: false,
        x_domain: XDomain::HalfLine,
        eta_domain: (At(0), PosInf),
        window: (0.05, 6.0),
        virtual_types: &["I", "II"],
    },
    SystemDescriptor {
        id: SystemId::J,
        name: "J",
        title: "Darboux-Poschl-Teller",
        group: Group::A,
        param_names: &["g", "h"],
        delta: &[1, 1],
        twist: &[Reflect(1), Reflect(1)],
        c_f: Some(-4),
        eps: 1,
        eps_prime: 1,
        finite_spectrum: false,
        x_domain: XDomain::Interval(PI / 2.0),
        eta_domain: (At(-1), At(1)),
        window: (0.0, PI / 2.0),
        virtual_types: &["I", "II"],
    },
    SystemDescriptor {
        id: SystemId::C,
        name: "C",
        title: "Coulomb plus centrifugal barrier",
        group: Group::B,
        param_names: &["g"],
        delta: &[1],
        twist: &[Reflect(1)],
        c_f: None,
        eps: 1,
        eps_prime: 1,
        finite_spectrum: false,
        x_domain: XDomain::HalfLine,
        eta_domain: (At(0), PosInf),
        window: (0.05, 30.0),
        virtual_types: &["II"],
    },
    SystemDescriptor {
        id: SystemId::K,
        name: "K",
        title: "Kepler problem in spherical space",
        group: Group::B,
        param_names: &["g", "mu"],
        delta: &[1, 0],
        twist: &[Reflect(1), Keep],
        c_f: None,
        eps: 1,
        eps_prime: 1,
        finite_spectrum: false,
        x_domain: XDomain::Interval(PI),
        eta_domain: (NegInf, PosInf),
        window: (0.0, PI),
        virtual_types: &[],
    },
    SystemDescriptor {
        id: SystemId::M,
        name: "M",
        title: "Morse",
        group: Group::A,
        param_names: &["h", "mu"],
        delta: &[-1, 0],
        twist: &[Reflect(-1), Negate],
        c_f: Some(-1),
        eps: 1,
        eps_prime: 1,
        finite_spectrum: true,
        x_domain: XDomain::Real,
        eta_domain: (At(0), PosInf),
        window: (-6.0, 3.0),
        virtual_types: &[],
    },
    SystemDescriptor {
        id: SystemId::S,
        name: "s",
        title: "soliton",
        group: Group::A,
        param_names: &["h"],
        delta: &[-1],
        twist: &[Reflect(-1)],
        c_f: Some(1),
        eps: 1,
        eps_prime: 1,
        finite_spectrum: true,
        x_domain: XDomain::Real,
        eta_domain: (NegInf, PosInf),
        window: (-6.0, 6.0),
        virtual_types: &[],
    },
    SystemDescriptor {
        id: SystemId::RM,
        name: "RM",
        title: "Rosen-Morse",
        group: Group::B,
        param_names: &["h", "mu"],
        delta: &[-1, 0],
        twist: &[Reflect(-1), Keep],
        c_f: None,
        eps: 1,
        eps_prime: 1,
        finite_spectrum: true,
        x_domain: XDomain::Real,
        eta_domain: (At(-1), At(1)),
        window: (-6.0, 6.0),
        virtual_types: &[],
    },
    SystemDescriptor {
        id: SystemId::Hst,
        name: "hst",
        title: "hyperbolic symmetric top II",
        group: Group::A,
        param_names: &["h", "mu"],
        delta: &[-1, 0],
        twist: &[Reflect(-1), Negate],
        c_f: Some(1),
        eps: 1,
        eps_prime: 1,
        finite_spectrum: true,
        x_domain: XDomain::Real,
        eta_domain: (NegInf, PosInf),
        window: (-6.0, 6.0),
        virtual_types: &[],
    },
    SystemDescriptor {
        id: SystemId::Kh,
        name: "Kh",
        title: "Kepler problem in hyperbolic space",
        group: Group::B,
        param_names: &["g", "mu"],
        delta: &[1, 0],
        twist: &[Reflect(1), Keep],
        c_f: None,
        eps: 1,
        eps_prime: 1,
        finite_spectrum: true,
        x_domain: XDomain::HalfLine,
        eta_domain: (At(1), PosInf),
        window: (0.05, 10.0),
        virtual_types: &["II"],
    },
    SystemDescriptor {
        id: SystemId::HDPT,
        name: "hDPT",
        title: "hyperbolic Darboux-Poschl-Teller",
        group: Group::A,
        param_names: &["g", "h"],
        delta: &[1, -1],
        twist: &[Reflect(1), Reflect(-1)],
        c_f: Some(4),
        eps: 1,
        eps_prime: 1,
        finite_spectrum: true,
        x_domain: XDomain::HalfLine,
        eta_domain: (At(1), PosInf),
        window: (0.05, 6.0),
        virtual_types: &["I", "II"],
    },
];

impl SystemId {
    pub const ALL: [SystemId; 11] = [
        SystemId::H,
        SystemId::L,
        SystemId::J,
        SystemId::C,
        SystemId::K,
        SystemId::M,
        SystemId::S,
        SystemId::RM,
        SystemId::Hst,
        SystemId::Kh,
        SystemId::HDPT,
    ];

    pub fn descriptor(self) -> &'static SystemDescriptor {
        &DESCRIPTORS[self as usize]
    }

    pub fn name(self) -> &'static str {
        self.descriptor().name
    }

    pub fn group(self) -> Group {
        self.descriptor().group
    }

    pub fn delta(self) -> &'static [i64] {
        self.descriptor().delta
    }

    /// 𝔱(λ), applied componentwise.
    pub fn twist(self, p: &[Rational]) -> Vec<Rational> {
        self.descriptor()
            .twist
            .iter()
            .zip(p)
            .map(|(t, v)| match t {
                Reflect(c) => rat(*c) - v,
                Keep => v.clone(),
                Negate => -v.clone(),
            })
            .collect()
    }

    /// λ + k·δ.
    pub fn shift(self, p: &[Rational], k: i64) -> Vec<Rational> {
        p.iter().zip(self.delta()).map(|(v, &d)| v + rat(d * k)).collect()
    }

    pub fn params(self, values: Vec<Rational>) -> ParamVec {
        ParamVec::from_raw(self.descriptor().param_names, values)
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SystemId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .or_else(|| SystemId::ALL.into_iter().find(|id| id.name().eq_ignore_ascii_case(s)))
            .ok_or_else(|| Error::UnknownSystem(s.to_string()))
    }
}

impl Serialize for SystemId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Looks up a system by name.
pub fn descriptor(name: &str) -> Result<&'static SystemDescriptor> {
    Ok(name.parse::<SystemId>()?.descriptor())
}

fn ensure_valid(id: SystemId, p: &ParamVec) -> Result<()> {
    if p.names() != id.descriptor().param_names {
        return Err(Error::InvalidParams(format!("parameter names do not match {id}")));
    }
    if !id.param_range(p.values()) {
        return Err(Error::InvalidParams(format!("{p} is outside the valid range of {id}")));
    }
    Ok(())
}

/// E_n(λ) for any integer n.
pub fn energy(id: SystemId, n: i64, p: &ParamVec) -> Result<Rational> {
    ensure_valid(id, p)?;
    id.energy(n, p.values())
}

/// P_n(η;λ).
pub fn eigen_poly(id: SystemId, n: usize, p: &ParamVec) -> Result<Poly> {
    ensure_valid(id, p)?;
    id.eigen_poly(n, p.values())
}

/// ξ_v(η;λ).
pub fn pseudo_poly(id: SystemId, v: usize, p: &ParamVec) -> Result<Poly> {
    ensure_valid(id, p)?;
    id.pseudo_poly(v, p.values())
}

/// λ + k·δ.
pub fn shift_params(id: SystemId, p: &ParamVec, k: i64) -> ParamVec {
    p.shifted(id.delta(), k)
}

/// Greatest eigenstate index, or `None` for infinitely many states.
pub fn nmax(id: SystemId, p: &ParamVec) -> Result<Option<u64>> {
    ensure_valid(id, p)?;
    Ok(id.nmax(p.values()))
}
