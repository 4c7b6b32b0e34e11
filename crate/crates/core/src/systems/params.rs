use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::SystemId;
use crate::algebra::{parse_rational, rational_to_f64, Rational};
use crate::error::{Error, Result};

/// Named exact parameters λ of one system, in the system's declared order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamVec {
    names: &'static [&'static str],
    values: Vec<Rational>,
}

impl ParamVec {
    pub fn new(id: SystemId, values: Vec<Rational>) -> Result<Self> {
        let names = id.descriptor().param_names;
        if values.len() != names.len() {
            return Err(Error::InvalidParams(format!(
                "{} expects {} parameter(s) ({}), got {}",
                id,
                names.len(),
                names.join(","),
                values.len()
            )));
        }
        Ok(Self { names, values })
    }

    /// Parses `"g=9/2,h=3"`. `μ` and `mu` are accepted for the same name.
    pub fn parse(id: SystemId, s: &str) -> Result<Self> {
        let names = id.descriptor().param_names;
        let mut values: Vec<Option<Rational>> = vec![None; names.len()];
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("expected name=value, got `{part}`")))?;
            let k = match k.trim() {
                "μ" => "mu",
                other => other,
            };
            let idx = names
                .iter()
                .position(|n| *n == k)
                .ok_or_else(|| Error::InvalidParams(format!("{id} has no parameter `{k}`")))?;
            let r = parse_rational(v).ok_or_else(|| Error::InvalidParams(format!("`{v}` is not a rational number")))?;
            values[idx] = Some(r);
        }
        let values = values
            .into_iter()
            .zip(names)
            .map(|(v, n)| v.ok_or_else(|| Error::InvalidParams(format!("missing parameter `{n}` for {id}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { names, values })
    }

    pub(crate) fn from_raw(names: &'static [&'static str], values: Vec<Rational>) -> Self {
        Self { names, values }
    }

    pub fn names(&self) -> &'static [&'static str] {
        self.names
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.names.iter().position(|n| *n == name).map(|i| &self.values[i])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(rational_to_f64).collect()
    }

    /// Componentwise λ + k·δ.
    pub fn shifted(&self, delta: &[i64], k: i64) -> Self {
        let values = self
            .values
            .iter()
            .zip(delta)
            .map(|(v, &d)| if d == 0 || k == 0 { v.clone() } else { v + Rational::from_integer((d * k).into()) })
            .collect();
        Self { names: self.names, values }
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for ParamVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.names.iter().zip(&self.values).map(|(n, v)| format!("{n}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for ParamVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.names.len()))?;
        for (n, v) in self.names.iter().zip(&self.values) {
            m.serialize_entry(n, &v.to_string())?;
        }
        m.end()
    }
}
