use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{KnotError, Result};

/// `ω = exp(iπ·p/q)` with `p/q` in lowest terms and `0 < p/q < 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitCirclePoint {
    p: u32,
    q: u32,
}

impl UnitCirclePoint {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(KnotError::BadAngle(format!("{p}/{q}")));
        }
        let g = p.gcd(&q);
        let (p, q) = (p / g, q / g);
        if p == 0 || p >= 2 * q {
            return Err(KnotError::BadAngle(format!("piAngle:{p}/{q} is not in (0, 2)")));
        }
        Ok(UnitCirclePoint { p, q })
    }

    /// `ω = −1`.
    pub fn minus_one() -> Self {
        UnitCirclePoint { p: 1, q: 1 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Order of the cyclotomic field containing ω, so that ω = ζ^p.
    pub fn field_order(&self) -> u32 {
        2 * self.q
    }

    pub fn conjugate(&self) -> Self {
        UnitCirclePoint { p: 2 * self.q - self.p, q: self.q }
    }

    /// Angle in units of π as a float, for display only.
    pub fn approx_angle(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl fmt::Display for UnitCirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "piAngle:{}/{}", self.p, self.q)
    }
}

impl FromStr for UnitCirclePoint {
    type Err = KnotError;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || KnotError::BadAngle(s.to_string());
        let body = s.trim().strip_prefix("piAngle:").ok_or_else(bad)?;
        let (p, q) = match body.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (body.trim(), "1"),
        };
        let p: u32 = p.parse().map_err(|_| bad())?;
        let q: u32 = q.parse().map_err(|_| bad())?;
        UnitCirclePoint::new(p, q)
    }
}

impl Serialize for UnitCirclePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for UnitCirclePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
