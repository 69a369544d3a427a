//! Scalar newtypes for the six parts of a triangle.
//!
//! Angles are stored in degrees because every public boundary (constructors,
//! reports, the CLI) speaks degrees. Trigonometric evaluation goes through
//! [`Angle::radians`], which is the only place the unit conversion happens.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A planar angle, in degrees at the boundary and radians for evaluation.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub const RIGHT: Angle = Angle(90.0);
    pub const STRAIGHT: Angle = Angle(180.0);

    /// Any finite angle. Used for derived quantities such as half-angle
    /// differences, which may be zero or negative.
    pub fn from_degrees(degrees: f64) -> Result<Self> {
        if !degrees.is_finite() {
            return Err(Error::NonFinite {
                what: "angle",
                value: degrees,
            });
        }
        Ok(Angle(degrees))
    }

    /// An interior angle of a triangle: finite and strictly inside (0°, 180°).
    pub fn interior(degrees: f64) -> Result<Self> {
        let angle = Self::from_degrees(degrees)?;
        if degrees <= 0.0 || degrees >= 180.0 {
            return Err(Error::AngleOutOfRange(degrees));
        }
        Ok(angle)
    }

    pub fn from_radians(radians: f64) -> Result<Self> {
        Self::from_degrees(radians.to_degrees())
    }

    #[inline]
    pub fn degrees(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0.to_radians()
    }

    #[inline]
    pub fn is_interior(self) -> bool {
        self.0 > 0.0 && self.0 < 180.0
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{:.*}°", p, self.0),
            None => write!(f, "{}°", self.0),
        }
    }
}

/// A strictly positive, finite side length in any consistent unit.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SideLength(f64);

impl SideLength {
    pub fn new(length: f64) -> Result<Self> {
        if !length.is_finite() {
            return Err(Error::NonFinite {
                what: "side length",
                value: length,
            });
        }
        if length <= 0.0 {
            return Err(Error::NonPositiveSide(length));
        }
        Ok(SideLength(length))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl fmt::Display for SideLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{:.*}", p, self.0),
            None => write!(f, "{}", self.0),
        }
    }
}
