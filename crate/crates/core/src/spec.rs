//! The five classical given-data cases.

use std::fmt;

use crate::angle::{Angle, SideLength};
use crate::error::{Error, Result};

/// Which three parts of a triangle are known.
///
/// Labels follow the usual convention: α sits at vertex A and faces side a,
/// and so on. Each variant fixes the labeling of its givens; callers holding
/// parts under a different labeling relabel before solving.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TriangleSpec {
    /// Two angles and the side between them.
    Asa { alpha: Angle, c: SideLength, beta: Angle },
    /// Two angles and the side facing the first of them.
    Aas { alpha: Angle, beta: Angle, a: SideLength },
    /// Two sides and the angle facing the first of them (the ambiguous case).
    Ssa { a: SideLength, b: SideLength, alpha: Angle },
    /// Two sides and the angle between them.
    Sas { a: SideLength, gamma: Angle, b: SideLength },
    /// All three sides.
    Sss { a: SideLength, b: SideLength, c: SideLength },
}

/// Discriminant of [`TriangleSpec`], handy for reports and dispatch tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecCase {
    Asa,
    Aas,
    Ssa,
    Sas,
    Sss,
}

impl SpecCase {
    pub const ALL: [SpecCase; 5] = [
        SpecCase::Asa,
        SpecCase::Aas,
        SpecCase::Ssa,
        SpecCase::Sas,
        SpecCase::Sss,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpecCase::Asa => "asa",
            SpecCase::Aas => "aas",
            SpecCase::Ssa => "ssa",
            SpecCase::Sas => "sas",
            SpecCase::Sss => "sss",
        }
    }
}

impl fmt::Display for SpecCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl TriangleSpec {
    pub fn asa(alpha: f64, c: f64, beta: f64) -> Result<Self> {
        Ok(TriangleSpec::Asa {
            alpha: Angle::interior(alpha)?,
            c: SideLength::new(c)?,
            beta: Angle::interior(beta)?,
        })
    }

    pub fn aas(alpha: f64, beta: f64, a: f64) -> Result<Self> {
        Ok(TriangleSpec::Aas {
            alpha: Angle::interior(alpha)?,
            beta: Angle::interior(beta)?,
            a: SideLength::new(a)?,
        })
    }

    pub fn ssa(a: f64, b: f64, alpha: f64) -> Result<Self> {
        Ok(TriangleSpec::Ssa {
            a: SideLength::new(a)?,
            b: SideLength::new(b)?,
            alpha: Angle::interior(alpha)?,
        })
    }

    pub fn sas(a: f64, gamma: f64, b: f64) -> Result<Self> {
        Ok(TriangleSpec::Sas {
            a: SideLength::new(a)?,
            gamma: Angle::interior(gamma)?,
            b: SideLength::new(b)?,
        })
    }

    pub fn sss(a: f64, b: f64, c: f64) -> Result<Self> {
        Ok(TriangleSpec::Sss {
            a: SideLength::new(a)?,
            b: SideLength::new(b)?,
            c: SideLength::new(c)?,
        })
    }

    pub fn case(&self) -> SpecCase {
        match self {
            TriangleSpec::Asa { .. } => SpecCase::Asa,
            TriangleSpec::Aas { .. } => SpecCase::Aas,
            TriangleSpec::Ssa { .. } => SpecCase::Ssa,
            TriangleSpec::Sas { .. } => SpecCase::Sas,
            TriangleSpec::Sss { .. } => SpecCase::Sss,
        }
    }

    /// Re-check the per-part invariants. The variants are plain data, so a
    /// spec assembled by hand from [`Angle::from_degrees`] may carry angles
    /// outside (0°, 180°).
    pub fn validate(&self) -> Result<()> {
        let (angles, sides): (&[Angle], &[SideLength]) = match self {
            TriangleSpec::Asa { alpha, c, beta } => (&[*alpha, *beta], &[*c]),
            TriangleSpec::Aas { alpha, beta, a } => (&[*alpha, *beta], &[*a]),
            TriangleSpec::Ssa { a, b, alpha } => (&[*alpha], &[*a, *b]),
            TriangleSpec::Sas { a, gamma, b } => (&[*gamma], &[*a, *b]),
            TriangleSpec::Sss { a, b, c } => (&[], &[*a, *b, *c]),
        };
        for angle in angles {
            if !angle.is_interior() {
                return Err(Error::AngleOutOfRange(angle.degrees()));
            }
        }
        for side in sides {
            SideLength::new(side.get())?;
        }
        Ok(())
    }
}
