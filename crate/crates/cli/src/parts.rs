//! Mapping user-labeled parts onto the solver's canonical specs.
//!
//! Users may give any two angles and a side, or any two sides and an angle;
//! the library specs fix which vertex each given belongs to. A [`Labeling`]
//! records how the canonical vertices A, B, C map onto the user's, so solved
//! triangles can be reported under the names the user supplied.

use std::fmt;

use mollweide::{Triangle, TriangleSpec};
use serde::Serialize;

use crate::error::CliError;

/// The `case` field of a record or the `--case` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Asa,
    Aas,
    Ssa,
    Sas,
    Sss,
    Verify,
}

impl Case {
    pub fn parse(name: &str) -> Result<Case, CliError> {
        match name.trim().to_ascii_lowercase().as_str() {
            "asa" => Ok(Case::Asa),
            "aas" => Ok(Case::Aas),
            "ssa" => Ok(Case::Ssa),
            "sas" => Ok(Case::Sas),
            "sss" => Ok(Case::Sss),
            "verify" => Ok(Case::Verify),
            other => Err(CliError::Input(format!("unknown case `{other}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Case::Asa => "asa",
            Case::Aas => "aas",
            Case::Ssa => "ssa",
            Case::Sas => "sas",
            Case::Sss => "sss",
            Case::Verify => "verify",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

const ANGLE_NAMES: [&str; 3] = ["alpha", "beta", "gamma"];
const SIDE_NAMES: [&str; 3] = ["a", "b", "c"];

/// Whatever subset of the six parts was supplied. Angles in degrees.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Parts {
    pub angles: [Option<f64>; 3],
    pub sides: [Option<f64>; 3],
}

/// `canonical[k]` is the user's vertex that plays canonical vertex k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Labeling {
    canonical: [usize; 3],
}

impl Labeling {
    fn new(first: usize, second: usize) -> Labeling {
        Labeling {
            canonical: [first, second, 3 - first - second],
        }
    }

    /// Rename a canonically labeled triangle back into the user's labels.
    pub fn restore(&self, t: &Triangle) -> Triangle {
        let (angles, sides) = (t.angles(), t.sides());
        let mut user_angles = angles;
        let mut user_sides = sides;
        for (k, &user) in self.canonical.iter().enumerate() {
            user_angles[user] = angles[k];
            user_sides[user] = sides[k];
        }
        Triangle::from_arrays(user_angles, user_sides)
            .expect("relabeling preserves triangle validity")
    }
}

impl Parts {
    fn given(values: &[Option<f64>; 3]) -> Vec<usize> {
        (0..3).filter(|&i| values[i].is_some()).collect()
    }

    fn describe(&self) -> String {
        let names: Vec<&str> = ANGLE_NAMES
            .iter()
            .zip(&self.angles)
            .chain(SIDE_NAMES.iter().zip(&self.sides))
            .filter(|(_, v)| v.is_some())
            .map(|(name, _)| *name)
            .collect();
        if names.is_empty() {
            "nothing".to_string()
        } else {
            names.join(", ")
        }
    }

    fn angle(&self, i: usize) -> f64 {
        self.angles[i].expect("checked by caller")
    }

    fn side(&self, i: usize) -> f64 {
        self.sides[i].expect("checked by caller")
    }

    /// Build the canonical spec for `case`, checking that exactly the parts
    /// the case needs were supplied.
    pub fn to_spec(&self, case: Case) -> Result<(TriangleSpec, Labeling), CliError> {
        let angles = Self::given(&self.angles);
        let sides = Self::given(&self.sides);
        let wrong = |need: &str| {
            CliError::Input(format!(
                "case {case} needs {need}, got {}",
                self.describe()
            ))
        };

        let result = match case {
            Case::Asa | Case::Aas => {
                let (&[i, j], &[s]) = (&angles[..], &sides[..]) else {
                    return Err(wrong("two angles and one side"));
                };
                if s == i || s == j {
                    // side faces the first angle: AAS with A at that vertex
                    let (first, second) = if s == i { (i, j) } else { (j, i) };
                    let spec = TriangleSpec::aas(
                        self.angle(first),
                        self.angle(second),
                        self.side(first),
                    )?;
                    (spec, Labeling::new(first, second))
                } else {
                    let spec = TriangleSpec::asa(self.angle(i), self.side(s), self.angle(j))?;
                    (spec, Labeling::new(i, j))
                }
            }
            Case::Ssa => {
                let (&[k], &[i, j]) = (&angles[..], &sides[..]) else {
                    return Err(wrong("two sides and the angle facing one of them"));
                };
                if k != i && k != j {
                    return Err(wrong("the angle facing one of the sides (use sas for the included angle)"));
                }
                let (first, second) = if k == i { (i, j) } else { (j, i) };
                let spec =
                    TriangleSpec::ssa(self.side(first), self.side(second), self.angle(first))?;
                (spec, Labeling::new(first, second))
            }
            Case::Sas => {
                let (&[k], &[i, j]) = (&angles[..], &sides[..]) else {
                    return Err(wrong("two sides and the included angle"));
                };
                if k == i || k == j {
                    return Err(wrong("the angle between the two sides (use ssa otherwise)"));
                }
                let spec = TriangleSpec::sas(self.side(i), self.angle(k), self.side(j))?;
                (spec, Labeling::new(i, j))
            }
            Case::Sss => {
                if !angles.is_empty() || sides.len() != 3 {
                    return Err(wrong("the three sides a, b, c and no angles"));
                }
                let spec = TriangleSpec::sss(self.side(0), self.side(1), self.side(2))?;
                (spec, Labeling::new(0, 1))
            }
            Case::Verify => return Err(wrong("a solving case, not verify")),
        };
        Ok(result)
    }

    /// All six parts as a triangle, for the verify case.
    pub fn to_triangle(&self) -> Result<Triangle, CliError> {
        if self.angles.iter().chain(&self.sides).any(Option::is_none) {
            return Err(CliError::Input(format!(
                "verify needs all six parts, got {}",
                self.describe()
            )));
        }
        let t = Triangle::from_parts(
            self.angle(0),
            self.angle(1),
            self.angle(2),
            self.side(0),
            self.side(1),
            self.side(2),
        )?;
        Ok(t)
    }
}
