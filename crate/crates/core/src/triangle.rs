//! The validated six-part triangle and its cyclic relabelings.

use serde::{Serialize, Serializer};

use crate::angle::{Angle, SideLength};
use crate::error::{Error, Result};

/// Largest deviation of α + β + γ from 180° accepted at construction.
///
/// Construction checks that the parts describe *a* triangle; whether they
/// agree to working precision is the verifier's job. The slack admits parts
/// typed in at two decimals and deliberately perturbed inputs.
pub const ANGLE_SUM_TOLERANCE_DEG: f64 = 0.1;

/// Largest relative spread of the three side/sine ratios accepted at
/// construction.
pub const SINES_RATIO_TOLERANCE: f64 = 1e-2;

/// One of the three cyclic relabelings (α, β, γ, a, b, c) → (β, γ, α, b, c, a).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rotation(u8);

impl Rotation {
    pub const IDENTITY: Rotation = Rotation(0);
    pub const ALL: [Rotation; 3] = [Rotation(0), Rotation(1), Rotation(2)];

    pub fn new(index: usize) -> Result<Self> {
        if index > 2 {
            return Err(Error::InvalidRotation(index));
        }
        Ok(Rotation(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Relabel a vertex-indexed triple: slot `i` of the result holds the part
    /// that sits `index` places further along the cycle.
    #[inline]
    pub fn apply<T: Copy>(self, parts: [T; 3]) -> [T; 3] {
        let k = self.index();
        [parts[k % 3], parts[(k + 1) % 3], parts[(k + 2) % 3]]
    }
}

/// The six parts of a valid triangle.
///
/// Vertex `A` carries angle α and faces side `a`, and likewise for `B`/β/`b`
/// and `C`/γ/`c`. A value of this type always satisfies:
///
/// * every angle lies in (0°, 180°) and every side is positive,
/// * α + β + γ = 180° within [`ANGLE_SUM_TOLERANCE_DEG`],
/// * a/sin α, b/sin β and c/sin γ agree within [`SINES_RATIO_TOLERANCE`],
/// * the strict triangle inequality holds,
/// * a longer side never faces a smaller angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    angles: [Angle; 3],
    sides: [SideLength; 3],
}

impl Triangle {
    pub fn new(
        alpha: Angle,
        beta: Angle,
        gamma: Angle,
        a: SideLength,
        b: SideLength,
        c: SideLength,
    ) -> Result<Self> {
        Self::from_arrays([alpha, beta, gamma], [a, b, c])
    }

    /// Build from raw degrees and lengths, validating every part.
    pub fn from_parts(alpha: f64, beta: f64, gamma: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(
            Angle::interior(alpha)?,
            Angle::interior(beta)?,
            Angle::interior(gamma)?,
            SideLength::new(a)?,
            SideLength::new(b)?,
            SideLength::new(c)?,
        )
    }

    /// Build from vertex-indexed arrays `[α, β, γ]` and `[a, b, c]`.
    pub fn from_arrays(angles: [Angle; 3], sides: [SideLength; 3]) -> Result<Self> {
        for angle in angles {
            if !angle.is_interior() {
                return Err(Error::AngleOutOfRange(angle.degrees()));
            }
        }

        let deg = angles.map(Angle::degrees);
        let len = sides.map(SideLength::get);

        let sum = deg[0] + deg[1] + deg[2];
        if (sum - 180.0).abs() > ANGLE_SUM_TOLERANCE_DEG {
            return Err(Error::InvalidTriangle(format!(
                "angles sum to {sum}°, not 180°"
            )));
        }

        let mut sorted = len;
        sorted.sort_by(f64::total_cmp);
        if sorted[2] >= sorted[0] + sorted[1] {
            return Err(Error::InvalidTriangle(format!(
                "sides {} {} {} violate the strict triangle inequality",
                len[0], len[1], len[2]
            )));
        }

        let ratios = sine_ratios(&angles, &sides);
        let spread = relative_spread(ratios);
        if spread.is_nan() || spread > SINES_RATIO_TOLERANCE {
            return Err(Error::InvalidTriangle(format!(
                "side/sine ratios {:?} disagree by {spread:e} relative",
                ratios
            )));
        }

        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            let longer_i = len[i] > len[j] * (1.0 + SINES_RATIO_TOLERANCE);
            let longer_j = len[j] > len[i] * (1.0 + SINES_RATIO_TOLERANCE);
            if (longer_i && deg[i] < deg[j]) || (longer_j && deg[j] < deg[i]) {
                return Err(Error::InvalidTriangle(format!(
                    "side order does not match angle order ({} vs {}, {}° vs {}°)",
                    len[i], len[j], deg[i], deg[j]
                )));
            }
        }

        Ok(Triangle { angles, sides })
    }

    pub fn alpha(&self) -> Angle {
        self.angles[0]
    }

    pub fn beta(&self) -> Angle {
        self.angles[1]
    }

    pub fn gamma(&self) -> Angle {
        self.angles[2]
    }

    pub fn a(&self) -> SideLength {
        self.sides[0]
    }

    pub fn b(&self) -> SideLength {
        self.sides[1]
    }

    pub fn c(&self) -> SideLength {
        self.sides[2]
    }

    pub fn angles(&self) -> [Angle; 3] {
        self.angles
    }

    pub fn sides(&self) -> [SideLength; 3] {
        self.sides
    }

    /// The same triangle with its parts relabeled by `rotation`.
    pub fn rotated(&self, rotation: Rotation) -> Triangle {
        Triangle {
            angles: rotation.apply(self.angles),
            sides: rotation.apply(self.sides),
        }
    }

    /// Reflection that exchanges the (a, α) and (b, β) pairs.
    pub fn swapped_ab(&self) -> Triangle {
        let [alpha, beta, gamma] = self.angles;
        let [a, b, c] = self.sides;
        Triangle {
            angles: [beta, alpha, gamma],
            sides: [b, a, c],
        }
    }

    /// Every side scaled by `factor`; angles are unchanged.
    pub fn scaled(&self, factor: f64) -> Result<Triangle> {
        let sides = [
            SideLength::new(self.sides[0].get() * factor)?,
            SideLength::new(self.sides[1].get() * factor)?,
            SideLength::new(self.sides[2].get() * factor)?,
        ];
        Ok(Triangle {
            angles: self.angles,
            sides,
        })
    }
}

impl Serialize for Triangle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Triangle", 6)?;
        s.serialize_field("alpha", &self.angles[0].degrees())?;
        s.serialize_field("beta", &self.angles[1].degrees())?;
        s.serialize_field("gamma", &self.angles[2].degrees())?;
        s.serialize_field("a", &self.sides[0].get())?;
        s.serialize_field("b", &self.sides[1].get())?;
        s.serialize_field("c", &self.sides[2].get())?;
        s.end()
    }
}

pub(crate) fn sine_ratios(angles: &[Angle; 3], sides: &[SideLength; 3]) -> [f64; 3] {
    [0, 1, 2].map(|i| sides[i].get() / angles[i].radians().sin())
}

/// Largest pairwise difference divided by the mean.
pub(crate) fn relative_spread(values: [f64; 3]) -> f64 {
    let mean = (values[0] + values[1] + values[2]) / 3.0;
    let max_diff = (values[0] - values[1])
        .abs()
        .max((values[1] - values[2]).abs())
        .max((values[2] - values[0]).abs());
    max_diff / mean
}
