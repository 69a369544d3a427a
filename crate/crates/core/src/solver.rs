//! Solvers for the five given-data cases.
//!
//! Every solver returns all triangles consistent with its givens. Geometric
//! impossibility is an ordinary outcome ([`SolveOutcome::NoSolution`]); only a
//! malformed spec is an [`Error`](crate::Error).

use crate::angle::{Angle, SideLength};
use crate::error::{Error, Result};
use crate::identities::third_angle;
use crate::spec::TriangleSpec;
use crate::triangle::Triangle;

/// Relative width of the band around the SSA altitude within which the two
/// nominal solutions are merged into the single right triangle.
pub const SSA_COLLAPSE_RELATIVE: f64 = 1e-12;

/// Relative slack below which three sides are treated as collinear.
pub const FLAT_RELATIVE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    NoSolution { reason: String },
    Unique(Triangle),
    /// Both SSA triangles, ordered by ascending β.
    Two(Triangle, Triangle),
}

impl SolveOutcome {
    fn none(reason: impl Into<String>) -> Self {
        SolveOutcome::NoSolution {
            reason: reason.into(),
        }
    }

    pub fn triangles(&self) -> Vec<Triangle> {
        match self {
            SolveOutcome::NoSolution { .. } => Vec::new(),
            SolveOutcome::Unique(t) => vec![*t],
            SolveOutcome::Two(t1, t2) => vec![*t1, *t2],
        }
    }

    pub fn count(&self) -> usize {
        match self {
            SolveOutcome::NoSolution { .. } => 0,
            SolveOutcome::Unique(_) => 1,
            SolveOutcome::Two(..) => 2,
        }
    }

    pub fn unique(&self) -> Option<&Triangle> {
        match self {
            SolveOutcome::Unique(t) => Some(t),
            _ => None,
        }
    }
}

/// Solve any spec, dispatching on its case.
pub fn solve(spec: &TriangleSpec) -> Result<SolveOutcome> {
    spec.validate()?;
    match spec {
        TriangleSpec::Asa { .. } | TriangleSpec::Aas { .. } => solve_asa_aas(spec),
        TriangleSpec::Ssa { .. } => solve_ssa(spec),
        TriangleSpec::Sas { .. } => solve_sas(spec),
        TriangleSpec::Sss { .. } => solve_sss(spec),
    }
}

/// Two angles and one side: third angle by subtraction, sides by the common
/// ratio of the Law of Sines.
pub fn solve_asa_aas(spec: &TriangleSpec) -> Result<SolveOutcome> {
    spec.validate()?;
    let (alpha, beta, known_side, known_index) = match *spec {
        TriangleSpec::Asa { alpha, c, beta } => (alpha, beta, c, 2),
        TriangleSpec::Aas { alpha, beta, a } => (alpha, beta, a, 0),
        _ => return Err(wrong_case(spec, "ASA or AAS")),
    };

    let gamma = match third_angle(alpha, beta) {
        Ok(gamma) => gamma,
        Err(Error::NoThirdAngle(x, y)) => {
            return Ok(SolveOutcome::none(format!(
                "angles {x}° and {y}° sum to 180° or more"
            )))
        }
        Err(e) => return Err(e),
    };

    let angles = [alpha, beta, gamma];
    let diameter = known_side.get() / angles[known_index].radians().sin();
    let mut sides = [known_side; 3];
    for i in 0..3 {
        if i != known_index {
            sides[i] = match SideLength::new(diameter * angles[i].radians().sin()) {
                Ok(s) => s,
                Err(e) => return Ok(SolveOutcome::none(format!("degenerate triangle: {e}"))),
            };
        }
    }
    Ok(single(angles, sides))
}

/// Two sides and the angle facing the first: zero, one or two triangles
/// depending on where a falls relative to the altitude h = b sin α.
pub fn solve_ssa(spec: &TriangleSpec) -> Result<SolveOutcome> {
    spec.validate()?;
    let TriangleSpec::Ssa { a, b, alpha } = *spec else {
        return Err(wrong_case(spec, "SSA"));
    };
    let (la, lb) = (a.get(), b.get());
    let tau = SSA_COLLAPSE_RELATIVE * la.max(lb);

    if alpha.degrees() >= 90.0 {
        if la <= lb + tau {
            return Ok(SolveOutcome::none(format!(
                "side a = {la} must exceed side b = {lb} when α = {}° is not acute",
                alpha.degrees()
            )));
        }
        let beta = (lb * alpha.radians().sin() / la).asin();
        return Ok(ssa_triangle(a, b, alpha, beta.to_degrees()));
    }

    let h = lb * alpha.radians().sin();
    if la < h - tau {
        return Ok(SolveOutcome::none(format!(
            "side a = {la} is shorter than the altitude h = b sin α = {h}"
        )));
    }
    if (la - h).abs() <= tau {
        return Ok(ssa_triangle(a, b, alpha, 90.0));
    }

    let acute = (h / la).min(1.0).asin().to_degrees();
    if la < lb - tau {
        let first = ssa_triangle(a, b, alpha, acute);
        let second = ssa_triangle(a, b, alpha, 180.0 - acute);
        return Ok(match (first, second) {
            (SolveOutcome::Unique(t1), SolveOutcome::Unique(t2)) => SolveOutcome::Two(t1, t2),
            (unique @ SolveOutcome::Unique(_), _) | (_, unique @ SolveOutcome::Unique(_)) => {
                unique
            }
            (none, _) => none,
        });
    }
    Ok(ssa_triangle(a, b, alpha, acute))
}

fn ssa_triangle(a: SideLength, b: SideLength, alpha: Angle, beta_deg: f64) -> SolveOutcome {
    let gamma_deg = 180.0 - alpha.degrees() - beta_deg;
    let (Ok(beta), Ok(gamma)) = (Angle::interior(beta_deg), Angle::interior(gamma_deg)) else {
        return SolveOutcome::none(format!(
            "no room for β = {beta_deg}° beside α = {}°",
            alpha.degrees()
        ));
    };
    let c = a.get() * gamma.radians().sin() / alpha.radians().sin();
    match SideLength::new(c) {
        Ok(c) => single([alpha, beta, gamma], [a, b, c]),
        Err(e) => SolveOutcome::none(format!("degenerate triangle: {e}")),
    }
}

/// Two sides and the included angle: third side from the Law of Cosines,
/// remaining angles from its arccos form so obtuse angles come out obtuse.
pub fn solve_sas(spec: &TriangleSpec) -> Result<SolveOutcome> {
    spec.validate()?;
    let TriangleSpec::Sas { a, gamma, b } = *spec else {
        return Err(wrong_case(spec, "SAS"));
    };
    let (la, lb) = (a.get(), b.get());
    let half = (0.5 * gamma.radians()).sin();
    let c = ((la - lb).powi(2) + 4.0 * la * lb * half * half).sqrt();
    let Ok(c) = SideLength::new(c) else {
        return Ok(SolveOutcome::none("third side vanishes"));
    };
    let lc = c.get();

    let alpha = opposite_angle(la, lb, lc);
    let beta = opposite_angle(lb, la, lc);
    // keep the angle facing the longer given side, close the sum with the other
    let (alpha, beta) = if la >= lb {
        (alpha, 180.0 - gamma.degrees() - alpha)
    } else {
        (180.0 - gamma.degrees() - beta, beta)
    };
    Ok(from_degrees([alpha, beta, gamma.degrees()], [a, b, c]))
}

/// Three sides: largest angle first, second by arccos, third by subtraction.
pub fn solve_sss(spec: &TriangleSpec) -> Result<SolveOutcome> {
    spec.validate()?;
    let TriangleSpec::Sss { a, b, c } = *spec else {
        return Err(wrong_case(spec, "SSS"));
    };
    let sides = [a, b, c];
    let len = sides.map(SideLength::get);

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| len[j].total_cmp(&len[i]));
    let [big, mid, small] = order;

    if len[big] >= (len[mid] + len[small]) * (1.0 - FLAT_RELATIVE) {
        return Ok(SolveOutcome::none(format!(
            "sides {} {} {} violate the triangle inequality",
            len[0], len[1], len[2]
        )));
    }

    let mut deg = [0.0; 3];
    deg[big] = opposite_angle(len[big], len[mid], len[small]);
    deg[mid] = opposite_angle(len[mid], len[big], len[small]);
    deg[small] = 180.0 - deg[big] - deg[mid];
    Ok(from_degrees(deg, sides))
}

/// Angle in degrees facing side `x` in a triangle with the other two sides
/// `y` and `z`, via arccos of the Law of Cosines.
fn opposite_angle(x: f64, y: f64, z: f64) -> f64 {
    let cos = ((y - x) * (y + x) + z * z) / (2.0 * y * z);
    cos.clamp(-1.0, 1.0).acos().to_degrees()
}

fn from_degrees(deg: [f64; 3], sides: [SideLength; 3]) -> SolveOutcome {
    let mut angles = [Angle::RIGHT; 3];
    for (slot, value) in angles.iter_mut().zip(deg) {
        match Angle::interior(value) {
            Ok(angle) => *slot = angle,
            Err(e) => return SolveOutcome::none(format!("degenerate triangle: {e}")),
        }
    }
    single(angles, sides)
}

fn single(angles: [Angle; 3], sides: [SideLength; 3]) -> SolveOutcome {
    match Triangle::from_arrays(angles, sides) {
        Ok(t) => SolveOutcome::Unique(t),
        Err(e) => SolveOutcome::none(format!("degenerate triangle: {e}")),
    }
}

fn wrong_case(spec: &TriangleSpec, expected: &str) -> Error {
    Error::InvalidTriangle(format!(
        "{} spec passed to the {expected} solver",
        spec.case()
    ))
}
