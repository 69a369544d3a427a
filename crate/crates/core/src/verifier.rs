//! Residual-based certification of solved triangles.
//!
//! [`verify`] evaluates every identity in every cyclic form and reduces them
//! to one scale-free number. [`reconstruct_proof_figure`] rebuilds the
//! segment lengths of the angle-bisector construction behind the cosine form
//! of Mollweide's formula so that each step of the derivation can be checked
//! numerically.

use serde::Serialize;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::identities::{
    law_of_cosines, law_of_sines_ratios, law_of_tangents, mollweide_cos, mollweide_sin, Terms,
};
use crate::triangle::{relative_spread, Rotation, Triangle};

/// Agreement level reported for hand-checked examples; the default pass
/// threshold for [`verify`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Every identity residual for one triangle, plus the verdict.
///
/// Mollweide and tangent entries are raw `lhs - rhs` (already scale-free);
/// the cosines entries are divided by the squared side on their left-hand
/// side. `max_normalized_residual` is taken over the normalized form of every
/// entry, see [`Terms::normalized`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    pub mollweide_sin: [f64; 3],
    pub mollweide_cos: [f64; 3],
    pub law_of_tangents: [f64; 3],
    pub sines_spread: f64,
    pub cosines: [f64; 3],
    pub max_normalized_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn verify(t: &Triangle, tolerance: f64) -> Result<ResidualReport> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidTolerance(tolerance));
    }

    let mut report = ResidualReport {
        mollweide_sin: [0.0; 3],
        mollweide_cos: [0.0; 3],
        law_of_tangents: [0.0; 3],
        sines_spread: relative_spread(law_of_sines_ratios(t)),
        cosines: [0.0; 3],
        max_normalized_residual: 0.0,
        tolerance,
        passed: false,
    };

    let mut worst = report.sines_spread;
    let mut track = |terms: Terms| {
        worst = worst.max(terms.normalized());
        terms.residual()
    };
    for r in Rotation::ALL {
        let i = r.index();
        report.mollweide_sin[i] = track(mollweide_sin(t, r));
        report.mollweide_cos[i] = track(mollweide_cos(t, r));
        report.law_of_tangents[i] = track(law_of_tangents(t, r));

        let cos = law_of_cosines(t, r);
        report.cosines[i] = cos.residual() / cos.lhs;
    }
    for c in report.cosines {
        worst = worst.max(c.abs());
    }

    // NaN never compares <= so a non-finite residual fails the check
    report.max_normalized_residual = worst;
    report.passed = worst <= tolerance;
    Ok(report)
}

/// Segment lengths of the angle-bisector construction.
///
/// With the bisector of γ through C meeting the line AF at D, the line AF
/// perpendicular to it cutting BC at E, and F the foot of the perpendicular
/// from B, the segments are AD = DE = b sin½γ, EF = (a−b) sin½γ and
/// AF = (a+b) sin½γ. Triangle ABF then gives cos½(α−β) = AF/c.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProofFigure {
    pub ad: f64,
    pub de: f64,
    pub ef: f64,
    pub af: f64,
    /// (α+β)/2, the base angles of the isosceles triangle ACE.
    pub half_angle_sum: Angle,
    /// (α−β)/2, the angle BAF.
    pub half_angle_diff: Angle,
    /// γ/2, the angle EBF.
    pub half_gamma: Angle,
    c: f64,
}

impl ProofFigure {
    /// AF / AB, which the construction shows equals cos½(α−β).
    pub fn af_over_c(&self) -> f64 {
        self.af / self.c
    }

    /// `cos½(α−β) − AF/c`.
    pub fn closure_residual(&self) -> f64 {
        self.half_angle_diff.radians().cos() - self.af_over_c()
    }
}

/// Rebuild the proof figure. The drawing assumes a ≥ b; swap the (a, α) and
/// (b, β) pairs with [`Triangle::swapped_ab`] first otherwise.
pub fn reconstruct_proof_figure(t: &Triangle) -> Result<ProofFigure> {
    let (a, b, c) = (t.a().get(), t.b().get(), t.c().get());
    if a < b {
        return Err(Error::SideOrder { a, b });
    }
    let (alpha, beta, gamma) = (t.alpha().degrees(), t.beta().degrees(), t.gamma().degrees());
    let half = (0.5 * t.gamma().radians()).sin();

    let ad = b * half;
    let de = b * half;
    let ef = (a - b) * half;
    Ok(ProofFigure {
        ad,
        de,
        ef,
        af: ad + de + ef,
        half_angle_sum: Angle::from_degrees(0.5 * (alpha + beta))?,
        half_angle_diff: Angle::from_degrees(0.5 * (alpha - beta))?,
        half_gamma: Angle::from_degrees(0.5 * gamma)?,
        c,
    })
}
