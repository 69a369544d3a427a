//! Evaluators for the identities that tie the six parts together.
//!
//! Each evaluator works on a [`Triangle`] relabeled by a [`Rotation`], so the
//! three cyclic forms of an identity share one code path. Evaluators return
//! both sides of the identity as [`Terms`]; the `*_residual` wrappers return
//! `lhs - rhs`.

use serde::Serialize;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::triangle::{Rotation, Triangle};

/// Left- and right-hand side of one identity evaluated on concrete parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Terms {
    pub lhs: f64,
    pub rhs: f64,
}

impl Terms {
    #[inline]
    pub fn residual(self) -> f64 {
        self.lhs - self.rhs
    }

    /// `|lhs - rhs| / (1 + max(|lhs|, |rhs|))`, a digit-agreement measure that
    /// does not depend on the triangle's scale.
    #[inline]
    pub fn normalized(self) -> f64 {
        self.residual().abs() / (1.0 + self.lhs.abs().max(self.rhs.abs()))
    }
}

/// Parts of a triangle after relabeling, in radians and raw lengths.
struct Labeled {
    alpha: f64,
    beta: f64,
    gamma: f64,
    a: f64,
    b: f64,
    c: f64,
}

#[inline]
fn labeled(t: &Triangle, r: Rotation) -> Labeled {
    let rt = t.rotated(r);
    Labeled {
        alpha: rt.alpha().radians(),
        beta: rt.beta().radians(),
        gamma: rt.gamma().radians(),
        a: rt.a().get(),
        b: rt.b().get(),
        c: rt.c().get(),
    }
}

/// 180° − x − y, provided both are interior angles leaving room for a third.
pub fn third_angle(x: Angle, y: Angle) -> Result<Angle> {
    for angle in [x, y] {
        if !angle.is_interior() {
            return Err(Error::AngleOutOfRange(angle.degrees()));
        }
    }
    let third = 180.0 - x.degrees() - y.degrees();
    if third <= 0.0 {
        return Err(Error::NoThirdAngle(x.degrees(), y.degrees()));
    }
    Angle::interior(third)
}

/// sin½(α−β) / cos½γ against (a−b)/c.
pub fn mollweide_sin(t: &Triangle, r: Rotation) -> Terms {
    let p = labeled(t, r);
    Terms {
        lhs: (0.5 * (p.alpha - p.beta)).sin() / (0.5 * p.gamma).cos(),
        rhs: (p.a - p.b) / p.c,
    }
}

pub fn mollweide_sin_residual(t: &Triangle, r: Rotation) -> f64 {
    mollweide_sin(t, r).residual()
}

/// cos½(α−β) / sin½γ against (a+b)/c.
pub fn mollweide_cos(t: &Triangle, r: Rotation) -> Terms {
    let p = labeled(t, r);
    Terms {
        lhs: (0.5 * (p.alpha - p.beta)).cos() / (0.5 * p.gamma).sin(),
        rhs: (p.a + p.b) / p.c,
    }
}

pub fn mollweide_cos_residual(t: &Triangle, r: Rotation) -> f64 {
    mollweide_cos(t, r).residual()
}

/// tan½(α−β) / tan½(α+β) against (a−b)/(a+b).
///
/// The denominator is cot½γ written as tan½(α+β), which stays finite and
/// nonzero for every interior γ.
pub fn law_of_tangents(t: &Triangle, r: Rotation) -> Terms {
    let p = labeled(t, r);
    Terms {
        lhs: (0.5 * (p.alpha - p.beta)).tan() / (0.5 * (p.alpha + p.beta)).tan(),
        rhs: (p.a - p.b) / (p.a + p.b),
    }
}

pub fn law_of_tangents_residual(t: &Triangle, r: Rotation) -> f64 {
    law_of_tangents(t, r).residual()
}

/// c² against a² + b² − 2ab cos γ.
///
/// The right-hand side is evaluated as (a−b)² + 4ab sin²½γ, which is the same
/// quantity without the cancellation that the textbook form suffers when γ is
/// small.
pub fn law_of_cosines(t: &Triangle, r: Rotation) -> Terms {
    let p = labeled(t, r);
    let half = (0.5 * p.gamma).sin();
    let diff = p.a - p.b;
    Terms {
        lhs: p.c * p.c,
        rhs: diff * diff + 4.0 * p.a * p.b * half * half,
    }
}

pub fn law_of_cosines_residual(t: &Triangle, r: Rotation) -> f64 {
    law_of_cosines(t, r).residual()
}

/// The common ratio a / sin α (the circumcircle diameter).
pub fn law_of_sines_diameter(t: &Triangle) -> f64 {
    t.a().get() / t.alpha().radians().sin()
}

/// The three ratios a/sin α, b/sin β, c/sin γ in vertex order.
pub fn law_of_sines_ratios(t: &Triangle) -> [f64; 3] {
    crate::triangle::sine_ratios(&t.angles(), &t.sides())
}
