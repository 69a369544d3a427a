//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the solver: triangles are built by placing vertices in
//! the plane and measuring the resulting parts.

#![allow(dead_code)]

use mollweide::Triangle;
use rand::Rng;

pub type Point = (f64, f64);

/// Parts measured from a planar placement, in degrees and lengths.
#[derive(Debug, Clone, Copy)]
pub struct Measured {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Measured {
    pub fn angles(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn triangle(&self) -> Triangle {
        Triangle::from_parts(self.alpha, self.beta, self.gamma, self.a, self.b, self.c)
            .expect("measured parts form a triangle")
    }
}

fn dist(p: Point, q: Point) -> f64 {
    (p.0 - q.0).hypot(p.1 - q.1)
}

/// Unsigned angle at `at` between the rays towards `p` and `q`, in degrees.
fn angle_at(at: Point, p: Point, q: Point) -> f64 {
    let u = (p.0 - at.0, p.1 - at.1);
    let v = (q.0 - at.0, q.1 - at.1);
    let cross = u.0 * v.1 - u.1 * v.0;
    let dot = u.0 * v.0 + u.1 * v.1;
    cross.abs().atan2(dot).to_degrees()
}

/// Vertex placement A = (0, 0), B = (c, 0), C = b (cos α, sin α).
pub fn place(alpha_deg: f64, b: f64, c: f64) -> [Point; 3] {
    let t = alpha_deg.to_radians();
    [(0.0, 0.0), (c, 0.0), (b * t.cos(), b * t.sin())]
}

pub fn measure([pa, pb, pc]: [Point; 3]) -> Measured {
    Measured {
        alpha: angle_at(pa, pb, pc),
        beta: angle_at(pb, pc, pa),
        gamma: angle_at(pc, pa, pb),
        a: dist(pb, pc),
        b: dist(pa, pc),
        c: dist(pa, pb),
    }
}

/// Interior angles summing to 180°, uniform on the simplex, each at least
/// `min_deg`.
pub fn random_angles<R: Rng>(rng: &mut R, min_deg: f64) -> [f64; 3] {
    loop {
        let mut cuts = [rng.gen_range(0.0..180.0), rng.gen_range(0.0..180.0)];
        cuts.sort_by(f64::total_cmp);
        let angles = [cuts[0], cuts[1] - cuts[0], 180.0 - cuts[1]];
        if angles.iter().all(|&x| x >= min_deg) {
            return angles;
        }
    }
}

/// Scale drawn log-uniformly from [lo, hi].
pub fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..=hi.ln())).exp()
}

/// A random triangle built by coordinates: angles from the simplex, side b
/// and c from the placement's own geometry at the requested scale.
pub fn random_measured<R: Rng>(rng: &mut R, min_deg: f64, lo: f64, hi: f64) -> Measured {
    let [alpha, beta, gamma] = random_angles(rng, min_deg);
    let scale = log_uniform(rng, lo, hi);
    // circumdiameter `scale`: b = scale sin β, c = scale sin γ
    let b = scale * beta.to_radians().sin();
    let c = scale * gamma.to_radians().sin();
    measure(place(alpha, b, c))
}

/// Count the placements of B on the ray from A at angle α (with |AC| = b)
/// that give |BC| = a, by sweeping β densely over (0°, 180° − α) and counting
/// roots of a sin β − b sin α. The sweep always contains β = 90° when it lies
/// in range, so an exact tangent configuration registers as a touching root.
pub fn ssa_sweep_count(a: f64, b: f64, alpha_deg: f64, samples: usize) -> usize {
    let upper = 180.0 - alpha_deg;
    let sin_alpha = alpha_deg.to_radians().sin();
    let g = |beta_deg: f64| a * beta_deg.to_radians().sin() - b * sin_alpha;

    let mut grid: Vec<f64> = (1..samples)
        .map(|i| upper * i as f64 / samples as f64)
        .collect();
    if upper > 90.0 {
        grid.push(90.0);
        grid.sort_by(f64::total_cmp);
    }

    let mut roots = 0;
    let mut last = g(0.0).signum();
    let mut in_zero = false;
    for beta in grid {
        let v = g(beta);
        if v == 0.0 {
            if !in_zero {
                roots += 1;
                in_zero = true;
            }
            continue;
        }
        let s = v.signum();
        if !in_zero && s != last {
            roots += 1;
        }
        in_zero = false;
        last = s;
    }
    // a root sitting on the open end β = 180° − α is a flat triangle
    roots
}

pub fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(f64::MIN_POSITIVE)
}

pub fn parts_match(t: &Triangle, m: &Measured, tol: f64) -> bool {
    let angles = t.angles().map(|a| a.degrees());
    let sides = t.sides().map(|s| s.get());
    (0..3).all(|i| rel_close(angles[i], m.angles()[i], tol) && rel_close(sides[i], m.sides()[i], tol))
}
