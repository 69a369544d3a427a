//! Oblique triangle solving with identity-based verification.
//!
//! The solver covers the five classical given-data cases (ASA, AAS, SSA,
//! SAS, SSS), including both triangles of the ambiguous SSA case. Every
//! solution can be checked with [`verify`], which evaluates Mollweide's
//! formulas in all three cyclic forms, the Law of Tangents, the Law of Sines
//! and the Law of Cosines, and reduces them to one scale-free residual.
//!
//! ```
//! use mollweide::{solve, verify, TriangleSpec, DEFAULT_TOLERANCE};
//!
//! let spec = TriangleSpec::sas(10.0, 40.0, 4.0).unwrap();
//! let outcome = solve(&spec).unwrap();
//! let t = outcome.unique().unwrap();
//! assert!(t.alpha().degrees() > 90.0);
//! assert!(verify(t, DEFAULT_TOLERANCE).unwrap().passed);
//! ```

pub mod angle;
pub mod batch;
pub mod error;
pub mod identities;
pub mod solver;
pub mod spec;
pub mod triangle;
pub mod verifier;

pub use angle::{Angle, SideLength};
pub use error::{Error, Result};
pub use identities::{
    law_of_cosines, law_of_cosines_residual, law_of_sines_diameter, law_of_sines_ratios,
    law_of_tangents, law_of_tangents_residual, mollweide_cos, mollweide_cos_residual,
    mollweide_sin, mollweide_sin_residual, third_angle, Terms,
};
pub use solver::{solve, solve_asa_aas, solve_sas, solve_ssa, solve_sss, SolveOutcome};
pub use spec::{SpecCase, TriangleSpec};
pub use triangle::{Rotation, Triangle};
pub use verifier::{
    reconstruct_proof_figure, verify, ProofFigure, ResidualReport, DEFAULT_TOLERANCE,
};
