//! Rotation-composition constructions on plane quadrilaterals.
//!
//! Every vertex `a_i` of a simple quadrilateral carries a rotation by half of
//! its interior angle. Because the four half-angles sum to `π`, composing the
//! four rotations in any order gives a half-turn, and the centres of those
//! half-turns (the *b-points*) assemble into six parallelograms. Applied to a
//! parallelogram the same construction yields four squares, so running it
//! twice turns any quadrilateral into 24 squares.
//!
//! Module map:
//!
//! * [`geom`]: points as complex numbers, rigid motions, composition and fixed points.
//! * [`symmetry`]: permutations of four labels and the six coset labels.
//! * [`polygon`]: simple-polygon validation and interior angles.
//! * [`quad`]: b-points, derived parallelograms, squares and the two-stage pipeline.
//! * [`hexagon`]: the six-vertex analogue with quarter-angles.
//! * [`oracle`]: composition-based reference path and seeded input generators.
//! * [`sweep`]: seeded verification sweeps, parallel when the `parallel` feature is on.

pub mod error;
pub mod geom;
pub mod hexagon;
pub mod oracle;
pub mod polygon;
pub mod quad;
pub mod sweep;
pub mod symmetry;

pub use error::{DegenerateKind, GeomError};
pub use geom::{point, Angle, Point, RigidMotion};
pub use hexagon::{Hexagon, QuarterAngles};
pub use quad::{DerivedPolygon, HalfAngles, PolygonClass, Quadrilateral};
pub use symmetry::{CosetLabel, IndexWord, Perm4};

/// Default relative tolerance for classification and identity residuals.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Relaxed tolerance for quantities that pass through two constructions
/// (the square pipeline, hexagon identities).
pub const COMPOUND_REL_TOL: f64 = 1e-8;
