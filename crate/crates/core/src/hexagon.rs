//! The six-vertex version of the construction.
//!
//! Each vertex rotates by a quarter of its interior angle; six quarter-angles
//! of a simple hexagon sum to `π`, so every six-letter product is again a
//! half-turn. The 36-letter word [`HEXAGON_IDENTITY_WORD`] splits into six
//! such half-turns, and its being the identity is equivalent to
//!
//! ```text
//! (b_123456 - b_123564) + (b_231564 - b_231645) + (b_312645 - b_312456) = 0.
//! ```

use std::f64::consts::PI;

use crate::error::GeomError;
use crate::geom::{rotation_word, Angle, Point, RigidMotion};
use crate::polygon;
use crate::quad::half_turn_center;
use crate::symmetry::{IndexWord, Word6};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hexagon {
    vertices: [Point; 6],
    reversed: bool,
}

impl Hexagon {
    pub fn vertices(&self) -> &[Point; 6] {
        &self.vertices
    }

    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    pub fn diameter(&self) -> f64 {
        polygon::diameter(&self.vertices)
    }
}

pub fn validate_hexagon(vertices: [Point; 6]) -> Result<Hexagon, GeomError> {
    let (vertices, reversed) = polygon::normalize(vertices)?;
    Ok(Hexagon { vertices, reversed })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarterAngles(pub [Angle; 6]);

impl QuarterAngles {
    pub fn as_slice(&self) -> &[Angle] {
        &self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().map(|a| a.radians()).sum()
    }
}

pub fn quarter_angles(h: &Hexagon) -> Result<QuarterAngles, GeomError> {
    let interior = polygon::interior_angles(&h.vertices)?;
    let q = QuarterAngles(interior.map(|a| Angle::from_radians(a / 4.0)));
    debug_assert!((q.sum() - PI).abs() <= 1e-9);
    Ok(q)
}

pub fn b_point6(h: &Hexagon, angles: &QuarterAngles, w: Word6) -> Point {
    half_turn_center(&h.vertices, &angles.0, w.labels())
}

/// `r1r2r3r4r5r6 r1r2r3r5r6r4 r2r3r1r5r6r4 r2r3r1r6r4r5 r3r1r2r6r4r5 r3r1r2r4r5r6`.
pub const HEXAGON_IDENTITY_WORD: [u8; 36] = [
    1, 2, 3, 4, 5, 6, 1, 2, 3, 5, 6, 4, 2, 3, 1, 5, 6, 4, 2, 3, 1, 6, 4, 5, 3, 1, 2, 6, 4, 5, 3, 1,
    2, 4, 5, 6,
];

pub fn hexagon_word_product(h: &Hexagon, angles: &QuarterAngles) -> RigidMotion {
    rotation_word(&h.vertices, &angles.0, &HEXAGON_IDENTITY_WORD)
}

/// `max(|rot - 1|, |trans| / diameter)` of the 36-letter product.
pub fn hexagon_word_identity_residual(h: &Hexagon) -> Result<f64, GeomError> {
    let angles = quarter_angles(h)?;
    Ok(hexagon_word_product(h, &angles).distance_from_identity(h.diameter()))
}

fn word6(labels: [u8; 6]) -> Word6 {
    IndexWord::new(labels).expect("hard-coded words are permutations")
}

/// Consecutive pairs `(head, tail)` whose differences `head - tail` sum to zero.
pub const VECTOR_SUM_PAIRS: [([u8; 6], [u8; 6]); 3] = [
    ([1, 2, 3, 4, 5, 6], [1, 2, 3, 5, 6, 4]),
    ([2, 3, 1, 5, 6, 4], [2, 3, 1, 6, 4, 5]),
    ([3, 1, 2, 6, 4, 5], [3, 1, 2, 4, 5, 6]),
];

pub fn hexagon_vector_sum(h: &Hexagon, angles: &QuarterAngles) -> Point {
    VECTOR_SUM_PAIRS
        .iter()
        .map(|&(head, tail)| b_point6(h, angles, word6(head)) - b_point6(h, angles, word6(tail)))
        .sum()
}

/// `|sum of the three b-vectors| / diameter`.
pub fn hexagon_vector_sum_residual(h: &Hexagon) -> Result<f64, GeomError> {
    let angles = quarter_angles(h)?;
    Ok(hexagon_vector_sum(h, &angles).norm() / h.diameter())
}

/// The hexagon `[b_123564, b_123456, b_231645, b_231564, b_312456, b_312645]`.
pub fn b_hexagon(h: &Hexagon, angles: &QuarterAngles) -> [Point; 6] {
    let [(h0, t0), (h1, t1), (h2, t2)] = VECTOR_SUM_PAIRS;
    [t0, h0, t1, h1, t2, h2].map(|w| b_point6(h, angles, word6(w)))
}
