//! Reference path and seeded inputs.
//!
//! [`b_point_by_composition`] builds the rotations and composes them as
//! rigid motions; it never touches the closed form in [`crate::quad`], so the
//! two can be compared against each other.
//!
//! Random polygons come from SplitMix64, chosen because it is a few lines in
//! any language: the state advances by `0x9E3779B97F4A7C15` (mod 2^64) and
//! each output is the state passed through
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z =  z ^ (z >> 31)
//! ```
//!
//! A coordinate takes the top 20 bits `k` of one output and maps it to
//! `(k - 2^19) · 5 / 2^18`, a dyadic grid on `[-10, 10)`. On that grid sums
//! and differences of coordinates are exact.

use crate::error::GeomError;
use crate::geom::{cross, point, rotation_word, Angle, Point};
use crate::hexagon::{validate_hexagon, Hexagon};
use crate::quad::{validate, Quadrilateral};

pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(s: u64) -> Self {
        Seed(s)
    }
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Grid coordinate in `[-10, 10)`.
    pub fn next_coordinate(&mut self) -> f64 {
        let k = (self.next_u64() >> 44) as i64;
        (k - (1 << 19)) as f64 * 5.0 / (1u64 << 18) as f64
    }

    pub fn next_point(&mut self) -> Point {
        let x = self.next_coordinate();
        let y = self.next_coordinate();
        point(x, y)
    }
}

/// Fixed point of `r_{w1} ∘ … ∘ r_{wn}` obtained by composing the rotations.
pub fn b_point_by_composition(
    points: &[Point],
    angles: &[Angle],
    word: &[u8],
) -> Result<Point, GeomError> {
    rotation_word(points, angles, word).fixed_point()
}

pub fn random_simple_quadrilateral(seed: Seed) -> Result<Quadrilateral, GeomError> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..MAX_ATTEMPTS {
        let v = std::array::from_fn(|_| rng.next_point());
        if let Ok(q) = validate(v) {
            return Ok(q);
        }
    }
    Err(GeomError::SamplingExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

/// `a3 = a2 + (a4 - a1)`, so `a1 - a2 = -(a3 - a4)` holds exactly.
pub fn random_parallelogram(seed: Seed) -> Result<Quadrilateral, GeomError> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..MAX_ATTEMPTS {
        let a1 = rng.next_point();
        let a2 = rng.next_point();
        let a4 = rng.next_point();
        let (u, v) = (a2 - a1, a4 - a1);
        // Sine of the corner angle below 1e-2 counts as near-collinear.
        if cross(u, v).abs() < 1e-2 * u.norm() * v.norm() {
            continue;
        }
        let a3 = a2 + (a4 - a1);
        if let Ok(q) = validate([a1, a2, a3, a4]) {
            return Ok(q);
        }
    }
    Err(GeomError::SamplingExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

pub fn random_simple_hexagon(seed: Seed) -> Result<Hexagon, GeomError> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..MAX_ATTEMPTS {
        let v = std::array::from_fn(|_| rng.next_point());
        if let Ok(h) = validate_hexagon(v) {
            return Ok(h);
        }
    }
    Err(GeomError::SamplingExhausted {
        attempts: MAX_ATTEMPTS,
    })
}
