//! Complex-plane primitives.
//!
//! The plane is identified with `C`. An orientation-preserving isometry is
//! stored as the pair `(rot, trans)` acting by `z ↦ rot·z + trans` with
//! `|rot| = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::GeomError;

pub type Point = Complex64;

/// `|rot - 1|` must exceed this for a motion to count as a genuine rotation.
pub const ROTATION_EPS: f64 = 1e-9;

#[inline]
pub fn point(x: f64, y: f64) -> Point {
    Complex64::new(x, y)
}

/// z-component of the cross product of two plane vectors.
#[inline]
pub fn cross(u: Point, v: Point) -> f64 {
    u.re * v.im - u.im * v.re
}

#[inline]
pub fn dot(u: Point, v: Point) -> f64 {
    u.re * v.re + u.im * v.im
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    pub const fn from_radians(radians: f64) -> Self {
        Angle(radians)
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Representative in `(-π, π]`.
    pub fn normalized(self) -> Self {
        let mut r = self.0.rem_euclid(2.0 * PI);
        if r > PI {
            r -= 2.0 * PI;
        }
        Angle(r)
    }

    /// `e^{iθ}`.
    pub fn unit(self) -> Point {
        Complex64::from_polar(1.0, self.0)
    }
}

impl std::ops::Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

impl std::iter::Sum for Angle {
    fn sum<I: Iterator<Item = Angle>>(iter: I) -> Angle {
        Angle(iter.map(|a| a.0).sum())
    }
}

/// Orientation-preserving plane isometry `z ↦ rot·z + trans`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub rot: Point,
    pub trans: Point,
}

impl RigidMotion {
    pub const IDENTITY: RigidMotion = RigidMotion {
        rot: Complex64::new(1.0, 0.0),
        trans: Complex64::new(0.0, 0.0),
    };

    pub fn new(rot: Point, trans: Point) -> Self {
        debug_assert!(
            (rot.norm() - 1.0).abs() <= 1e-12,
            "rotation factor off the unit circle"
        );
        RigidMotion { rot, trans }
    }

    pub fn translation(v: Point) -> Self {
        RigidMotion::new(Complex64::new(1.0, 0.0), v)
    }

    /// `z ↦ e^{iθ}(z - c) + c`.
    pub fn rotation_about(center: Point, angle: Angle) -> Self {
        let rot = angle.unit();
        RigidMotion::new(rot, center * (1.0 - rot))
    }

    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &RigidMotion) -> RigidMotion {
        RigidMotion {
            rot: self.rot * inner.rot,
            trans: self.rot * inner.trans + self.trans,
        }
    }

    pub fn apply(&self, z: Point) -> Point {
        self.rot * z + self.trans
    }

    pub fn inverse(&self) -> RigidMotion {
        let inv = self.rot.conj();
        RigidMotion {
            rot: inv,
            trans: -(inv * self.trans),
        }
    }

    /// Centre of the rotation. Fails when the motion is the identity or a
    /// translation.
    pub fn fixed_point(&self) -> Result<Point, GeomError> {
        let deviation = (self.rot - 1.0).norm();
        if deviation <= ROTATION_EPS {
            return Err(GeomError::NotARotation { deviation });
        }
        Ok(self.trans / (1.0 - self.rot))
    }

    /// `max(|rot - 1|, |trans| / scale)`, with `rot` renormalised to the unit
    /// circle first.
    pub fn distance_from_identity(&self, scale: f64) -> f64 {
        let rot = self.rot / self.rot.norm();
        (rot - 1.0).norm().max(self.trans.norm() / scale)
    }

    /// Whether `self ∘ self` is within `tol` of the identity; the translation
    /// part is measured against `max(1, |trans|)`.
    pub fn is_involution(&self, tol: f64) -> bool {
        self.involution_defect() <= tol
    }

    /// Distance of `self ∘ self` from the identity, as used by [`Self::is_involution`].
    pub fn involution_defect(&self) -> f64 {
        self.compose(self)
            .distance_from_identity(self.trans.norm().max(1.0))
    }
}

impl Default for RigidMotion {
    fn default() -> Self {
        RigidMotion::IDENTITY
    }
}

/// Product `r_{w_1} r_{w_2} … r_{w_n}` of rotations about `centers[w_k - 1]`
/// by `angles[w_k - 1]`, read as composition: the last letter acts first.
///
/// Letters are 1-based vertex labels.
pub fn rotation_word(centers: &[Point], angles: &[Angle], letters: &[u8]) -> RigidMotion {
    letters.iter().rev().fold(RigidMotion::IDENTITY, |acc, &l| {
        let k = usize::from(l) - 1;
        RigidMotion::rotation_about(centers[k], angles[k]).compose(&acc)
    })
}
