use std::fmt;

use thiserror::Error;

use crate::symmetry::CosetLabel;

/// Which degeneracy check rejected a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateKind {
    /// All vertices coincide.
    ZeroDiameter,
    /// The edge starting at the vertex has zero length.
    ZeroEdge,
    /// The vertex and its two neighbours are collinear.
    CollinearVertex,
    /// The interior angle at the vertex is 0 or 2π.
    ZeroAngle,
}

impl fmt::Display for DegenerateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DegenerateKind::ZeroDiameter => "all vertices coincide",
            DegenerateKind::ZeroEdge => "zero-length edge",
            DegenerateKind::CollinearVertex => "collinear consecutive vertices",
            DegenerateKind::ZeroAngle => "interior angle is 0 or 2π",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error(
        "NotARotation: rotation factor is {deviation:e} away from 1 (identity or translation)"
    )]
    NotARotation { deviation: f64 },

    #[error("NonFinite: vertex {vertex} has a NaN or infinite coordinate")]
    NonFinite { vertex: usize },

    /// Edges are numbered by their starting vertex, 1-based.
    #[error("NotSimple: edge {first} intersects edge {second}")]
    NotSimple { first: usize, second: usize },

    /// Vertices are 1-based.
    #[error("Degenerate: {kind} at vertex {vertex}")]
    Degenerate { vertex: usize, kind: DegenerateKind },

    #[error("NotAParallelogram: relative residual {residual:e} exceeds tolerance")]
    NotAParallelogram { residual: f64 },

    #[error(
        "DegenerateIntermediate: stage-1 polygon P^{label} is not a valid quadrilateral ({source})"
    )]
    DegenerateIntermediate {
        label: CosetLabel,
        source: Box<GeomError>,
    },

    #[error("SamplingExhausted: no valid polygon after {attempts} attempts")]
    SamplingExhausted { attempts: usize },
}

impl GeomError {
    /// True for errors that describe unusable input geometry.
    pub fn is_invalid_geometry(&self) -> bool {
        matches!(
            self,
            GeomError::NonFinite { .. }
                | GeomError::NotSimple { .. }
                | GeomError::Degenerate { .. }
                | GeomError::NotAParallelogram { .. }
                | GeomError::DegenerateIntermediate { .. }
        )
    }
}
