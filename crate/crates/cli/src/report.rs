//! JSON reports for `derive`, `squares` and `hexagon`.
//!
//! Points are `[x, y]` arrays. Every report echoes its raw input, so
//! rerunning on `report.input.vertices` reproduces the report exactly.

use quadsq_core::hexagon::{
    self, b_hexagon, hexagon_vector_sum, hexagon_word_product, quarter_angles, validate_hexagon,
};
use quadsq_core::quad::{
    self, all_derived, classify, congruence_pairs, distinct_count, half_angles,
    parallelogram_relations, squares_pipeline, validate,
};
use quadsq_core::{
    point, CosetLabel, GeomError, Point, PolygonClass, COMPOUND_REL_TOL, DEFAULT_REL_TOL,
};
use serde::{Deserialize, Serialize};

pub type Pt = [f64; 2];

pub fn pt(p: Point) -> Pt {
    [p.re, p.im]
}

pub fn to_point(p: Pt) -> Point {
    point(p[0], p[1])
}

/// Hausdorff separation, relative to the input diameter, below which two
/// squares count as the same.
pub const DISTINCT_REL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub vertices: Vec<Pt>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Normalized {
    pub vertices: Vec<Pt>,
    /// The input was clockwise and its order was reversed.
    pub reversed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivedEntry {
    pub label: CosetLabel,
    pub points: [Pt; 4],
    pub class: PolygonClass,
    pub parallelogram_residual: f64,
    pub square_residual: f64,
}

impl DerivedEntry {
    fn from(d: &quad::DerivedPolygon) -> Self {
        DerivedEntry {
            label: d.label,
            points: d.points.map(pt),
            class: d.class,
            parallelogram_residual: d.parallelogram_residual(),
            square_residual: d.square_residual(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CongruenceEntry {
    pub first: CosetLabel,
    pub second: CosetLabel,
    pub rotation: Pt,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareCheck {
    pub label: CosetLabel,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TranslationEntry {
    pub first: CosetLabel,
    pub second: CosetLabel,
    /// `second[(m + shift) % 4] = first[m] + offset`.
    pub shift: usize,
    pub offset: Pt,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParallelogramSection {
    pub squares: Vec<SquareCheck>,
    pub translations: Vec<TranslationEntry>,
    pub right_angle_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeriveReport {
    pub command: String,
    pub input: InputEcho,
    pub tolerance: f64,
    pub normalized: Normalized,
    pub half_angles: [f64; 4],
    pub input_class: PolygonClass,
    pub derived: Vec<DerivedEntry>,
    pub congruence_pairs: Vec<CongruenceEntry>,
    /// Present when the input itself is a parallelogram.
    pub parallelogram_relations: Option<ParallelogramSection>,
    pub max_residual: f64,
    pub ok: bool,
}

impl DeriveReport {
    pub fn count_class(&self, class: PolygonClass) -> usize {
        self.derived.iter().filter(|d| d.class == class).count()
    }
}

pub fn derive_report(vertices: [Point; 4], tol: f64) -> Result<DeriveReport, GeomError> {
    let q = validate(vertices)?;
    let angles = half_angles(&q)?;
    let derived = all_derived(&q, tol)?;
    let pairs = congruence_pairs(&derived, &angles, q.diameter());
    let input_class = classify(q.vertices(), tol);

    let relations = if input_class == PolygonClass::GenericQuad {
        None
    } else {
        let r = parallelogram_relations(&q, tol)?;
        Some(ParallelogramSection {
            squares: r
                .squares
                .iter()
                .map(|&(label, residual)| SquareCheck { label, residual })
                .collect(),
            translations: r
                .translations
                .iter()
                .map(|t| TranslationEntry {
                    first: t.first,
                    second: t.second,
                    shift: t.fit.shift,
                    offset: pt(t.fit.offset),
                    residual: t.fit.residual,
                })
                .collect(),
            right_angle_residual: r.right_angle_residual,
        })
    };

    let mut max_residual = derived
        .iter()
        .map(|d| d.parallelogram_residual())
        .chain(pairs.iter().map(|p| p.residual))
        .fold(0.0, f64::max);
    if let Some(r) = &relations {
        max_residual = r
            .squares
            .iter()
            .map(|s| s.residual)
            .chain(r.translations.iter().map(|t| t.residual))
            .chain(std::iter::once(r.right_angle_residual))
            .fold(max_residual, f64::max);
    }

    Ok(DeriveReport {
        command: "derive".into(),
        input: InputEcho {
            vertices: vertices.iter().copied().map(pt).collect(),
        },
        tolerance: tol,
        normalized: Normalized {
            vertices: q.vertices().iter().copied().map(pt).collect(),
            reversed: q.was_reversed(),
        },
        half_angles: angles.0.map(|a| a.radians()),
        input_class,
        derived: derived.iter().map(DerivedEntry::from).collect(),
        congruence_pairs: pairs
            .iter()
            .map(|p| CongruenceEntry {
                first: p.first,
                second: p.second,
                rotation: pt(p.rotation),
                residual: p.residual,
            })
            .collect(),
        parallelogram_relations: relations,
        max_residual,
        ok: max_residual <= tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareEntry {
    pub stage1: CosetLabel,
    pub stage2: CosetLabel,
    pub points: [Pt; 4],
    pub class: PolygonClass,
    pub square_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquaresReport {
    pub command: String,
    pub input: InputEcho,
    pub tolerance: f64,
    pub normalized: Normalized,
    pub parallelograms: Vec<DerivedEntry>,
    pub squares: Vec<SquareEntry>,
    pub distinct_count: usize,
    pub max_residual: f64,
    pub ok: bool,
}

/// `tol` is the stage-2 tolerance (default `1e-8`).
pub fn squares_report(vertices: [Point; 4], tol: f64) -> Result<SquaresReport, GeomError> {
    let q = validate(vertices)?;
    let out = squares_pipeline(&q, tol)?;
    let squares: Vec<SquareEntry> = out
        .squares
        .iter()
        .map(|s| SquareEntry {
            stage1: s.stage1,
            stage2: s.stage2,
            points: s.square.points.map(pt),
            class: s.square.class,
            square_residual: s
                .square
                .square_residual()
                .max(s.square.parallelogram_residual()),
        })
        .collect();
    let max_residual = squares
        .iter()
        .map(|s| s.square_residual)
        .fold(0.0, f64::max);
    let ok = max_residual <= tol && squares.iter().all(|s| s.class == PolygonClass::Square);
    Ok(SquaresReport {
        command: "squares".into(),
        input: InputEcho {
            vertices: vertices.iter().copied().map(pt).collect(),
        },
        tolerance: tol,
        normalized: Normalized {
            vertices: q.vertices().iter().copied().map(pt).collect(),
            reversed: q.was_reversed(),
        },
        parallelograms: out.parallelograms.iter().map(DerivedEntry::from).collect(),
        distinct_count: distinct_count(&out.squares, DISTINCT_REL, q.diameter()),
        squares,
        max_residual,
        ok,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedPoint {
    pub word: String,
    pub point: Pt,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HexagonReport {
    pub command: String,
    pub input: InputEcho,
    pub tolerance: f64,
    pub normalized: Normalized,
    pub quarter_angles: [f64; 6],
    /// `[b_123564, b_123456, b_231645, b_231564, b_312456, b_312645]`.
    pub b_hexagon: Vec<NamedPoint>,
    pub vector_sum: Pt,
    pub word_residual: f64,
    pub vector_sum_residual: f64,
    pub ok: bool,
}

pub fn hexagon_report(vertices: [Point; 6], tol: f64) -> Result<HexagonReport, GeomError> {
    let h = validate_hexagon(vertices)?;
    let a = quarter_angles(&h)?;
    let scale = h.diameter();
    let word_residual = hexagon_word_product(&h, &a).distance_from_identity(scale);
    let sum = hexagon_vector_sum(&h, &a);
    let vector_sum_residual = sum.norm() / scale;
    let [(h0, t0), (h1, t1), (h2, t2)] = hexagon::VECTOR_SUM_PAIRS;
    let names = [t0, h0, t1, h1, t2, h2]
        .map(|w| w.iter().map(|d| char::from(b'0' + d)).collect::<String>());
    let b_hex = b_hexagon(&h, &a);
    Ok(HexagonReport {
        command: "hexagon".into(),
        input: InputEcho {
            vertices: vertices.iter().copied().map(pt).collect(),
        },
        tolerance: tol,
        normalized: Normalized {
            vertices: h.vertices().iter().copied().map(pt).collect(),
            reversed: h.was_reversed(),
        },
        quarter_angles: a.0.map(|x| x.radians()),
        b_hexagon: names
            .into_iter()
            .zip(b_hex)
            .map(|(word, p)| NamedPoint { word, point: pt(p) })
            .collect(),
        vector_sum: pt(sum),
        word_residual,
        vector_sum_residual,
        ok: word_residual <= tol && vector_sum_residual <= tol,
    })
}

/// Relative tolerance from `QUADSQ_TOL`, if set.
pub fn tolerance_from_env() -> Result<f64, String> {
    match std::env::var("QUADSQ_TOL") {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(format!("QUADSQ_TOL must be a positive number, got {s:?}")),
        },
        Err(_) => Ok(DEFAULT_REL_TOL),
    }
}

/// Compound tolerance matching a relative tolerance.
pub fn compound(rel: f64) -> f64 {
    rel * (COMPOUND_REL_TOL / DEFAULT_REL_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> [Point; 4] {
        [
            point(0.0, 0.0),
            point(1.0, 0.0),
            point(2.0, 2.0),
            point(0.5, 1.0),
        ]
    }

    #[test]
    fn derive_figure_one() {
        let r = derive_report(fig1(), DEFAULT_REL_TOL).unwrap();
        assert!(r.ok);
        assert_eq!(r.count_class(PolygonClass::Parallelogram), 6);
        assert_eq!(r.congruence_pairs.len(), 3);
        assert!(r.parallelogram_relations.is_none());
        assert_eq!(r.input_class, PolygonClass::GenericQuad);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let r = derive_report(fig1(), DEFAULT_REL_TOL).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: DeriveReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let verts: [Point; 4] = std::array::from_fn(|k| to_point(back.input.vertices[k]));
        let again = derive_report(verts, back.tolerance).unwrap();
        assert_eq!(serde_json::to_string(&again).unwrap(), text);
    }

    #[test]
    fn hexagon_report_regular() {
        let v =
            std::array::from_fn(|k| Point::from_polar(1.0, std::f64::consts::FRAC_PI_3 * k as f64));
        let r = hexagon_report(v, COMPOUND_REL_TOL).unwrap();
        assert!(r.ok);
        assert_eq!(r.b_hexagon[0].word, "123564");
        assert_eq!(r.b_hexagon[1].word, "123456");
    }

    #[test]
    fn compound_scales() {
        assert_eq!(compound(DEFAULT_REL_TOL), COMPOUND_REL_TOL);
    }
}
