//! b-points of a quadrilateral and the parallelograms and squares built
//! from them.
//!
//! For a counterclockwise simple quadrilateral `[a1, a2, a3, a4]` with
//! half-angles `α1..α4` (summing to `π`), `b_{ijkl}` is the centre of the
//! half-turn `r_i r_j r_k r_l`, where `r_m` rotates about `a_m` by `α_m`.
//! Expanding the composition gives
//!
//! ```text
//! b_ijkl = ½ ( a_i (1 - u_i) + a_j u_i (1 - u_j)
//!            + a_k u_i u_j (1 - u_k) + a_l u_i u_j u_k (1 - u_l) ),   u_m = e^{iα_m}
//! ```
//!
//! which is what [`b_point`] evaluates. The composition itself lives in
//! [`crate::oracle`] and is only used to cross-check this formula.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::GeomError;
use crate::geom::{rotation_word, Angle, Point};
use crate::polygon;
use crate::symmetry::{act_on_word, CosetLabel, IndexWord, Word4};

/// A validated, counterclockwise simple quadrilateral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrilateral {
    vertices: [Point; 4],
    reversed: bool,
}

impl Quadrilateral {
    pub fn vertices(&self) -> &[Point; 4] {
        &self.vertices
    }

    /// Whether validation reversed the caller's vertex order.
    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    pub fn diameter(&self) -> f64 {
        polygon::diameter(&self.vertices)
    }

    pub fn is_convex(&self) -> bool {
        polygon::is_convex(&self.vertices)
    }
}

/// Checks simplicity and non-degeneracy and puts the vertices in
/// counterclockwise order (`[a1, a4, a3, a2]` if the input was clockwise).
pub fn validate(vertices: [Point; 4]) -> Result<Quadrilateral, GeomError> {
    let (vertices, reversed) = polygon::normalize(vertices)?;
    Ok(Quadrilateral { vertices, reversed })
}

/// Half of each interior angle; the four sum to `π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfAngles(pub [Angle; 4]);

impl HalfAngles {
    pub fn get(&self, label: u8) -> Angle {
        self.0[usize::from(label) - 1]
    }

    pub fn as_slice(&self) -> &[Angle] {
        &self.0
    }
}

pub fn half_angles(q: &Quadrilateral) -> Result<HalfAngles, GeomError> {
    let interior = polygon::interior_angles(&q.vertices)?;
    let alphas = interior.map(|a| Angle::from_radians(a / 2.0));
    debug_assert!((alphas.iter().copied().sum::<Angle>().radians() - PI).abs() <= 1e-9);
    Ok(HalfAngles(alphas))
}

/// Closed-form centre of `r_{w1} ∘ … ∘ r_{wn}` for angles summing to `π`.
///
/// Works for any number of vertices; labels in `word` are 1-based indices
/// into `points` and `angles`.
pub fn half_turn_center(points: &[Point], angles: &[Angle], word: &[u8]) -> Point {
    let mut prefix = Point::new(1.0, 0.0);
    let mut sum = Point::new(0.0, 0.0);
    for &label in word {
        let k = usize::from(label) - 1;
        let u = angles[k].unit();
        sum += points[k] * prefix * (1.0 - u);
        prefix *= u;
    }
    sum * 0.5
}

pub fn b_point(q: &Quadrilateral, angles: &HalfAngles, w: Word4) -> Point {
    half_turn_center(&q.vertices, &angles.0, w.labels())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolygonClass {
    GenericQuad,
    Parallelogram,
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedPolygon {
    pub label: CosetLabel,
    pub points: [Point; 4],
    pub class: PolygonClass,
}

impl DerivedPolygon {
    pub fn parallelogram_residual(&self) -> f64 {
        parallelogram_residual(&self.points)
    }

    pub fn square_residual(&self) -> f64 {
        square_residual(&self.points)
    }
}

fn relative(x: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        0.0
    } else {
        x / scale
    }
}

/// `|(p1 - p2) + (p3 - p4)|` over the diameter.
pub fn parallelogram_residual(p: &[Point; 4]) -> f64 {
    relative(((p[0] - p[1]) + (p[2] - p[3])).norm(), polygon::diameter(p))
}

/// Distance of `p1 - p2` from `±i (p2 - p3)`, over the diameter; either sign
/// is accepted.
pub fn square_residual(p: &[Point; 4]) -> f64 {
    let a = p[0] - p[1];
    let b = Point::i() * (p[1] - p[2]);
    relative((a - b).norm().min((a + b).norm()), polygon::diameter(p))
}

/// A point set with zero diameter is a (degenerate) square.
pub fn classify(points: &[Point; 4], rel_tol: f64) -> PolygonClass {
    if parallelogram_residual(points) > rel_tol {
        PolygonClass::GenericQuad
    } else if square_residual(points) > rel_tol {
        PolygonClass::Parallelogram
    } else {
        PolygonClass::Square
    }
}

fn derived_with(
    q: &Quadrilateral,
    angles: &HalfAngles,
    label: CosetLabel,
    rel_tol: f64,
) -> DerivedPolygon {
    let points = label.vertex_words().map(|w| b_point(q, angles, w));
    DerivedPolygon {
        label,
        points,
        class: classify(&points, rel_tol),
    }
}

pub fn derived_polygon(
    q: &Quadrilateral,
    label: CosetLabel,
    rel_tol: f64,
) -> Result<DerivedPolygon, GeomError> {
    let angles = half_angles(q)?;
    Ok(derived_with(q, &angles, label, rel_tol))
}

/// The six derived polygons, in [`CosetLabel::ALL`] order.
pub fn all_derived(q: &Quadrilateral, rel_tol: f64) -> Result<[DerivedPolygon; 6], GeomError> {
    let angles = half_angles(q)?;
    Ok(CosetLabel::ALL.map(|l| derived_with(q, &angles, l, rel_tol)))
}

/// Two derived polygons related by a rotation of their edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CongruencePair {
    pub first: CosetLabel,
    pub second: CosetLabel,
    /// `e^{i(α_{σ⁻¹1} + α_{σ⁻¹2})}`, with `σ` the first label's representative.
    pub rotation: Point,
    /// Worst edge-identity defect, relative to the input diameter.
    pub residual: f64,
}

pub const CONGRUENT_PAIRS: [(CosetLabel, CosetLabel); 3] = [
    (CosetLabel::Identity, CosetLabel::Swap13Swap24),
    (CosetLabel::Swap23, CosetLabel::Cycle1342),
    (CosetLabel::Swap24, CosetLabel::Swap13),
];

/// Checks the edge identities
///
/// ```text
/// b_1234 - b_1243 = e^{i(α1+α2)} (b_3421 - b_4321)
/// b_1234 - b_2134 = e^{i(α1+α2)} (b_3421 - b_3412)
/// ```
///
/// and their images under `(23)` and `(24)`. In polygon terms, with `p` the
/// first polygon and `s` the second: `p0 - p1 = ρ (s1 - s2)` and
/// `p0 - p3 = ρ (s1 - s0)`.
pub fn congruence_pairs(
    derived: &[DerivedPolygon; 6],
    angles: &HalfAngles,
    scale: f64,
) -> [CongruencePair; 3] {
    let find = |label: CosetLabel| {
        derived
            .iter()
            .find(|d| d.label == label)
            .expect("all six labels are present")
    };
    CONGRUENT_PAIRS.map(|(first, second)| {
        let inv = first.representative().inverse();
        let rotation = (angles.get(inv.apply(1)) + angles.get(inv.apply(2))).unit();
        let p = find(first).points;
        let s = find(second).points;
        let d1 = ((p[0] - p[1]) - rotation * (s[1] - s[2])).norm();
        let d2 = ((p[0] - p[3]) - rotation * (s[1] - s[0])).norm();
        CongruencePair {
            first,
            second,
            rotation,
            residual: relative(d1.max(d2), scale),
        }
    })
}

/// Best cyclic correspondence `q[(m + shift) % 4] = p[m] + offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationFit {
    pub shift: usize,
    pub offset: Point,
    /// Spread of the vertex differences, relative to the first polygon's diameter.
    pub residual: f64,
}

pub fn translation_fit(p: &[Point; 4], q: &[Point; 4]) -> TranslationFit {
    let scale = polygon::diameter(p);
    (0..4)
        .map(|shift| {
            let diffs: [Point; 4] = std::array::from_fn(|m| q[(m + shift) % 4] - p[m]);
            let offset = diffs.iter().sum::<Point>() / 4.0;
            let spread = diffs
                .iter()
                .map(|d| (d - offset).norm())
                .fold(0.0, f64::max);
            TranslationFit {
                shift,
                offset,
                residual: relative(2.0 * spread, scale),
            }
        })
        .min_by(|a, b| a.residual.total_cmp(&b.residual))
        .expect("four candidate shifts")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationRelation {
    pub first: CosetLabel,
    pub second: CosetLabel,
    pub fit: TranslationFit,
}

/// What the construction guarantees when the input is a parallelogram.
#[derive(Debug, Clone, PartialEq)]
pub struct ParallelogramReport {
    pub derived: [DerivedPolygon; 6],
    /// Square residuals of `e`, `(13)(24)`, `(24)`, `(13)`.
    pub squares: [(CosetLabel, f64); 4],
    pub translations: [TranslationRelation; 2],
    /// `b_1234 - b_1243 = -i (b_1234 - b_2134)`, relative to the diameter of `P^e`.
    pub right_angle_residual: f64,
}

impl ParallelogramReport {
    pub fn max_residual(&self) -> f64 {
        self.squares
            .iter()
            .map(|s| s.1)
            .chain(self.translations.iter().map(|t| t.fit.residual))
            .chain(std::iter::once(self.right_angle_residual))
            .fold(0.0, f64::max)
    }

    pub fn holds(&self, rel_tol: f64) -> bool {
        self.max_residual() <= rel_tol
            && self
                .derived
                .iter()
                .all(|d| d.class != PolygonClass::GenericQuad)
    }
}

pub const TRANSLATE_PAIRS: [(CosetLabel, CosetLabel); 2] = [
    (CosetLabel::Identity, CosetLabel::Swap13Swap24),
    (CosetLabel::Swap24, CosetLabel::Swap13),
];

pub fn parallelogram_relations(
    q: &Quadrilateral,
    rel_tol: f64,
) -> Result<ParallelogramReport, GeomError> {
    let residual = parallelogram_residual(q.vertices());
    if residual > rel_tol {
        return Err(GeomError::NotAParallelogram { residual });
    }
    let derived = all_derived(q, rel_tol)?;
    let get = |l: CosetLabel| derived[CosetLabel::ALL.iter().position(|&x| x == l).unwrap()];
    let squares = CosetLabel::SQUARE_PRODUCING.map(|l| (l, get(l).square_residual()));
    let translations = TRANSLATE_PAIRS.map(|(first, second)| TranslationRelation {
        first,
        second,
        fit: translation_fit(&get(first).points, &get(second).points),
    });
    // P^e = [b1234, b1243, b2143, b2134]
    let pe = get(CosetLabel::Identity).points;
    let lhs = pe[0] - pe[1];
    let rhs = -Point::i() * (pe[0] - pe[3]);
    let right_angle_residual = relative((lhs - rhs).norm(), polygon::diameter(&pe));
    Ok(ParallelogramReport {
        derived,
        squares,
        translations,
        right_angle_residual,
    })
}

/// One output of the two-stage construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineSquare {
    pub stage1: CosetLabel,
    pub stage2: CosetLabel,
    pub square: DerivedPolygon,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOutput {
    pub parallelograms: [DerivedPolygon; 6],
    /// 24 entries, grouped by stage-1 label in [`CosetLabel::ALL`] order.
    pub squares: Vec<PipelineSquare>,
}

/// Derives six parallelograms from `q`, then four squares from each.
///
/// Each stage-1 parallelogram is revalidated (and reoriented
/// counterclockwise if needed) before it is fed back in; a collapsed one
/// aborts with [`GeomError::DegenerateIntermediate`].
pub fn squares_pipeline(q: &Quadrilateral, rel_tol: f64) -> Result<PipelineOutput, GeomError> {
    let parallelograms = all_derived(q, rel_tol)?;
    let mut squares = Vec::with_capacity(24);
    for parent in &parallelograms {
        let wrap = |e: GeomError| GeomError::DegenerateIntermediate {
            label: parent.label,
            source: Box::new(e),
        };
        let inner = validate(parent.points).map_err(wrap)?;
        let angles = half_angles(&inner).map_err(wrap)?;
        for stage2 in CosetLabel::SQUARE_PRODUCING {
            squares.push(PipelineSquare {
                stage1: parent.label,
                stage2,
                square: derived_with(&inner, &angles, stage2, rel_tol),
            });
        }
    }
    Ok(PipelineOutput {
        parallelograms,
        squares,
    })
}

/// Number of squares not within `rel_threshold · scale` (Hausdorff) of an
/// earlier one.
pub fn distinct_count(squares: &[PipelineSquare], rel_threshold: f64, scale: f64) -> usize {
    let mut kept: Vec<&[Point; 4]> = Vec::new();
    for s in squares {
        let pts = &s.square.points;
        if kept
            .iter()
            .all(|k| polygon::hausdorff(k.as_slice(), pts) > rel_threshold * scale)
        {
            kept.push(pts);
        }
    }
    kept.len()
}

/// `(r1 r2 r3 r4 r1 r2 r4 r3)(r2 r1 r4 r3 r2 r1 r3 r4)`, which should be the identity.
pub const EIGHTFOLD_IDENTITY_WORD: [u8; 16] = [1, 2, 3, 4, 1, 2, 4, 3, 2, 1, 4, 3, 2, 1, 3, 4];

/// Distance of the sixteen-letter product from the identity motion, with
/// the translation measured against the input diameter.
pub fn eightfold_identity_residual(q: &Quadrilateral, angles: &HalfAngles) -> f64 {
    rotation_word(q.vertices(), angles.as_slice(), &EIGHTFOLD_IDENTITY_WORD)
        .distance_from_identity(q.diameter())
}

/// Worst involution defect of `r_i r_j r_k r_l` over all 24 words.
pub fn worst_involution_defect(q: &Quadrilateral, angles: &HalfAngles) -> f64 {
    IndexWord::<4>::all()
        .into_iter()
        .map(|w| rotation_word(q.vertices(), angles.as_slice(), w.labels()).involution_defect())
        .fold(0.0, f64::max)
}

/// Applies `σ` to the vertex labels: vertex `m` of the result is vertex
/// `σ(m)` of the input, angles included.
pub fn relabel(
    points: &[Point; 4],
    angles: &HalfAngles,
    sigma: crate::symmetry::Perm4,
) -> ([Point; 4], HalfAngles) {
    let pts = std::array::from_fn(|m| points[usize::from(sigma.apply(m as u8 + 1)) - 1]);
    let alphas = std::array::from_fn(|m| angles.get(sigma.apply(m as u8 + 1)));
    (pts, HalfAngles(alphas))
}

/// Word on the original labels that names the same b-point as `w` does on
/// the `σ`-relabelled quadrilateral.
pub fn relabelled_word(sigma: crate::symmetry::Perm4, w: Word4) -> Word4 {
    act_on_word(sigma.inverse(), w)
}
