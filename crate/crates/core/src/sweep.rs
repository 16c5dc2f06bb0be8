//! Seeded verification sweeps.
//!
//! Case `k` of a sweep starting at `seed` uses `Seed(seed + k)`. Cases are
//! independent, so with the `parallel` feature they run on the rayon pool;
//! results are collected in seed order either way, which keeps summaries
//! identical between [`Execution::Sequential`] and [`Execution::Parallel`].

use serde::{Deserialize, Serialize};

use crate::error::GeomError;
use crate::geom::Point;
use crate::hexagon::{hexagon_vector_sum, hexagon_word_product, quarter_angles};
use crate::oracle::{
    b_point_by_composition, random_parallelogram, random_simple_hexagon,
    random_simple_quadrilateral, Seed, SplitMix64,
};
use crate::quad::{
    all_derived, b_point, congruence_pairs, eightfold_identity_residual, half_angles,
    half_turn_center, parallelogram_relations, relabel, relabelled_word, validate,
    worst_involution_defect, Quadrilateral,
};
use crate::symmetry::{CosetLabel, IndexWord, Perm4};
use crate::{COMPOUND_REL_TOL, DEFAULT_REL_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Runs on rayon when the `parallel` feature is enabled, sequentially otherwise.
    #[default]
    Parallel,
}

/// Evaluates `f` on `count` consecutive seeds, preserving order.
pub fn map_seeds<T, F>(exec: Execution, start: u64, count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Seed) -> T + Sync + Send,
{
    let seeds = (0..count).map(move |k| Seed(start.wrapping_add(k)));
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count)
                .into_par_iter()
                .map(|k| f(Seed(start.wrapping_add(k))))
                .collect()
        }
        _ => seeds.map(f).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Quad,
    Parallelogram,
    Hexagon,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quad" => Ok(Mode::Quad),
            "parallelogram" => Ok(Mode::Parallelogram),
            "hexagon" => Ok(Mode::Hexagon),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Relative tolerances used by the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Single-construction identities (default `1e-9`).
    pub rel: f64,
    /// Compounded quantities: sixteen- and 36-letter words, six-fold involutions (default `1e-8`).
    pub compound: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            rel: DEFAULT_REL_TOL,
            compound: COMPOUND_REL_TOL,
        }
    }
}

impl Tolerances {
    /// Scales both tolerances so that `rel` becomes `rel`.
    pub fn with_rel(rel: f64) -> Self {
        Tolerances {
            rel,
            compound: rel * (COMPOUND_REL_TOL / DEFAULT_REL_TOL),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub name: String,
    pub tolerance: f64,
    pub max_residual: f64,
    pub worst_seed: u64,
    /// Seeds whose residual exceeded the tolerance, in order.
    pub violations: Vec<u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub mode: Mode,
    pub seed: u64,
    pub count: u64,
    pub families: Vec<FamilySummary>,
    /// Seeds for which no valid input could be sampled.
    pub sampling_failures: Vec<u64>,
    pub passed: bool,
}

impl SweepSummary {
    pub fn family(&self, name: &str) -> Option<&FamilySummary> {
        self.families.iter().find(|f| f.name == name)
    }
}

struct Family {
    name: &'static str,
    tolerance: f64,
}

#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn summarize(
    mode: Mode,
    seed: u64,
    count: u64,
    families: &[Family],
    cases: Vec<(Seed, Result<Vec<f64>, GeomError>)>,
) -> SweepSummary {
    let mut out: Vec<FamilySummary> = families
        .iter()
        .map(|f| FamilySummary {
            name: f.name.to_owned(),
            tolerance: f.tolerance,
            max_residual: 0.0,
            worst_seed: seed,
            violations: Vec::new(),
            passed: true,
        })
        .collect();
    let mut sampling_failures = Vec::new();
    for (s, case) in cases {
        let residuals = match case {
            Ok(r) => r,
            Err(_) => {
                sampling_failures.push(s.0);
                continue;
            }
        };
        for (fam, r) in out.iter_mut().zip(residuals) {
            // NaN counts as a violation.
            if !(r <= fam.max_residual) {
                fam.max_residual = if r.is_nan() {
                    f64::NAN
                } else {
                    r.max(fam.max_residual)
                };
                fam.worst_seed = s.0;
            }
            if !(r <= fam.tolerance) {
                fam.violations.push(s.0);
                fam.passed = false;
            }
        }
    }
    let passed = sampling_failures.is_empty() && out.iter().all(|f| f.passed);
    SweepSummary {
        mode,
        seed,
        count,
        families: out,
        sampling_failures,
        passed,
    }
}

pub mod names {
    pub const PARALLELOGRAM: &str = "derived_parallelograms";
    pub const ORACLE: &str = "oracle_agreement";
    pub const INVOLUTION: &str = "fourfold_involution";
    pub const EIGHTFOLD: &str = "eightfold_identity";
    pub const CONGRUENCE: &str = "congruence_identities";
    pub const SIMILARITY: &str = "similarity_equivariance";
    pub const RELABEL: &str = "relabel_equivariance";

    pub const SQUARES: &str = "squares";
    pub const TRANSLATIONS: &str = "square_translations";
    pub const SIDE_PARALLELOGRAMS: &str = "side_parallelograms";
    pub const RIGHT_ANGLE: &str = "right_angle_relation";

    pub const QUARTER_SUM: &str = "quarter_angle_sum";
    pub const WORD_IDENTITY: &str = "hexagon_word_identity";
    pub const VECTOR_SUM: &str = "hexagon_vector_sum";
    pub const SIXFOLD_INVOLUTION: &str = "sixfold_involution";
}

/// Worst relative parallelogram residual over the six derived polygons.
pub fn derived_parallelogram_residual(q: &Quadrilateral) -> Result<f64, GeomError> {
    Ok(all_derived(q, DEFAULT_REL_TOL)?
        .iter()
        .map(|d| d.parallelogram_residual())
        .fold(0.0, f64::max))
}

/// Worst `|closed form - composition| / diameter` over all 24 words.
pub fn oracle_residual(q: &Quadrilateral) -> Result<f64, GeomError> {
    let h = half_angles(q)?;
    let scale = q.diameter();
    let mut worst: f64 = 0.0;
    for w in IndexWord::<4>::all() {
        let closed = b_point(q, &h, w);
        let composed = b_point_by_composition(q.vertices(), h.as_slice(), w.labels())?;
        worst = worst.max((closed - composed).norm() / scale);
    }
    Ok(worst)
}

/// Applies a seeded direct similarity `z ↦ λz + c` and compares all 24
/// b-points with the transformed originals.
pub fn similarity_residual(q: &Quadrilateral, seed: Seed) -> Result<f64, GeomError> {
    let mut rng = SplitMix64::new(Seed(seed.0 ^ 0x5EED_5EED_5EED_5EED));
    let lambda = Point::from_polar(
        0.1 + 9.9 * rng.next_f64(),
        std::f64::consts::TAU * rng.next_f64(),
    );
    let c = rng.next_point();
    let moved = validate(q.vertices().map(|a| lambda * a + c))?;
    let h = half_angles(q)?;
    let hm = half_angles(&moved)?;
    let scale = moved.diameter();
    Ok(IndexWord::<4>::all()
        .into_iter()
        .map(|w| (b_point(&moved, &hm, w) - (lambda * b_point(q, &h, w) + c)).norm() / scale)
        .fold(0.0, f64::max))
}

/// Relabels vertices and angles by every `σ ∈ S4`, and separately rotates
/// the vertex list cyclically (recomputing the angles from the new
/// polygon); b-points must follow the words.
pub fn relabel_residual(q: &Quadrilateral) -> Result<f64, GeomError> {
    let h = half_angles(q)?;
    let scale = q.diameter();
    let mut worst: f64 = 0.0;
    let words = IndexWord::<4>::all();
    for sigma in Perm4::all() {
        let (pts, ang) = relabel(q.vertices(), &h, sigma);
        for &w in &words {
            let moved = half_turn_center(&pts, ang.as_slice(), w.labels());
            let orig = b_point(q, &h, relabelled_word(sigma, w));
            worst = worst.max((moved - orig).norm() / scale);
        }
    }
    let v = q.vertices();
    for shift in 1..4u8 {
        let sigma = Perm4::from_images(std::array::from_fn(|m| (m as u8 + shift) % 4 + 1))
            .expect("cyclic shift");
        let shifted = validate(std::array::from_fn(|m| {
            v[usize::from(sigma.apply(m as u8 + 1)) - 1]
        }))?;
        let hs = half_angles(&shifted)?;
        for &w in &words {
            let moved = b_point(&shifted, &hs, w);
            let orig = b_point(q, &h, relabelled_word(sigma, w));
            worst = worst.max((moved - orig).norm() / scale);
        }
    }
    Ok(worst)
}

fn quad_case(seed: Seed) -> Result<Vec<f64>, GeomError> {
    let q = random_simple_quadrilateral(seed)?;
    let h = half_angles(&q)?;
    let derived = all_derived(&q, DEFAULT_REL_TOL)?;
    let congruence = congruence_pairs(&derived, &h, q.diameter())
        .iter()
        .map(|p| p.residual)
        .fold(0.0, f64::max);
    Ok(vec![
        derived
            .iter()
            .map(|d| d.parallelogram_residual())
            .fold(0.0, f64::max),
        oracle_residual(&q)?,
        worst_involution_defect(&q, &h),
        eightfold_identity_residual(&q, &h),
        congruence,
        similarity_residual(&q, seed)?,
        relabel_residual(&q)?,
    ])
}

fn parallelogram_case(seed: Seed, rel_tol: f64) -> Result<Vec<f64>, GeomError> {
    let q = random_parallelogram(seed)?;
    let r = parallelogram_relations(&q, rel_tol)?;
    let side = [CosetLabel::Swap23, CosetLabel::Cycle1342]
        .iter()
        .map(|l| {
            r.derived
                .iter()
                .find(|d| d.label == *l)
                .map(|d| d.parallelogram_residual())
                .unwrap_or(f64::NAN)
        })
        .fold(0.0, f64::max);
    Ok(vec![
        r.squares.iter().map(|s| s.1).fold(0.0, f64::max),
        r.translations
            .iter()
            .map(|t| t.fit.residual)
            .fold(0.0, f64::max),
        side,
        r.right_angle_residual,
    ])
}

const HEX_WORDS: [[u8; 6]; 6] = [
    [1, 2, 3, 4, 5, 6],
    [1, 2, 3, 5, 6, 4],
    [2, 3, 1, 5, 6, 4],
    [2, 3, 1, 6, 4, 5],
    [3, 1, 2, 6, 4, 5],
    [3, 1, 2, 4, 5, 6],
];

fn hexagon_case(seed: Seed) -> Result<Vec<f64>, GeomError> {
    let h = random_simple_hexagon(seed)?;
    let a = quarter_angles(&h)?;
    let scale = h.diameter();
    let involution = HEX_WORDS
        .iter()
        .map(|w| crate::geom::rotation_word(h.vertices(), a.as_slice(), w).involution_defect())
        .fold(0.0, f64::max);
    Ok(vec![
        (a.sum() - std::f64::consts::PI).abs(),
        hexagon_word_product(&h, &a).distance_from_identity(scale),
        hexagon_vector_sum(&h, &a).norm() / scale,
        involution,
    ])
}

pub fn run(mode: Mode, seed: u64, count: u64, tol: Tolerances, exec: Execution) -> SweepSummary {
    use names::*;
    match mode {
        Mode::Quad => {
            let fams = [
                Family {
                    name: PARALLELOGRAM,
                    tolerance: tol.rel,
                },
                Family {
                    name: ORACLE,
                    tolerance: tol.rel,
                },
                Family {
                    name: INVOLUTION,
                    tolerance: tol.rel,
                },
                Family {
                    name: EIGHTFOLD,
                    tolerance: tol.compound,
                },
                Family {
                    name: CONGRUENCE,
                    tolerance: tol.rel,
                },
                Family {
                    name: SIMILARITY,
                    tolerance: tol.rel,
                },
                Family {
                    name: RELABEL,
                    tolerance: tol.rel,
                },
            ];
            let cases = map_seeds(exec, seed, count, |s| (s, quad_case(s)));
            summarize(mode, seed, count, &fams, cases)
        }
        Mode::Parallelogram => {
            let fams = [
                Family {
                    name: SQUARES,
                    tolerance: tol.rel,
                },
                Family {
                    name: TRANSLATIONS,
                    tolerance: tol.rel,
                },
                Family {
                    name: SIDE_PARALLELOGRAMS,
                    tolerance: tol.rel,
                },
                Family {
                    name: RIGHT_ANGLE,
                    tolerance: tol.rel,
                },
            ];
            let cases = map_seeds(exec, seed, count, |s| (s, parallelogram_case(s, tol.rel)));
            summarize(mode, seed, count, &fams, cases)
        }
        Mode::Hexagon => {
            let fams = [
                Family {
                    name: QUARTER_SUM,
                    tolerance: DEFAULT_REL_TOL,
                },
                Family {
                    name: WORD_IDENTITY,
                    tolerance: tol.compound,
                },
                Family {
                    name: VECTOR_SUM,
                    tolerance: tol.compound,
                },
                Family {
                    name: SIXFOLD_INVOLUTION,
                    tolerance: tol.compound,
                },
            ];
            let cases = map_seeds(exec, seed, count, |s| (s, hexagon_case(s)));
            summarize(mode, seed, count, &fams, cases)
        }
    }
}
