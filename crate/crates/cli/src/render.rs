//! SVG figures: the input polygon in red plus the derived polygons.
//!
//! Colours follow a fixed table. For the parallelogram stage the three
//! congruent pairs are blue, yellow and green; for the square stage the
//! squares are coloured by the stage-1 parallelogram they came from.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use quadsq_core::quad::{all_derived, squares_pipeline, validate};
use quadsq_core::{CosetLabel, GeomError, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Stage {
    Parallelograms,
    Squares,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColorMap {
    pub input: String,
    pub by_label: BTreeMap<CosetLabel, String>,
}

impl ColorMap {
    pub fn for_stage(stage: Stage) -> Self {
        use CosetLabel::*;
        let table: [(CosetLabel, &str); 6] = match stage {
            Stage::Parallelograms => [
                (Identity, "blue"),
                (Swap13Swap24, "blue"),
                (Swap23, "yellow"),
                (Cycle1342, "yellow"),
                (Swap24, "green"),
                (Swap13, "green"),
            ],
            Stage::Squares => [
                (Identity, "blue"),
                (Swap13Swap24, "green"),
                (Swap23, "yellow"),
                (Cycle1342, "magenta"),
                (Swap24, "black"),
                (Swap13, "cyan"),
            ],
        };
        ColorMap {
            input: "red".into(),
            by_label: table.iter().map(|&(l, c)| (l, c.to_owned())).collect(),
        }
    }

    /// Applies an override of the form `input=COLOR` or `LABEL=COLOR`, e.g. `(23)=orange`.
    pub fn apply_override(&mut self, text: &str) -> Result<(), String> {
        let (key, color) = text
            .split_once('=')
            .ok_or_else(|| format!("color override {text:?} is not KEY=COLOR"))?;
        let color = color.trim();
        if color.is_empty() || !color.chars().all(|c| c.is_ascii_alphanumeric() || c == '#') {
            return Err(format!("invalid color {color:?}"));
        }
        if key == "input" {
            self.input = color.to_owned();
        } else {
            let label: CosetLabel = key.parse().map_err(|e| format!("{e}"))?;
            self.by_label.insert(label, color.to_owned());
        }
        Ok(())
    }
}

/// One stroked polygon of the figure.
#[derive(Debug, Clone, PartialEq)]
pub struct Shape {
    pub class: &'static str,
    pub stage1: Option<CosetLabel>,
    pub stage2: Option<CosetLabel>,
    pub color: String,
    pub points: Vec<Point>,
}

pub fn figure_shapes(
    vertices: [Point; 4],
    stage: Stage,
    colors: &ColorMap,
    tol: f64,
) -> Result<Vec<Shape>, GeomError> {
    let q = validate(vertices)?;
    let mut shapes = vec![Shape {
        class: "input",
        stage1: None,
        stage2: None,
        color: colors.input.clone(),
        points: vertices.to_vec(),
    }];
    match stage {
        Stage::Parallelograms => {
            for d in all_derived(&q, tol)? {
                shapes.push(Shape {
                    class: "derived",
                    stage1: Some(d.label),
                    stage2: None,
                    color: colors.by_label[&d.label].clone(),
                    points: d.points.to_vec(),
                });
            }
        }
        Stage::Squares => {
            for s in squares_pipeline(&q, tol)?.squares {
                shapes.push(Shape {
                    class: "square",
                    stage1: Some(s.stage1),
                    stage2: Some(s.stage2),
                    color: colors.by_label[&s.stage1].clone(),
                    points: s.square.points.to_vec(),
                });
            }
        }
    }
    Ok(shapes)
}

fn num(x: f64) -> String {
    // Avoid "-0.000000".
    let s = format!("{:.6}", x);
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000000".into()
    } else {
        s
    }
}

/// Serializes shapes with a y-up coordinate frame and a viewBox that fits
/// every vertex with a 5% margin.
pub fn to_svg(shapes: &[Shape]) -> String {
    let all = shapes.iter().flat_map(|s| s.points.iter());
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for p in all {
        min_x = min_x.min(p.re);
        max_x = max_x.max(p.re);
        min_y = min_y.min(-p.im);
        max_y = max_y.max(-p.im);
    }
    let extent = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let margin = 0.05 * extent;
    let (vx, vy) = (min_x - margin, min_y - margin);
    let (vw, vh) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let width = 800.0;
    let height = width * vh / vw;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(vx),
        num(vy),
        num(vw),
        num(vh),
        num(width),
        num(height)
    );
    svg.push_str("  <g fill=\"none\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n");
    for s in shapes {
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|p| format!("{},{}", num(p.re), num(-p.im)))
            .collect();
        let mut attrs = format!("class=\"{}\"", s.class);
        if let Some(l) = s.stage1 {
            let _ = write!(attrs, " data-stage1=\"{l}\"");
        }
        if let Some(l) = s.stage2 {
            let _ = write!(attrs, " data-stage2=\"{l}\"");
        }
        let _ = writeln!(
            svg,
            "    <polygon {attrs} stroke=\"{}\" vector-effect=\"non-scaling-stroke\" points=\"{}\"/>",
            s.color,
            pts.join(" ")
        );
    }
    svg.push_str("  </g>\n</svg>\n");
    svg
}

pub fn render(
    vertices: [Point; 4],
    stage: Stage,
    colors: &ColorMap,
    tol: f64,
) -> Result<String, GeomError> {
    Ok(to_svg(&figure_shapes(vertices, stage, colors, tol)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use quadsq_core::point;

    #[test]
    fn caption_colors() {
        let p = ColorMap::for_stage(Stage::Parallelograms);
        assert_eq!(p.input, "red");
        assert_eq!(p.by_label[&CosetLabel::Cycle1342], "yellow");
        let s = ColorMap::for_stage(Stage::Squares);
        assert_eq!(s.by_label[&CosetLabel::Cycle1342], "magenta");
        assert_eq!(s.by_label[&CosetLabel::Swap13], "cyan");
    }

    #[test]
    fn overrides() {
        let mut c = ColorMap::for_stage(Stage::Parallelograms);
        c.apply_override("(23)=orange").unwrap();
        c.apply_override("input=#ff0000").unwrap();
        assert_eq!(c.by_label[&CosetLabel::Swap23], "orange");
        assert_eq!(c.input, "#ff0000");
        assert!(c.apply_override("(12)=red").is_err());
        assert!(c.apply_override("e=\"/><script").is_err());
        assert!(c.apply_override("nocolor").is_err());
    }

    #[test]
    fn negative_zero_is_printed_as_zero() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(-0.5), "-0.500000");
    }

    #[test]
    fn svg_counts_polygons() {
        let v = [
            point(0.0, 0.0),
            point(1.0, 0.0),
            point(2.0, 2.0),
            point(0.5, 1.0),
        ];
        let svg = render(
            v,
            Stage::Parallelograms,
            &ColorMap::for_stage(Stage::Parallelograms),
            1e-9,
        )
        .unwrap();
        assert_eq!(svg.matches("<polygon").count(), 7);
        assert_eq!(svg.matches("class=\"input\" stroke=\"red\"").count(), 1);
    }
}
