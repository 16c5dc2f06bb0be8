//! Coordinate input: `--points x,y ...` or a JSON file `{"vertices": [[x, y], ...]}`.
//!
//! A coordinate is a decimal number or a ratio such as `1/2` or `-3/4`.
//! Ratios of integers are divided once, so `1/3` is the correctly rounded
//! double nearest to one third.

use std::path::Path;

use quadsq_core::{point, Point};
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("invalid coordinate {0:?}")]
    Coordinate(String),
    #[error("invalid point {0:?}: expected X,Y")]
    Pair(String),
    #[error("expected {expected} vertices, got {got}")]
    Count { expected: usize, got: usize },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn parse_coordinate(s: &str) -> Result<f64, InputError> {
    let s = s.trim();
    let bad = || InputError::Coordinate(s.to_owned());
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let (num, den) = (num.trim(), den.trim());
            match (num.parse::<i64>(), den.parse::<i64>()) {
                // Exact below 2^53; one rounding in the division.
                (Ok(n), Ok(d))
                    if d != 0 && n.unsigned_abs() < (1 << 53) && d.unsigned_abs() < (1 << 53) =>
                {
                    n as f64 / d as f64
                }
                _ => {
                    let n: f64 = num.parse().map_err(|_| bad())?;
                    let d: f64 = den.parse().map_err(|_| bad())?;
                    if d == 0.0 {
                        return Err(bad());
                    }
                    n / d
                }
            }
        }
        None => s.parse::<f64>().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

pub fn parse_pair(s: &str) -> Result<Point, InputError> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| InputError::Pair(s.to_owned()))?;
    Ok(point(parse_coordinate(x)?, parse_coordinate(y)?))
}

pub fn parse_points<const N: usize>(args: &[String]) -> Result<[Point; N], InputError> {
    if args.len() != N {
        return Err(InputError::Count {
            expected: N,
            got: args.len(),
        });
    }
    let pts: Vec<Point> = args
        .iter()
        .map(|a| parse_pair(a))
        .collect::<Result<_, _>>()?;
    Ok(pts.try_into().expect("length checked"))
}

#[derive(Deserialize)]
struct VertexFile {
    vertices: Vec<[Value; 2]>,
}

fn coordinate_value(v: &Value) -> Result<f64, InputError> {
    match v {
        Value::Number(n) => n
            .as_f64()
            .filter(|x| x.is_finite())
            .ok_or_else(|| InputError::Coordinate(n.to_string())),
        Value::String(s) => parse_coordinate(s),
        other => Err(InputError::Coordinate(other.to_string())),
    }
}

pub fn parse_vertex_json<const N: usize>(text: &str) -> Result<[Point; N], InputError> {
    let file: VertexFile = serde_json::from_str(text)?;
    if file.vertices.len() != N {
        return Err(InputError::Count {
            expected: N,
            got: file.vertices.len(),
        });
    }
    let pts: Vec<Point> = file
        .vertices
        .iter()
        .map(|[x, y]| Ok(point(coordinate_value(x)?, coordinate_value(y)?)))
        .collect::<Result<_, InputError>>()?;
    Ok(pts.try_into().expect("length checked"))
}

pub fn load_vertex_file<const N: usize>(path: &Path) -> Result<[Point; N], InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_vertex_json(&text)
}
