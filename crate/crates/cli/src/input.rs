//! Parsing of `--triangle` and `--point` values.

use std::fmt;
use std::str::FromStr;

use pedal_geometry::triangle::{center, CenterKind, Triangle};
use pedal_geometry::{GeomError, HPoint};

/// Malformed user input; always maps to exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn number(s: &str) -> Result<f64, InputError> {
    let v: f64 = s.trim().parse().map_err(|_| InputError(format!("not a number: {s:?}")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(InputError(format!("not a finite number: {s:?}")))
    }
}

/// `"x,y"`.
pub fn parse_pair(s: &str) -> Result<(f64, f64), InputError> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| InputError(format!("expected \"x,y\", got {s:?}")))?;
    Ok((number(x)?, number(y)?))
}

/// `"x1,y1 x2,y2 x3,y3"`; collinear vertices are rejected as input errors.
pub fn parse_triangle(s: &str) -> Result<Triangle, InputError> {
    let pairs = s.split_whitespace().map(parse_pair).collect::<Result<Vec<_>, _>>()?;
    let [a, b, c]: [(f64, f64); 3] = pairs
        .try_into()
        .map_err(|v: Vec<_>| InputError(format!("expected 3 vertices, got {}", v.len())))?;
    Triangle::from_xy([a, b, c]).map_err(|e| InputError(format!("invalid triangle: {}", e.name())))
}

/// Choice of `P` for a scene.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointSpec {
    Xy(f64, f64),
    Bevan,
    Incenter,
    /// `I + t (O - I)`.
    IncenterCircumcenter(f64),
}

impl FromStr for PointSpec {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "bevan" => Ok(PointSpec::Bevan),
            "incenter" => Ok(PointSpec::Incenter),
            other => match other.strip_prefix("io:") {
                Some(t) => Ok(PointSpec::IncenterCircumcenter(number(t)?)),
                None => parse_pair(other).map(|(x, y)| PointSpec::Xy(x, y)),
            },
        }
    }
}

impl PointSpec {
    pub fn resolve(&self, t: &Triangle) -> Result<HPoint, GeomError> {
        match *self {
            PointSpec::Xy(x, y) => HPoint::xy(x, y),
            PointSpec::Bevan => Ok(center(t, CenterKind::Bevan)),
            PointSpec::Incenter => Ok(center(t, CenterKind::Incenter)),
            PointSpec::IncenterCircumcenter(s) => {
                let (ix, iy) = center(t, CenterKind::Incenter).to_xy()?;
                let (ox, oy) = center(t, CenterKind::Circumcenter).to_xy()?;
                HPoint::xy(ix + s * (ox - ix), iy + s * (oy - iy))
            }
        }
    }
}
