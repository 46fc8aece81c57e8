//! Deterministic SVG figures of a scene.
//!
//! Bounded elements (segments, circles, point markers) fix the viewBox;
//! lines and the conic are clipped against it. Elements are written sorted
//! by layer and then by name, with every coordinate printed to six decimals,
//! so the same scene and layers always give the same bytes.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use pedal_geometry::theorems::Scene;
use pedal_geometry::{HLine, HPoint};

use crate::input::InputError;

/// Samples taken around the conic.
pub const CONIC_SAMPLES: usize = 256;
/// Padding added on every side, as a fraction of the content extent.
const PADDING: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Circles,
    Conic,
    NagelLine,
    Offsets,
    Pedal,
    RadicalAxis,
    Triangle,
}

impl Layer {
    pub const ALL: [Layer; 7] = [
        Layer::Circles,
        Layer::Conic,
        Layer::NagelLine,
        Layer::Offsets,
        Layer::Pedal,
        Layer::RadicalAxis,
        Layer::Triangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Layer::Circles => "circles",
            Layer::Conic => "conic",
            Layer::NagelLine => "nagel-line",
            Layer::Offsets => "offsets",
            Layer::Pedal => "pedal",
            Layer::RadicalAxis => "radical-axis",
            Layer::Triangle => "triangle",
        }
    }

    fn color(self) -> &'static str {
        match self {
            Layer::Circles => "#c0392b",
            Layer::Conic => "#d35400",
            Layer::NagelLine => "#27ae60",
            Layer::Offsets => "#16a085",
            Layer::Pedal => "#2471a3",
            Layer::RadicalAxis => "#8e44ad",
            Layer::Triangle => "#000000",
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Layer {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Layer::ALL
            .into_iter()
            .find(|l| l.name() == s.trim())
            .ok_or_else(|| InputError(format!("unknown layer {s:?}")))
    }
}

/// Comma-separated layer list; empty entries are ignored.
pub fn parse_layers(s: &str) -> Result<BTreeSet<Layer>, InputError> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(str::parse).collect()
}

#[derive(Debug, Clone)]
enum Shape {
    Segment(HPoint, HPoint),
    Circle((f64, f64), f64),
    Line(HLine),
    /// The scene conic, sampled by the pencil of lines through `P`.
    Conic,
    Marker(HPoint),
}

#[derive(Debug, Clone)]
struct Element {
    layer: Layer,
    name: String,
    shape: Shape,
}

fn segments(layer: Layer, names: [&str; 3], pts: [HPoint; 3], out: &mut Vec<Element>) {
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        out.push(Element {
            layer,
            name: format!("{}{}", names[i], names[j]),
            shape: Shape::Segment(pts[i], pts[j]),
        });
    }
}

fn marker(layer: Layer, name: &str, p: HPoint, out: &mut Vec<Element>) {
    out.push(Element {
        layer,
        name: name.to_string(),
        shape: Shape::Marker(p),
    });
}

fn elements(scene: &Scene, layers: &BTreeSet<Layer>) -> Vec<Element> {
    let mut out = Vec::new();
    for &layer in layers {
        match layer {
            Layer::Triangle => {
                segments(layer, ["A", "B", "C"], scene.base.vertices(), &mut out);
                for (n, p) in ["A", "B", "C"].into_iter().zip(scene.base.vertices()) {
                    marker(layer, n, p, &mut out);
                }
            }
            Layer::Pedal => {
                segments(layer, ["A_P", "B_P", "C_P"], scene.pedal.vertices(), &mut out);
                for (n, p) in ["A_P", "B_P", "C_P", "P"].into_iter().zip(scene.pedal.vertices().into_iter().chain([scene.p])) {
                    marker(layer, n, p, &mut out);
                }
            }
            Layer::Offsets => {
                segments(layer, ["A1", "B1", "C1"], scene.offsets.first(), &mut out);
                segments(layer, ["A2", "B2", "C2"], scene.offsets.second(), &mut out);
                let o = &scene.offsets;
                for (n, p) in [("A1", o.a1), ("A2", o.a2), ("B1", o.b1), ("B2", o.b2), ("C1", o.c1), ("C2", o.c2)] {
                    marker(layer, n, p, &mut out);
                }
            }
            Layer::Circles => {
                for (n, k) in [("O1", scene.o1), ("O2", scene.o2)] {
                    out.push(Element {
                        layer,
                        name: n.to_string(),
                        shape: Shape::Circle(k.center_xy(), k.radius()),
                    });
                    marker(layer, &format!("{n}c"), *k.center(), &mut out);
                }
            }
            Layer::RadicalAxis => {
                out.push(Element {
                    layer,
                    name: "rad_axis".into(),
                    shape: Shape::Line(scene.rad_axis),
                });
                marker(layer, "H'", scene.h_prime, &mut out);
            }
            Layer::NagelLine => {
                if let Ok(l) = pedal_geometry::projective::join(&scene.i, &scene.nagel) {
                    out.push(Element {
                        layer,
                        name: "nagel_line".into(),
                        shape: Shape::Line(l),
                    });
                }
                for (n, p) in [("G", scene.centroid), ("I", scene.i), ("N", scene.nagel)] {
                    marker(layer, n, p, &mut out);
                }
            }
            Layer::Conic => {
                out.push(Element {
                    layer,
                    name: "c_conic".into(),
                    shape: Shape::Conic,
                });
                marker(layer, "P", scene.p, &mut out);
                marker(layer, "O_P", scene.o_p, &mut out);
            }
        }
    }
    out.sort_by(|a, b| (a.layer, &a.name).cmp(&(b.layer, &b.name)));
    out
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    min: (f64, f64),
    max: (f64, f64),
}

impl Bounds {
    fn empty() -> Self {
        Self {
            min: (f64::INFINITY, f64::INFINITY),
            max: (f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, (x, y): (f64, f64)) {
        self.min = (self.min.0.min(x), self.min.1.min(y));
        self.max = (self.max.0.max(x), self.max.1.max(y));
    }

    fn is_empty(&self) -> bool {
        !(self.min.0 <= self.max.0)
    }

    fn padded(&self) -> Self {
        let extent = (self.max.0 - self.min.0).max(self.max.1 - self.min.1).max(1e-9);
        let px = (self.max.0 - self.min.0).max(extent * 1e-3) * PADDING;
        let py = (self.max.1 - self.min.1).max(extent * 1e-3) * PADDING;
        Self {
            min: (self.min.0 - px, self.min.1 - py),
            max: (self.max.0 + px, self.max.1 + py),
        }
    }

    fn width(&self) -> f64 {
        self.max.0 - self.min.0
    }

    fn height(&self) -> f64 {
        self.max.1 - self.min.1
    }

    fn contains(&self, (x, y): (f64, f64), slack: f64) -> bool {
        let (sx, sy) = (slack * self.width(), slack * self.height());
        x >= self.min.0 - sx && x <= self.max.0 + sx && y >= self.min.1 - sy && y <= self.max.1 + sy
    }

    /// Portion of `l` inside the box, by slab clipping of a parametrized line.
    fn clip(&self, l: &HLine) -> Option<((f64, f64), (f64, f64))> {
        let (nx, ny) = l.unit_normal().ok()?;
        let [a, b, c] = l.coeffs();
        let h = a.hypot(b);
        let center = ((self.min.0 + self.max.0) / 2.0, (self.min.1 + self.max.1) / 2.0);
        let d = (a * center.0 + b * center.1 + c) / h;
        let p0 = (center.0 - d * nx, center.1 - d * ny);
        let dir = (-ny, nx);
        let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
        for (p, v, lo, hi) in [(p0.0, dir.0, self.min.0, self.max.0), (p0.1, dir.1, self.min.1, self.max.1)] {
            if v.abs() < 1e-15 {
                if p < lo || p > hi {
                    return None;
                }
            } else {
                let (ta, tb) = ((lo - p) / v, (hi - p) / v);
                t0 = t0.max(ta.min(tb));
                t1 = t1.min(ta.max(tb));
            }
        }
        (t0 < t1).then(|| ((p0.0 + t0 * dir.0, p0.1 + t0 * dir.1), (p0.0 + t1 * dir.0, p0.1 + t1 * dir.1)))
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// SVG coordinates: y grows downward.
fn px((x, y): (f64, f64)) -> (String, String) {
    (num(x), num(-y))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Runs of the conic sampled from the pencil through `base`, broken where
/// samples leave the neighbourhood of the view.
fn conic_runs(scene: &Scene, view: &Bounds) -> (Vec<Vec<(f64, f64)>>, bool) {
    let m = scene.c_conic.matrix();
    let p0 = scene.p.coords();
    let form = |u: [f64; 3], v: [f64; 3]| -> f64 {
        (0..3).map(|i| (0..3).map(|j| u[i] * m[(i, j)] * v[j]).sum::<f64>()).sum()
    };
    let mut samples = Vec::with_capacity(CONIC_SAMPLES);
    for k in 0..CONIC_SAMPLES {
        let theta = std::f64::consts::PI * k as f64 / CONIC_SAMPLES as f64;
        let d = [theta.cos(), theta.sin(), 0.0];
        // second intersection of the line through p0 with direction d
        let (dd, pd) = (form(d, d), form(p0, d));
        let q = [0, 1, 2].map(|i| p0[i] * dd - 2.0 * pd * d[i]);
        let pt = HPoint::new(q[0], q[1], q[2])
            .ok()
            .and_then(|p| p.to_xy().ok())
            .filter(|&xy| view.contains(xy, 1.0));
        samples.push(pt);
    }
    let mut runs: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut current = Vec::new();
    for s in &samples {
        match s {
            Some(xy) => current.push(*xy),
            None if !current.is_empty() => runs.push(std::mem::take(&mut current)),
            None => {}
        }
    }
    let closed = samples.iter().all(Option::is_some);
    if !current.is_empty() {
        // the pencil is periodic: a run reaching the end continues the first
        if samples[0].is_some() && !runs.is_empty() && !closed {
            let mut head = runs.remove(0);
            current.append(&mut head);
        }
        runs.insert(0, current);
    }
    runs.retain(|r| r.len() >= 2);
    (runs, closed)
}

/// Renders the chosen layers of `scene`. With no layers the output is the
/// header and an empty group.
pub fn render_svg(scene: &Scene, layers: &BTreeSet<Layer>) -> String {
    let els = elements(scene, layers);
    let mut content = Bounds::empty();
    for e in &els {
        match &e.shape {
            Shape::Segment(p, q) => {
                for v in [p, q] {
                    if let Ok(xy) = v.to_xy() {
                        content.add(xy);
                    }
                }
            }
            Shape::Circle((cx, cy), r) => {
                content.add((cx - r, cy - r));
                content.add((cx + r, cy + r));
            }
            Shape::Marker(p) => {
                if let Ok(xy) = p.to_xy() {
                    content.add(xy);
                }
            }
            Shape::Line(_) | Shape::Conic => {}
        }
    }
    if content.is_empty() {
        for xy in scene.base.vertices_xy() {
            content.add(xy);
        }
    }
    let view = content.padded();
    let extent = view.width().max(view.height());
    let stroke = extent * 0.003;
    let mark = extent * 0.008;
    let font = extent * 0.025;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(view.min.0),
        num(-view.max.1),
        num(view.width()),
        num(view.height())
    );
    let _ = writeln!(
        svg,
        "<g id=\"figure\" fill=\"none\" stroke-width=\"{}\" stroke-linecap=\"round\">",
        num(stroke)
    );
    for e in &els {
        let color = e.layer.color();
        let class = e.layer.name();
        match &e.shape {
            Shape::Segment(p, q) => match (p.to_xy(), q.to_xy()) {
                (Ok(a), Ok(b)) => {
                    let ((x1, y1), (x2, y2)) = (px(a), px(b));
                    let _ = writeln!(
                        svg,
                        "<path class=\"{class}\" d=\"M {x1} {y1} L {x2} {y2}\" stroke=\"{color}\"/>"
                    );
                }
                _ => {
                    let _ = writeln!(svg, "<!-- dropped {class}/{}: point at infinity -->", escape(&e.name));
                }
            },
            Shape::Circle(c, r) => {
                let (cx, cy) = px(*c);
                let _ = writeln!(
                    svg,
                    "<circle class=\"{class}\" cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" stroke=\"{color}\"/>",
                    num(*r)
                );
            }
            Shape::Line(l) => match view.clip(l) {
                Some((a, b)) => {
                    let ((x1, y1), (x2, y2)) = (px(a), px(b));
                    let _ = writeln!(
                        svg,
                        "<line class=\"{class}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{color}\"/>"
                    );
                }
                None => {
                    let _ = writeln!(svg, "<!-- dropped {class}/{}: outside the view -->", escape(&e.name));
                }
            },
            Shape::Conic => {
                let (runs, closed) = conic_runs(scene, &view);
                if runs.is_empty() {
                    let _ = writeln!(svg, "<!-- dropped {class}/{}: outside the view -->", escape(&e.name));
                }
                let tag = if closed { "polygon" } else { "polyline" };
                for run in runs {
                    let pts: Vec<String> = run
                        .into_iter()
                        .map(|xy| {
                            let (x, y) = px(xy);
                            format!("{x},{y}")
                        })
                        .collect();
                    let _ = writeln!(
                        svg,
                        "<{tag} class=\"{class}\" points=\"{}\" stroke=\"{color}\"/>",
                        pts.join(" ")
                    );
                }
            }
            Shape::Marker(p) => match p.to_xy() {
                Ok((x, y)) => {
                    let (rx, ry) = px((x - mark / 2.0, y + mark / 2.0));
                    let (tx, ty) = px((x + mark, y + mark));
                    let size = num(mark);
                    let _ = writeln!(
                        svg,
                        "<rect class=\"{class}\" x=\"{rx}\" y=\"{ry}\" width=\"{size}\" height=\"{size}\" fill=\"{color}\"/>"
                    );
                    let _ = writeln!(
                        svg,
                        "<text class=\"{class}\" x=\"{tx}\" y=\"{ty}\" font-size=\"{}\" fill=\"{color}\">{}</text>",
                        num(font),
                        escape(&e.name)
                    );
                }
                Err(_) => {
                    let _ = writeln!(svg, "<!-- dropped {class}/{}: point at infinity -->", escape(&e.name));
                }
            },
        }
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}
