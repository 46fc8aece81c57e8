//! JSON documents for scenes and check reports.
//!
//! Both serialize through `serde_json::Value`, whose map keeps keys sorted,
//! and numbers use the shortest representation that round-trips.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use pedal_geometry::circle::Circle;
use pedal_geometry::theorems::{CheckReport, Scene};
use pedal_geometry::{HLine, HPoint};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleDocument {
    pub center: [f64; 2],
    pub r_sq: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneDocument {
    pub triangle: [[f64; 2]; 3],
    #[serde(rename = "P")]
    pub p: [f64; 2],
    pub x: f64,
    pub points: BTreeMap<String, [f64; 2]>,
    pub circles: BTreeMap<String, CircleDocument>,
    pub lines: BTreeMap<String, [f64; 3]>,
}

fn pair((x, y): (f64, f64)) -> [f64; 2] {
    [x, y]
}

/// Named finite points of a scene, in document order. Ideal points are
/// left out.
pub fn scene_points(scene: &Scene) -> Vec<(&'static str, HPoint)> {
    let o = &scene.offsets;
    let bp = &scene.bisector_pedals;
    let named = [
        ("A_P", *scene.pedal.a()),
        ("B_P", *scene.pedal.b()),
        ("C_P", *scene.pedal.c()),
        ("A1", o.a1),
        ("A2", o.a2),
        ("B1", o.b1),
        ("B2", o.b2),
        ("C1", o.c1),
        ("C2", o.c2),
        ("A'", *bp.a()),
        ("B'", *bp.b()),
        ("C'", *bp.c()),
        ("H'", scene.h_prime),
        ("Q", scene.q),
        ("Q1", scene.q1),
        ("Q2", scene.q2),
        ("O1c", *scene.o1.center()),
        ("O2c", *scene.o2.center()),
        ("O_P", scene.o_p),
        ("I", scene.i),
        ("O", scene.o),
        ("N", scene.nagel),
        ("G", scene.centroid),
        ("Be", scene.bevan),
    ];
    named.into_iter().filter(|(_, p)| p.to_xy().is_ok()).collect()
}

pub fn scene_lines(scene: &Scene) -> [(&'static str, HLine); 3] {
    [
        ("rad_axis", scene.rad_axis),
        ("steiner_p", scene.steiner_p),
        ("q_line", scene.q_line),
    ]
}

pub fn scene_circles(scene: &Scene) -> [(&'static str, Circle); 2] {
    [("O1", scene.o1), ("O2", scene.o2)]
}

impl SceneDocument {
    pub fn from_scene(scene: &Scene) -> Self {
        let xy = |p: &HPoint| pair(p.to_xy().expect("scene anchors are finite"));
        let [a, b, c] = scene.base.vertices();
        Self {
            triangle: [xy(&a), xy(&b), xy(&c)],
            p: xy(&scene.p),
            x: scene.x,
            points: scene_points(scene)
                .into_iter()
                .map(|(n, p)| (n.to_string(), xy(&p)))
                .collect(),
            circles: scene_circles(scene)
                .into_iter()
                .map(|(n, k)| {
                    let doc = CircleDocument {
                        center: pair(k.center_xy()),
                        r_sq: k.r_sq(),
                    };
                    (n.to_string(), doc)
                })
                .collect(),
            lines: scene_lines(scene)
                .into_iter()
                .map(|(n, l)| (n.to_string(), l.coeffs()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureDocument {
    pub index: u64,
    pub residual: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub id: String,
    pub trials: u64,
    pub skipped: u64,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub failures: Vec<FailureDocument>,
}

impl From<&CheckReport> for ReportDocument {
    fn from(r: &CheckReport) -> Self {
        Self {
            id: r.id.clone(),
            trials: r.trials,
            skipped: r.skipped,
            max_residual: r.max_residual,
            tolerance: r.tolerance,
            passed: r.passed,
            failures: r
                .failures
                .iter()
                .map(|f| FailureDocument {
                    index: f.index,
                    residual: f.residual,
                    detail: f.detail.clone(),
                })
                .collect(),
        }
    }
}

impl ReportDocument {
    /// One line of JSON, no trailing newline.
    pub fn to_json_line(&self) -> String {
        to_sorted_json(self)
    }
}

fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents hold finite numbers only");
    serde_json::to_string(&v).expect("a JSON value always serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use pedal_geometry::theorems::build_scene;
    use pedal_geometry::triangle::Triangle;
    use pedal_geometry::Tolerance;

    fn scene() -> Scene {
        let t = Triangle::from_xy([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]).unwrap();
        build_scene(&t, &HPoint::xy(3.0, 2.0).unwrap(), 0.5, &Tolerance::default()).unwrap()
    }

    #[test]
    fn keys_are_sorted() {
        let json = SceneDocument::from_scene(&scene()).to_json();
        let top: Vec<usize> = ["\"P\"", "\"circles\"", "\"lines\"", "\"points\"", "\"triangle\"", "\"x\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        assert!(top.windows(2).all(|w| w[0] < w[1]), "{json}");
    }

    #[test]
    fn scene_roundtrips_exactly() {
        let doc = SceneDocument::from_scene(&scene());
        assert_eq!(doc.points.len(), 24);
        let back = SceneDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn report_line_shape() {
        let report = CheckReport {
            id: "T2.1".into(),
            trials: 3,
            max_residual: 1.5e-13,
            tolerance: 1e-7,
            passed: true,
            failures: vec![],
            skipped: 0,
        };
        let line = ReportDocument::from(&report).to_json_line();
        assert!(!line.contains('\n'));
        assert!(line.starts_with("{\"failures\":[],\"id\":\"T2.1\""), "{line}");
    }
}
