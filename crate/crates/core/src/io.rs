//! JSON instance files.
//!
//! ```json
//! {
//!   "kind": "segment",
//!   "metric": "l2",
//!   "segment": { "p": [0, 0], "q": [10, 0] },
//!   "k": 2,
//!   "points": [[5, 3]]
//! }
//! ```
//!
//! Circle instances use `"kind": "circle"` and `"circle": { "center": [x, y],
//! "r": r }` instead of `segment`. Unknown fields are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{CircularInstance, Instance, Metric, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Segment,
    Circle,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum MetricName {
    #[default]
    #[serde(rename = "l2")]
    L2,
    #[serde(rename = "linf")]
    Linf,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentSpec {
    pub p: [f64; 2],
    pub q: [f64; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleSpec {
    pub center: [f64; 2],
    pub r: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub kind: Kind,
    #[serde(default)]
    pub metric: MetricName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segment: Option<SegmentSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circle: Option<CircleSpec>,
    pub k: usize,
    pub points: Vec<[f64; 2]>,
}

/// A parsed and validated instance of either kind.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyInstance {
    Segment(Instance),
    Circle(CircularInstance),
}

fn pt(a: [f64; 2]) -> Point {
    Point::new(a[0], a[1])
}

fn arr(p: &Point) -> [f64; 2] {
    [p.x, p.y]
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<AnyInstance> {
        let points = self.points.iter().copied().map(pt).collect();
        match (self.kind, self.segment, self.circle) {
            (Kind::Segment, Some(s), None) => {
                let metric = match self.metric {
                    MetricName::L2 => Metric::Euclidean,
                    MetricName::Linf => Metric::Rectilinear,
                };
                Ok(AnyInstance::Segment(Instance::new(pt(s.p), pt(s.q), points, self.k, metric)?))
            }
            (Kind::Circle, None, Some(c)) => {
                if self.metric != MetricName::L2 {
                    return Err(Error::InvalidInstance("circle instances use the l2 metric".into()));
                }
                Ok(AnyInstance::Circle(CircularInstance::new(pt(c.center), c.r, points, self.k)?))
            }
            (Kind::Segment, _, _) => {
                Err(Error::InvalidInstance("segment instance needs `segment` and no `circle`".into()))
            }
            (Kind::Circle, _, _) => {
                Err(Error::InvalidInstance("circle instance needs `circle` and no `segment`".into()))
            }
        }
    }
}

impl From<&AnyInstance> for InstanceFile {
    fn from(inst: &AnyInstance) -> Self {
        match inst {
            AnyInstance::Segment(s) => InstanceFile {
                kind: Kind::Segment,
                metric: match s.metric() {
                    Metric::Euclidean => MetricName::L2,
                    Metric::Rectilinear => MetricName::Linf,
                },
                segment: Some(SegmentSpec { p: arr(&s.p()), q: arr(&s.q()) }),
                circle: None,
                k: s.k(),
                points: s.points().iter().map(arr).collect(),
            },
            AnyInstance::Circle(c) => InstanceFile {
                kind: Kind::Circle,
                metric: MetricName::L2,
                segment: None,
                circle: Some(CircleSpec { center: arr(&c.center()), r: c.r_c() }),
                k: c.k(),
                points: c.points().iter().map(arr).collect(),
            },
        }
    }
}

/// Parses instance text; `origin` names the source in diagnostics.
pub fn parse_instance(text: &str, origin: &str) -> Result<AnyInstance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_instance()
}

pub fn read_instance(path: &Path) -> Result<AnyInstance> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text, &path.display().to_string())
}

pub fn to_json(inst: &AnyInstance) -> String {
    let mut s = serde_json::to_string_pretty(&InstanceFile::from(inst)).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE_POINT: &str = r#"{
        "kind": "segment", "metric": "l2",
        "segment": {"p": [0, 0], "q": [10, 0]},
        "k": 2, "points": [[5, 3]]
    }"#;

    #[test]
    fn parses_segment() {
        let AnyInstance::Segment(s) = parse_instance(ONE_POINT, "x").unwrap() else {
            panic!("expected a segment instance");
        };
        assert_eq!(s.k(), 2);
        assert_eq!(s.points(), &[Point::new(5.0, 3.0)]);
        assert_eq!(s.metric(), Metric::Euclidean);
    }

    #[test]
    fn parses_circle() {
        let text = r#"{"kind":"circle","circle":{"center":[1,2],"r":3},"k":1,"points":[]}"#;
        let AnyInstance::Circle(c) = parse_instance(text, "x").unwrap() else {
            panic!("expected a circle instance");
        };
        assert_eq!(c.r_c(), 3.0);
        assert_eq!(c.center(), Point::new(1.0, 2.0));
    }

    #[test]
    fn reports_position_of_syntax_errors() {
        let err = parse_instance("{\n  \"kind\": \"segment\",\n  oops\n}", "bad.json").unwrap_err();
        match err {
            Error::Parse { line, path, .. } => {
                assert_eq!(line, 3);
                assert_eq!(path, "bad.json");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_fields_and_bad_shapes() {
        let extra = ONE_POINT.replace("\"k\": 2", "\"k\": 2, \"colour\": 1");
        assert!(matches!(parse_instance(&extra, "x"), Err(Error::Parse { .. })));
        let nested = ONE_POINT.replace("\"q\": [10, 0]", "\"q\": [10, 0], \"r\": 1");
        assert!(matches!(parse_instance(&nested, "x"), Err(Error::Parse { .. })));
        let missing = r#"{"kind":"segment","k":2,"points":[]}"#;
        assert!(matches!(parse_instance(missing, "x"), Err(Error::InvalidInstance(_))));
        let tilted = ONE_POINT.replace("[10, 0]", "[10, 1]");
        assert!(matches!(parse_instance(&tilted, "x"), Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn round_trip() {
        let inst = parse_instance(ONE_POINT, "x").unwrap();
        assert_eq!(parse_instance(&to_json(&inst), "y").unwrap(), inst);
    }
}
