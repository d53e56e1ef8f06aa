//! JSON forms of domains, regions and analysis results.
//!
//! Domain coordinates are written with the shortest decimal that reads back
//! to the same `f64`, so files round-trip exactly. Derived scalars are
//! rounded to 12 significant digits; infinities become `null`.

use capgeo_core::cheeger::CheegerResult;
use capgeo_core::reach::ReachReport;
use capgeo_core::{Domain, Orientation, Point, Region, Segment, Verdict};
use serde::Deserialize;
use serde_json::{json, Map, Number, Value};

use crate::error::CliError;

#[derive(Deserialize)]
struct DomainDoc {
    start: [f64; 2],
    segments: Vec<SegmentDoc>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SegmentDoc {
    Line {
        end: [f64; 2],
    },
    Arc {
        end: [f64; 2],
        center: [f64; 2],
        orientation: OrientationDoc,
    },
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum OrientationDoc {
    Ccw,
    Cw,
}

fn point(p: [f64; 2]) -> Point {
    Point::new(p[0], p[1])
}

impl From<DomainDoc> for Domain {
    fn from(doc: DomainDoc) -> Domain {
        let segments = doc
            .segments
            .into_iter()
            .map(|s| match s {
                SegmentDoc::Line { end } => Segment::Line { end: point(end) },
                SegmentDoc::Arc {
                    end,
                    center,
                    orientation,
                } => Segment::Arc {
                    end: point(end),
                    center: point(center),
                    orientation: match orientation {
                        OrientationDoc::Ccw => Orientation::Ccw,
                        OrientationDoc::Cw => Orientation::Cw,
                    },
                },
            })
            .collect();
        Domain::new(point(doc.start), segments)
    }
}

/// Parses a domain document. Unknown top-level fields (such as `metadata`)
/// are ignored.
pub fn parse_domain(text: &str) -> Result<Domain, CliError> {
    let doc: DomainDoc = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    Ok(doc.into())
}

/// Exact coordinate; non-finite values become `null`.
fn coord(x: f64) -> Value {
    Number::from_f64(x).map_or(Value::Null, Value::Number)
}

/// A derived quantity rounded to 12 significant digits.
pub fn scalar(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    coord(if rounded == 0.0 { 0.0 } else { rounded })
}

fn point_value(p: Point) -> Value {
    Value::Array(vec![coord(p.x), coord(p.y)])
}

pub fn domain_value(d: &Domain) -> Value {
    let segments: Vec<Value> = d
        .segments
        .iter()
        .map(|s| match *s {
            Segment::Line { end } => json!({"kind": "line", "end": point_value(end)}),
            Segment::Arc {
                end,
                center,
                orientation,
            } => json!({
                "kind": "arc",
                "end": point_value(end),
                "center": point_value(center),
                "orientation": match orientation {
                    Orientation::Ccw => "ccw",
                    Orientation::Cw => "cw",
                },
            }),
        })
        .collect();
    json!({"start": point_value(d.start), "segments": segments})
}

pub fn region_value(r: &Region) -> Value {
    json!({"components": r.components.iter().map(domain_value).collect::<Vec<_>>()})
}

pub fn verdict_value(v: &Verdict) -> Value {
    let witness = v.witness.as_ref().map_or(Value::Null, |w| {
        json!({
            "subset": domain_value(&w.subset),
            "quotient_e": scalar(w.quotient_e),
            "quotient_omega": scalar(w.quotient_omega),
        })
    });
    json!({
        "status": v.status.as_str(),
        "criterion_path": v.criterion_path.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "gamma": scalar(v.gamma),
        "r_phys": scalar(v.r_phys),
        "witness": witness,
        "notes": v.notes,
    })
}

pub fn cheeger_value(c: &CheegerResult) -> Value {
    json!({
        "h": scalar(c.h),
        "r_star": scalar(c.r_star),
        "r_phys": scalar(c.r_phys),
        "no_neck_valid": c.no_neck_valid,
        "self_cheeger": c.self_cheeger,
        "minimal": c.minimal,
        "determinate": c.determinate,
        "cheeger_set_area": scalar(c.cheeger_set.area()),
        "cheeger_set": region_value(&c.cheeger_set),
    })
}

pub fn reach_value(r: &ReachReport) -> Value {
    json!({
        "radius": scalar(r.radius),
        "rolling": r.rolling,
        "strict": r.strict,
        "worst_antipodal_defect": scalar(r.worst_antipodal_defect),
        "centers_checked": r.centers_checked,
        "near_miss": r.near_miss,
        "pointwise": r.pointwise,
        "disagreement": r.disagreement,
    })
}

/// `{"error": {"kind": ..., "message": ...}}`.
pub fn error_value(e: &CliError) -> Value {
    let mut inner = Map::new();
    inner.insert("kind".into(), Value::from(e.kind()));
    inner.insert("message".into(), Value::from(e.to_string()));
    json!({ "error": inner })
}

/// One line of compact JSON.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values are serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use capgeo_core::gallery::{defaults, make_disk};

    #[test]
    fn scalars_have_twelve_digits() {
        assert_eq!(scalar(0.1 + 0.2).to_string(), "0.3");
        assert_eq!(scalar(std::f64::consts::PI).to_string(), "3.14159265359");
        assert_eq!(scalar(f64::INFINITY), Value::Null);
        assert_eq!(scalar(-0.0).to_string(), "0.0");
    }

    #[test]
    fn gallery_round_trips() {
        for (name, d) in defaults() {
            let text = render(&domain_value(&d));
            assert_eq!(parse_domain(&text).unwrap(), d, "{name}");
        }
    }

    #[test]
    fn parses_documented_schema() {
        let text = r#"{"start":[1,0],"segments":[
            {"kind":"arc","end":[-1,0],"center":[0,0],"orientation":"ccw"},
            {"kind":"arc","end":[1,0],"center":[0,0],"orientation":"ccw"}],
            "metadata":{"family":"disk"}}"#;
        assert_eq!(parse_domain(text).unwrap(), make_disk(1.0).unwrap());
    }

    #[test]
    fn rejects_unknown_segment_kind() {
        let text = r#"{"start":[0,0],"segments":[{"kind":"spline","end":[1,0]}]}"#;
        assert!(matches!(parse_domain(text), Err(CliError::Json(_))));
    }
}
