//! Point-set input documents: a line-oriented text format (one labeled point
//! per record, `dim`/`homogeneous` directives, `#` comments) and a JSON
//! variant with the same fields. Rational literals are kept as strings so the
//! pencil commands can parse them exactly.

use crate::Failure;
use pentacone::dualquat::Point3;
use pentacone::projective::{HPoint2, HPoint3};
use pentacone::rat::{parse_rat, Rat};
use serde::Deserialize;

#[derive(Debug, Clone, serde::Serialize)]
pub struct LabeledPoint {
    pub label: Option<String>,
    pub coords: Vec<String>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PointSetDocument {
    pub dimension: u8,
    pub homogeneous: bool,
    pub points: Vec<LabeledPoint>,
}

#[derive(Deserialize)]
struct JsonDoc {
    dimension: u8,
    #[serde(default)]
    homogeneous: bool,
    points: Vec<JsonPoint>,
}

#[derive(Deserialize)]
struct JsonPoint {
    #[serde(default)]
    label: Option<String>,
    coords: Vec<serde_json::Value>,
}

impl PointSetDocument {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_lines(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self, Failure> {
        let doc: JsonDoc = serde_json::from_str(text)
            .map_err(|e| Failure::input(format!("invalid JSON point set: {e}")))?;
        let points = doc
            .points
            .into_iter()
            .map(|p| {
                let coords = p
                    .coords
                    .iter()
                    .map(|v| match v {
                        serde_json::Value::Number(n) => Ok(n.to_string()),
                        serde_json::Value::String(s) => Ok(s.clone()),
                        other => Err(Failure::input(format!(
                            "coordinate must be a number or string, got {other}"
                        ))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(LabeledPoint {
                    label: p.label,
                    coords,
                })
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        Self::validate(doc.dimension, doc.homogeneous, points)
    }

    fn parse_lines(text: &str) -> Result<Self, Failure> {
        let mut dimension: Option<u8> = None;
        let mut homogeneous = false;
        let mut points = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "dim" | "dimension" => {
                    let v = tokens
                        .get(1)
                        .and_then(|t| t.parse::<u8>().ok())
                        .ok_or_else(|| {
                            Failure::input(format!("line {}: bad dim directive", lineno + 1))
                        })?;
                    dimension = Some(v);
                }
                "homogeneous" => {
                    let v = tokens
                        .get(1)
                        .and_then(|t| t.parse::<bool>().ok())
                        .ok_or_else(|| {
                            Failure::input(format!(
                                "line {}: bad homogeneous directive",
                                lineno + 1
                            ))
                        })?;
                    homogeneous = v;
                }
                _ => {
                    let (label, coords) = if parse_rat(tokens[0]).is_some() {
                        (None, tokens.as_slice())
                    } else {
                        (Some(tokens[0].to_string()), &tokens[1..])
                    };
                    if coords.is_empty() {
                        return Err(Failure::input(format!(
                            "line {}: point record without coordinates",
                            lineno + 1
                        )));
                    }
                    for c in coords {
                        if parse_rat(c).is_none() {
                            return Err(Failure::input(format!(
                                "line {}: '{c}' is not a numeric literal",
                                lineno + 1
                            )));
                        }
                    }
                    points.push(LabeledPoint {
                        label,
                        coords: coords.iter().map(|s| s.to_string()).collect(),
                    });
                }
            }
        }
        let dimension = dimension.ok_or_else(|| {
            Failure::input("missing 'dim 2' or 'dim 3' directive".to_string())
        })?;
        Self::validate(dimension, homogeneous, points)
    }

    fn validate(
        dimension: u8,
        homogeneous: bool,
        points: Vec<LabeledPoint>,
    ) -> Result<Self, Failure> {
        if dimension != 2 && dimension != 3 {
            return Err(Failure::input(format!("dimension must be 2 or 3, got {dimension}")));
        }
        let arity = dimension as usize + usize::from(homogeneous);
        for (i, p) in points.iter().enumerate() {
            if p.coords.len() != arity {
                return Err(Failure::input(format!(
                    "point {} ({}): expected {} coordinates, got {}",
                    i + 1,
                    p.label.as_deref().unwrap_or("unlabeled"),
                    arity,
                    p.coords.len()
                )));
            }
        }
        Ok(Self {
            dimension,
            homogeneous,
            points,
        })
    }

    pub fn expect_count(&self, n: usize, what: &str) -> Result<(), Failure> {
        if self.points.len() != n {
            return Err(Failure::input(format!(
                "{what} needs exactly {n} points, got {}",
                self.points.len()
            )));
        }
        Ok(())
    }

    fn rationals_of(&self, p: &LabeledPoint) -> Result<Vec<Rat>, Failure> {
        p.coords
            .iter()
            .map(|c| {
                parse_rat(c).ok_or_else(|| Failure::input(format!("'{c}' is not an exact literal")))
            })
            .collect()
    }

    pub fn to_hpoints2(&self) -> Result<Vec<HPoint2>, Failure> {
        if self.dimension != 2 {
            return Err(Failure::input("this command needs 2D points".to_string()));
        }
        self.points
            .iter()
            .map(|p| {
                let c = self.rationals_of(p)?;
                Ok(if self.homogeneous {
                    HPoint2::new([c[0].clone(), c[1].clone(), c[2].clone()])
                } else {
                    HPoint2::affine(c[0].clone(), c[1].clone())
                })
            })
            .collect()
    }

    pub fn to_hpoints3(&self) -> Result<Vec<HPoint3>, Failure> {
        if self.dimension != 3 {
            return Err(Failure::input("this command needs 3D points".to_string()));
        }
        self.points
            .iter()
            .map(|p| {
                let c = self.rationals_of(p)?;
                Ok(if self.homogeneous {
                    HPoint3::new([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
                } else {
                    HPoint3::affine(c[0].clone(), c[1].clone(), c[2].clone())
                })
            })
            .collect()
    }

    /// Cartesian f64 points; 2D documents get z = 0.
    pub fn to_points3f(&self) -> Result<Vec<Point3>, Failure> {
        if self.homogeneous {
            return Err(Failure::input(
                "kinematic commands need affine Cartesian points".to_string(),
            ));
        }
        self.points
            .iter()
            .map(|p| {
                let mut vals = Vec::with_capacity(3);
                for c in &p.coords {
                    let v: f64 = c
                        .parse()
                        .or_else(|_| {
                            parse_rat(c)
                                .map(|r| rat_to_f64(&r))
                                .ok_or("bad literal")
                        })
                        .map_err(|_| Failure::input(format!("'{c}' is not numeric")))?;
                    vals.push(v);
                }
                if vals.len() == 2 {
                    vals.push(0.0);
                }
                Ok(Point3::new(vals[0], vals[1], vals[2]))
            })
            .collect()
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_line_format() {
        let text = "# conic fixture\ndim 2\nP 2 3\nQ 3 5\n7 7\nS 13/1 6\nT 11 2.0\n";
        let doc = PointSetDocument::parse(text).unwrap();
        assert_eq!(doc.dimension, 2);
        assert!(!doc.homogeneous);
        assert_eq!(doc.points.len(), 5);
        assert_eq!(doc.points[0].label.as_deref(), Some("P"));
        assert_eq!(doc.points[2].label, None);
        let pts = doc.to_hpoints2().unwrap();
        assert_eq!(pts[3], HPoint2::affine_i(13, 6));
    }

    #[test]
    fn parses_json_format() {
        let text = r#"{"dimension": 3, "points": [
            {"label": "A", "coords": [4, 3, 0]},
            {"coords": ["9", "8", "3"]}
        ]}"#;
        let doc = PointSetDocument::parse(text).unwrap();
        assert_eq!(doc.dimension, 3);
        assert_eq!(doc.points.len(), 2);
        let pts = doc.to_hpoints3().unwrap();
        assert_eq!(pts[1], HPoint3::affine_i(9, 8, 3));
    }

    #[test]
    fn arity_and_parse_errors() {
        assert!(PointSetDocument::parse("dim 2\nP 1 2 3\n").is_err());
        assert!(PointSetDocument::parse("P 1 2\n").is_err());
        assert!(PointSetDocument::parse("dim 2\nP 1 abc\n").is_err());
        let e = PointSetDocument::parse("dim 5\nP 1 2\n").unwrap_err();
        assert_eq!(e.code, 1);
    }

    #[test]
    fn homogeneous_points() {
        let doc = PointSetDocument::parse("dim 2\nhomogeneous true\nX 0 1 0\n").unwrap();
        let pts = doc.to_hpoints2().unwrap();
        assert_eq!(pts[0], HPoint2::from_ints([0, 1, 0]));
    }
}
