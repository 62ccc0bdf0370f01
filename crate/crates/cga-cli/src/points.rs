//! Point file parsing: one `x y z` triple per line, `#` starts a comment,
//! blank lines are ignored.

use cga::Vec3;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_points(text: &str) -> Result<Vec<Vec3>, ParseError> {
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let data = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = data.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() != 3 {
            return Err(ParseError {
                line,
                message: format!("expected 3 coordinates, found {}", fields.len()),
            });
        }
        let mut coords = [0.0f64; 3];
        for (slot, field) in coords.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| ParseError {
                line,
                message: format!("invalid coordinate `{field}`"),
            })?;
            if !slot.is_finite() {
                return Err(ParseError {
                    line,
                    message: format!("coordinate `{field}` is not finite"),
                });
            }
        }
        points.push(Vec3::new(coords[0], coords[1], coords[2]));
    }
    Ok(points)
}
