//! Inspection reports: the extracted 3D data of an object, printable as
//! `key = value` lines or as JSON carrying the same values.

use cga::{Bivec3, Multivector, Tolerance, Vec3};
use serde_json::{json, Value as Json};

#[derive(Debug)]
pub enum Value {
    Number(f64),
    Vector(Vec3),
    /// Canonical blade rendering (moment and plane bivectors).
    Blades(String),
}

#[derive(Debug)]
pub struct Report {
    pub kind: &'static str,
    pub object: String,
    pub fields: Vec<(&'static str, Value)>,
    tol: f64,
}

impl Report {
    pub fn new(kind: &'static str, object: &Multivector, tol: Tolerance) -> Self {
        Self {
            kind,
            object: render_multivector(object, tol),
            fields: Vec::new(),
            tol: tol.relative(),
        }
    }

    pub fn number(mut self, key: &'static str, x: f64) -> Self {
        self.fields.push((key, Value::Number(x)));
        self
    }

    pub fn vector(mut self, key: &'static str, v: Vec3) -> Self {
        self.fields.push((key, Value::Vector(v)));
        self
    }

    pub fn bivector(mut self, key: &'static str, b: Bivec3, tol: Tolerance) -> Self {
        let rendered = render_multivector(&Multivector::from_euclid_bivector(b), tol);
        self.fields.push((key, Value::Blades(rendered)));
        self
    }

    pub fn plain(&self) -> String {
        let mut out = format!("kind = {}\nobject = {}\n", self.kind, self.object);
        for (key, value) in &self.fields {
            let rendered = match value {
                Value::Number(x) => fmt_value(*x, self.tol),
                Value::Vector(v) => format!(
                    "({}, {}, {})",
                    fmt_value(v.x, self.tol),
                    fmt_value(v.y, self.tol),
                    fmt_value(v.z, self.tol)
                ),
                Value::Blades(s) => s.clone(),
            };
            out.push_str(&format!("{key} = {rendered}\n"));
        }
        out
    }

    pub fn json(&self) -> Json {
        let mut map = serde_json::Map::new();
        map.insert("kind".into(), json!(self.kind));
        map.insert("object".into(), json!(self.object));
        for (key, value) in &self.fields {
            let v = match value {
                Value::Number(x) => json!(rounded(*x, self.tol)),
                Value::Vector(v) => json!([
                    rounded(v.x, self.tol),
                    rounded(v.y, self.tol),
                    rounded(v.z, self.tol)
                ]),
                Value::Blades(s) => json!(s),
            };
            map.insert((*key).into(), v);
        }
        Json::Object(map)
    }
}

/// Canonical rendering with coefficients at 9 significant digits; terms
/// below the tolerance are dropped.
pub fn render_multivector(mv: &Multivector, tol: Tolerance) -> String {
    let rel = tol.relative();
    mv.render_with(|c| {
        let s = fmt_value(c, rel);
        if s == "0" {
            None
        } else {
            Some(s)
        }
    })
}

/// The numeric value actually reported: snapped to zero below the
/// tolerance and rounded to 9 significant digits.
fn rounded(x: f64, tol: f64) -> f64 {
    fmt_value(x, tol).parse().expect("formatted float parses back")
}

/// Format with 9 significant digits, printing `0` for magnitudes below
/// the tolerance.
pub fn fmt_value(x: f64, tol: f64) -> String {
    if x.abs() < tol {
        return "0".to_string();
    }
    fmt_sig(x, 9)
}

/// Shortest decimal with `sig` significant digits, switching to exponent
/// notation outside the usual range.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent format");
    let exponent: i32 = exponent.parse().expect("numeric exponent");
    if exponent < -4 || exponent >= sig as i32 {
        format!("{}e{}", trim_zeros(mantissa), exponent)
    } else {
        let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(1.0, 9), "1");
        assert_eq!(fmt_sig(-2.5, 9), "-2.5");
        assert_eq!(fmt_sig(0.5, 9), "0.5");
        assert_eq!(fmt_sig(1.0 / 3.0, 9), "0.333333333");
        assert_eq!(fmt_sig(123456789012.0, 9), "1.23456789e11");
        assert_eq!(fmt_sig(1e-5, 9), "1e-5");
        assert_eq!(fmt_sig(0.0, 9), "0");
        assert_eq!(fmt_sig(0.999999999999, 9), "1");
    }

    #[test]
    fn below_tolerance_prints_zero() {
        assert_eq!(fmt_value(1e-12, 1e-9), "0");
        assert_eq!(fmt_value(-1e-12, 1e-9), "0");
        assert_eq!(fmt_value(2.0, 1e-9), "2");
    }

    #[test]
    fn json_and_plain_carry_identical_values() {
        let tol = Tolerance::default();
        let report = Report::new("point", &Multivector::nb(), tol)
            .vector("position", Vec3::new(1.0, 0.25, 1e-14));
        let plain = report.plain();
        assert!(plain.contains("position = (1, 0.25, 0)"));
        let json = report.json();
        assert_eq!(json["position"], json!([1.0, 0.25, 0.0]));
        assert_eq!(json["kind"], json!("point"));
    }
}
