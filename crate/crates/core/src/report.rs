//! Structured residual records: one per identity check.

use std::collections::BTreeMap;

use serde::Serialize;

/// A scalar input recorded with a check.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum InputValue {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl From<f64> for InputValue {
    fn from(v: f64) -> Self {
        InputValue::Num(v)
    }
}
impl From<u32> for InputValue {
    fn from(v: u32) -> Self {
        InputValue::Int(v as i64)
    }
}
impl From<i64> for InputValue {
    fn from(v: i64) -> Self {
        InputValue::Int(v)
    }
}
impl From<bool> for InputValue {
    fn from(v: bool) -> Self {
        InputValue::Bool(v)
    }
}
impl From<&str> for InputValue {
    fn from(v: &str) -> Self {
        InputValue::Text(v.to_owned())
    }
}
impl From<String> for InputValue {
    fn from(v: String) -> Self {
        InputValue::Text(v)
    }
}

pub type Inputs = BTreeMap<String, InputValue>;

/// Residual record for one verified identity.
///
/// `pass` holds exactly when `residual <= tolerance`, with
/// `residual = |lhs - rhs| / max(|rhs|, 1)` — relative against large
/// references, absolute against small ones.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub paper_eq: String,
    pub inputs: Inputs,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

pub fn residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / rhs.abs().max(1.0)
}

impl VerificationReport {
    pub fn new(
        check_id: impl Into<String>,
        paper_eq: impl Into<String>,
        inputs: Inputs,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
    ) -> Self {
        let residual = residual(lhs, rhs);
        VerificationReport {
            check_id: check_id.into(),
            paper_eq: paper_eq.into(),
            inputs,
            lhs,
            rhs,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// Convenience builder for the `inputs` map.
#[macro_export]
macro_rules! inputs {
    ($($key:expr => $value:expr),* $(,)?) => {{
        let mut map = $crate::report::Inputs::new();
        $(map.insert($key.to_string(), $crate::report::InputValue::from($value));)*
        map
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_switches_between_relative_and_absolute() {
        // large reference: relative
        assert!((residual(100.0, 100.0001) - 1e-6 / 100.0 * 100.0).abs() < 1e-12);
        // zero reference: absolute
        assert_eq!(residual(3e-7, 0.0), 3e-7);
    }

    #[test]
    fn pass_iff_residual_within_tolerance() {
        let r = VerificationReport::new("unit", "energy(T,g,k) = g", inputs! {}, 10.0, 10.0, 1e-6);
        assert!(r.pass);
        let r = VerificationReport::new("unit", "energy(T,g,k) = g", inputs! {}, 10.1, 10.0, 1e-6);
        assert!(!r.pass);
    }

    #[test]
    fn serializes_with_exact_field_set_in_order() {
        let r = VerificationReport::new(
            "unit",
            "energy(T,g,k) = g",
            inputs! { "T" => 1e5, "k" => 2u32 },
            5.0,
            5.0,
            1e-6,
        );
        let json = serde_json::to_string(&r).unwrap();
        let fields = [
            "\"check_id\"",
            "\"paper_eq\"",
            "\"inputs\"",
            "\"lhs\"",
            "\"rhs\"",
            "\"residual\"",
            "\"tolerance\"",
            "\"pass\"",
        ];
        let mut last = 0;
        for field in fields {
            let pos = json.find(field).unwrap_or_else(|| panic!("missing {field}"));
            assert!(pos > last || last == 0, "{field} out of order in {json}");
            last = pos;
        }
    }
}
