use crate::CliError;
use parbetti::algebra::rational::{format_rational, parse_rational};
use parbetti::{BettiResult, ComputeOptions, Instance, Method, ParabolicPoint, QuasiParabolicData};
use serde::{Deserialize, Serialize};

/// Input file: genus, degree, one entry per marked point, and options.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub genus: u32,
    pub degree: i64,
    pub points: Vec<PointDocument>,
    #[serde(default)]
    pub options: OptionsDocument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDocument {
    /// Exact fractions such as `"1/3"` or `"0"`.
    pub weights: Vec<String>,
    pub multiplicities: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsDocument {
    #[serde(default = "default_method")]
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<i64>,
    #[serde(default)]
    pub force: bool,
}

fn default_method() -> String {
    Method::Closed.name().to_string()
}

impl Default for OptionsDocument {
    fn default() -> Self {
        Self { method: default_method(), truncation: None, force: false }
    }
}

impl InstanceDocument {
    /// Parses JSON text. Syntax and type errors carry line and column.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance documents always serialize")
    }

    /// Validates every field and builds the engine instance.
    pub fn to_instance(&self) -> Result<Instance, CliError> {
        if self.points.is_empty() {
            return Err(CliError::field("points", "at least one marked point is required"));
        }
        let mut points = Vec::with_capacity(self.points.len());
        for (i, p) in self.points.iter().enumerate() {
            let mut weights = Vec::with_capacity(p.weights.len());
            for (j, w) in p.weights.iter().enumerate() {
                let r = parse_rational(w).map_err(|e| CliError::field(format!("points[{i}].weights[{j}]"), e))?;
                weights.push(r);
            }
            let point = ParabolicPoint::new(weights, p.multiplicities.clone())
                .map_err(|e| CliError::field(format!("points[{i}]"), e))?;
            points.push(point);
        }
        let data = QuasiParabolicData::new(points).map_err(|e| CliError::field("points", e))?;
        Ok(Instance::new(self.genus, self.degree, data))
    }

    pub fn from_instance(instance: &Instance, options: OptionsDocument) -> Self {
        let points = instance
            .data
            .points()
            .iter()
            .map(|p| PointDocument {
                weights: p.weights().iter().map(format_rational).collect(),
                multiplicities: p.multiplicities().to_vec(),
            })
            .collect();
        Self { genus: instance.genus, degree: instance.degree, points, options }
    }

    pub fn method(&self) -> Result<Method, CliError> {
        self.options.method.parse().map_err(|e| CliError::field("options.method", e))
    }

    pub fn compute_options(&self) -> Result<ComputeOptions, CliError> {
        if let Some(n) = self.options.truncation {
            if n < 0 {
                return Err(CliError::field("options.truncation", "must be non-negative"));
            }
        }
        Ok(ComputeOptions { truncation: self.options.truncation, force: self.options.force })
    }
}

/// Serializable mirror of a [`BettiResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub dim: i64,
    pub betti: Vec<u64>,
    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub polynomial: Vec<(i64, String)>,
    pub empty: bool,
    pub ss_eq_stable: bool,
    pub method: String,
    /// Wall-clock seconds, present only when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<f64>,
}

impl ResultDocument {
    pub fn from_result(r: &BettiResult, timing: Option<f64>) -> Self {
        Self {
            dim: r.dim,
            betti: r.betti.clone(),
            polynomial: r.poly.terms().map(|(e, c)| (e, format_rational(c))).collect(),
            empty: r.empty,
            ss_eq_stable: r.ss_eq_stable,
            method: r.method.name().to_string(),
            timing,
        }
    }

    /// Rebuilds the engine result; fails only on malformed coefficients.
    pub fn to_result(&self) -> Result<BettiResult, CliError> {
        let mut poly = parbetti::Poly::zero();
        for (e, c) in &self.polynomial {
            let c = parse_rational(c).map_err(|err| CliError::field("polynomial", err))?;
            poly.add_term(*e, c);
        }
        let method = self.method.parse().map_err(|e| CliError::field("method", e))?;
        Ok(BettiResult::from_poly(poly, self.dim, method, self.ss_eq_stable)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CASE_A: &str = r#"{"genus": 2, "degree": 1,
        "points": [{"weights": ["0", "1/3"], "multiplicities": [1, 1]}]}"#;

    #[test]
    fn parses_and_defaults_options() {
        let doc = InstanceDocument::parse(CASE_A).unwrap();
        assert_eq!(doc.options, OptionsDocument::default());
        let inst = doc.to_instance().unwrap();
        assert_eq!(inst.moduli_dim(), 4);
    }

    #[test]
    fn decimal_weight_names_the_field() {
        let doc = InstanceDocument::parse(&CASE_A.replace("1/3", "0.333")).unwrap();
        match doc.to_instance() {
            Err(CliError::Field { field, .. }) => assert_eq!(field, "points[0].weights[1]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn numeric_weight_is_a_type_error_with_position() {
        let err = InstanceDocument::parse(&CASE_A.replace("\"1/3\"", "0.333")).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn unknown_field_is_rejected() {
        assert!(InstanceDocument::parse(&CASE_A.replace("\"genus\"", "\"genre\"")).is_err());
    }

    #[test]
    fn unequal_ranks_are_a_points_error() {
        let text = r#"{"genus": 1, "degree": 0, "points": [
            {"weights": ["0", "1/3"], "multiplicities": [1, 1]},
            {"weights": ["0"], "multiplicities": [3]}]}"#;
        let err = InstanceDocument::parse(text).unwrap().to_instance().unwrap_err();
        assert!(matches!(err, CliError::Field { ref field, .. } if field == "points"), "{err}");
    }
}
