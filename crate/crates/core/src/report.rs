//! Shared report plumbing: schema version, dual exact/decimal numbers,
//! JSON rendering of cyclotomic values, structured error objects.

use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclotomic::Cyc;
use crate::error::Error;
use crate::num::{rat_decimal, rat_string, rat_to_f64, Rat};

/// Version stamp carried by every report file.
pub const SCHEMA_VERSION: u32 = 1;

/// A number carried in both exact and decimal form so reports stay
/// diff-stable.
#[derive(Clone, Debug, Serialize)]
pub struct DualNumber {
    pub exact: Option<String>,
    pub float: f64,
}

impl DualNumber {
    pub fn from_rat(r: &Rat) -> Self {
        DualNumber { exact: Some(rat_string(r)), float: rat_to_f64(r) }
    }

    pub fn from_f64(x: f64) -> Self {
        DualNumber { exact: None, float: x }
    }

    pub fn decimal(&self, digits: usize) -> Option<String> {
        self.exact
            .as_ref()
            .and_then(|s| crate::num::parse_rat(s).ok())
            .map(|r| rat_decimal(&r, digits))
    }
}

/// JSON rendering of an exact scalar: "p/q" for rationals, {re, im} for
/// Gaussian values, {order, coeffs} in general.
pub fn cyc_to_json(c: &Cyc) -> Value {
    if let Some(r) = c.try_rat() {
        return Value::String(rat_string(&r));
    }
    let re = c.re();
    let im = (c.clone() - re.clone()) * Cyc::i().inv();
    if let (Some(re), Some(im)) = (re.try_rat(), im.try_rat()) {
        return json!({"re": rat_string(&re), "im": rat_string(&im)});
    }
    // power-basis coordinates in Q(zeta_order)
    let coeffs: Vec<String> = c.coeffs().iter().map(rat_string).collect();
    json!({"order": c.order(), "coeffs": coeffs})
}

/// Structured error object for machine-readable CLI output.
#[derive(Clone, Debug, Serialize)]
pub struct ErrorObject {
    pub code: String,
    pub module: String,
    pub message: String,
    pub context: Value,
}

impl ErrorObject {
    pub fn new(err: &Error, module: &str, context: Value) -> Self {
        ErrorObject {
            code: err.code().to_string(),
            module: module.to_string(),
            message: err.to_string(),
            context,
        }
    }
}
