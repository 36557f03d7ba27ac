//! JSON forms of matrices, polynomials, reports and series.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::alexander::{normalize_rat_unit, AlexReport};
use crate::algebra::series::z_names;
use crate::algebra::text::{format_poly, format_ratfunc, parse_poly, parse_ratfunc};
use crate::algebra::{LaurentPoly, RatMatrix};
use crate::error::{Error, Result};
use crate::finitetype::SeriesMatrix;
use crate::gassner::GassnerMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub vars: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &RatMatrix, vars: &[String]) -> Self {
        let entries = (0..m.rows()).map(|i| (0..m.cols()).map(|j| format_ratfunc(&m[(i, j)], vars)).collect()).collect();
        MatrixJson { n: m.rows(), vars: vars.to_vec(), entries }
    }

    pub fn to_matrix(&self) -> Result<RatMatrix> {
        if self.entries.len() != self.n {
            return Err(Error::Shape(format!("{} rows for n = {}", self.entries.len(), self.n)));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| parse_ratfunc(s, &self.vars)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RatMatrix::from_rows(self.vars.len(), rows)
    }
}

pub fn matrix_to_json(m: &RatMatrix, vars: &[String]) -> Value {
    serde_json::to_value(MatrixJson::from_matrix(m, vars)).expect("serializable")
}

pub fn gassner_to_json(g: &GassnerMatrix) -> Value {
    matrix_to_json(&g.matrix, &g.var_names)
}

pub fn matrix_from_json(text: &str) -> Result<(RatMatrix, Vec<String>)> {
    let mj: MatrixJson = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    Ok((mj.to_matrix()?, mj.vars))
}

pub fn poly_to_json(p: &LaurentPoly, vars: &[String]) -> Value {
    json!({ "vars": vars, "poly": format_poly(p, vars) })
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let vars: Vec<String> = serde_json::from_value(v["vars"].clone()).map_err(|e| Error::parse(1, 1, e.to_string()))?;
    let text = v["poly"].as_str().ok_or_else(|| Error::parse(1, 1, "missing 'poly'"))?;
    parse_poly(text, &vars)
}

pub fn report_to_json(r: &AlexReport) -> Value {
    let vars = &r.gassner.var_names;
    let one = vec!["t".to_string()];
    json!({
        "n": r.n,
        "crossings": r.crossings,
        "vars": vars,
        "gassner": gassner_to_json(&r.gassner),
        "reduced": r.reduced.as_ref().map(|m| matrix_to_json(m, vars)),
        "torsion": format_poly(&r.torsion, vars),
        "torsion_one_var": format_poly(&r.torsion_one_var, &one),
        "closure_polynomial": r.closure_poly.as_ref().map(|p| format_poly(p, vars)),
        "closure_polynomial_one_var": format_poly(&r.closure_one_var, &one),
        "alexander_function": format_ratfunc(&normalize_rat_unit(&r.alexander_function), vars),
        "alexander_function_one_var": format_ratfunc(&normalize_rat_unit(&r.alexander_function_one_var), &one),
        "checks": r.checks.iter().map(|(name, ok)| json!({ "name": name, "passed": ok })).collect::<Vec<_>>(),
    })
}

/// Multi-index to rational coefficient matrix.
pub fn series_to_json(s: &SeriesMatrix) -> Value {
    let coeffs: Vec<Value> = s
        .coefficients()
        .into_iter()
        .map(|(idx, m)| {
            let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            json!({ "index": idx, "matrix": rows })
        })
        .collect();
    json!({ "n": s.n, "vars": z_names(s.nvars), "order": s.bound, "coefficients": coeffs })
}
