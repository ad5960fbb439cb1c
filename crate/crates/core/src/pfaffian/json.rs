use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{infer_twists, SkewMatrix, UPPER_PAIRS};
use crate::error::{Error, Result};
use crate::exactalg::FieldMode;
use crate::multipoly::{format_polynomial, parse_polynomial, Grading, Polynomial};

/// Matrix file format: `{"entries": {"1,2": "t1", ...}}`, upper triangle
/// only; missing entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub entries: BTreeMap<String, String>,
}

pub fn matrix_to_json(m: &SkewMatrix, grading: &Grading) -> MatrixJson {
    let entries = m
        .upper_entries()
        .map(|((i, j), e)| (format!("{i},{j}"), format_polynomial(e, grading.names())))
        .collect();
    MatrixJson { entries }
}

/// Parses and validates a matrix: keys must be upper-triangle pairs and the
/// result must be twist-homogeneous under `grading`.
pub fn matrix_from_json(json: &MatrixJson, grading: &Grading, mode: FieldMode) -> Result<SkewMatrix> {
    let mut upper = vec![Polynomial::zero(grading.nvars()); 10];
    for (key, text) in &json.entries {
        let pair = key
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)));
        let k = pair
            .and_then(|p| UPPER_PAIRS.iter().position(|&u| u == p))
            .ok_or_else(|| Error::InvalidModel(format!("bad entry key `{key}`")))?;
        upper[k] = parse_polynomial(text, grading.names(), mode)?;
    }
    let m = SkewMatrix::from_upper(upper)?;
    infer_twists(&m, grading)?;
    Ok(m)
}
