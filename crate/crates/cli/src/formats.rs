//! JSON formats for the exported artifacts. Serialization is fully
//! deterministic (fixed field order, decimal-string integers) so that
//! identical invocations produce byte-identical files and every format
//! round-trips exactly.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use clockshift_core::constants::StructureTable;
use clockshift_core::genesis::BasisElement;
use clockshift_core::matrix::{Format, MatError};
use clockshift_core::relcheck::RelationRecord;
use clockshift_core::{AlgebraMode, CycNum, ExactMatrix};

#[derive(Debug)]
pub enum FormatError {
    BadInteger(String),
    ZeroDenominator,
    BadFormat(String),
    Matrix(MatError),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::BadInteger(s) => write!(f, "invalid integer literal: {s}"),
            FormatError::ZeroDenominator => write!(f, "zero denominator"),
            FormatError::BadFormat(s) => write!(f, "unknown matrix format: {s}"),
            FormatError::Matrix(e) => write!(f, "matrix error: {e:?}"),
        }
    }
}

impl std::error::Error for FormatError {}

/// A cyclotomic number: coefficients of 1, z, z^2, ... mod the
/// order-th cyclotomic polynomial, as exact [numerator, denominator]
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycJson {
    pub order: u32,
    pub coeffs: Vec<[String; 2]>,
}

pub fn cyc_to_json(c: &CycNum) -> CycJson {
    CycJson {
        order: c.order(),
        coeffs: c
            .coeffs()
            .iter()
            .map(|r| [r.numer().to_string(), r.denom().to_string()])
            .collect(),
    }
}

pub fn cyc_from_json(j: &CycJson) -> Result<CycNum, FormatError> {
    let mut coeffs = Vec::with_capacity(j.coeffs.len());
    for [num, den] in &j.coeffs {
        let n = BigInt::from_str(num).map_err(|_| FormatError::BadInteger(num.clone()))?;
        let d = BigInt::from_str(den).map_err(|_| FormatError::BadInteger(den.clone()))?;
        if d == BigInt::from(0) {
            return Err(FormatError::ZeroDenominator);
        }
        coeffs.push(BigRational::new(n, d));
    }
    Ok(CycNum::from_raw(j.order, coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub order: u32,
    pub format: String,
    /// Rows of entries, each a CycNum of the shared order.
    pub entries: Vec<Vec<CycJson>>,
}

fn format_str(f: Format) -> &'static str {
    match f {
        Format::Plain => "plain",
        Format::Alternating => "alternating",
    }
}

pub fn matrix_to_json(m: &ExactMatrix) -> MatrixJson {
    MatrixJson {
        dim: m.dim(),
        order: m.order(),
        format: String::from(format_str(m.format())),
        entries: (0..m.dim())
            .map(|i| (0..m.dim()).map(|j| cyc_to_json(m.at(i, j))).collect())
            .collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<ExactMatrix, FormatError> {
    let format = match j.format.as_str() {
        "plain" => Format::Plain,
        "alternating" => Format::Alternating,
        other => return Err(FormatError::BadFormat(String::from(other))),
    };
    let mut entries = Vec::with_capacity(j.dim * j.dim);
    for row in &j.entries {
        for e in row {
            entries.push(cyc_from_json(e)?);
        }
    }
    ExactMatrix::from_entries(j.dim, j.order, format, entries).map_err(FormatError::Matrix)
}

fn mode_str(mode: AlgebraMode) -> &'static str {
    if mode.is_super() {
        "super"
    } else {
        "plain"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub label: String,
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub mode: String,
    pub n: u32,
    pub elements: Vec<ElementJson>,
}

pub fn basis_to_json(mode: AlgebraMode, elements: &[BasisElement]) -> BasisJson {
    BasisJson {
        mode: String::from(mode_str(mode)),
        n: mode.n(),
        elements: elements
            .iter()
            .map(|b| ElementJson {
                label: b.label_string(),
                matrix: matrix_to_json(&b.matrix),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub id: String,
    pub lhs: String,
    pub reference: String,
    pub locus: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_coeff: Option<CycJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub predicted_coeff: Option<CycJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_value: Option<MatrixJson>,
}

/// One record as exported: the computed matrix is included only for
/// discrepancies unless `full` asks for everything.
pub fn record_to_json(r: &RelationRecord, full: bool) -> RecordJson {
    RecordJson {
        id: r.id.clone(),
        lhs: r.lhs.clone(),
        reference: r.reference.clone(),
        locus: r.locus.clone(),
        status: String::from(r.status.as_str()),
        oracle_coeff: r.oracle_coeff.as_ref().map(cyc_to_json),
        predicted_coeff: r.predicted_coeff.as_ref().map(cyc_to_json),
        oracle_value: if full || r.is_discrepancy() {
            r.oracle_value.as_ref().map(matrix_to_json)
        } else {
            None
        },
    }
}

pub fn report_to_json(records: &[RelationRecord], full: bool) -> Vec<RecordJson> {
    records.iter().map(|r| record_to_json(r, full)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsJson {
    pub mode: String,
    pub n: u32,
    pub labels: Vec<String>,
    /// Sparse entries [i, j, k, c] meaning [b_i, b_j] = sum_k c b_k.
    pub entries: Vec<(usize, usize, usize, CycJson)>,
}

pub fn constants_to_json(table: &StructureTable) -> ConstantsJson {
    ConstantsJson {
        mode: String::from(mode_str(table.mode)),
        n: table.mode.n(),
        labels: table.labels.clone(),
        entries: table
            .entries
            .iter()
            .map(|(i, j, k, c)| (*i, *j, *k, cyc_to_json(c)))
            .collect(),
    }
}

/// Canonical serialization used for every artifact.
pub fn to_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("serialization cannot fail");
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use clockshift_core::genesis::generate_basis;

    #[test]
    fn cyc_round_trip() {
        let c = CycNum::zeta_pow(5, 3)
            .scale(&BigRational::new(BigInt::from(-7), BigInt::from(3)))
            .try_add(&CycNum::from_integer(5, 2))
            .unwrap();
        let j = cyc_to_json(&c);
        let back = cyc_from_json(&j).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_bytes(&cyc_to_json(&back)), to_bytes(&j));
    }

    #[test]
    fn matrix_round_trip() {
        let mode = AlgebraMode::super_mode(2).unwrap();
        for b in generate_basis(mode).unwrap() {
            let j = matrix_to_json(&b.matrix);
            let back = matrix_from_json(&j).unwrap();
            assert_eq!(back, b.matrix);
        }
    }

    #[test]
    fn record_matrix_elision() {
        let mode = AlgebraMode::plain(3).unwrap();
        let recs = clockshift_core::relcheck::verify_all_relations(mode);
        let matched = recs.iter().find(|r| !r.is_discrepancy()).unwrap();
        assert!(record_to_json(matched, false).oracle_value.is_none());
        assert!(record_to_json(matched, true).oracle_value.is_some());
        let bad = recs.iter().find(|r| r.is_discrepancy()).unwrap();
        assert!(record_to_json(bad, false).oracle_value.is_some());
    }
}
