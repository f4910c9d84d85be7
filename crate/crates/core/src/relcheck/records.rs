//! Relation records: one verified identity each, with the oracle
//! coefficient extracted from exact matrix computation alongside the
//! printed closed-form prediction (when one exists).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::CycNum;
use crate::matrix::ExactMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Oracle coefficient exists and equals the prediction.
    Match,
    /// Proportionality holds but the printed coefficient is wrong.
    CoefficientMismatch,
    /// Proportionality (or the identity) holds; no prediction attached.
    ProportionalityHolds,
    /// The claimed identity does not hold at all.
    Fails,
}

impl Status {
    /// Whether the underlying matrix identity is established, printed
    /// coefficient aside.
    pub fn identity_holds(self) -> bool {
        !matches!(self, Status::Fails)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::CoefficientMismatch => "coefficient-mismatch",
            Status::ProportionalityHolds => "proportionality-holds",
            Status::Fails => "fails",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct RelationRecord {
    pub id: String,
    /// Human-readable recipe for the left-hand side.
    pub lhs: String,
    /// Label of the reference element the result is compared against
    /// ("0" for exact-zero relations).
    pub reference: String,
    /// Where the checked closed form comes from.
    pub locus: String,
    pub oracle_coeff: Option<CycNum>,
    pub predicted_coeff: Option<CycNum>,
    pub status: Status,
    /// The exact left-hand-side matrix; kept for failing records so the
    /// report can show what was actually computed.
    pub oracle_value: Option<ExactMatrix>,
}

impl RelationRecord {
    /// Compares `value` against `reference` by exact proportionality
    /// and classifies against the optional prediction.
    pub fn proportional(
        id: String,
        lhs: String,
        locus: String,
        reference_label: String,
        reference: &ExactMatrix,
        value: ExactMatrix,
        predicted: Option<CycNum>,
    ) -> Self {
        let oracle = reference
            .is_proportional(&value)
            .expect("reference must be nonzero and compatible");
        let status = match (&oracle, &predicted) {
            (Some(c), Some(p)) if c == p => Status::Match,
            (Some(_), Some(_)) => Status::CoefficientMismatch,
            (Some(_), None) => Status::ProportionalityHolds,
            (None, _) => Status::Fails,
        };
        RelationRecord {
            id,
            lhs,
            reference: reference_label,
            locus,
            oracle_coeff: oracle,
            predicted_coeff: predicted,
            status,
            oracle_value: Some(value),
        }
    }

    /// An identity with an exact-zero right-hand side.
    pub fn exact_zero(id: String, lhs: String, locus: String, value: ExactMatrix) -> Self {
        let status = if value.is_zero() {
            Status::Match
        } else {
            Status::Fails
        };
        RelationRecord {
            id,
            lhs,
            reference: String::from("0"),
            locus,
            oracle_coeff: None,
            predicted_coeff: None,
            status,
            oracle_value: Some(value),
        }
    }

    /// An identity between two fully computed sides.
    pub fn equality(
        id: String,
        lhs: String,
        rhs: String,
        locus: String,
        lhs_value: &ExactMatrix,
        rhs_value: &ExactMatrix,
    ) -> Self {
        let status = if lhs_value == rhs_value {
            Status::Match
        } else {
            Status::Fails
        };
        RelationRecord {
            id,
            lhs,
            reference: rhs,
            locus,
            oracle_coeff: None,
            predicted_coeff: None,
            status,
            oracle_value: Some(lhs_value.clone()),
        }
    }

    /// A record established by some other means (e.g. a span test).
    pub fn checked(id: String, lhs: String, locus: String, reference: String, holds: bool) -> Self {
        RelationRecord {
            id,
            lhs,
            reference,
            locus,
            oracle_coeff: None,
            predicted_coeff: None,
            status: if holds { Status::Match } else { Status::Fails },
            oracle_value: None,
        }
    }

    /// True when this record contradicts a printed closed form.
    pub fn is_discrepancy(&self) -> bool {
        matches!(self.status, Status::CoefficientMismatch | Status::Fails)
    }
}

/// The subset of records contradicting printed closed forms, in input
/// order. Empty iff everything printed matched exactly.
pub fn discrepancies(records: &[RelationRecord]) -> Vec<&RelationRecord> {
    records.iter().filter(|r| r.is_discrepancy()).collect()
}

/// Sorts a merged report deterministically by id.
pub fn sort_by_id(records: &mut [RelationRecord]) {
    records.sort_by(|a, b| a.id.cmp(&b.id));
}
