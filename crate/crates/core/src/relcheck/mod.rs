//! Relation verification: every closed-form identity among the grid
//! elements is recomputed by exact matrix brute force and compared
//! against its printed coefficient, producing [`RelationRecord`]s.

mod records;

pub mod closed_form;
pub mod fixed;
pub mod grozman;
pub mod inventory;
pub mod paths;
pub mod relations;

pub use paths::{
    admissible_paths, all_paths, apply_path, count_paths, PathCount, PathWord, Step,
};
pub use closed_form::{standard_candidates, verify_bracket_closed_form, Candidate, FitReport};
pub use fixed::common_fixed_space;
pub use grozman::verify_grozman;
pub use inventory::{enumerate_relations, expected_count};
pub use records::{discrepancies, sort_by_id, RelationRecord, Status};
pub use relations::{
    verify_all_relations, verify_edge_relations, verify_path_relations, verify_power_relations,
};
