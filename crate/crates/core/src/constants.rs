//! The structure-constant table of the generated algebra in the grid
//! basis: every pairwise (super)bracket decomposed exactly over the
//! basis, with a table-only Jacobi audit for the export.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::CycNum;
use crate::genesis::{generate_basis, AlgebraMode, BasisElement, Graded, Label};
use crate::matrix::{decompose_in_basis, ExactMatrix, MatError, Parity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    /// A bracket fell outside the basis span: a fatal correctness bug.
    ClosureViolation { i: usize, j: usize },
    Mat(MatError),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::ClosureViolation { i, j } => {
                write!(f, "bracket of basis elements {i} and {j} left the span")
            }
            TableError::Mat(e) => write!(f, "{e:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    pub mode: AlgebraMode,
    pub labels: Vec<String>,
    pub parities: Vec<Parity>,
    /// Sparse (i, j, k, c) with [b_i, b_j] = sum_k c b_k. Plain mode
    /// stores i < j only; super mode stores all ordered pairs, since
    /// brackets of odd elements are symmetric, not antisymmetric.
    pub entries: Vec<(usize, usize, usize, CycNum)>,
    grid_labels: Vec<Label>,
}

impl StructureTable {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn grid_label(&self, i: usize) -> Label {
        self.grid_labels[i]
    }

    /// Coordinates of [b_i, b_j] read from the table, applying
    /// antisymmetry for the unstored plain-mode half.
    pub fn bracket_coords(&self, i: usize, j: usize) -> Vec<CycNum> {
        let order = self.mode.field_order();
        let mut out = vec![CycNum::zero(order); self.dim()];
        let (a, b, negate) = if !self.mode.is_super() && i > j {
            (j, i, true)
        } else {
            (i, j, false)
        };
        if !self.mode.is_super() && a == b {
            return out;
        }
        for (ei, ej, k, c) in &self.entries {
            if *ei == a && *ej == b {
                out[*k] = if negate { c.clone().neg() } else { c.clone() };
            }
        }
        out
    }

    /// Number of nonzero terms in [b_i, b_j].
    pub fn support(&self, i: usize, j: usize) -> usize {
        self.bracket_coords(i, j)
            .iter()
            .filter(|c| !c.is_zero())
            .count()
    }
}

/// The independent basis the table is written in: the generated list
/// with zero elements dropped (super mode lists one zero element).
pub fn table_basis(mode: AlgebraMode) -> Vec<BasisElement> {
    generate_basis(mode)
        .expect("valid mode")
        .into_iter()
        .filter(|b| !b.matrix.is_zero())
        .collect()
}

/// Decomposes every pairwise bracket over the basis. Any bracket that
/// leaves the span is a closure violation and aborts the build.
pub fn build_table(mode: AlgebraMode) -> Result<StructureTable, TableError> {
    let basis = table_basis(mode);
    let mats: Vec<ExactMatrix> = basis.iter().map(|b| b.matrix.clone()).collect();
    let graded: Vec<Graded> = basis.iter().map(|b| b.graded()).collect();
    let mut entries = Vec::new();
    let dim = basis.len();
    for i in 0..dim {
        for j in 0..dim {
            if !mode.is_super() && j <= i {
                continue;
            }
            let b = mode.ad(&graded[i], &graded[j]);
            if b.matrix.is_zero() {
                continue;
            }
            let coords = decompose_in_basis(&b.matrix, &mats).map_err(|e| match e {
                MatError::NotInSpan => TableError::ClosureViolation { i, j },
                other => TableError::Mat(other),
            })?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    Ok(StructureTable {
        mode,
        labels: basis.iter().map(|b| b.label_string()).collect(),
        parities: basis.iter().map(|b| b.parity).collect(),
        entries,
        grid_labels: basis.iter().map(|b| b.label).collect(),
    })
}

fn axpy(acc: &mut [CycNum], c: &CycNum, v: &[CycNum]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a
                .try_add(&c.try_mul(x).expect("same order"))
                .expect("same order");
        }
    }
}

/// Coordinates of [[b_i, b_j], b_k] computed from the table alone.
fn double_bracket(table: &StructureTable, i: usize, j: usize, k: usize) -> Vec<CycNum> {
    let order = table.mode.field_order();
    let mut out = vec![CycNum::zero(order); table.dim()];
    for (m, c) in table.bracket_coords(i, j).into_iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut out, &c, &table.bracket_coords(m, k));
        }
    }
    out
}

fn parity_sign(order: u32, p: Parity, q: Parity) -> CycNum {
    if p == Parity::Odd && q == Parity::Odd {
        CycNum::one(order).neg()
    } else {
        CycNum::one(order)
    }
}

/// Checks the (super) Jacobi identity for all basis triples using only
/// the exported table; returns the first failing triple if any.
pub fn verify_jacobi_table(table: &StructureTable) -> Option<(usize, usize, usize)> {
    let order = table.mode.field_order();
    let dim = table.dim();
    let p = &table.parities;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                // (-1)^{|i||k|}[[i,j],k] + (-1)^{|j||i|}[[j,k],i]
                //   + (-1)^{|k||j|}[[k,i],j] = 0; in plain mode all
                // signs are +1 and this is the ordinary Jacobi cycle.
                let mut acc = vec![CycNum::zero(order); dim];
                axpy(
                    &mut acc,
                    &parity_sign(order, p[i], p[k]),
                    &double_bracket(table, i, j, k),
                );
                axpy(
                    &mut acc,
                    &parity_sign(order, p[j], p[i]),
                    &double_bracket(table, j, k, i),
                );
                axpy(
                    &mut acc,
                    &parity_sign(order, p[k], p[j]),
                    &double_bracket(table, k, i, j),
                );
                if acc.iter().any(|c| !c.is_zero()) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genesis::Label;

    #[test]
    fn plain_n2_table() {
        let table = build_table(AlgebraMode::plain(2).unwrap()).unwrap();
        assert_eq!(table.labels, vec!["D", "S", "T(1,1)"]);
        // [D,S] = T(1,1); [D,T(1,1)] = 4S; [S,T(1,1)] = -4D.
        let c = table.bracket_coords(0, 1);
        assert!(c[0].is_zero() && c[1].is_zero());
        assert!(c[2].is_one());
        let c = table.bracket_coords(0, 2);
        assert_eq!(c[1], CycNum::from_integer(2, 4));
        let c = table.bracket_coords(1, 2);
        assert_eq!(c[0], CycNum::from_integer(2, -4));
        // antisymmetry via the unstored half
        let c = table.bracket_coords(1, 0);
        assert_eq!(c[2], CycNum::from_integer(2, -1));
        assert_eq!(table.support(0, 0), 0);
    }

    #[test]
    fn jacobi_from_table_alone() {
        for n in 2..=4u32 {
            let table = build_table(AlgebraMode::plain(n).unwrap()).unwrap();
            assert_eq!(verify_jacobi_table(&table), None, "n={n}");
        }
        for n in 1..=2u32 {
            let table = build_table(AlgebraMode::super_mode(n).unwrap()).unwrap();
            assert_eq!(verify_jacobi_table(&table), None, "super n={n}");
        }
    }

    #[test]
    fn table_matches_matrix_brackets() {
        for mode in [
            AlgebraMode::plain(3).unwrap(),
            AlgebraMode::plain(4).unwrap(),
            AlgebraMode::super_mode(2).unwrap(),
        ] {
            let table = build_table(mode).unwrap();
            let basis = table_basis(mode);
            let mats: Vec<ExactMatrix> = basis.iter().map(|b| b.matrix.clone()).collect();
            let graded: Vec<Graded> = basis.iter().map(|b| b.graded()).collect();
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let b = mode.ad(&graded[i], &graded[j]);
                    let direct = if b.matrix.is_zero() {
                        vec![CycNum::zero(mode.field_order()); basis.len()]
                    } else {
                        decompose_in_basis(&b.matrix, &mats).unwrap()
                    };
                    assert_eq!(table.bracket_coords(i, j), direct, "{mode} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn single_term_support_off_diagonal() {
        let n = 3u32;
        let mode = AlgebraMode::plain(n).unwrap();
        let table = build_table(mode).unwrap();
        for i in 0..table.dim() {
            for j in 0..table.dim() {
                let (Label::T(m, _), Label::T(mp, _)) =
                    (table.grid_label(i), table.grid_label(j))
                else {
                    continue;
                };
                if m < n && mp < n && (m + mp) % n != 0 {
                    assert!(
                        table.support(i, j) <= 1,
                        "({i},{j}) support {}",
                        table.support(i, j)
                    );
                }
            }
        }
    }
}
