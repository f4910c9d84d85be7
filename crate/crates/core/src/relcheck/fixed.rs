//! Conjugation by D and by S has no common fixed trace-zero matrix:
//! the intersection of the eigenvalue-1 eigenspaces of Ad_D and Ad_S
//! inside sl(n) is trivial. Computed as an exact kernel dimension.

use alloc::vec::Vec;

use crate::cyclo::CycNum;
use crate::genesis::{build_generators, AlgebraMode};
use crate::matrix::{Echelon, ExactMatrix};

/// Dimension of {x in Mat(n) : DxD^{-1} = x, SxS^{-1} = x, tr x = 0},
/// i.e. the common fixed space of both conjugations inside the
/// trace-zero matrices. Plain mode only.
pub fn common_fixed_space(mode: AlgebraMode) -> usize {
    assert!(!mode.is_super(), "defined for the plain algebra");
    let (d, s) = build_generators(mode).expect("valid mode");
    let n = mode.dim();
    let order = mode.field_order();
    let d = d.matrix;
    let s = s.matrix;
    let d_inv = d.pow(mode.grid_size() - 1);
    let s_inv = s.pow(mode.grid_size() - 1);

    // Column-by-column image of x -> (Ad_D(x) - x, Ad_S(x) - x, tr x);
    // the kernel dimension is n^2 minus the rank of this map.
    let mut ech = Echelon::new(order);
    let mut rank = 0;
    for i in 0..n {
        for j in 0..n {
            let mut e = ExactMatrix::zero(n, order, mode.format());
            *e.at_mut(i, j) = CycNum::one(order);
            let ad_d = d.mat_mul(&e).unwrap().mat_mul(&d_inv).unwrap().sub(&e).unwrap();
            let ad_s = s.mat_mul(&e).unwrap().mat_mul(&s_inv).unwrap().sub(&e).unwrap();
            let mut col: Vec<CycNum> = Vec::with_capacity(2 * n * n + 1);
            col.extend(ad_d.entries().iter().cloned());
            col.extend(ad_s.entries().iter().cloned());
            col.push(e.trace());
            if ech.insert(col) {
                rank += 1;
            }
        }
    }
    n * n - rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_common_fixed_vector() {
        for n in 2..=5u32 {
            let mode = AlgebraMode::plain(n).unwrap();
            assert_eq!(common_fixed_space(mode), 0, "n={n}");
        }
    }

    #[test]
    fn dropping_one_constraint_leaves_fixed_matrices() {
        // Sanity check on the kernel machinery: conjugation by D alone
        // fixes every diagonal matrix, so without the S and trace
        // constraints the kernel has dimension n.
        let mode = AlgebraMode::plain(3).unwrap();
        let (d, _) = build_generators(mode).unwrap();
        let d = d.matrix;
        let d_inv = d.pow(2);
        let mut ech = Echelon::new(3);
        let mut rank = 0;
        for i in 0..3 {
            for j in 0..3 {
                let mut e = ExactMatrix::zero(3, 3, mode.format());
                *e.at_mut(i, j) = CycNum::one(3);
                let img = d.mat_mul(&e).unwrap().mat_mul(&d_inv).unwrap().sub(&e).unwrap();
                if ech.insert(img.entries().to_vec()) {
                    rank += 1;
                }
            }
        }
        assert_eq!(9 - rank, 3);
    }
}
