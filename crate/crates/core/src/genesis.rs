//! Construction of the Sylvester clock-and-shift generators and the
//! grid algorithm that produces a basis of sl(n) (plain mode) or
//! sl(n|n) (super mode) from them by iterated (super)bracketing.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::CycNum;
use crate::matrix::{rank, Echelon, ExactMatrix, Format, Parity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenesisError {
    /// n < 2 in plain mode or n < 1 in super mode.
    InvalidN { n: u32, is_super: bool },
    IndexOutOfRange { m: u32, k: u32 },
    /// The closed-form matrix is only available in plain mode.
    PlainOnly,
}

impl fmt::Display for GenesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenesisError::InvalidN { n, is_super } => {
                let min = if *is_super { 1 } else { 2 };
                write!(f, "n = {n} out of range (need n >= {min})")
            }
            GenesisError::IndexOutOfRange { m, k } => {
                write!(f, "grid index ({m}, {k}) out of range")
            }
            GenesisError::PlainOnly => write!(f, "operation is only defined in plain mode"),
        }
    }
}

/// Which algebra the grid algorithm targets.
///
/// Plain mode works with n x n matrices over Q(zeta_n). Super mode
/// reuses the same clock and shift matrices at size 2n on an
/// alternating-format superspace; its field order is 2n because the
/// 2n-th-power cap relation only closes with a primitive 2n-th root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraMode {
    Plain { n: u32 },
    Super { n: u32 },
}

impl AlgebraMode {
    pub fn plain(n: u32) -> Result<Self, GenesisError> {
        if n < 2 {
            return Err(GenesisError::InvalidN { n, is_super: false });
        }
        Ok(AlgebraMode::Plain { n })
    }

    pub fn super_mode(n: u32) -> Result<Self, GenesisError> {
        if n < 1 {
            return Err(GenesisError::InvalidN { n, is_super: true });
        }
        Ok(AlgebraMode::Super { n })
    }

    pub fn n(&self) -> u32 {
        match self {
            AlgebraMode::Plain { n } | AlgebraMode::Super { n } => *n,
        }
    }

    pub fn is_super(&self) -> bool {
        matches!(self, AlgebraMode::Super { .. })
    }

    /// Side length of the generation grid: n (plain) or 2n (super).
    pub fn grid_size(&self) -> u32 {
        match self {
            AlgebraMode::Plain { n } => *n,
            AlgebraMode::Super { n } => 2 * n,
        }
    }

    pub fn dim(&self) -> usize {
        self.grid_size() as usize
    }

    pub fn field_order(&self) -> u32 {
        self.grid_size()
    }

    pub fn format(&self) -> Format {
        if self.is_super() {
            Format::Alternating
        } else {
            Format::Plain
        }
    }

    /// The root of unity `a` used in all coefficient formulas.
    pub fn a(&self) -> CycNum {
        CycNum::zeta_pow(self.field_order(), 1)
    }

    /// Mode-aware adjoint action: [x, y] in plain mode, the graded
    /// bracket in super mode.
    pub fn ad(&self, x: &Graded, y: &Graded) -> Graded {
        let matrix = if self.is_super() {
            x.matrix
                .superbracket(&y.matrix, x.parity, y.parity)
                .expect("generated elements are homogeneous")
        } else {
            x.matrix.bracket(&y.matrix).expect("same shape")
        };
        Graded {
            matrix,
            parity: if x.parity == y.parity {
                Parity::Even
            } else {
                Parity::Odd
            },
        }
    }
}

impl fmt::Display for AlgebraMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraMode::Plain { n } => write!(f, "sl({n})"),
            AlgebraMode::Super { n } => write!(f, "sl({n}|{n})"),
        }
    }
}

/// A matrix together with its declared parity. In plain mode the
/// parity is carried along but never consulted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graded {
    pub matrix: ExactMatrix,
    pub parity: Parity,
}

/// Position (m, k) in the generation grid: m - 1 shift applications,
/// k - 1 clock applications past T(1,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridIndex {
    pub m: u32,
    pub k: u32,
}

/// Whether (m, k) labels a basis element of the generated algebra.
///
/// Plain mode excludes (1, n), (n, 1) and (n, n); super mode excludes
/// only (1, 2n) and (2n, 1).
pub fn admissible(mode: AlgebraMode, m: u32, k: u32) -> bool {
    let g = mode.grid_size();
    if m < 1 || m > g || k < 1 || k > g {
        return false;
    }
    if mode.is_super() {
        !((m == 1 && k == g) || (m == g && k == 1))
    } else {
        !((m == 1 && k == g) || (m == g && k == 1) || (m == g && k == g))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    D,
    S,
    T(u32, u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::D => write!(f, "D"),
            Label::S => write!(f, "S"),
            Label::T(m, k) => write!(f, "T({m},{k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub label: Label,
    pub matrix: ExactMatrix,
    pub parity: Parity,
}

impl BasisElement {
    pub fn graded(&self) -> Graded {
        Graded {
            matrix: self.matrix.clone(),
            parity: self.parity,
        }
    }

    pub fn label_string(&self) -> String {
        format!("{}", self.label)
    }
}

/// The clock matrix D = diag(1, a, a^2, ...) and the cyclic shift S.
/// In super mode D is even and S is odd.
pub fn build_generators(mode: AlgebraMode) -> Result<(BasisElement, BasisElement), GenesisError> {
    let dim = mode.dim();
    let order = mode.field_order();
    let format = mode.format();
    let mut d = ExactMatrix::zero(dim, order, format);
    for i in 0..dim {
        *d.at_mut(i, i) = CycNum::zeta_pow(order, i as i64);
    }
    let mut s = ExactMatrix::zero(dim, order, format);
    for i in 0..dim {
        *s.at_mut(i, (i + 1) % dim) = CycNum::one(order);
    }
    Ok((
        BasisElement {
            label: Label::D,
            matrix: d,
            parity: Parity::Even,
        },
        BasisElement {
            label: Label::S,
            matrix: s,
            parity: if mode.is_super() {
                Parity::Odd
            } else {
                Parity::Even
            },
        },
    ))
}

/// Runs the grid algorithm and returns D, S and the admissible T(m, k)
/// in deterministic order: D, S, then T lexicographic by (m, k).
///
/// The full grid (including inadmissible intermediates) is computed
/// internally; only admissible labels are emitted. Elements the span
/// list may render dependent (the super case) are emitted anyway and
/// left for `rank`/`closure_dimension` to adjudicate.
pub fn generate_basis(mode: AlgebraMode) -> Result<Vec<BasisElement>, GenesisError> {
    let grid = full_grid(mode)?;
    let (d, s) = build_generators(mode)?;
    let g = mode.grid_size();
    let mut out = vec![d, s];
    for m in 1..=g {
        for k in 1..=g {
            if !admissible(mode, m, k) {
                continue;
            }
            let e = &grid[(m - 1) as usize][(k - 1) as usize];
            // In super mode the listed element T(2n, n) comes out as the
            // zero matrix (the anticommutator with S cancels the k = n
            // diagonal pattern since a^n = -1); it is emitted anyway and
            // the rank report adjudicates the span count.
            debug_assert!(
                mode.is_super() || !e.matrix.is_zero(),
                "admissible T({m},{k}) must be nonzero"
            );
            out.push(BasisElement {
                label: Label::T(m, k),
                matrix: e.matrix.clone(),
                parity: e.parity,
            });
        }
    }
    Ok(out)
}

/// Every T(m, k) of the full grid, admissible or not, indexed by
/// (m - 1, k - 1). Rows 1..grid-1 follow the defining recursion
/// T(m, k) = (ad D)^{k-1}((ad S)^{m-1}(T(1,1))); the bottom row is
/// T(g, k) = ad S(T(g-1, k)).
pub fn full_grid(mode: AlgebraMode) -> Result<Vec<Vec<Graded>>, GenesisError> {
    let (d, s) = build_generators(mode)?;
    let d = d.graded();
    let s = s.graded();
    let g = mode.grid_size() as usize;
    let t11 = mode.ad(&d, &s);
    let mut rows: Vec<Vec<Graded>> = Vec::with_capacity(g);
    let mut row_start = t11;
    for _m in 1..g {
        let mut row = Vec::with_capacity(g);
        row.push(row_start.clone());
        for _k in 1..g {
            let prev = row.last().expect("non-empty row");
            row.push(mode.ad(&d, prev));
        }
        let next_start = mode.ad(&s, &row_start);
        rows.push(row);
        row_start = next_start;
    }
    // Bottom row from the row above it.
    let last = rows.last().expect("grid size >= 2");
    let bottom: Vec<Graded> = last.iter().map(|e| mode.ad(&s, e)).collect();
    rows.push(bottom);
    Ok(rows)
}

/// One grid element by index, admissible or not.
pub fn grid_element(mode: AlgebraMode, m: u32, k: u32) -> Result<Graded, GenesisError> {
    let g = mode.grid_size();
    if m < 1 || m > g || k < 1 || k > g {
        return Err(GenesisError::IndexOutOfRange { m, k });
    }
    let grid = full_grid(mode)?;
    Ok(grid[(m - 1) as usize][(k - 1) as usize].clone())
}

/// Dimension of the smallest bracket-closed subspace containing D and
/// S: adjoin pairwise (super)brackets of a spanning set until the rank
/// stops growing. Independent oracle for the span claims.
pub fn closure_dimension(mode: AlgebraMode) -> Result<usize, GenesisError> {
    let (d, s) = build_generators(mode)?;
    let mut ech = Echelon::new(mode.field_order());
    let mut reps: Vec<Graded> = Vec::new();
    let mut fresh: Vec<Graded> = Vec::new();
    for e in [d.graded(), s.graded()] {
        if ech.insert(e.matrix.entries().to_vec()) {
            fresh.push(e);
        }
    }
    while !fresh.is_empty() {
        let batch = core::mem::take(&mut fresh);
        for b in &batch {
            // [b, b] is only informative for odd super elements.
            if mode.is_super() && b.parity == Parity::Odd {
                let bb = mode.ad(b, b);
                if ech.insert(bb.matrix.entries().to_vec()) {
                    fresh.push(bb);
                }
            }
            for a in reps.iter().chain(batch.iter()) {
                let ab = mode.ad(a, b);
                if ech.insert(ab.matrix.entries().to_vec()) {
                    fresh.push(ab.clone());
                }
            }
        }
        reps.extend(batch);
    }
    Ok(ech.rank())
}

/// Rank of the generated spanning list, as a plain list of vectors.
pub fn basis_rank(mode: AlgebraMode) -> Result<usize, GenesisError> {
    let basis = generate_basis(mode)?;
    let mats: Vec<ExactMatrix> = basis.into_iter().map(|b| b.matrix).collect();
    Ok(rank(&mats).expect("uniform shape"))
}

/// The closed-form matrix for a non-diagonal T(m, k) in plain mode:
/// prefactor (1-a)^m (1-a^m)^{k-1} (-1)^{m+1} on the cycle pattern
/// shifted m steps off the diagonal with entries a^{k(i-1)}.
/// Constructed directly, for cross-validation against the recursion.
pub fn expected_matrix_t(mode: AlgebraMode, m: u32, k: u32) -> Result<ExactMatrix, GenesisError> {
    if mode.is_super() {
        return Err(GenesisError::PlainOnly);
    }
    let n = mode.grid_size();
    if m < 1 || m >= n || k < 1 || k > n {
        return Err(GenesisError::IndexOutOfRange { m, k });
    }
    let order = mode.field_order();
    let one = CycNum::one(order);
    let a = mode.a();
    let one_minus_a = one.try_sub(&a).expect("same order");
    let one_minus_am = one
        .try_sub(&CycNum::zeta_pow(order, m as i64))
        .expect("same order");
    let mut pre = one_minus_a.pow(m).try_mul(&one_minus_am.pow(k - 1)).expect("same order");
    if m % 2 == 0 {
        pre = pre.neg();
    }
    let dim = mode.dim();
    let mut out = ExactMatrix::zero(dim, order, mode.format());
    for i in 0..dim {
        let j = (i + m as usize) % dim;
        let val = CycNum::zeta_pow(order, (k as i64) * (i as i64));
        *out.at_mut(i, j) = val.try_mul(&pre).expect("same order");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_generators_n2() {
        let mode = AlgebraMode::plain(2).unwrap();
        let (d, s) = build_generators(mode).unwrap();
        assert_eq!(*d.matrix.at(0, 0), CycNum::one(2));
        assert_eq!(*d.matrix.at(1, 1), CycNum::from_integer(2, -1));
        assert_eq!(*s.matrix.at(0, 1), CycNum::one(2));
        assert_eq!(*s.matrix.at(1, 0), CycNum::one(2));
        assert!(s.matrix.at(0, 0).is_zero());
    }

    #[test]
    fn generator_orders() {
        for n in 2..=6u32 {
            let mode = AlgebraMode::plain(n).unwrap();
            let (d, s) = build_generators(mode).unwrap();
            let id = ExactMatrix::identity(mode.dim(), mode.field_order(), mode.format());
            assert_eq!(d.matrix.pow(n), id);
            assert_eq!(s.matrix.pow(n), id);
        }
    }

    #[test]
    fn n_out_of_range() {
        assert!(AlgebraMode::plain(1).is_err());
        assert!(AlgebraMode::super_mode(0).is_err());
        assert!(AlgebraMode::super_mode(1).is_ok());
    }

    #[test]
    fn basis_counts() {
        let b2 = generate_basis(AlgebraMode::plain(2).unwrap()).unwrap();
        assert_eq!(b2.len(), 3);
        assert_eq!(b2[2].label, Label::T(1, 1));
        let b3 = generate_basis(AlgebraMode::plain(3).unwrap()).unwrap();
        assert_eq!(b3.len(), 8);
        let s1 = generate_basis(AlgebraMode::super_mode(1).unwrap()).unwrap();
        let labels: Vec<Label> = s1.iter().map(|b| b.label).collect();
        assert_eq!(labels, vec![Label::D, Label::S, Label::T(1, 1), Label::T(2, 2)]);
    }

    #[test]
    fn t11_matrix_n3() {
        // T(1,1) = (1-a) * [(1,2)=1, (2,3)=a, (3,1)=a^2]
        let mode = AlgebraMode::plain(3).unwrap();
        let basis = generate_basis(mode).unwrap();
        let t11 = &basis[2];
        assert_eq!(t11.label, Label::T(1, 1));
        let expected = expected_matrix_t(mode, 1, 1).unwrap();
        assert_eq!(t11.matrix, expected);
        let one_minus_a = CycNum::one(3).try_sub(&CycNum::zeta_pow(3, 1)).unwrap();
        assert_eq!(*t11.matrix.at(0, 1), one_minus_a);
        assert_eq!(
            *t11.matrix.at(1, 2),
            one_minus_a.try_mul(&CycNum::zeta_pow(3, 1)).unwrap()
        );
        assert_eq!(
            *t11.matrix.at(2, 0),
            one_minus_a.try_mul(&CycNum::zeta_pow(3, 2)).unwrap()
        );
    }

    #[test]
    fn closed_form_matches_recursion() {
        for n in 3..=5u32 {
            let mode = AlgebraMode::plain(n).unwrap();
            let grid = full_grid(mode).unwrap();
            for m in 1..n {
                for k in 1..=n {
                    let expected = expected_matrix_t(mode, m, k).unwrap();
                    let got = &grid[(m - 1) as usize][(k - 1) as usize].matrix;
                    assert_eq!(got, &expected, "n={n} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn ranks_and_closure_small() {
        for n in 2..=4u32 {
            let mode = AlgebraMode::plain(n).unwrap();
            let expect = (n * n - 1) as usize;
            assert_eq!(basis_rank(mode).unwrap(), expect);
            assert_eq!(closure_dimension(mode).unwrap(), expect);
        }
        assert_eq!(closure_dimension(AlgebraMode::super_mode(1).unwrap()).unwrap(), 4);
    }

    #[test]
    fn super_span_list_contains_one_zero_element() {
        // The listed T(2n, n) vanishes for n >= 2, which reconciles the
        // 4n^2-element span list with dim sl(n|n) = 4n^2 - 1.
        let mode = AlgebraMode::super_mode(2).unwrap();
        let basis = generate_basis(mode).unwrap();
        assert_eq!(basis.len(), 16);
        let zeros: Vec<Label> = basis
            .iter()
            .filter(|b| b.matrix.is_zero())
            .map(|b| b.label)
            .collect();
        assert_eq!(zeros, vec![Label::T(4, 2)]);
        assert_eq!(basis_rank(mode).unwrap(), 15);
        assert_eq!(closure_dimension(mode).unwrap(), 15);
    }

    #[test]
    fn traces_vanish_plain() {
        for n in 2..=5u32 {
            for b in generate_basis(AlgebraMode::plain(n).unwrap()).unwrap() {
                assert!(b.matrix.trace().is_zero(), "trace of {}", b.label);
            }
        }
    }

    #[test]
    fn super_parities_follow_row_index() {
        for n in 1..=2u32 {
            let mode = AlgebraMode::super_mode(n).unwrap();
            for b in generate_basis(mode).unwrap() {
                let computed = b.matrix.homogeneous_parity().unwrap();
                assert_eq!(computed, Some(b.parity), "{}", b.label);
                if let Label::T(m, _) = b.label {
                    let expected = if m % 2 == 1 { Parity::Odd } else { Parity::Even };
                    assert_eq!(b.parity, expected, "{}", b.label);
                }
            }
        }
    }

    #[test]
    fn super_supertraces() {
        // n = 1 is anomalous: D has supertrace 2 there.
        let s1 = generate_basis(AlgebraMode::super_mode(1).unwrap()).unwrap();
        assert_eq!(
            s1[0].matrix.supertrace().unwrap(),
            CycNum::from_integer(2, 2)
        );
        for n in 2..=3u32 {
            for b in generate_basis(AlgebraMode::super_mode(n).unwrap()).unwrap() {
                assert!(
                    b.matrix.supertrace().unwrap().is_zero(),
                    "supertrace of {} at n={n}",
                    b.label
                );
            }
        }
    }
}
