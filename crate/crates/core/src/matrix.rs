//! Dense exact linear algebra over Q(zeta_N), including the Z2-graded
//! (super) structure used for sl(n|n): brackets, superbrackets, rank,
//! proportionality and exact decomposition in a basis.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::cyclo::{cyclotomic_poly, CycNum};

/// Format of the underlying (super)space. `Alternating` assigns
/// parities (even, odd, even, odd, ...) to the basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Alternating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    fn of_index_pair(i: usize, j: usize) -> Parity {
        if (i + j) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    DimensionMismatch { left: usize, right: usize },
    OrderMismatch { left: u32, right: u32 },
    /// A graded operation was handed a matrix with no parity format.
    MissingFormat,
    /// A graded operation was handed an inhomogeneous matrix, or the
    /// declared parity disagrees with the support pattern.
    NotHomogeneous,
    ZeroReference,
    NotInSpan,
    DependentBasis,
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::DimensionMismatch { left, right } => {
                write!(f, "matrix dimension mismatch: {left} vs {right}")
            }
            MatError::OrderMismatch { left, right } => {
                write!(f, "cyclotomic order mismatch: {left} vs {right}")
            }
            MatError::MissingFormat => write!(f, "operation requires an alternating format"),
            MatError::NotHomogeneous => write!(f, "matrix is not parity-homogeneous"),
            MatError::ZeroReference => write!(f, "reference matrix must be nonzero"),
            MatError::NotInSpan => write!(f, "matrix lies outside the span of the basis"),
            MatError::DependentBasis => write!(f, "basis is linearly dependent"),
        }
    }
}

/// Dense square matrix over one cyclotomic field Q(zeta_N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    order: u32,
    format: Format,
    /// Row-major, length dim * dim.
    entries: Vec<CycNum>,
}

impl ExactMatrix {
    pub fn zero(dim: usize, order: u32, format: Format) -> Self {
        ExactMatrix {
            dim,
            order,
            format,
            entries: vec![CycNum::zero(order); dim * dim],
        }
    }

    pub fn identity(dim: usize, order: u32, format: Format) -> Self {
        let mut m = Self::zero(dim, order, format);
        for i in 0..dim {
            *m.at_mut(i, i) = CycNum::one(order);
        }
        m
    }

    pub fn from_entries(
        dim: usize,
        order: u32,
        format: Format,
        entries: Vec<CycNum>,
    ) -> Result<Self, MatError> {
        if entries.len() != dim * dim {
            return Err(MatError::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        for e in &entries {
            if e.order() != order {
                return Err(MatError::OrderMismatch {
                    left: order,
                    right: e.order(),
                });
            }
        }
        Ok(ExactMatrix {
            dim,
            order,
            format,
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.dim + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut CycNum {
        &mut self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), MatError> {
        if self.dim != other.dim {
            return Err(MatError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.order != other.order {
            return Err(MatError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatError> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b).expect("orders checked"))
            .collect();
        Ok(ExactMatrix {
            dim: self.dim,
            order: self.order,
            format: self.format,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatError> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_sub(b).expect("orders checked"))
            .collect();
        Ok(ExactMatrix {
            dim: self.dim,
            order: self.order,
            format: self.format,
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            dim: self.dim,
            order: self.order,
            format: self.format,
            entries: self.entries.iter().map(CycNum::neg).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let phi = cyclotomic_poly(self.order);
        ExactMatrix {
            dim: self.dim,
            order: self.order,
            format: self.format,
            entries: self
                .entries
                .iter()
                .map(|e| e.mul_with_phi(c, &phi))
                .collect(),
        }
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatError> {
        self.check_compatible(other)?;
        let phi = cyclotomic_poly(self.order);
        let d = self.dim;
        let mut out = Self::zero(d, self.order, self.format);
        for i in 0..d {
            for k in 0..d {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul_with_phi(b, &phi);
                    let cur = out.at(i, j).try_add(&prod).expect("orders checked");
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim, self.order, self.format);
        for _ in 0..e {
            acc = acc.mat_mul(self).expect("same shape");
        }
        acc
    }

    /// Commutator xy - yx.
    pub fn bracket(&self, other: &Self) -> Result<Self, MatError> {
        let xy = self.mat_mul(other)?;
        let yx = other.mat_mul(self)?;
        xy.sub(&yx)
    }

    /// Graded commutator xy - (-1)^{p_x p_y} yx on homogeneous
    /// supermatrices. The declared parities are cross-checked against
    /// the support pattern so an anticommutator can never silently turn
    /// into a commutator.
    pub fn superbracket(
        &self,
        other: &Self,
        p_self: Parity,
        p_other: Parity,
    ) -> Result<Self, MatError> {
        self.check_compatible(other)?;
        match self.homogeneous_parity()? {
            Some(p) if p != p_self && !self.is_zero() => return Err(MatError::NotHomogeneous),
            Some(_) => {}
            None => return Err(MatError::NotHomogeneous),
        }
        match other.homogeneous_parity()? {
            Some(p) if p != p_other && !other.is_zero() => return Err(MatError::NotHomogeneous),
            Some(_) => {}
            None => return Err(MatError::NotHomogeneous),
        }
        let xy = self.mat_mul(other)?;
        let yx = other.mat_mul(self)?;
        if p_self == Parity::Odd && p_other == Parity::Odd {
            xy.add(&yx)
        } else {
            xy.sub(&yx)
        }
    }

    /// Parity of the support pattern in the alternating format, or
    /// `None` if the matrix is inhomogeneous. The zero matrix (and so
    /// the identity's even diagonal) reports even.
    pub fn homogeneous_parity(&self) -> Result<Option<Parity>, MatError> {
        if self.format != Format::Alternating {
            return Err(MatError::MissingFormat);
        }
        let mut seen: Option<Parity> = None;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.at(i, j).is_zero() {
                    continue;
                }
                let p = Parity::of_index_pair(i, j);
                match seen {
                    None => seen = Some(p),
                    Some(q) if q != p => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        Ok(Some(seen.unwrap_or(Parity::Even)))
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero(self.order);
        for i in 0..self.dim {
            t = t.try_add(self.at(i, i)).expect("orders agree");
        }
        t
    }

    /// Supertrace in the alternating format: sum of (-1)^{parity(i)} x_ii.
    pub fn supertrace(&self) -> Result<CycNum, MatError> {
        if self.format != Format::Alternating {
            return Err(MatError::MissingFormat);
        }
        let mut t = CycNum::zero(self.order);
        for i in 0..self.dim {
            if i % 2 == 0 {
                t = t.try_add(self.at(i, i)).expect("orders agree");
            } else {
                t = t.try_sub(self.at(i, i)).expect("orders agree");
            }
        }
        Ok(t)
    }

    /// Flattens the matrix into a vector of length dim^2.
    fn flatten(&self) -> Vec<CycNum> {
        self.entries.clone()
    }

    /// Tests whether `target` is an exact scalar multiple of `self`
    /// (which must be nonzero). Returns the scalar, 0 for the zero
    /// target, or `None` when no scalar works.
    pub fn is_proportional(&self, target: &Self) -> Result<Option<CycNum>, MatError> {
        self.check_compatible(target)?;
        if self.is_zero() {
            return Err(MatError::ZeroReference);
        }
        if target.is_zero() {
            return Ok(Some(CycNum::zero(self.order)));
        }
        let phi = cyclotomic_poly(self.order);
        // First nonzero entry of the reference fixes the candidate scalar.
        let pivot = self
            .entries
            .iter()
            .position(|e| !e.is_zero())
            .expect("nonzero reference");
        let c = target.entries[pivot]
            .try_mul(&self.entries[pivot].inv().expect("nonzero pivot"))
            .expect("orders agree");
        for (a, b) in self.entries.iter().zip(&target.entries) {
            if a.mul_with_phi(&c, &phi) != *b {
                return Ok(None);
            }
        }
        Ok(Some(c))
    }

    pub fn label_string(&self) -> String {
        use alloc::format;
        format!("{}x{} over Q(zeta_{})", self.dim, self.dim, self.order)
    }
}

/// Echelon workspace for exact Gaussian elimination on flattened
/// matrices. Pivoting is deterministic: first nonzero coordinate in
/// column order, rows kept in insertion order.
pub(crate) struct Echelon {
    phi: Vec<BigInt>,
    /// Rows are reduced so each starts with a leading 1 at its pivot.
    rows: Vec<(usize, Vec<CycNum>)>,
}

impl Echelon {
    pub fn new(order: u32) -> Self {
        Echelon {
            phi: cyclotomic_poly(order),
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; the remainder is returned.
    pub fn reduce(&self, mut v: Vec<CycNum>) -> Vec<CycNum> {
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (vi, ri) in v.iter_mut().zip(row) {
                if ri.is_zero() {
                    continue;
                }
                let delta = ri.mul_with_phi(&c, &self.phi);
                *vi = vi.try_sub(&delta).expect("orders agree");
            }
        }
        v
    }

    /// Reduces and, if independent, inserts `v`. Returns true when the
    /// vector enlarged the span.
    pub fn insert(&mut self, v: Vec<CycNum>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        for e in v.iter_mut() {
            if !e.is_zero() {
                *e = e.mul_with_phi(&inv, &self.phi);
            }
        }
        self.rows.push((pivot, v));
        // Keep rows sorted by pivot for deterministic back-reduction.
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }
}

/// Rank of a list of matrices viewed as vectors of length dim^2.
pub fn rank(mats: &[ExactMatrix]) -> Result<usize, MatError> {
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    let mut ech = Echelon::new(first.order());
    for m in mats {
        first.check_compatible(m)?;
        ech.insert(m.flatten());
    }
    Ok(ech.rank())
}

/// Exact coordinates of `x` in `basis`; the basis must be linearly
/// independent and `x` must lie in its span.
pub fn decompose_in_basis(x: &ExactMatrix, basis: &[ExactMatrix]) -> Result<Vec<CycNum>, MatError> {
    let order = x.order();
    let phi = cyclotomic_poly(order);
    let n2 = x.dim() * x.dim();
    // Augmented elimination: each row carries its coordinates in the
    // original basis alongside the flattened matrix.
    let mut rows: Vec<(usize, Vec<CycNum>, Vec<CycNum>)> = Vec::new();
    for (bi, b) in basis.iter().enumerate() {
        x.check_compatible(b)?;
        let mut v = b.flatten();
        let mut coords = vec![CycNum::zero(order); basis.len()];
        coords[bi] = CycNum::one(order);
        reduce_augmented(&rows, &mut v, &mut coords, &phi);
        let Some(pivot) = v.iter().position(|e| !e.is_zero()) else {
            return Err(MatError::DependentBasis);
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        for e in v.iter_mut().chain(coords.iter_mut()) {
            if !e.is_zero() {
                *e = e.mul_with_phi(&inv, &phi);
            }
        }
        rows.push((pivot, v, coords));
        rows.sort_by_key(|(p, _, _)| *p);
    }
    let mut v = x.flatten();
    debug_assert_eq!(v.len(), n2);
    let mut coords = vec![CycNum::zero(order); basis.len()];
    reduce_augmented(&rows, &mut v, &mut coords, &phi);
    if v.iter().any(|e| !e.is_zero()) {
        return Err(MatError::NotInSpan);
    }
    // x reduced to zero, so x = -coords in the basis.
    Ok(coords.iter().map(CycNum::neg).collect())
}

fn reduce_augmented(
    rows: &[(usize, Vec<CycNum>, Vec<CycNum>)],
    v: &mut [CycNum],
    coords: &mut [CycNum],
    phi: &[BigInt],
) {
    for (pivot, row, rcoords) in rows {
        let c = v[*pivot].clone();
        if c.is_zero() {
            continue;
        }
        for (vi, ri) in v.iter_mut().zip(row) {
            if ri.is_zero() {
                continue;
            }
            let delta = ri.mul_with_phi(&c, phi);
            *vi = vi.try_sub(&delta).expect("orders agree");
        }
        for (ci, ri) in coords.iter_mut().zip(rcoords) {
            if ri.is_zero() {
                continue;
            }
            let delta = ri.mul_with_phi(&c, phi);
            *ci = ci.try_sub(&delta).expect("orders agree");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genesis::{build_generators, AlgebraMode};
    use proptest::prelude::*;

    fn clock_shift(n: usize) -> (ExactMatrix, ExactMatrix) {
        let (d, s) = build_generators(AlgebraMode::plain(n as u32).unwrap()).unwrap();
        (d.matrix, s.matrix)
    }

    #[test]
    fn identity_is_neutral() {
        let (d, _) = clock_shift(3);
        let id = ExactMatrix::identity(3, 3, Format::Plain);
        assert_eq!(id.mat_mul(&d).unwrap(), d);
        assert_eq!(d.mat_mul(&id).unwrap(), d);
    }

    #[test]
    fn shift_squares_to_identity_for_n2() {
        let (_, s) = clock_shift(2);
        assert_eq!(
            s.mat_mul(&s).unwrap(),
            ExactMatrix::identity(2, 2, Format::Plain)
        );
    }

    #[test]
    fn weyl_relation_n3() {
        // S D = zeta_3 (D S) entrywise.
        let (d, s) = clock_shift(3);
        let sd = s.mat_mul(&d).unwrap();
        let ds = d.mat_mul(&s).unwrap();
        assert_eq!(sd, ds.scale(&CycNum::zeta_pow(3, 1)));
    }

    #[test]
    fn bracket_of_clock_and_shift_n2() {
        let (d, s) = clock_shift(2);
        let b = d.bracket(&s).unwrap();
        assert!(b.bracket(&b).unwrap().is_zero());
        assert_eq!(*b.at(0, 1), CycNum::from_integer(2, 2));
        assert_eq!(*b.at(1, 0), CycNum::from_integer(2, -2));
        assert!(b.at(0, 0).is_zero() && b.at(1, 1).is_zero());
    }

    #[test]
    fn super_shift_self_bracket_is_twice_identity() {
        let (_, s) = build_generators(AlgebraMode::super_mode(1).unwrap())
            .map(|(d, s)| (d, s))
            .unwrap();
        let ss = s
            .matrix
            .superbracket(&s.matrix, Parity::Odd, Parity::Odd)
            .unwrap();
        let two_id =
            ExactMatrix::identity(2, 2, Format::Alternating).scale(&CycNum::from_integer(2, 2));
        assert_eq!(ss, two_id);
    }

    #[test]
    fn parity_detection() {
        let mode = AlgebraMode::super_mode(2).unwrap();
        let (d, s) = build_generators(mode).unwrap();
        assert_eq!(d.matrix.homogeneous_parity().unwrap(), Some(Parity::Even));
        assert_eq!(s.matrix.homogeneous_parity().unwrap(), Some(Parity::Odd));
        let sum = d.matrix.add(&s.matrix).unwrap();
        assert_eq!(sum.homogeneous_parity().unwrap(), None);
        assert!(sum
            .superbracket(&d.matrix, Parity::Even, Parity::Even)
            .is_err());
    }

    #[test]
    fn supertrace_alternating() {
        let id = ExactMatrix::identity(4, 4, Format::Alternating);
        assert!(id.supertrace().unwrap().is_zero());
        assert_eq!(id.trace(), CycNum::from_integer(4, 4));
        // super n=1: str D = 1 - (-1) = 2
        let (d, _) = build_generators(AlgebraMode::super_mode(1).unwrap()).unwrap();
        assert_eq!(d.matrix.supertrace().unwrap(), CycNum::from_integer(2, 2));
        let plain = ExactMatrix::identity(4, 4, Format::Plain);
        assert_eq!(plain.supertrace(), Err(MatError::MissingFormat));
    }

    #[test]
    fn rank_basics() {
        let (d, s) = clock_shift(2);
        let two_d = d.scale(&CycNum::from_integer(2, 2));
        assert_eq!(rank(&[d.clone(), two_d]).unwrap(), 1);
        let b = d.bracket(&s).unwrap();
        assert_eq!(rank(&[d, s, b]).unwrap(), 3);
        assert_eq!(rank(&[]).unwrap(), 0);
    }

    #[test]
    fn proportionality() {
        let (d, s) = clock_shift(3);
        let three_d = d.scale(&CycNum::from_integer(3, 3));
        assert_eq!(
            d.is_proportional(&three_d).unwrap(),
            Some(CycNum::from_integer(3, 3))
        );
        let zero = ExactMatrix::zero(3, 3, Format::Plain);
        assert_eq!(d.is_proportional(&zero).unwrap(), Some(CycNum::zero(3)));
        assert_eq!(d.is_proportional(&s).unwrap(), None);
        assert_eq!(zero.is_proportional(&d), Err(MatError::ZeroReference));
    }

    #[test]
    fn decompose_edge_cases() {
        let (d, s) = clock_shift(3);
        let basis = [d.clone(), s.clone()];
        let coords = decompose_in_basis(&d, &basis).unwrap();
        assert!(coords[0].is_one() && coords[1].is_zero());
        let zero = ExactMatrix::zero(3, 3, Format::Plain);
        let coords = decompose_in_basis(&zero, &basis).unwrap();
        assert!(coords.iter().all(CycNum::is_zero));
        let b = d.bracket(&s).unwrap();
        assert_eq!(decompose_in_basis(&b, &basis), Err(MatError::NotInSpan));
    }

    fn arb_matrix(n: usize, order: u32) -> impl Strategy<Value = ExactMatrix> {
        prop::collection::vec((-4i64..=4, 0i64..(order as i64)), n * n).prop_map(move |cells| {
            let entries = cells
                .into_iter()
                .map(|(c, e)| CycNum::zeta_pow(order, e).scale(&crate::cyclo::Rat::from_integer(
                    num_bigint::BigInt::from(c),
                )))
                .collect();
            ExactMatrix::from_entries(n, order, Format::Plain, entries).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn bracket_antisymmetry_and_jacobi(
            x in arb_matrix(3, 3),
            y in arb_matrix(3, 3),
            z in arb_matrix(3, 3),
        ) {
            let xy = x.bracket(&y).unwrap();
            prop_assert_eq!(&xy, &y.bracket(&x).unwrap().neg());
            // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
            let jac = xy
                .bracket(&z)
                .unwrap()
                .add(&y.bracket(&z).unwrap().bracket(&x).unwrap())
                .unwrap()
                .add(&z.bracket(&x).unwrap().bracket(&y).unwrap())
                .unwrap();
            prop_assert!(jac.is_zero());
        }

        #[test]
        fn rank_invariant_under_scaling_and_permutation(
            x in arb_matrix(3, 3),
            y in arb_matrix(3, 3),
            c in 1i64..=5,
        ) {
            let scaled = x.scale(&CycNum::from_integer(3, c));
            let r1 = rank(&[x.clone(), y.clone()]).unwrap();
            let r2 = rank(&[y, scaled]).unwrap();
            prop_assert_eq!(r1, r2);
        }
    }
}
