//! The torus-indexed J basis: J(m1,m2) = w^{m1*m2} D^{m1} S^{m2} with
//! w a primitive 2n-th root of unity, its Weyl commutation relation,
//! and the exact sine-algebra bracket. The "-2i sin" coefficients are
//! never touched in floating point; they are identified with exact
//! differences of roots of unity, which lets the two candidate angle
//! conventions be adjudicated exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclo::CycNum;
use crate::matrix::{Echelon, ExactMatrix, Format};
use crate::relcheck::RelationRecord;

/// A point of the index torus (Z/n)^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TorusIndex {
    pub m1: u32,
    pub m2: u32,
}

impl TorusIndex {
    pub fn new(n: u32, m1: u32, m2: u32) -> Self {
        TorusIndex {
            m1: m1 % n,
            m2: m2 % n,
        }
    }

    pub fn add(self, other: Self, n: u32) -> Self {
        TorusIndex::new(n, self.m1 + other.m1, self.m2 + other.m2)
    }

    pub fn label(&self) -> String {
        format!("J({},{})", self.m1, self.m2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JElement {
    pub index: TorusIndex,
    pub matrix: ExactMatrix,
}

fn clock(n: u32) -> ExactMatrix {
    let order = 2 * n;
    let mut d = ExactMatrix::zero(n as usize, order, Format::Plain);
    for i in 0..n as usize {
        *d.at_mut(i, i) = CycNum::zeta_pow(order, 2 * i as i64);
    }
    d
}

fn shift(n: u32) -> ExactMatrix {
    let order = 2 * n;
    let mut s = ExactMatrix::zero(n as usize, order, Format::Plain);
    for i in 0..n as usize {
        *s.at_mut(i, (i + 1) % n as usize) = CycNum::one(order);
    }
    s
}

/// The J matrix for possibly unreduced exponents: the phase
/// w^{m1*m2} changes when m1 or m2 crosses a multiple of n even
/// though D^{m1}S^{m2} does not, and the bracket identity below only
/// holds against the unreduced-phase representative of the sum index.
fn j_matrix_raw(n: u32, m1: u32, m2: u32) -> ExactMatrix {
    let order = 2 * n;
    let phase = CycNum::zeta_pow(order, (m1 as i64) * (m2 as i64));
    let d = clock(n).pow(m1);
    let s = shift(n).pow(m2);
    d.mat_mul(&s).expect("same shape").scale(&phase)
}

pub fn build_j(n: u32, idx: TorusIndex) -> JElement {
    assert!(n >= 2);
    let idx = TorusIndex::new(n, idx.m1, idx.m2);
    JElement {
        index: idx,
        matrix: j_matrix_raw(n, idx.m1, idx.m2),
    }
}

/// All n^2 J elements in lexicographic index order.
pub fn build_all_j(n: u32) -> Vec<JElement> {
    let mut out = Vec::with_capacity((n * n) as usize);
    for m1 in 0..n {
        for m2 in 0..n {
            out.push(build_j(n, TorusIndex { m1, m2 }));
        }
    }
    out
}

/// S·D = zeta_n·(D·S), checked entrywise.
pub fn verify_weyl(n: u32) -> RelationRecord {
    let order = 2 * n;
    let d = clock(n);
    let s = shift(n);
    let lhs = s.mat_mul(&d).expect("same shape");
    let rhs = d
        .mat_mul(&s)
        .expect("same shape")
        .scale(&CycNum::zeta_pow(order, 2));
    RelationRecord::equality(
        format!("sine-n{n}/weyl"),
        String::from("S*D"),
        String::from("a*(D*S)"),
        String::from("torus commutation relation"),
        &lhs,
        &rhs,
    )
}

/// Verifies [J_m, J_k] for every ordered index pair against the two
/// exact realizations of the sine coefficient: convention (i), the
/// whole-angle difference zeta_n^{-d} - zeta_n^{d}, and convention
/// (ii), the half-angle difference zeta_{2n}^{-d} - zeta_{2n}^{d},
/// with d = m1k2 - m2k1. Two records per pair.
pub fn verify_sine_bracket(n: u32) -> Vec<RelationRecord> {
    assert!(n >= 2);
    let order = 2 * n;
    let js = build_all_j(n);
    let locus = String::from("sine bracket closed form");
    let mut out = Vec::new();
    for jm in &js {
        for jk in &js {
            let b = jm.matrix.bracket(&jk.matrix).expect("same shape");
            let m = jm.index;
            let k = jk.index;
            let reference = j_matrix_raw(n, m.m1 + k.m1, m.m2 + k.m2);
            let d = (m.m1 as i64) * (k.m2 as i64) - (m.m2 as i64) * (k.m1 as i64);
            let pred_whole = CycNum::zeta_pow(order, -2 * d)
                .try_sub(&CycNum::zeta_pow(order, 2 * d))
                .expect("same order");
            let pred_half = CycNum::zeta_pow(order, -d)
                .try_sub(&CycNum::zeta_pow(order, d))
                .expect("same order");
            let lhs = format!("[{},{}]", m.label(), k.label());
            let ref_label = format!("J({},{})", m.m1 + k.m1, m.m2 + k.m2);
            let pair = format!("m{}{}-k{}{}", m.m1, m.m2, k.m1, k.m2);
            out.push(RelationRecord::proportional(
                format!("sine-n{n}/bracket-{pair}-whole"),
                lhs.clone(),
                locus.clone(),
                ref_label.clone(),
                &reference,
                b.clone(),
                Some(pred_whole),
            ));
            out.push(RelationRecord::proportional(
                format!("sine-n{n}/bracket-{pair}-half"),
                lhs,
                locus.clone(),
                ref_label,
                &reference,
                b,
                Some(pred_half),
            ));
        }
    }
    out
}

/// Rank of the span of all n^2 J elements; they form a basis of
/// gl(n), so this must be n^2.
pub fn j_rank(n: u32) -> usize {
    let js = build_all_j(n);
    let mats: Vec<ExactMatrix> = js.into_iter().map(|j| j.matrix).collect();
    crate::matrix::rank(&mats).expect("uniform shape")
}

/// Whether the span of the n^2 - 1 non-identity J elements is closed
/// under the bracket (it is a copy of sl(n): every J except J(0,0) is
/// trace-zero and brackets stay inside).
pub fn non_identity_span_closed(n: u32) -> bool {
    let js = build_all_j(n);
    let non_id: Vec<&JElement> = js
        .iter()
        .filter(|j| j.index != TorusIndex { m1: 0, m2: 0 })
        .collect();
    let mut ech = Echelon::new(2 * n);
    let mut rank = 0;
    for j in &non_id {
        if ech.insert(j.matrix.entries().to_vec()) {
            rank += 1;
        }
    }
    if rank != (n * n - 1) as usize {
        return false;
    }
    for x in &non_id {
        for y in &non_id {
            let b = x.matrix.bracket(&y.matrix).expect("same shape");
            if ech.insert(b.entries().to_vec()) {
                return false;
            }
        }
    }
    true
}
