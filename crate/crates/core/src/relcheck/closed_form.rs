//! The product formula for brackets of grid elements:
//! [T(m,k), T(m',k')] is proportional to T(m+m', k+k') with indices
//! reduced mod the grid size. The proportionality itself is verified
//! for every ordered pair; several candidate coefficient formulas are
//! then scored against the oracle, since the printed one fails even
//! antisymmetry.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclo::CycNum;
use crate::genesis::AlgebraMode;
use crate::relcheck::paths::Workspace;
use crate::relcheck::relations::{one_minus_apow, sign};

/// One coefficient formula under test. `eval` returns the predicted
/// coefficient of T(M,K) in [T(m,k), T(m',k')], or None when the
/// formula is undefined for these indices (division by zero).
#[derive(Clone, Copy)]
pub struct Candidate {
    pub name: &'static str,
    pub eval: fn(order: u32, m: u32, k: u32, mp: u32, kp: u32) -> Option<CycNum>,
}

fn shared_prefactor(order: u32, m: u32, k: u32, mp: u32, kp: u32) -> Option<CycNum> {
    // (1-a^m)^{k-1}(1-a^{m'})^{k'-1}/(1-a^{m+m'})^{k+k'-1}
    let denom_base = one_minus_apow(order, (m + mp) as i64);
    if denom_base.is_zero() {
        return None;
    }
    let num = one_minus_apow(order, m as i64)
        .pow(k - 1)
        .try_mul(&one_minus_apow(order, mp as i64).pow(kp - 1))
        .expect("same order");
    Some(
        num.try_div(&denom_base.pow(k + kp - 1))
            .expect("nonzero denominator"),
    )
}

fn apow(order: u32, e: i64) -> CycNum {
    CycNum::zeta_pow(order, e)
}

fn cand_printed(order: u32, m: u32, k: u32, mp: u32, kp: u32) -> Option<CycNum> {
    // shared prefactor times (a^{k'm'} - 1)
    let pre = shared_prefactor(order, m, k, mp, kp)?;
    let tail = apow(order, (kp * mp) as i64)
        .try_sub(&CycNum::one(order))
        .expect("same order");
    Some(pre.try_mul(&tail).expect("same order"))
}

fn cand_skew_exponent(order: u32, m: u32, k: u32, mp: u32, kp: u32) -> Option<CycNum> {
    // shared prefactor times (a^{k'm - km'} - 1)
    let pre = shared_prefactor(order, m, k, mp, kp)?;
    let e = (kp * m) as i64 - (k * mp) as i64;
    let tail = apow(order, e)
        .try_sub(&CycNum::one(order))
        .expect("same order");
    Some(pre.try_mul(&tail).expect("same order"))
}

fn cand_antisymmetrized(order: u32, m: u32, k: u32, mp: u32, kp: u32) -> Option<CycNum> {
    // -(shared prefactor) times (a^{k'm} - a^{km'})
    let pre = shared_prefactor(order, m, k, mp, kp)?;
    let tail = apow(order, (kp * m) as i64)
        .try_sub(&apow(order, (k * mp) as i64))
        .expect("same order");
    Some(pre.try_mul(&tail).expect("same order").neg())
}

fn cand_wrap_corrected(order: u32, m: u32, k: u32, mp: u32, kp: u32) -> Option<CycNum> {
    // Exact form for the plain case, derived from the monomial rule
    // [P(m,k), P(m',k')] = (a^{k'm} - a^{km'}) P(m+m', k+k') and the
    // prefactors the grid elements carry:
    //   (-1)^{n*w+1} (1-a)^{n*w} (1-a^m)^{k-1}(1-a^{m'})^{k'-1}
    //   (a^{k'm} - a^{km'}) / (1-a^{m+m'})^{K-1}
    // where w = 1 if m+m' > n and K is k+k' reduced mod n into 1..n.
    let n = order;
    let msum = m + mp;
    let denom_base = one_minus_apow(order, msum as i64);
    if denom_base.is_zero() {
        return None;
    }
    let w = if msum > n { 1u32 } else { 0 };
    let kk = (k + kp) % n;
    let kred = if kk == 0 { n } else { kk };
    let tail = apow(order, (kp * m) as i64)
        .try_sub(&apow(order, (k * mp) as i64))
        .expect("same order");
    let mut c = sign(order, n * w + 1);
    c = c
        .try_mul(&one_minus_apow(order, 1).pow(n * w))
        .expect("same order");
    c = c
        .try_mul(&one_minus_apow(order, m as i64).pow(k - 1))
        .expect("same order");
    c = c
        .try_mul(&one_minus_apow(order, mp as i64).pow(kp - 1))
        .expect("same order");
    c = c.try_mul(&tail).expect("same order");
    Some(c.try_div(&denom_base.pow(kred - 1)).expect("nonzero"))
}

/// The default candidate set: the formula as printed, the variant with
/// a skew-symmetric exponent, an antisymmetrized variant, and the
/// fully wrap-corrected exact form.
pub fn standard_candidates() -> Vec<Candidate> {
    alloc::vec![
        Candidate {
            name: "printed",
            eval: cand_printed,
        },
        Candidate {
            name: "skew-exponent",
            eval: cand_skew_exponent,
        },
        Candidate {
            name: "antisymmetrized",
            eval: cand_antisymmetrized,
        },
        Candidate {
            name: "wrap-corrected",
            eval: cand_wrap_corrected,
        },
    ]
}

#[derive(Debug, Clone)]
pub struct CandidateScore {
    pub name: String,
    pub matches: usize,
    pub mismatches: usize,
    pub undefined: usize,
}

#[derive(Debug, Clone)]
pub struct FitReport {
    pub mode: AlgebraMode,
    /// Ordered pairs of non-bottom-row grid elements checked.
    pub pairs_checked: usize,
    /// Pairs whose target row reduces to 0 mod the grid size (the
    /// bracket lands in the diagonal); excluded from candidate scoring.
    pub diagonal_excluded: usize,
    /// Pairs where the bracket is not proportional to the reduced-index
    /// grid element; must stay 0 for the product formula to make sense.
    pub non_proportional: usize,
    pub candidates: Vec<CandidateScore>,
}

impl FitReport {
    /// Candidates that matched the oracle on every scored pair.
    pub fn perfect(&self) -> Vec<&CandidateScore> {
        self.candidates
            .iter()
            .filter(|c| c.mismatches == 0 && c.undefined == 0)
            .collect()
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: {} pairs, {} diagonal-target excluded, {} non-proportional",
            self.mode, self.pairs_checked, self.diagonal_excluded, self.non_proportional
        );
        for c in &self.candidates {
            s.push_str(&format!(
                "; {}: {}/{} match",
                c.name,
                c.matches,
                c.matches + c.mismatches
            ));
        }
        s
    }
}

/// Computes every ordered bracket of non-bottom-row grid elements,
/// verifies proportionality to the reduced-index grid element, and
/// scores each candidate formula against the oracle coefficient.
/// Candidates are only meaningful in plain mode; pass an empty list to
/// just count proportionality (e.g. for super mode).
pub fn verify_bracket_closed_form(mode: AlgebraMode, candidates: &[Candidate]) -> FitReport {
    let ws = Workspace::new(mode);
    let g = mode.grid_size();
    let order = mode.field_order();
    let mut scores: Vec<CandidateScore> = candidates
        .iter()
        .map(|c| CandidateScore {
            name: String::from(c.name),
            matches: 0,
            mismatches: 0,
            undefined: 0,
        })
        .collect();
    let mut pairs_checked = 0;
    let mut diagonal_excluded = 0;
    let mut non_proportional = 0;

    for m in 1..g {
        for k in 1..=g {
            for mp in 1..g {
                for kp in 1..=g {
                    pairs_checked += 1;
                    let x = ws.t(m, k);
                    let y = ws.t(mp, kp);
                    let b = mode.ad(x, y);
                    let msum = (m + mp) % g;
                    if msum == 0 {
                        diagonal_excluded += 1;
                        continue;
                    }
                    let kk = (k + kp) % g;
                    let kred = if kk == 0 { g } else { kk };
                    let reference = ws.t(msum, kred);
                    let oracle = reference
                        .matrix
                        .is_proportional(&b.matrix)
                        .expect("reference rows are nonzero");
                    let Some(oracle) = oracle else {
                        non_proportional += 1;
                        continue;
                    };
                    for (c, s) in candidates.iter().zip(scores.iter_mut()) {
                        match (c.eval)(order, m, k, mp, kp) {
                            None => s.undefined += 1,
                            Some(pred) if pred == oracle => s.matches += 1,
                            Some(_) => s.mismatches += 1,
                        }
                    }
                }
            }
        }
    }
    FitReport {
        mode,
        pairs_checked,
        diagonal_excluded,
        non_proportional,
        candidates: scores,
    }
}
