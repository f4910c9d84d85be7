//! Monotone grid paths: words in the adjoint actions of D and S
//! applied to T(1,1), path counting, and the canonical admissible
//! shapes that can carry independent relations.

use alloc::vec;
use alloc::vec::Vec;

use crate::genesis::{full_grid, AlgebraMode, Graded};

/// One grid move: `D` is a horizontal step (one application of ad D),
/// `S` a vertical step (one application of ad S).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    D,
    S,
}

/// A monotone path from T(1,1); steps are applied innermost-first,
/// i.e. `steps[0]` acts on T(1,1) itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWord {
    pub steps: Vec<Step>,
}

impl PathWord {
    pub fn empty() -> Self {
        PathWord { steps: Vec::new() }
    }

    /// The canonical relation-carrying shape
    /// (ad S)^{s1}((ad D)^{d}((ad S)^{s2}(T(1,1)))):
    /// s2 inner vertical steps, d horizontal steps, s1 trailing
    /// vertical steps.
    pub fn canonical(s2: u32, d: u32, s1: u32) -> Self {
        let mut steps = Vec::with_capacity((s1 + s2 + d) as usize);
        steps.extend(core::iter::repeat_n(Step::S, s2 as usize));
        steps.extend(core::iter::repeat_n(Step::D, d as usize));
        steps.extend(core::iter::repeat_n(Step::S, s1 as usize));
        PathWord { steps }
    }

    /// Endpoint (m, k) = (1 + #S, 1 + #D).
    pub fn endpoint(&self) -> (u32, u32) {
        let s = self.steps.iter().filter(|s| **s == Step::S).count() as u32;
        let d = self.steps.len() as u32 - s;
        (1 + s, 1 + d)
    }
}

/// Applies a path word to T(1,1) by exact nested (super)brackets.
pub fn apply_path(mode: AlgebraMode, word: &PathWord) -> Graded {
    let (d, s) = crate::genesis::build_generators(mode).expect("valid mode");
    let d = d.graded();
    let s = s.graded();
    let mut acc = mode.ad(&d, &s);
    for step in &word.steps {
        acc = match step {
            Step::D => mode.ad(&d, &acc),
            Step::S => mode.ad(&s, &acc),
        };
    }
    acc
}

/// Number of monotone paths from (1,1) to (m,k), plus the printed
/// binomial variant, which is off by one in its lower index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCount {
    /// binom(m+k-2, k-1): the actual count.
    pub count: u128,
    /// binom(m+k-2, k): the variant as printed.
    pub printed_variant: u128,
}

impl PathCount {
    pub fn printed_variant_differs(&self) -> bool {
        self.count != self.printed_variant
    }
}

pub fn count_paths(m: u32, k: u32) -> PathCount {
    assert!(m >= 1 && k >= 1);
    let n = m + k - 2;
    PathCount {
        count: binomial(n, k - 1),
        printed_variant: binomial(n, k),
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The paths to (m, k) that can carry an independent relation: all
/// trailing vertical steps pushed to the end (with s1 >= 1 of them)
/// for rows above the bottom, and for the bottom row the single
/// algorithm path to (grid, k-1) followed by one horizontal step.
pub fn admissible_paths(mode: AlgebraMode, m: u32, k: u32) -> Vec<PathWord> {
    let g = mode.grid_size();
    assert!(crate::genesis::admissible(mode, m, k), "inadmissible target");
    if m < g {
        (1..m)
            .map(|s1| PathWord::canonical(m - 1 - s1, k - 1, s1))
            .collect()
    } else {
        // Algorithm path to (g, k-1): S^(g-2), D^(k-2), S; then one D.
        let mut w = PathWord::canonical(g - 2, k - 2, 1);
        w.steps.push(Step::D);
        vec![w]
    }
}

/// Exhaustive check helper: the value of every monotone path to an
/// (m, k) with m below the bottom row, enumerated recursively.
pub fn all_paths(m: u32, k: u32) -> Vec<PathWord> {
    fn go(s: u32, d: u32, prefix: &mut Vec<Step>, out: &mut Vec<PathWord>) {
        if s == 0 && d == 0 {
            out.push(PathWord {
                steps: prefix.clone(),
            });
            return;
        }
        if s > 0 {
            prefix.push(Step::S);
            go(s - 1, d, prefix, out);
            prefix.pop();
        }
        if d > 0 {
            prefix.push(Step::D);
            go(s, d - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m - 1, k - 1, &mut Vec::new(), &mut out);
    out
}

/// Convenience accessor used across the verifier: the full grid plus
/// generators for one mode.
pub(crate) struct Workspace {
    pub mode: AlgebraMode,
    pub d: Graded,
    pub s: Graded,
    pub grid: Vec<Vec<Graded>>,
}

impl Workspace {
    pub fn new(mode: AlgebraMode) -> Self {
        let (d, s) = crate::genesis::build_generators(mode).expect("valid mode");
        let grid = full_grid(mode).expect("valid mode");
        Workspace {
            mode,
            d: d.graded(),
            s: s.graded(),
            grid,
        }
    }

    pub fn t(&self, m: u32, k: u32) -> &Graded {
        &self.grid[(m - 1) as usize][(k - 1) as usize]
    }

    pub fn ad_d(&self, x: &Graded) -> Graded {
        self.mode.ad(&self.d, x)
    }

    pub fn ad_s(&self, x: &Graded) -> Graded {
        self.mode.ad(&self.s, x)
    }

    pub fn ad_d_pow(&self, x: &Graded, e: u32) -> Graded {
        let mut acc = x.clone();
        for _ in 0..e {
            acc = self.ad_d(&acc);
        }
        acc
    }

    pub fn ad_s_pow(&self, x: &Graded, e: u32) -> Graded {
        let mut acc = x.clone();
        for _ in 0..e {
            acc = self.ad_s(&acc);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_path_is_t11() {
        let mode = AlgebraMode::plain(3).unwrap();
        let v = apply_path(mode, &PathWord::empty());
        let ws = Workspace::new(mode);
        assert_eq!(v.matrix, ws.t(1, 1).matrix);
    }

    #[test]
    fn both_paths_to_t22_agree_in_plain_mode() {
        let mode = AlgebraMode::plain(3).unwrap();
        // ad D(ad S(T11)) vs ad S(ad D(T11))
        let p1 = apply_path(mode, &PathWord::canonical(1, 1, 0));
        let p2 = apply_path(mode, &PathWord::canonical(0, 1, 1));
        assert_eq!(p1.matrix, p2.matrix);
        let ws = Workspace::new(mode);
        assert_eq!(p1.matrix, ws.t(2, 2).matrix);
    }

    #[test]
    fn path_counts() {
        assert_eq!(count_paths(1, 1).count, 1);
        assert_eq!(count_paths(2, 2).count, 2);
        assert_eq!(count_paths(3, 3).count, 6);
        assert!(count_paths(2, 2).printed_variant_differs());
        for m in 1..=5u32 {
            for k in 1..=5u32 {
                if m + k > 10 {
                    continue;
                }
                assert_eq!(
                    count_paths(m, k).count,
                    all_paths(m, k).len() as u128,
                    "({m},{k})"
                );
            }
        }
    }

    #[test]
    fn admissible_path_shapes() {
        let mode = AlgebraMode::plain(4).unwrap();
        assert_eq!(admissible_paths(mode, 3, 2).len(), 2);
        assert_eq!(admissible_paths(mode, 2, 2).len(), 1);
        let bottom = admissible_paths(mode, 4, 3);
        assert_eq!(bottom.len(), 1);
        assert_eq!(bottom[0].endpoint(), (4, 3));
        assert_eq!(*bottom[0].steps.last().unwrap(), Step::D);
    }
}
