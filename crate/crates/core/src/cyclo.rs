//! Exact arithmetic in the cyclotomic fields Q(zeta_N).
//!
//! Elements are polynomials in zeta_N over Q, stored in the power basis
//! 1, zeta, zeta^2, ... and kept reduced modulo the N-th cyclotomic
//! polynomial Phi_N. Phi_N is irreducible over Q, so the quotient is a
//! field and an element is zero iff all of its coefficients are zero.
//! Reducing mod x^N - 1 instead would introduce zero divisors and break
//! exact zero testing, which every relation check downstream relies on.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar; always stored in lowest terms with a positive
/// denominator (enforced by `num_rational`).
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycError {
    /// Two operands live in fields of different cyclotomic order.
    OrderMismatch { left: u32, right: u32 },
    DivisionByZero,
}

impl fmt::Display for CycError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycError::OrderMismatch { left, right } => {
                write!(f, "cyclotomic order mismatch: {left} vs {right}")
            }
            CycError::DivisionByZero => write!(f, "division by zero in cyclotomic field"),
        }
    }
}

/// The N-th cyclotomic polynomial Phi_N, monic with integer
/// coefficients, returned in ascending order.
///
/// Computed by exact division of x^N - 1 by the product of Phi_d over
/// all proper divisors d of N.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            den = int_poly_mul(&den, &cyclotomic_poly(d));
        }
    }
    int_poly_div_exact(&num, &den)
}

/// Euler's totient of n, i.e. deg Phi_n.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact division of integer polynomials; panics if the division leaves
/// a remainder (cannot happen for cyclotomic factors).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i].clone();
        if !c.is_zero() {
            quot[i - dd] = c.clone();
            for (j, dj) in den.iter().enumerate() {
                let delta = &c * dj;
                rem[i - dd + j] -= delta;
            }
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact polynomial division");
    quot
}

/// An element of Q(zeta_N), reduced mod Phi_N.
///
/// `coeffs` always has length deg Phi_N = totient(N). The order N is
/// carried per value and checked on every binary operation: sl(n) runs
/// in Q(zeta_n) while the super and sine modules run in Q(zeta_2n), and
/// silently mixing the two would corrupt every result downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<Rat>,
}

impl CycNum {
    pub fn zero(order: u32) -> Self {
        CycNum {
            order,
            coeffs: vec![Rat::zero(); totient(order) as usize],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rat::one())
    }

    pub fn from_rational(order: u32, value: Rat) -> Self {
        let mut out = Self::zero(order);
        if totient(order) == 0 {
            // unreachable: totient(n) >= 1 for n >= 1
            return out;
        }
        out.coeffs[0] = value;
        out
    }

    pub fn from_integer(order: u32, value: i64) -> Self {
        Self::from_rational(order, Rat::from_integer(BigInt::from(value)))
    }

    /// zeta_N^e, with e reduced mod N (negative exponents allowed).
    pub fn zeta_pow(order: u32, e: i64) -> Self {
        let e = e.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rat::zero(); e + 1];
        raw[e] = Rat::one();
        Self::from_raw(order, raw)
    }

    /// Builds an element from an unreduced coefficient vector.
    pub fn from_raw(order: u32, coeffs: Vec<Rat>) -> Self {
        let phi = cyclotomic_poly(order);
        Self::from_raw_with_phi(order, coeffs, &phi)
    }

    fn from_raw_with_phi(order: u32, mut coeffs: Vec<Rat>, phi: &[BigInt]) -> Self {
        let deg = phi.len() - 1;
        if coeffs.len() > deg {
            for i in (deg..coeffs.len()).rev() {
                if coeffs[i].is_zero() {
                    continue;
                }
                let c = coeffs[i].clone();
                for (j, pj) in phi.iter().enumerate().take(deg) {
                    let delta = &c * Rat::from_integer(pj.clone());
                    coeffs[i - deg + j] -= delta;
                }
                coeffs[i] = Rat::zero();
            }
        }
        coeffs.resize(deg, Rat::zero());
        CycNum { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), CycError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(CycError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        let phi = cyclotomic_poly(self.order);
        Ok(self.mul_with_phi(other, &phi))
    }

    /// Multiplication with a caller-supplied Phi_N; lets matrix kernels
    /// compute the modulus once per matrix instead of once per scalar.
    pub(crate) fn mul_with_phi(&self, other: &Self, phi: &[BigInt]) -> Self {
        debug_assert_eq!(self.order, other.order);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        let mut raw = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Self::from_raw_with_phi(self.order, raw, phi)
    }

    pub fn neg(&self) -> Self {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm on
    /// (self, Phi_N) over Q[x].
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let phi: Vec<Rat> = cyclotomic_poly(self.order)
            .into_iter()
            .map(Rat::from_integer)
            .collect();
        // Invariants: r0 = u0 * self (mod Phi), r1 = u1 * self (mod Phi).
        let mut r0 = phi;
        let mut r1 = trim(self.coeffs.clone());
        let mut u0: Vec<Rat> = vec![];
        let mut u1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = rat_poly_divmod(&r0, &r1);
            let qu1 = rat_poly_mul(&q, &u1);
            let u = rat_poly_sub(&u0, &qu1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
        }
        // r0 is a nonzero constant gcd since Phi_N is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let lead = r0[0].recip();
        let inv_coeffs: Vec<Rat> = u0.iter().map(|c| c * &lead).collect();
        Ok(Self::from_raw(self.order, inv_coeffs))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        other.inv().and_then(|i| self.try_mul(&i))
    }

    pub fn pow(&self, e: u32) -> Self {
        let phi = cyclotomic_poly(self.order);
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul_with_phi(self, &phi);
        }
        acc
    }

    /// Renders the element as a polynomial in `z` (= zeta_N).
    pub fn to_display_string(&self) -> String {
        use alloc::format;
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if i == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                if i == 1 {
                    String::from("z")
                } else {
                    format!("z^{i}")
                }
            } else if i == 1 {
                format!("{mag}*z")
            } else {
                format!("{mag}*z^{i}")
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{term}"));
                } else {
                    parts.push(term);
                }
            } else if c.is_negative() {
                parts.push(format!("- {term}"));
            } else {
                parts.push(format!("+ {term}"));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rat_poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn rat_poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

fn rat_poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.len() - 1;
    let lead = den[dd].recip();
    let mut rem: Vec<Rat> = num.to_vec();
    if num.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rat::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = &rem[i] * &lead;
        if !c.is_zero() {
            quot[i - dd] = c.clone();
            for (j, dj) in den.iter().enumerate() {
                let delta = &c * dj;
                rem[i - dd + j] -= delta;
            }
        }
    }
    (trim(quot), trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_poly(coeffs: &[i64]) -> Vec<BigInt> {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_poly_small_orders() {
        assert_eq!(cyclotomic_poly(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), int_poly(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn totient_degrees_sum_to_n() {
        for n in 1..=16u32 {
            let sum: u32 = (1..=n).filter(|d| n % d == 0).map(totient).sum();
            assert_eq!(sum, n);
            assert_eq!(cyclotomic_poly(n).len() as u32, totient(n) + 1);
        }
    }

    #[test]
    fn add_one_and_minus_one() {
        let one = CycNum::one(2);
        let z2 = CycNum::zeta_pow(2, 1);
        assert!(one.try_add(&z2).unwrap().is_zero());
        // (1 - z2)^2 = 4
        let d = one.try_sub(&z2).unwrap();
        assert_eq!(d.try_mul(&d).unwrap(), CycNum::from_integer(2, 4));
    }

    #[test]
    fn product_of_conjugates_order_three() {
        // (1 - z3)(1 - z3^2) = 3, from 1 + z3 + z3^2 = 0.
        let one = CycNum::one(3);
        let a = one.try_sub(&CycNum::zeta_pow(3, 1)).unwrap();
        let b = one.try_sub(&CycNum::zeta_pow(3, 2)).unwrap();
        assert_eq!(a.try_mul(&b).unwrap(), CycNum::from_integer(3, 3));
    }

    #[test]
    fn zeta_powers_reduce() {
        assert_eq!(CycNum::zeta_pow(4, 2), CycNum::from_integer(4, -1));
        assert_eq!(CycNum::zeta_pow(3, 3), CycNum::one(3));
        // Phi_6(z6) = 0, i.e. z6^2 = z6 - 1
        let z = CycNum::zeta_pow(6, 1);
        let z2 = CycNum::zeta_pow(6, 2);
        assert_eq!(z2, z.try_sub(&CycNum::one(6)).unwrap());
    }

    #[test]
    fn nth_power_of_zeta_is_one() {
        for n in 1..=12u32 {
            assert!(CycNum::zeta_pow(n, 1).pow(n).is_one());
        }
    }

    #[test]
    fn inverses() {
        assert!(CycNum::one(5).inv().unwrap().is_one());
        for n in 2..=10u32 {
            let z = CycNum::zeta_pow(n, 1);
            assert_eq!(z.inv().unwrap(), CycNum::zeta_pow(n, n as i64 - 1));
        }
        // inv(1 - z3) = (1 - z3^2)/3
        let one = CycNum::one(3);
        let x = one.try_sub(&CycNum::zeta_pow(3, 1)).unwrap();
        let third = Rat::new(BigInt::from(1), BigInt::from(3));
        let expected = one.try_sub(&CycNum::zeta_pow(3, 2)).unwrap().scale(&third);
        assert_eq!(x.inv().unwrap(), expected);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(CycNum::zero(4).inv(), Err(CycError::DivisionByZero));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = CycNum::one(3);
        let b = CycNum::one(4);
        assert!(matches!(
            a.try_add(&b),
            Err(CycError::OrderMismatch { left: 3, right: 4 })
        ));
    }

    fn arb_cyc(order: u32) -> impl Strategy<Value = CycNum> {
        let deg = totient(order) as usize;
        prop::collection::vec((-6i64..=6, 1i64..=4), deg).prop_map(move |cs| {
            let coeffs = cs
                .into_iter()
                .map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
                .collect();
            CycNum { order, coeffs }
        })
    }

    proptest! {
        #[test]
        fn field_axioms_order_12(
            a in arb_cyc(12),
            b in arb_cyc(12),
            c in arb_cyc(12),
        ) {
            let ab = a.try_mul(&b).unwrap();
            let ba = b.try_mul(&a).unwrap();
            prop_assert_eq!(&ab, &ba);
            let assoc_l = ab.try_mul(&c).unwrap();
            let assoc_r = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(assoc_l, assoc_r);
            let distrib_l = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
            let distrib_r = a
                .try_mul(&b)
                .unwrap()
                .try_add(&a.try_mul(&c).unwrap())
                .unwrap();
            prop_assert_eq!(distrib_l, distrib_r);
        }

        #[test]
        fn mul_inverse_is_exact(a in arb_cyc(8)) {
            prop_assume!(!a.is_zero());
            prop_assert!(a.try_mul(&a.inv().unwrap()).unwrap().is_one());
        }
    }
}
