//! Dense integer polynomials, just enough for cyclotomic polynomials.
//!
//! Coefficients ascending; the zero polynomial is the empty vector. The
//! n-th cyclotomic polynomial is obtained by exact division of x^n - 1 by
//! the product of all lower cyclotomic polynomials at divisors of n, and
//! results are memoized process-wide.

use crate::rational::{divisors, euler_phi, Rational};
use num::bigint::BigInt;
use num::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

/// Exact division by a monic divisor. Panics on a nonzero remainder; callers
/// only divide where divisibility is guaranteed.
pub fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    assert!(!den.is_empty(), "division by zero polynomial");
    assert!(den.last().unwrap().is_one(), "divisor must be monic");
    let mut rem: IntPoly = num.to_vec();
    trim(&mut rem);
    let d = den.len() - 1;
    if rem.len() <= d {
        assert!(rem.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    while rem.len() > d {
        let k = rem.len() - 1 - d;
        let c = rem.last().unwrap().clone();
        quot[k] = c.clone();
        for (i, di) in den.iter().enumerate() {
            let v = &rem[k + i] - &c * di;
            rem[k + i] = v;
        }
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    assert!(rem.is_empty(), "inexact polynomial division");
    trim(&mut quot);
    quot
}

fn x_pow_n_minus_1(n: u64) -> IntPoly {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    p
}

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, monic of degree phi(n).
pub fn cyclotomic_polynomial(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let result = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        let mut p = x_pow_n_minus_1(n);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            p = poly_div_exact(&p, &phi_d);
        }
        p
    };
    assert_eq!(result.len() as u64 - 1, euler_phi(n));
    let arc = Arc::new(result);
    cyclo_cache()
        .lock()
        .unwrap()
        .insert(n, Arc::clone(&arc));
    arc
}

/// Reduce a rational-coefficient polynomial modulo the monic integer
/// polynomial `modulus`, returning exactly `modulus.len() - 1` coefficients.
pub fn reduce_mod_monic(coeffs: &[Rational], modulus: &[BigInt]) -> Vec<Rational> {
    let deg = modulus.len() - 1;
    let mut rem: Vec<Rational> = coeffs.to_vec();
    while rem.last().map_or(false, |c| c.is_zero()) {
        rem.pop();
    }
    while rem.len() > deg {
        let k = rem.len() - 1 - deg;
        let c = rem.last().unwrap().clone();
        for (i, mi) in modulus.iter().enumerate() {
            let sub = &c * Rational::from_integer(mi.clone());
            let v = &rem[k + i] - sub;
            rem[k + i] = v;
        }
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
    }
    rem.resize(deg, Rational::zero());
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    // Oracle used to freeze the small cyclotomic polynomials: naive long
    // division of x^n - 1 by the product of the lower factors, done
    // independently of the memoized implementation path.
    fn naive_cyclotomic(n: u64) -> IntPoly {
        fn naive(n: u64) -> IntPoly {
            if n == 1 {
                return ints(&[-1, 1]);
            }
            let mut denom = ints(&[1]);
            for d in divisors(n) {
                if d < n {
                    denom = poly_mul(&denom, &naive(d));
                }
            }
            poly_div_exact(&x_pow_n_minus_1(n), &denom)
        }
        naive(n)
    }

    #[test]
    fn cyclotomic_base_case() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
    }

    #[test]
    fn cyclotomic_4_and_6() {
        // Frozen from the naive-division oracle below.
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), naive_cyclotomic(4));
        assert_eq!(*cyclotomic_polynomial(6), naive_cyclotomic(6));
    }

    #[test]
    fn cyclotomic_matches_naive_oracle_up_to_30() {
        for n in 1..=30 {
            assert_eq!(*cyclotomic_polynomial(n), naive_cyclotomic(n), "n = {n}");
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_1() {
        for n in [1u64, 2, 6, 12, 20] {
            let mut prod = ints(&[1]);
            for d in divisors(n) {
                prod = poly_mul(&prod, &cyclotomic_polynomial(d));
            }
            assert_eq!(prod, x_pow_n_minus_1(n));
        }
    }

    #[test]
    fn reduction_modulo_phi_3() {
        // 1 + x + x^2 = Phi_3, so it reduces to zero.
        let phi3 = cyclotomic_polynomial(3);
        let r = reduce_mod_monic(&[rat_int(1), rat_int(1), rat_int(1)], &phi3);
        assert!(r.iter().all(|c| c.is_zero()));
        assert_eq!(r.len(), 2);
    }
}
