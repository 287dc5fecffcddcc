//! Arbitrary-precision rational numbers.
//!
//! `Rational` is `num`'s `BigRational`: always stored reduced, denominator
//! positive. The helpers here cover construction from machine integers and
//! the decimal-string JSON form `["num", "den"]` used by every report.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde_json::Value;

pub type Rational = BigRational;

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(big(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(big(num), big(den))
}

pub fn rat_from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Exact integer extraction; `None` when the value has a nontrivial denominator.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    if q.is_integer() {
        Some(q.to_integer())
    } else {
        None
    }
}

pub fn is_nonneg_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

/// JSON form: `["num", "den"]` with decimal-string big integers.
pub fn rational_to_json(q: &Rational) -> Value {
    Value::Array(vec![
        Value::String(q.numer().to_string()),
        Value::String(q.denom().to_string()),
    ])
}

pub fn rational_from_json(v: &Value) -> Option<Rational> {
    let arr = v.as_array()?;
    if arr.len() != 2 {
        return None;
    }
    let num: BigInt = arr[0].as_str()?.parse().ok()?;
    let den: BigInt = arr[1].as_str()?.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Compact text form: `3`, `-5/2`.
pub fn rational_to_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
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

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    num::integer::lcm(a, b)
}

/// Residues in `[1, n]` coprime to `n`, ascending. For `n = 1` this is `[1]`.
pub fn coprime_residues(n: u64) -> Vec<u64> {
    (1..=n).filter(|&m| gcd_u64(m, n) == 1).collect()
}

pub fn rational_one() -> Rational {
    Rational::one()
}

pub fn rational_zero() -> Rational {
    Rational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e);
        }
        assert_eq!(euler_phi(60), 16);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn json_round_trip() {
        let q = rat(-22, 8);
        let v = rational_to_json(&q);
        assert_eq!(v, serde_json::json!(["-11", "4"]));
        assert_eq!(rational_from_json(&v).unwrap(), q);
    }

    #[test]
    fn coprime_residues_basic() {
        assert_eq!(coprime_residues(1), vec![1]);
        assert_eq!(coprime_residues(6), vec![1, 5]);
        assert_eq!(coprime_residues(8), vec![1, 3, 5, 7]);
    }
}
