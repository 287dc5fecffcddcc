//! Exact elements of the cyclotomic field Q(zeta_n).
//!
//! A value is a coefficient vector of length phi(n) over the rationals,
//! canonical modulo the n-th cyclotomic polynomial: two values with the same
//! conductor are equal iff their vectors are equal. Arithmetic never changes
//! the conductor on its own; mixed-conductor operands are an error and the
//! caller lifts with [`Cyclotomic::embed`] first. Equality is the exception:
//! it lifts both sides to the lcm conductor before comparing.

use crate::error::{Error, Result};
use crate::matrix::{solve, RationalMatrix};
use crate::poly::{cyclotomic_polynomial, reduce_mod_monic};
use crate::rational::{
    divisors, euler_phi, gcd_u64, lcm_u64, rational_from_json, rational_to_json,
    rational_to_string, Rational,
};
use num::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Build from arbitrary polynomial coefficients in zeta_n, reducing
    /// modulo the n-th cyclotomic polynomial.
    pub fn from_poly(conductor: u64, coeffs: &[Rational]) -> Self {
        assert!(conductor >= 1);
        let phi = cyclotomic_polynomial(conductor);
        Cyclotomic {
            conductor,
            coeffs: reduce_mod_monic(coeffs, &phi),
        }
    }

    pub fn zero(conductor: u64) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn from_rational(conductor: u64, q: Rational) -> Self {
        let mut v = Self::zero(conductor);
        v.coeffs[0] = q;
        v
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    /// zeta_n^k.
    pub fn root_of_unity(conductor: u64, k: u64) -> Self {
        let k = (k % conductor) as usize;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self::from_poly(conductor, &coeffs)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rational iff every non-constant coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same_conductor(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_conductor(other)?;
        let mut prod = vec![Rational::zero(); 2 * self.coeffs.len().max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &prod[i + j] + a * b;
                prod[i + j] = v;
            }
        }
        Ok(Self::from_poly(self.conductor, &prod))
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, solving the linear system a*x = 1 over Q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(
                self.conductor,
                Rational::one() / q,
            ));
        }
        let phi = self.coeffs.len();
        // Column j of the multiplication-by-a map is a * zeta^j.
        let mut m = RationalMatrix::zero(phi, phi);
        for j in 0..phi {
            let mut shifted = vec![Rational::zero(); j];
            shifted.extend(self.coeffs.iter().cloned());
            let col = Self::from_poly(self.conductor, &shifted);
            for i in 0..phi {
                m.set(i, j, col.coeffs[i].clone());
            }
        }
        let mut rhs = vec![Rational::zero(); phi];
        rhs[0] = Rational::one();
        let x = solve(&m, &rhs).expect("nonzero cyclotomic is invertible");
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: x,
        })
    }

    /// The same complex number at conductor `m`; requires conductor | m.
    pub fn embed(&self, m: u64) -> Result<Self> {
        if m % self.conductor != 0 {
            return Err(Error::ConductorNotDivisible(self.conductor, m));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let t = (m / self.conductor) as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * t] = c.clone();
        }
        Ok(Self::from_poly(m, &coeffs))
    }

    /// Image under the field automorphism zeta_n -> zeta_n^m, gcd(m, n) = 1.
    pub fn galois_twist(&self, m: i64) -> Result<Self> {
        let n = self.conductor;
        let mm = m.rem_euclid(n as i64) as u64;
        if gcd_u64(mm % n, n) != 1 && n > 1 {
            return Err(Error::TwistNotCoprime { m, n });
        }
        let mut coeffs = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as u64) * mm % n) as usize;
            let v = &coeffs[e] + c;
            coeffs[e] = v;
        }
        Ok(Self::from_poly(n, &coeffs))
    }

    /// Complex conjugation: the twist by n - 1.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois_twist(self.conductor as i64 - 1)
            .expect("n - 1 is coprime to n")
    }

    /// Re-express at the smallest conductor dividing the current one that
    /// still contains the value.
    pub fn minimize(&self) -> Self {
        for d in divisors(self.conductor) {
            if d == self.conductor {
                break;
            }
            let phi_d = euler_phi(d) as usize;
            let phi_n = self.coeffs.len();
            let mut basis = RationalMatrix::zero(phi_n, phi_d);
            for j in 0..phi_d {
                let b = Self::root_of_unity(d, j as u64)
                    .embed(self.conductor)
                    .expect("divisor lifts");
                for i in 0..phi_n {
                    basis.set(i, j, b.coeffs[i].clone());
                }
            }
            if let Some(x) = solve(&basis, &self.coeffs) {
                return Cyclotomic {
                    conductor: d,
                    coeffs: x,
                };
            }
        }
        self.clone()
    }

    /// Lift both operands to the lcm conductor.
    pub fn lift_common(&self, other: &Self) -> (Self, Self) {
        let l = lcm_u64(self.conductor, other.conductor);
        (
            self.embed(l).expect("conductor divides lcm"),
            other.embed(l).expect("conductor divides lcm"),
        )
    }

    /// Total order on values at one conductor: lexicographic on coefficient
    /// vectors. Used for canonical table ordering, not a numeric order.
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        assert_eq!(self.conductor, other.conductor, "order needs one conductor");
        self.coeffs.cmp(&other.coeffs)
    }

    /// Floating-point evaluation at e^(2 pi i / n); sanity checks only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            let cf = c.to_f64().expect("coefficient fits in f64");
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += cf * theta.cos();
            im += cf * theta.sin();
        }
        (re, im)
    }

    /// JSON form: `{"conductor": n, "coeffs": [["num","den"], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "conductor": self.conductor,
            "coeffs": self.coeffs.iter().map(rational_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let conductor = v.get("conductor")?.as_u64()?;
        if conductor == 0 {
            return None;
        }
        let coeffs: Vec<Rational> = v
            .get("coeffs")?
            .as_array()?
            .iter()
            .map(rational_from_json)
            .collect::<Option<_>>()?;
        if coeffs.len() as u64 != euler_phi(conductor) {
            return None;
        }
        Some(Cyclotomic { conductor, coeffs })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lift_common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    /// Renders as a polynomial in `z`, a primitive conductor-th root of unity,
    /// e.g. `1 - z + 2/3*z^4`; plain rationals print with no `z` term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_str = rational_to_string(&mag);
            if i == 0 {
                write!(f, "{mag_str}")?;
            } else {
                if mag_str != "1" {
                    write!(f, "{mag_str}*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
        Ok(())
    }
}
