//! Exact class functions: cyclotomic-valued vectors indexed by conjugacy
//! classes, with the hermitian inner product, induction of principal
//! characters from cyclic subgroups, and characteristic functions of the
//! cyclic-subgroup classes.
//!
//! Every value is stored at the group exponent's conductor, including plain
//! rationals, so arithmetic never needs per-value lifting.

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{CyclicSubgroup, FiniteGroup};
use crate::rational::{rat_from_big, Rational};
use num::BigInt;
use num::{One, Zero};
use serde_json::Value;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), group.class_count());
        assert!(
            values.iter().all(|v| v.conductor() == group.exponent()),
            "class function values live at the exponent conductor"
        );
        ClassFunction { group, values }
    }

    pub fn from_rationals(group: Arc<FiniteGroup>, values: Vec<Rational>) -> Self {
        let e = group.exponent();
        let values = values
            .into_iter()
            .map(|q| Cyclotomic::from_rational(e, q))
            .collect();
        Self::new(group, values)
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let e = group.exponent();
        let values = vec![Cyclotomic::zero(e); group.class_count()];
        ClassFunction { group, values }
    }

    pub fn constant(group: Arc<FiniteGroup>, q: Rational) -> Self {
        let e = group.exponent();
        let values = vec![Cyclotomic::from_rational(e, q); group.class_count()];
        ClassFunction { group, values }
    }

    /// The principal character 1_G.
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        Self::constant(group, Rational::one())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b).expect("uniform conductor"))
            .collect();
        Ok(ClassFunction {
            group: Arc::clone(&self.group),
            values,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.sub(b).expect("uniform conductor"))
            .collect();
        Ok(ClassFunction {
            group: Arc::clone(&self.group),
            values,
        })
    }

    /// Pointwise scalar multiple by a cyclotomic scalar.
    pub fn scale(&self, alpha: &Cyclotomic) -> Self {
        assert_eq!(alpha.conductor(), self.group.exponent());
        let values = self
            .values
            .iter()
            .map(|v| v.mul(alpha).expect("uniform conductor"))
            .collect();
        ClassFunction {
            group: Arc::clone(&self.group),
            values,
        }
    }

    pub fn scale_rat(&self, q: &Rational) -> Self {
        let values = self.values.iter().map(|v| v.scale(q)).collect();
        ClassFunction {
            group: Arc::clone(&self.group),
            values,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(|v| v.is_rational())
    }

    pub fn rational_values(&self) -> Option<Vec<Rational>> {
        self.values.iter().map(|v| v.as_rational()).collect()
    }

    /// Hermitian inner product (1/|G|) sum |class| f(g) conj(h(g)).
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.check_group(other)?;
        let e = self.group.exponent();
        let mut acc = Cyclotomic::zero(e);
        for (k, class) in self.group.classes().iter().enumerate() {
            let term = self.values[k]
                .mul(&other.values[k].conj())
                .expect("uniform conductor")
                .scale(&Rational::from_integer(BigInt::from(class.members.len())));
            acc = acc.add(&term).expect("uniform conductor");
        }
        Ok(acc.scale(&(Rational::one() / rat_from_big(BigInt::from(self.group.order())))))
    }

    /// JSON form: array of serialized values in canonical class order.
    pub fn to_json(&self) -> Value {
        Value::Array(self.values.iter().map(|v| v.to_json()).collect())
    }
}

/// The induced principal character (1_H)^G for a cyclic subgroup H, computed
/// by the direct count over all of G: the value on the class of g is
/// #{x in G : x g x^-1 in H} / |H|.
pub fn induce_principal(group: &Arc<FiniteGroup>, subgroup: &CyclicSubgroup) -> ClassFunction {
    let n = group.order() as usize;
    let h_size = subgroup.elements.len();
    let in_h: Vec<bool> = {
        let mut v = vec![false; n];
        for &x in &subgroup.elements {
            v[x] = true;
        }
        v
    };
    let mut values = Vec::with_capacity(group.class_count());
    for class in group.classes() {
        let g = class.rep;
        let count = (0..n).filter(|&x| in_h[group.conjugate(x, g)]).count();
        assert_eq!(
            count % h_size,
            0,
            "induced principal character values are integers"
        );
        values.push(Rational::from_integer(BigInt::from(count / h_size)));
    }
    ClassFunction::from_rationals(Arc::clone(group), values)
}

/// Induced principal character of the representative subgroup of cyclic
/// class `i`.
pub fn induce_principal_from_class(group: &Arc<FiniteGroup>, i: usize) -> ClassFunction {
    let subgroup = group.cyclic_class_subgroup(i);
    induce_principal(group, &subgroup)
}

/// Characteristic function of cyclic class `i`: 1 on the conjugacy classes
/// it fuses, 0 elsewhere.
pub fn characteristic_function(group: &Arc<FiniteGroup>, i: usize) -> ClassFunction {
    let fused = &group.cyclic_classes()[i].fused_conj_classes;
    let values = (0..group.class_count())
        .map(|k| {
            if fused.contains(&k) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    ClassFunction::from_rationals(Arc::clone(group), values)
}
