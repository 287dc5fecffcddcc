//! Exact irreducible character tables via the modular (Dixon-Burnside)
//! method.
//!
//! Pipeline: build the integer class matrices, pick the smallest prime p
//! with p = 1 (mod exponent) and p > 2 sqrt(|G|), split the matrices'
//! common eigenvectors over GF(p), recover each degree from the modular
//! norm, lift values through root-of-unity multiplicities, and sort rows
//! canonically (ascending degree, trivial character first, then
//! lexicographic on coefficient vectors). Internal consistency failures
//! panic with diagnostics; they indicate bugs, not user errors.

use crate::classfn::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::group::FiniteGroup;
use crate::modular::{split_common_eigenvectors, ModMatrix, PrimeField};
use crate::rational::{rat_from_big, Rational};
use num::BigInt;
use num::One;
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    rows: Vec<ClassFunction>,
    degrees: Vec<u64>,
    dixon_prime: u64,
}

/// The class matrix M_i: entry (j, k) counts pairs (x, y) with x in class i,
/// y in class j and x y = the representative of class k.
pub fn class_matrix(group: &FiniteGroup, i: usize) -> ModMatrix {
    let r = group.class_count();
    let mut m = ModMatrix::zero(r, r);
    for &x in &group.classes()[i].members {
        let x_inv = group.inv(x);
        for (k, class_k) in group.classes().iter().enumerate() {
            // y = x^-1 g_k is the unique solution of x y = g_k.
            let y = group.mult(x_inv, class_k.rep);
            let j = group.class_of(y);
            let v = m.get(j, k) + 1;
            m.set(j, k, v);
        }
    }
    m
}

/// Smallest prime p with p = 1 (mod exponent) and p > 2 sqrt(|G|).
pub fn dixon_prime(group: &FiniteGroup) -> u64 {
    let e = group.exponent();
    let four_g = 4 * group.order();
    let mut p = e + 1;
    loop {
        if p * p > four_g && is_prime(p) {
            return p;
        }
        p += e;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest field element of multiplicative order `e` mod p; requires
/// e | p - 1.
fn element_of_order(f: PrimeField, e: u64) -> u64 {
    assert_eq!((f.p - 1) % e, 0, "order must divide p - 1");
    (1..f.p)
        .find(|&z| f.mult_order(z) == e)
        .expect("a cyclic group of order p - 1 has elements of every divisor order")
}

/// Common eigenvectors of the class matrices over GF(p), scaled so the
/// identity-class coordinate is 1. Each vector carries the modular central
/// characters omega_k = |class_k| chi(g_k) / chi(1).
pub fn modular_eigenbasis(class_matrices: &[ModMatrix], p: u64) -> Vec<Vec<u64>> {
    let f = PrimeField::new(p);
    let reduced: Vec<ModMatrix> = class_matrices
        .iter()
        .map(|m| ModMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|&v| v % p).collect(),
        })
        .collect();
    split_common_eigenvectors(&reduced, f)
        .into_iter()
        .map(|v| {
            assert!(v[0] != 0, "central character is nonzero on the identity");
            let scale = f.inv(v[0]);
            v.iter().map(|&x| f.mul(scale, x)).collect()
        })
        .collect()
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl CharacterTable {
    pub fn compute(group: &Arc<FiniteGroup>) -> CharacterTable {
        let r = group.class_count();
        let p = dixon_prime(group);
        let f = PrimeField::new(p);
        let e = group.exponent();
        let z = element_of_order(f, e);

        let matrices: Vec<ModMatrix> = (0..r).map(|i| class_matrix(group, i)).collect();
        let eigenvectors = modular_eigenbasis(&matrices, p);
        assert_eq!(eigenvectors.len(), r);

        let class_sizes: Vec<u64> = group
            .classes()
            .iter()
            .map(|c| c.members.len() as u64)
            .collect();
        let g_mod = group.order() % p;

        let mut rows: Vec<(u64, ClassFunction)> = eigenvectors
            .iter()
            .map(|omega| {
                let degree = Self::recover_degree(group, omega, f, g_mod, &class_sizes);
                let values = Self::lift_values(group, omega, f, z, degree, &class_sizes);
                (degree, ClassFunction::new(Arc::clone(group), values))
            })
            .collect();

        // Canonical order: the trivial character first, then ascending
        // degree, ties by lexicographic coefficient vectors.
        let trivial = ClassFunction::trivial(Arc::clone(group));
        rows.sort_by(|(da, fa), (db, fb)| {
            let a_trivial = fa == &trivial;
            let b_trivial = fb == &trivial;
            match (a_trivial, b_trivial) {
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            da.cmp(db).then_with(|| {
                for (x, y) in fa.values().iter().zip(fb.values()) {
                    match x.cmp_coeffs(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
        });
        assert_eq!(rows[0].1, trivial, "table must contain the trivial character");

        let degrees: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
        let sum_sq: u64 = degrees.iter().map(|d| d * d).sum();
        assert_eq!(
            sum_sq,
            group.order(),
            "degrees must satisfy sum of squares = |G|"
        );

        CharacterTable {
            group: Arc::clone(group),
            rows: rows.into_iter().map(|(_, f)| f).collect(),
            degrees,
            dixon_prime: p,
        }
    }

    /// chi(1)^2 = |G| / sum_k omega_k omega_{k'} / |class_k| (mod p), with
    /// the unique integer root in (0, sqrt(|G|)].
    fn recover_degree(
        group: &FiniteGroup,
        omega: &[u64],
        f: PrimeField,
        g_mod: u64,
        class_sizes: &[u64],
    ) -> u64 {
        let mut s = 0u64;
        for (k, class) in group.classes().iter().enumerate() {
            let term = f.mul(omega[k], omega[class.inverse_class]);
            s = f.add(s, f.mul(term, f.inv(class_sizes[k] % f.p)));
        }
        assert!(s != 0, "modular norm of a central character is nonzero");
        let d_sq = f.mul(g_mod, f.inv(s));
        let bound = integer_sqrt(group.order());
        let degree = (1..=bound)
            .find(|&d| f.mul(d % f.p, d % f.p) == d_sq)
            .expect("degree is recoverable because p > 2 sqrt(|G|)");
        degree
    }

    /// Lift the modular character chi~ = omega * d / |class| to exact
    /// cyclotomic values through eigenvalue multiplicities: for g of order
    /// e', m_t = (1/e') sum_l chi~(g^l) z'^(-t l) counts the eigenvalue
    /// zeta_{e'}^t, and 0 <= m_t <= d < p pins the integer exactly.
    fn lift_values(
        group: &FiniteGroup,
        omega: &[u64],
        f: PrimeField,
        z: u64,
        degree: u64,
        class_sizes: &[u64],
    ) -> Vec<Cyclotomic> {
        let e = group.exponent();
        let r = group.class_count();
        let chi_mod: Vec<u64> = (0..r)
            .map(|k| f.mul(omega[k], f.mul(degree % f.p, f.inv(class_sizes[k] % f.p))))
            .collect();

        (0..r)
            .map(|k| {
                let ord = group.classes()[k].order;
                let z_ord = f.pow(z, e / ord); // multiplicative order `ord`
                let z_inv = f.inv(z_ord);
                let ord_inv = f.inv(ord % f.p);
                let mut value = Cyclotomic::zero(e);
                let mut total = 0u64;
                for t in 0..ord {
                    let mut acc = 0u64;
                    for l in 0..ord {
                        let class_of_power = group.power_map(k, l as i64);
                        let term = f.mul(chi_mod[class_of_power], f.pow(z_inv, t * l));
                        acc = f.add(acc, term);
                    }
                    let m_t = f.mul(acc, ord_inv);
                    assert!(
                        m_t <= degree,
                        "eigenvalue multiplicity {m_t} exceeds the degree {degree}"
                    );
                    total += m_t;
                    if m_t > 0 {
                        let root = Cyclotomic::root_of_unity(e, (t * (e / ord)) % e);
                        value = value
                            .add(&root.scale(&rat_from_big(BigInt::from(m_t))))
                            .expect("uniform conductor");
                    }
                }
                assert_eq!(
                    total, degree,
                    "eigenvalue multiplicities must sum to the degree"
                );
                value
            })
            .collect()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &ClassFunction {
        &self.rows[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn dixon_prime(&self) -> u64 {
        self.dixon_prime
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Index of the row with exactly these values.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.rows.iter().position(|row| row.values() == values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupSpec;
    use crate::rational::rat_int;

    fn table(spec: &str) -> CharacterTable {
        let g = Arc::new(GroupSpec::parse(spec).unwrap().build().unwrap());
        CharacterTable::compute(&g)
    }

    #[test]
    fn dixon_prime_examples() {
        let g = GroupSpec::parse("symmetric(3)").unwrap().build().unwrap();
        assert_eq!(dixon_prime(&g), 7);
        let g = GroupSpec::parse("cyclic(2)").unwrap().build().unwrap();
        assert_eq!(dixon_prime(&g), 3);
        let g = GroupSpec::parse("cyclic(1)").unwrap().build().unwrap();
        assert_eq!(dixon_prime(&g), 3);
        let g = GroupSpec::parse("symmetric(5)").unwrap().build().unwrap();
        assert_eq!(dixon_prime(&g), 61);
    }

    #[test]
    fn class_matrix_identity_row() {
        let g = GroupSpec::parse("symmetric(3)").unwrap().build().unwrap();
        let m0 = class_matrix(&g, 0);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(m0.get(j, k), u64::from(j == k));
            }
        }
    }

    #[test]
    fn class_matrix_trivial_group() {
        let g = GroupSpec::parse("cyclic(1)").unwrap().build().unwrap();
        let m = class_matrix(&g, 0);
        assert_eq!(m.get(0, 0), 1);
    }

    // Brute-force oracle: count pairs (x, y) over both classes directly.
    fn class_matrix_oracle(g: &FiniteGroup, i: usize, j: usize, k: usize) -> u64 {
        let rep = g.classes()[k].rep;
        let mut count = 0;
        for &x in &g.classes()[i].members {
            for &y in &g.classes()[j].members {
                if g.mult(x, y) == rep {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn class_matrices_match_pair_enumeration_oracle() {
        for spec in ["symmetric(3)", "quaternion8", "cyclic(6)", "dihedral(4)"] {
            let g = GroupSpec::parse(spec).unwrap().build().unwrap();
            let r = g.class_count();
            for i in 0..r {
                let m = class_matrix(&g, i);
                for j in 0..r {
                    for k in 0..r {
                        assert_eq!(m.get(j, k), class_matrix_oracle(&g, i, j, k));
                    }
                }
            }
        }
    }

    #[test]
    fn class_matrix_row_sums() {
        // sum_k a_ijk |class_k| = |class_i| |class_j|
        let g = GroupSpec::parse("symmetric(3)").unwrap().build().unwrap();
        let sizes: Vec<u64> = g.classes().iter().map(|c| c.members.len() as u64).collect();
        for i in 0..3 {
            let m = class_matrix(&g, i);
            for j in 0..3 {
                let total: u64 = (0..3).map(|k| m.get(j, k) * sizes[k]).sum();
                assert_eq!(total, sizes[i] * sizes[j]);
            }
        }
    }

    #[test]
    fn c2_table_is_the_sign_table() {
        let t = table("cyclic(2)");
        assert_eq!(t.degrees(), &[1, 1]);
        let values: Vec<Vec<Rational>> = t
            .rows()
            .iter()
            .map(|r| r.rational_values().unwrap())
            .collect();
        assert_eq!(
            values,
            vec![
                vec![rat_int(1), rat_int(1)],
                vec![rat_int(1), rat_int(-1)]
            ]
        );
    }

    #[test]
    fn s3_table() {
        let t = table("symmetric(3)");
        assert_eq!(t.degrees(), &[1, 1, 2]);
        let values: Vec<Vec<Rational>> = t
            .rows()
            .iter()
            .map(|r| r.rational_values().unwrap())
            .collect();
        assert_eq!(
            values,
            vec![
                vec![rat_int(1), rat_int(1), rat_int(1)],
                vec![rat_int(1), rat_int(-1), rat_int(1)],
                vec![rat_int(2), rat_int(0), rat_int(-1)],
            ]
        );
    }

    #[test]
    fn c4_table_has_two_irrational_rows() {
        let t = table("cyclic(4)");
        assert_eq!(t.degrees(), &[1, 1, 1, 1]);
        let irrational: Vec<usize> = (0..4)
            .filter(|&i| !t.row(i).is_rational())
            .collect();
        assert_eq!(irrational.len(), 2);
        // the irrational rows are complex conjugates of each other
        let a = t.row(irrational[0]);
        let b = t.row(irrational[1]);
        for (x, y) in a.values().iter().zip(b.values()) {
            assert_eq!(&x.conj(), y);
        }
        // and contain zeta_4 up to sign on the order-4 classes
        let zeta = Cyclotomic::root_of_unity(4, 1);
        assert!(a
            .values()
            .iter()
            .any(|v| v == &zeta || v == &zeta.neg()));
    }

    #[test]
    fn row_orthogonality_small_groups() {
        for spec in ["symmetric(3)", "cyclic(4)", "quaternion8", "sl23"] {
            let t = table(spec);
            for i in 0..t.row_count() {
                for j in 0..t.row_count() {
                    let ip = t.row(i).inner_product(t.row(j)).unwrap();
                    let expect = if i == j { rat_int(1) } else { rat_int(0) };
                    assert_eq!(ip.as_rational().unwrap(), expect, "{spec} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn quaternion_table_degrees() {
        let t = table("quaternion8");
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        assert!(t.rows().iter().all(|r| r.is_rational()));
    }

    #[test]
    fn trivial_group_table() {
        let t = table("cyclic(1)");
        assert_eq!(t.row_count(), 1);
        assert_eq!(t.degrees(), &[1]);
    }

    #[test]
    fn determinism_byte_for_byte() {
        let a = table("symmetric(4)");
        let b = table("symmetric(4)");
        let render = |t: &CharacterTable| {
            t.rows()
                .iter()
                .map(|r| serde_json::to_string(&r.to_json()).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(render(&a), render(&b));
    }
}
