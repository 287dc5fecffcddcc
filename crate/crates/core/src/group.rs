//! Finite permutation groups with full element enumeration.
//!
//! Everything is computed eagerly at construction time and the group is
//! immutable afterwards: canonical element order (lexicographic image
//! vectors, identity first), inverse and order tables, conjugacy classes
//! with power maps, and the conjugacy classes of cyclic subgroups together
//! with their normalizer sizes. The fusion of a conjugacy class with the
//! classes of all coprime powers of its elements is what groups elements by
//! "generates a conjugate cyclic subgroup".

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rational::{euler_phi, gcd_u64, lcm_u64};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

pub const DEFAULT_SIZE_LIMIT: usize = 5000;
const MULT_TABLE_LIMIT: usize = 1024;

/// A conjugacy class of group elements.
#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Smallest member in canonical element order.
    pub rep: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    /// Common order of all members.
    pub order: u64,
    pub centralizer_size: u64,
    pub inverse_class: usize,
    /// `power_classes[m]` is the class of `rep^m`, for 0 <= m < order.
    pub power_classes: Vec<usize>,
}

/// A conjugacy class of cyclic subgroups.
#[derive(Clone, Debug)]
pub struct CyclicClass {
    /// Element index generating the representative subgroup.
    pub rep_generator: usize,
    pub subgroup_order: u64,
    pub normalizer_size: u64,
    /// Conjugacy classes of G fused by taking coprime powers; their union is
    /// the set of elements generating a conjugate of the representative.
    pub fused_conj_classes: Vec<usize>,
    /// Number of elements generating a conjugate subgroup.
    pub eq_class_size: u64,
}

impl CyclicClass {
    /// |N(H) : H|.
    pub fn normalizer_index(&self) -> u64 {
        debug_assert_eq!(self.normalizer_size % self.subgroup_order, 0);
        self.normalizer_size / self.subgroup_order
    }
}

/// A concrete cyclic subgroup given by a generator and its sorted element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroup {
    pub generator: usize,
    pub elements: Vec<usize>,
}

#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    exponent: u64,
    mult_table: Option<Vec<u32>>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    cyclic_classes: Vec<CyclicClass>,
    /// Conjugacy class index -> cyclic class owning it.
    conj_to_cyclic: Vec<usize>,
}

impl FiniteGroup {
    pub fn generate(degree: usize, generators: Vec<Perm>, limit: usize) -> Result<FiniteGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }

        // Orbit of the identity under right multiplication by generators.
        let identity = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue: VecDeque<Perm> = VecDeque::new();
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= limit {
                        return Err(Error::SizeLimitExceeded { limit });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }

        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let n = elements.len();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses: Vec<usize> = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders: Vec<u64> = elements.iter().map(|p| p.order()).collect();
        let exponent = orders.iter().copied().fold(1, lcm_u64);

        let mult_table = if n <= MULT_TABLE_LIMIT {
            let mut table = vec![0u32; n * n];
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    table[i * n + j] = index[&a.compose(b)] as u32;
                }
            }
            Some(table)
        } else {
            None
        };

        let mut group = FiniteGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            orders,
            exponent,
            mult_table,
            classes: Vec::new(),
            class_of: Vec::new(),
            cyclic_classes: Vec::new(),
            conj_to_cyclic: Vec::new(),
        };
        group.compute_conjugacy_classes();
        group.compute_cyclic_classes();
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn perm(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn element_index(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mult(&self, a: usize, b: usize) -> usize {
        match &self.mult_table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    /// a^m for any integer m, reduced modulo the element order.
    pub fn power(&self, a: usize, m: i64) -> usize {
        let ord = self.orders[a] as i64;
        let mut e = m.rem_euclid(ord) as u64;
        let mut base = a;
        let mut acc = 0usize; // identity index
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mult(acc, base);
            }
            base = self.mult(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mult(self.mult(x, g), self.inv(x))
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class of g^m for g in class `k`; well-defined because conjugation
    /// commutes with taking powers.
    pub fn power_map(&self, k: usize, m: i64) -> usize {
        let class = &self.classes[k];
        let e = m.rem_euclid(class.order as i64) as usize;
        class.power_classes[e]
    }

    pub fn cyclic_classes(&self) -> &[CyclicClass] {
        &self.cyclic_classes
    }

    /// Cyclic class owning conjugacy class `k`.
    pub fn cyclic_class_of(&self, k: usize) -> usize {
        self.conj_to_cyclic[k]
    }

    /// The representative subgroup of a cyclic class.
    pub fn cyclic_class_subgroup(&self, i: usize) -> CyclicSubgroup {
        self.cyclic_subgroup(self.cyclic_classes[i].rep_generator)
    }

    /// The cyclic subgroup generated by one element.
    pub fn cyclic_subgroup(&self, generator: usize) -> CyclicSubgroup {
        let mut elements = Vec::new();
        let mut x = 0usize;
        loop {
            elements.push(x);
            x = self.mult(x, generator);
            if x == 0 {
                break;
            }
        }
        elements.sort_unstable();
        CyclicSubgroup {
            generator,
            elements,
        }
    }

    /// Validate an element set as a cyclic subgroup and pick its smallest
    /// generator.
    pub fn cyclic_subgroup_from_elements(&self, elements: &[usize]) -> Result<CyclicSubgroup> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        let n = set.len() as u64;
        for &x in &set {
            if self.orders[x] == n {
                let h = self.cyclic_subgroup(x);
                if h.elements.iter().copied().collect::<BTreeSet<_>>() == set {
                    return Ok(h);
                }
            }
        }
        Err(Error::NotCyclic)
    }

    /// Every distinct cyclic subgroup, sorted by (order, element set).
    pub fn all_cyclic_subgroups(&self) -> Vec<CyclicSubgroup> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut subgroups = Vec::new();
        for x in 0..self.elements.len() {
            let h = self.cyclic_subgroup(x);
            if seen.insert(h.elements.clone()) {
                subgroups.push(h);
            }
        }
        subgroups.sort_by(|a, b| {
            (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements))
        });
        subgroups
    }

    /// Brute-force subgroup conjugacy test: exists g with g A g^-1 = B.
    pub fn subgroups_conjugate(&self, a: &CyclicSubgroup, b: &CyclicSubgroup) -> bool {
        if a.elements.len() != b.elements.len() {
            return false;
        }
        let target: BTreeSet<usize> = b.elements.iter().copied().collect();
        (0..self.elements.len()).any(|g| {
            a.elements
                .iter()
                .map(|&x| self.conjugate(g, x))
                .collect::<BTreeSet<_>>()
                == target
        })
    }

    /// Cyclic class containing a given subgroup (by its generator's class).
    pub fn cyclic_class_of_subgroup(&self, h: &CyclicSubgroup) -> usize {
        self.conj_to_cyclic[self.class_of[h.generator]]
    }

    fn compute_conjugacy_classes(&mut self) {
        let n = self.elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();

        // Conjugating by generators suffices: generators generate G, and the
        // class is the orbit under conjugation.
        let gen_indices: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g])
            .collect();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = raw_classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in &gen_indices {
                    let y = self.conjugate(g, x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            raw_classes.push(members);
        }

        // Canonical order: ascending element order, then smallest member.
        let mut order_keys: Vec<usize> = (0..raw_classes.len()).collect();
        order_keys.sort_by_key(|&c| (self.orders[raw_classes[c][0]], raw_classes[c][0]));

        let mut classes = Vec::with_capacity(raw_classes.len());
        let mut final_class_of = vec![usize::MAX; n];
        for (new_id, &old_id) in order_keys.iter().enumerate() {
            let members = raw_classes[old_id].clone();
            for &m in &members {
                final_class_of[m] = new_id;
            }
            let rep = members[0];
            let order = self.orders[rep];
            let size = members.len() as u64;
            assert_eq!(
                self.order() % size,
                0,
                "class size must divide the group order"
            );
            classes.push(ConjClass {
                rep,
                members,
                order,
                centralizer_size: self.order() / size,
                inverse_class: usize::MAX,
                power_classes: Vec::new(),
            });
        }

        // Power maps and inverse classes need the final numbering.
        for k in 0..classes.len() {
            let rep = classes[k].rep;
            let ord = classes[k].order;
            let powers: Vec<usize> = (0..ord)
                .map(|m| final_class_of[self.power(rep, m as i64)])
                .collect();
            classes[k].inverse_class = final_class_of[self.inv(rep)];
            classes[k].power_classes = powers;
        }

        self.classes = classes;
        self.class_of = final_class_of;
    }

    fn compute_cyclic_classes(&mut self) {
        let r = self.classes.len();
        let mut assigned = vec![false; r];
        let mut cyclic_classes = Vec::new();
        let mut conj_to_cyclic = vec![usize::MAX; r];

        for k in 0..r {
            if assigned[k] {
                continue;
            }
            let n_i = self.classes[k].order;
            let mut fused: BTreeSet<usize> = BTreeSet::new();
            for m in 1..=n_i {
                if gcd_u64(m, n_i) == 1 {
                    fused.insert(self.power_map(k, m as i64));
                }
            }
            let id = cyclic_classes.len();
            for &c in &fused {
                assert!(!assigned[c], "coprime-power fusion blocks must not overlap");
                assigned[c] = true;
                conj_to_cyclic[c] = id;
            }

            let rep_generator = self.classes[k].rep;
            let subgroup = self.cyclic_subgroup(rep_generator);
            let members: HashSet<usize> = subgroup.elements.iter().copied().collect();
            // g H g^-1 = H iff g x g^-1 lies in H, since the conjugate of the
            // generator has full order and therefore generates H again.
            let normalizer_size = (0..self.elements.len())
                .filter(|&g| members.contains(&self.conjugate(g, rep_generator)))
                .count() as u64;

            let eq_class_size: u64 = fused
                .iter()
                .map(|&c| self.classes[c].members.len() as u64)
                .sum();
            // |C_i| * |N(H_i)| = |G| * phi(n_i), in multiplied-out form.
            assert_eq!(
                eq_class_size * normalizer_size,
                self.order() * euler_phi(n_i),
                "cyclic class size identity violated for subgroup order {n_i}"
            );

            cyclic_classes.push(CyclicClass {
                rep_generator,
                subgroup_order: n_i,
                normalizer_size,
                fused_conj_classes: fused.into_iter().collect(),
                eq_class_size,
            });
        }

        self.cyclic_classes = cyclic_classes;
        self.conj_to_cyclic = conj_to_cyclic;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        let gens = vec![
            Perm::parse_cycles("(0 1)", 3).unwrap(),
            Perm::parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        FiniteGroup::generate(3, gens, DEFAULT_SIZE_LIMIT).unwrap()
    }

    fn c4() -> FiniteGroup {
        let gens = vec![Perm::parse_cycles("(0 1 2 3)", 4).unwrap()];
        FiniteGroup::generate(4, gens, DEFAULT_SIZE_LIMIT).unwrap()
    }

    fn q8() -> FiniteGroup {
        let gens = vec![
            Perm::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap(),
            Perm::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap(),
        ];
        FiniteGroup::generate(8, gens, DEFAULT_SIZE_LIMIT).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::generate(1, vec![], DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
        assert_eq!(g.class_count(), 1);
        assert_eq!(g.cyclic_classes().len(), 1);
    }

    #[test]
    fn s3_closure_and_exponent() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn c4_closure() {
        let g = c4();
        assert_eq!(g.order(), 4);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn size_limit_enforced() {
        let gens = vec![
            Perm::parse_cycles("(0 1)", 4).unwrap(),
            Perm::parse_cycles("(0 1 2 3)", 4).unwrap(),
        ];
        let err = FiniteGroup::generate(4, gens, 10).unwrap_err();
        assert!(matches!(err, Error::SizeLimitExceeded { limit: 10 }));
    }

    #[test]
    fn s3_class_structure() {
        let g = s3();
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let orders: Vec<u64> = g.classes().iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 2, 3]);
        for c in g.classes() {
            assert_eq!(c.members.len() as u64 * c.centralizer_size, g.order());
        }
    }

    #[test]
    fn q8_class_structure() {
        let g = q8();
        assert_eq!(g.order(), 8);
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn power_map_basics() {
        let g = s3();
        for k in 0..g.class_count() {
            assert_eq!(g.power_map(k, 1), k);
            let ord = g.classes()[k].order as i64;
            assert_eq!(g.power_map(k, ord), 0, "g^order is the identity class");
        }
        // Squaring a 3-cycle stays in the 3-cycle class.
        assert_eq!(g.power_map(2, 2), 2);
    }

    #[test]
    fn power_map_is_well_defined() {
        for g in [s3(), c4(), q8()] {
            for class in g.classes() {
                for m in 0..class.order as i64 {
                    let expect = class.power_classes[m as usize];
                    for &x in &class.members {
                        assert_eq!(g.class_of(g.power(x, m)), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_classes_of_small_groups() {
        assert_eq!(c4().cyclic_classes().len(), 3);
        assert_eq!(s3().cyclic_classes().len(), 3);
        assert_eq!(q8().cyclic_classes().len(), 5);
        let orders: Vec<u64> = c4()
            .cyclic_classes()
            .iter()
            .map(|c| c.subgroup_order)
            .collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn class_and_eq_class_sizes_partition_the_group() {
        for g in [s3(), c4(), q8()] {
            let class_sum: usize = g.classes().iter().map(|c| c.members.len()).sum();
            assert_eq!(class_sum as u64, g.order());
            let eq_sum: u64 = g.cyclic_classes().iter().map(|c| c.eq_class_size).sum();
            assert_eq!(eq_sum, g.order());
        }
    }

    #[test]
    fn normalizer_indices() {
        let g = s3();
        // trivial subgroup: N = G
        assert_eq!(g.cyclic_classes()[0].normalizer_size, 6);
        assert_eq!(g.cyclic_classes()[0].normalizer_index(), 6);
        // <transposition>: self-normalizing of order 2
        assert_eq!(g.cyclic_classes()[1].normalizer_size, 2);
        assert_eq!(g.cyclic_classes()[1].normalizer_index(), 1);
        // <3-cycle>: normal, N = G, |N : H| = 2
        assert_eq!(g.cyclic_classes()[2].normalizer_size, 6);
        assert_eq!(g.cyclic_classes()[2].normalizer_index(), 2);

        // abelian group: everything normalizes
        let g = c4();
        for c in g.cyclic_classes() {
            assert_eq!(c.normalizer_size, g.order());
        }
    }

    #[test]
    fn fusion_blocks_are_closed_under_coprime_powers() {
        for g in [s3(), c4(), q8()] {
            for cc in g.cyclic_classes() {
                for &k in &cc.fused_conj_classes {
                    let ord = g.classes()[k].order;
                    for m in 1..=ord {
                        if gcd_u64(m, ord) == 1 {
                            assert!(cc.fused_conj_classes.contains(&g.power_map(k, m as i64)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_subgroup_helpers() {
        let g = s3();
        let three_cycle = g
            .elements()
            .iter()
            .position(|p| p.order() == 3)
            .unwrap();
        let h = g.cyclic_subgroup(three_cycle);
        assert_eq!(h.elements.len(), 3);
        let rebuilt = g.cyclic_subgroup_from_elements(&h.elements).unwrap();
        assert_eq!(rebuilt.elements, h.elements);
        // The whole of S3 is not cyclic.
        let all: Vec<usize> = (0..6).collect();
        assert!(matches!(
            g.cyclic_subgroup_from_elements(&all),
            Err(Error::NotCyclic)
        ));
    }

    #[test]
    fn all_cyclic_subgroups_of_s3() {
        let g = s3();
        // 1 trivial + 3 transposition subgroups + 1 three-cycle subgroup
        assert_eq!(g.all_cyclic_subgroups().len(), 5);
    }

    #[test]
    fn subgroup_conjugacy() {
        let g = s3();
        let transpositions: Vec<usize> = g
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.order() == 2)
            .map(|(i, _)| i)
            .collect();
        let a = g.cyclic_subgroup(transpositions[0]);
        let b = g.cyclic_subgroup(transpositions[1]);
        assert!(g.subgroups_conjugate(&a, &b));
        let c = g.cyclic_subgroup(0);
        assert!(!g.subgroups_conjugate(&a, &c));
    }
}
