//! Rational linear algebra over class functions: the dimension of the
//! span of the rational-valued characters, decompositions of rational
//! characters over induced principal characters with the integrality audit,
//! and the spanning/basis and coverage equivalences for lists of cyclic
//! subgroups.

use crate::chartab::CharacterTable;
use crate::classfn::{characteristic_function, induce_principal, ClassFunction};
use crate::error::{Error, Result};
use crate::galois::{character_orbits, GaloisOrbit};
use crate::group::{CyclicSubgroup, FiniteGroup};
use crate::matrix::{solve, RationalMatrix};
use crate::rational::{rat_from_big, rational_to_json, Rational};
use num::BigInt;
use serde_json::{json, Value};
use std::sync::Arc;

/// One term of a decomposition over induced principal characters.
#[derive(Clone, Debug)]
pub struct ArtinTerm {
    pub cyclic_class: usize,
    /// Coefficient of the induced character in the solution.
    pub coefficient: Rational,
    /// numerator a_H = c_H * |N(H):H|; integral for rational characters.
    pub numerator: Rational,
    pub normalizer_index: u64,
}

#[derive(Clone, Debug)]
pub struct ArtinDecomposition {
    pub terms: Vec<ArtinTerm>,
    /// True when every a_H is an integer.
    pub all_integral: bool,
    /// True when the terms re-evaluate to the target exactly; always checked.
    pub reconstructed: bool,
}

impl ArtinDecomposition {
    pub fn to_json(&self, target: Value) -> Value {
        json!({
            "target": target,
            "terms": self.terms.iter().map(|t| json!({
                "cyclic_class": t.cyclic_class,
                "c": rational_to_json(&t.coefficient),
                "a": t.numerator.to_integer().to_string(),
                "normalizer_index": t.normalizer_index,
            })).collect::<Vec<_>>(),
            "integral": self.all_integral,
            "reconstructed": self.reconstructed,
        })
    }
}

fn rational_vector(f: &ClassFunction) -> Result<Vec<Rational>> {
    f.rational_values().ok_or(Error::NotRational)
}

/// Matrix whose columns are the given class functions (all rational-valued),
/// one row per conjugacy class.
fn column_matrix(columns: &[ClassFunction]) -> RationalMatrix {
    let r = columns
        .first()
        .map_or(0, |f| f.group().class_count());
    let mut m = RationalMatrix::zero(r, columns.len());
    for (j, f) in columns.iter().enumerate() {
        let vals = f
            .rational_values()
            .expect("induced principal characters are rational");
        for (i, v) in vals.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

/// Rank over Q of the span of the rational-valued characters, computed from
/// the orbit rationalizations (which span the same subspace).
pub fn rational_span_dimension(table: &CharacterTable) -> usize {
    let orbits = character_orbits(table);
    rational_span_dimension_from_orbits(&orbits)
}

pub fn rational_span_dimension_from_orbits(orbits: &[GaloisOrbit]) -> usize {
    let rows: Vec<Vec<Rational>> = orbits
        .iter()
        .map(|o| {
            o.rationalization
                .rational_values()
                .expect("rationalizations are rational-valued")
        })
        .collect();
    RationalMatrix::from_rows(rows).rank()
}

/// Solve target = sum_H c_H (1_H)^G over the canonical cyclic-class
/// representatives and audit integrality of a_H = c_H |N(H):H|.
pub fn artin_decompose(
    group: &Arc<FiniteGroup>,
    target: &ClassFunction,
) -> Result<ArtinDecomposition> {
    let rhs = rational_vector(target)?;
    let columns: Vec<ClassFunction> = (0..group.cyclic_classes().len())
        .map(|i| crate::classfn::induce_principal_from_class(group, i))
        .collect();
    let matrix = column_matrix(&columns);
    let coeffs = solve(&matrix, &rhs).ok_or(Error::OutsideSpan)?;

    let mut terms = Vec::new();
    let mut all_integral = true;
    for (i, c) in coeffs.iter().enumerate() {
        let idx = group.cyclic_classes()[i].normalizer_index();
        let numerator = c * rat_from_big(BigInt::from(idx));
        if !numerator.is_integer() {
            all_integral = false;
        }
        terms.push(ArtinTerm {
            cyclic_class: i,
            coefficient: c.clone(),
            numerator,
            normalizer_index: idx,
        });
    }

    // Exact reconstruction check.
    let mut recon = ClassFunction::zero(Arc::clone(group));
    for (i, c) in coeffs.iter().enumerate() {
        recon = recon.add(&columns[i].scale_rat(c)).expect("same group");
    }
    let reconstructed = &recon == target;
    assert!(
        reconstructed,
        "solver output must re-evaluate to the target exactly"
    );

    Ok(ArtinDecomposition {
        terms,
        all_integral,
        reconstructed,
    })
}

/// Verdict for a list of cyclic subgroups against the spanning/basis
/// criteria. `span_iff_coverage` and `basis_iff_exact_cover` restate the
/// equivalences this toolkit checks; they must always be true.
#[derive(Clone, Debug)]
pub struct BasisVerdict {
    /// How many of the inputs fall in each cyclic class.
    pub coverage_counts: Vec<usize>,
    pub covers_all_classes: bool,
    /// Exactly one input per cyclic class.
    pub exact_cover: bool,
    pub induced_rank: usize,
    pub span_dimension: usize,
    pub input_count: usize,
    pub spans: bool,
    pub basis: bool,
    pub span_iff_coverage: bool,
    pub basis_iff_exact_cover: bool,
}

impl BasisVerdict {
    pub fn holds(&self) -> bool {
        self.span_iff_coverage && self.basis_iff_exact_cover
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coverage_counts": self.coverage_counts,
            "covers_all_classes": self.covers_all_classes,
            "exact_cover": self.exact_cover,
            "induced_rank": self.induced_rank,
            "span_dimension": self.span_dimension,
            "input_count": self.input_count,
            "spans": self.spans,
            "basis": self.basis,
            "span_iff_coverage": self.span_iff_coverage,
            "basis_iff_exact_cover": self.basis_iff_exact_cover,
        })
    }
}

/// Evaluate the spanning and basis criteria for an arbitrary list of cyclic
/// subgroups.
pub fn verify_basis_criterion(
    group: &Arc<FiniteGroup>,
    table: &CharacterTable,
    subgroups: &[CyclicSubgroup],
) -> Result<BasisVerdict> {
    let m = group.cyclic_classes().len();
    let mut coverage_counts = vec![0usize; m];
    for h in subgroups {
        // guards against hand-built element sets that are not cyclic
        let checked = group.cyclic_subgroup_from_elements(&h.elements)?;
        coverage_counts[group.cyclic_class_of_subgroup(&checked)] += 1;
    }
    let covers_all_classes = coverage_counts.iter().all(|&c| c > 0);
    let exact_cover = coverage_counts.iter().all(|&c| c == 1);

    let induced: Vec<ClassFunction> = subgroups
        .iter()
        .map(|h| induce_principal(group, h))
        .collect();
    let induced_rank = if induced.is_empty() {
        0
    } else {
        column_matrix(&induced).rank()
    };
    let span_dimension = rational_span_dimension(table);

    let spans = induced_rank == span_dimension;
    let basis = spans && subgroups.len() == m && induced_rank == subgroups.len();

    Ok(BasisVerdict {
        covers_all_classes,
        exact_cover,
        induced_rank,
        span_dimension,
        input_count: subgroups.len(),
        spans,
        basis,
        span_iff_coverage: spans == covers_all_classes,
        basis_iff_exact_cover: basis == exact_cover,
        coverage_counts,
    })
}

/// Both sides of the coverage <=> expressibility equivalence, evaluated
/// independently: coverage by direct subgroup-conjugacy tests, and
/// expressibility by solving for every orbit rationalization over the
/// induced characters of the inputs.
#[derive(Clone, Debug)]
pub struct RestatementVerdict {
    pub coverage: bool,
    pub all_expressible: bool,
    pub inexpressible_orbits: Vec<usize>,
    pub equivalent: bool,
}

impl RestatementVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "coverage": self.coverage,
            "all_expressible": self.all_expressible,
            "inexpressible_orbits": self.inexpressible_orbits,
            "equivalent": self.equivalent,
        })
    }
}

pub fn verify_restatement(
    group: &Arc<FiniteGroup>,
    table: &CharacterTable,
    subgroups: &[CyclicSubgroup],
) -> Result<RestatementVerdict> {
    for h in subgroups {
        group.cyclic_subgroup_from_elements(&h.elements)?;
    }

    // Coverage: every cyclic class has a representative conjugate to one of
    // the inputs, tested by explicit conjugation over all of G.
    let coverage = (0..group.cyclic_classes().len()).all(|i| {
        let rep = group.cyclic_class_subgroup(i);
        subgroups
            .iter()
            .any(|h| group.subgroups_conjugate(h, &rep))
    });

    let induced: Vec<ClassFunction> = subgroups
        .iter()
        .map(|h| induce_principal(group, h))
        .collect();
    let matrix = column_matrix(&induced);
    let orbits = character_orbits(table);
    let mut inexpressible = Vec::new();
    for (i, orbit) in orbits.iter().enumerate() {
        let rhs = orbit
            .rationalization
            .rational_values()
            .expect("rationalizations are rational");
        let solvable = if subgroups.is_empty() {
            rhs.iter().all(|v| v == &Rational::from_integer(BigInt::from(0)))
        } else {
            solve(&matrix, &rhs).is_some()
        };
        if !solvable {
            inexpressible.push(i);
        }
    }
    let all_expressible = inexpressible.is_empty();

    Ok(RestatementVerdict {
        coverage,
        all_expressible,
        inexpressible_orbits: inexpressible,
        equivalent: coverage == all_expressible,
    })
}

/// Membership of the scaled characteristic functions |N(H_i)| Phi_i in the
/// rational span of the induced principal characters, plus independence of
/// the scaled set.
#[derive(Clone, Debug)]
pub struct PhiMembershipVerdict {
    pub all_expressible: bool,
    pub failed_classes: Vec<usize>,
    pub independent: bool,
    pub size_matches_cyclic_classes: bool,
}

impl PhiMembershipVerdict {
    pub fn holds(&self) -> bool {
        self.all_expressible && self.independent && self.size_matches_cyclic_classes
    }

    pub fn to_json(&self) -> Value {
        json!({
            "all_expressible": self.all_expressible,
            "failed_classes": self.failed_classes,
            "independent": self.independent,
            "size_matches_cyclic_classes": self.size_matches_cyclic_classes,
        })
    }
}

pub fn verify_phi_membership(group: &Arc<FiniteGroup>) -> PhiMembershipVerdict {
    let m = group.cyclic_classes().len();
    let columns: Vec<ClassFunction> = (0..m)
        .map(|i| crate::classfn::induce_principal_from_class(group, i))
        .collect();
    let matrix = column_matrix(&columns);

    let scaled: Vec<ClassFunction> = (0..m)
        .map(|i| {
            let size = group.cyclic_classes()[i].normalizer_size;
            characteristic_function(group, i).scale_rat(&rat_from_big(BigInt::from(size)))
        })
        .collect();

    let mut failed = Vec::new();
    for (i, phi) in scaled.iter().enumerate() {
        let rhs = phi.rational_values().expect("characteristic functions are rational");
        if solve(&matrix, &rhs).is_none() {
            failed.push(i);
        }
    }

    let rows: Vec<Vec<Rational>> = scaled
        .iter()
        .map(|f| f.rational_values().unwrap())
        .collect();
    let rank = RationalMatrix::from_rows(rows).rank();

    PhiMembershipVerdict {
        all_expressible: failed.is_empty(),
        failed_classes: failed,
        independent: rank == m,
        size_matches_cyclic_classes: scaled.len() == m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupSpec;
    use crate::rational::{rat, rat_int};

    fn setup(spec: &str) -> (Arc<FiniteGroup>, CharacterTable) {
        let g = Arc::new(GroupSpec::parse(spec).unwrap().build().unwrap());
        let t = CharacterTable::compute(&g);
        (g, t)
    }

    #[test]
    fn span_dimension_examples() {
        let (_, t) = setup("cyclic(1)");
        assert_eq!(rational_span_dimension(&t), 1);
        let (g, t) = setup("cyclic(4)");
        assert_eq!(rational_span_dimension(&t), 3);
        assert_eq!(g.cyclic_classes().len(), 3);
        let (g, t) = setup("quaternion8");
        assert_eq!(rational_span_dimension(&t), 5);
        assert_eq!(g.cyclic_classes().len(), 5);
    }

    #[test]
    fn decompose_trivial_character_of_cyclic_group() {
        let (g, _) = setup("cyclic(6)");
        let dec = artin_decompose(&g, &ClassFunction::trivial(Arc::clone(&g))).unwrap();
        assert!(dec.all_integral && dec.reconstructed);
        // (1_{C6})^{C6} = 1_G: the whole-group column alone suffices, and the
        // solver zeroes the redundant columns.
        let last = dec.terms.last().unwrap();
        assert_eq!(last.coefficient, rat_int(1));
        assert_eq!(last.numerator, rat_int(1));
    }

    #[test]
    fn decompose_sign_character_of_c2() {
        let (g, t) = setup("cyclic(2)");
        let sign = t.row(1).clone();
        let dec = artin_decompose(&g, &sign).unwrap();
        assert!(dec.all_integral);
        let a: Vec<Rational> = dec.terms.iter().map(|t| t.numerator.clone()).collect();
        assert_eq!(a, vec![rat_int(2), rat_int(-1)]);
        let c: Vec<Rational> = dec.terms.iter().map(|t| t.coefficient.clone()).collect();
        assert_eq!(c, vec![rat_int(1), rat_int(-1)]);
    }

    #[test]
    fn decompose_degree_two_character_of_s3() {
        let (g, t) = setup("symmetric(3)");
        let chi = t.row(2).clone();
        assert_eq!(t.degrees()[2], 2);
        let dec = artin_decompose(&g, &chi).unwrap();
        assert!(dec.all_integral && dec.reconstructed);
        let c: Vec<Rational> = dec.terms.iter().map(|t| t.coefficient.clone()).collect();
        assert_eq!(c, vec![rat(1, 2), rat_int(0), rat(-1, 2)]);
        let a: Vec<Rational> = dec.terms.iter().map(|t| t.numerator.clone()).collect();
        assert_eq!(a, vec![rat_int(3), rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn decompose_rejects_irrational_target() {
        let (g, t) = setup("cyclic(4)");
        let row = (0..4).find(|&i| !t.row(i).is_rational()).unwrap();
        assert!(matches!(
            artin_decompose(&g, t.row(row)),
            Err(Error::NotRational)
        ));
    }

    #[test]
    fn decompose_rejects_target_outside_span() {
        let (g, _) = setup("cyclic(4)");
        // Every induced principal character of C4 takes equal values on the
        // classes of g and g^3, so this vector lies outside their span.
        let target = ClassFunction::from_rationals(
            Arc::clone(&g),
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
        );
        assert!(matches!(
            artin_decompose(&g, &target),
            Err(Error::OutsideSpan)
        ));
    }

    #[test]
    fn basis_criterion_on_canonical_representatives() {
        let (g, t) = setup("symmetric(3)");
        let reps: Vec<CyclicSubgroup> = (0..g.cyclic_classes().len())
            .map(|i| g.cyclic_class_subgroup(i))
            .collect();
        let verdict = verify_basis_criterion(&g, &t, &reps).unwrap();
        assert!(verdict.spans && verdict.basis && verdict.holds());
    }

    #[test]
    fn duplicated_conjugate_spans_but_is_not_a_basis() {
        let (g, t) = setup("symmetric(3)");
        let mut subgroups: Vec<CyclicSubgroup> = (0..g.cyclic_classes().len())
            .map(|i| g.cyclic_class_subgroup(i))
            .collect();
        // add a second, conjugate transposition subgroup
        let transpositions: Vec<usize> = (0..6).filter(|&x| g.element_order(x) == 2).collect();
        let extra = g.cyclic_subgroup(transpositions[1]);
        assert!(!subgroups.contains(&extra));
        subgroups.push(extra);
        let verdict = verify_basis_criterion(&g, &t, &subgroups).unwrap();
        assert!(verdict.spans && !verdict.basis && verdict.holds());
    }

    #[test]
    fn missing_class_neither_spans_nor_is_basis() {
        let (g, t) = setup("symmetric(3)");
        let reps: Vec<CyclicSubgroup> = (0..g.cyclic_classes().len() - 1)
            .map(|i| g.cyclic_class_subgroup(i))
            .collect();
        let verdict = verify_basis_criterion(&g, &t, &reps).unwrap();
        assert!(!verdict.spans && !verdict.basis && verdict.holds());
        assert!(verdict.induced_rank < verdict.span_dimension);
    }

    #[test]
    fn restatement_full_representatives() {
        let (g, t) = setup("symmetric(3)");
        let reps: Vec<CyclicSubgroup> = (0..g.cyclic_classes().len())
            .map(|i| g.cyclic_class_subgroup(i))
            .collect();
        let verdict = verify_restatement(&g, &t, &reps).unwrap();
        assert!(verdict.coverage && verdict.all_expressible && verdict.equivalent);
    }

    #[test]
    fn restatement_trivial_subgroup_only_on_c2() {
        let (g, t) = setup("cyclic(2)");
        let trivial_only = vec![g.cyclic_subgroup(0)];
        let verdict = verify_restatement(&g, &t, &trivial_only).unwrap();
        assert!(!verdict.coverage && !verdict.all_expressible && verdict.equivalent);
        // the sign character is the inexpressible one
        assert!(!verdict.inexpressible_orbits.is_empty());
    }

    #[test]
    fn restatement_trivial_group_any_list() {
        let (g, t) = setup("cyclic(1)");
        for list in [vec![], vec![g.cyclic_subgroup(0)]] {
            let verdict = verify_restatement(&g, &t, &list).unwrap();
            assert!(verdict.coverage && verdict.all_expressible && verdict.equivalent);
        }
    }

    #[test]
    fn non_cyclic_input_is_rejected() {
        let (g, t) = setup("symmetric(3)");
        let bogus = CyclicSubgroup {
            generator: 0,
            elements: (0..6).collect(),
        };
        assert!(matches!(
            verify_basis_criterion(&g, &t, &[bogus.clone()]),
            Err(Error::NotCyclic)
        ));
        assert!(matches!(
            verify_restatement(&g, &t, &[bogus]),
            Err(Error::NotCyclic)
        ));
    }

    #[test]
    fn phi_membership_examples() {
        for spec in ["cyclic(1)", "cyclic(2)", "symmetric(3)", "quaternion8"] {
            let (g, _) = setup(spec);
            let verdict = verify_phi_membership(&g);
            assert!(verdict.holds(), "{spec}: {verdict:?}");
        }
    }
}
