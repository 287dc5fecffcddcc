//! The full per-group verification suite.
//!
//! Each check recomputes its claim from first principles where a second
//! route exists (element counting against the normalizer-index formula,
//! coverage against solvability, orbit counts against cyclic-class counts)
//! and reports a machine-readable record; the run passes only if every
//! check passes.

use crate::artin::{
    artin_decompose, rational_span_dimension_from_orbits, verify_basis_criterion,
    verify_phi_membership, verify_restatement,
};
use crate::chartab::CharacterTable;
use crate::galois::{character_orbits, class_orbits};
use crate::group::{CyclicSubgroup, FiniteGroup};
use crate::rational::euler_phi;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    /// Smallest witnessing object on failure.
    pub witness: Option<Value>,
}

impl CheckResult {
    fn pass(name: &'static str, details: String) -> Self {
        CheckResult {
            name,
            passed: true,
            details,
            witness: None,
        }
    }

    fn fail(name: &'static str, details: String, witness: Value) -> Self {
        CheckResult {
            name,
            passed: false,
            details,
            witness: Some(witness),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "status": if self.passed { "PASS" } else { "FAIL" },
            "details": self.details,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "all_passed": self.all_passed,
        })
    }
}

/// Direct recomputation of both sides of the class-size identity
/// |C_i| = |G : N(H_i)| phi(n_i): the left side counts elements whose cyclic
/// subgroup is conjugate to the representative, the right side recomputes
/// the normalizer by whole-set conjugation.
fn check_class_size_identity(group: &Arc<FiniteGroup>) -> CheckResult {
    let name = "class_size_identity";
    for (i, cc) in group.cyclic_classes().iter().enumerate() {
        let rep = group.cyclic_class_subgroup(i);
        let lhs = (0..group.order() as usize)
            .filter(|&y| {
                group.element_order(y) == cc.subgroup_order
                    && group.subgroups_conjugate(&group.cyclic_subgroup(y), &rep)
            })
            .count() as u64;

        let rep_set: BTreeSet<usize> = rep.elements.iter().copied().collect();
        let normalizer = (0..group.order() as usize)
            .filter(|&g| {
                rep.elements
                    .iter()
                    .map(|&x| group.conjugate(g, x))
                    .collect::<BTreeSet<_>>()
                    == rep_set
            })
            .count() as u64;
        let rhs = (group.order() / normalizer) * euler_phi(cc.subgroup_order);

        if lhs != rhs || lhs != cc.eq_class_size {
            return CheckResult::fail(
                name,
                format!(
                    "cyclic class {i}: counted {lhs}, formula gives {rhs}, stored {}",
                    cc.eq_class_size
                ),
                json!({ "cyclic_class": i }),
            );
        }
    }
    CheckResult::pass(
        name,
        format!(
            "|C_i| = |G:N(H_i)| phi(n_i) for all {} cyclic classes",
            group.cyclic_classes().len()
        ),
    )
}

fn check_span_dimension(group: &Arc<FiniteGroup>, table: &CharacterTable) -> CheckResult {
    let name = "span_dimension";
    let orbits = character_orbits(table);
    let dim = rational_span_dimension_from_orbits(&orbits);
    let cyclic = group.cyclic_classes().len();
    if dim == cyclic {
        CheckResult::pass(name, format!("rational span dimension {dim} = cyclic classes {cyclic}"))
    } else {
        CheckResult::fail(
            name,
            format!("rational span dimension {dim} != cyclic classes {cyclic}"),
            json!({ "dimension": dim, "cyclic_classes": cyclic }),
        )
    }
}

fn check_artin_integrality(group: &Arc<FiniteGroup>, table: &CharacterTable) -> CheckResult {
    let name = "artin_integrality";
    let mut targets: Vec<(String, crate::classfn::ClassFunction)> = Vec::new();
    for (i, row) in table.rows().iter().enumerate() {
        if row.is_rational() {
            targets.push((format!("row {i}"), row.clone()));
        }
    }
    for (i, orbit) in character_orbits(table).iter().enumerate() {
        targets.push((format!("rationalization {i}"), orbit.rationalization.clone()));
    }
    let count = targets.len();
    for (label, target) in targets {
        match artin_decompose(group, &target) {
            Ok(dec) if dec.all_integral && dec.reconstructed => {}
            Ok(_) => {
                return CheckResult::fail(
                    name,
                    format!("{label}: non-integral numerator a_H"),
                    json!({ "target": label }),
                )
            }
            Err(e) => {
                return CheckResult::fail(
                    name,
                    format!("{label}: decomposition failed: {e}"),
                    json!({ "target": label }),
                )
            }
        }
    }
    CheckResult::pass(
        name,
        format!("{count} rational characters decompose with integer numerators"),
    )
}

fn canonical_representatives(group: &Arc<FiniteGroup>) -> Vec<CyclicSubgroup> {
    (0..group.cyclic_classes().len())
        .map(|i| group.cyclic_class_subgroup(i))
        .collect()
}

fn check_basis_criterion(group: &Arc<FiniteGroup>, table: &CharacterTable) -> CheckResult {
    let name = "basis_criterion";
    let reps = canonical_representatives(group);
    let full = match verify_basis_criterion(group, table, &reps) {
        Ok(v) => v,
        Err(e) => {
            return CheckResult::fail(name, format!("verdict failed: {e}"), json!({}));
        }
    };
    if !(full.spans && full.basis && full.holds()) {
        return CheckResult::fail(
            name,
            "canonical representatives must form a basis".into(),
            full.to_json(),
        );
    }
    // Dropping one class must lose both spanning and basis.
    if reps.len() > 1 {
        let partial = verify_basis_criterion(group, table, &reps[..reps.len() - 1])
            .expect("canonical representatives are cyclic");
        if partial.spans || partial.basis || !partial.holds() {
            return CheckResult::fail(
                name,
                "missing one class must break the spanning criterion".into(),
                partial.to_json(),
            );
        }
    }
    CheckResult::pass(
        name,
        format!(
            "representatives form a basis of the rational span (rank {})",
            full.induced_rank
        ),
    )
}

fn check_restatement(group: &Arc<FiniteGroup>, table: &CharacterTable) -> CheckResult {
    let name = "restatement";
    let reps = canonical_representatives(group);
    let full = verify_restatement(group, table, &reps).expect("representatives are cyclic");
    if !(full.coverage && full.all_expressible && full.equivalent) {
        return CheckResult::fail(
            name,
            "full representative set must satisfy both sides".into(),
            full.to_json(),
        );
    }
    if reps.len() > 1 {
        let partial = verify_restatement(group, table, &reps[..reps.len() - 1])
            .expect("representatives are cyclic");
        if partial.coverage || partial.all_expressible || !partial.equivalent {
            return CheckResult::fail(
                name,
                "dropping a class must break both sides together".into(),
                partial.to_json(),
            );
        }
    }
    CheckResult::pass(name, "coverage and expressibility agree on representative subsets".into())
}

fn check_phi_membership(group: &Arc<FiniteGroup>) -> CheckResult {
    let name = "phi_membership";
    let verdict = verify_phi_membership(group);
    if verdict.holds() {
        CheckResult::pass(
            name,
            "scaled characteristic functions lie in the induced span and are independent".into(),
        )
    } else {
        CheckResult::fail(name, "phi membership failed".into(), verdict.to_json())
    }
}

fn check_orbit_duality(group: &Arc<FiniteGroup>, table: &CharacterTable) -> CheckResult {
    let name = "orbit_duality";
    let orbits = character_orbits(table);
    let cyclic = group.cyclic_classes().len();
    if orbits.len() != cyclic {
        return CheckResult::fail(
            name,
            format!("{} character orbits != {} cyclic classes", orbits.len(), cyclic),
            json!({ "orbits": orbits.len(), "cyclic_classes": cyclic }),
        );
    }
    let class_blocks = class_orbits(group);
    let fusion: Vec<Vec<usize>> = group
        .cyclic_classes()
        .iter()
        .map(|c| c.fused_conj_classes.clone())
        .collect();
    if class_blocks != fusion {
        return CheckResult::fail(
            name,
            "class orbits differ from cyclic-class fusion blocks".into(),
            json!({ "class_orbits": class_blocks, "fusion_blocks": fusion }),
        );
    }
    CheckResult::pass(
        name,
        format!("{} orbits / {} cyclic classes: MATCH; class orbits = fusion blocks", orbits.len(), cyclic),
    )
}

fn check_table_sanity(group: &Arc<FiniteGroup>, table: &CharacterTable) -> CheckResult {
    let name = "table_sanity";
    let sum_sq: u64 = table.degrees().iter().map(|d| d * d).sum();
    if sum_sq != group.order() {
        return CheckResult::fail(
            name,
            format!("sum of degree squares {sum_sq} != |G| = {}", group.order()),
            json!({ "sum_of_squares": sum_sq }),
        );
    }
    if table.row_count() != group.class_count() {
        return CheckResult::fail(
            name,
            "row count differs from class count".into(),
            json!({ "rows": table.row_count(), "classes": group.class_count() }),
        );
    }
    let trivial = crate::classfn::ClassFunction::trivial(Arc::clone(group));
    if table.row(0) != &trivial {
        return CheckResult::fail(name, "first row is not the trivial character".into(), json!({}));
    }
    CheckResult::pass(
        name,
        format!("{} rows, degrees {:?}, sum of squares = |G|", table.row_count(), table.degrees()),
    )
}

/// Run every check against a group, computing the character table once.
pub fn run_verify(group: &Arc<FiniteGroup>) -> VerifyReport {
    let table = CharacterTable::compute(group);
    let checks = vec![
        check_table_sanity(group, &table),
        check_class_size_identity(group),
        check_span_dimension(group, &table),
        check_artin_integrality(group, &table),
        check_basis_criterion(group, &table),
        check_restatement(group, &table),
        check_phi_membership(group),
        check_orbit_duality(group, &table),
    ];
    let all_passed = checks.iter().all(|c| c.passed);
    VerifyReport { checks, all_passed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupSpec;

    fn verify(spec: &str) -> VerifyReport {
        let g = Arc::new(GroupSpec::parse(spec).unwrap().build().unwrap());
        run_verify(&g)
    }

    #[test]
    fn trivial_group_passes() {
        let report = verify("cyclic(1)");
        assert!(report.all_passed, "{report:?}");
    }

    #[test]
    fn small_catalog_groups_pass() {
        for spec in [
            "cyclic(4)",
            "symmetric(3)",
            "quaternion8",
            "dihedral(4)",
            "direct_product(cyclic(2), cyclic(4))",
        ] {
            let report = verify(spec);
            assert!(report.all_passed, "{spec}: {report:?}");
        }
    }

    #[test]
    fn report_json_shape() {
        let report = verify("cyclic(2)");
        let v = report.to_json();
        assert_eq!(v["all_passed"], serde_json::json!(true));
        assert!(v["checks"].as_array().unwrap().len() >= 8);
        for check in v["checks"].as_array().unwrap() {
            assert_eq!(check["status"], "PASS");
        }
    }
}
