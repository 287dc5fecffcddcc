//! Plain-text and JSON renderings of every report the tool emits.
//!
//! All output is deterministic: JSON objects serialize with sorted keys and
//! every list is in canonical order.

use crate::artin::artin_decompose;
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::galois::{character_orbits, orbits_to_json};
use crate::group::FiniteGroup;
use crate::rational::euler_phi;
use crate::verify::VerifyReport;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::sync::Arc;

pub fn wrap(group_desc: &str, command: &str, result: Value) -> Value {
    json!({
        "group": group_desc,
        "command": command,
        "result": result,
    })
}

fn class_to_json(group: &FiniteGroup, k: usize) -> Value {
    let c = &group.classes()[k];
    json!({
        "index": k,
        "size": c.members.len(),
        "order": c.order,
        "rep": group.perm(c.rep).to_string(),
        "centralizer_size": c.centralizer_size,
    })
}

pub fn classes_json(group: &FiniteGroup) -> Value {
    json!({
        "order": group.order(),
        "exponent": group.exponent(),
        "degree": group.degree(),
        "classes": (0..group.class_count())
            .map(|k| class_to_json(group, k))
            .collect::<Vec<_>>(),
    })
}

pub fn classes_text(group: &FiniteGroup) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group of order {}, exponent {}, degree {}",
        group.order(),
        group.exponent(),
        group.degree()
    );
    let _ = writeln!(out, "{} conjugacy classes:", group.class_count());
    for (k, c) in group.classes().iter().enumerate() {
        let _ = writeln!(
            out,
            "  class {k}: size {}, element order {}, rep {}, |centralizer| {}",
            c.members.len(),
            c.order,
            group.perm(c.rep),
            c.centralizer_size
        );
    }
    out
}

pub fn cyclic_classes_json(group: &FiniteGroup) -> Value {
    json!({
        "order": group.order(),
        "cyclic_classes": group.cyclic_classes().iter().enumerate().map(|(i, c)| json!({
            "index": i,
            "subgroup_order": c.subgroup_order,
            "normalizer_size": c.normalizer_size,
            "normalizer_index": c.normalizer_index(),
            "eq_class_size": c.eq_class_size,
            "fused_conj_classes": c.fused_conj_classes,
            "rep_generator": group.perm(c.rep_generator).to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn cyclic_classes_text(group: &FiniteGroup) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} conjugacy classes of cyclic subgroups:",
        group.cyclic_classes().len()
    );
    for (i, c) in group.cyclic_classes().iter().enumerate() {
        let index_in_g = group.order() / c.normalizer_size;
        let _ = writeln!(
            out,
            "  cyclic class {i}: |H| = {}, gen {}, |N(H)| = {}, |N(H):H| = {}, fused classes {:?}, |C_i| = {} = {}*{} = |G:N(H)|*phi(n)",
            c.subgroup_order,
            group.perm(c.rep_generator),
            c.normalizer_size,
            c.normalizer_index(),
            c.fused_conj_classes,
            c.eq_class_size,
            index_in_g,
            euler_phi(c.subgroup_order),
        );
    }
    out
}

pub fn table_json(table: &CharacterTable) -> Value {
    let group = table.group();
    json!({
        "degrees": table.degrees(),
        "dixon_prime": table.dixon_prime(),
        "classes": (0..group.class_count())
            .map(|k| class_to_json(group, k))
            .collect::<Vec<_>>(),
        "rows": table
            .rows()
            .iter()
            .map(|r| r.to_json())
            .collect::<Vec<_>>(),
    })
}

pub fn table_text(table: &CharacterTable) -> String {
    let group = table.group();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "character table: {} classes, |G| = {}, exponent {}, prime {}",
        group.class_count(),
        group.order(),
        group.exponent(),
        table.dixon_prime()
    );
    let _ = writeln!(
        out,
        "values in Q(z), z = exp(2*pi*i/{})",
        group.exponent()
    );

    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["".to_string()];
    for (k, c) in group.classes().iter().enumerate() {
        header.push(format!("{}[{}]", group.perm(c.rep), k));
    }
    cells.push(header);
    let mut sizes = vec!["size".to_string()];
    for c in group.classes() {
        sizes.push(c.members.len().to_string());
    }
    cells.push(sizes);
    for (i, row) in table.rows().iter().enumerate() {
        let mut line = vec![format!("X{}", i + 1)];
        for v in row.values() {
            line.push(v.to_string());
        }
        cells.push(line);
    }

    let cols = cells[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
        .collect();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{:>width$}", s, width = widths[j]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  "));
    }
    out
}

pub fn orbits_json(table: &CharacterTable) -> Value {
    let orbits = character_orbits(table);
    orbits_to_json(table, &orbits)
}

pub fn orbits_text(table: &CharacterTable) -> String {
    let orbits = character_orbits(table);
    let cyclic = table.group().cyclic_classes().len();
    let mut out = String::new();
    for (i, o) in orbits.iter().enumerate() {
        let vals = o
            .rationalization
            .values()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "  orbit {i}: rows {:?}, rationalization ({vals})",
            o.member_rows
        );
    }
    let verdict = if orbits.len() == cyclic { "MATCH" } else { "MISMATCH" };
    let _ = writeln!(out, "{} orbits / {} cyclic classes: {}", orbits.len(), cyclic, verdict);
    out
}

/// Decomposition report for one row index, or for every rational row and
/// rationalization when `row` is `None`.
pub fn artin_json(
    group: &Arc<FiniteGroup>,
    table: &CharacterTable,
    row: Option<usize>,
) -> Result<Value> {
    match row {
        Some(i) => {
            if i >= table.row_count() {
                return Err(Error::RowOutOfRange(i));
            }
            let target = table.row(i);
            let dec = artin_decompose(group, target)?;
            Ok(dec.to_json(json!({ "row": i })))
        }
        None => {
            let mut reports = Vec::new();
            for (i, r) in table.rows().iter().enumerate() {
                if r.is_rational() {
                    let dec = artin_decompose(group, r)?;
                    reports.push(dec.to_json(json!({ "row": i })));
                }
            }
            for (i, orbit) in character_orbits(table).iter().enumerate() {
                let dec = artin_decompose(group, &orbit.rationalization)?;
                reports.push(dec.to_json(json!({ "rationalization": i })));
            }
            Ok(Value::Array(reports))
        }
    }
}

pub fn artin_text(group: &Arc<FiniteGroup>, report: &Value) -> String {
    let mut out = String::new();
    let rows = match report {
        Value::Array(rs) => rs.clone(),
        single => vec![single.clone()],
    };
    for r in rows {
        let target = &r["target"];
        let label = if let Some(i) = target.get("row").and_then(Value::as_u64) {
            format!("row {i}")
        } else if let Some(i) = target.get("rationalization").and_then(Value::as_u64) {
            format!("rationalization {i}")
        } else {
            "target".to_string()
        };
        let _ = writeln!(
            out,
            "{label}: integral = {}, reconstructed = {}",
            r["integral"], r["reconstructed"]
        );
        for t in r["terms"].as_array().into_iter().flatten() {
            let i = t["cyclic_class"].as_u64().unwrap();
            let cc = &group.cyclic_classes()[i as usize];
            let c = t["c"].as_array().unwrap();
            let _ = writeln!(
                out,
                "  cyclic class {i} (|H| = {}): c = {}/{}, a = {}, |N(H):H| = {}",
                cc.subgroup_order,
                c[0].as_str().unwrap(),
                c[1].as_str().unwrap(),
                t["a"].as_str().unwrap(),
                t["normalizer_index"]
            );
        }
    }
    out
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{status}] {}: {}", c.name, c.details);
        if let Some(w) = &c.witness {
            let _ = writeln!(out, "       witness: {w}");
        }
    }
    let _ = writeln!(
        out,
        "overall: {}",
        if report.all_passed { "PASS" } else { "FAIL" }
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupSpec;

    fn setup(spec: &str) -> (Arc<FiniteGroup>, CharacterTable) {
        let g = Arc::new(GroupSpec::parse(spec).unwrap().build().unwrap());
        let t = CharacterTable::compute(&g);
        (g, t)
    }

    #[test]
    fn json_reports_round_trip() {
        let (g, t) = setup("symmetric(3)");
        for v in [
            classes_json(&g),
            cyclic_classes_json(&g),
            table_json(&t),
            orbits_json(&t),
            artin_json(&g, &t, None).unwrap(),
            crate::verify::run_verify(&g).to_json(),
        ] {
            let s = serde_json::to_string(&v).unwrap();
            let back: Value = serde_json::from_str(&s).unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn text_reports_are_nonempty_and_deterministic() {
        let (g, t) = setup("cyclic(4)");
        let a = table_text(&t);
        let b = table_text(&CharacterTable::compute(&g));
        assert_eq!(a, b);
        assert!(a.contains("X1"));
        assert!(classes_text(&g).contains("class 0"));
        assert!(cyclic_classes_text(&g).contains("cyclic class 0"));
        assert!(orbits_text(&t).contains("MATCH"));
    }

    #[test]
    fn artin_text_report_mentions_terms() {
        let (g, t) = setup("cyclic(2)");
        let v = artin_json(&g, &t, Some(1)).unwrap();
        let text = artin_text(&g, &v);
        assert!(text.contains("row 1"));
        assert!(text.contains("a = 2"));
        assert!(text.contains("a = -1"));
    }
}
