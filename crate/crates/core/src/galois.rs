//! The Galois action on irreducible characters and on conjugacy classes.
//!
//! The Galois group of Q(zeta_n)/Q for n the group exponent is enumerated
//! concretely as the residues m coprime to n, acting on a character by
//! precomposition with the power map (chi^sigma(g) = chi(g^m)) and on a
//! class by sending the class of g to the class of g^m. Twisting a character
//! by value-level field automorphisms must give the same row, and the
//! implementation checks the two routes against each other.

use crate::chartab::CharacterTable;
use crate::classfn::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::rational::{coprime_residues, gcd_u64};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::sync::Arc;

/// One orbit of the Galois action on table rows.
#[derive(Clone, Debug)]
pub struct GaloisOrbit {
    /// Sorted row indices closed under every twist.
    pub member_rows: Vec<usize>,
    /// Sum of the distinct members; always rational-valued.
    pub rationalization: ClassFunction,
}

/// Row index of chi_i twisted by sigma_m, computed by precomposing with the
/// power map and cross-checked against value-level twisting.
pub fn twist_character(table: &CharacterTable, row: usize, m: i64) -> Result<usize> {
    let group = table.group();
    let n = group.exponent();
    let mm = m.rem_euclid(n as i64) as u64;
    if gcd_u64(mm, n) != 1 && n > 1 {
        return Err(Error::TwistNotCoprime { m, n });
    }
    if row >= table.row_count() {
        return Err(Error::RowOutOfRange(row));
    }
    let chi = table.row(row);
    let twisted: Vec<Cyclotomic> = (0..group.class_count())
        .map(|k| chi.value(group.power_map(k, m)).clone())
        .collect();
    // chi(g^m) must equal the field automorphism applied to chi(g).
    for (k, value) in twisted.iter().enumerate() {
        let via_field = chi.value(k).galois_twist(m)?;
        assert_eq!(
            value, &via_field,
            "power-map and value twists disagree at class {k}"
        );
    }
    Ok(table
        .find_row(&twisted)
        .expect("the twist of an irreducible row is an irreducible row"))
}

/// Orbits of the full Galois action on table rows, in canonical order by
/// smallest member, each with its rationalization attached.
pub fn character_orbits(table: &CharacterTable) -> Vec<GaloisOrbit> {
    let n = table.group().exponent();
    let residues = coprime_residues(n);
    let mut seen = vec![false; table.row_count()];
    let mut orbits = Vec::new();
    for row in 0..table.row_count() {
        if seen[row] {
            continue;
        }
        let members: BTreeSet<usize> = residues
            .iter()
            .map(|&m| twist_character(table, row, m as i64).expect("coprime residue"))
            .collect();
        for &r in &members {
            seen[r] = true;
        }
        let member_rows: Vec<usize> = members.into_iter().collect();
        let mut sum = ClassFunction::zero(Arc::clone(table.group()));
        for &r in &member_rows {
            sum = sum.add(table.row(r)).expect("same group");
        }
        assert!(
            sum.is_rational(),
            "a sum over a full Galois orbit is rational-valued"
        );
        orbits.push(GaloisOrbit {
            member_rows,
            rationalization: sum,
        });
    }
    orbits
}

/// The rationalization of one row: the sum of its distinct Galois
/// conjugates.
pub fn rationalize(table: &CharacterTable, row: usize) -> Result<ClassFunction> {
    if row >= table.row_count() {
        return Err(Error::RowOutOfRange(row));
    }
    let orbits = character_orbits(table);
    let orbit = orbits
        .into_iter()
        .find(|o| o.member_rows.contains(&row))
        .expect("every row lies in an orbit");
    Ok(orbit.rationalization)
}

/// Orbits of conjugacy classes under all coprime power maps, canonical order
/// by smallest member. These must coincide with the cyclic-class fusion
/// blocks, which the verification suite asserts.
pub fn class_orbits(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let residues = coprime_residues(group.exponent());
    let mut seen = vec![false; group.class_count()];
    let mut orbits = Vec::new();
    for k in 0..group.class_count() {
        if seen[k] {
            continue;
        }
        let orbit: BTreeSet<usize> = residues
            .iter()
            .map(|&m| group.power_map(k, m as i64))
            .collect();
        for &c in &orbit {
            seen[c] = true;
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

/// JSON report: orbits, rationalizations, and the orbit-count comparison.
pub fn orbits_to_json(table: &CharacterTable, orbits: &[GaloisOrbit]) -> Value {
    let cyclic = table.group().cyclic_classes().len();
    json!({
        "orbits": orbits.iter().map(|o| o.member_rows.clone()).collect::<Vec<_>>(),
        "rationalizations": orbits
            .iter()
            .map(|o| o.rationalization.to_json())
            .collect::<Vec<_>>(),
        "orbit_count": orbits.len(),
        "cyclic_class_count": cyclic,
        "match": orbits.len() == cyclic,
    })
}
