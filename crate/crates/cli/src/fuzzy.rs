//! Fuzzy-sphere report.

use qmirror_core::fuzzy::{check_commutators, fuzzy_coordinates};
use qmirror_core::FuzzyCoordinates;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::Display;

/// Matrices are printed in text mode up to this dimension.
const PRINT_LIMIT: usize = 6;

pub const K_NOTE: &str = "k = 2/sqrt(n^2-1) for standard spin generators [J_i, J_j] = i eps_ijk J_k; \
the alternative 1/sqrt(n^2-1) holds only for generators normalized as 2J";

pub struct FuzzyReport {
    pub coords: FuzzyCoordinates,
    pub commutator_deviation: f64,
    pub radius_deviation: f64,
    pub hermiticity_deviation: f64,
}

pub fn build(n: usize) -> Result<FuzzyReport, CliError> {
    let coords = fuzzy_coordinates(n)?;
    Ok(FuzzyReport {
        commutator_deviation: check_commutators(coords.irrep()),
        radius_deviation: coords.radius_deviation(),
        hermiticity_deviation: coords.irrep().hermiticity_deviation(),
        coords,
    })
}

pub fn to_json(r: &FuzzyReport) -> Value {
    let mut v = serde_json::to_value(&r.coords).expect("fuzzy coordinates serialize");
    v["k_alternative"] = json!(r.coords.k() / 2.0);
    v["commutator_deviation"] = json!(r.commutator_deviation);
    v["radius_deviation"] = json!(r.radius_deviation);
    v["hermiticity_deviation"] = json!(r.hermiticity_deviation);
    v["note"] = json!(K_NOTE);
    v
}

pub fn render(r: &FuzzyReport, d: &Display) -> String {
    let n = r.coords.dim();
    let mut out = format!(
        "n = {n} (spin {}), k = {}\n",
        r.coords.irrep().spin(),
        d.real(r.coords.k())
    );
    if n <= PRINT_LIMIT {
        for (i, (j, x)) in r.coords.irrep().generators().iter().zip(r.coords.coords()).enumerate() {
            out.push_str(&format!("J{}\n{}X{}\n{}", i + 1, d.matrix(j, 2), i + 1, d.matrix(x, 2)));
        }
    }
    out.push_str(&format!(
        "commutator deviation  {:e}\nradius deviation      {:e}\nhermiticity deviation {:e}\nnote: {K_NOTE}\n",
        r.commutator_deviation, r.radius_deviation, r.hermiticity_deviation
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_sphere() {
        let r = build(2).unwrap();
        let v = to_json(&r);
        let x3 = &v["X"][2];
        assert!((x3[0][0][0].as_f64().unwrap() - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!(render(&r, &Display { tol: 1e-12 }).contains("X3"));
    }

    #[test]
    fn bounds() {
        assert!(build(3).unwrap().radius_deviation < 1e-12);
        assert_eq!(build(1).err().unwrap().exit_code(), 2);
        assert_eq!(build(1025).err().unwrap().exit_code(), 2);
    }
}
