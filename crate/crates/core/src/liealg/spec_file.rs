//! JSON input format for user-supplied algebras.
//!
//! ```json
//! { "name": "sl2", "dim": 3,
//!   "bracket": [[1, 0, 0, "2"], [1, 2, 2, "-2"], [0, 2, 1, "1"]],
//!   "bilinear": [[0, 2, "1"], [1, 1, "2"]],
//!   "decomposition": { "k": [1], "n_minus": [2], "n_plus": [0] } }
//! ```
//!
//! Bracket entries get antisymmetric completion and bilinear entries get
//! symmetric completion unless the transposed entry is listed. When a
//! `basis_change` is given, the algebra is rewritten in the new basis
//! (row `i` is the new `f_i`) and the decomposition indices refer to it.

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

use super::catalog::{CatalogEntry, SubalgebraDecomposition};
use super::{LieAlgebra, QuadraticLieAlgebra};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub bracket: Vec<Vec<Value>>,
    #[serde(default)]
    pub bilinear: Vec<Vec<Value>>,
    #[serde(default)]
    pub decomposition: Option<DecompositionSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionSpec {
    #[serde(default)]
    pub k: Vec<usize>,
    #[serde(default)]
    pub n_minus: Vec<usize>,
    #[serde(default)]
    pub n_plus: Vec<usize>,
    #[serde(default)]
    pub basis_change: Option<Vec<Vec<Value>>>,
}

fn rational(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => s.trim().parse(),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or_else(|| Error::Parse(format!("non-integer number {n}; write rationals as \"p/q\""))),
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

fn index(v: &Value, dim: usize) -> Result<usize> {
    let i = v.as_u64().ok_or_else(|| Error::Parse(format!("expected an index, got {v}")))? as usize;
    if i >= dim {
        return Err(Error::Parse(format!("index {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

fn check_indices(what: &str, idx: &[usize], dim: usize) -> Result<()> {
    let mut seen = vec![false; dim];
    for &i in idx {
        if i >= dim {
            return Err(Error::Parse(format!("{what}: index {i} out of range")));
        }
        if seen[i] {
            return Err(Error::Parse(format!("{what}: index {i} repeated")));
        }
        seen[i] = true;
    }
    Ok(())
}

impl LieSpec {
    pub fn build(&self) -> Result<CatalogEntry> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse("dim must be positive".into()));
        }
        let mut entries = Vec::with_capacity(self.bracket.len());
        for e in &self.bracket {
            if e.len() != 4 {
                return Err(Error::Parse(format!("bracket entry needs [a, b, k, value], got {e:?}")));
            }
            entries.push((index(&e[0], n)?, index(&e[1], n)?, index(&e[2], n)?, rational(&e[3])?));
        }
        let lie = LieAlgebra::from_entries(n, &entries)?;

        let mut form = Matrix::zeros(n, n);
        let mut listed = std::collections::HashSet::new();
        let mut parsed = Vec::with_capacity(self.bilinear.len());
        for e in &self.bilinear {
            if e.len() != 3 {
                return Err(Error::Parse(format!("bilinear entry needs [a, b, value], got {e:?}")));
            }
            let (a, b, v) = (index(&e[0], n)?, index(&e[1], n)?, rational(&e[2])?);
            listed.insert((a, b));
            parsed.push((a, b, v));
        }
        for (a, b, v) in parsed {
            if !listed.contains(&(b, a)) {
                form[(b, a)] = v.clone();
            }
            form[(a, b)] = v;
        }

        let name = self.name.clone().unwrap_or_else(|| "input".into());
        let mut algebra = QuadraticLieAlgebra::new(name.clone(), lie, form);
        let decomposition = match &self.decomposition {
            None => None,
            Some(d) => {
                let basis_change = match &d.basis_change {
                    None => None,
                    Some(rows) => {
                        let rows = rows
                            .iter()
                            .map(|r| r.iter().map(rational).collect::<Result<Vec<_>>>())
                            .collect::<Result<Vec<_>>>()?;
                        let t = Matrix::from_rows(rows)?;
                        if t.rows() != n || t.cols() != n {
                            return Err(Error::Parse(format!("basis_change must be {n}x{n}")));
                        }
                        algebra =
                            algebra.change_basis(&t).map_err(|_| Error::Parse("basis_change is singular".into()))?;
                        Some(t)
                    }
                };
                check_indices("k", &d.k, n)?;
                check_indices("n_minus", &d.n_minus, n)?;
                check_indices("n_plus", &d.n_plus, n)?;
                Some(SubalgebraDecomposition {
                    k: d.k.clone(),
                    n_minus: d.n_minus.clone(),
                    n_plus: d.n_plus.clone(),
                    basis_change,
                })
            }
        };
        Ok(CatalogEntry { name, algebra, decomposition, isotropic: None })
    }
}

/// Parses and builds an algebra from JSON text. Structural validity is
/// not checked here.
pub fn parse_spec(text: &str) -> Result<CatalogEntry> {
    let spec: LieSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    spec.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = r#"{ "name": "sl2", "dim": 3,
        "bracket": [[1, 0, 0, "2"], [1, 2, 2, "-2"], [0, 2, 1, "1"]],
        "bilinear": [[0, 2, "1"], [1, 1, "2"]],
        "decomposition": { "k": [1], "n_minus": [2], "n_plus": [0] } }"#;

    #[test]
    fn matches_catalog_sl2() {
        let e = parse_spec(SL2).unwrap();
        let c = super::super::catalog_entry("sl2").unwrap();
        assert_eq!(e.algebra.lie(), c.algebra.lie());
        assert_eq!(e.algebra.form(), c.algebra.form());
        assert_eq!(e.decomposition, c.decomposition);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_spec("{").is_err());
        assert!(parse_spec(r#"{"dim": 2, "bracket": [[0, 5, 1, "1"]]}"#).is_err());
        assert!(parse_spec(r#"{"dim": 2, "bilinear": [[0, 1, "x"]]}"#).is_err());
        assert!(parse_spec(r#"{"dim": 2, "extra": 1}"#).is_err());
        assert!(parse_spec(r#"{"dim": 2, "decomposition": {"k": [0, 0]}}"#).is_err());
    }

    #[test]
    fn basis_change_is_applied() {
        // swap e and f in sl2
        let text = SL2.replace(
            r#""n_plus": [0] }"#,
            r#""n_plus": [0], "basis_change": [["0","0","1"],["0","1","0"],["1","0","0"]] }"#,
        );
        let e = parse_spec(&text).unwrap();
        assert!(e.algebra.is_quadratic());
        // new e_0 is the old f, so [h, e_0] = -2 e_0
        assert_eq!(e.algebra.lie().structure(1, 0, 0), &Scalar::from_int(-2));
    }
}
