//! Named example algebras with their subalgebra data.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

use super::construct::{double_extension, from_cubic, Cubic};
use super::{LieAlgebra, QuadraticLieAlgebra};

/// Index data for a splitting `𝔤 = 𝔨 ⊕ 𝔭`, optionally refined to
/// `𝔫_- ⊕ 𝔨 ⊕ 𝔫_+`. Indices refer to the basis after `basis_change`
/// (rows of the matrix are the new basis vectors).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubalgebraDecomposition {
    pub k: Vec<usize>,
    pub n_minus: Vec<usize>,
    pub n_plus: Vec<usize>,
    pub basis_change: Option<Matrix>,
}

impl SubalgebraDecomposition {
    pub fn new(k: &[usize], n_minus: &[usize], n_plus: &[usize]) -> Self {
        SubalgebraDecomposition {
            k: k.to_vec(),
            n_minus: n_minus.to_vec(),
            n_plus: n_plus.to_vec(),
            basis_change: None,
        }
    }

    /// Indices not in `𝔨`, ascending.
    pub fn p(&self, dim: usize) -> Vec<usize> {
        (0..dim).filter(|i| !self.k.contains(i)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: QuadraticLieAlgebra,
    /// Quadratic, triangular or symmetric splitting, depending on the entry.
    pub decomposition: Option<SubalgebraDecomposition>,
    /// Isotropic subalgebra with a co-isotropic complement.
    pub isotropic: Option<SubalgebraDecomposition>,
}

fn hyperbolic(n: usize) -> Matrix {
    let mut b = Matrix::zeros(n, n);
    for i in 0..n / 2 {
        b[(2 * i, 2 * i + 1)] = Scalar::one();
        b[(2 * i + 1, 2 * i)] = Scalar::one();
    }
    if n % 2 == 1 {
        b[(n - 1, n - 1)] = Scalar::one();
    }
    b
}

/// Abelian algebra with hyperbolic pairs `B(e_{2i}, e_{2i+1}) = 1`.
pub fn abelian(n: usize) -> QuadraticLieAlgebra {
    QuadraticLieAlgebra::new(format!("abelian{n}"), LieAlgebra::abelian(n), hyperbolic(n))
}

/// Basis `(e, h, f)` with the trace form of the defining representation.
pub fn sl2() -> QuadraticLieAlgebra {
    let lie = LieAlgebra::from_ints(3, &[(1, 0, 0, 2), (1, 2, 2, -2), (0, 2, 1, 1)]);
    let form = Matrix::from_ints(&[&[0, 0, 1], &[0, 2, 0], &[1, 0, 0]]);
    QuadraticLieAlgebra::new("sl2", lie, form)
}

/// Oscillator algebra in the basis `(e1, e2, c, r)`: `[e1,e2] = c`,
/// `[r,e1] = e1`, `[r,e2] = -e2`, `B(e1,e2) = B(c,r) = 1`.
///
/// This is the split rational form of the rotation model: the eigenvectors
/// of the rotation span the isotropic lines `e1`, `e2`.
pub fn oscillator() -> QuadraticLieAlgebra {
    let lie = LieAlgebra::from_ints(4, &[(0, 1, 2, 1), (3, 0, 0, 1), (3, 1, 1, -1)]);
    let form = Matrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    QuadraticLieAlgebra::new("heis1", lie, form)
}

/// Two-dimensional nonabelian algebra `[x, y] = y`.
pub fn affine_line() -> LieAlgebra {
    LieAlgebra::from_ints(2, &[(0, 1, 1, 1)])
}

/// Strictly upper triangular 3×3 matrices, basis `(E12, E13, E23)`.
pub fn upper_triangular3() -> LieAlgebra {
    LieAlgebra::from_ints(3, &[(0, 2, 1, 1)])
}

fn symmetric_split(m: usize) -> SubalgebraDecomposition {
    SubalgebraDecomposition::new(&(0..m).collect::<Vec<_>>(), &[], &[])
}

pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let entry = |name: &str, algebra: QuadraticLieAlgebra| CatalogEntry {
        name: name.to_string(),
        algebra: algebra.with_name(name),
        decomposition: None,
        isotropic: None,
    };

    let mut e = entry("abelian2", abelian(2));
    e.decomposition = Some(SubalgebraDecomposition::new(&[], &[0], &[1]));
    out.push(e);
    out.push(entry("abelian4", abelian(4)));

    let mut e = entry("sl2", sl2());
    e.decomposition = Some(SubalgebraDecomposition::new(&[1], &[2], &[0]));
    out.push(e);

    let s = sl2();
    let killing = s.killing_form();
    let mut e = entry("sl2-killing", QuadraticLieAlgebra::new("sl2-killing", s.lie().clone(), killing));
    e.decomposition = Some(SubalgebraDecomposition::new(&[1], &[2], &[0]));
    out.push(e);

    let mut e = entry("heis1", oscillator());
    e.decomposition = Some(SubalgebraDecomposition::new(&[2, 3], &[1], &[0]));
    e.isotropic = Some(SubalgebraDecomposition::new(&[2], &[], &[]));
    out.push(e);

    let s = sl2();
    let adh = s.lie().ad_basis(1);
    let d = double_extension(&s, &LieAlgebra::abelian(1), &[adh]).expect("ad_h is an orthogonal derivation");
    out.push(entry("dext-sl2", d));

    let g = from_cubic(&affine_line(), &Cubic::zero(2), "aff-semidirect").expect("zero cubic");
    let mut e = entry("aff-semidirect", g);
    e.decomposition = Some(symmetric_split(2));
    e.isotropic = Some(symmetric_split(2));
    out.push(e);

    let c = Cubic::from_entries(3, &[(0, 1, 2, Scalar::one())]).expect("distinct indices");
    let g = from_cubic(&upper_triangular3(), &c, "cubic-n3").expect("top form of a nilpotent algebra is invariant");
    let mut e = entry("cubic-n3", g);
    e.decomposition = Some(symmetric_split(3));
    e.isotropic = Some(symmetric_split(3));
    out.push(e);

    let g = from_cubic(sl2().lie(), &Cubic::zero(3), "sl2-semidirect").expect("zero cubic");
    let mut e = entry("sl2-semidirect", g);
    e.decomposition = Some(symmetric_split(3));
    out.push(e);

    for (name, sign) in [("sl2-cubic-plus", 1), ("sl2-cubic-minus", -1)] {
        let c = Cubic::from_form(&sl2(), sign).expect("nondegenerate");
        let g = from_cubic(sl2().lie(), &c, name).expect("invariant cubic");
        let mut e = entry(name, g);
        e.decomposition = Some(symmetric_split(3));
        out.push(e);
    }
    out
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates() {
        for e in catalog() {
            for c in e.algebra.validate() {
                assert!(c.passed(), "{}: {} {:?}", e.name, c.name, c.witness);
            }
        }
    }

    #[test]
    fn oscillator_is_a_double_extension() {
        let a = abelian(2);
        let boost = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
        let d = double_extension(&a, &LieAlgebra::abelian(1), &[boost]).unwrap();
        // double extension basis (r, e1, e2, c) -> (e1, e2, c, r)
        let p = d.permute(&[1, 2, 3, 0]).unwrap();
        let o = oscillator();
        assert_eq!(p.lie(), o.lie());
        assert_eq!(p.form(), o.form());
    }

    #[test]
    fn cubic_examples_are_anti_invariant_under_the_involution() {
        for name in ["cubic-n3", "aff-semidirect", "sl2-semidirect", "sl2-cubic-plus", "sl2-cubic-minus"] {
            let e = catalog_entry(name).unwrap();
            let g = &e.algebra;
            let m = g.dim() / 2;
            let eps = Matrix::from_fn(g.dim(), g.dim(), |i, j| {
                if i != j {
                    Scalar::zero()
                } else if i < m {
                    Scalar::one()
                } else {
                    Scalar::from_int(-1)
                }
            });
            let pulled = &(&eps * g.form()) * &eps;
            assert_eq!(pulled, -g.form(), "{name}");
        }
    }
}
