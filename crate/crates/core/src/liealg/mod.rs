//! Lie algebras by structure constants, invariant forms, and the
//! constructions used to build quadratic examples.

mod catalog;
mod construct;
mod spec_file;

pub use catalog::{abelian, catalog, catalog_entry, oscillator, sl2, CatalogEntry, SubalgebraDecomposition};
pub use construct::{double_extension, from_cubic, Cubic};
pub use spec_file::{parse_spec, DecompositionSpec, LieSpec};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Check;
use crate::scalar::Scalar;
use crate::supercomm::{FreeSuperComm, ScMono};

/// Polynomial in coordinates, stored over the even generators of a
/// [`FreeSuperComm`].
pub type Poly = Element<ScMono>;

/// Structure constants `[e_a, e_b] = Σ_k c[a][b][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Scalar>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, c: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Builds from entries `(a, b, k, value)`; the entry for `(b, a)` is
    /// filled in antisymmetrically unless listed explicitly.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut l = Self::abelian(dim);
        let mut explicit = std::collections::HashSet::new();
        for (a, b, k, _) in entries {
            if *a >= dim || *b >= dim || *k >= dim {
                return Err(Error::Invalid(format!("bracket index out of range: [{a}, {b}, {k}]")));
            }
            explicit.insert((*a, *b, *k));
        }
        for (a, b, k, v) in entries {
            l.c[(a * dim + b) * dim + k] = v.clone();
            if !explicit.contains(&(*b, *a, *k)) {
                l.c[(b * dim + a) * dim + k] = -v;
            }
        }
        Ok(l)
    }

    pub fn from_ints(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let e: Vec<_> = entries.iter().map(|&(a, b, k, v)| (a, b, k, Scalar::from_int(v))).collect();
        Self::from_entries(dim, &e).expect("valid entries")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self, a: usize, b: usize, k: usize) -> &Scalar {
        &self.c[(a * self.dim + b) * self.dim + k]
    }

    /// Coordinates of `[e_a, e_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<Scalar> {
        let n = self.dim;
        self.c[(a * n + b) * n..(a * n + b + 1) * n].to_vec()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if y[b].is_zero() {
                    continue;
                }
                let s = &x[a] * &y[b];
                for k in 0..n {
                    let c = self.structure(a, b, k);
                    if !c.is_zero() {
                        out[k] += &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::LengthMismatch { expected: self.dim, got: x.len() });
        }
        let n = self.dim;
        Ok(Matrix::from_fn(n, n, |k, j| (0..n).map(|a| &x[a] * self.structure(a, j, k)).sum()))
    }

    pub fn ad_basis(&self, a: usize) -> Matrix {
        self.ad_matrix(&unit_vector(self.dim, a)).expect("dimension matches")
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        for a in 0..n {
            for b in 0..=a {
                if (0..n).any(|k| *self.structure(a, b, k) != -self.structure(b, a, k)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// First basis triple violating `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0`.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ea = unit_vector(n, a);
                    let eb = unit_vector(n, b);
                    let ec = unit_vector(n, c);
                    let t1 = self.bracket(&ea, &self.bracket(&eb, &ec));
                    let t2 = self.bracket(&eb, &self.bracket(&ec, &ea));
                    let t3 = self.bracket(&ec, &self.bracket(&ea, &eb));
                    if (0..n).any(|k| !(&(&t1[k] + &t2[k]) + &t3[k]).is_zero()) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Is `span(idx)` closed under the bracket?
    pub fn is_subalgebra(&self, idx: &[usize]) -> bool {
        self.maps_into(idx, idx, idx)
    }

    /// Is `[span(xs), span(ys)] ⊂ span(target)`?
    pub fn maps_into(&self, xs: &[usize], ys: &[usize], target: &[usize]) -> bool {
        xs.iter().all(|&a| {
            ys.iter().all(|&b| (0..self.dim).all(|k| target.contains(&k) || self.structure(a, b, k).is_zero()))
        })
    }

    /// New structure constants for the basis `f_i = Σ_j t[i][j] e_j`.
    pub fn change_basis(&self, t: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim;
        let tinv = t.inverse()?;
        let mut out = LieAlgebra::abelian(n);
        for i in 0..n {
            for j in 0..n {
                let br = self.bracket(&t.row(i), &t.row(j));
                // express in the new basis: coefficients x with x·T = br
                for l in 0..n {
                    out.c[(i * n + j) * n + l] = (0..n).map(|k| &br[k] * &tinv[(k, l)]).sum();
                }
            }
        }
        Ok(out)
    }

    /// Subalgebra on an index set, with its own basis `0..idx.len()`.
    pub fn restrict(&self, idx: &[usize]) -> Result<LieAlgebra> {
        if !self.is_subalgebra(idx) {
            return Err(Error::Invalid(format!("indices {idx:?} do not span a subalgebra")));
        }
        let m = idx.len();
        let mut out = LieAlgebra::abelian(m);
        for (i, &a) in idx.iter().enumerate() {
            for (j, &b) in idx.iter().enumerate() {
                for (l, &k) in idx.iter().enumerate() {
                    out.c[(i * m + j) * m + l] = self.structure(a, b, k).clone();
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x` with polynomial entries, where `x = Σ_i y_i e_{vars[i]}`
    /// and `y_i` are the even generators of `FreeSuperComm::polynomial(vars.len())`.
    pub fn ad_polynomial_matrix(&self, vars: &[usize]) -> Vec<Vec<Poly>> {
        let n = self.dim;
        let mut m = vec![vec![Poly::zero(); n]; n];
        for (i, &a) in vars.iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    let c = self.structure(a, j, k);
                    if !c.is_zero() {
                        m[k][j].add_term(ScMono::even_gen(i), c.clone());
                    }
                }
            }
        }
        m
    }

    /// `tr((ad_x)^j |_block)` for `j = 0..=max_power`, with `x` ranging over
    /// `span(vars)` in polynomial coordinates.
    pub fn block_trace_powers(&self, vars: &[usize], block: &[usize], max_power: usize) -> Vec<Poly> {
        use crate::algebra::SuperAlgebra;
        let n = self.dim;
        let ring = FreeSuperComm::polynomial(vars.len());
        let ad = self.ad_polynomial_matrix(vars);
        let mut pow: Vec<Vec<Poly>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { ring.one() } else { Poly::zero() }).collect()).collect();
        let mut out = Vec::with_capacity(max_power + 1);
        for j in 0..=max_power {
            if j > 0 {
                pow = poly_mat_mul(&ring, &pow, &ad);
            }
            let mut tr = Poly::zero();
            for &b in block {
                tr += &pow[b][b];
            }
            out.push(tr);
        }
        out
    }

    /// The polynomial `x ↦ tr(ad_x^m)` in coordinates of `x`; `m` must be
    /// even and positive.
    pub fn trace_power_polynomial(&self, m: usize) -> Result<Poly> {
        if m == 0 || m % 2 == 1 {
            return Err(Error::Invalid(format!("trace power must be even and positive, got {m}")));
        }
        let all: Vec<usize> = (0..self.dim).collect();
        Ok(self.block_trace_powers(&all, &all, m).pop().expect("m+1 entries"))
    }

    /// Coadjoint action of `e_a` on a polynomial in coordinates:
    /// the derivation with `x_k ↦ -Σ_l c[a][l][k] x_l`.
    pub fn coadjoint_on_poly(&self, a: usize, p: &Poly) -> Poly {
        let n = self.dim;
        let ring = FreeSuperComm::polynomial(n);
        ring.derivation_extend(
            p,
            crate::element::Parity::Even,
            &|k| (0..n).map(|l| (ScMono::even_gen(l), -self.structure(a, l, k))).collect(),
            &|_| Poly::zero(),
        )
    }
}

fn poly_mat_mul(ring: &FreeSuperComm, a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    use crate::algebra::SuperAlgebra;
    let n = a.len();
    let mut out = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] += &ring.mul(&a[i][k], &b[k][j]);
            }
        }
    }
    out
}

pub fn unit_vector(n: usize, a: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[a] = Scalar::one();
    v
}

/// A Lie algebra with an invariant symmetric bilinear form.
#[derive(Clone, Debug)]
pub struct QuadraticLieAlgebra {
    pub name: String,
    lie: LieAlgebra,
    form: Matrix,
    dual: Option<Matrix>,
}

impl QuadraticLieAlgebra {
    /// No validation here; see [`QuadraticLieAlgebra::validate`].
    pub fn new(name: impl Into<String>, lie: LieAlgebra, form: Matrix) -> Self {
        let dual = if form.is_square() && form.rows() == lie.dim() { form.inverse().ok() } else { None };
        QuadraticLieAlgebra { name: name.into(), lie, form, dual }
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn b(&self, a: usize, b: usize) -> &Scalar {
        &self.form[(a, b)]
    }

    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let n = self.dim();
        let mut s = Scalar::zero();
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if !y[b].is_zero() && !self.form[(a, b)].is_zero() {
                    s += &(&(&x[a] * &y[b]) * &self.form[(a, b)]);
                }
            }
        }
        s
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.dual.is_some()
    }

    /// Inverse of the form matrix: row `a` holds the coordinates of the
    /// dual basis vector `e^a`.
    pub fn dual_matrix(&self) -> Result<&Matrix> {
        self.dual.as_ref().ok_or(Error::DegenerateForm)
    }

    pub fn dual_vector(&self, a: usize) -> Result<Vec<Scalar>> {
        Ok(self.dual_matrix()?.row(a))
    }

    /// Coordinates of the linear form `B(e_a, ·)` in the dual basis of `𝔤*`.
    pub fn flat(&self, a: usize) -> Vec<Scalar> {
        self.form.row(a)
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<Scalar> {
        self.lie.bracket_basis(a, b)
    }

    /// First triple violating `B([a,b],c) + B(b,[a,c]) = 0`.
    pub fn invariance_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let ab = self.lie.bracket_basis(a, b);
                for c in 0..n {
                    let ac = self.lie.bracket_basis(a, c);
                    let s = &self.pairing(&ab, &unit_vector(n, c)) + &self.pairing(&unit_vector(n, b), &ac);
                    if !s.is_zero() {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> Vec<Check> {
        let n = self.dim();
        let mut out = Vec::new();
        let shape_ok = self.form.rows() == n && self.form.cols() == n;
        out.push(match self.lie.antisymmetry_violation() {
            None => Check::pass("antisymmetry", "[x,y] = -[y,x]"),
            Some((a, b)) => Check::fail(
                "antisymmetry",
                "[x,y] = -[y,x]",
                format!(
                    "basis pair ({a}, {b}): [e{a},e{b}] = {:?}, [e{b},e{a}] = {:?}",
                    self.lie.bracket_basis(a, b),
                    self.lie.bracket_basis(b, a)
                ),
            ),
        });
        out.push(match self.lie.jacobi_violation() {
            None => Check::pass("jacobi", "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0"),
            Some((a, b, c)) => {
                Check::fail("jacobi", "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0", format!("basis triple ({a}, {b}, {c})"))
            }
        });
        if !shape_ok {
            out.push(Check::fail("form-symmetry", "B(x,y) = B(y,x)", format!("form is not {n}x{n}")));
            return out;
        }
        out.push(if self.form.is_symmetric() {
            Check::pass("form-symmetry", "B(x,y) = B(y,x)")
        } else {
            let (i, j) = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .find(|&(i, j)| self.form[(i, j)] != self.form[(j, i)])
                .expect("asymmetric entry exists");
            Check::fail("form-symmetry", "B(x,y) = B(y,x)", format!("entries ({i},{j}) and ({j},{i}) differ"))
        });
        out.push(match self.invariance_violation() {
            None => Check::pass("form-invariance", "B([a,b],c) + B(b,[a,c]) = 0"),
            Some((a, b, c)) => {
                Check::fail("form-invariance", "B([a,b],c) + B(b,[a,c]) = 0", format!("basis triple ({a}, {b}, {c})"))
            }
        });
        out.push(if self.is_nondegenerate() {
            Check::pass("form-nondegeneracy", "det B != 0")
        } else {
            Check::fail("form-nondegeneracy", "det B != 0", format!("rank {} < {n}", self.form.rank()))
        });
        out
    }

    /// Structural checks (antisymmetry, Jacobi, symmetry, invariance) pass.
    pub fn is_valid(&self) -> bool {
        self.validate().iter().filter(|c| c.name != "form-nondegeneracy").all(Check::passed)
    }

    pub fn is_quadratic(&self) -> bool {
        self.validate().iter().all(Check::passed)
    }

    /// Same algebra in the basis `f_i = Σ_j t[i][j] e_j`.
    pub fn change_basis(&self, t: &Matrix) -> Result<QuadraticLieAlgebra> {
        let lie = self.lie.change_basis(t)?;
        let form = &(t * &self.form) * &t.transpose();
        Ok(QuadraticLieAlgebra::new(self.name.clone(), lie, form))
    }

    /// Reorders the basis so that new index `i` is old index `order[i]`.
    pub fn permute(&self, order: &[usize]) -> Result<QuadraticLieAlgebra> {
        let n = self.dim();
        if order.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: order.len() });
        }
        let t = Matrix::from_fn(n, n, |i, j| if order[i] == j { Scalar::one() } else { Scalar::zero() });
        self.change_basis(&t)
    }

    /// Quadratic subalgebra on an index set with the restricted form.
    pub fn restrict(&self, idx: &[usize]) -> Result<QuadraticLieAlgebra> {
        let lie = self.lie.restrict(idx)?;
        let form = self.form.submatrix(idx, idx);
        Ok(QuadraticLieAlgebra::new(format!("{}|sub", self.name), lie, form))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The Killing form `tr(ad_a ad_b)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|a| self.lie.ad_basis(a)).collect();
        Matrix::from_fn(n, n, |a, b| (&ads[a] * &ads[b]).trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SuperAlgebra;

    fn sl2() -> QuadraticLieAlgebra {
        catalog_entry("sl2").unwrap().algebra
    }

    #[test]
    fn sl2_ad_h_is_diagonal() {
        let l = sl2();
        let adh = l.lie().ad_basis(1);
        assert_eq!(adh, Matrix::from_ints(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
    }

    #[test]
    fn trace_square_is_killing_form() {
        let l = sl2();
        let p = l.lie().trace_power_polynomial(2).unwrap();
        let k = l.killing_form();
        // oracle: Σ_{a,b} K_ab x_a x_b
        let ring = FreeSuperComm::polynomial(3);
        let mut expect = Poly::zero();
        for a in 0..3 {
            for b in 0..3 {
                let t = ring.mul(&ring.even(a), &ring.even(b));
                expect.add_scaled(&t, &k[(a, b)]);
            }
        }
        assert_eq!(p, expect);
        assert!(l.lie().trace_power_polynomial(3).is_err());
    }

    #[test]
    fn broken_inputs_are_reported() {
        let lie = LieAlgebra::from_entries(2, &[(0, 1, 1, Scalar::one()), (1, 0, 1, Scalar::one())]).unwrap();
        let l = QuadraticLieAlgebra::new("bad", lie, Matrix::identity(2));
        let v = l.validate();
        assert!(!v[0].passed());
        let z = QuadraticLieAlgebra::new("zero-form", LieAlgebra::abelian(2), Matrix::zeros(2, 2));
        let v = z.validate();
        assert!(v.iter().find(|c| c.name == "form-invariance").unwrap().passed());
        assert!(!v.iter().find(|c| c.name == "form-nondegeneracy").unwrap().passed());
    }
}
