//! Double extensions and the construction of `𝔨 ⊕ 𝔨*` from an invariant
//! cubic form.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

use super::{LieAlgebra, QuadraticLieAlgebra};

/// Double extension of a quadratic algebra `a` by a Lie algebra `s` acting
/// through B-orthogonal derivations. Basis order: `s`, then `a`, then `s*`.
///
/// `action[i]` is the matrix of `s_i` on `a` (column `p` holds `s_i.a_p`).
/// The cocycle is `ω(a₁,a₂)(ξ) = B_a(ξ.a₁, a₂)`, which is the sign making
/// the sum form invariant with the pairing `B(ξ, α) = α(ξ)`.
pub fn double_extension(a: &QuadraticLieAlgebra, s: &LieAlgebra, action: &[Matrix]) -> Result<QuadraticLieAlgebra> {
    let m = s.dim();
    let na = a.dim();
    if action.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: action.len() });
    }
    for (i, d) in action.iter().enumerate() {
        if d.rows() != na || d.cols() != na {
            return Err(Error::Invalid(format!("action matrix {i} is not {na}x{na}")));
        }
        check_derivation(a.lie(), d)
            .map_err(|w| Error::Invalid(format!("action of s_{i} is not a derivation: {w}")))?;
        let skew = &(&d.transpose() * a.form()) + &(a.form() * d);
        if !skew.is_zero() {
            return Err(Error::Invalid(format!("action of s_{i} does not preserve the form")));
        }
    }
    for i in 0..m {
        for j in 0..m {
            let lhs = &(&action[i] * &action[j]) - &(&action[j] * &action[i]);
            let mut rhs = Matrix::zeros(na, na);
            for k in 0..m {
                rhs = &rhs + &action[k].scale(s.structure(i, j, k));
            }
            if lhs != rhs {
                return Err(Error::Invalid(format!("action is not a representation on ({i}, {j})")));
            }
        }
    }

    let n = 2 * m + na;
    let si = |i: usize| i;
    let ai = |p: usize| m + p;
    let di = |i: usize| m + na + i;
    let mut entries = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let c = s.structure(i, j, k);
                if !c.is_zero() {
                    entries.push((si(i), si(j), si(k), c.clone()));
                }
            }
            // [s_i, s*^j] = -s*^j ∘ ad_{s_i}
            for l in 0..m {
                let c = s.structure(i, l, j);
                if !c.is_zero() {
                    entries.push((si(i), di(j), di(l), -c));
                }
            }
        }
        for p in 0..na {
            for q in 0..na {
                let c = &action[i][(q, p)];
                if !c.is_zero() {
                    entries.push((si(i), ai(p), ai(q), c.clone()));
                }
            }
        }
    }
    for p in 0..na {
        for q in 0..na {
            for r in 0..na {
                let c = a.lie().structure(p, q, r);
                if !c.is_zero() {
                    entries.push((ai(p), ai(q), ai(r), c.clone()));
                }
            }
            for i in 0..m {
                let w: Scalar = (0..na).map(|r| &action[i][(r, p)] * a.b(r, q)).sum();
                if !w.is_zero() {
                    entries.push((ai(p), ai(q), di(i), w));
                }
            }
        }
    }
    let lie = LieAlgebra::from_entries(n, &entries)?;
    let mut form = Matrix::zeros(n, n);
    for p in 0..na {
        for q in 0..na {
            form[(ai(p), ai(q))] = a.b(p, q).clone();
        }
    }
    for i in 0..m {
        form[(si(i), di(i))] = Scalar::one();
        form[(di(i), si(i))] = Scalar::one();
    }
    let out = QuadraticLieAlgebra::new(format!("dext({})", a.name), lie, form);
    if !out.is_valid() {
        return Err(Error::Invalid("double extension failed validation".into()));
    }
    Ok(out)
}

fn check_derivation(l: &LieAlgebra, d: &Matrix) -> std::result::Result<(), String> {
    let n = l.dim();
    for x in 0..n {
        for y in 0..n {
            let dxy = d.apply(&l.bracket_basis(x, y));
            let dx = d.col(x);
            let dy = d.col(y);
            let ex = super::unit_vector(n, x);
            let ey = super::unit_vector(n, y);
            let r1 = l.bracket(&dx, &ey);
            let r2 = l.bracket(&ex, &dy);
            if (0..n).any(|k| dxy[k] != &r1[k] + &r2[k]) {
                return Err(format!("basis pair ({x}, {y})"));
            }
        }
    }
    Ok(())
}

/// Alternating trilinear form on `𝔨*`, i.e. an element of `∧³𝔨`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cubic {
    dim: usize,
    c: Vec<Scalar>,
}

impl Cubic {
    pub fn zero(dim: usize) -> Self {
        Cubic { dim, c: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Entries `(i, j, l, v)` with distinct indices; the alternating
    /// completion is filled in.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut out = Self::zero(dim);
        for (i, j, l, v) in entries {
            let (i, j, l) = (*i, *j, *l);
            if i >= dim || j >= dim || l >= dim || i == j || j == l || i == l {
                return Err(Error::Invalid(format!("bad cubic index ({i}, {j}, {l})")));
            }
            for (p, sgn) in
                [((i, j, l), 1), ((j, l, i), 1), ((l, i, j), 1), ((j, i, l), -1), ((i, l, j), -1), ((l, j, i), -1)]
            {
                let at = out.idx(p.0, p.1, p.2);
                out.c[at] = v * &Scalar::from_int(sgn);
            }
        }
        Ok(out)
    }

    fn idx(&self, i: usize, j: usize, l: usize) -> usize {
        (i * self.dim + j) * self.dim + l
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &Scalar {
        &self.c[self.idx(i, j, l)]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `C(μ,μ',μ'') = sign · B_𝔨([μ♯, μ'♯], μ''♯)` for a quadratic `𝔨`.
    pub fn from_form(k: &QuadraticLieAlgebra, sign: i64) -> Result<Self> {
        let n = k.dim();
        let dual = k.dual_matrix()?;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let br = k.lie().bracket(&dual.row(i), &dual.row(j));
                for l in 0..n {
                    let v = k.pairing(&br, &dual.row(l));
                    let idx = out.idx(i, j, l);
                    out.c[idx] = &v * &Scalar::from_int(sign);
                }
            }
        }
        Ok(out)
    }

    fn is_alternating(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|l| {
                    let v = self.get(i, j, l);
                    *self.get(j, i, l) == -v && *self.get(i, l, j) == -v
                })
            })
        })
    }

    /// Invariance under the adjoint action of `𝔨` on `∧³𝔨`.
    fn invariance_violation(&self, k: &LieAlgebra) -> Option<usize> {
        let n = self.dim;
        for a in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let mut s = Scalar::zero();
                        for p in 0..n {
                            s += &(k.structure(a, p, i) * self.get(p, j, l));
                            s += &(k.structure(a, p, j) * self.get(i, p, l));
                            s += &(k.structure(a, p, l) * self.get(i, j, p));
                        }
                        if !s.is_zero() {
                            return Some(a);
                        }
                    }
                }
            }
        }
        None
    }
}

/// `𝔤 = 𝔨 ⊕ 𝔨*` with `[ξ,μ] = -ad*_ξ μ`, `[μ,μ'] = C(μ,μ',·)` and the
/// pairing form. Basis: `𝔨` first, then the dual basis of `𝔨*`.
/// Jacobi is checked on the result rather than assumed.
pub fn from_cubic(k: &LieAlgebra, c: &Cubic, name: &str) -> Result<QuadraticLieAlgebra> {
    let m = k.dim();
    if c.dim() != m {
        return Err(Error::LengthMismatch { expected: m, got: c.dim() });
    }
    if !c.is_alternating() {
        return Err(Error::Invalid("cubic form is not alternating".into()));
    }
    if let Some(a) = c.invariance_violation(k) {
        return Err(Error::Invalid(format!("cubic form is not invariant under basis element {a}")));
    }
    let n = 2 * m;
    let mut entries = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                let s = k.structure(i, j, l);
                if !s.is_zero() {
                    entries.push((i, j, l, s.clone()));
                    // [e_i, ε^l] gets -c[i][j][l] ε^j
                    entries.push((i, m + l, m + j, -s));
                    entries.push((m + l, i, m + j, s.clone()));
                }
                let v = c.get(i, j, l);
                if !v.is_zero() {
                    entries.push((m + i, m + j, l, v.clone()));
                }
            }
        }
    }
    let lie = LieAlgebra::from_entries(n, &merge_entries(entries))?;
    let mut form = Matrix::zeros(n, n);
    for i in 0..m {
        form[(i, m + i)] = Scalar::one();
        form[(m + i, i)] = Scalar::one();
    }
    let out = QuadraticLieAlgebra::new(name, lie, form);
    if let Some((a, b, cc)) = out.lie().jacobi_violation() {
        return Err(Error::Invalid(format!("Jacobi fails on ({a}, {b}, {cc}) for this cubic form")));
    }
    if !out.is_valid() {
        return Err(Error::Invalid("construction failed validation".into()));
    }
    Ok(out)
}

/// Sums duplicate `(a, b, k)` entries.
fn merge_entries(entries: Vec<(usize, usize, usize, Scalar)>) -> Vec<(usize, usize, usize, Scalar)> {
    let mut map: std::collections::BTreeMap<(usize, usize, usize), Scalar> = Default::default();
    for (a, b, k, v) in entries {
        *map.entry((a, b, k)).or_default() += &v;
    }
    map.into_iter().map(|((a, b, k), v)| (a, b, k, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semidirect_with_zero_cubic() {
        let s = LieAlgebra::from_ints(2, &[(0, 1, 1, 1)]);
        let g = from_cubic(&s, &Cubic::zero(2), "s+s*").unwrap();
        assert!(g.is_quadratic());
        // [p,p] = 0
        assert!(g.lie().bracket_basis(2, 3).iter().all(Scalar::is_zero));
    }

    #[test]
    fn non_invariant_cubic_rejected() {
        let s = LieAlgebra::from_ints(3, &[(0, 1, 1, 1)]);
        let c = Cubic::from_entries(3, &[(0, 1, 2, Scalar::one())]).unwrap();
        assert!(from_cubic(&s, &c, "bad").is_err());
    }

    #[test]
    fn non_derivation_rejected() {
        let a = QuadraticLieAlgebra::new("ab", LieAlgebra::abelian(2), Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        let s = LieAlgebra::abelian(1);
        // rotation does not preserve the hyperbolic form
        let rot = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        assert!(double_extension(&a, &s, &[rot]).is_err());
    }
}
