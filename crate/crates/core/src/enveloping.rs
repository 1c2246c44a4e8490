//! The enveloping algebra `U𝔤` in PBW normal form, the symmetric algebra
//! `S𝔤` as polynomials, constant-coefficient differential operators from
//! `S𝔤*`, the Duflo factor and the Duflo map.

use std::collections::HashMap;

use crate::algebra::SuperAlgebra;
use crate::element::{Element, Parity};
use crate::error::Result;
use crate::liealg::{LieAlgebra, Poly, QuadraticLieAlgebra};
use crate::matrix::Matrix;
use crate::rewrite::{Bracket, Straightener, Word};
use crate::scalar::Scalar;
use crate::series::series_tables;
use crate::supercomm::{multisets, FreeSuperComm, ScMono};

pub type U = Element<Word>;

/// `U𝔤` with PBW normal form (non-decreasing basis indices).
pub struct Enveloping {
    st: Straightener,
    lie: LieAlgebra,
}

pub(crate) fn lie_bracket(l: &LieAlgebra, i: usize, j: usize) -> Bracket {
    Bracket {
        linear: (0..l.dim())
            .filter(|&k| !l.structure(i, j, k).is_zero())
            .map(|k| (k as u8, l.structure(i, j, k).clone()))
            .collect(),
        constant: Scalar::zero(),
    }
}

impl Enveloping {
    pub fn new(l: &LieAlgebra) -> Self {
        let st = Straightener::new(vec![Parity::Even; l.dim()], |i, j| lie_bracket(l, i, j));
        Enveloping { st, lie: l.clone() }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn generator(&self, i: usize) -> U {
        self.st.generator(i)
    }

    pub fn vector(&self, v: &[Scalar]) -> U {
        self.st.vector(v)
    }

    /// Symmetrization `S𝔤 → U𝔤`.
    pub fn sym(&self, p: &Poly) -> U {
        let ring = FreeSuperComm::polynomial(self.dim());
        let mut memo = HashMap::new();
        let mut out = U::zero();
        for (m, c) in p {
            let s = ring.symmetrize_into(self, m, &|i| self.generator(i), &|_| unreachable!("even input"), &mut memo);
            out.add_scaled(&s, c);
        }
        out
    }

    /// `ad_{e_a}(x) = e_a x - x e_a`.
    pub fn ad(&self, a: usize, x: &U) -> U {
        self.commutator(&self.generator(a), x)
    }

    /// Commutes with every generator.
    pub fn is_central(&self, x: &U) -> bool {
        (0..self.dim()).all(|a| self.ad(a, x).is_zero())
    }
}

impl SuperAlgebra for Enveloping {
    type Mono = Word;

    fn parity(&self, _: &Word) -> Parity {
        Parity::Even
    }

    fn unit_mono(&self) -> Word {
        Word::new()
    }

    fn mul_mono(&self, a: &Word, b: &Word) -> U {
        self.st.mul_mono(a, b)
    }
}

/// Largest word length in the support; `None` for zero.
pub fn degree(p: &Element<ScMono>) -> Option<usize> {
    p.monomials().map(ScMono::len).max()
}

pub fn truncate(p: &Poly, max_deg: usize) -> Poly {
    p.filter(|m| m.len() <= max_deg)
}

/// `F̂(p)`: each monomial `x_{a₁}⋯x_{a_m}` of `F` acts as `∂_{a₁}⋯∂_{a_m}`.
pub fn apply_dual_operator(f: &Poly, p: &Poly) -> Poly {
    let n = f.monomials().chain(p.monomials()).flat_map(|m| m.even.iter().copied()).max().map_or(0, |x| x as usize + 1);
    let ring = FreeSuperComm::polynomial(n);
    let top = degree(p).unwrap_or(0);
    let mut out = Poly::zero();
    for (m, c) in f {
        if m.len() > top {
            continue;
        }
        let mut acc = p.clone();
        for &a in &m.even {
            acc = ring.partial_even(&acc, a as usize);
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `exp(s)` truncated at degree `max_deg`, for `s` without constant term.
pub fn poly_exp(s: &Poly, max_deg: usize) -> Poly {
    let ring = FreeSuperComm::polynomial(0);
    let mut out = ring.one();
    let mut term = ring.one();
    for k in 1..=max_deg {
        term = truncate(&ring.mul(&term, s), max_deg).scale(&Scalar::new(1, k as i64));
        if term.is_zero() {
            break;
        }
        out += &term;
    }
    out
}

/// `J^{1/2} = exp(½ Σ_k b_{2k} tr(ad_ξ^{2k}))` truncated at degree `max_deg`,
/// as a polynomial in the coordinates of `ξ`.
pub fn duflo_factor(l: &LieAlgebra, max_deg: usize) -> Result<Poly> {
    let table = series_tables(max_deg.max(2))?;
    let all: Vec<usize> = (0..l.dim()).collect();
    let traces = l.block_trace_powers(&all, &all, max_deg);
    let mut s = Poly::zero();
    for two_k in (2..=max_deg).step_by(2) {
        s.add_scaled(&traces[two_k], &(table.b(two_k) * Scalar::new(1, 2)));
    }
    Ok(poly_exp(&s, max_deg))
}

/// `sym ∘ Ĵ^{1/2}`; `max_deg` defaults to the degree of `p`, which loses
/// nothing since higher operator terms annihilate `p`.
pub fn duflo_map(u: &Enveloping, p: &Poly, max_deg: Option<usize>) -> Result<U> {
    let m = max_deg.unwrap_or_else(|| degree(p).unwrap_or(0));
    let j = duflo_factor(u.lie(), m)?;
    Ok(u.sym(&apply_dual_operator(&j, p)))
}

/// `Σ_a e_a e^a` in `S𝔤`.
pub fn casimir_polynomial(g: &QuadraticLieAlgebra) -> Result<Poly> {
    let dual = g.dual_matrix()?;
    let n = g.dim();
    let ring = FreeSuperComm::polynomial(n);
    let mut out = Poly::zero();
    for a in 0..n {
        out += &ring.mul(&ring.even(a), &ring.even_vector(&dual.row(a)));
    }
    Ok(out)
}

/// `Cas = Σ_a e_a e^a ∈ U𝔤` and its adjoint trace `Σ_a tr(ad_{e_a} ad_{e^a})`.
pub fn casimir(g: &QuadraticLieAlgebra, u: &Enveloping) -> Result<(U, Scalar)> {
    let dual = g.dual_matrix()?;
    let n = g.dim();
    let mut cas = U::zero();
    let mut tr = Scalar::zero();
    for a in 0..n {
        let ea = crate::liealg::unit_vector(n, a);
        cas += &u.mul(&u.generator(a), &u.vector(&dual.row(a)));
        let prod = &g.lie().ad_matrix(&ea)? * &g.lie().ad_matrix(&dual.row(a))?;
        tr += &prod.trace();
    }
    Ok((cas, tr))
}

/// Adjoint action of `e_a` on `S𝔤`: the derivation `e_b ↦ [e_a, e_b]`.
pub fn adjoint_on_sym(l: &LieAlgebra, a: usize, p: &Poly) -> Poly {
    let ring = FreeSuperComm::polynomial(l.dim());
    ring.derivation_extend(p, Parity::Even, &|b| ring.even_vector(&l.bracket_basis(a, b)), &|_| Poly::zero())
}

/// Basis of the common kernel of `actions` on the span of `monomials`.
pub fn invariant_basis(monomials: &[ScMono], actions: &[&dyn Fn(&Poly) -> Poly]) -> Vec<Poly> {
    // one row per (action, output monomial)
    let mut row_of: HashMap<(usize, ScMono), usize> = HashMap::new();
    let mut entries = Vec::new();
    for (k, act) in actions.iter().enumerate() {
        for (j, m) in monomials.iter().enumerate() {
            for (r, c) in &act(&Poly::monomial(m.clone())) {
                let next = row_of.len();
                let i = *row_of.entry((k, r.clone())).or_insert(next);
                entries.push((i, j, c.clone()));
            }
        }
    }
    let mut mat = Matrix::zeros(row_of.len(), monomials.len());
    for (i, j, c) in entries {
        mat[(i, j)] += &c;
    }
    mat.nullspace()
        .into_iter()
        .map(|v| monomials.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c)).collect())
        .collect()
}

/// Basis of `(S^k𝔤)^𝔤`.
pub fn sym_invariants(l: &LieAlgebra, k: usize) -> Vec<Poly> {
    let monomials: Vec<ScMono> =
        multisets(l.dim(), k).into_iter().map(|even| ScMono { even, odd: Word::new() }).collect();
    let actions: Vec<Box<dyn Fn(&Poly) -> Poly + '_>> =
        (0..l.dim()).map(|a| Box::new(move |p: &Poly| adjoint_on_sym(l, a, p)) as Box<dyn Fn(&Poly) -> Poly>).collect();
    let refs: Vec<&dyn Fn(&Poly) -> Poly> = actions.iter().map(|b| b.as_ref()).collect();
    invariant_basis(&monomials, &refs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;
    use crate::scalar::q;

    fn sl2() -> QuadraticLieAlgebra {
        catalog_entry("sl2").unwrap().algebra
    }

    fn mono(even: &[u8]) -> Poly {
        Poly::monomial(ScMono::from_parts(even, &[]))
    }

    #[test]
    fn pbw_commutator() {
        let u = Enveloping::new(sl2().lie());
        let (e, h, f) = (u.generator(0), u.generator(1), u.generator(2));
        assert_eq!(&u.mul(&e, &f) - &u.mul(&f, &e), h);
    }

    #[test]
    fn sym_of_ef() {
        let u = Enveloping::new(sl2().lie());
        let ef = u.mul(&u.generator(0), &u.generator(2));
        let expect = &ef - &u.generator(1).scale(&q(1, 2));
        assert_eq!(u.sym(&mono(&[0, 2])), expect);
    }

    #[test]
    fn dual_operator_is_multiplicative() {
        let p = &mono(&[0, 0, 1, 2]) + &mono(&[1, 1, 2]);
        let f1 = &mono(&[0]) + &mono(&[1, 2]).scale(&q(3, 2));
        let f2 = &mono(&[1]) - &mono(&[0, 0]);
        let ring = FreeSuperComm::polynomial(3);
        let lhs = apply_dual_operator(&ring.mul(&f1, &f2), &p);
        let rhs = apply_dual_operator(&f1, &apply_dual_operator(&f2, &p));
        assert_eq!(lhs, rhs);
        assert_eq!(apply_dual_operator(&mono(&[0]), &mono(&[0, 0])), mono(&[0]).scale(&q(2, 1)));
    }

    #[test]
    fn sl2_duflo_factor_degree_two() {
        let l = sl2();
        let j = duflo_factor(l.lie(), 2).unwrap();
        let t2 = l.lie().trace_power_polynomial(2).unwrap();
        let expect = &Poly::monomial(ScMono::one()) + &t2.scale(&q(1, 48));
        assert_eq!(j, expect);
    }

    #[test]
    fn casimir_is_central_with_trace_twelve() {
        let g = sl2();
        let u = Enveloping::new(g.lie());
        let (cas, tr) = casimir(&g, &u).unwrap();
        assert!(u.is_central(&cas));
        assert_eq!(tr, q(12, 1));
        assert_eq!(u.sym(&casimir_polynomial(&g).unwrap()), cas);
    }

    #[test]
    fn invariants_of_sl2() {
        let l = sl2();
        assert_eq!(sym_invariants(l.lie(), 1).len(), 0);
        let inv2 = sym_invariants(l.lie(), 2);
        assert_eq!(inv2.len(), 1);
        assert_eq!(sym_invariants(l.lie(), 3).len(), 0);
        assert_eq!(sym_invariants(l.lie(), 4).len(), 1);
    }
}
