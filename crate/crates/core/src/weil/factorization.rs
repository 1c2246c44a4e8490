//! Factorization of the quantization map through the Duflo operator:
//! `Q = (sym_U ⊗ q) ∘ ι̂(S)` with `S(ξ) = J^{1/2}(ξ) exp(r(ξ))`, where
//! `r(ξ) ∈ ∧²𝔤` is the skew operator `(ln j)'(ad_ξ)` seen as a 2-vector.

use crate::algebra::{tensor_elements, SuperAlgebra};
use crate::clifford::{contract_pairing, Ext};
use crate::element::Parity;
use crate::enveloping::{apply_dual_operator, duflo_factor, duflo_map, truncate};
use crate::error::Result;
use crate::liealg::{Poly, QuadraticLieAlgebra};
use crate::report::{all_ok, compare, Check};
use crate::scalar::Scalar;
use crate::series::series_tables;
use crate::supercomm::{FreeSuperComm, ScMono};

use super::commutative::W;
use super::ncweil::{Nc, NcWeil};

/// Elements of the mixed ring `S̄𝔤* ⊗ ∧𝔤`.
pub type Mixed = W;

/// `S` as an element of `S̄𝔤* ⊗ ∧𝔤`: even generators are coordinates of
/// `ξ`, odd generators are the basis of `𝔤`. Truncated at polynomial degree
/// `max_deg`.
pub fn duflo_symbol(g: &QuadraticLieAlgebra, max_deg: usize) -> Result<Mixed> {
    let n = g.dim();
    let dual = g.dual_matrix()?;
    let ring = FreeSuperComm::new(n, n);
    let table = series_tables(max_deg.max(2) + 1)?;
    let ad = g.lie().ad_polynomial_matrix(&(0..n).collect::<Vec<_>>());
    let poly = FreeSuperComm::polynomial(n);

    // (ln j)'(ad_ξ) as a polynomial matrix, odd powers only
    let mut power = ad.clone();
    let mut series = vec![vec![Poly::zero(); n]; n];
    let mut k = 1;
    while k <= max_deg {
        let c = &table.dln_j[k];
        if !c.is_zero() {
            for i in 0..n {
                for j in 0..n {
                    series[i][j].add_scaled(&power[i][j], c);
                }
            }
        }
        for _ in 0..2 {
            power = mat_mul(&poly, &power, &ad, max_deg);
        }
        k += 2;
    }
    // r = ½ Σ_{b,c} M_bc e_b ∧ e_c with M = (ln j)'(ad) · B⁻¹
    let mut r = Mixed::zero();
    for b in 0..n {
        for c in 0..n {
            if b == c {
                continue;
            }
            let mut m = Poly::zero();
            for a in 0..n {
                if !dual[(a, c)].is_zero() {
                    m.add_scaled(&series[b][a], &dual[(a, c)]);
                }
            }
            if m.is_zero() {
                continue;
            }
            let wedge = ring.mul(&ring.odd(b), &ring.odd(c));
            r += &ring.mul(&m, &wedge).scale(&Scalar::new(1, 2));
        }
    }
    let j = duflo_factor(g.lie(), max_deg)?;
    let mut exp_r = ring.one();
    let mut term = ring.one();
    for k in 1..=n / 2 + max_deg {
        term = trunc_even(&ring.mul(&term, &r), max_deg).scale(&Scalar::new(1, k as i64));
        if term.is_zero() {
            break;
        }
        exp_r += &term;
    }
    Ok(trunc_even(&ring.mul(&j, &exp_r), max_deg))
}

fn trunc_even(x: &W, max_deg: usize) -> W {
    x.filter(|m| m.even.len() <= max_deg)
}

fn mat_mul(ring: &FreeSuperComm, a: &[Vec<Poly>], b: &[Vec<Poly>], max_deg: usize) -> Vec<Vec<Poly>> {
    let n = a.len();
    let mut out = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &ring.mul(&a[i][k], &b[k][j]);
                }
            }
        }
        for e in out[i].iter_mut() {
            *e = truncate(e, max_deg);
        }
    }
    out
}

/// Transports a curvature-coordinate element of `W𝔤` to `S𝔤 ⊗ ∧𝔤` along
/// `ε^a ↦ e^a`.
pub fn to_vectors(nc: &NcWeil, x: &W) -> W {
    let ring = *nc.weil().ring();
    ring.hom_extend(&ring, x, &|a| ring.even_vector(&nc.dual_coords(a)), &|a| ring.odd_vector(&nc.dual_coords(a)))
}

/// `ι̂(S)`: the polynomial leg acts by derivatives on `S𝔤`, the `∧𝔤` leg by
/// contraction through `B`.
pub fn apply_symbol(g: &QuadraticLieAlgebra, s: &W, x: &W) -> W {
    let split = |y: &W| -> Vec<(Poly, Ext, Scalar)> {
        y.iter()
            .map(|(m, c)| {
                (
                    Poly::monomial(ScMono { even: m.even.clone(), odd: Default::default() }),
                    Ext::monomial(ScMono { even: Default::default(), odd: m.odd.clone() }),
                    c.clone(),
                )
            })
            .collect()
    };
    let ring = FreeSuperComm::new(g.dim(), g.dim());
    let xs = split(x);
    let mut out = W::zero();
    for (sp, sw, sc) in split(s) {
        // S has only even exterior degree, so no sign passes the polynomial leg
        debug_assert_eq!(sw.monomials().next().map(|m| m.parity()), Some(Parity::Even));
        for (xp, xw, xc) in &xs {
            let p = apply_dual_operator(&sp, xp);
            if p.is_zero() {
                continue;
            }
            let w = contract_pairing(g.form(), &sw, xw);
            if w.is_zero() {
                continue;
            }
            out.add_scaled(&ring.mul(&p, &w), &(&sc * xc));
        }
    }
    out
}

/// `sym_U ⊗ q` into `U𝔤 ⊗ Cl(𝔤)`.
pub fn sym_tensor_q(nc: &NcWeil, x: &W) -> Nc {
    let mut out = Nc::zero();
    for (m, c) in x {
        let u = nc.enveloping().sym(&Poly::monomial(ScMono { even: m.even.clone(), odd: Default::default() }));
        let q = nc.clifford().quantize(&Ext::monomial(ScMono { even: Default::default(), odd: m.odd.clone() }));
        out.add_scaled(&tensor_elements(&u, &q), c);
    }
    out
}

/// Compares `Q` with `(sym_U ⊗ q) ∘ ι̂(S)` on all curvature monomials of
/// word length at most `max_deg`, and `Q|_{S𝔤}` with the Duflo map.
pub fn duflo_factorization_checks(nc: &NcWeil, max_deg: usize) -> Result<Vec<Check>> {
    let g = nc.algebra();
    let s = duflo_symbol(g, max_deg)?;
    let monos = nc.weil().ring().monomials_up_to(max_deg);
    let fact = all_ok(monos.iter().map(|m| {
        let x = W::monomial(m.clone());
        let rhs = sym_tensor_q(nc, &apply_symbol(g, &s, &to_vectors(nc, &x)));
        compare(&format!("{m:?}"), &nc.quantize(&x), &rhs)
    }));
    let u = nc.enveloping();
    let sym_part = all_ok(monos.iter().filter(|m| m.odd.is_empty()).map(|m| {
        let x = W::monomial(m.clone());
        let p = to_vectors(nc, &x);
        let rhs = nc.from_u(&duflo_map(u, &p, Some(max_deg)).map_err(|e| e.to_string())?);
        compare(&format!("{m:?}"), &nc.quantize(&x), &rhs)
    }));
    let name = &g.name;
    Ok(vec![
        Check::from_result(format!("{name}: duflo factorization"), "Q = (sym_U (x) q) o iota(J^1/2 exp r)", fact)
            .with_detail(format!("{} monomials of length <= {max_deg}", monos.len())),
        Check::from_result(format!("{name}: Q on S(g) is the Duflo map"), "Q|_Sg = sym_U o J^1/2", sym_part),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    #[test]
    fn factorization_low_degree() {
        let nc = NcWeil::new(&catalog_entry("sl2").unwrap().algebra).unwrap();
        for c in duflo_factorization_checks(&nc, 3).unwrap() {
            assert!(c.passed(), "{} {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn symbol_is_one_for_abelian() {
        let g = catalog_entry("abelian2").unwrap().algebra;
        let s = duflo_symbol(&g, 4).unwrap();
        assert_eq!(s, FreeSuperComm::new(2, 2).one());
    }
}
