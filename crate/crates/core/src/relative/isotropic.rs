//! The quotient complex `𝒲𝔤 / 𝒲𝔤·𝔨̃` of an isotropic subalgebra `𝔨`, where
//! `𝔨̃ = span(ξ, ξ̄ : ξ ∈ 𝔨)`, with the differential induced by `[𝒟, ·]`.
//!
//! In the generator presentation with `𝔨` ordered last, a normal-ordered word
//! lies in the left ideal exactly when it contains a `𝔨` letter, so the
//! quotient normal form is a support filter. The ideal is stable under
//! `[𝒟, ·]` because `[𝒟, ξ] = ξ̄` and `[𝒟, ξ̄] = 0`.

use std::sync::Arc;

use crate::algebra::SuperAlgebra;
use crate::clifford::{gamma, Cl};
use crate::element::Parity;
use crate::enveloping::invariant_basis;
use crate::error::{Error, Result};
use crate::liealg::{unit_vector, CatalogEntry, QuadraticLieAlgebra};
use crate::matrix::Matrix;
use crate::report::{all_ok, compare, Check};
use crate::rewrite::Word;
use crate::scalar::Scalar;
use crate::supercomm::{multisets, ScMono};
use crate::weil::generators::Gen;
use crate::weil::{characteristic_map, Gda, KoszulPbw, Nc, NcWeil, WeilAlgebra, W};

use super::{adapted, check_indices, orthogonal};

pub struct IsotropicQuotient {
    nc: Arc<NcWeil>,
    pbw: KoszulPbw,
    k_idx: Vec<usize>,
    np: usize,
    dirac: Gen,
    /// `ζ_a ∈ 𝔭^⊥` with `B(ζ_a, k_b) = δ_ab`.
    connection: Vec<Vec<Scalar>>,
    /// Basis of `𝔪 = 𝔨^⊥ ∩ 𝔭`.
    m_basis: Vec<Vec<Scalar>>,
}

fn lift(n: usize, idx: &[usize], coords: &[Scalar]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    for (&i, c) in idx.iter().zip(coords) {
        v[i] = c.clone();
    }
    v
}

impl IsotropicQuotient {
    pub fn new(g: &QuadraticLieAlgebra, k_idx: &[usize]) -> Result<Self> {
        let n = g.dim();
        check_indices(n, k_idx)?;
        let p_idx: Vec<usize> = (0..n).filter(|i| !k_idx.contains(i)).collect();
        if !g.lie().is_subalgebra(k_idx) {
            return Err(Error::Invalid(format!("{k_idx:?} does not span a subalgebra")));
        }
        if !orthogonal(g, k_idx, k_idx) {
            return Err(Error::Invalid("subalgebra is not isotropic".into()));
        }
        let all: Vec<usize> = (0..n).collect();
        // 𝔭^⊥: B(v, e_j) = 0 for every j in 𝔭
        let p_perp = g.form().submatrix(&p_idx, &all).nullspace();
        if p_perp.iter().any(|v| k_idx.iter().any(|&i| !v[i].is_zero())) {
            return Err(Error::Invalid("the orthogonal of the complement is not inside it".into()));
        }
        if p_perp.len() != k_idx.len() {
            return Err(Error::Invalid("complement has the wrong orthogonal dimension".into()));
        }
        let m_basis: Vec<Vec<Scalar>> =
            g.form().submatrix(k_idx, &p_idx).nullspace().into_iter().map(|c| lift(n, &p_idx, &c)).collect();
        let gram = Matrix::from_fn(m_basis.len(), m_basis.len(), |i, j| g.pairing(&m_basis[i], &m_basis[j]));
        if gram.inverse().is_err() {
            return Err(Error::Invalid("B is degenerate on k^perp inside the complement".into()));
        }
        let pair = Matrix::from_fn(k_idx.len(), k_idx.len(), |i, b| g.pairing(&p_perp[i], &unit_vector(n, k_idx[b])));
        let x = pair.inverse()?;
        let connection = (0..k_idx.len())
            .map(|a| {
                let mut v = vec![Scalar::zero(); n];
                for (i, pv) in p_perp.iter().enumerate() {
                    for (vj, pj) in v.iter_mut().zip(pv) {
                        *vj += &(&x[(a, i)] * pj);
                    }
                }
                v
            })
            .collect();
        let nc = Arc::new(NcWeil::new(g)?);
        let order: Vec<usize> = p_idx.iter().chain(k_idx).copied().collect();
        let pbw = KoszulPbw::new(nc.clone(), &order);
        let dirac = pbw.from_factorized(nc.dirac());
        Ok(IsotropicQuotient { nc, pbw, k_idx: k_idx.to_vec(), np: p_idx.len(), dirac, connection, m_basis })
    }

    pub fn from_entry(entry: &CatalogEntry) -> Result<Self> {
        let (g, dec) = adapted(entry, |e| e.isotropic.as_ref())?;
        IsotropicQuotient::new(&g, &dec.k)
    }

    pub fn presentation(&self) -> &KoszulPbw {
        &self.pbw
    }

    fn name(&self) -> &str {
        &self.nc.algebra().name
    }

    /// Normal form in the quotient.
    pub fn reduce(&self, x: &Gen) -> Gen {
        let bound = (2 * self.np) as u8;
        x.filter(|w| w.last().map_or(true, |&l| l < bound))
    }

    /// The induced differential.
    pub fn d(&self, x: &Gen) -> Gen {
        self.reduce(&self.pbw.commutator(&self.dirac, x))
    }

    /// Quotient basis words of length at most `max_len`.
    pub fn basis_words(&self, max_len: usize) -> Vec<Word> {
        fn rec(letter: usize, letters: usize, left: usize, cur: &mut Word, out: &mut Vec<Word>) {
            if letter == letters {
                out.push(cur.clone());
                return;
            }
            let max = if letter % 2 == 1 { left.min(1) } else { left };
            for k in 0..=max {
                for _ in 0..k {
                    cur.push(letter as u8);
                }
                rec(letter + 1, letters, left - k, cur, out);
                for _ in 0..k {
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(0, 2 * self.np, max_len, &mut Word::new(), &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn d_squared_check(&self, cap: usize) -> Check {
        let words = self.basis_words(cap);
        let r = all_ok(words.iter().map(|w| {
            let x = Gen::monomial(w.clone());
            compare(&format!("{w:?}"), &self.d(&self.d(&x)), &Gen::zero())
        }));
        Check::from_result(
            format!("{}: quotient differential squares to zero", self.name()),
            "d^2 = 0 on Wg / Wg k~",
            r,
        )
        .with_detail(format!("{} quotient words of length <= {cap}", words.len()))
    }

    /// `½ Σ_i pr_𝔪([ζ, m_i]) m^i`, with the orthogonal projection onto `𝔪`.
    pub fn gamma_m(&self, zeta: &[Scalar]) -> Cl {
        let g = self.nc.algebra();
        let cl = self.nc.clifford();
        let r = self.m_basis.len();
        let gram = Matrix::from_fn(r, r, |i, j| g.pairing(&self.m_basis[i], &self.m_basis[j]));
        let inv = gram.inverse().expect("checked at construction");
        let combo = |coeffs: &[Scalar]| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); g.dim()];
            for (c, b) in coeffs.iter().zip(&self.m_basis) {
                for (vj, bj) in v.iter_mut().zip(b) {
                    *vj += &(c * bj);
                }
            }
            v
        };
        let dual: Vec<Vec<Scalar>> = (0..r).map(|i| combo(&inv.row(i))).collect();
        let mut out = Cl::zero();
        for i in 0..r {
            let br = g.lie().bracket(zeta, &self.m_basis[i]);
            let proj: Vec<Scalar> = (0..r).map(|j| g.pairing(&br, &dual[j])).collect();
            if proj.iter().all(Scalar::is_zero) {
                continue;
            }
            out += &cl.mul(&cl.vector(&combo(&proj)), &cl.vector(&dual[i]));
        }
        out.scale(&Scalar::new(1, 2))
    }

    /// `γ_𝔤(ζ) ≡ ½ tr_𝔨(ad_ζ) + γ^𝔪(ζ)` modulo the ideal, for `ζ ∈ 𝔨`: the
    /// ideal of `𝔨̃` is the twisted ideal of `𝔨^f`.
    pub fn twist_check(&self) -> Result<Check> {
        let g = self.nc.algebra();
        let n = g.dim();
        let mut results = Vec::new();
        for (i, &a) in self.k_idx.iter().enumerate() {
            let zeta = unit_vector(n, a);
            let ad = g.lie().ad_basis(a);
            let tr: Scalar = self.k_idx.iter().map(|&j| ad[(j, j)].clone()).sum();
            let lhs = self.nc.from_cl(&gamma(g, self.nc.clifford(), &zeta)?);
            let rhs = &self.nc.scalar(tr * Scalar::new(1, 2)) + &self.nc.from_cl(&self.gamma_m(&zeta));
            results.push(compare(
                &format!("k_{i}"),
                &self.reduce(&self.pbw.from_factorized(&lhs)),
                &self.reduce(&self.pbw.from_factorized(&rhs)),
            ));
        }
        Ok(Check::from_result(
            format!("{}: isotropic twist", self.name()),
            "gamma_g(z) = 1/2 tr_k(ad z) + gamma_m(z) mod Wg k~",
            all_ok(results),
        ))
    }

    fn action(&self) -> KAction<'_> {
        let n = self.nc.dim();
        KAction {
            nc: &self.nc,
            k: self.k_idx.iter().map(|&a| unit_vector(n, a)).collect(),
            theta: self.connection.iter().map(|v| self.nc.odd(v)).collect(),
        }
    }

    /// Chern–Weil images of `(S𝔨*)^𝔨` up to degree `max_deg` through the
    /// connection `ε^a ↦ ζ_a`: the connection is equivariant, and each image
    /// is closed and basic in the quotient.
    pub fn chern_weil_checks(&self, max_deg: usize) -> Result<Vec<Check>> {
        let g = self.nc.algebra();
        let kl = g.lie().restrict(&self.k_idx)?;
        let m = kl.dim();
        let act = self.action();
        let conn = all_ok((0..m).flat_map(|b| {
            let act = &act;
            let kl = &kl;
            (0..m).map(move |a| {
                let th = act.connection(a);
                let mut expect = Nc::zero();
                for c in 0..m {
                    expect.add_scaled(&act.connection(c), &-kl.structure(b, c, a));
                }
                compare(&format!("L_{b} theta^{a}"), &act.lie_derivative(b, &th), &expect)?;
                let unit = if a == b { act.one() } else { Nc::zero() };
                compare(&format!("iota_{b} theta^{a}"), &act.iota(b, &th), &unit)
            })
        }));
        let mut out = vec![Check::from_result(
            format!("{}: connection on the isotropic quotient", self.name()),
            "i_b theta^a = delta, L_b theta^a = -c_bc^a theta^c",
            conn,
        )];

        let w = WeilAlgebra::new(&kl);
        let mut results = Vec::new();
        let mut count = 0;
        let mut nonzero = 0;
        for d in 1..=max_deg {
            let monos: Vec<ScMono> =
                multisets(m, d).into_iter().map(|even| ScMono { even, odd: Word::new() }).collect();
            let wr = &w;
            let actions: Vec<Box<dyn Fn(&W) -> W + '_>> =
                (0..m).map(|b| Box::new(move |x: &W| wr.lie_derivative(b, x)) as Box<dyn Fn(&W) -> W>).collect();
            let refs: Vec<&dyn Fn(&W) -> W> = actions.iter().map(|b| b.as_ref()).collect();
            for p in invariant_basis(&monos, &refs) {
                count += 1;
                let image = self.pbw.from_factorized(&characteristic_map(&act, &w.to_koszul(&p))?);
                let class = self.reduce(&image);
                if !class.is_zero() {
                    nonzero += 1;
                }
                results.push(compare(&format!("d c({p:?})"), &self.d(&class), &Gen::zero()));
                for (b, &a) in self.k_idx.iter().enumerate() {
                    let odd = self.pbw.odd(a);
                    let bar = self.pbw.bar(a);
                    results.push(compare(
                        &format!("iota_{b} c({p:?})"),
                        &self.reduce(&self.pbw.commutator(&odd, &class)),
                        &Gen::zero(),
                    ));
                    results.push(compare(
                        &format!("L_{b} c({p:?})"),
                        &self.reduce(&self.pbw.commutator(&bar, &class)),
                        &Gen::zero(),
                    ));
                }
            }
        }
        out.push(
            Check::from_result(
                format!("{}: chern-weil classes in the isotropic quotient", self.name()),
                "c(p) closed and basic for p in (Sk*)^k",
                all_ok(results),
            )
            .with_detail(format!("{count} invariants of degree <= {max_deg}, {nonzero} with nonzero image")),
        );
        Ok(out)
    }
}

/// `𝒲𝔤` as a 𝔨-da with a chosen connection.
struct KAction<'a> {
    nc: &'a NcWeil,
    k: Vec<Vec<Scalar>>,
    theta: Vec<Nc>,
}

impl SuperAlgebra for KAction<'_> {
    type Mono = crate::weil::NcMono;
    fn parity(&self, m: &Self::Mono) -> Parity {
        self.nc.parity(m)
    }
    fn unit_mono(&self) -> Self::Mono {
        self.nc.unit_mono()
    }
    fn mul_mono(&self, a: &Self::Mono, b: &Self::Mono) -> Nc {
        self.nc.mul_mono(a, b)
    }
}

impl Gda for KAction<'_> {
    fn lie_dim(&self) -> usize {
        self.k.len()
    }
    fn d(&self, x: &Nc) -> Nc {
        self.nc.d(x)
    }
    fn iota(&self, b: usize, x: &Nc) -> Nc {
        self.nc.iota(&self.k[b], x)
    }
    fn lie_derivative(&self, b: usize, x: &Nc) -> Nc {
        self.nc.lie_derivative(&self.k[b], x)
    }
    fn connection(&self, a: usize) -> Nc {
        self.theta[a].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    #[test]
    fn isotropic_entries() {
        for name in ["heis1", "aff-semidirect", "cubic-n3"] {
            let q = IsotropicQuotient::from_entry(&catalog_entry(name).unwrap()).unwrap();
            let mut checks = vec![q.d_squared_check(2), q.twist_check().unwrap()];
            checks.extend(q.chern_weil_checks(2).unwrap());
            for c in checks {
                assert!(c.passed(), "{} {:?}", c.name, c.witness);
            }
        }
    }

    #[test]
    fn zero_subalgebra_gives_the_whole_algebra() {
        let g = catalog_entry("sl2").unwrap().algebra;
        let q = IsotropicQuotient::new(&g, &[]).unwrap();
        let x = Gen::monomial(Word::from_slice(&[1, 2]));
        assert_eq!(q.reduce(&x), x);
        assert!(q.d_squared_check(2).passed());
    }
}
