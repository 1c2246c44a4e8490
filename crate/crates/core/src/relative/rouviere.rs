//! Symmetric pairs `𝔤 = 𝔨 ⊕ 𝔭`, the quotient `U𝔤/U𝔤𝔨^f` with
//! `f(ξ) = ½ tr_𝔨(ad_ξ)`, and the Duflo–Rouvière map `Sym ∘ Ĵ_𝔭^{1/2}`.
//!
//! Everything lives in the adapted basis `(𝔭, 𝔨)`: `𝔭` takes indices
//! `0..dim 𝔭`, so polynomials on `𝔭` and `𝔭`-only PBW words need no
//! renumbering.

use crate::algebra::SuperAlgebra;
use crate::enveloping::{apply_dual_operator, degree, invariant_basis, poly_exp, Enveloping, U};
use crate::error::{Error, Result};
use crate::liealg::{CatalogEntry, Poly, QuadraticLieAlgebra};
use crate::report::{all_ok, compare, Check};
use crate::rewrite::Word;
use crate::scalar::Scalar;
use crate::series::series_tables;
use crate::supercomm::{multisets, FreeSuperComm, ScMono};

use super::{adapted, check_indices, evaluate_words, orthogonal};

pub struct SymmetricPair {
    name: String,
    adapted: QuadraticLieAlgebra,
    u: Enveloping,
    /// Original basis index → adapted index.
    position: Vec<usize>,
    np: usize,
    /// `f(k_i)`.
    f: Vec<Scalar>,
}

impl SymmetricPair {
    /// `k_idx` spans `𝔨`; the remaining basis vectors span `𝔭`. Both must be
    /// isotropic, with `[𝔨,𝔭] ⊂ 𝔭` and `[𝔭,𝔭] ⊂ 𝔨`.
    pub fn new(g: &QuadraticLieAlgebra, k_idx: &[usize]) -> Result<Self> {
        let n = g.dim();
        check_indices(n, k_idx)?;
        let p_idx: Vec<usize> = (0..n).filter(|i| !k_idx.contains(i)).collect();
        let lie = g.lie();
        if !lie.is_subalgebra(k_idx) || !lie.maps_into(k_idx, &p_idx, &p_idx) || !lie.maps_into(&p_idx, &p_idx, k_idx) {
            return Err(Error::Invalid("bracket relations of a symmetric pair fail".into()));
        }
        if !orthogonal(g, k_idx, k_idx) || !orthogonal(g, &p_idx, &p_idx) {
            return Err(Error::Invalid("the involution must reverse the sign of B".into()));
        }
        let order: Vec<usize> = p_idx.iter().chain(k_idx).copied().collect();
        let mut position = vec![0; n];
        for (p, &a) in order.iter().enumerate() {
            position[a] = p;
        }
        let adapted = g.permute(&order)?;
        let np = p_idx.len();
        let f = (np..n)
            .map(|a| {
                let ad = adapted.lie().ad_basis(a);
                let tr: Scalar = (np..n).map(|j| ad[(j, j)].clone()).sum();
                tr * Scalar::new(1, 2)
            })
            .collect();
        Ok(SymmetricPair { name: g.name.clone(), u: Enveloping::new(adapted.lie()), adapted, position, np, f })
    }

    pub fn from_entry(entry: &CatalogEntry) -> Result<Self> {
        let (g, dec) = adapted(entry, |e| e.decomposition.as_ref())?;
        SymmetricPair::new(&g, &dec.k)
    }

    /// `U𝔤` in the adapted PBW order.
    pub fn enveloping(&self) -> &Enveloping {
        &self.u
    }

    pub fn p_dim(&self) -> usize {
        self.np
    }

    pub fn k_dim(&self) -> usize {
        self.f.len()
    }

    /// `[𝔭, 𝔭] = 0`, the case where the map should be the identity.
    pub fn p_is_abelian(&self) -> bool {
        (0..self.np).all(|a| (0..self.np).all(|b| self.adapted.bracket_basis(a, b).iter().all(Scalar::is_zero)))
    }

    /// `f(k_i) = ½ tr_𝔨(ad_{k_i})`.
    pub fn character(&self) -> &[Scalar] {
        &self.f
    }

    /// Rewrites an element given in the original basis into the adapted one.
    pub fn to_adapted(&self, x: &U) -> U {
        evaluate_words(&self.u, x, &|a| self.u.generator(self.position[a as usize]))
    }

    /// Normal form modulo `U𝔤𝔨^f`: each trailing `𝔨` letter `ξ` becomes
    /// `-f(ξ)`. Input and output are in the adapted basis.
    pub fn quotient_reduce(&self, x: &U) -> U {
        let np = self.np as u8;
        x.map_monomials(|w| {
            let cut = w.iter().position(|&l| l >= np).unwrap_or(w.len());
            let mut c = Scalar::one();
            for &l in &w[cut..] {
                c = &c * &(-&self.f[(l - np) as usize]);
            }
            (!c.is_zero()).then(|| (Word::from_slice(&w[..cut]), c))
        })
    }

    /// `J_𝔭^{1/2}(ζ) = exp(½ Σ_k b_{2k} tr((2 ad_ζ)^{2k} |_𝔭))` for `ζ ∈ 𝔭`,
    /// truncated at degree `max_deg`.
    pub fn j_half(&self, max_deg: usize) -> Result<Poly> {
        let table = series_tables(max_deg.max(2))?;
        let p: Vec<usize> = (0..self.np).collect();
        let traces = self.adapted.lie().block_trace_powers(&p, &p, max_deg);
        let mut s = Poly::zero();
        for two_k in (2..=max_deg).step_by(2) {
            let scale = &(table.b(two_k) * Scalar::new(1, 2)) * &Scalar::from_int(2).pow(two_k as u32);
            s.add_scaled(&traces[two_k], &scale);
        }
        Ok(poly_exp(&s, max_deg))
    }

    /// `reduce ∘ Sym ∘ Ĵ_𝔭^{1/2}` on a polynomial on `𝔭`.
    pub fn rouviere_map(&self, p: &Poly) -> Result<U> {
        let d = degree(p).unwrap_or(0);
        let j = self.j_half(d)?;
        Ok(self.quotient_reduce(&self.u.sym(&apply_dual_operator(&j, p))))
    }

    fn ring(&self) -> FreeSuperComm {
        FreeSuperComm::polynomial(self.np)
    }

    /// `ad_{k_i}` on `S𝔭`.
    fn k_action(&self, i: usize, p: &Poly) -> Poly {
        let ring = self.ring();
        let a = self.np + i;
        ring.derivation_extend(
            p,
            crate::element::Parity::Even,
            &|j| ring.even_vector(&self.adapted.lie().bracket_basis(a, j)[..self.np]),
            &|_| Poly::zero(),
        )
    }

    /// Basis of `(S^d 𝔭)^𝔨`.
    pub fn p_invariants(&self, d: usize) -> Vec<Poly> {
        let monos: Vec<ScMono> =
            multisets(self.np, d).into_iter().map(|even| ScMono { even, odd: Word::new() }).collect();
        let actions: Vec<Box<dyn Fn(&Poly) -> Poly + '_>> = (0..self.k_dim())
            .map(|i| Box::new(move |p: &Poly| self.k_action(i, p)) as Box<dyn Fn(&Poly) -> Poly>)
            .collect();
        let refs: Vec<&dyn Fn(&Poly) -> Poly> = actions.iter().map(|b| b.as_ref()).collect();
        invariant_basis(&monos, &refs)
    }

    /// `[k_i, x]` in the quotient.
    fn reduced_action(&self, i: usize, x: &U) -> U {
        self.quotient_reduce(&self.u.ad(self.np + i, x))
    }

    /// With `C = 0` the map is the identity on invariants in the natural
    /// identification of `S𝔭` with `𝔭`-words.
    pub fn identity_check(&self, max_deg: usize) -> Result<Check> {
        let mut results = Vec::new();
        let mut count = 0;
        for d in 1..=max_deg {
            for p in self.p_invariants(d) {
                count += 1;
                let natural: U = p.map_monomials(|m| Some((m.even.clone(), Scalar::one())));
                results.push(compare(&format!("{p:?}"), &self.rouviere_map(&p)?, &natural));
            }
        }
        Ok(Check::from_result(
            format!("{}: rouviere map is the identity", self.name),
            "Sym o J_p^1/2 = id on (Sp)^k when C = 0",
            all_ok(results),
        )
        .with_detail(format!("{count} invariants of degree <= {max_deg}")))
    }

    /// `map(pq) = reduce(map(p) map(q))` for invariants with
    /// `deg p + deg q <= cap`, and every image is invariant in the quotient.
    pub fn multiplicativity_checks(&self, cap: usize) -> Result<Vec<Check>> {
        let ring = self.ring();
        let mut invs: Vec<(usize, Poly, U)> = Vec::new();
        for d in 1..cap {
            for p in self.p_invariants(d) {
                let m = self.rouviere_map(&p)?;
                invs.push((d, p, m));
            }
        }
        let mut results = Vec::new();
        let mut pairs = 0;
        for (dp, p, mp) in &invs {
            for (dq, q, mq) in &invs {
                if dp + dq > cap {
                    continue;
                }
                pairs += 1;
                let lhs = self.rouviere_map(&ring.mul(p, q))?;
                let rhs = self.quotient_reduce(&self.u.mul(mp, mq));
                results.push(compare(&format!("p = {p:?}, q = {q:?}"), &lhs, &rhs));
            }
        }
        let invariance = all_ok(invs.iter().flat_map(|(_, p, m)| {
            (0..self.k_dim())
                .map(move |i| compare(&format!("k_{i} . map({p:?})"), &self.reduced_action(i, m), &U::zero()))
        }));
        Ok(vec![
            Check::from_result(
                format!("{}: rouviere map is multiplicative", self.name),
                "map(pq) = map(p) map(q) in (Ug/Ug k^f)^k",
                all_ok(results),
            )
            .with_detail(format!("{} invariants, {pairs} pairs of total degree <= {cap}", invs.len())),
            Check::from_result(
                format!("{}: rouviere map preserves invariance", self.name),
                "[k, map(p)] = 0 in Ug/Ug k^f",
                invariance,
            ),
        ])
    }

    /// `reduce(x (ξ + f(ξ))) = 0` for every adapted PBW word `x` of length at
    /// most `max_len` and every basis vector `ξ` of `𝔨`.
    pub fn ideal_check(&self, max_len: usize) -> Check {
        let n = self.adapted.dim();
        let gens: Vec<U> =
            (0..self.k_dim()).map(|i| &self.u.generator(self.np + i) + &self.u.scalar(self.f[i].clone())).collect();
        let mut count = 0;
        let r = all_ok((0..=max_len).flat_map(|d| multisets(n, d)).flat_map(|w| {
            count += 1;
            let x = U::monomial(w.clone());
            gens.iter()
                .enumerate()
                .map(|(i, g)| {
                    compare(&format!("{w:?} * k^f_{i}"), &self.quotient_reduce(&self.u.mul(&x, g)), &U::zero())
                })
                .collect::<Vec<_>>()
        }));
        Check::from_result(format!("{}: quotient kills the ideal", self.name), "reduce(x (xi + f(xi))) = 0", r)
            .with_detail(format!("{count} words of length <= {max_len}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    fn pair(name: &str) -> SymmetricPair {
        SymmetricPair::from_entry(&catalog_entry(name).unwrap()).unwrap()
    }

    #[test]
    fn single_reduction() {
        // aff-semidirect: 𝔨 = span(x, y) with [x, y] = y, so f(x) = ½ and f(y) = 0
        let s = pair("aff-semidirect");
        assert_eq!(s.character(), &[Scalar::new(1, 2), Scalar::zero()]);
        let x = s.enveloping().generator(s.p_dim());
        assert_eq!(s.quotient_reduce(&x), s.enveloping().scalar(Scalar::new(-1, 2)));
    }

    #[test]
    fn zero_cubic_is_identity() {
        for name in ["aff-semidirect", "sl2-semidirect"] {
            let c = pair(name).identity_check(3).unwrap();
            assert!(c.passed(), "{} {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn ideal_is_killed() {
        let c = pair("cubic-n3").ideal_check(3);
        assert!(c.passed(), "{:?}", c.witness);
    }

    #[test]
    fn cubic_n3_multiplicative_low_degree() {
        for c in pair("cubic-n3").multiplicativity_checks(3).unwrap() {
            assert!(c.passed(), "{} {:?}", c.name, c.witness);
        }
    }
}
