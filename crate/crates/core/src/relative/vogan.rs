//! Quadratic subalgebras: the embedding `𝒲𝔨 → 𝒲𝔤`, the map `χ`, the
//! relative Dirac element `𝒟_{𝔤,𝔨} = 𝒟_𝔤 - 𝒟_𝔨` and its cocycle property.

use std::sync::Arc;

use crate::algebra::SuperAlgebra;
use crate::enveloping::{casimir, U};
use crate::error::{Error, Result};
use crate::liealg::{unit_vector, CatalogEntry, QuadraticLieAlgebra};
use crate::report::{all_ok, compare, Check};
use crate::scalar::Scalar;
use crate::weil::{Nc, NcWeil};

use super::{adapted, check_indices, evaluate_words, orthogonal};

pub struct RelativePair {
    g: Arc<NcWeil>,
    k: Arc<NcWeil>,
    k_idx: Vec<usize>,
    p_idx: Vec<usize>,
    /// `1 ⊗ γ^𝔭(k_i)`.
    gamma_p: Vec<Nc>,
    /// `ζ̂ + γ^𝔭(ζ)` for each basis vector of `𝔨`.
    hat_images: Vec<Nc>,
    dirac: Nc,
}

impl RelativePair {
    /// `k_idx` lists the basis vectors spanning `𝔨`; `𝔭` is spanned by the
    /// rest and must be its orthogonal complement.
    pub fn new(g: &QuadraticLieAlgebra, k_idx: &[usize]) -> Result<Self> {
        let n = g.dim();
        check_indices(n, k_idx)?;
        let p_idx: Vec<usize> = (0..n).filter(|i| !k_idx.contains(i)).collect();
        let lie = g.lie();
        if !lie.is_subalgebra(k_idx) {
            return Err(Error::Invalid(format!("{k_idx:?} does not span a subalgebra")));
        }
        if !lie.maps_into(k_idx, &p_idx, &p_idx) {
            return Err(Error::Invalid("complement is not stable under the subalgebra".into()));
        }
        if !orthogonal(g, k_idx, &p_idx) {
            return Err(Error::Invalid("complement is not orthogonal to the subalgebra".into()));
        }
        let sub = g.restrict(k_idx)?.with_name(format!("{}|k", g.name));
        if !sub.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let big = Arc::new(NcWeil::new(g)?);
        let small = Arc::new(NcWeil::new(&sub)?);

        let dual_p = g.form().submatrix(&p_idx, &p_idx).inverse()?;
        let cl = big.clifford();
        let lift = |coords: &[Scalar]| {
            let mut v = vec![Scalar::zero(); n];
            for (&i, c) in p_idx.iter().zip(coords) {
                v[i] = c.clone();
            }
            v
        };
        let mut gamma_p = Vec::with_capacity(k_idx.len());
        let mut hat_images = Vec::with_capacity(k_idx.len());
        for &a in k_idx {
            // ½ Σ_i [ζ, f_i] f^i over a basis of 𝔭 and its dual within 𝔭
            let mut gp = crate::clifford::Cl::zero();
            for (i, &fi) in p_idx.iter().enumerate() {
                let br = lie.bracket_basis(a, fi);
                if br.iter().all(Scalar::is_zero) {
                    continue;
                }
                gp += &cl.mul(&cl.vector(&br), &cl.vector(&lift(&dual_p.row(i))));
            }
            let gp = big.from_cl(&gp.scale(&Scalar::new(1, 2)));
            hat_images.push(&big.hat(&unit_vector(n, a)) + &gp);
            gamma_p.push(gp);
        }
        let mut out =
            RelativePair { g: big, k: small, k_idx: k_idx.to_vec(), p_idx, gamma_p, hat_images, dirac: Nc::zero() };
        out.dirac = out.g.dirac() - &out.embed(out.k.dirac());
        Ok(out)
    }

    pub fn from_entry(entry: &CatalogEntry) -> Result<Self> {
        let (g, dec) = adapted(entry, |e| e.decomposition.as_ref())?;
        RelativePair::new(&g, &dec.k)
    }

    pub fn ambient(&self) -> &NcWeil {
        &self.g
    }

    pub fn sub(&self) -> &NcWeil {
        &self.k
    }

    pub fn k_indices(&self) -> &[usize] {
        &self.k_idx
    }

    pub fn p_indices(&self) -> &[usize] {
        &self.p_idx
    }

    /// `1 ⊗ γ^𝔭(k_i)` for the `i`-th basis vector of `𝔨`.
    pub fn gamma_p(&self, i: usize) -> &Nc {
        &self.gamma_p[i]
    }

    fn k_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.g.dim(), self.k_idx[i])
    }

    /// The algebra map `𝒲𝔨 → 𝒲𝔤` with `ζ ↦ ζ` and `ζ̂ ↦ ζ̂ + γ^𝔭(ζ)`.
    pub fn embed(&self, x: &Nc) -> Nc {
        let mut out = Nc::zero();
        for ((u, c), coef) in x {
            let mut acc = self.g.one();
            for &i in u {
                acc = self.g.mul(&acc, &self.hat_images[i as usize]);
            }
            for &i in c {
                acc = self.g.mul(&acc, &self.g.odd(&self.k_vector(i as usize)));
            }
            out.add_scaled(&acc, coef);
        }
        out
    }

    /// `χ: U𝔨 → U𝔤 ⊗ Cl(𝔭)`.
    pub fn chi(&self, z: &U) -> Nc {
        evaluate_words(self.g.as_ref(), z, &|i| self.hat_images[i as usize].clone())
    }

    /// `𝒟_{𝔤,𝔨}`.
    pub fn dirac(&self) -> &Nc {
        &self.dirac
    }

    /// `𝒟_{𝔤,𝔨}` is 𝔨-basic, and
    /// `𝒟_{𝔤,𝔨}² = ½ Cas_𝔤 - ½ χ(Cas_𝔨) + (tr_𝔤 - tr_𝔨)/48`.
    pub fn dirac_checks(&self) -> Result<Vec<Check>> {
        let name = &self.g.algebra().name;
        let (cas_g, tr_g) = casimir(self.g.algebra(), self.g.enveloping())?;
        let (cas_k, tr_k) = casimir(self.k.algebra(), self.k.enveloping())?;
        let half = Scalar::new(1, 2);
        let rhs = &(&self.g.from_u(&cas_g).scale(&half) - &self.chi(&cas_k).scale(&half))
            + &self.g.one().scale(&(&(&tr_g - &tr_k) * &Scalar::new(1, 48)));
        let sq = self.g.mul(&self.dirac, &self.dirac);
        let square = Check::from_result(
            format!("{name}: relative dirac square"),
            "D_{g,k}^2 = 1/2 Cas_g - 1/2 chi(Cas_k) + (tr_g - tr_k)/48",
            compare("D_{g,k}^2", &sq, &rhs),
        )
        .with_detail(format!("tr_g = {tr_g}, tr_k = {tr_k}"));
        let basic = all_ok((0..self.k_idx.len()).map(|i| {
            let v = self.k_vector(i);
            let z = Nc::zero();
            compare(&format!("iota k_{i}"), &self.g.iota(&v, &self.dirac), &z)?;
            compare(&format!("L k_{i}"), &self.g.lie_derivative(&v, &self.dirac), &z)
        }));
        let basic =
            Check::from_result(format!("{name}: relative dirac is k-basic"), "i_k D_{g,k} = L_k D_{g,k} = 0", basic);
        Ok(vec![square, basic])
    }

    /// `[𝒟_{𝔤,𝔨}, χ(z)] = 0` for each 𝔨-invariant `z`; inputs are checked
    /// for invariance first.
    pub fn vogan_checks(&self, zs: &[(String, U)]) -> Vec<Check> {
        let name = &self.g.algebra().name;
        zs.iter()
            .map(|(label, z)| {
                let anchor = "[D_{g,k}, chi(z)] = 0 for z in (Uk)^k";
                let check_name = format!("{name}: vogan cocycle z = {label}");
                if !self.k.enveloping().is_central(z) {
                    return Check::fail(check_name, anchor, format!("input {label} is not k-invariant"));
                }
                let br = self.g.commutator(&self.dirac, &self.chi(z));
                Check::from_result(check_name, anchor, compare(label, &br, &Nc::zero()))
            })
            .collect()
    }

    /// Vogan checks for `1`, `Cas_𝔨` and `Cas_𝔨²`.
    pub fn standard_vogan_checks(&self) -> Result<Vec<Check>> {
        let u = self.k.enveloping();
        let (cas, _) = casimir(self.k.algebra(), u)?;
        let zs = vec![
            ("1".to_string(), u.one()),
            ("Cas_k".to_string(), cas.clone()),
            ("Cas_k^2".to_string(), u.mul(&cas, &cas)),
        ];
        Ok(self.vogan_checks(&zs))
    }

    /// The embedding is multiplicative on pairs of `𝒲𝔨` monomials and its
    /// image commutes with `𝒟_{𝔤,𝔨}`, for monomials of length at most
    /// `max_len`.
    pub fn commutant_checks(&self, max_len: usize) -> Vec<Check> {
        let name = &self.g.algebra().name;
        let monos = self.k.monomials_up_to(max_len);
        let embedded: Vec<Nc> = monos.iter().map(|m| self.embed(&Nc::monomial(m.clone()))).collect();
        let commutes = all_ok(
            monos
                .iter()
                .zip(&embedded)
                .map(|(m, e)| compare(&format!("{m:?}"), &self.g.commutator(&self.dirac, e), &Nc::zero())),
        );
        let small: Vec<usize> =
            (0..monos.len()).filter(|&i| monos[i].0.len() + monos[i].1.len() <= max_len.min(2)).collect();
        let hom = all_ok(small.iter().flat_map(|&i| small.iter().map(move |&j| (i, j))).map(|(i, j)| {
            let prod = self.k.mul(&Nc::monomial(monos[i].clone()), &Nc::monomial(monos[j].clone()));
            compare(
                &format!("{:?} * {:?}", monos[i], monos[j]),
                &self.embed(&prod),
                &self.g.mul(&embedded[i], &embedded[j]),
            )
        }));
        vec![
            Check::from_result(format!("{name}: embedding is multiplicative"), "embed(xy) = embed(x) embed(y)", hom),
            Check::from_result(
                format!("{name}: relative dirac commutes with embedded Wk"),
                "[D_{g,k}, embed(x)] = 0",
                commutes,
            )
            .with_detail(format!("{} monomials of length <= {max_len}", monos.len())),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    fn sl2_cartan() -> RelativePair {
        RelativePair::from_entry(&catalog_entry("sl2").unwrap()).unwrap()
    }

    #[test]
    fn gamma_p_of_h() {
        // γ^𝔭(h) = ½([h,e] f + [h,f] e) = e f - f e in Cl(span(e, f))
        let r = sl2_cartan();
        let g = r.ambient();
        let (e, f) = (g.odd(&unit_vector(3, 0)), g.odd(&unit_vector(3, 2)));
        assert_eq!(r.gamma_p(0), &(&g.mul(&e, &f) - &g.mul(&f, &e)));
    }

    #[test]
    fn sl2_cartan_dirac_and_cocycles() {
        let r = sl2_cartan();
        for c in r.dirac_checks().unwrap().into_iter().chain(r.standard_vogan_checks().unwrap()) {
            assert!(c.passed(), "{} {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn whole_algebra_gives_zero() {
        let g = catalog_entry("sl2").unwrap().algebra;
        let r = RelativePair::new(&g, &[0, 1, 2]).unwrap();
        assert!(r.dirac().is_zero());
        let x = &r.sub().hat(&unit_vector(3, 0)) + &r.sub().odd(&unit_vector(3, 1));
        assert_eq!(r.embed(&x), x);
    }

    #[test]
    fn isotropic_line_is_rejected() {
        let g = catalog_entry("abelian2").unwrap().algebra;
        assert!(RelativePair::new(&g, &[0]).is_err());
    }

    #[test]
    fn non_invariant_input_is_reported() {
        let g = catalog_entry("sl2").unwrap().algebra;
        let r = RelativePair::new(&g, &[0, 1, 2]).unwrap();
        let z = r.sub().enveloping().generator(0);
        let c = &r.vogan_checks(&[("e".into(), z)])[0];
        assert!(!c.passed());
        assert!(c.witness.as_deref().unwrap().contains("not k-invariant"));
    }
}
