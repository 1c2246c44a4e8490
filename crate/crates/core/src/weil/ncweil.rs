//! The noncommutative Weil algebra `𝒲𝔤 ≅ U𝔤 ⊗ Cl(𝔤)`, its inner
//! derivations, the cubic Dirac element and the quantization map `Q`.
//!
//! The `U𝔤` factor is generated by `ξ̂ = ξ̄ - γ(ξ)`; it is entirely even,
//! so the tensor product never produces signs.

use dashmap::DashMap;

use crate::algebra::{SuperAlgebra, Tensor};
use crate::clifford::{gamma, Cl, Clifford};
use crate::element::{Element, Parity};
use crate::enveloping::{casimir, Enveloping, U};
use crate::error::Result;
use crate::liealg::{unit_vector, QuadraticLieAlgebra};
use crate::matrix::Matrix;
use crate::report::{all_ok, compare, Check};
use crate::rewrite::Word;
use crate::scalar::Scalar;
use crate::supercomm::{multisets, subsets, ScMono};

use super::commutative::{casimir_curvature, WeilAlgebra, W};

pub type NcMono = (Word, Word);
pub type Nc = Element<NcMono>;

pub struct NcWeil {
    g: QuadraticLieAlgebra,
    alg: Tensor<Enveloping, Clifford>,
    dual: Matrix,
    weil: WeilAlgebra,
    /// `1 ⊗ γ(e_a)`.
    gammas: Vec<Nc>,
    dirac: Nc,
    /// Quantized Koszul monomials.
    memo: DashMap<ScMono, Nc>,
}

impl NcWeil {
    pub fn new(g: &QuadraticLieAlgebra) -> Result<Self> {
        let dual = g.dual_matrix()?.clone();
        let u = Enveloping::new(g.lie());
        let cl = Clifford::new(g.form());
        let n = g.dim();
        let mut gammas = Vec::with_capacity(n);
        for a in 0..n {
            let ga = gamma(g, &cl, &unit_vector(n, a))?;
            gammas.push(crate::algebra::tensor_elements(&u.one(), &ga));
        }
        let mut out = NcWeil {
            g: g.clone(),
            alg: Tensor::new(u, cl),
            dual,
            weil: WeilAlgebra::new(g.lie()),
            gammas,
            dirac: Nc::zero(),
            memo: DashMap::new(),
        };
        out.dirac = out.build_dirac();
        Ok(out)
    }

    pub fn algebra(&self) -> &QuadraticLieAlgebra {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn weil(&self) -> &WeilAlgebra {
        &self.weil
    }

    pub fn enveloping(&self) -> &Enveloping {
        &self.alg.left
    }

    pub fn clifford(&self) -> &Clifford {
        &self.alg.right
    }

    /// Row `a` of the inverse form: coordinates of `e^a`.
    pub fn dual_coords(&self, a: usize) -> Vec<Scalar> {
        self.dual.row(a)
    }

    pub fn from_u(&self, x: &U) -> Nc {
        self.alg.left_factor(x)
    }

    pub fn from_cl(&self, x: &Cl) -> Nc {
        self.alg.right_factor(x)
    }

    /// `1 ⊗ ζ`.
    pub fn odd(&self, v: &[Scalar]) -> Nc {
        self.from_cl(&self.clifford().vector(v))
    }

    /// `ζ̂ ⊗ 1`.
    pub fn hat(&self, v: &[Scalar]) -> Nc {
        self.from_u(&self.enveloping().vector(v))
    }

    /// `1 ⊗ γ(ζ)`.
    pub fn gamma(&self, v: &[Scalar]) -> Nc {
        let mut out = Nc::zero();
        for (a, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.gammas[a], c);
            }
        }
        out
    }

    /// `ζ̄ = ζ̂ + γ(ζ)`.
    pub fn bar(&self, v: &[Scalar]) -> Nc {
        &self.hat(v) + &self.gamma(v)
    }

    fn basis(&self, a: usize) -> Vec<Scalar> {
        unit_vector(self.dim(), a)
    }

    /// `Σ_a ē_a e^a - (2/3) Σ_a γ(e_a) e^a`.
    fn build_dirac(&self) -> Nc {
        let mut out = Nc::zero();
        for a in 0..self.dim() {
            let upper = self.odd(&self.dual_coords(a));
            out += &self.mul(&self.bar(&self.basis(a)), &upper);
            out -= &self.mul(&self.gammas[a], &upper).scale(&Scalar::new(2, 3));
        }
        out
    }

    pub fn dirac(&self) -> &Nc {
        &self.dirac
    }

    /// `ι_ζ = [1 ⊗ ζ, ·]`.
    pub fn iota(&self, v: &[Scalar], x: &Nc) -> Nc {
        self.commutator(&self.odd(v), x)
    }

    /// `L_ζ = [ζ̄, ·]`.
    pub fn lie_derivative(&self, v: &[Scalar], x: &Nc) -> Nc {
        self.commutator(&self.bar(v), x)
    }

    /// `d = [𝒟, ·]`.
    pub fn d(&self, x: &Nc) -> Nc {
        self.commutator(&self.dirac, x)
    }

    /// The quantization map `Q: W𝔤 → 𝒲𝔤` on an element in curvature
    /// coordinates. Koszul generators are identified with `𝔤` through `B`:
    /// `μ_a ↦ 1⊗e^a`, `μ̄_a ↦ ê^a + γ(e^a)`.
    pub fn quantize(&self, x: &W) -> Nc {
        self.quantize_koszul(&self.weil.to_koszul(x))
    }

    /// Factorized monomials `(U word, Cl word)` of total length at most
    /// `max_len`, in a fixed order.
    pub fn monomials_up_to(&self, max_len: usize) -> Vec<NcMono> {
        let n = self.dim();
        let mut out = Vec::new();
        for total in 0..=max_len {
            for cl_len in 0..=total.min(n) {
                for c in subsets(n, cl_len) {
                    for u in multisets(n, total - cl_len) {
                        out.push((u, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn quantize_koszul(&self, x: &W) -> Nc {
        let ring = *self.weil.ring();
        let even = |a: usize| self.bar(&self.dual_coords(a));
        let odd = |a: usize| self.odd(&self.dual_coords(a));
        let mut memo = &self.memo;
        let mut out = Nc::zero();
        for (m, c) in x {
            let s = ring.symmetrize_into(self, m, &even, &odd, &mut memo);
            out.add_scaled(&s, c);
        }
        out
    }
}

impl SuperAlgebra for NcWeil {
    type Mono = NcMono;

    fn parity(&self, m: &NcMono) -> Parity {
        self.alg.parity(m)
    }

    fn unit_mono(&self) -> NcMono {
        self.alg.unit_mono()
    }

    fn mul_mono(&self, a: &NcMono, b: &NcMono) -> Nc {
        self.alg.mul_mono(a, b)
    }
}

/// `𝒟² = ½ Cas ⊗ 1 + (1/48) tr(Cas)` and `Q(Σ_a ê_a ê^a) = Cas + (1/24) tr(Cas)`.
pub fn dirac_square_checks(nc: &NcWeil) -> Result<Vec<Check>> {
    let g = nc.algebra();
    let (cas, tr) = casimir(g, nc.enveloping())?;
    let cas = nc.from_u(&cas);
    let unit = nc.one();
    let sq = nc.mul(nc.dirac(), nc.dirac());
    let rhs = &cas.scale(&Scalar::new(1, 2)) + &unit.scale(&(&tr * &Scalar::new(1, 48)));
    let square = Check::from_result(
        format!("{}: dirac square", g.name),
        "D^2 = 1/2 Cas + 1/48 tr(Cas)",
        compare("D*D", &sq, &rhs),
    )
    .with_detail(format!("tr(Cas) = {tr}"));

    let q = nc.quantize(&casimir_curvature(g, nc.weil()));
    let rhs = &cas + &unit.scale(&(&tr * &Scalar::new(1, 24)));
    let quant = Check::from_result(
        format!("{}: quantized casimir", g.name),
        "Q(sum_a hat e_a hat e^a) = Cas + 1/24 tr(Cas)",
        compare("sum_a hat e_a hat e^a", &q, &rhs),
    );
    Ok(vec![square, quant])
}

/// `Q∘d = d∘Q`, `Q∘ι = ι∘Q`, `Q∘L = L∘Q` on every curvature monomial of word
/// length at most `max_len`.
pub fn quantization_chain_checks(nc: &NcWeil, max_len: usize) -> Vec<Check> {
    let w = nc.weil();
    let n = nc.dim();
    let monos = w.ring().monomials_up_to(max_len);
    let name = &nc.algebra().name;
    let run = |op: &dyn Fn(&ScMono) -> std::result::Result<(), String>| all_ok(monos.iter().map(op));
    let d = run(&|m| {
        let x = W::monomial(m.clone());
        compare(&format!("{m:?}"), &nc.quantize(&w.d(&x)), &nc.d(&nc.quantize(&x)))
    });
    let iota = run(&|m| {
        let x = W::monomial(m.clone());
        let qx = nc.quantize(&x);
        all_ok((0..n).map(|b| {
            // ι_{e_b} on W corresponds to contraction by e_b on 𝒲
            compare(&format!("{m:?}, b={b}"), &nc.quantize(&w.iota(b, &x)), &nc.iota(&unit_vector(n, b), &qx))
        }))
    });
    let lie = run(&|m| {
        let x = W::monomial(m.clone());
        let qx = nc.quantize(&x);
        all_ok((0..n).map(|b| {
            compare(
                &format!("{m:?}, b={b}"),
                &nc.quantize(&w.lie_derivative(b, &x)),
                &nc.lie_derivative(&unit_vector(n, b), &qx),
            )
        }))
    });
    let detail = format!("{} monomials of length <= {max_len}", monos.len());
    vec![
        Check::from_result(format!("{name}: Q commutes with d"), "Q(dw) = [D, Q(w)]", d).with_detail(detail.clone()),
        Check::from_result(format!("{name}: Q commutes with iota"), "Q(i_x w) = [x, Q(w)]", iota)
            .with_detail(detail.clone()),
        Check::from_result(format!("{name}: Q commutes with L"), "Q(L_x w) = [bar x, Q(w)]", lie).with_detail(detail),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    fn nc(name: &str) -> NcWeil {
        NcWeil::new(&catalog_entry(name).unwrap().algebra).unwrap()
    }

    #[test]
    fn generator_relations() {
        let w = nc("sl2");
        let (e, f) = (unit_vector(3, 0), unit_vector(3, 2));
        let anti = &w.mul(&w.odd(&e), &w.odd(&f)) + &w.mul(&w.odd(&f), &w.odd(&e));
        assert_eq!(anti, w.one());
        assert!(w.commutator(&w.hat(&e), &w.odd(&f)).is_zero());
        assert_eq!(w.commutator(&w.hat(&e), &w.hat(&f)), w.hat(&unit_vector(3, 1)));
    }

    #[test]
    fn dirac_generates_the_differential() {
        let w = nc("sl2");
        for a in 0..3 {
            let v = unit_vector(3, a);
            assert_eq!(w.d(&w.odd(&v)), w.bar(&v));
            assert!(w.lie_derivative(&v, w.dirac()).is_zero());
        }
    }

    #[test]
    fn dirac_square() {
        for name in ["abelian2", "sl2", "heis1"] {
            for c in dirac_square_checks(&nc(name)).unwrap() {
                assert!(c.passed(), "{} {:?}", c.name, c.witness);
            }
        }
    }

    #[test]
    fn quantization_on_generators() {
        let w = nc("sl2");
        let dual = w.dual_coords(1);
        assert_eq!(w.quantize_koszul(&w.weil().mu(1)), w.odd(&dual));
        assert_eq!(w.quantize_koszul(&w.weil().mu_even(1)), w.bar(&dual));
    }

    #[test]
    fn quantization_is_a_chain_map_low_degree() {
        for c in quantization_chain_checks(&nc("sl2"), 3) {
            assert!(c.passed(), "{} {:?}", c.name, c.witness);
        }
    }
}
