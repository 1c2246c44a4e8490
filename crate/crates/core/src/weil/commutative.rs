//! The commutative Weil algebra `W𝔤 = S𝔤* ⊗ ∧𝔤*`.
//!
//! Elements are stored in curvature coordinates: even generator `a` is the
//! curvature `μ̂_a`, odd generator `a` is the connection `μ_a = ε^a`. The
//! Koszul coordinates replace `μ̂_a` by `μ̄_a = μ̂_a + λ(μ_a)`; both use the
//! same monomial type, so callers must know which presentation they hold.

use crate::algebra::SuperAlgebra;
use crate::clifford::lambda;
use crate::element::{Element, Parity};
use crate::error::Result;
use crate::liealg::{unit_vector, LieAlgebra, QuadraticLieAlgebra};
use crate::scalar::Scalar;
use crate::supercomm::{FreeSuperComm, ScMono};

pub type W = Element<ScMono>;

#[derive(Clone, Debug)]
pub struct WeilAlgebra {
    lie: LieAlgebra,
    ring: FreeSuperComm,
    /// `λ(μ_c)`, quadratic in the odd generators.
    lam: Vec<W>,
    /// `d λ(μ_c)` in curvature coordinates.
    dlam: Vec<W>,
}

impl WeilAlgebra {
    pub fn new(lie: &LieAlgebra) -> Self {
        let n = lie.dim();
        let ring = FreeSuperComm::new(n, n);
        let lam: Vec<W> = (0..n).map(|c| lambda(lie, &unit_vector(n, c))).collect();
        let dmu: Vec<W> = (0..n).map(|a| &ring.even(a) + &lam[a]).collect();
        let dlam =
            lam.iter().map(|l| ring.derivation_extend(l, Parity::Odd, &|_| W::zero(), &|a| dmu[a].clone())).collect();
        WeilAlgebra { lie: lie.clone(), ring, lam, dlam }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn ring(&self) -> &FreeSuperComm {
        &self.ring
    }

    /// Connection generator `μ_a`.
    pub fn mu(&self, a: usize) -> W {
        self.ring.odd(a)
    }

    /// Curvature generator `μ̂_a` (curvature coordinates) or `μ̄_a` (Koszul).
    pub fn mu_even(&self, a: usize) -> W {
        self.ring.even(a)
    }

    pub fn lambda_of(&self, c: usize) -> &W {
        &self.lam[c]
    }

    /// `L_{e_b} μ_a = -Σ_l c_{bl}^a μ_l`; the same rule holds for the even
    /// generators in either presentation.
    fn coadjoint(&self, b: usize, a: usize, odd: bool) -> W {
        (0..self.dim())
            .filter(|&l| !self.lie.structure(b, l, a).is_zero())
            .map(|l| {
                let m = if odd { ScMono::odd_gen(l) } else { ScMono::even_gen(l) };
                (m, -self.lie.structure(b, l, a))
            })
            .collect()
    }

    pub fn d(&self, x: &W) -> W {
        self.ring.derivation_extend(x, Parity::Odd, &|a| -&self.dlam[a], &|a| &self.ring.even(a) + &self.lam[a])
    }

    /// `ι_{e_b}`: `μ_a ↦ δ_ab`, curvature is horizontal.
    pub fn iota(&self, b: usize, x: &W) -> W {
        self.ring.derivation_extend(x, Parity::Odd, &|_| W::zero(), &|a| {
            if a == b {
                self.ring.one()
            } else {
                W::zero()
            }
        })
    }

    pub fn lie_derivative(&self, b: usize, x: &W) -> W {
        self.ring.derivation_extend(x, Parity::Even, &|a| self.coadjoint(b, a, false), &|a| self.coadjoint(b, a, true))
    }

    /// Curvature to Koszul coordinates: `μ̂_a ↦ μ̄_a - λ(μ_a)`.
    pub fn to_koszul(&self, x: &W) -> W {
        self.ring.hom_extend(&self.ring, x, &|a| &self.ring.even(a) - &self.lam[a], &|a| self.ring.odd(a))
    }

    /// Koszul to curvature coordinates: `μ̄_a ↦ μ̂_a + λ(μ_a)`.
    pub fn from_koszul(&self, x: &W) -> W {
        self.ring.hom_extend(&self.ring, x, &|a| &self.ring.even(a) + &self.lam[a], &|a| self.ring.odd(a))
    }

    /// Koszul differential `μ ↦ μ̄ ↦ 0`.
    pub fn koszul_d(&self, x: &W) -> W {
        self.ring.derivation_extend(x, Parity::Odd, &|_| W::zero(), &|a| self.ring.even(a))
    }

    /// Deformed contraction in Koszul coordinates: `ι^t μ_a = t δ_ab`,
    /// `ι^t μ̄_a = L_{e_b} μ_a`.
    pub fn koszul_iota_t(&self, b: usize, t: &Scalar, x: &W) -> W {
        self.ring.derivation_extend(x, Parity::Odd, &|a| self.coadjoint(b, a, true), &|a| {
            if a == b {
                self.ring.scalar(t.clone())
            } else {
                W::zero()
            }
        })
    }

    pub fn koszul_iota(&self, b: usize, x: &W) -> W {
        self.koszul_iota_t(b, &Scalar::one(), x)
    }

    /// Same formula as [`WeilAlgebra::lie_derivative`]; provided for symmetry.
    pub fn koszul_lie_derivative(&self, b: usize, x: &W) -> W {
        self.lie_derivative(b, x)
    }

    /// Koszul homotopy `h` on Koszul coordinates: the odd derivation
    /// `s: μ̄ ↦ μ` divided by word length, with `h(1) = 0`.
    pub fn koszul_homotopy(&self, x: &W) -> W {
        let mut out = W::zero();
        for (m, c) in x {
            if m.is_empty() {
                continue;
            }
            let s = self
                .ring
                .derivation_extend(&W::monomial(m.clone()), Parity::Odd, &|a| self.ring.odd(a), &|_| W::zero());
            out.add_scaled(&s, &(c * &Scalar::new(1, m.len() as i64)));
        }
        out
    }

    /// Homotopy on curvature coordinates, conjugated through the Koszul ones.
    pub fn homotopy(&self, x: &W) -> W {
        self.from_koszul(&self.koszul_homotopy(&self.to_koszul(x)))
    }

    /// Inclusion of scalars after augmentation: keeps the constant term.
    pub fn augmentation(&self, x: &W) -> Scalar {
        self.ring.scalar_part(x)
    }
}

impl SuperAlgebra for WeilAlgebra {
    type Mono = ScMono;

    fn parity(&self, m: &ScMono) -> Parity {
        m.parity()
    }

    fn unit_mono(&self) -> ScMono {
        ScMono::one()
    }

    fn mul_mono(&self, a: &ScMono, b: &ScMono) -> W {
        self.ring.mul_mono(a, b)
    }
}

/// `Σ_a ê_a ê^a = Σ_{a,b} B_ab μ̂_a μ̂_b`, the quadratic Casimir in `S𝔤* ⊂ W𝔤`.
pub fn casimir_curvature(g: &QuadraticLieAlgebra, w: &WeilAlgebra) -> W {
    let n = g.dim();
    let mut out = W::zero();
    for a in 0..n {
        for b in 0..n {
            if !g.b(a, b).is_zero() {
                out.add_scaled(&w.mul(&w.mu_even(a), &w.mu_even(b)), g.b(a, b));
            }
        }
    }
    out
}

/// Transgression `h(Σ_a ê_a ê^a)` and the closed form
/// `Σ_a ē_a e^a - (2/3) Σ_a λ(e_a) e^a`, both in curvature coordinates.
pub struct Transgression {
    pub casimir: W,
    pub from_homotopy: W,
    pub closed_form: W,
}

pub fn transgression(g: &QuadraticLieAlgebra, w: &WeilAlgebra) -> Result<Transgression> {
    g.dual_matrix()?;
    let n = g.dim();
    let casimir = casimir_curvature(g, w);
    let from_homotopy = w.homotopy(&casimir);
    // ē_a = Σ_b B_ab μ̄_b, e^a ↦ μ_a
    let mut closed_form = W::zero();
    for a in 0..n {
        for b in 0..n {
            let bab = g.b(a, b);
            if bab.is_zero() {
                continue;
            }
            let bar = &w.mu_even(b) + w.lambda_of(b);
            let term = &w.mul(&bar, &w.mu(a)) - &w.mul(w.lambda_of(b), &w.mu(a)).scale(&Scalar::new(2, 3));
            closed_form.add_scaled(&term, bab);
        }
    }
    Ok(Transgression { casimir, from_homotopy, closed_form })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    fn sl2_weil() -> (QuadraticLieAlgebra, WeilAlgebra) {
        let g = catalog_entry("sl2").unwrap().algebra;
        let w = WeilAlgebra::new(g.lie());
        (g, w)
    }

    #[test]
    fn d_squares_to_zero_and_cartan_relation() {
        let (_, w) = sl2_weil();
        for m in w.ring().monomials_up_to(3) {
            let x = W::monomial(m);
            assert!(w.d(&w.d(&x)).is_zero());
            for b in 0..3 {
                let lhs = &w.d(&w.iota(b, &x)) + &w.iota(b, &w.d(&x));
                assert_eq!(lhs, w.lie_derivative(b, &x));
            }
        }
    }

    #[test]
    fn presentations_agree() {
        let (_, w) = sl2_weil();
        for m in w.ring().monomials_up_to(3) {
            let x = W::monomial(m);
            assert_eq!(w.from_koszul(&w.to_koszul(&x)), x);
            assert_eq!(w.to_koszul(&w.d(&x)), w.koszul_d(&w.to_koszul(&x)));
            for b in 0..3 {
                assert_eq!(w.to_koszul(&w.iota(b, &x)), w.koszul_iota(b, &w.to_koszul(&x)));
            }
        }
    }

    #[test]
    fn homotopy_identity() {
        let (_, w) = sl2_weil();
        assert!(w.koszul_homotopy(&w.ring().one()).is_zero());
        assert_eq!(w.koszul_homotopy(&w.mu_even(1)), w.mu(1));
        for m in w.ring().monomials_up_to(3).into_iter().filter(|m| !m.is_empty()) {
            let x = W::monomial(m);
            let dh = &w.koszul_d(&w.koszul_homotopy(&x)) + &w.koszul_homotopy(&w.koszul_d(&x));
            assert_eq!(dh, x);
        }
    }

    #[test]
    fn transgression_closed_form() {
        let (g, w) = sl2_weil();
        let t = transgression(&g, &w).unwrap();
        assert_eq!(t.from_homotopy, t.closed_form);
        assert_eq!(w.d(&t.from_homotopy), t.casimir);
    }
}
