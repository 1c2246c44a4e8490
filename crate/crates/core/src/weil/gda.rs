//! 𝔤-differential algebras with connection, and characteristic maps out of
//! the commutative Weil algebra.

use std::sync::Arc;

use crate::algebra::{symmetrize, tensor_elements, SuperAlgebra, Tensor};
use crate::element::{Element, Parity};
use crate::error::Result;
use crate::liealg::unit_vector;
use crate::supercomm::ScMono;

use super::commutative::{WeilAlgebra, W};
use super::ncweil::{Nc, NcWeil};

/// A super algebra with `d`, `ι_b`, `L_b` along basis vectors `e_b` and a
/// connection `θ(μ_a)`.
pub trait Gda: SuperAlgebra {
    /// Dimension of the acting Lie algebra.
    fn lie_dim(&self) -> usize;
    fn d(&self, x: &Element<Self::Mono>) -> Element<Self::Mono>;
    fn iota(&self, b: usize, x: &Element<Self::Mono>) -> Element<Self::Mono>;
    fn lie_derivative(&self, b: usize, x: &Element<Self::Mono>) -> Element<Self::Mono>;
    /// `θ(ε^a)`, odd with `ι_b θ(ε^a) = δ_ab`.
    fn connection(&self, a: usize) -> Element<Self::Mono>;
}

/// `W𝔤` in Koszul coordinates, with its tautological connection.
pub struct KoszulWeil<'a>(pub &'a WeilAlgebra);

impl SuperAlgebra for KoszulWeil<'_> {
    type Mono = ScMono;
    fn parity(&self, m: &ScMono) -> Parity {
        m.parity()
    }
    fn unit_mono(&self) -> ScMono {
        ScMono::one()
    }
    fn mul_mono(&self, a: &ScMono, b: &ScMono) -> W {
        self.0.mul_mono(a, b)
    }
}

impl Gda for KoszulWeil<'_> {
    fn lie_dim(&self) -> usize {
        self.0.dim()
    }
    fn d(&self, x: &W) -> W {
        self.0.koszul_d(x)
    }
    fn iota(&self, b: usize, x: &W) -> W {
        self.0.koszul_iota(b, x)
    }
    fn lie_derivative(&self, b: usize, x: &W) -> W {
        self.0.koszul_lie_derivative(b, x)
    }
    fn connection(&self, a: usize) -> W {
        self.0.mu(a)
    }
}

/// `W𝔤` in curvature coordinates.
impl Gda for WeilAlgebra {
    fn lie_dim(&self) -> usize {
        self.dim()
    }
    fn d(&self, x: &W) -> W {
        WeilAlgebra::d(self, x)
    }
    fn iota(&self, b: usize, x: &W) -> W {
        WeilAlgebra::iota(self, b, x)
    }
    fn lie_derivative(&self, b: usize, x: &W) -> W {
        WeilAlgebra::lie_derivative(self, b, x)
    }
    fn connection(&self, a: usize) -> W {
        self.mu(a)
    }
}

/// `𝒲𝔤` with `θ(ε^a) = e^a`.
impl Gda for NcWeil {
    fn lie_dim(&self) -> usize {
        self.dim()
    }
    fn d(&self, x: &Nc) -> Nc {
        NcWeil::d(self, x)
    }
    fn iota(&self, b: usize, x: &Nc) -> Nc {
        NcWeil::iota(self, &unit_vector(self.dim(), b), x)
    }
    fn lie_derivative(&self, b: usize, x: &Nc) -> Nc {
        NcWeil::lie_derivative(self, &unit_vector(self.dim(), b), x)
    }
    fn connection(&self, a: usize) -> Nc {
        self.odd(&self.dual_coords(a))
    }
}

impl<T: Gda + ?Sized> Gda for Arc<T> {
    fn lie_dim(&self) -> usize {
        (**self).lie_dim()
    }
    fn d(&self, x: &Element<T::Mono>) -> Element<T::Mono> {
        (**self).d(x)
    }
    fn iota(&self, b: usize, x: &Element<T::Mono>) -> Element<T::Mono> {
        (**self).iota(b, x)
    }
    fn lie_derivative(&self, b: usize, x: &Element<T::Mono>) -> Element<T::Mono> {
        (**self).lie_derivative(b, x)
    }
    fn connection(&self, a: usize) -> Element<T::Mono> {
        (**self).connection(a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectionSide {
    Left,
    Right,
}

/// Graded tensor product of two 𝔤-da's with the diagonal action, carrying
/// the connection of one factor.
pub struct TensorGda<A: Gda, B: Gda> {
    alg: Tensor<A, B>,
    side: ConnectionSide,
}

impl<A: Gda, B: Gda> TensorGda<A, B> {
    pub fn new(left: A, right: B, side: ConnectionSide) -> Self {
        TensorGda { alg: Tensor::new(left, right), side }
    }

    pub fn with_side(self, side: ConnectionSide) -> Self {
        TensorGda { side, ..self }
    }

    pub fn left(&self) -> &A {
        &self.alg.left
    }

    pub fn right(&self) -> &B {
        &self.alg.right
    }

    /// `f ⊗ 1 + (±1) ⊗ g` applied monomial-wise; the sign `(-1)^{|x|}`
    /// applies when `odd` is set.
    fn leibniz(
        &self,
        x: &Element<(A::Mono, B::Mono)>,
        odd: bool,
        f: impl Fn(&Element<A::Mono>) -> Element<A::Mono>,
        g: impl Fn(&Element<B::Mono>) -> Element<B::Mono>,
    ) -> Element<(A::Mono, B::Mono)> {
        let mut out = Element::zero();
        for ((m, n), c) in x {
            let (xm, yn) = (Element::monomial(m.clone()), Element::monomial(n.clone()));
            out.add_scaled(&tensor_elements(&f(&xm), &yn), c);
            let neg = odd && self.alg.left.parity(m).is_odd();
            out.add_scaled(&tensor_elements(&xm, &g(&yn)), &(&crate::Scalar::sign(neg) * c));
        }
        out
    }
}

impl<A: Gda, B: Gda> SuperAlgebra for TensorGda<A, B> {
    type Mono = (A::Mono, B::Mono);
    fn parity(&self, m: &Self::Mono) -> Parity {
        self.alg.parity(m)
    }
    fn unit_mono(&self) -> Self::Mono {
        self.alg.unit_mono()
    }
    fn mul_mono(&self, a: &Self::Mono, b: &Self::Mono) -> Element<Self::Mono> {
        self.alg.mul_mono(a, b)
    }
}

impl<A: Gda, B: Gda> Gda for TensorGda<A, B> {
    fn lie_dim(&self) -> usize {
        self.alg.left.lie_dim()
    }
    fn d(&self, x: &Element<Self::Mono>) -> Element<Self::Mono> {
        self.leibniz(x, true, |y| self.alg.left.d(y), |y| self.alg.right.d(y))
    }
    fn iota(&self, b: usize, x: &Element<Self::Mono>) -> Element<Self::Mono> {
        self.leibniz(x, true, |y| self.alg.left.iota(b, y), |y| self.alg.right.iota(b, y))
    }
    fn lie_derivative(&self, b: usize, x: &Element<Self::Mono>) -> Element<Self::Mono> {
        self.leibniz(x, false, |y| self.alg.left.lie_derivative(b, y), |y| self.alg.right.lie_derivative(b, y))
    }
    fn connection(&self, a: usize) -> Element<Self::Mono> {
        match self.side {
            ConnectionSide::Left => self.alg.left_factor(&self.alg.left.connection(a)),
            ConnectionSide::Right => self.alg.right_factor(&self.alg.right.connection(a)),
        }
    }
}

/// `𝒲𝔤 ⊗ 𝒲𝔤` over a shared factor.
pub type NcWeilSquare = TensorGda<Arc<NcWeil>, Arc<NcWeil>>;

pub fn ncweil_square(nc: Arc<NcWeil>, side: ConnectionSide) -> NcWeilSquare {
    TensorGda::new(nc.clone(), nc, side)
}

/// Characteristic map `c^θ` on one Koszul monomial: the super-symmetrized
/// product of `θ(μ_a)` for odd letters and `dθ(μ_a)` for even ones.
pub fn characteristic_mono<A: Gda + ?Sized>(target: &A, m: &ScMono) -> Result<Element<A::Mono>> {
    let factors: Vec<(Element<A::Mono>, Parity)> = m
        .letters()
        .map(|(odd, a)| {
            let th = target.connection(a as usize);
            if odd {
                (th, Parity::Odd)
            } else {
                (target.d(&th), Parity::Even)
            }
        })
        .collect();
    symmetrize(target, &factors, crate::algebra::DEFAULT_SYM_CAP)
}

/// `c^θ` on an element in Koszul coordinates.
pub fn characteristic_map<A: Gda + ?Sized>(target: &A, x: &W) -> Result<Element<A::Mono>> {
    let mut out = Element::zero();
    for (m, c) in x {
        out.add_scaled(&characteristic_mono(target, m)?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    #[test]
    fn tautological_connection_gives_identity() {
        let g = catalog_entry("sl2").unwrap().algebra;
        let w = WeilAlgebra::new(g.lie());
        let k = KoszulWeil(&w);
        for m in w.ring().monomials_up_to(3) {
            let x = W::monomial(m);
            assert_eq!(characteristic_map(&k, &x).unwrap(), x);
        }
    }

    #[test]
    fn canonical_connection_gives_quantization() {
        let g = catalog_entry("sl2").unwrap().algebra;
        let nc = NcWeil::new(&g).unwrap();
        for m in nc.weil().ring().monomials_up_to(3) {
            let x = W::monomial(m);
            assert_eq!(characteristic_map(&nc, &x).unwrap(), nc.quantize_koszul(&x));
        }
    }

    #[test]
    fn tensor_operators_satisfy_cartan_relations() {
        let g = catalog_entry("sl2").unwrap().algebra;
        let a = ncweil_square(Arc::new(NcWeil::new(&g).unwrap()), ConnectionSide::Right);
        let x = a.mul(&a.connection(0), &a.alg.left_factor(&a.left().connection(2)));
        assert!(a.d(&a.d(&x)).is_zero());
        for b in 0..3 {
            let lhs = &a.d(&a.iota(b, &x)) + &a.iota(b, &a.d(&x));
            assert_eq!(lhs, a.lie_derivative(b, &x));
            assert_eq!(a.iota(b, &a.connection(1)), if b == 1 { a.one() } else { Element::zero() });
        }
    }
}
