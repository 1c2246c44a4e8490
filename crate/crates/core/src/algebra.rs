//! Super algebras over monomial bases, tensor products, Koszul signs and
//! super-symmetrization.

use std::sync::Arc;

use crate::element::{Element, Monomial, Parity};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default bound on the number of factors accepted by [`symmetrize`].
pub const DEFAULT_SYM_CAP: usize = 8;

/// An associative Z/2-graded algebra with a monomial basis.
pub trait SuperAlgebra: Send + Sync {
    type Mono: Monomial;

    fn parity(&self, m: &Self::Mono) -> Parity;
    fn unit_mono(&self) -> Self::Mono;
    fn mul_mono(&self, a: &Self::Mono, b: &Self::Mono) -> Element<Self::Mono>;

    fn one(&self) -> Element<Self::Mono> {
        Element::monomial(self.unit_mono())
    }

    fn scalar(&self, c: Scalar) -> Element<Self::Mono> {
        Element::term(self.unit_mono(), c)
    }

    fn mul(&self, x: &Element<Self::Mono>, y: &Element<Self::Mono>) -> Element<Self::Mono> {
        let mut out = Element::zero();
        for (m, a) in x {
            for (n, b) in y {
                out.add_scaled(&self.mul_mono(m, n), &(a * b));
            }
        }
        out
    }

    /// Super-commutator `xy - (-1)^{|x||y|} yx`, extended bilinearly over
    /// homogeneous components.
    fn commutator(&self, x: &Element<Self::Mono>, y: &Element<Self::Mono>) -> Element<Self::Mono> {
        let mut out = Element::zero();
        for (m, a) in x {
            let pm = self.parity(m);
            for (n, b) in y {
                let c = a * b;
                out.add_scaled(&self.mul_mono(m, n), &c);
                let s = if pm.koszul(self.parity(n)) { c } else { -c };
                out.add_scaled(&self.mul_mono(n, m), &s);
            }
        }
        out
    }

    fn pow(&self, x: &Element<Self::Mono>, k: usize) -> Element<Self::Mono> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Parity of a homogeneous element; `None` for mixed parity. Zero is even.
    fn element_parity(&self, x: &Element<Self::Mono>) -> Option<Parity> {
        let mut p = None;
        for m in x.monomials() {
            let q = self.parity(m);
            match p {
                None => p = Some(q),
                Some(r) if r != q => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(Parity::Even))
    }

    /// Coefficient of the unit.
    fn scalar_part(&self, x: &Element<Self::Mono>) -> Scalar {
        x.coeff(&self.unit_mono())
    }
}

impl<T: SuperAlgebra + ?Sized> SuperAlgebra for Arc<T> {
    type Mono = T::Mono;
    fn parity(&self, m: &Self::Mono) -> Parity {
        (**self).parity(m)
    }
    fn unit_mono(&self) -> Self::Mono {
        (**self).unit_mono()
    }
    fn mul_mono(&self, a: &Self::Mono, b: &Self::Mono) -> Element<Self::Mono> {
        (**self).mul_mono(a, b)
    }
    fn mul(&self, x: &Element<Self::Mono>, y: &Element<Self::Mono>) -> Element<Self::Mono> {
        (**self).mul(x, y)
    }
}

/// Graded tensor product with the Koszul sign rule
/// `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'`.
#[derive(Clone)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: SuperAlgebra, B: SuperAlgebra> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Tensor { left, right }
    }

    pub fn pure(&self, x: &Element<A::Mono>, y: &Element<B::Mono>) -> Element<(A::Mono, B::Mono)> {
        tensor_elements(x, y)
    }

    pub fn left_factor(&self, x: &Element<A::Mono>) -> Element<(A::Mono, B::Mono)> {
        tensor_elements(x, &self.right.one())
    }

    pub fn right_factor(&self, y: &Element<B::Mono>) -> Element<(A::Mono, B::Mono)> {
        tensor_elements(&self.left.one(), y)
    }
}

pub fn tensor_elements<M: Monomial, N: Monomial>(x: &Element<M>, y: &Element<N>) -> Element<(M, N)> {
    let mut out = Element::zero();
    for (m, a) in x {
        for (n, b) in y {
            out.add_term((m.clone(), n.clone()), a * b);
        }
    }
    out
}

impl<A: SuperAlgebra, B: SuperAlgebra> SuperAlgebra for Tensor<A, B> {
    type Mono = (A::Mono, B::Mono);

    fn parity(&self, m: &Self::Mono) -> Parity {
        self.left.parity(&m.0) + self.right.parity(&m.1)
    }

    fn unit_mono(&self) -> Self::Mono {
        (self.left.unit_mono(), self.right.unit_mono())
    }

    fn mul_mono(&self, a: &Self::Mono, b: &Self::Mono) -> Element<Self::Mono> {
        let x = self.left.mul_mono(&a.0, &b.0);
        if x.is_zero() {
            return Element::zero();
        }
        let y = self.right.mul_mono(&a.1, &b.1);
        let t = tensor_elements(&x, &y);
        if self.right.parity(&a.1).koszul(self.left.parity(&b.0)) {
            -t
        } else {
            t
        }
    }
}

/// `(-1)^N` where N counts pairs of odd entries that end up in reversed
/// order. `order[p]` is the original slot of the factor placed at position p.
pub fn koszul_sign(order: &[usize], parities: &[Parity]) -> Result<Scalar> {
    if order.len() != parities.len() {
        return Err(Error::LengthMismatch { expected: parities.len(), got: order.len() });
    }
    let mut seen = vec![false; order.len()];
    for &i in order {
        if i >= order.len() || seen[i] {
            return Err(Error::NotAPermutation(order.to_vec()));
        }
        seen[i] = true;
    }
    let mut n = 0usize;
    for p in 0..order.len() {
        for r in p + 1..order.len() {
            let (i, j) = (order[p], order[r]);
            if i > j && parities[i].is_odd() && parities[j].is_odd() {
                n += 1;
            }
        }
    }
    Ok(Scalar::sign(n % 2 == 1))
}

/// Super-symmetrization `(1/k!) Σ_σ sign(σ) f_σ(1) ⋯ f_σ(k)` of homogeneous
/// factors in the target algebra.
///
/// Evaluated by the recursion on the leading factor, which needs `k·2^k`
/// products instead of `k!·k`.
pub fn symmetrize<A: SuperAlgebra + ?Sized>(
    alg: &A,
    factors: &[(Element<A::Mono>, Parity)],
    cap: usize,
) -> Result<Element<A::Mono>> {
    let k = factors.len();
    if k > cap {
        return Err(Error::SymmetrizationCap { len: k, cap });
    }
    let mut memo: Vec<Option<Element<A::Mono>>> = vec![None; 1 << k];
    memo[0] = Some(alg.one());
    for mask in 1usize..(1 << k) {
        let size = mask.count_ones() as i64;
        let mut acc = Element::zero();
        let mut odd_before = 0usize;
        for i in 0..k {
            if mask & (1 << i) == 0 {
                continue;
            }
            let (f, p) = &factors[i];
            let rest = memo[mask & !(1 << i)].as_ref().expect("subsets are filled in order");
            let prod = alg.mul(f, rest);
            let neg = p.is_odd() && odd_before % 2 == 1;
            acc.add_scaled(&prod, &Scalar::sign(neg));
            if p.is_odd() {
                odd_before += 1;
            }
        }
        memo[mask] = Some(acc.scale(&Scalar::new(1, size)));
    }
    Ok(memo.pop().flatten().expect("full mask computed"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_sign_basics() {
        use Parity::*;
        assert_eq!(koszul_sign(&[0, 1, 2], &[Odd, Odd, Even]).unwrap(), Scalar::one());
        assert_eq!(koszul_sign(&[1, 0], &[Odd, Odd]).unwrap(), Scalar::from_int(-1));
        assert_eq!(koszul_sign(&[1, 0], &[Odd, Even]).unwrap(), Scalar::one());
        assert!(koszul_sign(&[0, 0], &[Odd, Odd]).is_err());
        assert!(koszul_sign(&[0], &[Odd, Odd]).is_err());
    }
}
