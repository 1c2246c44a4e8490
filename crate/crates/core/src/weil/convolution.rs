//! The Hopf structure of `W𝔤`, the convolution algebra of linear maps
//! `W𝔤 → 𝒜` and the homotopy between two characteristic maps.
//!
//! Maps are recorded by their images on Koszul monomials up to a word-length
//! cap. Every operator used here (coproduct, `d`, `ι^t`, `L`, `h`) keeps word
//! length or lowers it, so the truncation is exact below the cap.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::SuperAlgebra;
use crate::element::{Element, Parity};
use crate::error::{Error, Result};
use crate::report::{all_ok, Check};
use crate::scalar::Scalar;
use crate::supercomm::ScMono;

use super::commutative::{WeilAlgebra, W};
use super::gda::{characteristic_mono, Gda};

/// Terms `(left, right, sign)` of `Δ(m)`.
pub type Coproduct = Vec<(ScMono, ScMono, Scalar)>;

/// `Δ` on a Koszul monomial: the algebra map with `Δ(g) = g⊗1 + 1⊗g`.
pub fn coproduct(m: &ScMono) -> Coproduct {
    let letters: Vec<(bool, u8)> = m.letters().collect();
    let k = letters.len();
    let mut acc: BTreeMap<(ScMono, ScMono), Scalar> = BTreeMap::new();
    for mask in 0usize..(1 << k) {
        let (mut left, mut right) = (ScMono::one(), ScMono::one());
        let mut odd_right = 0usize;
        let mut flips = 0usize;
        for (i, &(odd, a)) in letters.iter().enumerate() {
            let to_left = mask & (1 << i) != 0;
            let side = if to_left { &mut left } else { &mut right };
            if odd {
                side.odd.push(a);
                if to_left {
                    // passes every odd letter already sent right
                    flips += odd_right;
                } else {
                    odd_right += 1;
                }
            } else {
                side.even.push(a);
            }
        }
        *acc.entry((left, right)).or_default() += Scalar::sign(flips % 2 == 1);
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((l, r), c)| (l, r, c)).collect()
}

/// Augmentation: the constant term.
pub fn counit(x: &W) -> Scalar {
    x.coeff(&ScMono::one())
}

/// A linear map `W𝔤 → 𝒜` of definite parity, known on monomials of word
/// length at most the cap.
#[derive(Clone, Debug)]
pub struct TruncatedMap<M: crate::element::Monomial> {
    pub parity: Parity,
    pub images: BTreeMap<ScMono, Element<M>>,
}

impl<M: crate::element::Monomial> TruncatedMap<M> {
    pub fn image(&self, m: &ScMono) -> Element<M> {
        self.images.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.images.values().all(Element::is_zero)
    }
}

/// Convolution algebra `L(W𝔤, 𝒜)` truncated at word length `cap`.
pub struct Convolution<'a, A: Gda> {
    pub weil: &'a WeilAlgebra,
    pub target: &'a A,
    pub cap: usize,
    monos: Vec<ScMono>,
    coproducts: BTreeMap<ScMono, Coproduct>,
}

pub type Map<A> = TruncatedMap<<A as SuperAlgebra>::Mono>;

impl<'a, A: Gda> Convolution<'a, A> {
    pub fn new(weil: &'a WeilAlgebra, target: &'a A, cap: usize) -> Self {
        let monos = weil.ring().monomials_up_to(cap);
        let coproducts = monos.iter().map(|m| (m.clone(), coproduct(m))).collect();
        Convolution { weil, target, cap, monos, coproducts }
    }

    pub fn monomials(&self) -> &[ScMono] {
        &self.monos
    }

    /// Builds a map from per-monomial images, in parallel.
    pub fn from_fn(&self, parity: Parity, f: impl Fn(&ScMono) -> Element<A::Mono> + Sync) -> Map<A> {
        let images: Vec<(ScMono, Element<A::Mono>)> =
            self.monos.par_iter().map(|m| (m.clone(), f(m))).filter(|(_, v)| !v.is_zero()).collect();
        TruncatedMap { parity, images: images.into_iter().collect() }
    }

    /// Evaluates a map on an element of word length at most the cap.
    pub fn apply(&self, phi: &Map<A>, x: &W) -> Element<A::Mono> {
        let mut out = Element::zero();
        for (m, c) in x {
            debug_assert!(m.len() <= self.cap, "monomial beyond the cap");
            if let Some(v) = phi.images.get(m) {
                out.add_scaled(v, c);
            }
        }
        out
    }

    /// `1_L = i ∘ π`.
    pub fn unit(&self) -> Map<A> {
        let mut images = BTreeMap::new();
        images.insert(ScMono::one(), self.target.one());
        TruncatedMap { parity: Parity::Even, images }
    }

    pub fn characteristic(&self) -> Result<Map<A>> {
        let images: Result<Vec<_>> =
            self.monos.par_iter().map(|m| characteristic_mono(self.target, m).map(|v| (m.clone(), v))).collect();
        Ok(TruncatedMap { parity: Parity::Even, images: images?.into_iter().filter(|(_, v)| !v.is_zero()).collect() })
    }

    pub fn add(&self, a: &Map<A>, b: &Map<A>, c: &Scalar) -> Result<Map<A>> {
        if a.parity != b.parity && !a.is_zero() && !b.is_zero() {
            return Err(Error::Invalid("adding maps of different parity".into()));
        }
        let mut images = a.images.clone();
        for (m, v) in &b.images {
            let e = images.entry(m.clone()).or_default();
            e.add_scaled(v, c);
        }
        images.retain(|_, v| !v.is_zero());
        let parity = if a.is_zero() { b.parity } else { a.parity };
        Ok(TruncatedMap { parity, images })
    }

    /// `(φ₁·φ₂)(w) = Σ ± (-1)^{|φ₂||w'|} φ₁(w') φ₂(w'')` over `Δ(w)`.
    pub fn convolve(&self, a: &Map<A>, b: &Map<A>) -> Map<A> {
        self.from_fn(a.parity + b.parity, |m| {
            let mut out = Element::zero();
            for (l, r, s) in &self.coproducts[m] {
                let (Some(x), Some(y)) = (a.images.get(l), b.images.get(r)) else { continue };
                let neg = b.parity.is_odd() && l.parity().is_odd();
                out.add_scaled(&self.target.mul(x, y), &(s * &Scalar::sign(neg)));
            }
            out
        })
    }

    /// `φ^{-1} = Σ_N (-1)^N (φ - 1_L)^N` for even `φ` with `φ(1) = 1`.
    pub fn inverse(&self, phi: &Map<A>) -> Result<Map<A>> {
        if self.target.scalar_part(&phi.image(&ScMono::one())) != Scalar::one()
            || phi.image(&ScMono::one()) != self.target.one()
            || phi.parity.is_odd()
        {
            return Err(Error::Invalid("geometric-series inverse needs an even map with φ(1) = 1".into()));
        }
        let unit = self.unit();
        let c = self.add(phi, &unit, &Scalar::from_int(-1))?;
        let mut out = unit.clone();
        let mut power = unit;
        for n in 1..=self.cap {
            power = self.convolve(&power, &c);
            if power.is_zero() {
                break;
            }
            out = self.add(&out, &power, &Scalar::sign(n % 2 == 1))?;
        }
        Ok(out)
    }

    /// `φ ∘ h` with the Koszul homotopy of `W𝔤`.
    pub fn after_homotopy(&self, phi: &Map<A>) -> Map<A> {
        self.from_fn(phi.parity + Parity::Odd, |m| self.apply(phi, &self.weil.koszul_homotopy(&W::monomial(m.clone()))))
    }

    /// `d(φ) = d∘φ - (-1)^{|φ|} φ∘d`.
    pub fn d(&self, phi: &Map<A>) -> Map<A> {
        self.from_fn(phi.parity + Parity::Odd, |m| {
            let lhs = self.target.d(&phi.image(m));
            let rhs = self.apply(phi, &self.weil.koszul_d(&W::monomial(m.clone())));
            if phi.parity.is_odd() {
                &lhs + &rhs
            } else {
                &lhs - &rhs
            }
        })
    }

    /// `ι_b^t(φ) = ι_b∘φ - (-1)^{|φ|} φ∘ι_b^t`.
    pub fn iota_t(&self, b: usize, t: &Scalar, phi: &Map<A>) -> Map<A> {
        self.from_fn(phi.parity + Parity::Odd, |m| {
            let lhs = self.target.iota(b, &phi.image(m));
            let rhs = self.apply(phi, &self.weil.koszul_iota_t(b, t, &W::monomial(m.clone())));
            if phi.parity.is_odd() {
                &lhs + &rhs
            } else {
                &lhs - &rhs
            }
        })
    }

    /// `L_b(φ) = L_b∘φ - φ∘L_b`.
    pub fn lie_derivative(&self, b: usize, phi: &Map<A>) -> Map<A> {
        self.from_fn(phi.parity, |m| {
            let lhs = self.target.lie_derivative(b, &phi.image(m));
            let rhs = self.apply(phi, &self.weil.koszul_lie_derivative(b, &W::monomial(m.clone())));
            &lhs - &rhs
        })
    }

    /// `ψ = ((c·φ⁻¹)∘h)·φ` with `c = c₀ - c₁` and `φ = c₁`.
    pub fn rigidity_homotopy(&self, c0: &Map<A>, c1: &Map<A>) -> Result<Map<A>> {
        let one = ScMono::one();
        if c0.image(&one) != c1.image(&one) {
            return Err(Error::Invalid("maps differ on the unit".into()));
        }
        let c = self.add(c0, c1, &Scalar::from_int(-1))?;
        let phi_inv = self.inverse(c1)?;
        let inner = self.after_homotopy(&self.convolve(&c, &phi_inv));
        Ok(self.convolve(&inner, c1))
    }

    /// Compares two maps on monomials of word length at most `max_len`.
    pub fn agree(&self, a: &Map<A>, b: &Map<A>, max_len: usize) -> std::result::Result<(), String> {
        all_ok(self.monos.iter().filter(|m| m.len() <= max_len).map(|m| {
            let (x, y) = (a.image(m), b.image(m));
            if x == y {
                Ok(())
            } else {
                Err(format!("input: {m:?}; lhs: {x:?}; rhs: {y:?}"))
            }
        }))
    }

    pub fn vanishes(&self, a: &Map<A>, max_len: usize) -> std::result::Result<(), String> {
        all_ok(self.monos.iter().filter(|m| m.len() <= max_len).map(|m| {
            let x = a.image(m);
            if x.is_zero() {
                Ok(())
            } else {
                Err(format!("input: {m:?}; value: {x:?}"))
            }
        }))
    }
}

/// Builds `ψ` for the characteristic maps of two GDA structures on the same
/// algebra and checks `dψ = c₀ - c₁`, `L_b ψ = 0`, `ι_b ψ = 0`, `ψ(1) = 0`
/// on word length at most `cap - 1`.
pub fn rigidity_checks<A: Gda>(weil: &WeilAlgebra, a0: &A, a1: &A, cap: usize, label: &str) -> Result<Vec<Check>> {
    let conv0 = Convolution::new(weil, a0, cap);
    let conv1 = Convolution::new(weil, a1, cap);
    let c0 = conv0.characteristic()?;
    let c1 = conv1.characteristic()?;
    // both targets share the algebra and operators; only θ differs
    let psi = conv0.rigidity_homotopy(&c0, &c1)?;
    let top = cap.saturating_sub(1);
    let diff = conv0.add(&c0, &c1, &Scalar::from_int(-1))?;
    let n = weil.dim();
    let d_ok = conv0.agree(&conv0.d(&psi), &diff, top);
    let l_ok = all_ok((0..n).map(|b| conv0.vanishes(&conv0.lie_derivative(b, &psi), top)));
    let i_ok = all_ok((0..n).map(|b| conv0.vanishes(&conv0.iota_t(b, &Scalar::one(), &psi), top)));
    let unit_ok = if psi.image(&ScMono::one()).is_zero() { Ok(()) } else { Err("psi(1) != 0".to_string()) };
    let detail = format!("word length <= {top}, cap {cap}");
    Ok(vec![
        Check::from_result(format!("{label}: d psi = c0 - c1"), "d(psi) = c0 - c1", d_ok).with_detail(detail.clone()),
        Check::from_result(format!("{label}: psi is invariant"), "L_x(psi) = 0", l_ok).with_detail(detail.clone()),
        Check::from_result(format!("{label}: psi is horizontal"), "i_x^1(psi) = 0", i_ok).with_detail(detail),
        Check::from_result(format!("{label}: psi vanishes on 1"), "psi(1) = 0", unit_ok),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;
    use crate::weil::gda::KoszulWeil;

    fn sl2() -> WeilAlgebra {
        WeilAlgebra::new(catalog_entry("sl2").unwrap().algebra.lie())
    }

    #[test]
    fn coproduct_signs_and_counit() {
        let m = ScMono::from_parts(&[], &[0, 1]);
        let d = coproduct(&m);
        // μ0 μ1 ↦ μ0μ1⊗1 + μ0⊗μ1 - μ1⊗μ0 + 1⊗μ0μ1
        let swapped = d.iter().find(|(l, _, _)| *l == ScMono::odd_gen(1)).unwrap();
        assert_eq!(swapped.2, Scalar::from_int(-1));
        assert_eq!(d.len(), 4);
        let w = sl2();
        for m in w.ring().monomials_up_to(4) {
            // (π ⊗ id) Δ = id
            let back: Vec<_> = coproduct(&m).into_iter().filter(|(l, _, _)| l.is_empty()).collect();
            assert_eq!(back, vec![(ScMono::one(), m.clone(), Scalar::one())]);
        }
    }

    #[test]
    fn unit_inverse_and_associativity() {
        let w = sl2();
        let k = KoszulWeil(&w);
        let conv = Convolution::new(&w, &k, 3);
        let c = conv.characteristic().unwrap();
        let unit = conv.unit();
        assert_eq!(conv.agree(&conv.convolve(&unit, &c), &c, 3), Ok(()));
        assert_eq!(conv.agree(&conv.convolve(&c, &unit), &c, 3), Ok(()));
        let inv = conv.inverse(&c).unwrap();
        assert_eq!(conv.agree(&conv.convolve(&c, &inv), &unit, 3), Ok(()));
        let h = conv.after_homotopy(&c);
        let lhs = conv.convolve(&conv.convolve(&h, &c), &inv);
        let rhs = conv.convolve(&h, &conv.convolve(&c, &inv));
        assert_eq!(conv.agree(&lhs, &rhs, 3), Ok(()));
    }

    #[test]
    fn deformed_contraction_leibniz() {
        // ι^{t1+t2}(φ1·φ2) = ι^{t1}(φ1)·φ2 + (-1)^{|φ1|} φ1·ι^{t2}(φ2)
        let w = sl2();
        let k = KoszulWeil(&w);
        let conv = Convolution::new(&w, &k, 3);
        let c = conv.characteristic().unwrap();
        let h = conv.after_homotopy(&c);
        for (t1, t2) in [(0, 0), (1, 0), (0, 1), (1, -1)] {
            let (t1, t2) = (Scalar::from_int(t1), Scalar::from_int(t2));
            let t = &t1 + &t2;
            for b in 0..3 {
                let lhs = conv.iota_t(b, &t, &conv.convolve(&h, &c));
                let a = conv.convolve(&conv.iota_t(b, &t1, &h), &c);
                let bb = conv.convolve(&h, &conv.iota_t(b, &t2, &c));
                let rhs = conv.add(&a, &bb, &Scalar::from_int(-1)).unwrap();
                assert_eq!(conv.agree(&lhs, &rhs, 3), Ok(()), "t1={t1} t2={t2} b={b}");
            }
        }
    }

    #[test]
    fn equal_maps_have_zero_homotopy() {
        let w = sl2();
        let k = KoszulWeil(&w);
        let conv = Convolution::new(&w, &k, 3);
        let c = conv.characteristic().unwrap();
        assert!(conv.rigidity_homotopy(&c, &c).unwrap().is_zero());
    }
}
