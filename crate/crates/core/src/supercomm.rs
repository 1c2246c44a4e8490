//! Free super-commutative algebras `S(E_even) ⊗ ∧(E_odd)`.
//!
//! These model the symmetric algebra, the exterior algebra and both
//! presentations of the commutative Weil algebra.

use std::collections::HashMap;

use crate::algebra::SuperAlgebra;
use crate::element::{Element, Parity};
use crate::rewrite::Word;
use crate::scalar::Scalar;

/// Monomial `x_{even[0]}⋯ · y_{odd[0]}⋯`: evens sorted with repetition,
/// odds strictly increasing. Written order is evens first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScMono {
    pub even: Word,
    pub odd: Word,
}

impl ScMono {
    pub fn one() -> Self {
        ScMono::default()
    }

    pub fn even_gen(i: usize) -> Self {
        ScMono { even: Word::from_slice(&[i as u8]), odd: Word::new() }
    }

    pub fn odd_gen(i: usize) -> Self {
        ScMono { even: Word::new(), odd: Word::from_slice(&[i as u8]) }
    }

    pub fn from_parts(even: &[u8], odd: &[u8]) -> Self {
        let mut e = Word::from_slice(even);
        e.sort_unstable();
        let mut o = Word::from_slice(odd);
        o.sort_unstable();
        ScMono { even: e, odd: o }
    }

    /// Word length (every generator counts once).
    pub fn len(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_count(self.odd.len())
    }

    /// Generators in written order: `(is_odd, index)`.
    pub fn letters(&self) -> impl Iterator<Item = (bool, u8)> + '_ {
        self.even.iter().map(|&i| (false, i)).chain(self.odd.iter().map(|&i| (true, i)))
    }
}

/// Cache of symmetrized monomials.
pub trait SymMemo<M: crate::element::Monomial> {
    fn lookup(&self, m: &ScMono) -> Option<Element<M>>;
    fn store(&mut self, m: ScMono, v: Element<M>);
}

impl<M: crate::element::Monomial> SymMemo<M> for HashMap<ScMono, Element<M>> {
    fn lookup(&self, m: &ScMono) -> Option<Element<M>> {
        self.get(m).cloned()
    }
    fn store(&mut self, m: ScMono, v: Element<M>) {
        self.insert(m, v);
    }
}

impl<M: crate::element::Monomial> SymMemo<M> for &dashmap::DashMap<ScMono, Element<M>> {
    fn lookup(&self, m: &ScMono) -> Option<Element<M>> {
        self.get(m).map(|r| r.clone())
    }
    fn store(&mut self, m: ScMono, v: Element<M>) {
        self.insert(m, v);
    }
}

/// Free super-commutative algebra on `n_even` even and `n_odd` odd generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeSuperComm {
    pub n_even: usize,
    pub n_odd: usize,
}

/// Product of two strictly increasing odd words with the sign of the merge.
fn merge_odd(a: &Word, b: &Word) -> Option<(Word, bool)> {
    let mut out = Word::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut swaps = 0usize;
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining a's
            swaps += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, swaps % 2 == 1))
}

fn merge_even(a: &Word, b: &Word) -> Word {
    let mut out = Word::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl FreeSuperComm {
    pub fn new(n_even: usize, n_odd: usize) -> Self {
        FreeSuperComm { n_even, n_odd }
    }

    /// Polynomial algebra on `n` variables.
    pub fn polynomial(n: usize) -> Self {
        FreeSuperComm { n_even: n, n_odd: 0 }
    }

    /// Exterior algebra on `n` generators.
    pub fn exterior(n: usize) -> Self {
        FreeSuperComm { n_even: 0, n_odd: n }
    }

    pub fn even(&self, i: usize) -> Element<ScMono> {
        Element::monomial(ScMono::even_gen(i))
    }

    pub fn odd(&self, i: usize) -> Element<ScMono> {
        Element::monomial(ScMono::odd_gen(i))
    }

    /// `Σ v_i x_i` over even generators.
    pub fn even_vector(&self, v: &[Scalar]) -> Element<ScMono> {
        v.iter().enumerate().map(|(i, c)| (ScMono::even_gen(i), c.clone())).collect()
    }

    /// `Σ v_i y_i` over odd generators.
    pub fn odd_vector(&self, v: &[Scalar]) -> Element<ScMono> {
        v.iter().enumerate().map(|(i, c)| (ScMono::odd_gen(i), c.clone())).collect()
    }

    /// Extends generator images multiplicatively into a target algebra.
    pub fn hom_extend<A: SuperAlgebra + ?Sized>(
        &self,
        target: &A,
        x: &Element<ScMono>,
        even_img: &dyn Fn(usize) -> Element<A::Mono>,
        odd_img: &dyn Fn(usize) -> Element<A::Mono>,
    ) -> Element<A::Mono> {
        let mut out = Element::zero();
        for (m, c) in x {
            let mut acc = target.one();
            for (odd, i) in m.letters() {
                let g = if odd { odd_img(i as usize) } else { even_img(i as usize) };
                acc = target.mul(&acc, &g);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// The super-derivation of the given parity determined by generator
    /// images, via the signed Leibniz rule.
    pub fn derivation_extend(
        &self,
        x: &Element<ScMono>,
        parity: Parity,
        even_img: &dyn Fn(usize) -> Element<ScMono>,
        odd_img: &dyn Fn(usize) -> Element<ScMono>,
    ) -> Element<ScMono> {
        x.map_linear(|m| self.derivation_on_mono(m, parity, even_img, odd_img))
    }

    fn derivation_on_mono(
        &self,
        m: &ScMono,
        parity: Parity,
        even_img: &dyn Fn(usize) -> Element<ScMono>,
        odd_img: &dyn Fn(usize) -> Element<ScMono>,
    ) -> Element<ScMono> {
        let letters: Vec<(bool, u8)> = m.letters().collect();
        let mut out = Element::zero();
        let mut odd_prefix = 0usize;
        for (pos, &(odd, i)) in letters.iter().enumerate() {
            let img = if odd { odd_img(i as usize) } else { even_img(i as usize) };
            if !img.is_zero() {
                let prefix = mono_from_letters(&letters[..pos]);
                let suffix = mono_from_letters(&letters[pos + 1..]);
                let t = self.mul(&self.mul(&Element::monomial(prefix), &img), &Element::monomial(suffix));
                let neg = parity.is_odd() && odd_prefix % 2 == 1;
                out.add_scaled(&t, &Scalar::sign(neg));
            }
            if odd {
                odd_prefix += 1;
            }
        }
        out
    }

    /// Super-symmetrization of the generator images of `m` in a target
    /// algebra, by the recursion on the leading factor
    /// `S(m) = (1/|m|) Σ_g mult(g) · sign(g) · img(g) · S(m - g)`
    /// over distinct letters `g`. Results for sub-monomials are kept in `memo`.
    pub fn symmetrize_into<A: SuperAlgebra + ?Sized>(
        &self,
        target: &A,
        m: &ScMono,
        even_img: &dyn Fn(usize) -> Element<A::Mono>,
        odd_img: &dyn Fn(usize) -> Element<A::Mono>,
        memo: &mut impl SymMemo<A::Mono>,
    ) -> Element<A::Mono> {
        if m.is_empty() {
            return target.one();
        }
        if let Some(hit) = memo.lookup(m) {
            return hit;
        }
        let mut acc = Element::zero();
        let mut i = 0;
        while i < m.even.len() {
            let g = m.even[i];
            let mult = m.even.iter().filter(|&&x| x == g).count();
            let mut rest = m.clone();
            rest.even.remove(i);
            let tail = self.symmetrize_into(target, &rest, even_img, odd_img, memo);
            acc.add_scaled(&target.mul(&even_img(g as usize), &tail), &Scalar::from_int(mult as i64));
            i += mult;
        }
        for p in 0..m.odd.len() {
            let mut rest = m.clone();
            let g = rest.odd.remove(p);
            let tail = self.symmetrize_into(target, &rest, even_img, odd_img, memo);
            acc.add_scaled(&target.mul(&odd_img(g as usize), &tail), &Scalar::sign(p % 2 == 1));
        }
        let out = acc.scale(&Scalar::new(1, m.len() as i64));
        memo.store(m.clone(), out.clone());
        out
    }

    /// Partial derivative along the even generator `i`.
    pub fn partial_even(&self, x: &Element<ScMono>, i: usize) -> Element<ScMono> {
        let i = i as u8;
        x.map_monomials(|m| {
            let k = m.even.iter().filter(|&&g| g == i).count();
            if k == 0 {
                return None;
            }
            let pos = m.even.iter().position(|&g| g == i).unwrap();
            let mut even = m.even.clone();
            even.remove(pos);
            Some((ScMono { even, odd: m.odd.clone() }, Scalar::from_int(k as i64)))
        })
    }

    /// Homogeneous component of word length `k`.
    pub fn component(&self, x: &Element<ScMono>, k: usize) -> Element<ScMono> {
        x.filter(|m| m.len() == k)
    }

    /// All monomials of word length at most `max_len`.
    pub fn monomials_up_to(&self, max_len: usize) -> Vec<ScMono> {
        let mut out = Vec::new();
        for k in 0..=max_len {
            for s in 0..=k.min(self.n_odd) {
                let r = k - s;
                if r > 0 && self.n_even == 0 {
                    continue;
                }
                for odd in subsets(self.n_odd, s) {
                    for even in multisets(self.n_even, r) {
                        out.push(ScMono { even, odd: odd.clone() });
                    }
                }
            }
        }
        out
    }
}

fn mono_from_letters(letters: &[(bool, u8)]) -> ScMono {
    let mut m = ScMono::one();
    for &(odd, i) in letters {
        if odd {
            m.odd.push(i);
        } else {
            m.even.push(i);
        }
    }
    m
}

/// Strictly increasing words of length `k` over `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Word::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u8);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Non-decreasing words of length `k` over `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Word::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u8);
            rec(i, n, k, cur, out);
            cur.pop();
        }
    }
    if k == 0 || n > 0 {
        rec(0, n, k, &mut cur, &mut out);
    }
    out
}

impl SuperAlgebra for FreeSuperComm {
    type Mono = ScMono;

    fn parity(&self, m: &ScMono) -> Parity {
        m.parity()
    }

    fn unit_mono(&self) -> ScMono {
        ScMono::one()
    }

    fn mul_mono(&self, a: &ScMono, b: &ScMono) -> Element<ScMono> {
        let Some((odd, neg)) = merge_odd(&a.odd, &b.odd) else {
            return Element::zero();
        };
        let even = merge_even(&a.even, &b.even);
        Element::term(ScMono { even, odd }, Scalar::sign(neg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_signs() {
        let ext = FreeSuperComm::exterior(3);
        let a = ext.odd(0);
        let b = ext.odd(1);
        let ab = ext.mul(&a, &b);
        let ba = ext.mul(&b, &a);
        assert_eq!(ab, -ba);
        assert!(ext.mul(&a, &a).is_zero());
    }

    #[test]
    fn monomial_counts() {
        let w = FreeSuperComm::new(3, 3);
        // 1 + 6 + 21 + 56 monomials of length 0..3 in 3+3 generators
        assert_eq!(w.monomials_up_to(3).len(), 1 + 6 + (6 + 9 + 3) + (10 + 18 + 9 + 1));
    }

    #[test]
    fn euler_derivation_counts_length() {
        let w = FreeSuperComm::new(2, 2);
        for m in w.monomials_up_to(4) {
            let x = Element::monomial(m.clone());
            let e = w.derivation_extend(&x, Parity::Even, &|i| w.even(i), &|i| w.odd(i));
            assert_eq!(e, x.scale(&Scalar::from_int(m.len() as i64)));
        }
    }

    #[test]
    fn fast_symmetrization_matches_generic() {
        use crate::algebra::symmetrize;
        use crate::rewrite::{Bracket, Straightener};
        // mixed algebra: two even, two odd generators with nonzero brackets
        let par = vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd];
        let st = Straightener::new(par.clone(), |i, j| {
            let mut b = Bracket::default();
            if (i, j) == (1, 0) {
                b.linear.push((1, Scalar::one()));
            }
            if (i, j) == (3, 2) || (i, j) == (3, 3) {
                b.constant = Scalar::from_int(2);
            }
            if (i, j) == (2, 0) {
                b.linear.push((3, Scalar::one()));
            }
            b
        });
        let ring = FreeSuperComm::new(2, 2);
        let even = |i: usize| st.generator(i);
        let odd = |i: usize| st.generator(2 + i);
        let mut memo = HashMap::new();
        for m in ring.monomials_up_to(4) {
            let fast = ring.symmetrize_into(&st, &m, &even, &odd, &mut memo);
            let factors: Vec<_> = m
                .letters()
                .map(|(o, i)| if o { (odd(i as usize), Parity::Odd) } else { (even(i as usize), Parity::Even) })
                .collect();
            assert_eq!(fast, symmetrize(&st, &factors, 8).unwrap(), "{m:?}");
        }
    }
}
