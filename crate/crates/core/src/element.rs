//! Linear combinations of normal-form monomials.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::scalar::Scalar;

/// Z/2 grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_count(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Sign `(-1)^{|a||b|}`.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Keys of normal-form monomials. The owning algebra interprets them.
pub trait Monomial: Ord + Clone + Hash + Debug + Send + Sync {}

impl<T: Ord + Clone + Hash + Debug + Send + Sync> Monomial for T {}

/// A finitely supported map from monomials to nonzero scalars.
///
/// Iteration follows the monomial order, so every traversal is
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<M: Monomial> {
    terms: BTreeMap<M, Scalar>,
}

impl<M: Monomial> Default for Element<M> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<M: Monomial> Debug for Element<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}){m:?}")?;
        }
        Ok(())
    }
}

impl<M: Monomial> Element<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn term(m: M, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, M, Scalar> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element<M>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element<M> {
        if c.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&M) -> bool) -> Element<M> {
        Element { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear<N: Monomial>(&self, mut f: impl FnMut(&M) -> Element<N>) -> Element<N> {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// Relabels monomials; `f` returns the new key and a coefficient factor.
    pub fn map_monomials<N: Monomial>(&self, mut f: impl FnMut(&M) -> Option<(N, Scalar)>) -> Element<N> {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            if let Some((n, s)) = f(m) {
                out.add_term(n, c * &s);
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<M, Scalar> {
        self.terms
    }
}

impl<M: Monomial> FromIterator<(M, Scalar)> for Element<M> {
    fn from_iter<I: IntoIterator<Item = (M, Scalar)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

impl<M: Monomial> IntoIterator for Element<M> {
    type Item = (M, Scalar);
    type IntoIter = btree_map::IntoIter<M, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, M: Monomial> IntoIterator for &'a Element<M> {
    type Item = (&'a M, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, M, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<M: Monomial> AddAssign<&Element<M>> for Element<M> {
    fn add_assign(&mut self, rhs: &Element<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<M: Monomial> SubAssign<&Element<M>> for Element<M> {
    fn sub_assign(&mut self, rhs: &Element<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<M: Monomial> Add for &Element<M> {
    type Output = Element<M>;
    fn add(self, rhs: &Element<M>) -> Element<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: Monomial> Sub for &Element<M> {
    type Output = Element<M>;
    fn sub(self, rhs: &Element<M>) -> Element<M> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<M: Monomial> Add for Element<M> {
    type Output = Element<M>;
    fn add(mut self, rhs: Element<M>) -> Element<M> {
        self += &rhs;
        self
    }
}

impl<M: Monomial> Sub for Element<M> {
    type Output = Element<M>;
    fn sub(mut self, rhs: Element<M>) -> Element<M> {
        self -= &rhs;
        self
    }
}

impl<M: Monomial> Neg for &Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        self.scale(&Scalar::from_int(-1))
    }
}

impl<M: Monomial> Neg for Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn cancellation_and_scaling() {
        let x: Element<u32> = [(1, q(2, 3)), (4, q(-1, 1))].into_iter().collect();
        assert!((&x + &(-&x)).is_zero());
        let half = x.scale(&q(1, 2));
        assert_eq!(half.scale(&q(2, 1)), x);
        let y = Element::term(7u32, q(5, 1));
        let s = &x + &y;
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&7), q(5, 1));
    }

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert!(Parity::Odd.koszul(Parity::Odd));
        assert!(!Parity::Odd.koszul(Parity::Even));
    }
}
