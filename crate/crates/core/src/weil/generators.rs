//! `𝒲𝔤` in its defining presentation: the enveloping algebra of the super
//! Lie algebra spanned by odd `ξ` and even `ξ̄`, with
//! `[ξ̄_a, ξ̄_b] = [e_a,e_b]‾`, `[ξ̄_a, ξ_b] = [e_a,e_b]`, `[ξ_a, ξ_b] = B_ab`.
//!
//! The PBW order is chosen by the caller through a basis ordering, so that
//! projections and quotients become support filters.

use std::sync::Arc;

use crate::algebra::SuperAlgebra;
use crate::element::{Element, Parity};
use crate::liealg::unit_vector;
use crate::rewrite::{Bracket, Straightener, Word};
use crate::scalar::Scalar;

use super::ncweil::{Nc, NcWeil};

pub type Gen = Element<Word>;

/// Letter `2p` is `ξ̄` and letter `2p + 1` is `ξ` of the basis vector in
/// position `p` of the ordering.
pub struct KoszulPbw {
    nc: Arc<NcWeil>,
    order: Vec<usize>,
    position: Vec<usize>,
    st: Straightener,
}

impl KoszulPbw {
    /// `order[p]` is the basis index placed at position `p`.
    pub fn new(nc: Arc<NcWeil>, order: &[usize]) -> Self {
        let n = nc.dim();
        assert_eq!(order.len(), n, "ordering must list every basis index");
        let mut position = vec![usize::MAX; n];
        for (p, &a) in order.iter().enumerate() {
            position[a] = p;
        }
        assert!(position.iter().all(|&p| p != usize::MAX), "ordering must be a permutation");
        let g = nc.algebra().clone();
        let order_v = order.to_vec();
        let pos = position.clone();
        let parity = (0..2 * n).map(|l| if l % 2 == 1 { Parity::Odd } else { Parity::Even }).collect();
        let st = Straightener::new(parity, move |i, j| {
            let (a, odd_i) = (order_v[i / 2], i % 2 == 1);
            let (b, odd_j) = (order_v[j / 2], j % 2 == 1);
            let lin = |odd: bool| -> Vec<(u8, Scalar)> {
                let br = g.lie().bracket_basis(a, b);
                br.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| ((2 * pos[k] + usize::from(odd)) as u8, c))
                    .collect()
            };
            match (odd_i, odd_j) {
                (false, false) => Bracket { linear: lin(false), constant: Scalar::zero() },
                (true, true) => Bracket { linear: Vec::new(), constant: g.b(a, b).clone() },
                _ => Bracket { linear: lin(true), constant: Scalar::zero() },
            }
        });
        KoszulPbw { nc, order: order.to_vec(), position, st }
    }

    pub fn ncweil(&self) -> &NcWeil {
        &self.nc
    }

    /// Position of basis index `a` in the ordering.
    pub fn position(&self, a: usize) -> usize {
        self.position[a]
    }

    pub fn bar_letter(&self, a: usize) -> u8 {
        (2 * self.position[a]) as u8
    }

    pub fn odd_letter(&self, a: usize) -> u8 {
        (2 * self.position[a] + 1) as u8
    }

    /// Basis index and oddness of a letter.
    pub fn decode(&self, l: u8) -> (usize, bool) {
        (self.order[l as usize / 2], l % 2 == 1)
    }

    pub fn bar(&self, a: usize) -> Gen {
        self.st.generator(self.bar_letter(a) as usize)
    }

    pub fn odd(&self, a: usize) -> Gen {
        self.st.generator(self.odd_letter(a) as usize)
    }

    pub fn odd_vector(&self, v: &[Scalar]) -> Gen {
        let mut out = Gen::zero();
        for (a, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.odd(a), c);
            }
        }
        out
    }

    /// Rewrites a factorized element through `ξ̂ = ξ̄ - γ(ξ)`.
    pub fn from_factorized(&self, x: &Nc) -> Gen {
        let n = self.nc.dim();
        let hat: Vec<Gen> = (0..n)
            .map(|a| {
                let gamma = self.nc.gamma(&unit_vector(n, a));
                &self.bar(a) - &self.from_factorized_clifford(&gamma)
            })
            .collect();
        let mut out = Gen::zero();
        for ((u, c), coef) in x {
            let mut acc = self.st.one();
            for &a in u {
                acc = self.st.mul(&acc, &hat[a as usize]);
            }
            for &a in c {
                acc = self.st.mul(&acc, &self.odd(a as usize));
            }
            out.add_scaled(&acc, coef);
        }
        out
    }

    fn from_factorized_clifford(&self, x: &Nc) -> Gen {
        let mut out = Gen::zero();
        for ((u, c), coef) in x {
            debug_assert!(u.is_empty());
            let mut acc = self.st.one();
            for &a in c {
                acc = self.st.mul(&acc, &self.odd(a as usize));
            }
            out.add_scaled(&acc, coef);
        }
        out
    }

    /// Evaluates generator words in the factorized algebra.
    pub fn to_factorized(&self, x: &Gen) -> Nc {
        let n = self.nc.dim();
        let mut out = Nc::zero();
        for (w, coef) in x {
            let mut acc = self.nc.one();
            for &l in w {
                let (a, odd) = self.decode(l);
                let v = unit_vector(n, a);
                let g = if odd { self.nc.odd(&v) } else { self.nc.bar(&v) };
                acc = self.nc.mul(&acc, &g);
            }
            out.add_scaled(&acc, coef);
        }
        out
    }
}

impl SuperAlgebra for KoszulPbw {
    type Mono = Word;
    fn parity(&self, m: &Word) -> Parity {
        self.st.word_parity(m)
    }
    fn unit_mono(&self) -> Word {
        Word::new()
    }
    fn mul_mono(&self, a: &Word, b: &Word) -> Gen {
        self.st.mul_mono(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    #[test]
    fn round_trip_through_generators() {
        let nc = NcWeil::new(&catalog_entry("sl2").unwrap().algebra).unwrap();
        let nc = Arc::new(nc);
        let k = KoszulPbw::new(nc.clone(), &[2, 1, 0]);
        let x = &nc.mul(&nc.hat(&unit_vector(3, 0)), &nc.odd(&unit_vector(3, 2))) + nc.dirac();
        assert_eq!(k.to_factorized(&k.from_factorized(&x)), x);
        // ξ̄ commutes past ξ with the bracket
        let lhs = k.commutator(&k.bar(0), &k.odd(2));
        assert_eq!(k.to_factorized(&lhs), nc.odd(&unit_vector(3, 1)));
    }
}
