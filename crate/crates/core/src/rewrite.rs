//! PBW straightening for enveloping algebras of super Lie algebras with a
//! central element set to 1.
//!
//! One engine covers U𝔤 (all generators even, linear brackets), Cl(V) (all
//! odd, scalar brackets) and the generator presentation of the
//! noncommutative Weil algebra (mixed). Normal form: generator indices
//! non-decreasing, odd generators not repeated.

use dashmap::DashMap;
use smallvec::SmallVec;

use crate::algebra::SuperAlgebra;
use crate::element::{Element, Parity};
use crate::scalar::Scalar;

/// A normal-form word of generator indices.
pub type Word = SmallVec<[u8; 12]>;

/// Super bracket `[x_i, x_j] = Σ c_k x_k + s·1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bracket {
    pub linear: Vec<(u8, Scalar)>,
    pub constant: Scalar,
}

impl Bracket {
    pub fn is_zero(&self) -> bool {
        self.linear.is_empty() && self.constant.is_zero()
    }
}

pub struct Straightener {
    parity: Vec<Parity>,
    /// Row-major `n×n`; only entries with `i >= j` are read.
    bracket: Vec<Bracket>,
    cache: DashMap<(Word, u8), Element<Word>>,
}

impl Straightener {
    /// `bracket(i, j)` is queried for `i > j`, and for `i == j` when the
    /// generator is odd.
    pub fn new(parity: Vec<Parity>, bracket: impl Fn(usize, usize) -> Bracket) -> Self {
        let n = parity.len();
        assert!(n < 256, "at most 255 generators");
        let mut table = vec![Bracket::default(); n * n];
        for i in 0..n {
            for j in 0..=i {
                if i == j && !parity[i].is_odd() {
                    continue;
                }
                table[i * n + j] = bracket(i, j);
            }
        }
        Straightener { parity, bracket: table, cache: DashMap::new() }
    }

    pub fn generators(&self) -> usize {
        self.parity.len()
    }

    pub fn gen_parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    fn br(&self, i: u8, j: u8) -> &Bracket {
        &self.bracket[i as usize * self.parity.len() + j as usize]
    }

    pub fn generator(&self, i: usize) -> Element<Word> {
        Element::monomial(Word::from_slice(&[i as u8]))
    }

    /// Linear combination `Σ v_i x_i`.
    pub fn vector(&self, v: &[Scalar]) -> Element<Word> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Word::from_slice(&[i as u8]), c.clone()))
            .collect()
    }

    /// `w · [x_i, x_j]` for a normal-form word `w`.
    fn times_bracket(&self, w: &Word, b: &Bracket) -> Element<Word> {
        let mut out = Element::zero();
        for (k, c) in &b.linear {
            out.add_scaled(&self.word_times_gen(w, *k), c);
        }
        out.add_term(w.clone(), b.constant.clone());
        out
    }

    /// Normal form of `w · x_g`.
    pub fn word_times_gen(&self, w: &Word, g: u8) -> Element<Word> {
        let last = match w.last() {
            None => return Element::monomial(Word::from_slice(&[g])),
            Some(&l) => l,
        };
        if last < g || (last == g && !self.parity[g as usize].is_odd()) {
            let mut v = w.clone();
            v.push(g);
            return Element::monomial(v);
        }
        let key = (w.clone(), g);
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let prefix: Word = Word::from_slice(&w[..w.len() - 1]);
        let out = if last == g {
            // x_g x_g = ½[x_g, x_g] for odd x_g
            self.times_bracket(&prefix, self.br(g, g)).scale(&Scalar::new(1, 2))
        } else {
            // w' x_l x_g = ± w' x_g x_l + w' [x_l, x_g]
            let swap_odd = self.parity[last as usize].koszul(self.parity[g as usize]);
            let mut out = Element::zero();
            for (m, c) in &self.word_times_gen(&prefix, g) {
                let c = if swap_odd { -c } else { c.clone() };
                out.add_scaled(&self.word_times_gen(m, last), &c);
            }
            out += &self.times_bracket(&prefix, self.br(last, g));
            out
        };
        self.cache.insert(key, out.clone());
        out
    }

    /// Normal form of an arbitrary word of generators.
    pub fn straighten(&self, letters: &[u8]) -> Element<Word> {
        let mut acc = Element::monomial(Word::new());
        for &g in letters {
            let mut next = Element::zero();
            for (m, c) in &acc {
                next.add_scaled(&self.word_times_gen(m, g), c);
            }
            acc = next;
        }
        acc
    }

    pub fn word_parity(&self, w: &Word) -> Parity {
        Parity::of_count(w.iter().filter(|&&g| self.parity[g as usize].is_odd()).count())
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

impl SuperAlgebra for Straightener {
    type Mono = Word;

    fn parity(&self, m: &Word) -> Parity {
        self.word_parity(m)
    }

    fn unit_mono(&self) -> Word {
        Word::new()
    }

    fn mul_mono(&self, a: &Word, b: &Word) -> Element<Word> {
        let mut acc = Element::monomial(a.clone());
        for &g in b {
            let mut next = Element::zero();
            for (m, c) in &acc {
                next.add_scaled(&self.word_times_gen(m, g), c);
            }
            acc = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[u8]) -> Word {
        Word::from_slice(s)
    }

    #[test]
    fn clifford_relations() {
        // two odd generators with B = [[0,1],[1,0]]
        let cl = Straightener::new(vec![Parity::Odd; 2], |i, j| Bracket {
            linear: vec![],
            constant: if i != j { Scalar::one() } else { Scalar::zero() },
        });
        let ba = cl.straighten(&[1, 0]);
        assert_eq!(ba, Element::term(w(&[0, 1]), Scalar::from_int(-1)) + Element::monomial(w(&[])));
        assert!(cl.straighten(&[0, 0]).is_zero());
    }

    #[test]
    fn heisenberg_pbw() {
        // [x1, x0] = x2 central
        let u = Straightener::new(vec![Parity::Even; 3], |i, j| Bracket {
            linear: if (i, j) == (1, 0) { vec![(2, Scalar::one())] } else { vec![] },
            constant: Scalar::zero(),
        });
        let yx = u.straighten(&[1, 0]);
        assert_eq!(yx, Element::monomial(w(&[0, 1])) + Element::monomial(w(&[2])));
        let yyx = u.straighten(&[1, 1, 0]);
        assert_eq!(yyx, Element::monomial(w(&[0, 1, 1])) + Element::term(w(&[1, 2]), Scalar::from_int(2)));
    }
}
