//! Exterior and Clifford algebras: Chevalley quantization and its inverse,
//! the maps γ and λ, contractions, and exponentials of quadratic forms.
//!
//! Exterior algebras are [`FreeSuperComm::exterior`] (odd generators only).
//! Clifford normal form is a strictly increasing word, with relation
//! `x y + y x = B(x, y)`; in particular `x x = ½ B(x, x)`.

use crate::algebra::{symmetrize, SuperAlgebra};
use crate::element::{Element, Parity};
use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, QuadraticLieAlgebra};
use crate::matrix::Matrix;
use crate::rewrite::{Bracket, Straightener, Word};
use crate::scalar::Scalar;
use crate::supercomm::{FreeSuperComm, ScMono};

pub type Ext = Element<ScMono>;
pub type Cl = Element<Word>;

/// `Cl(V, B)` on the basis of `V`.
pub struct Clifford {
    st: Straightener,
    form: Matrix,
}

impl Clifford {
    pub fn new(form: &Matrix) -> Self {
        let n = form.rows();
        let st = Straightener::new(vec![Parity::Odd; n], |i, j| Bracket {
            linear: Vec::new(),
            constant: form[(i, j)].clone(),
        });
        Clifford { st, form: form.clone() }
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn generator(&self, i: usize) -> Cl {
        self.st.generator(i)
    }

    pub fn vector(&self, v: &[Scalar]) -> Cl {
        self.st.vector(v)
    }

    /// Chevalley quantization `∧V → Cl(V)`: super-symmetrization of each
    /// exterior monomial.
    pub fn quantize(&self, x: &Ext) -> Cl {
        let mut out = Cl::zero();
        for (m, c) in x {
            debug_assert!(m.even.is_empty(), "exterior element expected");
            if m.odd.len() <= 1 {
                out.add_term(m.odd.clone(), c.clone());
                continue;
            }
            let factors: Vec<(Cl, Parity)> = m.odd.iter().map(|&i| (self.generator(i as usize), Parity::Odd)).collect();
            let s = symmetrize(self, &factors, factors.len()).expect("cap equals length");
            out.add_scaled(&s, c);
        }
        out
    }

    /// Inverse of [`Clifford::quantize`], by peeling off the top degree:
    /// `q(ω) = ω + (lower degree)` for every exterior monomial `ω`.
    pub fn symbol(&self, x: &Cl) -> Ext {
        let mut rest = x.clone();
        let mut out = Ext::zero();
        while let Some(top) = rest.monomials().map(|w| w.len()).max() {
            let lead: Ext = rest
                .iter()
                .filter(|(w, _)| w.len() == top)
                .map(|(w, c)| (ScMono { even: Word::new(), odd: w.clone() }, c.clone()))
                .collect();
            rest -= &self.quantize(&lead);
            out += &lead;
        }
        out
    }
}

impl SuperAlgebra for Clifford {
    type Mono = Word;

    fn parity(&self, m: &Word) -> Parity {
        Parity::of_count(m.len())
    }

    fn unit_mono(&self) -> Word {
        Word::new()
    }

    fn mul_mono(&self, a: &Word, b: &Word) -> Cl {
        self.st.mul_mono(a, b)
    }
}

/// `γ(ζ) = ½ Σ_a [ζ, e_a] e^a` in `Cl(𝔤)`.
pub fn gamma(g: &QuadraticLieAlgebra, cl: &Clifford, zeta: &[Scalar]) -> Result<Cl> {
    let dual = g.dual_matrix()?;
    let n = g.dim();
    let mut out = Cl::zero();
    for a in 0..n {
        let br = g.lie().bracket(zeta, &crate::liealg::unit_vector(n, a));
        if br.iter().all(Scalar::is_zero) {
            continue;
        }
        out += &cl.mul(&cl.vector(&br), &cl.vector(&dual.row(a)));
    }
    Ok(out.scale(&Scalar::new(1, 2)))
}

/// `λ(μ) ∈ ∧²𝔤*` for `μ = Σ μ_c ε^c`, characterised by
/// `ι_ξ λ(μ) = -μ ∘ ad_ξ`: `λ(ε^c) = -½ Σ_{a,b} c_ab^c ε^a ε^b`.
pub fn lambda(l: &LieAlgebra, mu: &[Scalar]) -> Ext {
    let n = l.dim();
    let mut out = Ext::zero();
    for a in 0..n {
        for b in a + 1..n {
            // the (a,b) and (b,a) terms coincide after reordering
            let s: Scalar = (0..n).map(|c| &mu[c] * l.structure(a, b, c)).sum();
            if !s.is_zero() {
                out.add_term(ScMono::from_parts(&[], &[a as u8, b as u8]), -s);
            }
        }
    }
    out
}

/// Transport of `∧𝔤*` to `∧𝔤` along `ε^a ↦ e^a` (the B-identification).
pub fn dual_to_vectors(g: &QuadraticLieAlgebra, x: &Ext) -> Result<Ext> {
    let dual = g.dual_matrix()?;
    let ext = FreeSuperComm::exterior(g.dim());
    Ok(ext.hom_extend(&ext, x, &|_| unreachable!("exterior input"), &|a| ext.odd_vector(&dual.row(a))))
}

/// Super-contraction of `x ∈ ∧V` by `α ∈ ∧W`, where a generator `w_i`
/// acts as the odd derivation `v_j ↦ pairing[i][j]`. Products act as
/// `ι(α∧β) = ι(α)∘ι(β)`.
pub fn contract_pairing(pairing: &Matrix, alpha: &Ext, x: &Ext) -> Ext {
    let ext = FreeSuperComm::exterior(pairing.cols());
    let mut out = Ext::zero();
    for (m, c) in alpha {
        let mut acc = x.clone();
        for &i in m.odd.iter().rev() {
            let row = pairing.row(i as usize);
            acc = ext.derivation_extend(&acc, Parity::Odd, &|_| Ext::zero(), &|j| ext.scalar(row[j].clone()));
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Contraction of `∧V` by `∧V*` for the dual pairing.
pub fn contract(alpha: &Ext, x: &Ext, dim: usize) -> Ext {
    contract_pairing(&Matrix::identity(dim), alpha, x)
}

/// `exp(x)` for an even nilpotent element of an exterior algebra.
pub fn exp_nilpotent(ext: &FreeSuperComm, x: &Ext) -> Ext {
    let mut out = ext.one();
    let mut term = ext.one();
    let mut k = 1i64;
    loop {
        term = ext.mul(&term, x).scale(&Scalar::new(1, k));
        if term.is_zero() {
            return out;
        }
        out += &term;
        k += 1;
    }
}

/// `½ Σ_{a,b} m[b][a] x_b ∧ x_a`, the quadratic element attached to a
/// map whose column `a` is the image of the `a`-th basis vector.
pub fn quadratic_from_map(m: &Matrix) -> Ext {
    let n = m.rows();
    let mut out = Ext::zero();
    for a in 0..n {
        for b in 0..n {
            if a == b || m[(b, a)].is_zero() {
                continue;
            }
            // x_b ∧ x_a in normal order
            let sign = if b < a { Scalar::one() } else { Scalar::from_int(-1) };
            let mono = ScMono::from_parts(&[], &[a as u8, b as u8]);
            out.add_term(mono, &(&sign * &m[(b, a)]) * &Scalar::new(1, 2));
        }
    }
    out
}

/// Result of contracting `exp λ(A)` into `exp λ(B)`.
#[derive(Clone, Debug)]
pub struct ExpContraction {
    /// Degree-zero coefficient, a square root of `det(I + AB)`.
    pub scalar: Scalar,
    /// `λ(B (I + AB)⁻¹)`.
    pub quadratic: Ext,
    pub det: Scalar,
}

fn is_skew_square(m: &Matrix, n: usize) -> bool {
    m.rows() == n && m.cols() == n && m.is_skew()
}

/// Evaluates `ι(exp λ(A)) exp λ(B)` literally and checks it equals
/// `s · exp λ(B (I + AB)⁻¹)` with `s` its degree-zero part and
/// `s² = det(I + AB)`. `A: V → V*` and `B: V* → V` are skew.
pub fn contract_exponentials(a: &Matrix, b: &Matrix) -> Result<ExpContraction> {
    let n = a.rows();
    if !is_skew_square(a, n) || !is_skew_square(b, n) {
        return Err(Error::Invalid("contract_exponentials expects skew n×n matrices".into()));
    }
    let ext = FreeSuperComm::exterior(n);
    let lhs = contract(&exp_nilpotent(&ext, &quadratic_from_map(a)), &exp_nilpotent(&ext, &quadratic_from_map(b)), n);
    let iab = &Matrix::identity(n) + &(a * b);
    let inv = iab.inverse()?;
    let det = iab.det();
    let quadratic = quadratic_from_map(&(b * &inv));
    let scalar = ext.scalar_part(&lhs);
    let rhs = exp_nilpotent(&ext, &quadratic).scale(&scalar);
    if lhs != rhs {
        return Err(Error::Invalid(format!("contraction identity fails: lhs {lhs:?}, rhs {rhs:?}")));
    }
    if &scalar * &scalar != det {
        return Err(Error::Invalid(format!("degree-zero part {scalar} does not square to det {det}")));
    }
    Ok(ExpContraction { scalar, quadratic, det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{catalog_entry, unit_vector};
    use crate::scalar::q;

    fn sl2() -> QuadraticLieAlgebra {
        catalog_entry("sl2").unwrap().algebra
    }

    #[test]
    fn clifford_relations_in_sl2() {
        let g = sl2();
        let cl = Clifford::new(g.form());
        let (e, f) = (cl.generator(0), cl.generator(2));
        assert_eq!(&cl.mul(&e, &f) + &cl.mul(&f, &e), cl.one());
        assert!(cl.mul(&e, &e).is_zero());
        let h = cl.generator(1);
        assert_eq!(cl.mul(&h, &h), cl.one());
    }

    #[test]
    fn zero_form_is_exterior() {
        let cl = Clifford::new(&Matrix::zeros(3, 3));
        let ext = FreeSuperComm::exterior(3);
        let mons = ext.monomials_up_to(3);
        for m in &mons {
            for n in &mons {
                let x = ext.mul(&Element::monomial(m.clone()), &Element::monomial(n.clone()));
                let y = cl.mul(&Element::monomial(m.odd.clone()), &Element::monomial(n.odd.clone()));
                let y: Ext = y.iter().map(|(w, c)| (ScMono { even: Word::new(), odd: w.clone() }, c.clone())).collect();
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn quantize_two_factors() {
        let g = sl2();
        let cl = Clifford::new(g.form());
        let ef = Ext::monomial(ScMono::from_parts(&[], &[0, 2]));
        // ½(ef - fe) = ef - ½(ef + fe) = ef - ½
        let expect = &cl.mul(&cl.generator(0), &cl.generator(2)) - &cl.scalar(q(1, 2));
        assert_eq!(cl.quantize(&ef), expect);
    }

    #[test]
    fn symbol_inverts_quantize() {
        let form = Matrix::from_ints(&[&[2, 1, 0, 0], &[1, 0, 0, 3], &[0, 0, 1, 0], &[0, 3, 0, -1]]);
        let cl = Clifford::new(&form);
        let ext = FreeSuperComm::exterior(4);
        for m in ext.monomials_up_to(4) {
            let x = Ext::monomial(m);
            assert_eq!(cl.symbol(&cl.quantize(&x)), x);
        }
    }

    #[test]
    fn gamma_h_acts_by_ad_h() {
        let g = sl2();
        let cl = Clifford::new(g.form());
        let gh = gamma(&g, &cl, &unit_vector(3, 1)).unwrap();
        assert_eq!(cl.commutator(&gh, &cl.generator(0)), cl.generator(0).scale(&q(2, 1)));
        assert_eq!(cl.commutator(&gh, &cl.generator(2)), cl.generator(2).scale(&q(-2, 1)));
    }

    #[test]
    fn lambda_contraction_property() {
        let g = sl2();
        let l = g.lie();
        let ext = FreeSuperComm::exterior(3);
        for c in 0..3 {
            let lam = lambda(l, &unit_vector(3, c));
            for xi in 0..3 {
                // ι_ξ on ∧𝔤*: ε^a ↦ δ_{a,ξ}
                let lhs = ext.derivation_extend(&lam, Parity::Odd, &|_| Ext::zero(), &|a| {
                    if a == xi {
                        ext.one()
                    } else {
                        Ext::zero()
                    }
                });
                // -ε^c ∘ ad_ξ = -Σ_b c_{ξ b}^c ε^b
                let rhs: Ext = (0..3).map(|b| (ScMono::odd_gen(b), -l.structure(xi, b, c))).collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn quantized_lambda_is_gamma() {
        let g = sl2();
        let cl = Clifford::new(g.form());
        for z in 0..3 {
            let flat = g.flat(z);
            let lam = dual_to_vectors(&g, &lambda(g.lie(), &flat)).unwrap();
            assert_eq!(cl.quantize(&lam), gamma(&g, &cl, &unit_vector(3, z)).unwrap());
        }
    }

    #[test]
    fn contraction_basics() {
        let x = Ext::monomial(ScMono::from_parts(&[], &[0, 1]));
        let e0 = Ext::monomial(ScMono::odd_gen(0));
        assert_eq!(contract(&e0, &x, 2), Ext::monomial(ScMono::odd_gen(1)));
        assert_eq!(contract(&Ext::monomial(ScMono::one()), &x, 2), x);
        // ι(ε^0∧ε^1) = ι(ε^0)∘ι(ε^1): e0∧e1 ↦ ι0(-e0) = -1
        let both = Ext::monomial(ScMono::from_parts(&[], &[0, 1]));
        assert_eq!(contract(&both, &x, 2), Ext::term(ScMono::one(), q(-1, 1)));
    }

    #[test]
    fn exponential_contraction_trivial_cases() {
        let b = Matrix::from_ints(&[&[0, 2], &[-2, 0]]);
        let z = Matrix::zeros(2, 2);
        let r = contract_exponentials(&z, &b).unwrap();
        assert_eq!(r.scalar, Scalar::one());
        assert_eq!(r.quadratic, quadratic_from_map(&b));
        let r = contract_exponentials(&b, &z).unwrap();
        assert_eq!(r.scalar, Scalar::one());
        assert!(r.quadratic.is_zero());
    }

    #[test]
    fn exponential_contraction_two_dim() {
        // A = a·J, B = b·J with J = [[0,1],[-1,0]]: I + AB = (1 - ab) I
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let r = contract_exponentials(&j.scale(&q(3, 1)), &j.scale(&q(1, 2))).unwrap();
        assert_eq!(r.det, q(1, 4));
        assert_eq!(r.scalar, q(-1, 2));
    }

    #[test]
    fn exponential_contraction_random_four_dim() {
        use rand::{RngExt, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let skew = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut m = Matrix::zeros(4, 4);
            for i in 0..4 {
                for j in i + 1..4 {
                    let v = Scalar::from_int(rng.random_range(-2..=2));
                    m[(j, i)] = -&v;
                    m[(i, j)] = v;
                }
            }
            m
        };
        let mut done = 0;
        while done < 10 {
            let (a, b) = (skew(&mut rng), skew(&mut rng));
            if (&Matrix::identity(4) + &(&a * &b)).det().is_zero() {
                continue;
            }
            contract_exponentials(&a, &b).unwrap();
            done += 1;
        }
    }
}
