use proptest::prelude::*;
use weilalg::algebra::SuperAlgebra;
use weilalg::clifford::{Cl, Clifford};
use weilalg::enveloping::{Enveloping, U};
use weilalg::liealg::catalog_entry;
use weilalg::relative::{RelativePair, SymmetricPair};
use weilalg::rewrite::Word;
use weilalg::supercomm::FreeSuperComm;
use weilalg::weil::{KoszulPbw, Nc, NcWeil};
use weilalg::Scalar;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::new(n, d))
}

/// Sums of up to three words over `n` letters with lengths below `max_len`.
fn words(n: u8, max_len: usize) -> impl Strategy<Value = Vec<(Vec<u8>, Scalar)>> {
    prop::collection::vec((prop::collection::vec(0..n, 0..max_len), scalar()), 1..=3)
}

/// Evaluates each word as a product of generators.
fn build<A: SuperAlgebra<Mono = Word>>(
    alg: &A,
    gen: impl Fn(u8) -> weilalg::Element<Word>,
    terms: &[(Vec<u8>, Scalar)],
) -> weilalg::Element<Word> {
    let mut out = weilalg::Element::zero();
    for (w, c) in terms {
        let mut acc = alg.one();
        for &l in w {
            acc = alg.mul(&acc, &gen(l));
        }
        out.add_scaled(&acc, c);
    }
    out
}

fn sl2_u() -> Enveloping {
    Enveloping::new(catalog_entry("sl2").unwrap().algebra.lie())
}

fn nc_element(nc: &NcWeil, terms: &[(Vec<u8>, Scalar)]) -> Nc {
    // even letters are ξ̂ generators, odd letters Clifford generators
    let n = nc.dim();
    let mut out = Nc::zero();
    for (w, c) in terms {
        let mut acc = nc.one();
        for &l in w {
            let a = (l as usize) % n;
            let v = weilalg::liealg::unit_vector(n, a);
            let g = if (l as usize) < n { nc.hat(&v) } else { nc.odd(&v) };
            acc = nc.mul(&acc, &g);
        }
        out.add_scaled(&acc, c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_laws(a in any::<i64>(), b in 1i64..=i64::MAX, c in any::<i32>()) {
        let x = Scalar::new(a, b);
        let y = Scalar::from_int(c as i64);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&(&x * &y) + &x, &x * &(&y + &Scalar::one()));
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.recip(), Scalar::one());
        }
    }

    #[test]
    fn pbw_product_is_associative(a in words(3, 4), b in words(3, 4), c in words(3, 3)) {
        let u = sl2_u();
        let (x, y, z) = (build(&u, |l| u.generator(l as usize), &a), build(&u, |l| u.generator(l as usize), &b), build(&u, |l| u.generator(l as usize), &c));
        prop_assert_eq!(u.mul(&u.mul(&x, &y), &z), u.mul(&x, &u.mul(&y, &z)));
    }

    #[test]
    fn pbw_commutator_is_the_bracket(a in 0usize..3, b in 0usize..3) {
        let u = sl2_u();
        let lie = catalog_entry("sl2").unwrap().algebra;
        prop_assert_eq!(u.commutator(&u.generator(a), &u.generator(b)), u.vector(&lie.bracket_basis(a, b)));
    }

    #[test]
    fn clifford_is_associative_and_symbol_inverts_quantize(a in words(4, 4), b in words(4, 4), c in words(4, 3)) {
        let g = catalog_entry("heis1").unwrap().algebra;
        let cl = Clifford::new(g.form());
        let gen = |l: u8| cl.generator(l as usize);
        let (x, y, z): (Cl, Cl, Cl) = (build(&cl, gen, &a), build(&cl, gen, &b), build(&cl, gen, &c));
        prop_assert_eq!(cl.mul(&cl.mul(&x, &y), &z), cl.mul(&x, &cl.mul(&y, &z)));
        prop_assert_eq!(cl.quantize(&cl.symbol(&x)), x);
    }

    #[test]
    fn exterior_products_anticommute(i in 0usize..4, j in 0usize..4) {
        let ext = FreeSuperComm::exterior(4);
        let (a, b) = (ext.odd(i), ext.odd(j));
        prop_assert_eq!(ext.mul(&a, &b), -&ext.mul(&b, &a));
    }

    #[test]
    fn ncweil_differential_squares_to_zero(a in words(6, 4)) {
        let nc = NcWeil::new(&catalog_entry("sl2").unwrap().algebra).unwrap();
        let x = nc_element(&nc, &a);
        prop_assert!(nc.d(&nc.d(&x)).is_zero());
    }

    #[test]
    fn generator_presentation_round_trips(a in words(8, 4)) {
        let nc = std::sync::Arc::new(NcWeil::new(&catalog_entry("heis1").unwrap().algebra).unwrap());
        let pbw = KoszulPbw::new(nc.clone(), &[3, 2, 1, 0]);
        let x = nc_element(&nc, &a);
        prop_assert_eq!(pbw.to_factorized(&pbw.from_factorized(&x)), x);
    }

    #[test]
    fn relative_embedding_is_multiplicative(a in words(2, 3), b in words(2, 3)) {
        let r = RelativePair::from_entry(&catalog_entry("sl2").unwrap()).unwrap();
        let k = r.sub();
        let (x, y) = (nc_element(k, &a), nc_element(k, &b));
        prop_assert_eq!(r.embed(&k.mul(&x, &y)), r.ambient().mul(&r.embed(&x), &r.embed(&y)));
    }

    #[test]
    fn chi_is_multiplicative(a in words(2, 4), b in words(2, 4)) {
        let r = RelativePair::from_entry(&catalog_entry("heis1").unwrap()).unwrap();
        let uk = r.sub().enveloping();
        let gen = |l: u8| uk.generator(l as usize);
        let (x, y): (U, U) = (build(uk, gen, &a), build(uk, gen, &b));
        prop_assert_eq!(r.chi(&uk.mul(&x, &y)), r.ambient().mul(&r.chi(&x), &r.chi(&y)));
    }

    #[test]
    fn quotient_reduction_is_idempotent_and_kills_the_ideal(a in words(6, 4), i in 0usize..3) {
        let s = SymmetricPair::from_entry(&catalog_entry("cubic-n3").unwrap()).unwrap();
        let u = s.enveloping();
        let x = build(u, |l| u.generator(l as usize), &a);
        let r = s.quotient_reduce(&x);
        prop_assert_eq!(s.quotient_reduce(&r), r);
        let kf = &u.generator(s.p_dim() + i) + &u.scalar(s.character()[i].clone());
        prop_assert!(s.quotient_reduce(&u.mul(&x, &kf)).is_zero());
    }
}
