//! Verification suites: every checkable identity of the library, grouped
//! into `core`, `weil` and `relative`, each producing an ordered list of
//! [`Check`] records.

use std::str::FromStr;
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::SuperAlgebra;
use crate::clifford::{contract_exponentials, gamma, Cl, Clifford};
use crate::enveloping::{casimir_polynomial, duflo_map, Enveloping};
use crate::error::{Error, Result};
use crate::liealg::{unit_vector, CatalogEntry, QuadraticLieAlgebra, SubalgebraDecomposition};
use crate::matrix::Matrix;
use crate::relative::{IsotropicQuotient, RelativePair, SymmetricPair, TriangularPair};
use crate::report::{all_ok, compare, Check};
use crate::scalar::Scalar;
use crate::series::series_tables;
use crate::supercomm::FreeSuperComm;
use crate::weil::{
    characteristic_map, dirac_square_checks, duflo_factorization_checks, ncweil_square, quantization_chain_checks,
    rigidity_checks, transgression, ConnectionSide, KoszulWeil, NcWeil, W,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Weil,
    Relative,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Suite::Core),
            "weil" => Ok(Suite::Weil),
            "relative" => Ok(Suite::Relative),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite {other:?}; expected core, weil, relative or all"))),
        }
    }
}

/// Truncation settings shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    /// Degree bound for Duflo, Harish-Chandra and Rouvière checks.
    pub max_degree: usize,
    /// Word length for the quantization chain-map check.
    pub chain_length: usize,
    /// Truncation of the convolution algebra in the rigidity check.
    pub rigidity_cap: usize,
    /// Number of random skew pairs in the exponential contraction check.
    pub random_pairs: usize,
    pub seed: u64,
}

impl Settings {
    pub fn with_max_degree(max_degree: usize) -> Self {
        Settings { max_degree, chain_length: max_degree + 1, rigidity_cap: 4, random_pairs: 50, seed: 84 }
    }
}

impl Default for Settings {
    fn default() -> Self {
        Settings::with_max_degree(4)
    }
}

fn name_of(g: &QuadraticLieAlgebra) -> &str {
    &g.name
}

/// `b_{2k} = B_{2k} / (2k (2k)!)` from Bernoulli numbers, an evaluation of
/// `ln j` independent of the power-series logarithm.
pub fn bernoulli_ln_j(two_k: usize) -> Scalar {
    let mut b = vec![Scalar::one()];
    for m in 1..=two_k {
        // Σ_{j<m} C(m+1, j) B_j = -(m+1) B_m
        let mut s = Scalar::zero();
        let mut binom = Scalar::one();
        for (j, bj) in b.iter().enumerate() {
            s += &(&binom * bj);
            binom = &(&binom * &Scalar::from_int((m + 1 - j) as i64)) * &Scalar::new(1, (j + 1) as i64);
        }
        b.push(-&s * Scalar::new(1, (m + 1) as i64));
    }
    &b[two_k] * &(Scalar::factorial(two_k as u32) * Scalar::from_int(two_k as i64)).recip()
}

/// Series coefficients of `ln j` and `(ln j)'` against the stated values and
/// against the Bernoulli evaluation.
pub fn series_checks() -> Result<Vec<Check>> {
    let t = series_tables(8)?;
    let stated = [
        ("b_2", t.b(2), Scalar::new(1, 24)),
        ("b_4", t.b(4), Scalar::new(-1, 2880)),
        ("(ln j)'_1", t.dln_j[1].clone(), Scalar::new(1, 12)),
        ("(ln j)'_3", t.dln_j[3].clone(), Scalar::new(-1, 720)),
    ];
    let values = all_ok(stated.iter().map(|(name, got, want)| {
        if got == want {
            Ok(())
        } else {
            Err(format!("{name}: computed {got}, expected {want}"))
        }
    }));
    let oracle = all_ok((1..=4).map(|k| {
        let (got, want) = (t.b(2 * k), bernoulli_ln_j(2 * k));
        let dgot = t.dln_j[2 * k - 1].clone();
        let dwant = &want * &Scalar::from_int(2 * k as i64);
        if got != want || dgot != dwant {
            Err(format!("k = {k}: series gives ({got}, {dgot}), bernoulli gives ({want}, {dwant})"))
        } else {
            Ok(())
        }
    }));
    Ok(vec![
        Check::from_result(
            "series: leading coefficients",
            "b2 = 1/24, b4 = -1/2880, (ln j)' = z/12 - z^3/720 + ...",
            values,
        ),
        Check::from_result("series: bernoulli oracle", "b_2k = B_2k / (2k (2k)!)", oracle),
    ])
}

/// `[γ(x), γ(y)] = γ([x, y])`, and `[γ(ζ), ·]` is the derivation of `Cl(𝔤)`
/// extending `ad_ζ`, on every Clifford basis word.
pub fn gamma_checks(g: &QuadraticLieAlgebra) -> Result<Vec<Check>> {
    let n = g.dim();
    let cl = Clifford::new(g.form());
    let gammas: Vec<Cl> = (0..n).map(|a| gamma(g, &cl, &unit_vector(n, a))).collect::<Result<_>>()?;
    let hom = all_ok((0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| {
        let lhs = cl.commutator(&gammas[a], &gammas[b]);
        let rhs = gamma(g, &cl, &g.bracket_basis(a, b)).map_err(|e| e.to_string())?;
        compare(&format!("a={a}, b={b}"), &lhs, &rhs)
    }));
    let words: Vec<_> = (0..=n).flat_map(|k| crate::supercomm::subsets(n, k)).collect();
    let der = all_ok((0..n).flat_map(|a| words.iter().map(move |w| (a, w))).map(|(a, w)| {
        let x = Cl::monomial(w.clone());
        let mut expect = Cl::zero();
        for i in 0..w.len() {
            let mut acc = cl.one();
            for (j, &l) in w.iter().enumerate() {
                let f = if i == j { cl.vector(&g.bracket_basis(a, l as usize)) } else { cl.generator(l as usize) };
                acc = cl.mul(&acc, &f);
            }
            expect += &acc;
        }
        compare(&format!("a={a}, word={w:?}"), &cl.commutator(&gammas[a], &x), &expect)
    }));
    let name = name_of(g);
    Ok(vec![
        Check::from_result(format!("{name}: gamma is a homomorphism"), "[gamma(x), gamma(y)] = gamma([x,y])", hom),
        Check::from_result(format!("{name}: gamma implements ad"), "[gamma(z), .] = L_z on Cl(g)", der)
            .with_detail(format!("{} Clifford words", words.len())),
    ])
}

/// `duflo(pq) = duflo(p) duflo(q)` for polynomials in the Casimir of total
/// degree at most `max_deg`, with the control that `sym` alone is not
/// multiplicative whenever that is the case.
pub fn duflo_multiplicativity_checks(g: &QuadraticLieAlgebra, max_deg: usize) -> Result<Vec<Check>> {
    let u = Enveloping::new(g.lie());
    let ring = FreeSuperComm::polynomial(g.dim());
    let cas = casimir_polynomial(g)?;
    let mut powers = vec![(0usize, ring.one())];
    while powers.last().map_or(0, |p| p.0) + 2 <= max_deg {
        let (d, p) = powers.last().expect("nonempty");
        let next = ring.mul(p, &cas);
        powers.push((d + 2, next));
    }
    let mut duflo = Vec::new();
    let mut sym_ok = true;
    for (dp, p) in &powers {
        for (dq, q) in &powers {
            if dp + dq > max_deg {
                continue;
            }
            let pq = ring.mul(p, q);
            let lhs = duflo_map(&u, &pq, None)?;
            let rhs = u.mul(&duflo_map(&u, p, None)?, &duflo_map(&u, q, None)?);
            duflo.push(compare(&format!("Cas^{} * Cas^{}", dp / 2, dq / 2), &lhs, &rhs));
            sym_ok &= u.sym(&pq) == u.mul(&u.sym(p), &u.sym(q));
        }
    }
    let name = name_of(g);
    let mut out = vec![Check::from_result(
        format!("{name}: duflo map is multiplicative on Casimir polynomials"),
        "duflo(pq) = duflo(p) duflo(q)",
        all_ok(duflo),
    )
    .with_detail(format!("total degree <= {max_deg}"))];
    if !sym_ok {
        out.push(Check::pass(
            format!("{name}: symmetrization alone is not multiplicative"),
            "sym(pq) != sym(p) sym(q) (negative control)",
        ));
    }
    Ok(out)
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = Scalar::new(rng.random_range(-3..=3), rng.random_range(1..=3));
            m[(i, j)] = v.clone();
            m[(j, i)] = -v;
        }
    }
    m
}

/// Contraction of exponentials of quadratic forms on `count` random skew
/// pairs with `dim V ∈ {2, 3, 4}`.
pub fn contraction_checks(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut singular = 0;
    let mut result = Ok(());
    while done < count && result.is_ok() {
        let n = 2 + done % 3;
        let (a, b) = (random_skew(&mut rng, n), random_skew(&mut rng, n));
        if (&Matrix::identity(n) + &(&a * &b)).det().is_zero() {
            singular += 1;
            continue;
        }
        done += 1;
        if let Err(e) = contract_exponentials(&a, &b) {
            result = Err(format!("A = {a:?}, B = {b:?}: {e}"));
        }
    }
    Check::from_result(
        "exponential contraction identity",
        "i(exp lambda(A)) exp lambda(B) = s exp lambda(B (1 + AB)^-1), s^2 = det(1 + AB)",
        result,
    )
    .with_detail(format!("{done} random skew pairs, dims 2..4, seed {seed}, {singular} singular draws skipped"))
}

/// `h(Σ ê ê) = Σ ē_a e^a - (2/3) Σ λ(e_a) e^a`, its differential, and
/// `Q` of it is `𝒟`.
pub fn transgression_checks(nc: &NcWeil) -> Result<Vec<Check>> {
    let g = nc.algebra();
    let w = nc.weil();
    let t = transgression(g, w)?;
    let name = name_of(g);
    Ok(vec![
        Check::from_result(
            format!("{name}: transgression closed form"),
            "h(sum hat e_a hat e^a) = sum bar e_a e^a - 2/3 sum lambda(e_a) e^a",
            compare("h(sum hat e hat e)", &t.from_homotopy, &t.closed_form),
        ),
        Check::from_result(
            format!("{name}: transgression is a primitive"),
            "d(transgression) = sum hat e_a hat e^a",
            compare("d(closed form)", &w.d(&t.closed_form), &t.casimir),
        ),
        Check::from_result(
            format!("{name}: quantized transgression is the dirac element"),
            "Q(transgression) = D",
            compare("Q(closed form)", &nc.quantize(&t.closed_form), nc.dirac()),
        ),
    ])
}

/// Characteristic maps: identity for the tautological connection, `Q` for
/// the canonical one, and a chain map in both cases.
pub fn characteristic_checks(nc: &NcWeil, max_len: usize) -> Result<Vec<Check>> {
    let w = nc.weil();
    let k = KoszulWeil(w);
    let monos = w.ring().monomials_up_to(max_len);
    let mut ident = Vec::new();
    let mut quant = Vec::new();
    let mut chain = Vec::new();
    for m in &monos {
        let x = W::monomial(m.clone());
        ident.push(compare(&format!("{m:?}"), &characteristic_map(&k, &x)?, &x));
        let c = characteristic_map(nc, &x)?;
        quant.push(compare(&format!("{m:?}"), &c, &nc.quantize_koszul(&x)));
        chain.push(compare(&format!("{m:?}"), &nc.d(&c), &characteristic_map(nc, &w.koszul_d(&x))?));
    }
    let name = name_of(nc.algebra());
    let detail = format!("{} Koszul monomials of length <= {max_len}", monos.len());
    Ok(vec![
        Check::from_result(
            format!("{name}: tautological characteristic map is the identity"),
            "c^theta = id on Wg",
            all_ok(ident),
        )
        .with_detail(detail.clone()),
        Check::from_result(
            format!("{name}: canonical characteristic map is Q"),
            "c^theta = Q for theta(mu^a) = e^a",
            all_ok(quant),
        )
        .with_detail(detail.clone()),
        Check::from_result(
            format!("{name}: characteristic map is a chain map"),
            "D c^theta = c^theta d",
            all_ok(chain),
        )
        .with_detail(detail),
    ])
}

pub fn core_suite(entry: &CatalogEntry, s: &Settings) -> Result<Vec<Check>> {
    let g = &entry.algebra;
    let mut out = g.validate();
    if !out.iter().all(Check::passed) {
        return Ok(out);
    }
    out.extend(series_checks()?);
    if g.is_nondegenerate() {
        out.extend(gamma_checks(g)?);
        out.extend(duflo_multiplicativity_checks(g, s.max_degree)?);
    }
    out.push(contraction_checks(s.random_pairs, s.seed));
    Ok(out)
}

/// Rigidity of the two characteristic maps `𝒲𝔤 → 𝒲𝔤 ⊗ 𝒲𝔤`.
pub fn rigidity(g: &QuadraticLieAlgebra, cap: usize) -> Result<Vec<Check>> {
    let nc = Arc::new(NcWeil::new(g)?);
    let a0 = ncweil_square(nc.clone(), ConnectionSide::Left);
    let a1 = ncweil_square(nc.clone(), ConnectionSide::Right);
    rigidity_checks(nc.weil(), &a0, &a1, cap, &format!("{}: rigidity on W(x)W", g.name))
}

pub fn weil_suite(entry: &CatalogEntry, s: &Settings) -> Result<Vec<Check>> {
    let g = &entry.algebra;
    if !g.is_nondegenerate() {
        return Ok(Vec::new());
    }
    let nc = NcWeil::new(g)?;
    let mut out = dirac_square_checks(&nc)?;
    out.extend(transgression_checks(&nc)?);
    out.extend(quantization_chain_checks(&nc, s.chain_length));
    out.extend(duflo_factorization_checks(&nc, s.max_degree)?);
    out.extend(characteristic_checks(&nc, s.max_degree)?);
    out.extend(rigidity(g, s.rigidity_cap)?);
    Ok(out)
}

fn decomposition(entry: &CatalogEntry) -> Result<&SubalgebraDecomposition> {
    entry
        .decomposition
        .as_ref()
        .ok_or_else(|| Error::Invalid(format!("{} carries no subalgebra decomposition", entry.name)))
}

/// Relative Dirac square, basicness and the Vogan cocycle identities.
pub fn vogan(entry: &CatalogEntry) -> Result<Vec<Check>> {
    decomposition(entry)?;
    let r = RelativePair::from_entry(entry)?;
    let mut out = r.dirac_checks()?;
    out.extend(r.standard_vogan_checks()?);
    Ok(out)
}

/// Harish-Chandra projection checks for a triangular decomposition.
pub fn harish_chandra(entry: &CatalogEntry, max_degree: usize) -> Result<Vec<Check>> {
    if decomposition(entry)?.n_minus.is_empty() {
        return Err(Error::Invalid(format!("{} has no triangular decomposition", entry.name)));
    }
    TriangularPair::from_entry(entry)?.checks(max_degree)
}

/// Duflo-Rouvière checks for a symmetric pair: identity when `[𝔭, 𝔭] = 0`,
/// multiplicativity, invariance and the ideal property.
pub fn rouviere(entry: &CatalogEntry, max_degree: usize) -> Result<Vec<Check>> {
    let dec = decomposition(entry)?;
    if !dec.n_minus.is_empty() || !dec.n_plus.is_empty() {
        return Err(Error::Invalid(format!("{} carries a triangular, not a symmetric, decomposition", entry.name)));
    }
    let sp = SymmetricPair::from_entry(entry)?;
    let mut out = Vec::new();
    if sp.p_is_abelian() {
        out.push(sp.identity_check(max_degree.min(3))?);
    }
    out.extend(sp.multiplicativity_checks(max_degree)?);
    out.push(sp.ideal_check(max_degree));
    Ok(out)
}

/// `d² = 0` on the isotropic quotient, the twisted `γ`, and Chern-Weil.
pub fn isotropic(entry: &CatalogEntry) -> Result<Vec<Check>> {
    let q = IsotropicQuotient::from_entry(entry)?;
    let mut out = vec![q.d_squared_check(3), q.twist_check()?];
    out.extend(q.chern_weil_checks(2)?);
    Ok(out)
}

/// Every relative construction the entry's decompositions support.
pub fn relative_suite(entry: &CatalogEntry, s: &Settings) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let Some(dec) = &entry.decomposition else {
        return Ok(out);
    };
    if !dec.k.is_empty() {
        out.extend(vogan(entry)?);
        out.extend(RelativePair::from_entry(entry)?.commutant_checks(3));
    }
    if dec.n_minus.is_empty() {
        out.extend(rouviere(entry, s.max_degree)?);
    } else {
        out.extend(harish_chandra(entry, s.max_degree)?);
    }
    if entry.isotropic.is_some() {
        out.extend(isotropic(entry)?);
    }
    Ok(out)
}

pub fn run_suite(suite: Suite, entry: &CatalogEntry, s: &Settings) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Core => core_suite(entry, s)?,
        Suite::Weil => weil_suite(entry, s)?,
        Suite::Relative => relative_suite(entry, s)?,
        Suite::All => {
            let mut v = core_suite(entry, s)?;
            v.extend(weil_suite(entry, s)?);
            v.extend(relative_suite(entry, s)?);
            v
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog_entry;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_ln_j(2), Scalar::new(1, 24));
        assert_eq!(bernoulli_ln_j(4), Scalar::new(-1, 2880));
    }

    #[test]
    fn core_suite_on_sl2() {
        let e = catalog_entry("sl2").unwrap();
        let checks = core_suite(&e, &Settings::default()).unwrap();
        for c in &checks {
            assert!(c.passed(), "{} {:?}", c.name, c.witness);
        }
        assert!(checks.iter().any(|c| c.name.contains("symmetrization alone")));
    }
}
