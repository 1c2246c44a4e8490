//! One function per subcommand, each returning rendered results and checks.

use weilalg::algebra::SuperAlgebra;
use weilalg::enveloping::{casimir, duflo_map, sym_invariants, Enveloping};
use weilalg::liealg::{unit_vector, CatalogEntry, QuadraticLieAlgebra};
use weilalg::report::{all_ok, compare, Check};
use weilalg::verify::{self, Settings, Suite};
use weilalg::weil::{casimir_curvature, NcWeil, W};
use weilalg::{Error, Result, Scalar};

use crate::render;

pub struct Output {
    pub result: Vec<String>,
    pub checks: Vec<Check>,
}

impl Output {
    fn checks(checks: Vec<Check>) -> Self {
        Output { result: Vec::new(), checks }
    }
}

pub fn verify(entry: &CatalogEntry, suite: Suite, settings: &Settings) -> Result<Output> {
    use rayon::prelude::*;
    let parts = match suite {
        Suite::All => vec![Suite::Core, Suite::Weil, Suite::Relative],
        s => vec![s],
    };
    // suites run concurrently; collecting keeps their fixed order
    let runs: Vec<Result<Vec<Check>>> = parts.par_iter().map(|&s| verify::run_suite(s, entry, settings)).collect();
    let mut checks = Vec::new();
    for r in runs {
        checks.extend(r?);
    }
    Ok(Output::checks(checks))
}

/// Duflo images of a basis of `(S^k 𝔤)^𝔤` for `k <= degree`, with their
/// centrality and, for quadratic algebras, multiplicativity on the Casimir.
pub fn duflo(g: &QuadraticLieAlgebra, degree: usize) -> Result<Output> {
    let u = Enveloping::new(g.lie());
    let mut result = Vec::new();
    let mut central = Vec::new();
    for k in 1..=degree {
        for p in sym_invariants(g.lie(), k) {
            let image = duflo_map(&u, &p, None)?;
            let label = render::polynomial(&p);
            central.push(if u.is_central(&image) { Ok(()) } else { Err(format!("duflo({label}) is not central")) });
            result.push(format!("duflo({label}) = {}", render::enveloping(&image)));
        }
    }
    let mut checks = vec![Check::from_result(
        format!("{}: duflo images are central", g.name),
        "duflo((Sg)^g) in Z(Ug)",
        all_ok(central),
    )
    .with_detail(format!("{} invariants of degree <= {degree}", result.len()))];
    if g.is_nondegenerate() {
        checks.extend(verify::duflo_multiplicativity_checks(g, degree)?);
    }
    Ok(Output { result, checks })
}

/// `𝒟` itself, with `[1⊗ξ, 𝒟] = ξ̄`, `L_ξ 𝒟 = 0` and the transgression.
pub fn dirac(g: &QuadraticLieAlgebra) -> Result<Output> {
    let nc = NcWeil::new(g)?;
    let n = g.dim();
    let d = nc.dirac();
    let iota = all_ok((0..n).map(|a| {
        let v = unit_vector(n, a);
        compare(&format!("e{a}"), &nc.iota(&v, d), &nc.bar(&v))
    }));
    let inv = all_ok(
        (0..n).map(|a| compare(&format!("e{a}"), &nc.lie_derivative(&unit_vector(n, a), d), &Default::default())),
    );
    let mut checks = vec![
        Check::from_result(format!("{}: dirac element generates bar", g.name), "[1 (x) x, D] = bar x", iota),
        Check::from_result(format!("{}: dirac element is invariant", g.name), "L_x D = 0", inv),
    ];
    checks.extend(verify::transgression_checks(&nc)?);
    Ok(Output { result: vec![format!("D = {}", render::ncweil(d))], checks })
}

pub fn dirac_square(g: &QuadraticLieAlgebra) -> Result<Output> {
    let nc = NcWeil::new(g)?;
    let (cas, tr) = casimir(g, nc.enveloping())?;
    let sq = nc.mul(nc.dirac(), nc.dirac());
    let q = nc.quantize(&casimir_curvature(g, nc.weil()));
    let result = vec![
        format!("Cas = {}", render::enveloping(&cas)),
        format!("tr(Cas) = {tr}, trace term tr/48 = {}", &tr * &Scalar::new(1, 48)),
        format!("D^2 = {}", render::ncweil(&sq)),
        format!("Q(sum hat e hat e) = {}", render::ncweil(&q)),
    ];
    Ok(Output { result, checks: weilalg::weil::dirac_square_checks(&nc)? })
}

/// Parses `x3`, `bx3`, `hx3` tokens into a product in `W𝔤`. Index `a`
/// stands for `B(e_a, ·)`, so the generators quantize to `1⊗e_a`, `ē_a`
/// and `ê_a + γ(e_a) - q(λ(e_a))`.
pub fn parse_monomial(g: &QuadraticLieAlgebra, nc: &NcWeil, tokens: &[String]) -> Result<W> {
    let w = nc.weil();
    let n = g.dim();
    let mut out = w.one();
    for t in tokens {
        let (kind, idx) = if let Some(i) = t.strip_prefix("bx") {
            ('b', i)
        } else if let Some(i) = t.strip_prefix("hx") {
            ('h', i)
        } else if let Some(i) = t.strip_prefix('x') {
            ('x', i)
        } else {
            return Err(Error::Parse(format!("bad generator token {t:?}; expected xN, bxN or hxN")));
        };
        let a: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index in token {t:?}")))?;
        if a >= n {
            return Err(Error::Parse(format!("token {t:?}: index {a} out of range for dimension {n}")));
        }
        let mut gen = W::zero();
        for b in 0..n {
            let c = g.b(a, b);
            if c.is_zero() {
                continue;
            }
            let term = match kind {
                'x' => w.mu(b),
                'h' => w.mu_even(b),
                _ => &w.mu_even(b) + w.lambda_of(b),
            };
            gen.add_scaled(&term, c);
        }
        out = w.mul(&out, &gen);
    }
    Ok(out)
}

pub fn quantize(g: &QuadraticLieAlgebra, tokens: &[String]) -> Result<Output> {
    let nc = NcWeil::new(g)?;
    let x = parse_monomial(g, &nc, tokens)?;
    let q = nc.quantize(&x);
    let n = g.dim();
    let w = nc.weil();
    let name = format!("{}: Q is a chain map on the input", g.name);
    let chain = compare("d", &nc.quantize(&w.d(&x)), &nc.d(&q)).and_then(|_| {
        all_ok((0..n).map(|b| {
            let v = unit_vector(n, b);
            compare(&format!("iota e{b}"), &nc.quantize(&w.iota(b, &x)), &nc.iota(&v, &q))?;
            compare(&format!("L e{b}"), &nc.quantize(&w.lie_derivative(b, &x)), &nc.lie_derivative(&v, &q))
        }))
    });
    let checks = vec![Check::from_result(name, "Q d = d Q, Q i_x = i_x Q, Q L_x = L_x Q", chain)];
    Ok(Output { result: vec![format!("Q({}) = {}", tokens.join(" "), render::ncweil(&q))], checks })
}

pub fn hc(entry: &CatalogEntry, max_degree: usize) -> Result<Output> {
    Ok(Output::checks(verify::harish_chandra(entry, max_degree)?))
}

pub fn vogan(entry: &CatalogEntry) -> Result<Output> {
    Ok(Output::checks(verify::vogan(entry)?))
}

pub fn rouviere(entry: &CatalogEntry, max_degree: usize) -> Result<Output> {
    Ok(Output::checks(verify::rouviere(entry, max_degree)?))
}

pub fn rigidity(g: &QuadraticLieAlgebra, max_degree: usize) -> Result<Output> {
    Ok(Output::checks(verify::rigidity(g, max_degree)?))
}
