//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weilalg::algebra::SuperAlgebra;
use weilalg::enveloping::{casimir_polynomial, Enveloping};
use weilalg::liealg::{catalog, catalog_entry, CatalogEntry};
use weilalg::report::Check;
use weilalg::series::series_tables;
use weilalg::supercomm::FreeSuperComm;
use weilalg::verify::{self, bernoulli_ln_j};
use weilalg::weil::{dirac_square_checks, duflo_factorization_checks, quantization_chain_checks, NcWeil};
use weilalg::Scalar;

type Outcome = Result<String, String>;

fn entry(name: &str) -> CatalogEntry {
    catalog_entry(name).unwrap_or_else(|| panic!("catalog entry {name}"))
}

fn nc(name: &str) -> NcWeil {
    NcWeil::new(&entry(name).algebra).expect("nondegenerate")
}

/// Every check passes and at least one ran.
fn all_pass(checks: &[Check]) -> Outcome {
    if checks.is_empty() {
        return Err("no checks ran".into());
    }
    match checks.iter().find(|c| !c.passed()) {
        Some(c) => Err(format!("{} [{}]: {}", c.name, c.anchor, c.witness.as_deref().unwrap_or(""))),
        None => Ok(format!("{} checks", checks.len())),
    }
}

fn require(checks: &[Check], fragment: &str) -> Result<(), String> {
    if checks.iter().any(|c| c.name.contains(fragment)) {
        Ok(())
    } else {
        Err(format!("no check named like {fragment:?}"))
    }
}

fn catalog_validity() -> Outcome {
    let mut checks = Vec::new();
    for e in catalog() {
        let v = e.algebra.validate();
        for name in ["antisymmetry", "jacobi", "form-symmetry", "form-invariance", "form-nondegeneracy"] {
            require(&v, name)?;
        }
        checks.extend(v.into_iter().map(|mut c| {
            c.name = format!("{}: {}", e.name, c.name);
            c
        }));
    }
    all_pass(&checks)
}

fn gamma_homomorphism() -> Outcome {
    let mut checks = Vec::new();
    for e in catalog().into_iter().filter(|e| e.algebra.is_nondegenerate()) {
        checks.extend(verify::gamma_checks(&e.algebra).map_err(|e| e.to_string())?);
    }
    all_pass(&checks)
}

fn dirac_square() -> Outcome {
    let mut checks = Vec::new();
    for name in ["abelian2", "sl2", "heis1", "dext-sl2"] {
        checks.extend(dirac_square_checks(&nc(name)).map_err(|e| e.to_string())?);
    }
    require(&checks, "quantized casimir")?;
    all_pass(&checks)
}

fn chain_map() -> Outcome {
    let mut checks = Vec::new();
    for name in ["sl2", "heis1"] {
        checks.extend(quantization_chain_checks(&nc(name), 5));
    }
    all_pass(&checks)
}

fn duflo_factorization() -> Outcome {
    let checks = duflo_factorization_checks(&nc("sl2"), 4).map_err(|e| e.to_string())?;
    all_pass(&checks)
}

fn duflo_multiplicativity() -> Outcome {
    let g = entry("sl2").algebra;
    let checks = verify::duflo_multiplicativity_checks(&g, 4).map_err(|e| e.to_string())?;
    require(&checks, "symmetrization alone is not multiplicative")?;
    // the control computed here from scratch: sym(Cas^2) differs from sym(Cas)^2
    let u = Enveloping::new(g.lie());
    let ring = FreeSuperComm::polynomial(g.dim());
    let cas = casimir_polynomial(&g).map_err(|e| e.to_string())?;
    let s = u.sym(&cas);
    if u.sym(&ring.mul(&cas, &cas)) == u.mul(&s, &s) {
        return Err("sym is multiplicative on Cas^2, negative control did not fire".into());
    }
    all_pass(&checks).map(|m| format!("{m}, sym control fails as expected"))
}

fn transgression() -> Outcome {
    let checks = verify::transgression_checks(&nc("sl2")).map_err(|e| e.to_string())?;
    require(&checks, "quantized transgression is the dirac element")?;
    all_pass(&checks)
}

fn rigidity() -> Outcome {
    let checks = verify::rigidity(&entry("sl2").algebra, 4).map_err(|e| e.to_string())?;
    all_pass(&checks).map(|m| format!("{m}, degree <= 3"))
}

fn vogan() -> Outcome {
    let checks = verify::vogan(&entry("sl2")).map_err(|e| e.to_string())?;
    for z in ["z = 1", "z = Cas_k", "z = Cas_k^2"] {
        require(&checks, &format!("vogan cocycle {z}"))?;
    }
    require(&checks, "relative dirac square")?;
    all_pass(&checks)
}

fn harish_chandra() -> Outcome {
    let checks = verify::harish_chandra(&entry("sl2"), 4).map_err(|e| e.to_string())?;
    for name in ["kappa_W factorizes", "kappa_W maps dirac to dirac", "square with tau", "square without tau fails"] {
        require(&checks, name)?;
    }
    all_pass(&checks)
}

fn contraction() -> Outcome {
    let c = verify::contraction_checks(50, 84);
    all_pass(std::slice::from_ref(&c)).map(|_| c.detail.unwrap_or_default())
}

fn rouviere() -> Outcome {
    let mut flat = Vec::new();
    for name in ["aff-semidirect", "sl2-semidirect"] {
        let checks = verify::rouviere(&entry(name), 3).map_err(|e| e.to_string())?;
        require(&checks, "rouviere map is the identity")?;
        flat.extend(checks);
    }
    let cubic = verify::rouviere(&entry("cubic-n3"), 4).map_err(|e| e.to_string())?;
    for name in ["rouviere map is multiplicative", "quotient kills the ideal"] {
        require(&cubic, name)?;
    }
    let all: Vec<Check> = flat.into_iter().chain(cubic).collect();
    all_pass(&all)
}

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `j(z) = sinh(z/2)/(z/2)` as a Taylor series, then `(ln j)' = j'/j` by
/// series division and `ln j` by termwise integration.
fn ln_j_oracle(order: usize) -> (Vec<Q>, Vec<Q>) {
    let mut j = vec![Q::zero(); order + 2];
    let mut fact = Q::one();
    for k in 0..=order + 1 {
        if k > 0 {
            fact *= q(k as i64 + 1, 1);
        }
        if k % 2 == 0 {
            // (z/2)^k / (k+1)!
            j[k] = q(1, 1 << k) / &fact;
        }
    }
    let dj: Vec<Q> = (0..=order).map(|k| &j[k + 1] * q(k as i64 + 1, 1)).collect();
    let mut quot = vec![Q::zero(); order + 1];
    for k in 0..=order {
        let mut acc = dj[k].clone();
        for i in 1..=k {
            acc -= &j[i] * &quot[k - i];
        }
        quot[k] = acc;
    }
    let ln: Vec<Q> = (0..=order).map(|k| if k == 0 { Q::zero() } else { &quot[k - 1] / q(k as i64, 1) }).collect();
    (ln, quot)
}

fn to_q(s: &Scalar) -> Q {
    s.to_big()
}

fn series() -> Outcome {
    let t = series_tables(8).map_err(|e| e.to_string())?;
    let (ln, dln) = ln_j_oracle(8);
    let stated = [
        (to_q(&t.b(2)), q(1, 24)),
        (to_q(&t.b(4)), q(-1, 2880)),
        (to_q(&t.dln_j[1]), q(1, 12)),
        (to_q(&t.dln_j[3]), q(-1, 720)),
    ];
    for (i, (got, want)) in stated.iter().enumerate() {
        if got != want {
            return Err(format!("stated coefficient {i}: got {got}, want {want}"));
        }
    }
    for k in 1..=8 {
        if to_q(&t.ln_j[k]) != ln[k] || to_q(&t.dln_j[k - 1]) != dln[k - 1] {
            return Err(format!(
                "z^{k}: library ({}, {}) vs oracle ({}, {})",
                t.ln_j[k],
                t.dln_j[k - 1],
                ln[k],
                dln[k - 1]
            ));
        }
        if k % 2 == 0 && to_q(&bernoulli_ln_j(k)) != ln[k] {
            return Err(format!("bernoulli evaluation disagrees at z^{k}"));
        }
    }
    Ok("b2 = 1/24, b4 = -1/2880, (ln j)' = z/12 - z^3/720, oracle agrees to z^8".into())
}

fn determinism() -> Outcome {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_weilalg"))
            .args(["--catalog", "sl2", "--jobs", jobs, "verify", "--suite", "all", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        Ok(out.stdout)
    };
    let (a, b, c) = (run("1")?, run("1")?, run("4")?);
    if a != b {
        return Err("two runs with identical configuration differ".into());
    }
    if a != c {
        return Err("output depends on --jobs".into());
    }
    Ok(format!("{} identical bytes across 3 runs (jobs 1, 1, 4)", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("catalog validity", catalog_validity),
        ("gamma homomorphism", gamma_homomorphism),
        ("dirac square", dirac_square),
        ("quantization chain map", chain_map),
        ("duflo factorization", duflo_factorization),
        ("duflo multiplicativity", duflo_multiplicativity),
        ("transgression", transgression),
        ("rigidity", rigidity),
        ("vogan", vogan),
        ("harish-chandra", harish_chandra),
        ("exponential contraction", contraction),
        ("rouviere", rouviere),
        ("series coefficients", series),
        ("determinism", determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.1} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                let short: String = why.chars().take(400).collect();
                println!("FAIL {:>2} {name} ({secs:.1} s): {short}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1} s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
