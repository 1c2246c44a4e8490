//! Human-readable rendering of algebra elements and reports.

use std::fmt::Write;

use serde::Serialize;
use weilalg::enveloping::U;
use weilalg::liealg::Poly;
use weilalg::report::Check;
use weilalg::weil::Nc;
use weilalg::Scalar;

/// Joins `(monomial, coefficient)` pairs as `c m + c m - c m`.
fn terms<'a>(it: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (m, c) in it {
        let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        match (m.is_empty(), mag.is_one()) {
            (true, _) => out.push_str(&mag.to_string()),
            (false, true) => out.push_str(&m),
            (false, false) => {
                let _ = write!(out, "{mag} {m}");
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn letters(prefix: &str, w: &[u8]) -> Vec<String> {
    w.iter().map(|l| format!("{prefix}{l}")).collect()
}

/// `𝒲𝔤` element with `hxN` for `ξ̂` letters and `xN` for Clifford letters.
pub fn ncweil(x: &Nc) -> String {
    terms(x.into_iter().map(|((u, c), s)| {
        let mut parts = letters("hx", u);
        parts.extend(letters("x", c));
        (parts.join(" "), s)
    }))
}

/// PBW element with `eN` letters.
pub fn enveloping(x: &U) -> String {
    terms(x.into_iter().map(|(w, s)| (letters("e", w).join(" "), s)))
}

/// Polynomial on `𝔤*` with `eN` letters.
pub fn polynomial(p: &Poly) -> String {
    terms(p.into_iter().map(|(m, s)| (letters("e", &m.even).join(" "), s)))
}

#[derive(Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Serialize)]
pub struct Report {
    pub algebra: String,
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub result: Vec<String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(
        algebra: String,
        command: String,
        result: Vec<String>,
        checks: Vec<Check>,
        seconds: Option<f64>,
    ) -> Self {
        let passed = checks.iter().filter(|c| c.passed()).count();
        let failed = checks.len() - passed;
        Report { algebra, command, result, checks, summary: Summary { passed, failed, seconds } }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn text(&self, elapsed: f64) -> String {
        let mut out = format!("algebra: {}\ncommand: {}\n", self.algebra, self.command);
        for r in &self.result {
            let _ = writeln!(out, "  {r}");
        }
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag}  {}  [{}]", c.name, c.anchor);
            if let Some(d) = &c.detail {
                let _ = writeln!(out, "      {d}");
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
        }
        let _ =
            writeln!(out, "summary: {} passed, {} failed ({elapsed:.2} s)", self.summary.passed, self.summary.failed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use weilalg::rewrite::Word;

    #[test]
    fn signs_and_unit_coefficients() {
        let mut x = U::zero();
        x.add_term(Word::from_slice(&[0, 2]), Scalar::one());
        x.add_term(Word::from_slice(&[1]), Scalar::new(-1, 2));
        x.add_term(Word::new(), Scalar::from_int(-3));
        // terms follow the lexicographic word order
        assert_eq!(enveloping(&x), "-3 + e0 e2 - 1/2 e1");
        assert_eq!(enveloping(&U::zero()), "0");
    }
}
