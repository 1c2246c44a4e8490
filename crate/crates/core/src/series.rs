//! Truncated univariate formal power series and the coefficient tables of
//! `ln j(z)` and `(ln j)'(z)` for `j(z) = sinh(z/2)/(z/2)`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficients `c_0, …, c_N` of a series truncated after `z^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries(pub Vec<Scalar>);

impl PowerSeries {
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let mut out = vec![Scalar::zero(); n + 1];
        for (i, a) in self.0.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(n + 1 - i) {
                out[i + j] += &(a * b);
            }
        }
        PowerSeries(out)
    }

    /// `ln(f)` for `f(0) = 1`, via `ln(1 + u) = Σ (-1)^{n+1} uⁿ/n`.
    pub fn ln(&self) -> Result<PowerSeries> {
        if !self.coeff(0).is_one() {
            return Err(Error::Invalid("logarithm needs constant term 1".into()));
        }
        let n = self.order();
        let mut u = self.clone();
        u.0[0] = Scalar::zero();
        let mut out = PowerSeries(vec![Scalar::zero(); n + 1]);
        let mut pow = u.clone();
        for k in 1..=n {
            let c = Scalar::new(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            for (i, p) in pow.0.iter().enumerate() {
                out.0[i] += &(p * &c);
            }
            pow = pow.mul(&u);
        }
        Ok(out)
    }

    /// Term-wise derivative; the result is one order shorter.
    pub fn derivative(&self) -> PowerSeries {
        if self.0.len() <= 1 {
            return PowerSeries(vec![Scalar::zero()]);
        }
        PowerSeries(self.0.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from_int(k as i64)).collect())
    }
}

/// `j(z) = Σ_k (z/2)^{2k} / (2k+1)!` up to `z^order`.
pub fn j_series(order: usize) -> PowerSeries {
    let mut c = vec![Scalar::zero(); order + 1];
    for k in (0..=order).step_by(2) {
        c[k] = (Scalar::new(1, 2).pow(k as u32)) * Scalar::factorial(k as u32 + 1).recip();
    }
    PowerSeries(c)
}

/// Coefficients of `ln j(z) = Σ b_{2k} z^{2k}` and its derivative,
/// indexed by the power of `z`.
#[derive(Clone, Debug)]
pub struct SeriesTable {
    pub ln_j: Vec<Scalar>,
    pub dln_j: Vec<Scalar>,
}

impl SeriesTable {
    /// `b_{2k}`, the coefficient of `z^{2k}` in `ln j`.
    pub fn b(&self, two_k: usize) -> Scalar {
        self.ln_j.get(two_k).cloned().unwrap_or_default()
    }
}

pub fn series_tables(order: usize) -> Result<SeriesTable> {
    if order < 2 {
        return Err(Error::Invalid(format!("series order must be at least 2, got {order}")));
    }
    // one extra term so the derivative reaches z^order
    let ln_j = j_series(order + 1).ln()?;
    let dln_j = ln_j.derivative();
    let mut ln = ln_j.0;
    ln.truncate(order + 1);
    Ok(SeriesTable { ln_j: ln, dln_j: dln_j.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn leading_coefficients() {
        let t = series_tables(6).unwrap();
        assert_eq!(t.b(2), q(1, 24));
        assert_eq!(t.b(4), q(-1, 2880));
        assert_eq!(t.dln_j[1], q(1, 12));
        assert_eq!(t.dln_j[3], q(-1, 720));
        assert!(t.ln_j.iter().skip(1).step_by(2).all(Scalar::is_zero));
    }

    #[test]
    fn log_of_exp_series() {
        // e^z truncated, ln gives z
        let e = PowerSeries((0..6).map(|k| Scalar::factorial(k).recip()).collect());
        let l = e.ln().unwrap();
        assert_eq!(l.0[1], Scalar::one());
        assert!(l.0.iter().enumerate().all(|(k, c)| k == 1 || c.is_zero()));
    }
}
