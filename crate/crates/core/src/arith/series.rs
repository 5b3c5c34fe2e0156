//! Truncated Laurent series in a local uniformizer t with surd coefficients.

use std::fmt;

use super::poly::Poly;
use super::surd::Surd;
use super::Q;
use crate::error::{Error, Result};

/// Marks a series that is exact (known to all orders).
pub const EXACT: i64 = i64::MAX / 4;

/// sum coeffs[i] t^(start + i) + O(t^prec). Coefficients beyond the stored
/// ones and below `prec` are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent {
    start: i64,
    coeffs: Vec<Surd>,
    prec: i64,
}

impl Laurent {
    pub fn new(start: i64, coeffs: Vec<Surd>, prec: i64) -> Self {
        let mut s = Laurent { start, coeffs, prec };
        s.normalize();
        s
    }

    pub fn exact(start: i64, coeffs: Vec<Surd>) -> Self {
        Laurent::new(start, coeffs, EXACT)
    }

    pub fn constant(c: Surd) -> Self {
        Laurent::exact(0, vec![c])
    }

    /// t^k exactly.
    pub fn monomial(k: i64) -> Self {
        Laurent::exact(k, vec![Surd::rational(super::q(1))])
    }

    pub fn zero_to(prec: i64) -> Self {
        Laurent { start: prec, coeffs: vec![], prec }
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.start = self.prec;
            }
            Some(k) => {
                self.coeffs.drain(..k);
                self.start += k as i64;
                while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                    self.coeffs.pop();
                }
                let keep = (self.prec - self.start).max(0) as usize;
                self.coeffs.truncate(keep);
            }
        }
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Order of the leading nonzero term, if one is known.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    /// Coefficient of t^n, None if n is beyond the known precision.
    pub fn coeff(&self, n: i64) -> Option<Surd> {
        if n >= self.prec {
            return None;
        }
        if n < self.start || n >= self.start + self.coeffs.len() as i64 {
            return Some(Surd::zero());
        }
        Some(self.coeffs[(n - self.start) as usize].clone())
    }

    pub fn truncate(&self, prec: i64) -> Laurent {
        Laurent::new(self.start, self.coeffs.clone(), self.prec.min(prec))
    }

    fn lower(&self) -> i64 {
        self.valuation().unwrap_or(self.prec)
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let prec = self.prec.min(o.prec);
        if self.coeffs.is_empty() {
            return o.truncate(prec);
        }
        if o.coeffs.is_empty() {
            return self.truncate(prec);
        }
        let lo = self.start.min(o.start);
        let hi = (self.start + self.coeffs.len() as i64)
            .max(o.start + o.coeffs.len() as i64)
            .min(prec);
        let coeffs = (lo..hi.max(lo))
            .map(|n| {
                let a = self.coeff(n).unwrap_or_default();
                let b = o.coeff(n).unwrap_or_default();
                &a + &b
            })
            .collect();
        Laurent::new(lo, coeffs, prec)
    }

    pub fn neg(&self) -> Laurent {
        Laurent { start: self.start, coeffs: self.coeffs.iter().map(|c| -c).collect(), prec: self.prec }
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Surd) -> Laurent {
        if s.is_zero() {
            return Laurent::zero_to(EXACT);
        }
        Laurent::new(self.start, self.coeffs.iter().map(|c| c * s).collect(), self.prec)
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let va = self.lower();
        let vb = o.lower();
        let prec = sat_add(va, o.prec).min(sat_add(vb, self.prec));
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Laurent::zero_to(prec);
        }
        let start = self.start + o.start;
        let len = ((prec - start).max(0) as usize).min(self.coeffs.len() + o.coeffs.len() - 1);
        let mut coeffs = vec![Surd::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Laurent::new(start, coeffs, prec)
    }

    /// Multiplicative inverse; exact inputs are inverted to `cap` terms of
    /// relative precision.
    pub fn inv(&self, cap: usize) -> Result<Laurent> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::Precision("inverse of a series with unknown leading term".into()))?;
        let rel = if self.prec == EXACT { cap as i64 } else { (self.prec - v).min(cap as i64) };
        let n = rel.max(0) as usize;
        let a0inv = self.coeffs[0].inv()?;
        let mut out: Vec<Surd> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(a0inv.clone());
                continue;
            }
            let mut acc = Surd::zero();
            for i in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc = &acc + &(&self.coeffs[i] * &out[k - i]);
            }
            out.push(-&(&acc * &a0inv));
        }
        Ok(Laurent::new(-v, out, -v + rel))
    }

    pub fn div(&self, o: &Laurent, cap: usize) -> Result<Laurent> {
        Ok(self.mul(&o.inv(cap)?))
    }

    pub fn pow(&self, e: u32) -> Laurent {
        let mut acc = Laurent::constant(Surd::rational(super::q(1)));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// p(s) by Horner's rule.
    pub fn eval_poly(p: &Poly, s: &Laurent) -> Laurent {
        let mut acc = Laurent::zero_to(EXACT);
        for a in p.coeffs().iter().rev() {
            acc = acc.mul(s).add(&Laurent::constant(Surd::rational(a.clone())));
        }
        acc
    }

    /// Rational coefficients only; None if some coefficient is irrational.
    pub fn rational_coeffs(&self) -> Option<Vec<Q>> {
        self.coeffs.iter().map(|c| c.as_rational()).collect()
    }
}

fn sat_add(a: i64, b: i64) -> i64 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        a + b
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})t^{}", self.start + i as i64))
            .collect();
        if self.prec == EXACT {
            write!(f, "{}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
        } else {
            write!(f, "{} + O(t^{})", terms.join(" + "), self.prec)
        }
    }
}
