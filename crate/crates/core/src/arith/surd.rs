//! Elements of the multi-quadratic field Q(i, sqrt(2), sqrt(3), ...): finite
//! sums of rational multiples of sqrt(k) over signed squarefree integers k,
//! where sqrt(k) for k < 0 means i*sqrt(|k|). These are linearly independent
//! over Q, so equality is a term-map comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{factor, square_free_decomposition, Q};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Surd {
    terms: BTreeMap<BigInt, Q>,
}

impl Surd {
    pub fn zero() -> Self {
        Surd { terms: BTreeMap::new() }
    }

    pub fn rational(v: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !v.is_zero() {
            terms.insert(BigInt::one(), v);
        }
        Surd { terms }
    }

    /// sqrt(r) for a rational r.
    pub fn sqrt(r: &Q) -> Result<Self> {
        if r.is_zero() {
            return Ok(Surd::zero());
        }
        let (s, k) = square_free_decomposition(r)?;
        let mut terms = BTreeMap::new();
        terms.insert(k, s);
        Ok(Surd { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|k| k.is_one())
    }

    pub fn rational_part(&self) -> Q {
        self.terms.get(&BigInt::one()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.is_rational().then(|| self.rational_part())
    }

    /// (radicand, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &Q)> {
        self.terms.iter()
    }

    pub fn scale(&self, s: &Q) -> Surd {
        if s.is_zero() {
            return Surd::zero();
        }
        Surd { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect() }
    }

    fn mul_keys(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // sqrt(a) * sqrt(b) = coeff * sqrt(key)
        let g = a.abs().gcd(&b.abs());
        let neg_a = a.is_negative();
        let neg_b = b.is_negative();
        let mag = (a.abs() / &g) * (b.abs() / &g);
        let key = if neg_a ^ neg_b { -mag } else { mag };
        let coeff = if neg_a && neg_b { -g } else { g };
        (coeff, key)
    }

    /// Galois conjugation flipping sqrt(p) for a prime p (p = -1 flips i).
    fn conjugate_at(&self, p: &BigInt) -> Surd {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let flips = if p == &-BigInt::one() { k.is_negative() } else { (k % p).is_zero() };
                (k.clone(), if flips { -v } else { v.clone() })
            })
            .collect();
        Surd { terms }
    }

    fn radical_primes(&self) -> Result<Vec<BigInt>> {
        let mut ps = Vec::new();
        for k in self.terms.keys() {
            if k.is_negative() {
                ps.push(-BigInt::one());
            }
            if k.abs() > BigInt::one() {
                for (p, _) in factor(k)? {
                    ps.push(p);
                }
            }
        }
        ps.sort();
        ps.dedup();
        Ok(ps)
    }

    pub fn inv(&self) -> Result<Surd> {
        if self.is_zero() {
            return Err(Error::InvalidParameter("inverse of zero surd".into()));
        }
        // multiply by conjugates until the denominator is rational
        let mut num = Surd::rational(Q::one());
        let mut den = self.clone();
        for p in self.radical_primes()? {
            let c = den.conjugate_at(&p);
            num = &num * &c;
            den = &den * &c;
        }
        let d = den
            .as_rational()
            .ok_or_else(|| Error::InvalidParameter("surd norm did not reduce to Q".into()))?;
        Ok(num.scale(&(Q::one() / d)))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| if k.is_one() { v.to_string() } else { format!("{v}*sqrt({k})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}

impl From<Q> for Surd {
    fn from(v: Q) -> Self {
        Surd::rational(v)
    }
}

impl<'a> Add<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        let mut terms = self.terms.clone();
        for (k, v) in &o.terms {
            let e = terms.entry(k.clone()).or_insert_with(Q::zero);
            *e += v;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        Surd { terms }
    }
}

impl<'a> Sub<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        let mut acc = Surd::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &o.terms {
                let (c, k) = Surd::mul_keys(ka, kb);
                let mut t = BTreeMap::new();
                t.insert(k, va * vb * Q::from_integer(c));
                acc = &acc + &Surd { terms: t };
            }
        }
        acc
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        &self + &o
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        &self - &o
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        &self * &o
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};

    #[test]
    fn square_roots_square_back() {
        for r in [q(2), q(-3), qf(5, 12), q(720), q(-1)] {
            let s = Surd::sqrt(&r).unwrap();
            assert_eq!(&s * &s, Surd::rational(r));
        }
    }

    #[test]
    fn products_of_independent_radicals() {
        let a = Surd::sqrt(&q(2)).unwrap();
        let b = Surd::sqrt(&q(3)).unwrap();
        let c = Surd::sqrt(&q(6)).unwrap();
        assert_eq!(&a * &b, c);
        let i = Surd::sqrt(&q(-1)).unwrap();
        let j = Surd::sqrt(&q(-2)).unwrap();
        assert_eq!(&i * &j, -&a);
    }

    #[test]
    fn inverse_in_biquadratic_field() {
        let x = &(&Surd::rational(q(1)) + &Surd::sqrt(&q(2)).unwrap()) + &Surd::sqrt(&q(-3)).unwrap();
        let xi = x.inv().unwrap();
        assert_eq!(&x * &xi, Surd::rational(q(1)));
    }
}
