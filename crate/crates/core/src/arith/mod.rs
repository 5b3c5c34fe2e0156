//! Exact arithmetic building blocks: rationals, univariate polynomials and
//! rational functions over Q, multi-quadratic surds, truncated Laurent series
//! and dense linear algebra over Q.

pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod series;
pub mod surd;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q", "p" or "-p/q".
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn fmt_q(v: &Q) -> String {
    v.to_string()
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization of |n| with multiplicities. Trial division up to 10^6;
/// a remaining cofactor below 10^12 is then prime. Larger cofactors are
/// accepted only when they are perfect squares of such primes.
pub fn factor(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return Err(Error::InvalidParameter("cannot factor zero".into()));
    }
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let lim = BigInt::from(TRIAL_LIMIT);
        if n <= &lim * &lim {
            out.push((n, 1));
        } else {
            let r = n.sqrt();
            if &r * &r == n && r <= &lim * &lim {
                out.push((r, 2));
            } else {
                return Err(Error::InvalidParameter(format!(
                    "integer too large to factor: {n}"
                )));
            }
        }
    }
    Ok(out)
}

/// Positive divisors of |n|.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut ds = vec![BigInt::one()];
    for (p, e) in factor(n)? {
        let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
        for d in &ds {
            let mut m = d.clone();
            for _ in 0..=e {
                next.push(m.clone());
                m *= &p;
            }
        }
        ds = next;
    }
    ds.sort();
    Ok(ds)
}

/// Writes a nonzero rational r as s^2 * k with k a signed squarefree integer.
/// Returns (s, k).
pub fn square_free_decomposition(r: &Q) -> Result<(Q, BigInt)> {
    if r.is_zero() {
        return Err(Error::InvalidParameter("zero has no squarefree part".into()));
    }
    // r = n/d = n*d / d^2
    let m = r.numer() * r.denom();
    let mut k = if m.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut s = BigInt::one();
    for (p, e) in factor(&m)? {
        if e % 2 == 1 {
            k *= &p;
        }
        s *= num_traits::pow(p, (e / 2) as usize);
    }
    Ok((Q::new(s, r.denom().clone()), k))
}

/// Rational square root, if r is a square in Q.
pub fn rational_sqrt(r: &Q) -> Option<Q> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &n * &n == *r.numer() && &d * &d == *r.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

pub fn to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

pub fn lcm_int(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-24", "3/2", "-7/9"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(parse_q("4/6").unwrap(), qf(2, 3));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn squarefree_parts() {
        let (s, k) = square_free_decomposition(&q(720)).unwrap();
        assert_eq!(k, BigInt::from(5));
        assert_eq!(s, q(12));
        let (s, k) = square_free_decomposition(&qf(-3, 8)).unwrap();
        // -3/8 = (1/4)^2 * (-6)
        assert_eq!(k, BigInt::from(-6));
        assert_eq!(s, qf(1, 4));
        assert_eq!(rational_sqrt(&qf(9, 4)), Some(qf(3, 2)));
        assert_eq!(rational_sqrt(&q(2)), None);
    }

    #[test]
    fn divisor_enumeration() {
        let ds = divisors(&BigInt::from(24)).unwrap();
        let want: Vec<BigInt> = [1, 2, 3, 4, 6, 8, 12, 24].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(ds, want);
    }
}
