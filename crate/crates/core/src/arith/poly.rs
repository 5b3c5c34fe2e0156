use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{divisors, q, Q};
use crate::error::Result;

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(q(1))
    }

    pub fn x() -> Self {
        Poly { c: vec![q(0), q(1)] }
    }

    pub fn constant(v: Q) -> Self {
        Poly::new(vec![v])
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| q(v)).collect())
    }

    /// x^n
    pub fn monomial(n: usize, coeff: Q) -> Self {
        let mut c = vec![q(0); n + 1];
        c[n] = coeff;
        Poly::new(c)
    }

    /// Product of (x - r) over the given roots.
    pub fn from_roots(roots: &[Q]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| {
            acc * Poly::new(vec![-r.clone(), q(1)])
        })
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.c.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with deg(0) = -1.
    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn scale(&self, s: &Q) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|a| a * s).collect() }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Q::one() / self.lead()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * q(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.c.clone();
        let dd = d.degree() as usize;
        let dl = d.lead();
        if self.degree() < d.degree() {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        for i in (0..quo.len()).rev() {
            let coef = &r[i + dd] / &dl;
            if !coef.is_zero() {
                for (j, dc) in d.c.iter().enumerate() {
                    r[i + j] -= &coef * dc;
                }
            }
            quo[i] = coef;
        }
        r.truncate(dd);
        (Poly::new(quo), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact division; panics in debug builds when the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (quo, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        quo
    }

    /// Monic gcd (gcd(0, 0) = 0).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            // keep coefficient growth in check
            a = b;
            b = r.primitive_scaled();
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        (self * other).exact_div(&self.gcd(other)).monic()
    }

    /// Scalar multiple with coprime integer coefficients and positive leading
    /// coefficient.
    pub fn primitive_scaled(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let den = self.c.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> = self.c.iter().map(|a| (a * Q::from_integer(den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        Poly::new(ints.into_iter().map(|a| Q::from_integer(a / &g * &sign)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// p(x0 + t) as a polynomial in t.
    pub fn shift(&self, x0: &Q) -> Poly {
        let lin = Poly::new(vec![x0.clone(), q(1)]);
        self.compose(&lin)
    }

    /// p(g(x)).
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(a.clone());
        }
        acc
    }

    /// Multiplicity of x0 as a root.
    pub fn ord_at(&self, x0: &Q) -> u32 {
        assert!(!self.is_zero(), "order of the zero polynomial");
        let lin = Poly::new(vec![-x0.clone(), q(1)]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (quo, r) = p.divrem(&lin);
            if !r.is_zero() {
                return k;
            }
            p = quo;
            k += 1;
        }
    }

    /// Distinct rational roots, sorted ascending, with the polynomial left
    /// after dividing them out (with multiplicity).
    pub fn rational_roots(&self) -> Result<(Vec<(Q, u32)>, Poly)> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut rest = self.primitive_scaled();
        let mut roots = Vec::new();
        let k0 = rest.ord_at(&Q::zero());
        if k0 > 0 {
            roots.push((Q::zero(), k0));
            rest = rest.exact_div(&Poly::monomial(k0 as usize, q(1))).primitive_scaled();
        }
        if rest.degree() >= 1 {
            let a0 = rest.coeff(0).to_integer();
            let an = rest.lead().to_integer();
            let ps = divisors(&a0)?;
            let qs = divisors(&an)?;
            let mut cands: Vec<Q> = Vec::new();
            for p in &ps {
                for d in &qs {
                    let c = Q::new(p.clone(), d.clone());
                    cands.push(c.clone());
                    cands.push(-c);
                }
            }
            cands.sort();
            cands.dedup();
            for c in cands {
                if rest.degree() < 1 {
                    break;
                }
                if rest.eval(&c).is_zero() {
                    let m = rest.ord_at(&c);
                    let lin = Poly::new(vec![-c.clone(), q(1)]);
                    rest = rest.exact_div(&lin.pow(m)).primitive_scaled();
                    roots.push((c, m));
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok((roots, rest))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_poly(self, "x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", render_poly(self, "x"))
    }
}

/// Renders with the highest degree first, e.g. "x^2 - 3/2*x + 1".
pub fn render_poly(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, a) in p.c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let mag = a.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Poly::new(c)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
