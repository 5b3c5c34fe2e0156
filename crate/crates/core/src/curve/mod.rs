//! Hyperelliptic curves y² = f(x) with f squarefree of odd degree 2g + 1:
//! points (rational, or with y in Q(√f(x₀))), function field elements,
//! local expansions in uniformizers, valuations and principal divisors.

mod divisor;
mod function;

use std::fmt;

use num_traits::{One, Signed, Zero};

pub use divisor::Divisor;
pub use function::FunctionFieldElement;

use crate::arith::poly::Poly;
use crate::arith::ratfunc::RatFunc;
use crate::arith::series::Laurent;
use crate::arith::surd::Surd;
use crate::arith::{fmt_q, q, rational_sqrt, Q};
use crate::error::{Error, Result};

/// A point of the curve. `Ext` stands for (x, sign·√f(x)) when f(x) is not a
/// rational square; it is then an exact point over Q(√f(x)).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Q, y: Q },
    Ext { x: Q, sign: i8 },
}

impl CurvePoint {
    pub fn x(&self) -> Option<&Q> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } | CurvePoint::Ext { x, .. } => Some(x),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn is_weierstrass(&self) -> bool {
        match self {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { y, .. } => y.is_zero(),
            CurvePoint::Ext { .. } => false,
        }
    }

    /// Image under the hyperelliptic involution (x, y) ↦ (x, −y).
    pub fn conjugate(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y },
            CurvePoint::Ext { x, sign } => CurvePoint::Ext { x: x.clone(), sign: -sign },
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "∞"),
            CurvePoint::Affine { x, y } => write!(f, "({},{})", fmt_q(x), fmt_q(y)),
            CurvePoint::Ext { x, sign } => {
                write!(f, "({},{}√f({}))", fmt_q(x), if *sign < 0 { "-" } else { "" }, fmt_q(x))
            }
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// x and y as Laurent series in the local uniformizer at a point.
#[derive(Clone, Debug)]
pub struct LocalExpansion {
    pub x: Laurent,
    pub y: Laurent,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperellipticCurve {
    f: Poly,
    genus: usize,
    roots: Option<Vec<Q>>,
}

impl fmt::Debug for HyperellipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}

impl HyperellipticCurve {
    pub fn new(f: Poly) -> Result<Self> {
        let d = f.degree();
        if d < 5 || d % 2 == 0 {
            return Err(Error::InvalidCurve(format!("deg f = {d}; need odd degree at least 5")));
        }
        if !f.is_squarefree() {
            return Err(Error::InvalidCurve(format!("f = {f} is not squarefree")));
        }
        let (found, rest) = f.rational_roots()?;
        let roots = (rest.degree() <= 0).then(|| found.into_iter().map(|(r, _)| r).collect());
        Ok(HyperellipticCurve { f, genus: ((d - 1) / 2) as usize, roots })
    }

    pub fn from_coeffs(c: &[Q]) -> Result<Self> {
        HyperellipticCurve::new(Poly::new(c.to_vec()))
    }

    /// y² = x(x − 1)…(x − 2g).
    pub fn model(g: usize) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidParameter(format!("genus {g} < 2")));
        }
        let roots: Vec<Q> = (0..=2 * g as i64).map(q).collect();
        HyperellipticCurve::new(Poly::from_roots(&roots))
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    fn g(&self) -> i64 {
        self.genus as i64
    }

    /// The 2g + 1 finite branch points, ascending; errors if some are irrational.
    pub fn branch_roots(&self) -> Result<Vec<Q>> {
        self.roots
            .clone()
            .ok_or_else(|| Error::UnsupportedSupport(format!("f = {} has irrational roots", self.f)))
    }

    /// Finite Weierstrass points W₀ < W₁ < … ordered by x.
    pub fn weierstrass_points(&self) -> Result<Vec<CurvePoint>> {
        Ok(self.branch_roots()?.into_iter().map(|x| CurvePoint::Affine { x, y: Q::zero() }).collect())
    }

    /// The point (x, sign·√f(x)), rational when f(x) is a square.
    pub fn point(&self, x: Q, sign: i8) -> CurvePoint {
        let fx = self.f.eval(&x);
        if fx.is_zero() {
            return CurvePoint::Affine { x, y: Q::zero() };
        }
        let sign = if sign < 0 { -1 } else { 1 };
        match rational_sqrt(&fx) {
            Some(r) => CurvePoint::Affine { x, y: if sign < 0 { -r } else { r } },
            None => CurvePoint::Ext { x, sign },
        }
    }

    pub fn affine(&self, x: Q, y: Q) -> Result<CurvePoint> {
        let p = CurvePoint::Affine { x, y };
        self.check_point(&p)?;
        Ok(p)
    }

    /// Both points above x (one if x is a branch point).
    pub fn points_over(&self, x: &Q) -> Vec<CurvePoint> {
        let p = self.point(x.clone(), 1);
        if p.is_weierstrass() {
            vec![p]
        } else {
            vec![p.clone(), p.conjugate()]
        }
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == self.f.eval(x),
            CurvePoint::Ext { x, sign } => {
                let fx = self.f.eval(x);
                sign.abs() == 1 && !fx.is_zero() && rational_sqrt(&fx).is_none()
            }
        }
    }

    pub fn check_point(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(format!("{p}")))
        }
    }

    pub fn check_divisor(&self, d: &Divisor) -> Result<()> {
        d.support().try_for_each(|p| self.check_point(p))
    }

    /// y-coordinate as an exact surd; None at infinity.
    pub fn y_value(&self, p: &CurvePoint) -> Option<Surd> {
        match p {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { y, .. } => Some(Surd::rational(y.clone())),
            CurvePoint::Ext { x, sign } => {
                let s = Surd::sqrt(&self.f.eval(x)).expect("nonzero f(x)");
                Some(if *sign < 0 { -s } else { s })
            }
        }
    }

    // ---- function field arithmetic ----

    pub fn mul(&self, u: &FunctionFieldElement, v: &FunctionFieldElement) -> FunctionFieldElement {
        let f = RatFunc::from_poly(self.f.clone());
        let a = &(u.a() * v.a()) + &(&(u.b() * v.b()) * &f);
        let b = &(u.a() * v.b()) + &(u.b() * v.a());
        FunctionFieldElement::new(a, b)
    }

    /// a² − b²·f, the norm to Q(x).
    pub fn norm(&self, u: &FunctionFieldElement) -> RatFunc {
        let f = RatFunc::from_poly(self.f.clone());
        &(u.a() * u.a()) - &(&(u.b() * u.b()) * &f)
    }

    pub fn inv(&self, u: &FunctionFieldElement) -> Result<FunctionFieldElement> {
        if u.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let n = self.norm(u).inv();
        Ok(FunctionFieldElement::new(u.a() * &n, &(-u.b()) * &n))
    }

    pub fn div(&self, u: &FunctionFieldElement, v: &FunctionFieldElement) -> Result<FunctionFieldElement> {
        Ok(self.mul(u, &self.inv(v)?))
    }

    pub fn pow(&self, u: &FunctionFieldElement, e: i64) -> Result<FunctionFieldElement> {
        let base = if e < 0 { self.inv(u)? } else { u.clone() };
        let mut acc = FunctionFieldElement::one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    // ---- local expansions ----

    /// Branch s(t) of √f(x₀ + t) with s(0) = sign·√f(x₀), known mod t^(order+1).
    pub fn series_expand_y(&self, x0: &Q, order: usize, sign: i8) -> Result<Laurent> {
        let shifted = self.f.shift(x0);
        let f0 = shifted.coeff(0);
        if f0.is_zero() {
            return Err(Error::WeierstrassExpansion(fmt_q(x0)));
        }
        // s_n = c_n·s_0 with c_n rational since s_i·s_j ∈ Q
        let two_f0 = &f0 + &f0;
        let mut c: Vec<Q> = vec![Q::one()];
        for n in 1..=order {
            let mut acc = shifted.coeff(n);
            let mut conv = Q::zero();
            for i in 1..n {
                conv += &c[i] * &c[n - i];
            }
            acc -= &f0 * &conv;
            c.push(acc / &two_f0);
        }
        let mut s0 = Surd::sqrt(&f0)?;
        if sign < 0 {
            s0 = -s0;
        }
        Ok(Laurent::new(0, c.iter().map(|ci| s0.scale(ci)).collect(), order as i64 + 1))
    }

    /// Solves u = t²/G(u) with G(0) ≠ 0 to absolute precision `prec`.
    fn solve_quadratic_branch(g: &Poly, prec: i64) -> Result<Laurent> {
        let t2 = Laurent::monomial(2);
        let mut u = Laurent::zero_to(2);
        while u.precision() < prec {
            let gu = Laurent::eval_poly(g, &u);
            u = t2.mul(&gu.inv(prec as usize + 2)?).truncate(prec);
        }
        Ok(u)
    }

    /// Expansions of x and y in the uniformizer at p (x − x₀, y, or y/x^(g+1)),
    /// each known to at least `terms` terms past its leading order.
    pub fn local_expansion(&self, p: &CurvePoint, terms: usize) -> Result<LocalExpansion> {
        self.check_point(p)?;
        let n = terms as i64;
        match p {
            CurvePoint::Infinity => {
                // w = 1/x satisfies t² = w·F(w) with F(w) = w^(2g+1) f(1/w)
                let rev: Vec<Q> = self.f.coeffs().iter().rev().cloned().collect();
                let fw = Poly::new(rev);
                let w = Self::solve_quadratic_branch(&fw, n + 2)?;
                let x = w.inv(terms)?;
                let y = Laurent::monomial(1).mul(&x.pow(self.genus as u32 + 1));
                Ok(LocalExpansion { x, y })
            }
            CurvePoint::Affine { x: x0, y } if y.is_zero() => {
                // u = x − x₀ satisfies t² = u·G(u) with t = y
                let shifted = self.f.shift(x0);
                let g = Poly::new(shifted.coeffs()[1..].to_vec());
                let u = Self::solve_quadratic_branch(&g, n)?;
                let x = u.add(&Laurent::constant(Surd::rational(x0.clone())));
                Ok(LocalExpansion { x, y: Laurent::monomial(1) })
            }
            _ => {
                let x0 = p.x().expect("finite point").clone();
                let sign = match p {
                    CurvePoint::Affine { y, .. } => {
                        if y.is_negative() {
                            -1
                        } else {
                            1
                        }
                    }
                    CurvePoint::Ext { sign, .. } => *sign,
                    CurvePoint::Infinity => unreachable!(),
                };
                let mut y = self.series_expand_y(&x0, terms.max(1) - 1, sign)?;
                if let CurvePoint::Affine { y: y0, .. } = p {
                    // series_expand_y picks the positive root of a rational square
                    let s0 = y.coeff(0).expect("constant term");
                    if s0 != Surd::rational(y0.clone()) {
                        y = y.neg();
                    }
                }
                let x = Laurent::exact(0, vec![Surd::rational(x0), Surd::rational(Q::one())]);
                Ok(LocalExpansion { x, y })
            }
        }
    }

    /// Expansion of u at p in the local uniformizer, known to absolute
    /// precision at least `prec`.
    pub fn expand(&self, u: &FunctionFieldElement, p: &CurvePoint, prec: i64) -> Result<Laurent> {
        Ok(self.expand_many(std::slice::from_ref(u), p, prec)?.remove(0))
    }

    /// Expansions of several functions at p, sharing one local expansion.
    pub fn expand_many(&self, us: &[FunctionFieldElement], p: &CurvePoint, prec: i64) -> Result<Vec<Laurent>> {
        let forms: Vec<(Poly, Poly, Poly)> = us.iter().map(|u| u.numerator_form()).collect();
        let g = self.g();
        let mut terms = (prec.abs() + 2 * g + 4).max(4) as usize;
        'attempt: for _ in 0..8 {
            let le = self.local_expansion(p, terms)?;
            let mut out = Vec::with_capacity(us.len());
            for (a, b, den) in &forms {
                let num = Laurent::eval_poly(a, &le.x).add(&Laurent::eval_poly(b, &le.x).mul(&le.y));
                let d = Laurent::eval_poly(den, &le.x);
                if d.valuation().is_none() {
                    terms *= 2;
                    continue 'attempt;
                }
                let q = num.div(&d, terms + prec.unsigned_abs() as usize + 4)?;
                if q.precision() < prec {
                    terms *= 2;
                    continue 'attempt;
                }
                out.push(q.truncate(prec));
            }
            return Ok(out);
        }
        Err(Error::Precision(format!("expansion at {p}")))
    }

    // ---- valuations and divisors ----

    /// Order of vanishing of u at p.
    pub fn valuation(&self, u: &FunctionFieldElement, p: &CurvePoint) -> Result<i64> {
        if u.is_zero() {
            return Err(Error::ZeroFunction);
        }
        self.check_point(p)?;
        let (a, b, den) = u.numerator_form();
        let g = self.g();
        let v_num = match p {
            CurvePoint::Infinity => {
                let va = if a.is_zero() { i64::MAX } else { -2 * a.degree() };
                let vb = if b.is_zero() { i64::MAX } else { -2 * b.degree() - (2 * g + 1) };
                return Ok(va.min(vb) + 2 * den.degree());
            }
            CurvePoint::Affine { x: r, y } if y.is_zero() => {
                let va = if a.is_zero() { i64::MAX } else { 2 * a.ord_at(r) as i64 };
                let vb = if b.is_zero() { i64::MAX } else { 2 * b.ord_at(r) as i64 + 1 };
                return Ok(va.min(vb) - 2 * den.ord_at(r) as i64);
            }
            _ => {
                let x0 = p.x().expect("finite point");
                let oa = if a.is_zero() { i64::MAX } else { a.ord_at(x0) as i64 };
                let ob = if b.is_zero() { i64::MAX } else { b.ord_at(x0) as i64 };
                if oa != ob {
                    oa.min(ob)
                } else {
                    // cancellation possible; v_P + v_P' = ord of the norm
                    let norm = &(&a * &a) - &(&(&b * &b) * &self.f);
                    let bound = norm.ord_at(x0) as i64;
                    let s = self.expand(&FunctionFieldElement::from_numerator(a, b, Poly::one()), p, bound + 1)?;
                    s.valuation().ok_or_else(|| Error::Precision(format!("valuation of {u} at {p}")))?
                }
            }
        };
        Ok(v_num - den.ord_at(p.x().expect("finite point")) as i64)
    }

    /// div(u); requires every zero and pole to lie over a rational x.
    pub fn divisor_of(&self, u: &FunctionFieldElement) -> Result<Divisor> {
        if u.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let (a, b, den) = u.numerator_form();
        let norm = &(&a * &a) - &(&(&b * &b) * &self.f);
        let mut xs = Vec::new();
        for p in [&norm, &den] {
            let (roots, rest) = p.rational_roots()?;
            if rest.degree() > 0 {
                return Err(Error::UnsupportedSupport(format!("zeros or poles of {u} over roots of {rest}")));
            }
            xs.extend(roots.into_iter().map(|(r, _)| r));
        }
        xs.sort();
        xs.dedup();
        let mut d = Divisor::zero();
        for x0 in xs {
            for p in self.points_over(&x0) {
                let v = self.valuation(u, &p)?;
                d.add_point(p, v);
            }
        }
        d.add_point(CurvePoint::Infinity, self.valuation(u, &CurvePoint::Infinity)?);
        debug_assert_eq!(d.degree(), 0, "principal divisor of {u} has nonzero degree");
        Ok(d)
    }
}
