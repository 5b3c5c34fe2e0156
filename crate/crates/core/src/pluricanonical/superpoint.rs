//! Sections of Ber^ν over the superpoint Spec Λ[η], η² = 0, on the two-chart
//! cover U₀ = C ∖ {∞}, U₁ = C ∖ {W₀}. The bundle transition is twisted by
//! 1 + η·c·θ with c a section of L over U₀ ∩ U₁.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::linalg::{rank_of, QMatrix};
use crate::arith::poly::Poly;
use crate::arith::Q;
use crate::curve::{CurvePoint, Divisor, FunctionFieldElement, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::riemann_roch::rr_space;
use crate::supercurve::{RankPair, SplitSupercurve};

use super::rank_hypotheses;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPointFamily {
    fiber: SplitSupercurve,
    cochain: FunctionFieldElement,
}

fn w0(c: &HyperellipticCurve) -> Result<CurvePoint> {
    c.weierstrass_points()?
        .into_iter()
        .next()
        .ok_or_else(|| Error::UnsupportedSupport("no rational branch point".into()))
}

impl SuperPointFamily {
    /// Errors unless div(c) + L ≥ 0 away from ∞ and W₀.
    pub fn new(fiber: SplitSupercurve, cochain: FunctionFieldElement) -> Result<Self> {
        let c = fiber.curve();
        let w = w0(c)?;
        if !cochain.is_zero() {
            let (_, _, den) = cochain.numerator_form();
            let (roots, rest) = den.rational_roots()?;
            if rest.degree() > 0 {
                return Err(Error::IrregularCochain(format!("poles over irrational x: {rest}")));
            }
            let l = fiber.l().rep();
            for (x0, _) in roots {
                for p in c.points_over(&x0) {
                    if p == w {
                        continue;
                    }
                    if c.valuation(&cochain, &p)? + l.mult(&p) < 0 {
                        return Err(Error::IrregularCochain(format!("pole at {p}")));
                    }
                }
            }
        }
        Ok(SuperPointFamily { fiber, cochain })
    }

    /// The product family.
    pub fn trivial(fiber: SplitSupercurve) -> Self {
        SuperPointFamily { fiber, cochain: FunctionFieldElement::zero() }
    }

    /// c drawn from L(L + 2∞ + 2W₀) with small integer coefficients.
    pub fn random(fiber: SplitSupercurve, rng: &mut ChaCha8Rng) -> Result<Self> {
        let c = fiber.curve();
        let mut d = fiber.l().rep().clone();
        d.add_point(CurvePoint::Infinity, 2);
        d.add_point(w0(c)?, 2);
        let mut h = FunctionFieldElement::zero();
        for b in rr_space(c, &d)? {
            let k: i64 = rng.gen_range(-5..=5);
            h = h.add(&b.scale(&Q::from_integer(k.into())));
        }
        SuperPointFamily::new(fiber, h)
    }

    pub fn fiber(&self) -> &SplitSupercurve {
        &self.fiber
    }

    pub fn cochain(&self) -> &FunctionFieldElement {
        &self.cochain
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperPointReport {
    pub nu: u32,
    /// Free as a Λ[η]-module.
    pub free: bool,
    /// Generators of M / ηM by parity.
    pub ranks: RankPair,
    pub dim_sections: usize,
    /// Rank of multiplication by η on M.
    pub eta_rank: usize,
    /// Pole bound used for the chart candidate spaces.
    pub truncation: i64,
}

/// A linear system Σ x_i f_i = 0 over several equations, one column per unknown.
struct System {
    cols: usize,
    equations: Vec<Vec<(usize, FunctionFieldElement)>>,
}

impl System {
    fn new() -> Self {
        System { cols: 0, equations: Vec::new() }
    }

    fn unknowns(&mut self, n: usize) -> usize {
        self.cols += n;
        self.cols - n
    }

    fn kernel(&self) -> Vec<Vec<Q>> {
        let mut m = QMatrix::zeros(0, self.cols);
        for eq in &self.equations {
            let forms: Vec<(usize, Poly, Poly, Poly)> = eq
                .iter()
                .filter(|(_, f)| !f.is_zero())
                .map(|(i, f)| {
                    let (a, b, d) = f.numerator_form();
                    (*i, a, b, d)
                })
                .collect();
            let den = forms.iter().fold(Poly::one(), |acc, (_, _, _, d)| acc.lcm(d));
            let scaled: Vec<(usize, Poly, Poly)> = forms
                .iter()
                .map(|(i, a, b, d)| {
                    let k = den.exact_div(d);
                    (*i, a * &k, b * &k)
                })
                .collect();
            let len = scaled.iter().map(|(_, a, b)| a.degree().max(b.degree()) + 1).max().unwrap_or(0).max(0) as usize;
            let mut rows = vec![vec![Q::from_integer(0.into()); self.cols]; 2 * len];
            for (i, a, b) in scaled {
                for k in 0..len {
                    rows[k][i] += a.coeff(k);
                    rows[len + k][i] += b.coeff(k);
                }
            }
            for r in rows {
                if r.iter().any(|v| *v != Q::from_integer(0.into())) {
                    m.push_row(r);
                }
            }
        }
        m.kernel()
    }
}

fn with_pole(d: &Divisor, p: &CurvePoint, n: i64) -> Divisor {
    let mut d = d.clone();
    d.add_point(p.clone(), n);
    d
}

fn dims_at(fam: &SuperPointFamily, nu: u32, n: i64) -> Result<(usize, usize, usize, usize)> {
    let x = fam.fiber();
    let c = x.curve();
    let w = w0(c)?;
    let inf = CurvePoint::Infinity;
    let f1 = x.l_power(nu as i64);
    let f2 = x.l_power(nu as i64 + 1);
    let charts = |d: &Divisor| -> Result<(Vec<FunctionFieldElement>, Vec<FunctionFieldElement>)> {
        Ok((rr_space(c, &with_pole(d, &inf, n))?, rr_space(c, &with_pole(d, &w, n))?))
    };
    let (a_u0, a_u1) = charts(&f1)?;
    let (b_u0, b_u1) = charts(&f2)?;

    // chart-1 minus chart-0 (minus twist) vanishes on the overlap
    let glue = |s: &mut System, u0: &[FunctionFieldElement], u1: &[FunctionFieldElement]| -> (usize, usize, Vec<(usize, FunctionFieldElement)>) {
        let i0 = s.unknowns(u0.len());
        let i1 = s.unknowns(u1.len());
        let mut eq: Vec<(usize, FunctionFieldElement)> = u1.iter().enumerate().map(|(k, f)| (i1 + k, f.clone())).collect();
        eq.extend(u0.iter().enumerate().map(|(k, f)| (i0 + k, f.neg())));
        (i0, i1, eq)
    };

    let mut sa = System::new();
    let (a0, _, eq_a) = glue(&mut sa, &a_u0, &a_u1);
    let (_, _, mut eq_b) = glue(&mut sa, &b_u0, &b_u1);
    if !fam.cochain().is_zero() {
        for (k, f) in a_u0.iter().enumerate() {
            eq_b.push((a0 + k, c.mul(fam.cochain(), f).neg()));
        }
    }
    sa.equations = vec![eq_a, eq_b];
    let ka = sa.kernel();
    let proj: Vec<Vec<Q>> = ka.iter().map(|v| v[a0..a0 + a_u0.len()].to_vec()).collect();
    let proj_rank = rank_of(&proj);

    let glued = |u0: &[FunctionFieldElement], u1: &[FunctionFieldElement]| -> usize {
        let mut s = System::new();
        let (_, _, eq) = glue(&mut s, u0, u1);
        s.equations = vec![eq];
        s.kernel().len()
    };
    Ok((ka.len(), proj_rank, glued(&b_u0, &b_u1), glued(&a_u0, &a_u1)))
}

/// Global sections of Ber^ν over Λ[η] as the kernel of the Čech gluing
/// system, truncated by pole order and checked for saturation at twice the
/// bound.
pub fn pushforward_over_superpoint(fam: &SuperPointFamily, nu: u32, override_hypotheses: bool) -> Result<SuperPointReport> {
    if nu < 1 {
        return Err(Error::InvalidParameter("nu must be at least 1".into()));
    }
    let x = fam.fiber();
    let c = x.curve();
    if !override_hypotheses {
        let (h1a, h1b) = rank_hypotheses(x, nu)?;
        if h1a != 0 || h1b != 0 {
            return Err(Error::Hypotheses(format!("h1(L^{nu}) = {h1a}, h1(L^{}) = {h1b}", nu + 1)));
        }
    }
    let mut cochain_poles = 0;
    if !fam.cochain().is_zero() {
        for p in [CurvePoint::Infinity, w0(c)?] {
            cochain_poles += (-c.valuation(fam.cochain(), &p)?).max(0);
        }
    }
    let deg = x.l_power(nu as i64 + 1).degree().max(0);
    let n = deg + 2 * c.genus() as i64 + 2 + cochain_poles;
    let dims = dims_at(fam, nu, n)?;
    if dims_at(fam, nu, 2 * n)? != dims {
        return Err(Error::TruncationExceeded(format!("section space grows past pole order {n}")));
    }
    let (dim_a, proj, dim_b, dim_c) = dims;
    let dim_sections = dim_a + dim_b + dim_c;
    let eta_rank = proj + dim_b;
    let p_count = proj + (dim_a - proj - dim_b);
    let q_count = dim_b + (dim_c - proj);
    let ranks = if nu % 2 == 0 { RankPair::new(p_count, q_count) } else { RankPair::new(q_count, p_count) };
    Ok(SuperPointReport { nu, free: dim_sections == 2 * eta_rank, ranks, dim_sections, eta_rank, truncation: n })
}
