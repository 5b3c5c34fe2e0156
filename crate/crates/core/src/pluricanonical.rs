//! Pushforward ranks and relative very ampleness of Ber^ν on split
//! supercurves, threshold tables over (g, ν), explicit pluricanonical models
//! and their exact embedding verification.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::surd::Surd;
use crate::arith::Q;
use crate::curve::{CurvePoint, Divisor, FunctionFieldElement, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::graded::Parity;
use crate::riemann_roch::{
    canonical_divisor, h0, reduce_divisor, rr_space, subsets_up_to, theta_characteristic, theta_divisor,
    DivisorClass,
};
use crate::supercurve::{make_split_supercurve, theta_split_supercurve, RankPair, SplitSupercurve};

mod superpoint;
pub use superpoint::{pushforward_over_superpoint, SuperPointFamily, SuperPointReport};

/// Pushforward ranks of E = Ber^ν.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub genus: usize,
    pub nu: u32,
    /// Parity-ordered: h⁰(L^ν)|h⁰(L^(ν+1)) for ν even, h⁰(L^(ν+1))|h⁰(L^ν) for ν odd.
    pub ranks: RankPair,
    /// θ-graded summands h⁰(E^bos) | h⁰(E^bos ⊗ L) = h⁰(L^ν) | h⁰(L^(ν+1)).
    pub summands: RankPair,
    pub h1_e: usize,
    pub h1_el: usize,
    /// h¹(L^ν) = h¹(L^(ν+1)) = 0, so the ranks are those of a vector bundle over any base.
    pub hypotheses: bool,
    /// (ν − 1)g − ν + 1 | (2ν − 1)g − 2ν + 1 as printed in the source formula.
    pub printed_formula: RankPair,
}

impl RankReport {
    /// The printed odd value disagrees with the Riemann–Roch value.
    pub fn printed_formula_flagged(&self) -> bool {
        self.printed_formula.odd != self.summands.odd
    }

    /// Printed formula in the same parity order as `ranks`.
    pub fn printed_formula_ordered(&self) -> RankPair {
        parity_order(self.nu, self.printed_formula.even, self.printed_formula.odd)
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ranks)?;
        let mut notes = Vec::new();
        if !self.hypotheses {
            notes.push(format!("θ-graded {}", self.summands));
            notes.push("hypotheses fail; point-base value".to_string());
        }
        if self.printed_formula_flagged() {
            notes.push(format!("paper formula: {}, flagged", self.printed_formula_ordered()));
        }
        if !notes.is_empty() {
            write!(f, " ({})", notes.join("; "))?;
        }
        Ok(())
    }
}

fn parity_order(nu: u32, e: usize, el: usize) -> RankPair {
    if nu % 2 == 0 {
        RankPair::new(e, el)
    } else {
        RankPair::new(el, e)
    }
}

pub fn printed_rank_formula(g: usize, nu: u32) -> RankPair {
    let (g, n) = (g as i64, nu as i64);
    RankPair::new(((n - 1) * g - n + 1).max(0) as usize, ((2 * n - 1) * g - 2 * n + 1).max(0) as usize)
}

pub fn pluri_canonical_rank(x: &SplitSupercurve, nu: u32) -> Result<RankReport> {
    if nu < 1 {
        return Err(Error::InvalidParameter("nu must be at least 1".into()));
    }
    let c = x.curve();
    let k = canonical_divisor(c);
    let e = x.l_power(nu as i64);
    let el = x.l_power(nu as i64 + 1);
    let (h0_e, h0_el) = (h0(c, &e)?, h0(c, &el)?);
    let (h1_e, h1_el) = (h0(c, &k.sub(&e))?, h0(c, &k.sub(&el))?);
    Ok(RankReport {
        genus: x.genus(),
        nu,
        ranks: parity_order(nu, h0_e, h0_el),
        summands: RankPair::new(h0_e, h0_el),
        h1_e,
        h1_el,
        hypotheses: h1_e == 0 && h1_el == 0,
        printed_formula: printed_rank_formula(x.genus(), nu),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFreeness {
    pub holds: bool,
    pub ranks: RankPair,
    pub h0_e: usize,
    pub h0_el: usize,
    pub h1_e: usize,
    pub h1_el: usize,
}

/// The two vanishing conditions h¹(E^bos) = h¹(E^bos ⊗ L) = 0 for an
/// arbitrary class E^bos; `parity` is the parity of E's generator.
pub fn criterion_local_freeness(x: &SplitSupercurve, e: &DivisorClass, parity: Parity) -> Result<LocalFreeness> {
    let c = x.curve();
    let k = canonical_divisor(c);
    let e = e.rep();
    let el = e.add(x.l().rep());
    let (h0_e, h0_el) = (h0(c, e)?, h0(c, &el)?);
    let (h1_e, h1_el) = (h0(c, &k.sub(e))?, h0(c, &k.sub(&el))?);
    let ranks = match parity {
        Parity::Even => RankPair::new(h0_e, h0_el),
        Parity::Odd => RankPair::new(h0_el, h0_e),
    };
    Ok(LocalFreeness { holds: h1_e == 0 && h1_el == 0, ranks, h0_e, h0_el, h1_e, h1_el })
}

/// Points x (and y) with h⁰(T₀ + x + y) ≥ 1, confirmed by an explicit
/// Riemann–Roch computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: CurvePoint,
    pub y: Option<CurvePoint>,
    /// T₀ + x (+ y)
    pub divisor: Divisor,
    pub h0: usize,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.y {
            Some(y) if *y == self.x => write!(f, "x=y={}", self.x),
            Some(y) => write!(f, "x={}, y={}", self.x, y),
            None => write!(f, "x={}", self.x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub holds: bool,
    /// deg(T₀) + number of points.
    pub degree: i64,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeryAmpleReport {
    pub nu: u32,
    /// h¹(E^bos ⊗ I_x ⊗ I_y) = 0 for all x, y.
    pub separation: ConditionReport,
    /// h¹(E^bos ⊗ L ⊗ I_x) = 0 (ν even) or h¹(E^bos ⊗ I_x) = 0 (ν odd) for all x.
    pub odd_direction: ConditionReport,
}

impl VeryAmpleReport {
    pub fn passes(&self) -> bool {
        self.separation.holds && self.odd_direction.holds
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.separation.witness.as_ref().or(self.odd_direction.witness.as_ref())
    }
}

fn candidate_points(c: &HyperellipticCurve, l: &Divisor) -> Vec<CurvePoint> {
    let mut out = vec![CurvePoint::Infinity];
    if let Ok(ws) = c.weierstrass_points() {
        out.extend(ws);
    }
    for p in l.support() {
        for p in [p.clone(), p.conjugate()] {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

fn confirm(c: &HyperellipticCurve, t0: &Divisor, x: CurvePoint, y: Option<CurvePoint>) -> Result<Option<Witness>> {
    let mut d = t0.clone();
    d.add_point(x.clone(), 1);
    if let Some(y) = &y {
        d.add_point(y.clone(), 1);
    }
    let h = h0(c, &d)?;
    Ok((h >= 1).then_some(Witness { x, y, divisor: d, h0: h }))
}

/// Decides whether h⁰(T₀ + x (+ y)) = 0 for every choice of points.
fn decide_condition(c: &HyperellipticCurve, t0: &Divisor, two_points: bool, cands: &[CurvePoint]) -> Result<ConditionReport> {
    let npts = if two_points { 2 } else { 1 };
    let degree = t0.degree() + npts;
    if degree < 0 {
        return Ok(ConditionReport { holds: true, degree, witness: None });
    }
    for (i, x) in cands.iter().enumerate() {
        let ys: Vec<Option<CurvePoint>> =
            if two_points { cands[i..].iter().cloned().map(Some).collect() } else { vec![None] };
        for y in ys {
            if let Some(w) = confirm(c, t0, x.clone(), y)? {
                return Ok(ConditionReport { holds: false, degree, witness: Some(w) });
            }
        }
    }
    let g = c.genus() as i64;
    if degree == 0 {
        // T₀ + Σ points is principal iff Σ points ∈ |−T₀|
        let target = t0.neg();
        if h0(c, &target)? == 0 {
            return Ok(ConditionReport { holds: true, degree, witness: None });
        }
        let u = rr_space(c, &target)?.into_iter().next().expect("nonzero space");
        let eff = c.divisor_of(&u)?.add(&target);
        let mut pts = Vec::new();
        for (p, n) in eff.iter() {
            for _ in 0..n {
                pts.push(p.clone());
            }
        }
        let y = if two_points { pts.get(1).cloned() } else { None };
        let w = confirm(c, t0, pts[0].clone(), y)?
            .ok_or_else(|| Error::Undecided(format!("effective divisor {eff} does not confirm")))?;
        return Ok(ConditionReport { holds: false, degree, witness: Some(w) });
    }
    if degree >= g {
        let w = confirm(c, t0, CurvePoint::Infinity, two_points.then_some(CurvePoint::Infinity))?
            .ok_or_else(|| Error::Undecided("Riemann–Roch lower bound not confirmed".into()))?;
        return Ok(ConditionReport { holds: false, degree, witness: Some(w) });
    }
    Err(Error::Undecided(format!("no witness among special points for degree {degree} twist {t0}")))
}

/// Both conditions, without requiring the rank hypotheses.
pub fn very_ample_conditions(x: &SplitSupercurve, nu: u32) -> Result<VeryAmpleReport> {
    if nu < 1 {
        return Err(Error::InvalidParameter("nu must be at least 1".into()));
    }
    let c = x.curve();
    let k = canonical_divisor(c);
    let cands = candidate_points(c, x.l().rep());
    let e = x.l_power(nu as i64);
    let second = if nu % 2 == 0 { x.l_power(nu as i64 + 1) } else { e.clone() };
    let separation = decide_condition(c, &k.sub(&e), true, &cands)?;
    let odd_direction = decide_condition(c, &k.sub(&second), false, &cands)?;
    Ok(VeryAmpleReport { nu, separation, odd_direction })
}

pub fn very_ample_check(x: &SplitSupercurve, nu: u32) -> Result<VeryAmpleReport> {
    let r = pluri_canonical_rank(x, nu)?;
    if !r.hypotheses {
        return Err(Error::Hypotheses(format!(
            "h1(L^{nu}) = {}, h1(L^{}) = {}",
            r.h1_e,
            nu + 1,
            r.h1_el
        )));
    }
    very_ample_conditions(x, nu)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaQuantifier {
    AllThetas,
    Theta(Vec<usize>),
}

/// First theta characteristic (census order) with h⁰ = 0.
pub fn generic_even_theta(c: &HyperellipticCurve) -> Result<Vec<usize>> {
    let g = c.genus();
    for s in theta_subsets(g).into_iter().filter(|s| s.len() == g) {
        if h0(c, &theta_divisor(c, &s)?)? == 0 {
            return Ok(s);
        }
    }
    Err(Error::InvalidParameter("no theta characteristic with h0 = 0".into()))
}

/// An odd theta characteristic, preferring single branch points.
pub fn some_odd_theta(c: &HyperellipticCurve) -> Result<Vec<usize>> {
    for i in 0..2 * c.genus() + 1 {
        if h0(c, &theta_divisor(c, &[i])?)? % 2 == 1 {
            return Ok(vec![i]);
        }
    }
    for s in theta_subsets(c.genus()) {
        if h0(c, &theta_divisor(c, &s)?)? % 2 == 1 {
            return Ok(s);
        }
    }
    Err(Error::InvalidParameter("no odd theta characteristic".into()))
}

/// Subsets of size ≤ g of the 2g + 1 branch points, ordered by (|S|, S).
pub fn theta_subsets(g: usize) -> Vec<Vec<usize>> {
    subsets_up_to(2 * g + 1, g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdCell {
    pub genus: usize,
    pub nu: u32,
    pub passes: bool,
    pub hypotheses: bool,
    /// Theta characteristic at which the cell first fails.
    pub failing_theta: Option<Vec<usize>>,
    pub witness: Option<Witness>,
    /// Verdict for a generic even theta characteristic (h⁰(L) = 0).
    pub even_theta_passes: bool,
}

/// h¹(L^ν), h¹(L^(ν+1)).
pub fn rank_hypotheses(x: &SplitSupercurve, nu: u32) -> Result<(usize, usize)> {
    let c = x.curve();
    let k = canonical_divisor(c);
    Ok((h0(c, &k.sub(&x.l_power(nu as i64)))?, h0(c, &k.sub(&x.l_power(nu as i64 + 1)))?))
}

fn evaluate_theta(c: &HyperellipticCurve, subset: &[usize], nu: u32) -> Result<(bool, bool, Option<Witness>)> {
    let x = theta_split_supercurve(c, subset)?;
    let hyp = rank_hypotheses(&x, nu)? == (0, 0);
    let va = very_ample_conditions(&x, nu)?;
    Ok((hyp && va.passes(), hyp, va.witness().cloned()))
}

fn cell_on(c: &HyperellipticCurve, even: &[usize], nu: u32, quantifier: &ThetaQuantifier) -> Result<ThresholdCell> {
    let g = c.genus();
    let (even_theta_passes, _, _) = evaluate_theta(c, even, nu)?;
    let thetas = match quantifier {
        ThetaQuantifier::AllThetas => theta_subsets(g),
        ThetaQuantifier::Theta(s) => vec![crate::riemann_roch::normalize_theta_subset(g, s)?],
    };
    let mut all_hyp = true;
    for s in thetas {
        let (passes, hyp, witness) = evaluate_theta(c, &s, nu)?;
        all_hyp &= hyp;
        if !passes {
            return Ok(ThresholdCell {
                genus: g,
                nu,
                passes: false,
                hypotheses: hyp,
                failing_theta: Some(s),
                witness,
                even_theta_passes,
            });
        }
    }
    Ok(ThresholdCell { genus: g, nu, passes: true, hypotheses: all_hyp, failing_theta: None, witness: None, even_theta_passes })
}

pub fn threshold_cell(g: usize, nu: u32, quantifier: &ThetaQuantifier) -> Result<ThresholdCell> {
    let c = HyperellipticCurve::model(g)?;
    let even = generic_even_theta(&c)?;
    cell_on(&c, &even, nu, quantifier)
}

/// Cells (g, ν) for 2 ≤ g ≤ g_max, 1 ≤ ν ≤ ν_max, evaluated in parallel and
/// returned in row-major order.
pub fn threshold_table(g_max: usize, nu_max: u32) -> Result<Vec<ThresholdCell>> {
    if g_max < 2 || nu_max < 1 {
        return Err(Error::InvalidParameter("need g_max ≥ 2 and nu_max ≥ 1".into()));
    }
    let curves: Vec<(HyperellipticCurve, Vec<usize>)> = (2..=g_max)
        .into_par_iter()
        .map(|g| {
            let c = HyperellipticCurve::model(g)?;
            let even = generic_even_theta(&c)?;
            Ok((c, even))
        })
        .collect::<Result<_>>()?;
    let cells: Vec<(usize, u32)> = (0..curves.len()).flat_map(|i| (1..=nu_max).map(move |n| (i, n))).collect();
    cells.par_iter().map(|&(i, n)| cell_on(&curves[i].0, &curves[i].1, n, &ThetaQuantifier::AllThetas)).collect()
}

pub fn minimal_nu(g: usize, quantifier: &ThetaQuantifier) -> Result<u32> {
    if g < 2 {
        return Err(Error::InvalidParameter(format!("genus {g} < 2")));
    }
    for nu in 1..=16 {
        if threshold_cell(g, nu, quantifier)?.passes {
            return Ok(nu);
        }
    }
    Err(Error::Undecided(format!("no ν ≤ 16 works for genus {g}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluriCanonicalModel {
    pub curve: HyperellipticCurve,
    pub nu: u32,
    pub l: Divisor,
    /// Super projective dimensions p − 1 | q.
    pub ambient: RankPair,
    /// L^ν or L^(ν+1), whichever is the even summand.
    pub even_divisor: Divisor,
    pub odd_divisor: Divisor,
    /// Representatives the section bases are written against.
    pub even_cleared: Divisor,
    pub odd_cleared: Divisor,
    pub even_sections: Vec<FunctionFieldElement>,
    pub odd_sections: Vec<FunctionFieldElement>,
}

/// Model without the very-ampleness precondition.
pub fn build_model_unchecked(x: &SplitSupercurve, nu: u32) -> Result<PluriCanonicalModel> {
    if nu < 1 {
        return Err(Error::InvalidParameter("nu must be at least 1".into()));
    }
    let c = x.curve();
    let e = x.l_power(nu as i64);
    let el = x.l_power(nu as i64 + 1);
    let (even_divisor, odd_divisor) = if nu % 2 == 0 { (e, el) } else { (el, e) };
    let (even_cleared, _) = reduce_divisor(c, &even_divisor)?;
    let (odd_cleared, _) = reduce_divisor(c, &odd_divisor)?;
    let even_sections = rr_space(c, &even_cleared)?;
    let odd_sections = rr_space(c, &odd_cleared)?;
    Ok(PluriCanonicalModel {
        curve: c.clone(),
        nu,
        l: x.l().rep().clone(),
        ambient: RankPair::new(even_sections.len().saturating_sub(1), odd_sections.len()),
        even_divisor,
        odd_divisor,
        even_cleared,
        odd_cleared,
        even_sections,
        odd_sections,
    })
}

pub fn build_model(x: &SplitSupercurve, nu: u32) -> Result<PluriCanonicalModel> {
    let va = very_ample_check(x, nu)?;
    if !va.passes() {
        let w = va.witness().map(|w| w.to_string()).unwrap_or_default();
        return Err(Error::NotVeryAmple(format!("ν = {nu}, witness {w}")));
    }
    build_model_unchecked(x, nu)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub points: usize,
    pub pairs_checked: usize,
    pub separation_failures: Vec<(CurvePoint, CurvePoint)>,
    pub tangent_failures: Vec<CurvePoint>,
    pub odd_failures: Vec<CurvePoint>,
}

impl EmbeddingReport {
    pub fn all_pass(&self) -> bool {
        self.separation_failures.is_empty() && self.tangent_failures.is_empty() && self.odd_failures.is_empty()
    }
}

struct PointData {
    value: Vec<Surd>,
    deriv: Vec<Surd>,
    odd: Vec<Surd>,
}

fn trivialized(
    c: &HyperellipticCurve,
    sections: &[FunctionFieldElement],
    cleared: &Divisor,
    p: &CurvePoint,
) -> Result<(Vec<Surd>, Vec<Surd>)> {
    let m = cleared.mult(p);
    if sections.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let ser = c.expand_many(sections, p, -m + 2)?;
    let value = ser.iter().map(|s| s.coeff(-m).expect("within precision")).collect();
    let deriv = ser.iter().map(|s| s.coeff(-m + 1).expect("within precision")).collect();
    Ok((value, deriv))
}

fn independent(u: &[Surd], v: &[Surd]) -> bool {
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if !(&(&u[i] * &v[j]) - &(&u[j] * &v[i])).is_zero() {
                return true;
            }
        }
    }
    false
}

/// Exact checks of point separation, tangent separation and odd
/// nondegeneracy at the given points; `pairs` distinct pairs are checked.
pub fn verify_embedding(m: &PluriCanonicalModel, points: &[CurvePoint], pairs: usize) -> Result<EmbeddingReport> {
    let c = &m.curve;
    for p in points {
        c.check_point(p)?;
    }
    let data: Vec<PointData> = points
        .par_iter()
        .map(|p| {
            let (value, deriv) = trivialized(c, &m.even_sections, &m.even_cleared, p)?;
            let (odd, _) = trivialized(c, &m.odd_sections, &m.odd_cleared, p)?;
            Ok(PointData { value, deriv, odd })
        })
        .collect::<Result<_>>()?;
    let mut report = EmbeddingReport {
        points: points.len(),
        pairs_checked: 0,
        separation_failures: Vec::new(),
        tangent_failures: Vec::new(),
        odd_failures: Vec::new(),
    };
    for (p, d) in points.iter().zip(&data) {
        if !independent(&d.value, &d.deriv) {
            report.tangent_failures.push(p.clone());
        }
        if d.odd.iter().all(|v| v.is_zero()) {
            report.odd_failures.push(p.clone());
        }
    }
    'outer: for j in 1..points.len() {
        for i in 0..j {
            if report.pairs_checked >= pairs {
                break 'outer;
            }
            report.pairs_checked += 1;
            if !independent(&data[i].value, &data[j].value) {
                report.separation_failures.push((points[i].clone(), points[j].clone()));
            }
        }
    }
    Ok(report)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of points needed for `pairs` distinct pairs.
pub fn pool_size(pairs: usize) -> usize {
    let mut k = 1;
    while k * (k - 1) / 2 < pairs {
        k += 1;
    }
    k.max(1)
}

/// ∞, the rational branch points, then random points (x₀, ±√f(x₀)) with
/// small rational x₀, each followed by its conjugate.
pub fn sample_points(c: &HyperellipticCurve, count: usize, seed: u64) -> Vec<CurvePoint> {
    let mut out = vec![CurvePoint::Infinity];
    if let Ok(ws) = c.weierstrass_points() {
        out.extend(ws);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let num: i64 = rng.gen_range(-40..=40);
        let den: i64 = rng.gen_range(1..=7);
        let x0 = Q::new(num.into(), den.into());
        let p = c.point(x0, if rng.gen_bool(0.5) { 1 } else { -1 });
        if out.contains(&p) {
            continue;
        }
        let conj = p.conjugate();
        out.push(p);
        if out.len() < count && !out.contains(&conj) {
            out.push(conj);
        }
    }
    out.truncate(count);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonEmbeddingReport {
    pub genus: usize,
    /// h⁰(L) | h⁰(L²)
    pub summands: RankPair,
    pub ranks: RankPair,
    /// Set when rank f_*Ber = 0|g: a 1|1 curve cannot map to P^{-1|g}.
    pub obstruction: bool,
    pub note: String,
}

pub fn canonical_nonembedding_demo(x: &SplitSupercurve) -> Result<NonEmbeddingReport> {
    if !x.susy() {
        return Err(Error::InvalidParameter("L is not a theta characteristic".into()));
    }
    let r = pluri_canonical_rank(x, 1)?;
    let g = x.genus();
    let (obstruction, note) = if r.summands.even == 0 {
        (true, format!("rank f_*Ber = {}: no even sections, so no map to projective space exists", r.summands))
    } else {
        (false, format!("h0(L) = {}; odd or effective theta characteristic, no claim", r.summands.even))
    };
    Ok(NonEmbeddingReport { genus: g, summands: r.summands, ranks: r.ranks, obstruction, note })
}

/// Random points used by tests and reports: n rational x-coordinates that
/// avoid the branch points.
pub fn random_x(rng: &mut ChaCha8Rng, c: &HyperellipticCurve) -> Q {
    loop {
        let x = Q::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=5).into());
        if !c.f().eval(&x).is_zero() {
            return x;
        }
    }
}

/// Degree-(g−1) class P₁ + … + P_(g−1) + Q − ∞ built from random points over
/// quadratic fields; generically not a theta characteristic.
pub fn random_degree_g_minus_1_class(c: &HyperellipticCurve, rng: &mut ChaCha8Rng) -> DivisorClass {
    let g = c.genus() as i64;
    let mut d = Divisor::point(CurvePoint::Infinity, -1);
    for _ in 0..g {
        let x = random_x(rng, c);
        d.add_point(c.point(x, if rng.gen_bool(0.5) { 1 } else { -1 }), 1);
    }
    DivisorClass::new(d)
}

/// Helper for tests: the theta characteristic for a subset, as a supercurve.
pub fn theta_supercurve(c: &HyperellipticCurve, subset: &[usize]) -> Result<SplitSupercurve> {
    let th = theta_characteristic(c, subset)?;
    make_split_supercurve(c, &th.class)
}
