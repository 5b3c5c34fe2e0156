//! Split supercurves C_L: the curve C with odd line bundle L of degree g − 1.
//! Covers the susy test 2L ~ K, the Berezinian bundle, the chart-level
//! superconformal identities behind it, duality L ↦ K − L, and moduli counts.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::arith::ratfunc::RatFunc;
use crate::curve::{Divisor, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::graded::{check_superconformal, generators, super_jacobian, GrassmannElement, VectorFieldSC};
use crate::riemann_roch::{
    canonical_divisor, class_eq, h0, h1, is_principal, normalize_theta_subset, theta_characteristics, theta_divisor,
    DivisorClass,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankPair {
    pub even: usize,
    pub odd: usize,
}

impl RankPair {
    pub fn new(even: usize, odd: usize) -> Self {
        RankPair { even, odd }
    }

    pub fn le(&self, o: &RankPair) -> bool {
        self.even <= o.even && self.odd <= o.odd
    }
}

impl Add for RankPair {
    type Output = RankPair;
    fn add(self, o: RankPair) -> RankPair {
        RankPair::new(self.even + o.even, self.odd + o.odd)
    }
}

impl fmt::Display for RankPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSupercurve {
    curve: HyperellipticCurve,
    l: DivisorClass,
    susy: bool,
}

impl SplitSupercurve {
    pub fn curve(&self) -> &HyperellipticCurve {
        &self.curve
    }

    pub fn l(&self) -> &DivisorClass {
        &self.l
    }

    pub fn susy(&self) -> bool {
        self.susy
    }

    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    /// Representative of L^k.
    pub fn l_power(&self, k: i64) -> Divisor {
        self.l.rep().scale(k)
    }
}

pub fn make_split_supercurve(c: &HyperellipticCurve, l: &DivisorClass) -> Result<SplitSupercurve> {
    c.check_divisor(l.rep())?;
    let g = c.genus() as i64;
    if l.degree() != g - 1 {
        return Err(Error::WrongDegree { expected: g - 1, got: l.degree() });
    }
    let susy = is_principal(c, &l.rep().scale(2).sub(&canonical_divisor(c)))?.principal;
    Ok(SplitSupercurve { curve: c.clone(), l: l.clone(), susy })
}

/// C_L for the theta characteristic D_S = Σ_{i∈S} W_i + (g − 1 − |S|)∞,
/// skipping the principality test (2D_S − K is div of Π_{i∈S}(x − e_i) up to 2∞ shifts).
pub fn theta_split_supercurve(c: &HyperellipticCurve, subset: &[usize]) -> Result<SplitSupercurve> {
    let s = normalize_theta_subset(c.genus(), subset)?;
    let l = DivisorClass::new(theta_divisor(c, &s)?);
    Ok(SplitSupercurve { curve: c.clone(), l, susy: true })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BerezinianBundle {
    /// Class of the bosonic reduction Ber^bos.
    pub class: DivisorClass,
    /// Ber is a line bundle of rank 0|1.
    pub rank: RankPair,
}

pub fn berezinian_bundle(x: &SplitSupercurve) -> BerezinianBundle {
    BerezinianBundle { class: x.l.clone(), rank: RankPair::new(0, 1) }
}

/// Outcome of checking a transition z' = φ(z), θ' = θ·ψ(z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionReport {
    /// D θ', the factor relating D = ∂θ + θ∂z to D' in the new chart.
    pub d_factor: GrassmannElement,
    /// Berezinian of the super-Jacobian.
    pub berezinian: GrassmannElement,
    /// D = (Dθ')·D' with Dθ' = ψ, so D' = ψ⁻¹·D.
    pub d_transforms_by_psi: bool,
    pub berezinian_is_psi: bool,
}

impl TransitionReport {
    pub fn holds(&self) -> bool {
        self.d_transforms_by_psi && self.berezinian_is_psi
    }
}

/// Checks, for the superconformal transition z' = φ(z), θ' = θψ(z) with
/// ψ² = φ', that D rescales by ψ and that the super-Jacobian has Berezinian ψ.
pub fn verify_transition(phi: &RatFunc, psi: &RatFunc) -> Result<TransitionReport> {
    let gens = generators(&["θ"]);
    let th = GrassmannElement::generator(&gens, 0);
    let zp = GrassmannElement::scalar(&gens, phi.clone());
    let tp = th.mul(&GrassmannElement::scalar(&gens, psi.clone()))?;
    if &(psi * psi) != &phi.derivative() {
        return Err(Error::NotSuperconformal(format!("ψ² ≠ φ' for φ = {}, ψ = {}", phi.render("z"), psi.render("z"))));
    }
    let sc = check_superconformal(&zp, &tp)?;
    if !sc.holds {
        return Err(Error::NotSuperconformal(format!("residual {}", sc.residual)));
    }
    let d = VectorFieldSC::superconformal_d(&gens);
    let d_factor = d.apply(&tp)?;
    let psi_e = GrassmannElement::scalar(&gens, psi.clone());
    // D acting on z' and θ' must equal (Dθ')·(D'z', D'θ') = (Dθ')·(θ', 1)
    let on_z = d.apply(&zp)? == d_factor.mul(&tp)?;
    let on_t = d_factor == psi_e;
    let berezinian = super_jacobian(&zp, &tp)?.berezinian()?;
    Ok(TransitionReport {
        berezinian_is_psi: berezinian == psi_e,
        d_transforms_by_psi: on_z && on_t,
        d_factor,
        berezinian,
    })
}

/// C_{K − L}.
pub fn dual_supercurve(x: &SplitSupercurve) -> Result<SplitSupercurve> {
    let k = canonical_divisor(&x.curve);
    make_split_supercurve(&x.curve, &DivisorClass::new(k.sub(x.l.rep())))
}

pub fn is_autodual(x: &SplitSupercurve) -> Result<bool> {
    let dual = dual_supercurve(x)?;
    class_eq(&x.curve, &x.l, dual.l())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliDimension {
    pub genus: usize,
    /// h¹(T_C) | h¹(L⁻¹) on the model.
    pub dims: RankPair,
    /// Branch-point subset of the even theta characteristic used.
    pub theta_subset: Vec<usize>,
    pub note: String,
}

const GENERIC_NOTE: &str = "generic value: computed for an even theta characteristic with h0(L) = 0";

fn generic_even_theta(c: &HyperellipticCurve) -> Result<(Vec<usize>, Divisor)> {
    let g = c.genus();
    // theta characteristics from g-element subsets have h0 = 0
    let subset: Vec<usize> = (0..g).collect();
    let th = crate::riemann_roch::theta_characteristic(c, &subset)?;
    if th.h0 != 0 {
        let all = theta_characteristics(c)?;
        let t = all
            .into_iter()
            .find(|t| t.h0 == 0)
            .ok_or_else(|| Error::InvalidParameter("no theta characteristic with h0 = 0".into()))?;
        return Ok((t.subset, t.class.rep().clone()));
    }
    Ok((th.subset, th.class.rep().clone()))
}

pub fn moduli_dimension(g: usize) -> Result<ModuliDimension> {
    if g < 2 {
        return Err(Error::InvalidParameter(format!("genus {g} < 2")));
    }
    let c = HyperellipticCurve::model(g)?;
    let (subset, l) = generic_even_theta(&c)?;
    let k = canonical_divisor(&c);
    let even = h1(&c, &k.neg())?;
    let odd = h1(&c, &l.neg())?;
    Ok(ModuliDimension { genus: g, dims: RankPair::new(even, odd), theta_subset: subset, note: GENERIC_NOTE.to_string() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationDims {
    pub genus: usize,
    /// dim H¹(C, S) as h¹(T_C) | h¹(L⁻¹).
    pub h1_s: RankPair,
    /// dim H¹(C, T_C) of the split 1|1 manifold as h¹(T_C) | h¹(T_C ⊗ L).
    pub h1_tc: RankPair,
    pub injective_shadow: bool,
}

pub fn deformation_injectivity_dims(g: usize) -> Result<DeformationDims> {
    let m = moduli_dimension(g)?;
    let c = HyperellipticCurve::model(g)?;
    let l = crate::riemann_roch::theta_divisor(&c, &m.theta_subset)?;
    let k = canonical_divisor(&c);
    let t = k.neg();
    let h1_tc = RankPair::new(h1(&c, &t)?, h1(&c, &t.add(&l))?);
    Ok(DeformationDims { genus: g, h1_s: m.dims, injective_shadow: m.dims.le(&h1_tc), h1_tc })
}

/// h⁰ of L^k on a supercurve.
pub fn h0_power(x: &SplitSupercurve, k: i64) -> Result<usize> {
    h0(&x.curve, &x.l_power(k))
}
