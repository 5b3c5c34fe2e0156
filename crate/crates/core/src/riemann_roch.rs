//! Riemann–Roch spaces L(D) = {u : div(u) + D ≥ 0} on y² = f(x), with h⁰,
//! h¹ by Serre duality, principality and linear equivalence tests, and the
//! theta characteristics of curves whose branch points are rational.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::linalg::{surd_rank, QMatrix};
use crate::arith::poly::Poly;
use crate::arith::series::Laurent;
use crate::arith::surd::Surd;
use crate::arith::{q, Q};
use crate::curve::{CurvePoint, Divisor, FunctionFieldElement, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::graded::Parity;

/// Linear equivalence class, carried by a representative divisor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DivisorClass {
    rep: Divisor,
}

impl DivisorClass {
    pub fn new(rep: Divisor) -> Self {
        DivisorClass { rep }
    }

    pub fn rep(&self) -> &Divisor {
        &self.rep
    }

    pub fn degree(&self) -> i64 {
        self.rep.degree()
    }

    pub fn add(&self, o: &DivisorClass) -> DivisorClass {
        DivisorClass::new(self.rep.add(&o.rep))
    }

    pub fn sub(&self, o: &DivisorClass) -> DivisorClass {
        DivisorClass::new(self.rep.sub(&o.rep))
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass::new(self.rep.scale(k))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ThetaCharacteristic {
    /// Indices into the ascending list of finite branch points.
    pub subset: Vec<usize>,
    pub class: DivisorClass,
    pub parity: Parity,
    pub h0: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Principality {
    pub principal: bool,
    /// A function with div = D, when D is principal and the witness is
    /// defined over Q.
    pub witness: Option<FunctionFieldElement>,
}

/// (exponent of x, carries y) in order of increasing pole order at ∞.
fn candidates(genus: i64, bound: i64) -> Vec<(usize, bool)> {
    let mut out: Vec<(i64, usize, bool)> = Vec::new();
    if bound < 0 {
        return Vec::new();
    }
    for i in 0..=(bound / 2) {
        out.push((2 * i, i as usize, false));
    }
    let mut j = 0;
    while 2 * j + 2 * genus + 1 <= bound {
        out.push((2 * j + 2 * genus + 1, j as usize, true));
        j += 1;
    }
    out.sort();
    out.into_iter().map(|(_, e, y)| (e, y)).collect()
}

/// True when every point over a quadratic extension appears together with
/// its conjugate, with equal multiplicity.
pub fn is_conjugation_stable(d: &Divisor) -> bool {
    d.iter().all(|(p, n)| !matches!(p, CurvePoint::Ext { .. }) || d.mult(&p.conjugate()) == n)
}

struct RrSystem {
    cands: Vec<(usize, bool)>,
    den: Poly,
    rows: Vec<Vec<Surd>>,
}

fn rr_system(c: &HyperellipticCurve, d: &Divisor) -> Result<RrSystem> {
    c.check_divisor(d)?;
    let genus = c.genus() as i64;
    let mut by_x: BTreeMap<Q, Vec<(CurvePoint, i64)>> = BTreeMap::new();
    for (p, n) in d.iter() {
        if let Some(x0) = p.x() {
            by_x.entry(x0.clone()).or_default().push((p.clone(), n));
        }
    }
    let mut den = Poly::one();
    let mut den_ord: BTreeMap<Q, i64> = BTreeMap::new();
    for (x0, pts) in &by_x {
        let e = if pts[0].0.is_weierstrass() {
            (pts[0].1.max(0) + 1) / 2
        } else {
            pts.iter().map(|(_, n)| *n).max().unwrap_or(0).max(0)
        };
        if e > 0 {
            den = &den * &Poly::new(vec![-x0.clone(), q(1)]).pow(e as u32);
        }
        den_ord.insert(x0.clone(), e);
    }
    let bound = d.mult(&CurvePoint::Infinity) + 2 * den.degree();
    let cands = candidates(genus, bound);
    let mut rows = Vec::new();
    if cands.is_empty() {
        return Ok(RrSystem { cands, den, rows });
    }
    for (x0, e) in &den_ord {
        for p in c.points_over(x0) {
            let v_den = if p.is_weierstrass() { 2 * e } else { *e };
            let need = v_den - d.mult(&p);
            if need <= 0 {
                continue;
            }
            let le = c.local_expansion(&p, need as usize)?;
            let x = le.x.truncate(need);
            let y = le.y.truncate(need);
            let max_e = cands.iter().map(|(e, _)| *e).max().unwrap_or(0);
            let mut xp = vec![Laurent::constant(Surd::rational(q(1)))];
            for k in 1..=max_e {
                xp.push(xp[k - 1].mul(&x).truncate(need));
            }
            let series: Vec<Laurent> =
                cands.iter().map(|(e, has_y)| if *has_y { xp[*e].mul(&y).truncate(need) } else { xp[*e].clone() }).collect();
            for m in 0..need {
                let row: Vec<Surd> = series
                    .iter()
                    .map(|s| s.coeff(m).ok_or_else(|| Error::Precision(format!("local expansion at {p}"))))
                    .collect::<Result<_>>()?;
                rows.push(row);
            }
        }
    }
    Ok(RrSystem { cands, den, rows })
}

/// Splits surd equations into rational ones, one per radicand.
fn rational_rows(rows: &[Vec<Surd>], cols: usize) -> QMatrix {
    let mut m = QMatrix::zeros(0, cols);
    for row in rows {
        let mut by_key: BTreeMap<num_bigint::BigInt, Vec<Q>> = BTreeMap::new();
        for (j, v) in row.iter().enumerate() {
            for (k, a) in v.terms() {
                by_key.entry(k.clone()).or_insert_with(|| vec![Q::zero(); cols])[j] = a.clone();
            }
        }
        for (_, r) in by_key {
            m.push_row(r);
        }
    }
    m
}

/// Moves Weierstrass multiplicities into {0, 1} via 2W ~ 2∞ and cancels
/// conjugate pairs via P + P' ~ 2∞. Returns (D', h) with D = D' + div(h).
pub fn reduce_divisor(c: &HyperellipticCurve, d: &Divisor) -> Result<(Divisor, FunctionFieldElement)> {
    c.check_divisor(d)?;
    let mut shifts: BTreeMap<Q, i64> = BTreeMap::new();
    for (p, n) in d.iter() {
        let Some(x0) = p.x() else { continue };
        if shifts.contains_key(x0) {
            continue;
        }
        let k = if p.is_weierstrass() {
            n.div_euclid(2)
        } else {
            let m = d.mult(&p.conjugate());
            if n.abs() <= m.abs() {
                n
            } else {
                m
            }
        };
        shifts.insert(x0.clone(), k);
    }
    let mut out = d.clone();
    let mut h = FunctionFieldElement::one();
    for (x0, k) in shifts {
        if k == 0 {
            continue;
        }
        // D' = D − k·div(x − x₀)
        for pt in c.points_over(&x0) {
            let w = if pt.is_weierstrass() { 2 } else { 1 };
            out.add_point(pt, -k * w);
        }
        out.add_point(CurvePoint::Infinity, 2 * k);
        let lin = FunctionFieldElement::from_numerator(Poly::new(vec![-x0, q(1)]), Poly::zero(), Poly::one());
        h = c.mul(&h, &c.pow(&lin, k)?);
    }
    Ok((out, h))
}

fn basis_of(c: &HyperellipticCurve, d: &Divisor) -> Result<Vec<FunctionFieldElement>> {
    let sys = rr_system(c, d)?;
    let n = sys.cands.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let m = rational_rows(&sys.rows, n);
    let ker = if m.rows == 0 {
        (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { Q::zero() }).collect()).collect()
    } else {
        m.kernel()
    };
    Ok(ker
        .into_iter()
        .map(|v| {
            let mut a = Poly::zero();
            let mut b = Poly::zero();
            for ((e, has_y), coef) in sys.cands.iter().zip(v) {
                if coef.is_zero() {
                    continue;
                }
                let mono = Poly::monomial(*e, coef);
                if *has_y {
                    b = &b + &mono;
                } else {
                    a = &a + &mono;
                }
            }
            FunctionFieldElement::from_numerator(a, b, sys.den.clone())
        })
        .collect())
}

/// Basis of L(D) over Q. D must be stable under conjugation of its
/// quadratic-extension points so that L(D) has a rational basis.
pub fn rr_space(c: &HyperellipticCurve, d: &Divisor) -> Result<Vec<FunctionFieldElement>> {
    c.check_divisor(d)?;
    if !is_conjugation_stable(d) {
        return Err(Error::UnsupportedSupport(format!(
            "{d} is not conjugation-stable; L(D) has no basis over Q (h0 is still available)"
        )));
    }
    let (reduced, h) = reduce_divisor(c, d)?;
    let hinv = c.inv(&h)?;
    Ok(basis_of(c, &reduced)?.into_iter().map(|u| c.mul(&u, &hinv)).collect())
}

/// dim L(D) over the field of definition of its support.
pub fn h0(c: &HyperellipticCurve, d: &Divisor) -> Result<usize> {
    c.check_divisor(d)?;
    if d.degree() < 0 {
        return Ok(0);
    }
    let (reduced, _) = reduce_divisor(c, d)?;
    let sys = rr_system(c, &reduced)?;
    let n = sys.cands.len();
    if n == 0 || sys.rows.is_empty() {
        return Ok(n);
    }
    if sys.rows.iter().flatten().all(|s| s.is_rational()) || is_conjugation_stable(&reduced) {
        return Ok(n - rational_rows(&sys.rows, n).rank());
    }
    Ok(n - surd_rank(&sys.rows)?)
}

pub fn canonical_divisor(c: &HyperellipticCurve) -> Divisor {
    Divisor::point(CurvePoint::Infinity, 2 * c.genus() as i64 - 2)
}

pub fn canonical_class(c: &HyperellipticCurve) -> DivisorClass {
    DivisorClass::new(canonical_divisor(c))
}

/// h¹(D) = h⁰(K − D).
pub fn h1(c: &HyperellipticCurve, d: &Divisor) -> Result<usize> {
    h0(c, &canonical_divisor(c).sub(d))
}

pub fn is_principal(c: &HyperellipticCurve, d: &Divisor) -> Result<Principality> {
    c.check_divisor(d)?;
    if d.degree() != 0 {
        return Ok(Principality { principal: false, witness: None });
    }
    if d.is_zero() {
        return Ok(Principality { principal: true, witness: Some(FunctionFieldElement::one()) });
    }
    let principal = h0(c, d)? == 1;
    let witness = if principal && is_conjugation_stable(d) {
        // u ∈ L(D) with deg D = 0 has div(u) = −D
        let u = rr_space(c, d)?.into_iter().next().expect("one-dimensional space");
        Some(c.inv(&u)?)
    } else {
        None
    };
    Ok(Principality { principal, witness })
}

pub fn class_eq(c: &HyperellipticCurve, a: &DivisorClass, b: &DivisorClass) -> Result<bool> {
    Ok(is_principal(c, &a.rep.sub(&b.rep))?.principal)
}

/// D_S = Σ_{i∈S} W_i + (g − 1 − |S|)·∞.
pub fn theta_divisor(c: &HyperellipticCurve, subset: &[usize]) -> Result<Divisor> {
    let ws = c.weierstrass_points()?;
    let mut d = Divisor::point(CurvePoint::Infinity, c.genus() as i64 - 1 - subset.len() as i64);
    for &i in subset {
        let w = ws
            .get(i)
            .ok_or_else(|| Error::InvalidParameter(format!("branch point index {i} out of range 0..{}", ws.len())))?;
        d.add_point(w.clone(), 1);
    }
    Ok(d)
}

/// Canonical subset for a theta characteristic: the representative with
/// |S| ≤ g, using that S and its complement give the same class.
pub fn normalize_theta_subset(genus: usize, subset: &[usize]) -> Result<Vec<usize>> {
    let n = 2 * genus + 1;
    let mut s: Vec<usize> = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != subset.len() || s.iter().any(|&i| i >= n) {
        return Err(Error::InvalidParameter(format!("invalid branch point subset {subset:?}")));
    }
    if s.len() > genus {
        s = (0..n).filter(|i| !s.contains(i)).collect();
    }
    Ok(s)
}

pub(crate) fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize <= k {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn theta_characteristic(c: &HyperellipticCurve, subset: &[usize]) -> Result<ThetaCharacteristic> {
    let subset = normalize_theta_subset(c.genus(), subset)?;
    let d = theta_divisor(c, &subset)?;
    let two_d_minus_k = d.scale(2).sub(&canonical_divisor(c));
    if !is_principal(c, &two_d_minus_k)?.principal {
        return Err(Error::InvalidParameter(format!("2·{d} is not canonical")));
    }
    let h = h0(c, &d)?;
    let parity = if h % 2 == 0 { Parity::Even } else { Parity::Odd };
    Ok(ThetaCharacteristic { subset, class: DivisorClass::new(d), parity, h0: h })
}

/// All 2^(2g) theta characteristics, ordered by (|S|, S).
pub fn theta_characteristics(c: &HyperellipticCurve) -> Result<Vec<ThetaCharacteristic>> {
    c.branch_roots()?;
    subsets_up_to(2 * c.genus() + 1, c.genus()).iter().map(|s| theta_characteristic(c, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qf;

    fn quintic() -> HyperellipticCurve {
        HyperellipticCurve::model(2).unwrap()
    }

    fn w(i: i64) -> CurvePoint {
        CurvePoint::Affine { x: q(i), y: Q::zero() }
    }

    fn inf(n: i64) -> Divisor {
        Divisor::point(CurvePoint::Infinity, n)
    }

    #[test]
    fn small_spaces() {
        let c = quintic();
        let x = FunctionFieldElement::x();
        let y = FunctionFieldElement::y();
        let one = FunctionFieldElement::one();
        assert_eq!(rr_space(&c, &inf(2)).unwrap(), vec![one.clone(), x.clone()]);
        assert_eq!(rr_space(&c, &Divisor::zero()).unwrap(), vec![one.clone()]);
        let x2 = c.mul(&x, &x);
        let x3 = c.mul(&x2, &x);
        assert_eq!(rr_space(&c, &inf(6)).unwrap(), vec![one.clone(), x.clone(), x2.clone(), y.clone(), x3]);
        let mut d = inf(4);
        d.add_point(w(0), 1);
        let y_over_x = c.div(&y, &x).unwrap();
        assert_eq!(rr_space(&c, &d).unwrap(), vec![one, x, y_over_x, x2]);
    }

    #[test]
    fn cohomology_numbers() {
        let c = quintic();
        let k = canonical_divisor(&c);
        assert_eq!(h0(&c, &k).unwrap(), 2);
        assert_eq!(h1(&c, &k).unwrap(), 1);
        assert_eq!(h0(&c, &inf(-1)).unwrap(), 0);
        assert_eq!(h0(&c, &Divisor::point(w(0), 1)).unwrap(), 1);
        let c3 = HyperellipticCurve::model(3).unwrap();
        assert_eq!(canonical_divisor(&c3), inf(4));
        assert_eq!(h0(&c3, &canonical_divisor(&c3)).unwrap(), 3);
    }

    #[test]
    fn principality() {
        let c = quintic();
        let d = Divisor::from_pairs([(w(0), 2), (CurvePoint::Infinity, -2)]);
        let p = is_principal(&c, &d).unwrap();
        assert!(p.principal);
        assert_eq!(p.witness, Some(FunctionFieldElement::x()));
        let d = Divisor::from_pairs([(w(0), 1), (CurvePoint::Infinity, -1)]);
        assert!(!is_principal(&c, &d).unwrap().principal);
        assert_eq!(is_principal(&c, &Divisor::zero()).unwrap().witness, Some(FunctionFieldElement::one()));
    }

    #[test]
    fn class_equality() {
        let c = quintic();
        let cl = |d: Divisor| DivisorClass::new(d);
        assert!(class_eq(&c, &cl(Divisor::point(w(0), 2)), &cl(inf(2))).unwrap());
        assert!(!class_eq(&c, &cl(Divisor::point(w(0), 1)), &cl(Divisor::point(w(1), 1))).unwrap());
        let d = cl(Divisor::point(c.point(qf(1, 2), 1), 1));
        assert!(class_eq(&c, &d, &d).unwrap());
    }

    #[test]
    fn points_over_quadratic_fields() {
        let c = quintic();
        let p = c.point(qf(1, 2), 1);
        let pp = p.conjugate();
        // P + P' − 2∞ = div(x − 1/2)
        let d = Divisor::from_pairs([(p.clone(), 1), (pp.clone(), 1), (CurvePoint::Infinity, -2)]);
        assert!(is_principal(&c, &d).unwrap().principal);
        // a single such point: h0(P) = 1, h0(P + Q − ∞) = 0 generically
        assert_eq!(h0(&c, &Divisor::point(p.clone(), 1)).unwrap(), 1);
        let qp = c.point(qf(7, 3), 1);
        let l = Divisor::from_pairs([(p, 1), (qp, 1), (CurvePoint::Infinity, -1)]);
        assert_eq!(h0(&c, &l).unwrap(), 0);
        assert_eq!(h0(&c, &l.scale(2)).unwrap(), 1);
        assert!(rr_space(&c, &l).is_err());
    }

    #[test]
    fn theta_census_genus_two() {
        let c = quintic();
        let th = theta_characteristics(&c).unwrap();
        assert_eq!(th.len(), 16);
        assert_eq!(th.iter().filter(|t| t.parity == Parity::Odd).count(), 6);
        assert!(th.iter().filter(|t| t.parity == Parity::Odd).all(|t| t.subset.len() <= 1));
        assert_eq!(normalize_theta_subset(2, &[0, 1, 2]).unwrap(), vec![3, 4]);
    }
}
