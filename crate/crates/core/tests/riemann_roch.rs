use plurican::arith::linalg::rank_of;
use plurican::arith::poly::Poly;
use plurican::arith::{q, qf, Q};
use plurican::curve::{CurvePoint, Divisor, FunctionFieldElement, HyperellipticCurve};
use plurican::riemann_roch::{
    canonical_class, canonical_divisor, class_eq, h0, h1, is_principal, rr_space, theta_characteristics, DivisorClass,
};
use proptest::prelude::*;

/// Coefficient vectors of a and b in u = a(x) + b(x)y over a common
/// denominator; linear independence of these is independence over Q.
fn coefficient_rows(us: &[FunctionFieldElement]) -> Vec<Vec<Q>> {
    let forms: Vec<(Poly, Poly, Poly)> = us.iter().map(|u| u.numerator_form()).collect();
    let den = forms.iter().fold(Poly::one(), |acc, (_, _, d)| acc.lcm(d));
    let scaled: Vec<(Poly, Poly)> = forms
        .iter()
        .map(|(a, b, d)| {
            let k = den.exact_div(d);
            (a * &k, b * &k)
        })
        .collect();
    let len = scaled.iter().map(|(a, b)| a.degree().max(b.degree()) + 1).max().unwrap_or(0).max(0) as usize;
    scaled
        .iter()
        .map(|(a, b)| (0..len).map(|i| a.coeff(i)).chain((0..len).map(|i| b.coeff(i))).collect())
        .collect()
}

fn check_basis(c: &HyperellipticCurve, d: &Divisor, basis: &[FunctionFieldElement]) {
    assert_eq!(rank_of(&coefficient_rows(basis)), basis.len(), "dependent basis for {d}");
    for u in basis {
        // poles can only sit over the x-coordinates of the support or at ∞
        let (_, _, den) = u.numerator_form();
        let (roots, rest) = den.rational_roots().unwrap();
        assert_eq!(rest.degree(), 0, "pole over irrational x for {}", u.render());
        let mut points: Vec<CurvePoint> = d.support().cloned().collect();
        points.push(CurvePoint::Infinity);
        for (x0, _) in roots {
            points.extend(c.points_over(&x0));
        }
        for p in points {
            assert!(c.valuation(u, &p).unwrap() + d.mult(&p) >= 0, "{} not in L({d}) at {p}", u.render());
        }
    }
}

/// (genus, terms) where a term is (kind, x numerator, multiplicity): kind 0 is
/// ∞, kind 1 a Weierstrass point, kind 2 a conjugate pair over x.
fn divisor_terms() -> impl Strategy<Value = (usize, Vec<(u8, i64, i64)>)> {
    (2usize..=3).prop_flat_map(|g| {
        (Just(g), prop::collection::vec((0u8..3, 0i64..40, -2i64..=3), 1..5))
    })
}

fn build_divisor(c: &HyperellipticCurve, terms: &[(u8, i64, i64)]) -> Divisor {
    let ws = c.weierstrass_points().unwrap();
    let mut d = Divisor::zero();
    for &(kind, x, n) in terms {
        match kind {
            0 => d.add_point(CurvePoint::Infinity, n),
            1 => d.add_point(ws[x as usize % ws.len()].clone(), n),
            _ => {
                let x0 = qf(x - 20, 3);
                if c.f().eval(&x0) == q(0) {
                    continue;
                }
                for p in c.points_over(&x0) {
                    d.add_point(p, n);
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn riemann_roch_and_serre((g, terms) in divisor_terms(), shift in -3i64..=12) {
        let c = HyperellipticCurve::model(g).unwrap();
        let mut d = build_divisor(&c, &terms);
        let gi = g as i64;
        // bring the degree into [−3, 4g] with multiples of ∞
        let target = shift.clamp(-3, 4 * gi);
        d.add_point(CurvePoint::Infinity, target - d.degree());
        let (a, b) = (h0(&c, &d).unwrap() as i64, h1(&c, &d).unwrap() as i64);
        prop_assert_eq!(a - b, d.degree() + 1 - gi);
        prop_assert_eq!(b as usize, rr_space(&c, &canonical_divisor(&c).sub(&d)).unwrap().len());
        if d.degree() > 2 * gi - 2 {
            prop_assert_eq!(b, 0);
        }
        let basis = rr_space(&c, &d).unwrap();
        prop_assert_eq!(basis.len() as i64, a);
        check_basis(&c, &d, &basis);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn class_eq_is_an_equivalence(terms in prop::collection::vec((0u8..3, 0i64..40, -2i64..=3), 1..4), r1 in 10i64..40, r2 in 10i64..40) {
        let c = HyperellipticCurve::model(2).unwrap();
        let mut d = build_divisor(&c, &terms);
        d.add_point(CurvePoint::Infinity, -d.degree());
        let move_by = |d: &Divisor, r: i64| {
            let h = FunctionFieldElement::from_x(plurican::arith::ratfunc::RatFunc::from_poly(Poly::new(vec![qf(-r, 3), q(1)])));
            d.add(&c.divisor_of(&h).unwrap())
        };
        let a = DivisorClass::new(d.clone());
        let b = DivisorClass::new(move_by(&d, r1));
        let cc = DivisorClass::new(move_by(&move_by(&d, r1), r2));
        let other = DivisorClass::new(d.add(&Divisor::from_pairs([
            (c.weierstrass_points().unwrap()[0].clone(), 1),
            (CurvePoint::Infinity, -1),
        ])));
        prop_assert!(class_eq(&c, &a, &a).unwrap());
        prop_assert!(class_eq(&c, &a, &b).unwrap() && class_eq(&c, &b, &a).unwrap());
        prop_assert!(class_eq(&c, &b, &cc).unwrap() && class_eq(&c, &a, &cc).unwrap());
        prop_assert_eq!(class_eq(&c, &a, &other).unwrap(), class_eq(&c, &other, &a).unwrap());
        prop_assert!(!class_eq(&c, &b, &other).unwrap());
    }
}

fn quintic() -> HyperellipticCurve {
    HyperellipticCurve::model(2).unwrap()
}

fn w(c: &HyperellipticCurve, i: usize) -> CurvePoint {
    c.weierstrass_points().unwrap()[i].clone()
}

#[test]
fn rr_space_examples() {
    let c = quintic();
    let inf = |n| Divisor::point(CurvePoint::Infinity, n);
    let b = rr_space(&c, &inf(2)).unwrap();
    assert_eq!(b, vec![FunctionFieldElement::one(), FunctionFieldElement::x()]);
    assert_eq!(rr_space(&c, &Divisor::zero()).unwrap(), vec![FunctionFieldElement::one()]);
    let b6 = rr_space(&c, &inf(6)).unwrap();
    assert_eq!(b6.len(), 5);
    let poles: Vec<i64> = b6.iter().map(|u| -c.valuation(u, &CurvePoint::Infinity).unwrap()).collect();
    let mut sorted = poles.clone();
    sorted.sort();
    assert_eq!(sorted, vec![0, 2, 4, 5, 6]);
    check_basis(&c, &inf(6), &b6);
}

#[test]
fn cohomology_examples() {
    let c = quintic();
    let k = canonical_divisor(&c);
    assert_eq!((h0(&c, &k).unwrap(), h1(&c, &k).unwrap()), (2, 1));
    assert_eq!(h0(&c, &Divisor::point(w(&c, 0), -1)).unwrap(), 0);
    assert_eq!(h0(&c, &Divisor::point(w(&c, 0), 1)).unwrap(), 1);
    for g in [2, 3] {
        let c = HyperellipticCurve::model(g).unwrap();
        let kc = canonical_class(&c);
        assert_eq!(kc.degree(), 2 * g as i64 - 2);
        assert_eq!(h0(&c, kc.rep()).unwrap(), g);
    }
    assert_eq!(canonical_divisor(&HyperellipticCurve::model(3).unwrap()), Divisor::point(CurvePoint::Infinity, 4));
}

#[test]
fn principality_examples() {
    let c = quintic();
    let d = Divisor::from_pairs([(w(&c, 0), 2), (CurvePoint::Infinity, -2)]);
    let p = is_principal(&c, &d).unwrap();
    assert!(p.principal);
    let wit = p.witness.unwrap();
    assert_eq!(c.divisor_of(&wit).unwrap(), d);
    let x_over_const = c.div(&wit, &FunctionFieldElement::x()).unwrap();
    assert!(c.divisor_of(&x_over_const).unwrap().is_zero());
    assert!(!is_principal(&c, &Divisor::from_pairs([(w(&c, 0), 1), (CurvePoint::Infinity, -1)])).unwrap().principal);
    let e = is_principal(&c, &Divisor::zero()).unwrap();
    assert!(e.principal && e.witness == Some(FunctionFieldElement::one()));
}

#[test]
fn class_eq_examples() {
    let c = quintic();
    let two_w0 = DivisorClass::new(Divisor::point(w(&c, 0), 2));
    let two_inf = DivisorClass::new(Divisor::point(CurvePoint::Infinity, 2));
    assert!(class_eq(&c, &two_w0, &two_inf).unwrap());
    let w0 = DivisorClass::new(Divisor::point(w(&c, 0), 1));
    let w1 = DivisorClass::new(Divisor::point(w(&c, 1), 1));
    assert!(!class_eq(&c, &w0, &w1).unwrap());
    assert!(class_eq(&c, &w1, &w1).unwrap());
}

#[test]
fn theta_census() {
    for (g, odd) in [(2usize, 6usize), (3, 28)] {
        let c = HyperellipticCurve::model(g).unwrap();
        let thetas = theta_characteristics(&c).unwrap();
        assert_eq!(thetas.len(), 1 << (2 * g));
        assert_eq!(thetas.iter().filter(|t| t.h0 % 2 == 1).count(), odd);
        let k = canonical_class(&c);
        for t in &thetas {
            assert!(class_eq(&c, &t.class.scale(2), &k).unwrap());
        }
    }
    let c = quintic();
    let thetas = theta_characteristics(&c).unwrap();
    for t in &thetas {
        let expected_odd = t.subset.len() <= 1;
        assert_eq!(t.h0 % 2 == 1, expected_odd, "{:?}", t.subset);
    }
    let no_roots = HyperellipticCurve::new(Poly::from_i64(&[1, 0, 0, 0, 0, 1])).unwrap();
    assert!(theta_characteristics(&no_roots).is_err());
}
