use plurican::arith::poly::Poly;
use plurican::arith::ratfunc::RatFunc;
use plurican::arith::{q, qf};
use plurican::curve::{CurvePoint, Divisor, HyperellipticCurve};
use plurican::graded::{generators, GrassmannElement};
use plurican::pluricanonical::{random_degree_g_minus_1_class, seeded_rng};
use plurican::riemann_roch::{canonical_class, class_eq, theta_characteristics, DivisorClass};
use plurican::supercurve::{
    berezinian_bundle, deformation_injectivity_dims, dual_supercurve, is_autodual, make_split_supercurve,
    moduli_dimension, verify_transition, RankPair,
};
use proptest::prelude::*;

fn quintic() -> HyperellipticCurve {
    HyperellipticCurve::model(2).unwrap()
}

fn w(c: &HyperellipticCurve, i: usize) -> CurvePoint {
    c.weierstrass_points().unwrap()[i].clone()
}

#[test]
fn construction_examples() {
    let c = quintic();
    let w0 = DivisorClass::new(Divisor::point(w(&c, 0), 1));
    assert!(make_split_supercurve(&c, &w0).unwrap().susy());
    let even = DivisorClass::new(Divisor::from_pairs([(w(&c, 0), 1), (w(&c, 1), 1), (CurvePoint::Infinity, -1)]));
    assert!(make_split_supercurve(&c, &even).unwrap().susy());
    let two_w0 = DivisorClass::new(Divisor::from_pairs([(w(&c, 0), 2), (CurvePoint::Infinity, -1)]));
    assert!(make_split_supercurve(&c, &two_w0).unwrap().susy());
    let generic = DivisorClass::new(Divisor::from_pairs([
        (c.point(q(5), 1), 1),
        (c.point(q(7), -1), 1),
        (CurvePoint::Infinity, -1),
    ]));
    assert!(!make_split_supercurve(&c, &generic).unwrap().susy());
    assert!(make_split_supercurve(&c, &DivisorClass::new(Divisor::point(w(&c, 0), 2))).is_err());
}

#[test]
fn berezinian_bundle_is_l() {
    for g in [2, 3] {
        let c = HyperellipticCurve::model(g).unwrap();
        let k = canonical_class(&c);
        for t in theta_characteristics(&c).unwrap().into_iter().take(10) {
            let x = make_split_supercurve(&c, &t.class).unwrap();
            let b = berezinian_bundle(&x);
            assert_eq!(b.class, t.class);
            assert_eq!(b.class.degree(), g as i64 - 1);
            assert_eq!(b.rank, RankPair::new(0, 1));
            assert!(class_eq(&c, &b.class.scale(2), &k).unwrap());
        }
    }
}

#[test]
fn autoduality_matches_susy() {
    for g in [2, 3] {
        let c = HyperellipticCurve::model(g).unwrap();
        for t in theta_characteristics(&c).unwrap() {
            let x = make_split_supercurve(&c, &t.class).unwrap();
            assert!(x.susy() && is_autodual(&x).unwrap(), "{}", t.class);
            assert!(class_eq(&c, dual_supercurve(&x).unwrap().l(), x.l()).unwrap());
        }
    }
    let mut rng = seeded_rng(11);
    for i in 0..20 {
        let c = HyperellipticCurve::model(2 + i % 2).unwrap();
        let x = make_split_supercurve(&c, &random_degree_g_minus_1_class(&c, &mut rng)).unwrap();
        assert_eq!(is_autodual(&x).unwrap(), x.susy());
        assert!(!x.susy());
    }
}

#[test]
fn duality_is_an_involution() {
    let mut rng = seeded_rng(5);
    for i in 0..30 {
        let c = HyperellipticCurve::model(2 + i % 3).unwrap();
        let x = make_split_supercurve(&c, &random_degree_g_minus_1_class(&c, &mut rng)).unwrap();
        let d = dual_supercurve(&x).unwrap();
        assert_eq!(d.l().degree(), 2 * c.genus() as i64 - 2 - x.l().degree());
        let dd = dual_supercurve(&d).unwrap();
        assert!(class_eq(&c, dd.l(), x.l()).unwrap());
    }
}

#[test]
fn moduli_dimensions() {
    for g in 2..=6 {
        let m = moduli_dimension(g).unwrap();
        assert_eq!(m.dims, RankPair::new(3 * g - 3, 2 * g - 2));
    }
    assert!(moduli_dimension(1).is_err());
    let d2 = deformation_injectivity_dims(2).unwrap();
    assert_eq!((d2.h1_s, d2.h1_tc), (RankPair::new(3, 2), RankPair::new(3, 2)));
    let d3 = deformation_injectivity_dims(3).unwrap();
    assert_eq!((d3.h1_s, d3.h1_tc), (RankPair::new(6, 4), RankPair::new(6, 4)));
    for g in 2..=5 {
        let d = deformation_injectivity_dims(g).unwrap();
        assert!(d.injective_shadow);
        assert_eq!(d.h1_s.odd, d.h1_tc.odd);
    }
}

#[test]
fn transition_examples() {
    let one = RatFunc::one();
    assert!(verify_transition(&RatFunc::var(), &one).unwrap().holds());
    let r = verify_transition(&RatFunc::from_poly(Poly::from_i64(&[0, 4])), &RatFunc::constant(q(2))).unwrap();
    assert!(r.holds());
    assert_eq!(r.berezinian, GrassmannElement::constant(&generators(&["θ"]), q(2)));
    let den = Poly::from_i64(&[1, -1]);
    let phi = RatFunc::new(Poly::x(), den.clone());
    let psi = RatFunc::new(Poly::one(), den);
    assert!(verify_transition(&phi, &psi).unwrap().holds());
    assert!(verify_transition(&RatFunc::from_poly(Poly::from_i64(&[0, 4])), &one).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, failure_persistence: None, ..ProptestConfig::default() })]

    /// φ = (az + b)/(cz + d) with ad − bc = k², ψ = k/(cz + d).
    #[test]
    fn mobius_transitions(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, k in 1i64..=5, sgn in any::<bool>()) {
        prop_assume!(a != 0);
        // choose d so that ad − bc = k²; needs a | k² + bc
        prop_assume!((k * k + b * c) % a == 0);
        let d = (k * k + b * c) / a;
        prop_assume!(c != 0 || d != 0);
        let den = Poly::new(vec![q(d), q(c)]);
        let phi = RatFunc::new(Poly::new(vec![q(b), q(a)]), den.clone());
        let kk = if sgn { qf(k, 1) } else { qf(-k, 1) };
        let psi = RatFunc::new(Poly::constant(kk), den);
        let r = verify_transition(&phi, &psi).unwrap();
        prop_assert!(r.d_transforms_by_psi && r.berezinian_is_psi);
    }
}
