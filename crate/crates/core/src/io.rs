//! JSON forms of curves, points, divisors, supercurves and models. Rationals
//! are always "p/q" strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::arith::{fmt_q, parse_q, Q};
use crate::curve::{CurvePoint, Divisor, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::expr::parse_function;
use crate::pluricanonical::PluriCanonicalModel;
use crate::riemann_roch::DivisorClass;
use crate::supercurve::{make_split_supercurve, theta_split_supercurve, RankPair, SplitSupercurve};

#[derive(Serialize, Deserialize)]
struct PointRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inf: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y_in_ext: Option<[String; 2]>,
}

impl Serialize for CurvePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = match self {
            CurvePoint::Infinity => PointRepr { inf: Some(true), x: None, y: None, y_in_ext: None },
            CurvePoint::Affine { x, y } => PointRepr { inf: None, x: Some(fmt_q(x)), y: Some(fmt_q(y)), y_in_ext: None },
            CurvePoint::Ext { x, sign } => PointRepr {
                inf: None,
                x: Some(fmt_q(x)),
                y: None,
                y_in_ext: Some(["0".into(), if *sign < 0 { "-1".into() } else { "1".into() }]),
            },
        };
        r.serialize(s)
    }
}

fn point_from_repr(r: PointRepr) -> Result<CurvePoint> {
    if r.inf == Some(true) {
        return Ok(CurvePoint::Infinity);
    }
    let x = parse_q(r.x.as_deref().ok_or_else(|| Error::Parse("point without x".into()))?)?;
    match (r.y, r.y_in_ext) {
        (Some(y), None) => Ok(CurvePoint::Affine { x, y: parse_q(&y)? }),
        (None, Some([u, v])) => {
            let (u, v) = (parse_q(&u)?, parse_q(&v)?);
            let one = Q::from_integer(1.into());
            if v == Q::from_integer(0.into()) {
                Ok(CurvePoint::Affine { x, y: u })
            } else if u == Q::from_integer(0.into()) && (v == one || v == -one.clone()) {
                Ok(CurvePoint::Ext { x, sign: if v == one { 1 } else { -1 } })
            } else {
                Err(Error::NotOnCurve(format!("y = {} + {}·√f(x) cannot satisfy y² = f(x)", fmt_q(&u), fmt_q(&v))))
            }
        }
        _ => Err(Error::Parse("point needs exactly one of y, y_in_ext".into())),
    }
}

impl<'de> Deserialize<'de> for CurvePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        point_from_repr(PointRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    point: CurvePoint,
    multiplicity: i64,
}

impl Serialize for Divisor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self.iter().map(|(p, n)| Term { point: p.clone(), multiplicity: n }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Divisor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(Divisor::from_pairs(terms.into_iter().map(|t| (t.point, t.multiplicity))))
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rep().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(DivisorClass::new(Divisor::deserialize(d)?))
    }
}

#[derive(Serialize, Deserialize)]
struct CurveRepr {
    f_coeffs: Vec<String>,
}

impl Serialize for HyperellipticCurve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CurveRepr { f_coeffs: self.f().coeffs().iter().map(fmt_q).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HyperellipticCurve {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CurveRepr::deserialize(d)?;
        let cs = r.f_coeffs.iter().map(|s| parse_q(s)).collect::<Result<Vec<Q>>>().map_err(D::Error::custom)?;
        HyperellipticCurve::from_coeffs(&cs).map_err(D::Error::custom)
    }
}

fn de<T: for<'a> Deserialize<'a>>(v: &Value, what: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

pub fn curve_from_json(v: &Value) -> Result<HyperellipticCurve> {
    de(v, "curve")
}

pub fn curve_to_json(c: &HyperellipticCurve) -> Value {
    serde_json::to_value(c).expect("serializable")
}

/// Divisor checked against the curve.
pub fn divisor_from_json(c: &HyperellipticCurve, v: &Value) -> Result<Divisor> {
    let d: Divisor = de(v, "divisor")?;
    c.check_divisor(&d)?;
    Ok(d)
}

pub fn theta_subset_from_json(v: &Value) -> Result<Vec<usize>> {
    de(field(v, "subset")?, "theta subset")
}

/// {"curve": <curve>, "L": <divisor> | {"subset": [...]}}
pub fn supercurve_from_json(v: &Value) -> Result<SplitSupercurve> {
    let c = curve_from_json(field(v, "curve")?)?;
    let l = field(v, "L")?;
    if l.get("subset").is_some() {
        theta_split_supercurve(&c, &theta_subset_from_json(l)?)
    } else {
        make_split_supercurve(&c, &DivisorClass::new(divisor_from_json(&c, l)?))
    }
}

pub fn supercurve_to_json(x: &SplitSupercurve) -> Value {
    json!({ "curve": curve_to_json(x.curve()), "L": x.l().rep() })
}

pub fn model_to_json(m: &PluriCanonicalModel) -> Value {
    let render = |v: &[crate::curve::FunctionFieldElement]| v.iter().map(|f| f.render()).collect::<Vec<_>>();
    json!({
        "nu": m.nu,
        "ambient": m.ambient,
        "even_sections": render(&m.even_sections),
        "odd_sections": render(&m.odd_sections),
        "cleared_divisors": { "even": m.even_cleared, "odd": m.odd_cleared },
        "divisors": { "even": m.even_divisor, "odd": m.odd_divisor },
        "L": m.l,
        "curve": curve_to_json(&m.curve),
    })
}

pub fn model_from_json(v: &Value) -> Result<PluriCanonicalModel> {
    let curve = curve_from_json(field(v, "curve")?)?;
    let nu: u32 = de(field(v, "nu")?, "nu")?;
    let ambient: RankPair = de(field(v, "ambient")?, "ambient")?;
    let sections = |key: &str| -> Result<Vec<crate::curve::FunctionFieldElement>> {
        let ss: Vec<String> = de(field(v, key)?, key)?;
        ss.iter().map(|s| parse_function(&curve, s)).collect()
    };
    let even_sections = sections("even_sections")?;
    let odd_sections = sections("odd_sections")?;
    let cleared = field(v, "cleared_divisors")?;
    let divisors = field(v, "divisors")?;
    let m = PluriCanonicalModel {
        nu,
        ambient,
        l: divisor_from_json(&curve, field(v, "L")?)?,
        even_divisor: divisor_from_json(&curve, field(divisors, "even")?)?,
        odd_divisor: divisor_from_json(&curve, field(divisors, "odd")?)?,
        even_cleared: divisor_from_json(&curve, field(cleared, "even")?)?,
        odd_cleared: divisor_from_json(&curve, field(cleared, "odd")?)?,
        even_sections,
        odd_sections,
        curve,
    };
    if m.even_sections.len() != m.ambient.even + 1 || m.odd_sections.len() != m.ambient.odd {
        return Err(Error::Parse(format!(
            "ambient P^{} does not match {}|{} sections",
            m.ambient,
            m.even_sections.len(),
            m.odd_sections.len()
        )));
    }
    Ok(m)
}
