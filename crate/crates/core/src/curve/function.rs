use std::fmt;

use num_traits::{One, Zero};

use crate::arith::poly::{render_poly, Poly};
use crate::arith::ratfunc::RatFunc;
use crate::arith::Q;

/// a(x) + b(x)·y in the function field of y² = f(x). The curve equation is
/// applied by the multiplication routines on `HyperellipticCurve`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FunctionFieldElement {
    a: RatFunc,
    b: RatFunc,
}

impl FunctionFieldElement {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        FunctionFieldElement { a, b }
    }

    pub fn zero() -> Self {
        FunctionFieldElement::default()
    }

    pub fn one() -> Self {
        FunctionFieldElement::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        FunctionFieldElement::new(RatFunc::constant(c), RatFunc::zero())
    }

    pub fn x() -> Self {
        FunctionFieldElement::new(RatFunc::var(), RatFunc::zero())
    }

    pub fn y() -> Self {
        FunctionFieldElement::new(RatFunc::zero(), RatFunc::one())
    }

    pub fn from_x(a: RatFunc) -> Self {
        FunctionFieldElement::new(a, RatFunc::zero())
    }

    /// (A + B·y)/Den from polynomials.
    pub fn from_numerator(a: Poly, b: Poly, den: Poly) -> Self {
        let d = RatFunc::from_poly(den);
        FunctionFieldElement::new(&RatFunc::from_poly(a) / &d, &RatFunc::from_poly(b) / &d)
    }

    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        FunctionFieldElement::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        FunctionFieldElement::new(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn neg(&self) -> Self {
        FunctionFieldElement::new(-&self.a, -&self.b)
    }

    pub fn scale(&self, s: &Q) -> Self {
        FunctionFieldElement::new(self.a.scale(s), self.b.scale(s))
    }

    pub fn scale_x(&self, s: &RatFunc) -> Self {
        FunctionFieldElement::new(&self.a * s, &self.b * s)
    }

    /// (A, B, Den) with self = (A + B·y)/Den, Den monic and minimal.
    pub fn numerator_form(&self) -> (Poly, Poly, Poly) {
        let den = self.a.den().lcm(self.b.den());
        let a = self.a.num() * &den.exact_div(self.a.den());
        let b = self.b.num() * &den.exact_div(self.b.den());
        (a, b, den)
    }

    /// Human-readable and re-parseable form, e.g. "x^2 + 1 + (x - 1)*y" or "(1 + y)/x".
    pub fn render(&self) -> String {
        let (a, b, den) = self.numerator_form();
        let mut parts = Vec::new();
        if !a.is_zero() {
            parts.push(render_poly(&a, "x"));
        }
        if !b.is_zero() {
            let bs = render_poly(&b, "x");
            let term = if b == Poly::one() {
                "y".to_string()
            } else if b == -&Poly::one() {
                "-y".to_string()
            } else if b.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
                format!("{bs}*y")
            } else {
                format!("({bs})*y")
            };
            parts.push(term);
        }
        let num = if parts.is_empty() {
            "0".to_string()
        } else {
            let mut s = parts[0].clone();
            for p in &parts[1..] {
                match p.strip_prefix('-') {
                    Some(rest) => {
                        s.push_str(" - ");
                        s.push_str(rest);
                    }
                    None => {
                        s.push_str(" + ");
                        s.push_str(p);
                    }
                }
            }
            s
        };
        if den.degree() == 0 {
            num
        } else {
            let wrap = |t: String| if t.contains(' ') { format!("({t})") } else { t };
            format!("{}/{}", wrap(num), wrap(render_poly(&den, "x")))
        }
    }
}

impl fmt::Display for FunctionFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for FunctionFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFE({})", self.render())
    }
}
