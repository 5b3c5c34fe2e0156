//! Small exact expression language shared by model files and the command line:
//! rationals, identifiers, + - * / ^, parentheses, `·` and juxtaposition for
//! products. Evaluates into function fields of curves or Grassmann algebras.

use crate::arith::Q;
use crate::curve::{FunctionFieldElement, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::graded::{generators, GrassmannElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Q),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn is_greek(c: char) -> bool {
    ('\u{0391}'..='\u{03c9}').contains(&c)
}

fn is_subscript(c: char) -> bool {
    ('\u{2080}'..='\u{2089}').contains(&c)
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().expect("digits")));
        } else if is_greek(c) {
            // each Greek letter starts its own name so θη₁ reads as θ·η₁
            let st = i;
            i += 1;
            while i < cs.len() && (is_subscript(cs[i]) || cs[i].is_ascii_digit()) {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_' || is_subscript(cs[i])) {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '·' || c == '×' {
            out.push(Tok::Op('*'));
            i += 1;
        } else if c == '−' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.product()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.product()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.product()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else if self.starts_atom() {
                e = Expr::Mul(Box::new(e), Box::new(self.power()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let paren = self.eat('(');
            let neg = neg || (paren && self.eat('-'));
            let n = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => n.clone(),
                _ => return Err(Error::Parse("exponent must be an integer".into())),
            };
            self.pos += 1;
            if paren && !self.eat(')') {
                return Err(Error::Parse("missing ) in exponent".into()));
            }
            let n: i64 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            return Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Q::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing )".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    if p.toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

impl Expr {
    /// Identifiers in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Element of Q(C) written in x and y.
pub fn eval_function(c: &HyperellipticCurve, e: &Expr) -> Result<FunctionFieldElement> {
    Ok(match e {
        Expr::Num(v) => FunctionFieldElement::constant(v.clone()),
        Expr::Var(v) => match v.as_str() {
            "x" => FunctionFieldElement::x(),
            "y" => FunctionFieldElement::y(),
            _ => return Err(Error::Parse(format!("unknown variable {v}; functions use x and y"))),
        },
        Expr::Neg(a) => eval_function(c, a)?.neg(),
        Expr::Add(a, b) => eval_function(c, a)?.add(&eval_function(c, b)?),
        Expr::Sub(a, b) => eval_function(c, a)?.sub(&eval_function(c, b)?),
        Expr::Mul(a, b) => c.mul(&eval_function(c, a)?, &eval_function(c, b)?),
        Expr::Div(a, b) => c.div(&eval_function(c, a)?, &eval_function(c, b)?)?,
        Expr::Pow(a, n) => c.pow(&eval_function(c, a)?, *n)?,
    })
}

pub fn parse_function(c: &HyperellipticCurve, s: &str) -> Result<FunctionFieldElement> {
    eval_function(c, &parse(s)?)
}

fn is_theta(v: &str) -> bool {
    v == "θ" || v == "theta"
}

/// Odd generator names for a coordinate change: θ first, then every other
/// identifier except z in order of appearance.
pub fn odd_generators(exprs: &[&Expr]) -> Vec<String> {
    let mut names = vec!["θ".to_string()];
    for e in exprs {
        for v in e.variables() {
            if v != "z" && !is_theta(&v) && !names.contains(&v) {
                names.push(v);
            }
        }
    }
    names
}

/// Element of Q(z)[θ, η, …]; z is the only even variable.
pub fn eval_grassmann(names: &[String], e: &Expr) -> Result<GrassmannElement> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let gens = generators(&refs);
    eval_in(&gens, e)
}

fn eval_in(gens: &crate::graded::Generators, e: &Expr) -> Result<GrassmannElement> {
    Ok(match e {
        Expr::Num(v) => GrassmannElement::constant(gens, v.clone()),
        Expr::Var(v) if v == "z" => GrassmannElement::z(gens),
        Expr::Var(v) => GrassmannElement::generator_named(gens, if is_theta(v) { "θ" } else { v })?,
        Expr::Neg(a) => eval_in(gens, a)?.neg(),
        Expr::Add(a, b) => eval_in(gens, a)?.add(&eval_in(gens, b)?)?,
        Expr::Sub(a, b) => eval_in(gens, a)?.sub(&eval_in(gens, b)?)?,
        Expr::Mul(a, b) => eval_in(gens, a)?.mul(&eval_in(gens, b)?)?,
        Expr::Div(a, b) => eval_in(gens, a)?.mul(&eval_in(gens, b)?.inv()?)?,
        Expr::Pow(a, k) => {
            let b = eval_in(gens, a)?;
            if *k >= 0 {
                b.pow(*k as u32)
            } else {
                b.inv()?.pow((-*k) as u32)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratfunc::RatFunc;

    #[test]
    fn functions_round_trip_through_render() {
        let c = HyperellipticCurve::model(2).unwrap();
        for s in ["x^2 + (x - 1)*y", "y/x", "(1 + y)/(x^2 - 3/2)", "-x^3*y + 7", "1/(x - 1)^2"] {
            let f = parse_function(&c, s).unwrap();
            assert_eq!(parse_function(&c, &f.render()).unwrap(), f, "{s}");
        }
        assert_eq!(parse_function(&c, "y^2").unwrap(), FunctionFieldElement::from_x(RatFunc::from_poly(c.f().clone())));
        assert!(parse_function(&c, "z").is_err());
        assert!(parse_function(&c, "x +").is_err());
    }

    #[test]
    fn grassmann_juxtaposition() {
        let a = parse("1 + 3/2*z^2·θη₁").unwrap();
        let names = odd_generators(&[&a]);
        assert_eq!(names, vec!["θ".to_string(), "η₁".to_string()]);
        let g = eval_grassmann(&names, &a).unwrap();
        assert_eq!(g.to_string(), "1 + 3/2*z^2·θη₁");
    }
}
