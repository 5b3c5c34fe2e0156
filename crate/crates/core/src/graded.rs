//! Z/2-graded supercommutative algebra over rational functions of one even
//! variable z: Grassmann elements, even supermatrices with their Berezinian,
//! and super vector fields on the 1|1 chart (z | θ).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::arith::poly::Poly;
use crate::arith::ratfunc::RatFunc;
use crate::arith::{q, qf, Q};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_count(n: u32) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, o: Parity) -> Parity {
        Parity::of_count(self.bit() + o.bit())
    }
}

/// Names of the odd generators, in their canonical order.
pub type Generators = Arc<Vec<String>>;

pub fn generators(names: &[&str]) -> Generators {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Sum of coefficient(z) * (product of odd generators in a subset). Subsets
/// are bitmasks over the generator list; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    gens: Generators,
    terms: BTreeMap<u64, RatFunc>,
}

fn koszul_sign(s: u64, t: u64) -> bool {
    // true when the permutation sorting s ++ t is odd
    let mut n = 0u32;
    let mut rest = t;
    while rest != 0 {
        let i = rest.trailing_zeros();
        rest &= rest - 1;
        n += (s >> (i + 1)).count_ones();
    }
    n % 2 == 1
}

impl GrassmannElement {
    pub fn zero(gens: &Generators) -> Self {
        assert!(gens.len() <= 64, "at most 64 odd generators");
        GrassmannElement { gens: gens.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(gens: &Generators, c: RatFunc) -> Self {
        let mut e = GrassmannElement::zero(gens);
        e.insert(0, c);
        e
    }

    pub fn constant(gens: &Generators, c: Q) -> Self {
        GrassmannElement::scalar(gens, RatFunc::constant(c))
    }

    pub fn one(gens: &Generators) -> Self {
        GrassmannElement::constant(gens, q(1))
    }

    /// The even variable z.
    pub fn z(gens: &Generators) -> Self {
        GrassmannElement::scalar(gens, RatFunc::var())
    }

    pub fn generator(gens: &Generators, i: usize) -> Self {
        assert!(i < gens.len());
        let mut e = GrassmannElement::zero(gens);
        e.insert(1 << i, RatFunc::one());
        e
    }

    pub fn generator_named(gens: &Generators, name: &str) -> Result<Self> {
        let i = gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown odd generator {name}")))?;
        Ok(GrassmannElement::generator(gens, i))
    }

    /// c * (product of the listed generators in the given order).
    pub fn monomial(gens: &Generators, c: RatFunc, idx: &[usize]) -> Self {
        let mut e = GrassmannElement::scalar(gens, c);
        for &i in idx {
            e = e.mul(&GrassmannElement::generator(gens, i)).expect("same generators");
        }
        e
    }

    fn insert(&mut self, mask: u64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_insert_with(RatFunc::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn gens(&self) -> &Generators {
        &self.gens
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &RatFunc)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: u64) -> RatFunc {
        self.terms.get(&mask).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Image modulo every odd generator.
    pub fn body(&self) -> RatFunc {
        self.coefficient(0)
    }

    /// None when the element mixes parities. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|m| Parity::of_count(m.count_ones()));
        match ps.next() {
            None => Some(Parity::Even),
            Some(p) => ps.all(|o| o == p).then_some(p),
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Some(Parity::Even)
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Some(Parity::Odd) && !self.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.gens != o.gens && *self.gens != *o.gens {
            return Err(Error::GeneratorMismatch((*self.gens).clone(), (*o.gens).clone()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        GrassmannElement { gens: self.gens.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        let mut out = GrassmannElement::zero(&self.gens);
        for (m, c) in &self.terms {
            out.insert(*m, c * s);
        }
        out
    }

    pub fn scale_q(&self, s: &Q) -> Self {
        self.scale(&RatFunc::constant(s.clone()))
    }

    /// Supercommutative product with the Koszul sign rule.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = GrassmannElement::zero(&self.gens);
        for (s, a) in &self.terms {
            for (t, b) in &o.terms {
                if s & t != 0 {
                    continue;
                }
                let c = a * b;
                out.insert(s | t, if koszul_sign(*s, *t) { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GrassmannElement::one(&self.gens);
        for _ in 0..e {
            acc = acc.mul(self).expect("same generators");
        }
        acc
    }

    /// Inverse of an even element with nonzero body, via the finite geometric
    /// series in its nilpotent part.
    pub fn inv(&self) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::Parity("only even elements are inverted".into()));
        }
        let b = self.body();
        if b.is_zero() {
            return Err(Error::SingularBody(format!("{self}")));
        }
        let binv = b.inv();
        // x = b (1 + m), m = (x - b)/b nilpotent
        let mut m = self.clone();
        m.terms.remove(&0);
        let m = m.scale(&binv);
        let minus_m = m.neg();
        let mut acc = GrassmannElement::one(&self.gens);
        let mut power = GrassmannElement::one(&self.gens);
        loop {
            power = power.mul(&minus_m)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scale(&binv))
    }

    /// Derivative in the even variable z.
    pub fn d_z(&self) -> Self {
        let mut out = GrassmannElement::zero(&self.gens);
        for (m, c) in &self.terms {
            out.insert(*m, c.derivative());
        }
        out
    }

    /// Left derivative in the odd generator i.
    pub fn d_odd(&self, i: usize) -> Self {
        let bit = 1u64 << i;
        let mut out = GrassmannElement::zero(&self.gens);
        for (m, c) in &self.terms {
            if m & bit == 0 {
                continue;
            }
            let before = (m & (bit - 1)).count_ones();
            out.insert(m & !bit, if before % 2 == 1 { -c } else { c.clone() });
        }
        out
    }

    /// Simultaneous substitution z -> zz (even) and generator i -> th.
    pub fn substitute(&self, zz: &Self, i: usize, th: &Self) -> Result<Self> {
        self.check(zz)?;
        self.check(th)?;
        if !zz.is_even() {
            return Err(Error::Parity("z must be replaced by an even element".into()));
        }
        if th.parity() != Some(Parity::Odd) && !th.is_zero() {
            return Err(Error::Parity("an odd generator must be replaced by an odd element".into()));
        }
        let zb = zz.body();
        let mut nil = zz.clone();
        nil.terms.remove(&0);
        let mut out = GrassmannElement::zero(&self.gens);
        for (m, c) in &self.terms {
            // c(zb + nil) = sum_k c^(k)(zb) nil^k / k!
            let mut coeff = GrassmannElement::zero(&self.gens);
            let mut deriv = c.clone();
            let mut nil_pow = GrassmannElement::one(&self.gens);
            let mut fact = Q::one();
            let mut k = 0i64;
            loop {
                if deriv.is_zero() || nil_pow.is_zero() {
                    break;
                }
                let term = nil_pow.scale(&deriv.compose(&zb)).scale_q(&(Q::one() / &fact));
                coeff = coeff.add(&term)?;
                k += 1;
                fact *= q(k);
                deriv = deriv.derivative();
                nil_pow = nil_pow.mul(&nil)?;
            }
            let mut mono = GrassmannElement::one(&self.gens);
            let mut rest = *m;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let factor = if j == i { th.clone() } else { GrassmannElement::generator(&self.gens, j) };
                mono = mono.mul(&factor)?;
            }
            out = out.add(&coeff.mul(&mono)?)?;
        }
        Ok(out)
    }

    fn render_mask(&self, m: u64) -> String {
        (0..self.gens.len()).filter(|i| m & (1 << i) != 0).map(|i| self.gens[i].as_str()).collect()
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<u64> = self.terms.keys().copied().collect();
        keys.sort_by_key(|m| {
            let idx: Vec<u32> = (0..64).filter(|i| m & (1 << i) != 0).collect();
            (m.count_ones(), idx)
        });
        let parts: Vec<String> = keys
            .iter()
            .map(|m| {
                let c = &self.terms[m];
                let cs = c.render("z");
                let cs = if c.is_constant() || !(cs.contains(' ')) { cs } else { format!("({cs})") };
                if *m == 0 {
                    cs
                } else if *c == RatFunc::one() {
                    self.render_mask(*m)
                } else if c.as_constant() == Some(-Q::one()) {
                    format!("-{}", self.render_mask(*m))
                } else {
                    format!("{cs}·{}", self.render_mask(*m))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Free function form of the product.
pub fn grassmann_mul(a: &GrassmannElement, b: &GrassmannElement) -> Result<GrassmannElement> {
    a.mul(b)
}

/// Even supermatrix of size (p|q) x (p|q), stored as a full square matrix
/// whose top-left p x p and bottom-right q x q blocks are even and whose
/// off-diagonal blocks are odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    p: usize,
    q: usize,
    m: Vec<Vec<GrassmannElement>>,
}

fn det_even(m: &[Vec<GrassmannElement>], gens: &Generators) -> Result<GrassmannElement> {
    let n = m.len();
    if n == 0 {
        return Ok(GrassmannElement::one(gens));
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = GrassmannElement::zero(gens);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GrassmannElement>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let t = m[0][j].mul(&det_even(&minor, gens)?)?;
        acc = if j % 2 == 0 { acc.add(&t)? } else { acc.sub(&t)? };
    }
    Ok(acc)
}

fn mat_mul(
    a: &[Vec<GrassmannElement>],
    b: &[Vec<GrassmannElement>],
    gens: &Generators,
) -> Result<Vec<Vec<GrassmannElement>>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        let mut r = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut acc = GrassmannElement::zero(gens);
            for k in 0..inner {
                acc = acc.add(&row[k].mul(&b[k][j])?)?;
            }
            r.push(acc);
        }
        out.push(r);
    }
    Ok(out)
}

/// Inverse of a matrix with even (hence mutually commuting) entries.
fn inverse_even(m: &[Vec<GrassmannElement>], gens: &Generators) -> Result<Vec<Vec<GrassmannElement>>> {
    let n = m.len();
    let det = det_even(m, gens)?;
    let dinv = det.inv()?;
    let mut out = vec![vec![GrassmannElement::zero(gens); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<GrassmannElement>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, v)| v.clone()).collect())
                .collect();
            let cof = det_even(&minor, gens)?;
            let cof = if (i + j) % 2 == 1 { cof.neg() } else { cof };
            out[i][j] = cof.mul(&dinv)?;
        }
    }
    Ok(out)
}

impl SuperMatrix {
    pub fn from_blocks(
        a: Vec<Vec<GrassmannElement>>,
        b: Vec<Vec<GrassmannElement>>,
        c: Vec<Vec<GrassmannElement>>,
        d: Vec<Vec<GrassmannElement>>,
    ) -> Result<Self> {
        let p = a.len();
        let q = d.len();
        let shape = |blk: &Vec<Vec<GrassmannElement>>, r: usize, cc: usize| {
            blk.len() == r && blk.iter().all(|row| row.len() == cc)
        };
        if !(shape(&a, p, p) && shape(&b, p, q) && shape(&c, q, p) && shape(&d, q, q)) {
            return Err(Error::Shape(format!("blocks do not form a {p}|{q} supermatrix")));
        }
        let mut m = Vec::with_capacity(p + q);
        for i in 0..p {
            let mut row = a[i].clone();
            row.extend(b[i].iter().cloned());
            m.push(row);
        }
        for i in 0..q {
            let mut row = c[i].clone();
            row.extend(d[i].iter().cloned());
            m.push(row);
        }
        SuperMatrix::from_full(p, q, m)
    }

    pub fn from_full(p: usize, q: usize, m: Vec<Vec<GrassmannElement>>) -> Result<Self> {
        if m.len() != p + q || m.iter().any(|r| r.len() != p + q) {
            return Err(Error::Shape("supermatrix must be square".into()));
        }
        for (i, row) in m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let want_even = (i < p) == (j < p);
                let ok = if want_even { e.is_even() } else { e.is_zero() || e.parity() == Some(Parity::Odd) };
                if !ok {
                    return Err(Error::Parity(format!(
                        "entry ({i},{j}) = {e} must be {}",
                        if want_even { "even" } else { "odd" }
                    )));
                }
            }
        }
        Ok(SuperMatrix { p, q, m })
    }

    pub fn identity(gens: &Generators, p: usize, q: usize) -> Self {
        let n = p + q;
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { GrassmannElement::one(gens) } else { GrassmannElement::zero(gens) })
                    .collect()
            })
            .collect();
        SuperMatrix { p, q, m }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    fn gens(&self) -> Generators {
        self.m[0][0].gens().clone()
    }

    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Vec<Vec<GrassmannElement>> {
        rows.map(|i| self.m[i][cols.clone()].to_vec()).collect()
    }

    pub fn a(&self) -> Vec<Vec<GrassmannElement>> {
        self.block(0..self.p, 0..self.p)
    }
    pub fn b(&self) -> Vec<Vec<GrassmannElement>> {
        self.block(0..self.p, self.p..self.p + self.q)
    }
    pub fn c(&self) -> Vec<Vec<GrassmannElement>> {
        self.block(self.p..self.p + self.q, 0..self.p)
    }
    pub fn d(&self) -> Vec<Vec<GrassmannElement>> {
        self.block(self.p..self.p + self.q, self.p..self.p + self.q)
    }

    pub fn mul(&self, o: &SuperMatrix) -> Result<SuperMatrix> {
        if self.dims() != o.dims() {
            return Err(Error::Shape("supermatrix dimensions differ".into()));
        }
        let m = mat_mul(&self.m, &o.m, &self.gens())?;
        SuperMatrix::from_full(self.p, self.q, m)
    }

    /// Ber(M) = det(A - B D^-1 C) / det(D).
    pub fn berezinian(&self) -> Result<GrassmannElement> {
        let gens = self.gens();
        let d = self.d();
        let det_d = det_even(&d, &gens)?;
        if det_d.body().is_zero() {
            return Err(Error::SingularBody("D block is not invertible".into()));
        }
        let dinv = inverse_even(&d, &gens)?;
        let bdc = mat_mul(&mat_mul(&self.b(), &dinv, &gens)?, &self.c(), &gens)?;
        let a = self.a();
        let schur: Vec<Vec<GrassmannElement>> = a
            .iter()
            .zip(&bdc)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.sub(y)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        det_even(&schur, &gens)?.mul(&det_d.inv()?)
    }
}

pub fn berezinian(m: &SuperMatrix) -> Result<GrassmannElement> {
    m.berezinian()
}

/// Super vector field a ∂/∂z + b ∂/∂θ on the chart (z | θ), where θ is the
/// odd generator at `theta` in the generator list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorFieldSC {
    pub dz: GrassmannElement,
    pub dtheta: GrassmannElement,
    pub theta: usize,
}

impl VectorFieldSC {
    pub fn new(dz: GrassmannElement, dtheta: GrassmannElement, theta: usize) -> Result<Self> {
        if *dz.gens() != *dtheta.gens() {
            return Err(Error::GeneratorMismatch((**dz.gens()).clone(), (**dtheta.gens()).clone()));
        }
        Ok(VectorFieldSC { dz, dtheta, theta })
    }

    /// ∂/∂z
    pub fn d_z(gens: &Generators) -> Self {
        VectorFieldSC { dz: GrassmannElement::one(gens), dtheta: GrassmannElement::zero(gens), theta: 0 }
    }

    /// ∂/∂θ
    pub fn d_theta(gens: &Generators) -> Self {
        VectorFieldSC { dz: GrassmannElement::zero(gens), dtheta: GrassmannElement::one(gens), theta: 0 }
    }

    /// D = ∂/∂θ + θ ∂/∂z
    pub fn superconformal_d(gens: &Generators) -> Self {
        VectorFieldSC { dz: GrassmannElement::generator(gens, 0), dtheta: GrassmannElement::one(gens), theta: 0 }
    }

    pub fn gens(&self) -> &Generators {
        self.dz.gens()
    }

    pub fn is_zero(&self) -> bool {
        self.dz.is_zero() && self.dtheta.is_zero()
    }

    /// Parity of the action on even functions.
    pub fn parity(&self) -> Result<Parity> {
        let from_z = if self.dz.is_zero() { None } else { self.dz.parity() };
        let from_t = if self.dtheta.is_zero() { None } else { self.dtheta.parity().map(Parity::flip) };
        let mixed = || Error::Parity("vector field is not homogeneous".into());
        match (from_z, from_t) {
            (Some(a), Some(b)) if a == b => Ok(a),
            (Some(a), None) if self.dtheta.is_zero() => Ok(a),
            (None, Some(b)) if self.dz.is_zero() => Ok(b),
            (None, None) if self.is_zero() => Ok(Parity::Even),
            _ => Err(mixed()),
        }
    }

    pub fn apply(&self, f: &GrassmannElement) -> Result<GrassmannElement> {
        self.dz.mul(&f.d_z())?.add(&self.dtheta.mul(&f.d_odd(self.theta))?)
    }

    pub fn scale_q(&self, s: &Q) -> Self {
        VectorFieldSC { dz: self.dz.scale_q(s), dtheta: self.dtheta.scale_q(s), theta: self.theta }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        VectorFieldSC::new(self.dz.sub(&o.dz)?, self.dtheta.sub(&o.dtheta)?, self.theta)
    }

    /// Graded commutator [X, Y] = XY - (-1)^{|X||Y|} YX.
    pub fn bracket(&self, o: &Self) -> Result<Self> {
        if self.theta != o.theta || *self.gens() != *o.gens() {
            return Err(Error::GeneratorMismatch((**self.gens()).clone(), (**o.gens()).clone()));
        }
        let px = self.parity()?;
        let py = o.parity()?;
        let both_odd = px == Parity::Odd && py == Parity::Odd;
        let comb = |xy: GrassmannElement, yx: GrassmannElement| -> Result<GrassmannElement> {
            if both_odd {
                xy.add(&yx)
            } else {
                xy.sub(&yx)
            }
        };
        let dz = comb(self.apply(&o.dz)?, o.apply(&self.dz)?)?;
        let dtheta = comb(self.apply(&o.dtheta)?, o.apply(&self.dtheta)?)?;
        VectorFieldSC::new(dz, dtheta, self.theta)
    }
}

impl fmt::Display for VectorFieldSC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})∂z + ({})∂θ", self.dz, self.dtheta)
    }
}

pub fn bracket(x: &VectorFieldSC, y: &VectorFieldSC) -> Result<VectorFieldSC> {
    x.bracket(y)
}

/// Result of squaring an odd distribution generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SusySquare {
    /// ½[D, D]
    pub square: VectorFieldSC,
    /// body(coefficient of ∂z in ½[D,D]) * body(coefficient of ∂θ in D);
    /// D and ½[D,D] span the tangent space exactly where this is nonzero.
    pub degeneracy: RatFunc,
}

impl SusySquare {
    /// Spans somewhere (generically).
    pub fn is_susy_generic(&self) -> bool {
        !self.degeneracy.is_zero()
    }

    /// Spans at every finite z.
    pub fn is_susy_everywhere(&self) -> bool {
        let d = &self.degeneracy;
        !d.is_zero() && d.num().degree() == 0
    }
}

pub fn susy_generator_square(d: &VectorFieldSC) -> Result<SusySquare> {
    if d.parity()? != Parity::Odd {
        return Err(Error::Parity("distribution generator must be odd".into()));
    }
    let square = d.bracket(d)?.scale_q(&qf(1, 2));
    let degeneracy = &square.dz.body() * &d.dtheta.body();
    Ok(SusySquare { square, degeneracy })
}

/// Outcome of the superconformal test D z' = θ' D θ'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperconformalCheck {
    pub holds: bool,
    /// D z' - θ' D θ'
    pub residual: GrassmannElement,
}

/// Checks D z' = θ' · D θ' with D = ∂/∂θ + θ ∂/∂z, θ the generator at index 0.
pub fn check_superconformal(zp: &GrassmannElement, tp: &GrassmannElement) -> Result<SuperconformalCheck> {
    if !zp.is_even() {
        return Err(Error::Parity(format!("z' = {zp} is not even")));
    }
    if !tp.is_odd() {
        return Err(Error::Parity(format!("θ' = {tp} is not odd")));
    }
    if *zp.gens() != *tp.gens() {
        return Err(Error::GeneratorMismatch((**zp.gens()).clone(), (**tp.gens()).clone()));
    }
    if zp.d_z().body().is_zero() && tp.d_odd(0).body().is_zero() {
        return Err(Error::SingularBody("coordinate change is degenerate to first order".into()));
    }
    let d = VectorFieldSC::superconformal_d(zp.gens());
    let residual = d.apply(zp)?.sub(&tp.mul(&d.apply(tp)?)?)?;
    Ok(SuperconformalCheck { holds: residual.is_zero(), residual })
}

/// Super-Jacobian of (z, θ) -> (z', θ'): A = ∂z'/∂z, B = ∂θ'/∂z,
/// C = ∂z'/∂θ, D = ∂θ'/∂θ.
pub fn super_jacobian(zp: &GrassmannElement, tp: &GrassmannElement) -> Result<SuperMatrix> {
    SuperMatrix::from_blocks(
        vec![vec![zp.d_z()]],
        vec![vec![tp.d_z()]],
        vec![vec![zp.d_odd(0)]],
        vec![vec![tp.d_odd(0)]],
    )
}

/// Composition of coordinate changes: returns (z'', θ'') as functions of (z, θ)
/// where the outer change is applied after the inner one.
pub fn compose_changes(
    outer: (&GrassmannElement, &GrassmannElement),
    inner: (&GrassmannElement, &GrassmannElement),
) -> Result<(GrassmannElement, GrassmannElement)> {
    let z2 = outer.0.substitute(inner.0, 0, inner.1)?;
    let t2 = outer.1.substitute(inner.0, 0, inner.1)?;
    Ok((z2, t2))
}

/// Polynomial in z as an even Grassmann element.
pub fn poly_in_z(gens: &Generators, p: Poly) -> GrassmannElement {
    GrassmannElement::scalar(gens, RatFunc::from_poly(p))
}
