use std::collections::BTreeMap;
use std::fmt;

use super::CurvePoint;

/// Finite formal sum of curve points; zero multiplicities are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Divisor {
    m: BTreeMap<CurvePoint, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn point(p: CurvePoint, n: i64) -> Self {
        let mut d = Divisor::zero();
        d.add_point(p, n);
        d
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (CurvePoint, i64)>) -> Self {
        let mut d = Divisor::zero();
        for (p, n) in pairs {
            d.add_point(p, n);
        }
        d
    }

    pub fn add_point(&mut self, p: CurvePoint, n: i64) {
        if n == 0 {
            return;
        }
        let e = self.m.entry(p.clone()).or_insert(0);
        *e += n;
        if *e == 0 {
            self.m.remove(&p);
        }
    }

    pub fn mult(&self, p: &CurvePoint) -> i64 {
        self.m.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.m.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.m.values().all(|&n| n > 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CurvePoint, i64)> {
        self.m.iter().map(|(p, n)| (p, *n))
    }

    pub fn support(&self) -> impl Iterator<Item = &CurvePoint> {
        self.m.keys()
    }

    pub fn add(&self, o: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, n) in &o.m {
            d.add_point(p.clone(), *n);
        }
        d
    }

    pub fn sub(&self, o: &Divisor) -> Divisor {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Divisor {
        Divisor::from_pairs(self.m.iter().map(|(p, n)| (p.clone(), n * k)))
    }

    pub fn neg(&self) -> Divisor {
        self.scale(-1)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, n) in &self.m {
            let mag = n.abs();
            let body = if mag == 1 { format!("{p}") } else { format!("{mag}·{p}") };
            if first {
                write!(f, "{}{body}", if *n < 0 { "-" } else { "" })?;
                first = false;
            } else {
                write!(f, " {} {body}", if *n < 0 { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Divisor({self})")
    }
}
