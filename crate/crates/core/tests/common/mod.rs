#![allow(dead_code)]

use plurican::arith::poly::Poly;
use plurican::arith::ratfunc::RatFunc;
use plurican::arith::Q;
use plurican::graded::{Generators, GrassmannElement, Parity, SuperMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_q(r: &mut ChaCha8Rng) -> Q {
    Q::new(r.gen_range(-6i64..=6).into(), r.gen_range(1i64..=3).into())
}

/// Polynomial in z of degree ≤ 1 with small coefficients, possibly zero.
pub fn small_coeff(r: &mut ChaCha8Rng) -> RatFunc {
    RatFunc::from_poly(Poly::new(vec![small_q(r), small_q(r)]))
}

fn masks(n: usize, parity: Parity) -> Vec<u64> {
    (0u64..(1 << n)).filter(|m| Parity::of_count(m.count_ones()) == parity).collect()
}

/// Sparse random homogeneous element; coefficients depend on z when `in_z`.
pub fn homogeneous(r: &mut ChaCha8Rng, gens: &Generators, parity: Parity, in_z: bool) -> GrassmannElement {
    let mut e = GrassmannElement::zero(gens);
    for m in masks(gens.len(), parity) {
        if r.gen_bool(0.4) {
            let idx: Vec<usize> = (0..gens.len()).filter(|i| m & (1 << i) != 0).collect();
            let c = if in_z { small_coeff(r) } else { RatFunc::constant(small_q(r)) };
            e = e.add(&GrassmannElement::monomial(gens, c, &idx)).unwrap();
        }
    }
    e
}

/// Even element with nonzero body.
pub fn invertible_even(r: &mut ChaCha8Rng, gens: &Generators, in_z: bool) -> GrassmannElement {
    loop {
        let e = homogeneous(r, gens, Parity::Even, in_z).add(&GrassmannElement::constant(gens, small_q(r))).unwrap();
        if !e.body().is_zero() {
            return e;
        }
    }
}

/// p|q supermatrix whose even blocks have triangular invertible bodies.
pub fn supermatrix(r: &mut ChaCha8Rng, gens: &Generators, p: usize, q: usize, in_z: bool) -> SuperMatrix {
    let n = p + q;
    let mut m = vec![vec![GrassmannElement::zero(gens); n]; n];
    for i in 0..n {
        for j in 0..n {
            let even = (i < p) == (j < p);
            m[i][j] = if !even {
                homogeneous(r, gens, Parity::Odd, in_z)
            } else if i == j {
                invertible_even(r, gens, in_z)
            } else if i < j {
                homogeneous(r, gens, Parity::Even, in_z)
            } else {
                // below the diagonal only nilpotent terms, keeping the body triangular
                let e = homogeneous(r, gens, Parity::Even, in_z);
                e.sub(&GrassmannElement::scalar(gens, e.body())).unwrap()
            };
        }
    }
    SuperMatrix::from_full(p, q, m).unwrap()
}
