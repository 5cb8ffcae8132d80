#![allow(dead_code)]

use nilrep::corpus::{self, CorpusSpec};
use nilrep::rational::{int, Rational};
use nilrep::{translate_poly, LieAlgebra, LieElement, PolyFun};
use num_traits::{One, Zero};

pub fn corpus() -> Vec<(CorpusSpec, LieAlgebra)> {
    corpus::standard_corpus()
        .into_iter()
        .map(|s| (s, corpus::make(&s).unwrap()))
        .collect()
}

pub fn algebra(spec: CorpusSpec) -> LieAlgebra {
    corpus::make(&spec).unwrap()
}

/// `ℓ_k'(0)` for the Lagrange basis on the nodes `0, 1, …, d`.
pub fn lagrange_weights_at_zero(d: usize) -> Vec<Rational> {
    let node = |j: usize| int(j as i64);
    (0..=d)
        .map(|k| {
            let mut total = Rational::zero();
            for i in (0..=d).filter(|&i| i != k) {
                let mut term = Rational::one() / (node(k) - node(i));
                for j in (0..=d).filter(|&j| j != k && j != i) {
                    term *= (Rational::zero() - node(j)) / (node(k) - node(j));
                }
                total += term;
            }
            total
        })
        .collect()
}

/// `d/dt λ(tx)φ |_{t=0}`, by exact interpolation of `t ↦ φ((−tx) ∗ y)` at
/// `t = 0, …, deg φ · N`, which is a polynomial in `t` of at most that degree.
pub fn interpolated_lie_derivative(g: &LieAlgebra, x: &LieElement, phi: &PolyFun) -> PolyFun {
    let d = phi.degree().unwrap_or(0) as usize * g.nilpotency();
    let mut out = PolyFun::zero(g.dim());
    for (k, w) in lagrange_weights_at_zero(d).iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let moved = translate_poly(g, &x.scale(&int(k as i64)), phi).unwrap();
        out.add_scaled(w, &moved);
    }
    out
}
