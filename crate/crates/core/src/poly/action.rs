//! The regular representation `(λ(x)φ)(y) = φ((−x) ∗ y)` and its derivative.

use num_traits::Zero;

use crate::bch::{bch_derivative_coeffs, left_translation, Letter};
use crate::error::Result;
use crate::lie::{LieAlgebra, LieElement};
use crate::poly::{PolyFun, PolyMap};

/// `λ(x)φ = φ ∘ L_x`.
pub fn translate_poly(g: &LieAlgebra, x: &LieElement, phi: &PolyFun) -> Result<PolyFun> {
    phi.compose(&left_translation(g, x)?)
}

/// `y ↦ d/dt ((−t x) ∗ y)|_{t=0}` for each basis vector `x = e_i`.
///
/// These are the BCH words containing exactly one `X`, evaluated with
/// `X = −e_i` and symbolic `Y = y`.
pub(crate) fn compute_velocity_fields(g: &LieAlgebra) -> Vec<PolyMap> {
    let n = g.dim();
    let y = PolyMap::identity(n).into_components();
    (0..n)
        .map(|i| {
            let minus_e = PolyMap::constant(n, (-&g.basis_element(i)).coords()).into_components();
            let v = g
                .bch_series()
                .evaluate_filtered(g, &minus_e, &y, |t| t.count(Letter::X) == 1);
            PolyMap::new(n, v)
        })
        .collect()
}

/// The vector field `y ↦ d/dt L_{tx}(y)|_{t=0}`, linear in `x`.
pub fn velocity_field(g: &LieAlgebra, x: &LieElement) -> Result<PolyMap> {
    g.bracket(x, x)?;
    let n = g.dim();
    let fields = g.velocity_fields();
    let mut comps = vec![PolyFun::zero(n); n];
    for (xi, field) in x.coords().iter().zip(fields) {
        if xi.is_zero() {
            continue;
        }
        for (c, f) in comps.iter_mut().zip(field.components()) {
            c.add_scaled(xi, f);
        }
    }
    Ok(PolyMap::new(n, comps))
}

/// `λ̇(x)φ`, the `t`-linear coefficient of `φ(L_{tx}(y))`.
pub fn lie_derivative(g: &LieAlgebra, x: &LieElement, phi: &PolyFun) -> Result<PolyFun> {
    phi.derivative_along(&velocity_field(g, x)?)
}

/// `λ̇(x)φ` through the closed formula `Σ_j c_j φ'_y((ad y)^j x)`.
pub fn lie_derivative_by_coefficients(
    g: &LieAlgebra,
    x: &LieElement,
    phi: &PolyFun,
) -> Result<PolyFun> {
    g.bracket(x, x)?;
    let n = g.dim();
    let c = bch_derivative_coeffs(g.nilpotency());
    let y = PolyMap::identity(n).into_components();
    let mut word = PolyMap::constant(n, x.coords()).into_components();
    let mut field = vec![PolyFun::zero(n); n];
    for cj in &c {
        for (f, w) in field.iter_mut().zip(&word) {
            f.add_scaled(cj, w);
        }
        word = g.bracket_with(&y, &word);
    }
    phi.derivative_along(&PolyMap::new(n, field))
}
