//! The faithful representation on `F_G = span λ(G) g*`.
//!
//! `F_G` is built as the smallest subspace of polynomial functions that
//! contains `g*` and is stable under `λ̇(e_i)` for every basis vector `e_i`,
//! with the constants adjoined. The closure runs breadth-first: each wave
//! applies every `λ̇(e_i)` to the vectors added by the previous wave, in
//! basis order, and echelonizes as it goes.
//!
//! Matrices act on coordinate columns: column `k` of `λ̇_G(x)` holds the
//! coordinates of `λ̇(x) b_k` in the echelon basis `b_1, …, b_d`.

mod families;
mod span;

pub use families::{
    corr3_check, corr3_family, corr4_check, vphi_space, AdLetter, Corr3Family, Corr3Report,
    Corr4Report, MultiIndexPair,
};
pub use span::PolySpan;

use serde_json::json;

use crate::bch::bch_product;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieElement};
use crate::linalg::{exp_nilpotent, Matrix};
use crate::poly::{lie_derivative, PolyFun};
use crate::rational::{format_rational, Rational};
use crate::report::CheckResult;
use crate::sample::Sampler;

/// A finite-dimensional space of polynomial functions held in reduced
/// echelon form over the graded-lex monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct RepSpace {
    span: PolySpan,
}

impl RepSpace {
    pub fn from_span(span: PolySpan) -> Self {
        RepSpace { span }
    }

    /// Smallest `λ̇(g)`-stable space containing `generators`.
    pub fn closure(g: &LieAlgebra, generators: &[PolyFun]) -> Result<Self> {
        let n = g.dim();
        let mut span = PolySpan::new(n);
        let mut frontier: Vec<PolyFun> = generators
            .iter()
            .filter_map(|p| span.insert(p.clone()))
            .collect();
        let basis: Vec<LieElement> = (0..n).map(|i| g.basis_element(i)).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for e in &basis {
                    if let Some(added) = span.insert(lie_derivative(g, e, p)?) {
                        next.push(added);
                    }
                }
            }
            frontier = next;
        }
        Ok(RepSpace { span })
    }

    /// Coordinate functionals `y_1, …, y_n`.
    pub fn dual_basis(g: &LieAlgebra) -> Vec<PolyFun> {
        (0..g.dim()).map(|i| PolyFun::var(g.dim(), i)).collect()
    }

    /// `F_G`: closure of `g*`, with the constant `1` adjoined.
    pub fn build_fg(g: &LieAlgebra) -> Result<Self> {
        let mut space = RepSpace::closure(g, &RepSpace::dual_basis(g))?;
        space.span.insert(PolyFun::one(g.dim()));
        Ok(space)
    }

    /// Negative control: the closure of the functionals vanishing on the
    /// center, plus constants. Central directions act trivially on it.
    pub fn without_central_duals(g: &LieAlgebra) -> Result<Self> {
        let n = g.dim();
        let center = g.center();
        let center_matrix = Matrix::from_rows(center.basis().to_vec());
        let annihilator: Vec<PolyFun> = if center.dim() == 0 {
            RepSpace::dual_basis(g)
        } else {
            crate::linalg::kernel_basis(&center_matrix)
                .iter()
                .map(|v| PolyFun::linear(v))
                .collect()
        };
        let mut space = RepSpace::closure(g, &annihilator)?;
        space.span.insert(PolyFun::one(n));
        Ok(space)
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn nvars(&self) -> usize {
        self.span.nvars()
    }

    pub fn basis(&self) -> &[PolyFun] {
        self.span.basis()
    }

    pub fn span(&self) -> &PolySpan {
        &self.span
    }

    /// Largest degree among basis elements.
    pub fn degree_cap(&self) -> u32 {
        self.basis()
            .iter()
            .filter_map(PolyFun::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn contains(&self, p: &PolyFun) -> bool {
        self.span.contains(p)
    }

    pub fn coordinates(&self, p: &PolyFun) -> Option<Vec<Rational>> {
        self.span.coordinates(p)
    }

    /// Whether `λ̇(e_i)` maps every basis element back into the space.
    pub fn is_invariant(&self, g: &LieAlgebra) -> Result<bool> {
        for i in 0..g.dim() {
            let e = g.basis_element(i);
            for b in self.basis() {
                if !self.contains(&lie_derivative(g, &e, b)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Matrix of `λ̇(x)` restricted to this space.
    pub fn operator_matrix(&self, g: &LieAlgebra, x: &LieElement) -> Result<Matrix> {
        let cols = self
            .basis()
            .iter()
            .map(|b| {
                let image = lie_derivative(g, x, b)?;
                self.coordinates(&image)
                    .ok_or_else(|| Error::NotInvariant(format!("λ̇ image {image} leaves the space")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), &cols))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faithfulness {
    pub is_faithful: bool,
    pub kernel_dim: usize,
    pub rank: usize,
}

/// `λ̇_G` and `λ_G` as exact matrices on a `λ̇`-stable space.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra_name: String,
    dim_g: usize,
    nilpotency: usize,
    bound: usize,
    space: RepSpace,
    generators: Vec<Matrix>,
}

impl Representation {
    /// The faithful representation on `F_G`.
    pub fn build(g: &LieAlgebra) -> Result<Self> {
        Representation::on_space(g, RepSpace::build_fg(g)?)
    }

    pub fn on_space(g: &LieAlgebra, space: RepSpace) -> Result<Self> {
        let generators = (0..g.dim())
            .map(|i| space.operator_matrix(g, &g.basis_element(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            algebra_name: g.name().to_string(),
            dim_g: g.dim(),
            nilpotency: g.nilpotency(),
            bound: g.representation_bound(),
            space,
            generators,
        })
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra_name
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// `2^(N−1)·N + 1`.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &RepSpace {
        &self.space
    }

    /// `λ̇_G(e_i)` for each basis vector.
    pub fn generator_matrices(&self) -> &[Matrix] {
        &self.generators
    }

    fn check_dim(&self, x: &LieElement) -> Result<()> {
        if x.dim() == self.dim_g {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim_g,
                found: x.dim(),
            })
        }
    }

    /// `λ̇_G(x) = Σ x_i λ̇_G(e_i)`.
    pub fn lambda_dot_matrix(&self, x: &LieElement) -> Result<Matrix> {
        self.check_dim(x)?;
        let d = self.dim();
        Ok(x.coords()
            .iter()
            .zip(&self.generators)
            .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
            .fold(Matrix::zeros(d, d), |acc, (c, m)| &acc + &m.scale(c)))
    }

    /// `λ_G(x) = exp(λ̇_G(x))`, a finite sum.
    pub fn lambda_matrix(&self, x: &LieElement) -> Result<Matrix> {
        exp_nilpotent(&self.lambda_dot_matrix(x)?, self.bound)
    }

    /// Smallest `k` with `λ̇_G(x)^k = 0`.
    pub fn nilpotence_index(&self, x: &LieElement) -> Result<Option<usize>> {
        Ok(self.lambda_dot_matrix(x)?.nilpotence_index())
    }

    /// Smallest `k` with `(λ_G(x) − 1)^k = 0`.
    pub fn unipotence_index(&self, x: &LieElement) -> Result<Option<usize>> {
        let u = &self.lambda_matrix(x)? - &Matrix::identity(self.dim());
        Ok(u.nilpotence_index())
    }

    /// Rank of `x ↦ λ̇_G(x)` as a `(d²) × n` matrix.
    pub fn faithfulness_check(&self) -> Faithfulness {
        let d = self.dim();
        let cols: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .map(|m| m.entries().to_vec())
            .collect();
        let rank = Matrix::from_columns(d * d, &cols).rank();
        Faithfulness {
            is_faithful: rank == self.dim_g,
            kernel_dim: self.dim_g - rank,
            rank,
        }
    }
}

fn coords(x: &LieElement) -> Vec<String> {
    x.coords().iter().map(format_rational).collect()
}

/// Samples pairs and checks `λ̇_G([x,y]) = [λ̇_G(x), λ̇_G(y)]` and
/// `λ_G(x ∗ y) = λ_G(x) λ_G(y)`.
pub fn homomorphism_check(
    g: &LieAlgebra,
    rep: &Representation,
    samples: usize,
    seed: u64,
) -> Result<Vec<CheckResult>> {
    let mut rng = Sampler::new(seed);
    let mut lie = CheckResult::new("lie_homomorphism");
    let mut group = CheckResult::new("group_homomorphism");
    for _ in 0..samples {
        let x = rng.element(g.dim());
        let y = rng.element(g.dim());
        let dx = rep.lambda_dot_matrix(&x)?;
        let dy = rep.lambda_dot_matrix(&y)?;
        let lhs = rep.lambda_dot_matrix(&g.bracket(&x, &y)?)?;
        lie.record(
            lhs == dx.commutator(&dy),
            || json!({"x": coords(&x), "y": coords(&y)}),
        );
        let gx = rep.lambda_matrix(&x)?;
        let gy = rep.lambda_matrix(&y)?;
        let gxy = rep.lambda_matrix(&bch_product(g, &x, &y)?)?;
        group.record(
            gxy == &gx * &gy,
            || json!({"x": coords(&x), "y": coords(&y)}),
        );
    }
    Ok(vec![lie, group])
}
