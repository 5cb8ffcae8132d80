//! Finer invariant spaces: the `p_αβ` family of a linear functional, the
//! uniform annihilation bound on `P_m`, and the cyclic spaces `V_Φ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieElement};
use crate::poly::{lie_derivative, PolyFun, PolyMap};
use crate::rep::{PolySpan, RepSpace};

/// One factor in `(ad x0)^α0 (ad y)^β0 (ad x0)^α1 (ad y)^β1 ⋯ y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdLetter {
    /// `ad x0`
    Fixed,
    /// `ad y`
    Variable,
}

/// Finitely supported exponent sequences `(α, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultiIndexPair {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl MultiIndexPair {
    /// Splits an operator word into alternating blocks `α0, β0, α1, β1, …`.
    pub fn from_word(word: &[AdLetter]) -> Self {
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        let mut rest = word;
        while !rest.is_empty() {
            let a = rest.iter().take_while(|&&l| l == AdLetter::Fixed).count();
            rest = &rest[a..];
            let b = rest
                .iter()
                .take_while(|&&l| l == AdLetter::Variable)
                .count();
            rest = &rest[b..];
            alpha.push(a);
            beta.push(b);
        }
        MultiIndexPair { alpha, beta }
    }

    pub fn word(&self) -> Vec<AdLetter> {
        let mut w = Vec::new();
        for (a, b) in self.alpha.iter().zip(&self.beta) {
            w.extend(std::iter::repeat_n(AdLetter::Fixed, *a));
            w.extend(std::iter::repeat_n(AdLetter::Variable, *b));
        }
        w
    }

    pub fn abs_alpha(&self) -> usize {
        self.alpha.iter().sum()
    }

    pub fn abs_beta(&self) -> usize {
        self.beta.iter().sum()
    }

    /// Whether `other` lies in the index set `I_αβ` of `self`: larger total
    /// order, or equal total order and strictly larger `|γ|`.
    pub fn precedes(&self, other: &MultiIndexPair) -> bool {
        let (s, o) = (
            self.abs_alpha() + self.abs_beta(),
            other.abs_alpha() + other.abs_beta(),
        );
        o > s || (o == s && other.abs_alpha() > self.abs_alpha())
    }
}

/// Words of length `≤ max_len` that are empty or end in `ad x0`; every other
/// word gives `p_αβ = 0` because `(ad y) y = 0`.
fn admissible_words(max_len: usize) -> Vec<Vec<AdLetter>> {
    let mut out = vec![Vec::new()];
    let mut level: Vec<Vec<AdLetter>> = vec![Vec::new()];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|w| {
                [AdLetter::Fixed, AdLetter::Variable].map(|l| {
                    let mut v = vec![l];
                    v.extend_from_slice(w);
                    v
                })
            })
            .collect();
        out.extend(
            level
                .iter()
                .filter(|w| w.last() == Some(&AdLetter::Fixed))
                .cloned(),
        );
    }
    out
}

fn linear_coefficients(phi: &PolyFun) -> Result<Vec<crate::rational::Rational>> {
    let n = phi.nvars();
    let linear = phi.is_zero() || (phi.is_homogeneous() && phi.degree() == Some(1));
    if !linear {
        return Err(Error::NotLinearFunctional {
            degree: phi.degree(),
            homogeneous: phi.is_homogeneous(),
        });
    }
    Ok((0..n)
        .map(|i| phi.coeff(&crate::poly::Monomial::var(n, i)))
        .collect())
}

/// `y ↦ φ(w · y)` for an operator word `w`.
fn word_polynomial(
    g: &LieAlgebra,
    phi: &[crate::rational::Rational],
    x0: &LieElement,
    word: &[AdLetter],
) -> PolyFun {
    let n = g.dim();
    let y = PolyMap::identity(n).into_components();
    let fixed = PolyMap::constant(n, x0.coords()).into_components();
    let mut v = y.clone();
    for letter in word.iter().rev() {
        let head = match letter {
            AdLetter::Fixed => &fixed,
            AdLetter::Variable => &y,
        };
        v = g.bracket_with(head, &v);
    }
    let mut out = PolyFun::zero(n);
    for (c, comp) in phi.iter().zip(&v) {
        out.add_scaled(c, comp);
    }
    out
}

/// The polynomials `p_αβ` for a linear functional `φ` and a fixed `x0`.
#[derive(Clone, Debug)]
pub struct Corr3Family {
    pub phi: PolyFun,
    pub x0: LieElement,
    pub members: Vec<(MultiIndexPair, PolyFun)>,
    /// `span{p_αβ} + span{1}`
    pub space: RepSpace,
    /// `2^(N−1) + 1`
    pub dim_bound: usize,
}

/// Enumerates every `(α, β)` with `|α| + |β| ≤ N − 1` whose word ends in
/// `ad x0` (plus `α = β = 0`), builds `p_αβ`, and spans them with `1`.
pub fn corr3_family(g: &LieAlgebra, phi: &PolyFun, x0: &LieElement) -> Result<Corr3Family> {
    g.bracket(x0, x0)?;
    if phi.nvars() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: phi.nvars(),
        });
    }
    let coeffs = linear_coefficients(phi)?;
    let n_deg = g.nilpotency();
    let members: Vec<(MultiIndexPair, PolyFun)> = admissible_words(n_deg - 1)
        .into_iter()
        .map(|w| {
            (
                MultiIndexPair::from_word(&w),
                word_polynomial(g, &coeffs, x0, &w),
            )
        })
        .collect();
    let mut span = PolySpan::new(g.dim());
    for (_, p) in &members {
        span.insert(p.clone());
    }
    span.insert(PolyFun::one(g.dim()));
    Ok(Corr3Family {
        phi: phi.clone(),
        x0: x0.clone(),
        members,
        space: RepSpace::from_span(span),
        dim_bound: (1usize << (n_deg - 1)) + 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corr3Report {
    pub dim: usize,
    pub dim_bound: usize,
    pub nonzero_members: usize,
    pub invariant: bool,
    /// Smallest `k` with `λ̇(x0)^k = 0` on the family's span.
    pub annihilating_power: Option<usize>,
    pub power_bound: usize,
    /// `λ̇(x0) p_αβ ∈ span{p_γδ : (γ,δ) ∈ I_αβ} + span{1}` for every member.
    pub filtration: bool,
    pub passed: bool,
}

pub fn corr3_check(g: &LieAlgebra, family: &Corr3Family) -> Result<Corr3Report> {
    let x0 = &family.x0;
    let space = &family.space;
    let mut invariant = true;
    let mut power = 0usize;
    let power_bound = family.dim_bound;
    let mut annihilated = true;
    for b in space.basis() {
        if !space.contains(&lie_derivative(g, x0, b)?) {
            invariant = false;
        }
        let mut p = b.clone();
        let mut k = 0;
        while !p.is_zero() && k <= power_bound {
            p = lie_derivative(g, x0, &p)?;
            k += 1;
        }
        if !p.is_zero() {
            annihilated = false;
        }
        power = power.max(k);
    }
    let mut filtration = true;
    let one = PolyFun::one(g.dim());
    for (pair, p) in &family.members {
        if p.is_zero() {
            continue;
        }
        let later = family
            .members
            .iter()
            .filter(|(other, _)| pair.precedes(other))
            .map(|(_, q)| q.clone())
            .chain(std::iter::once(one.clone()));
        let target = PolySpan::spanned_by(g.dim(), later);
        if !target.contains(&lie_derivative(g, x0, p)?) {
            filtration = false;
        }
    }
    let annihilating_power = annihilated.then_some(power);
    let dim = space.dim();
    let passed =
        dim <= family.dim_bound && invariant && annihilated && power <= power_bound && filtration;
    Ok(Corr3Report {
        dim,
        dim_bound: family.dim_bound,
        nonzero_members: family.members.iter().filter(|(_, p)| !p.is_zero()).count(),
        invariant,
        annihilating_power,
        power_bound,
        filtration,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corr4Report {
    pub degree: u32,
    /// `2^(N−1)·m + 1`
    pub bound: usize,
    /// Smallest `k` with `λ̇(x0)^k φ = 0`, if reached within `bound` steps.
    pub annihilating_power: Option<usize>,
    pub passed: bool,
}

/// Applies `λ̇(x0)` up to `2^(N−1)·m + 1` times, `m = deg φ`.
pub fn corr4_check(g: &LieAlgebra, x0: &LieElement, phi: &PolyFun) -> Result<Corr4Report> {
    let m = phi.degree().unwrap_or(0);
    let bound = (1usize << (g.nilpotency() - 1)) * m as usize + 1;
    let mut p = phi.clone();
    let mut k = 0;
    while !p.is_zero() && k < bound {
        p = lie_derivative(g, x0, &p)?;
        k += 1;
    }
    let annihilating_power = p.is_zero().then_some(k);
    Ok(Corr4Report {
        degree: m,
        bound,
        annihilating_power,
        passed: annihilating_power.is_some(),
    })
}

/// `V_Φ`: the `λ̇(g)`-closure of `span Φ`, for `Φ ⊆ P_m`.
pub fn vphi_space(g: &LieAlgebra, phis: &[PolyFun], max_deg: u32) -> Result<RepSpace> {
    for p in phis {
        if let Some(d) = p.degree() {
            if d > max_deg {
                return Err(Error::DegreeExceeded {
                    degree: d,
                    cap: max_deg,
                });
            }
        }
    }
    RepSpace::closure(g, phis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, CorpusSpec};
    use crate::rational::int;

    fn algebra(spec: CorpusSpec) -> LieAlgebra {
        corpus::make(&spec).unwrap()
    }

    #[test]
    fn admissible_word_counts() {
        // 1 + 1 + 2 + 4 + … = 2^max_len
        for len in 0..6 {
            assert_eq!(admissible_words(len).len(), 1 << len);
        }
    }

    #[test]
    fn multi_index_round_trip() {
        use AdLetter::{Fixed as A, Variable as B};
        let w = vec![A, B, B, A, A];
        let pair = MultiIndexPair::from_word(&w);
        assert_eq!(pair.alpha, vec![1, 2]);
        assert_eq!(pair.beta, vec![2, 0]);
        assert_eq!(pair.word(), w);
        let w = vec![B, A];
        let pair = MultiIndexPair::from_word(&w);
        assert_eq!(
            (pair.alpha.clone(), pair.beta.clone()),
            (vec![0, 1], vec![1, 0])
        );
        assert_eq!((pair.abs_alpha(), pair.abs_beta()), (1, 1));
    }

    #[test]
    fn abelian_family() {
        let g = algebra(CorpusSpec::Abelian(3));
        let phi = PolyFun::linear(&[int(1), int(2), int(0)]);
        let fam = corr3_family(&g, &phi, &g.basis_element(0)).unwrap();
        assert_eq!(fam.members.len(), 1);
        assert_eq!(fam.space.dim(), 2);
        let r = corr3_check(&g, &fam).unwrap();
        assert!(r.passed);
        assert_eq!(r.annihilating_power, Some(2));
    }

    #[test]
    fn heisenberg_family() {
        let g = algebra(CorpusSpec::Heisenberg(3));
        let fam = corr3_family(&g, &PolyFun::var(3, 2), &g.basis_element(0)).unwrap();
        assert!(fam.space.contains(&PolyFun::var(3, 1)));
        assert!(fam.space.contains(&PolyFun::var(3, 2)));
        assert!(fam.space.dim() <= 3);
        let r = corr3_check(&g, &fam).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.annihilating_power.unwrap() <= 3);
    }

    #[test]
    fn filiform_family() {
        let g = algebra(CorpusSpec::Filiform(4));
        let fam = corr3_family(&g, &PolyFun::var(4, 3), &g.basis_element(0)).unwrap();
        let r = corr3_check(&g, &fam).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.power_bound, 5);
    }

    #[test]
    fn zero_base_point_family() {
        let g = algebra(CorpusSpec::Filiform(5));
        let fam = corr3_family(&g, &PolyFun::var(5, 4), &g.zero_element()).unwrap();
        assert!(fam.space.dim() <= fam.dim_bound);
        assert!(corr3_check(&g, &fam).unwrap().passed);
    }

    #[test]
    fn nonlinear_functional_rejected() {
        let g = algebra(CorpusSpec::Heisenberg(3));
        let x0 = g.basis_element(0);
        assert!(matches!(
            corr3_family(&g, &PolyFun::var(3, 0).pow(2), &x0),
            Err(Error::NotLinearFunctional { .. })
        ));
        assert!(corr3_family(&g, &(&PolyFun::var(3, 0) + &PolyFun::one(3)), &x0).is_err());
    }

    #[test]
    fn corr4_examples() {
        let g = algebra(CorpusSpec::Heisenberg(3));
        let r = corr4_check(&g, &g.basis_element(0), &PolyFun::constant(3, int(7))).unwrap();
        assert_eq!((r.bound, r.annihilating_power), (1, Some(1)));
        let r = corr4_check(&g, &g.basis_element(0), &PolyFun::var(3, 2).pow(2)).unwrap();
        assert_eq!(r.bound, 5);
        assert!(r.passed);

        let a = algebra(CorpusSpec::Abelian(2));
        let phi = &PolyFun::var(2, 0).pow(2) * &PolyFun::var(2, 1);
        let r = corr4_check(&a, &LieElement::from_ints(&[1, 1]), &phi).unwrap();
        assert_eq!(r.bound, 4);
        assert_eq!(r.annihilating_power, Some(4));
    }

    #[test]
    fn vphi_examples() {
        let g = algebra(CorpusSpec::Heisenberg(3));
        assert_eq!(vphi_space(&g, &[PolyFun::one(3)], 0).unwrap().dim(), 1);
        let mut v = vphi_space(&g, &RepSpace::dual_basis(&g), 1).unwrap();
        let fg = RepSpace::build_fg(&g).unwrap();
        let mut span = v.span().clone();
        span.insert(PolyFun::one(3));
        v = RepSpace::from_span(span);
        assert_eq!(v, fg);

        let sq = PolyFun::var(3, 2).pow(2);
        let v = vphi_space(&g, std::slice::from_ref(&sq), 2).unwrap();
        assert!(v.degree_cap() <= 4);
        assert!(vphi_space(&g, &[sq], 1).is_err());
    }
}
