//! Polynomial functions on a finite-dimensional algebra, in coordinates.
//!
//! A [`PolyFun`] is a sparse map from exponent vectors to rational
//! coefficients. Monomials are ordered graded-lexicographically: by total
//! degree first, then with `y1` ranking ahead of `y2` and so on. That order
//! drives printing, JSON output and the pivot choice of polynomial spans.

mod action;

pub(crate) use action::compute_velocity_fields;
pub use action::{lie_derivative, lie_derivative_by_coefficients, translate_poly, velocity_field};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::Coefficient;
use crate::rational::{format_rational, Rational};

/// Exponent vector of a monomial `y1^a1 ⋯ yn^an`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `≤ max_degree` in `nvars` variables, in
/// graded-lexicographic order. There are `C(max_degree + nvars, nvars)` of them.
pub fn monomial_basis(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, left: usize, remaining: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(remaining);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            fill(prefix, left - 1, remaining - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            continue;
        }
        fill(&mut Vec::new(), nvars, d, &mut out);
    }
    out
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyFun {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyFun {
    pub fn zero(nvars: usize) -> Self {
        PolyFun {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        PolyFun::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        PolyFun::constant(nvars, Rational::one())
    }

    /// The coordinate function `y_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        PolyFun::from_terms(nvars, [(Monomial::var(nvars, i), Rational::one())])
    }

    /// The linear functional `y ↦ Σ c_i y_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        PolyFun::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    /// Sums repeated monomials and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(
        nvars: usize,
        terms: I,
    ) -> Self {
        let mut p = PolyFun::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// Smallest monomial in graded-lex order together with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn scale(&self, c: &Rational) -> PolyFun {
        if c.is_zero() {
            return PolyFun::zero(self.nvars);
        }
        PolyFun {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &PolyFun) {
        assert_eq!(self.nvars, other.nvars, "variable count");
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn pow(&self, k: u32) -> PolyFun {
        let mut acc = PolyFun::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, y: &[Rational]) -> Result<Rational> {
        if y.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: y.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (e, yi) in m.0.iter().zip(y) {
                for _ in 0..*e {
                    v *= yi;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Partial derivative with respect to `y_i`.
    pub fn partial(&self, i: usize) -> PolyFun {
        let mut out = PolyFun::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[i] -= 1;
            out.add_term(d, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// `y ↦ φ'_y(z) = d/ds φ(y + s z)|_{s=0}` for a constant direction `z`.
    pub fn directional_derivative(&self, z: &[Rational]) -> Result<PolyFun> {
        if z.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: z.len(),
            });
        }
        let mut out = PolyFun::zero(self.nvars);
        for (i, zi) in z.iter().enumerate() {
            if !zi.is_zero() {
                out.add_scaled(zi, &self.partial(i));
            }
        }
        Ok(out)
    }

    /// `y ↦ φ'_y(z(y))` for a direction that itself depends polynomially on `y`.
    pub fn derivative_along(&self, field: &PolyMap) -> Result<PolyFun> {
        if field.len() != self.nvars || field.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: field.len(),
            });
        }
        let mut out = PolyFun::zero(self.nvars);
        for (i, zi) in field.components().iter().enumerate() {
            if zi.is_zero() {
                continue;
            }
            let d = self.partial(i);
            if !d.is_zero() {
                out = &out + &(&d * zi);
            }
        }
        Ok(out)
    }

    /// `φ ∘ f`, a polynomial in the variables of `f`.
    pub fn compose(&self, f: &PolyMap) -> Result<PolyFun> {
        if f.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: f.len(),
            });
        }
        let target = f.nvars();
        // powers[i][e] = f_i^e
        let mut powers: Vec<Vec<PolyFun>> = f
            .components()
            .iter()
            .map(|c| vec![PolyFun::one(target), c.clone()])
            .collect();
        let mut out = PolyFun::zero(target);
        for (m, c) in &self.terms {
            let mut term = PolyFun::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &powers[i][1];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Homogeneous parts indexed by degree; their sum is `self`.
    pub fn homogeneous_components(&self) -> Vec<PolyFun> {
        let Some(top) = self.degree() else {
            return Vec::new();
        };
        let mut parts = vec![PolyFun::zero(self.nvars); top as usize + 1];
        for (m, c) in &self.terms {
            parts[m.degree() as usize].add_term(m.clone(), c.clone());
        }
        parts
    }
}

impl Add for &PolyFun {
    type Output = PolyFun;
    fn add(self, rhs: &PolyFun) -> PolyFun {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &PolyFun {
    type Output = PolyFun;
    fn sub(self, rhs: &PolyFun) -> PolyFun {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &PolyFun {
    type Output = PolyFun;
    fn neg(self) -> PolyFun {
        self.scale(&-Rational::one())
    }
}

impl Mul for &PolyFun {
    type Output = PolyFun;
    fn mul(self, rhs: &PolyFun) -> PolyFun {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = PolyFun::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Coefficient for PolyFun {
    fn zero_like(&self) -> Self {
        PolyFun::zero(self.nvars)
    }
    fn is_null(&self) -> bool {
        self.terms.is_empty()
    }
    fn axpy(&mut self, c: &Rational, other: &Self) {
        self.add_scaled(c, other)
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl fmt::Display for PolyFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| match e {
                        1 => format!("y{}", i + 1),
                        _ => format!("y{}^{}", i + 1, e),
                    })
                    .collect();
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (vars.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{}", format_rational(&magnitude))?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{}*{}", format_rational(&magnitude), vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyFun({self})")
    }
}

/// An `n`-tuple of polynomials, i.e. a polynomial self-map of the algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap {
    nvars: usize,
    components: Vec<PolyFun>,
}

impl PolyMap {
    pub fn new(nvars: usize, components: Vec<PolyFun>) -> Self {
        assert!(
            components.iter().all(|c| c.nvars == nvars),
            "component variable count"
        );
        PolyMap { nvars, components }
    }

    pub fn identity(n: usize) -> Self {
        PolyMap::new(n, (0..n).map(|i| PolyFun::var(n, i)).collect())
    }

    pub fn constant(nvars: usize, v: &[Rational]) -> Self {
        PolyMap::new(
            nvars,
            v.iter()
                .map(|c| PolyFun::constant(nvars, c.clone()))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[PolyFun] {
        &self.components
    }

    pub fn into_components(self) -> Vec<PolyFun> {
        self.components
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.components.iter().filter_map(PolyFun::degree).max()
    }

    pub fn evaluate(&self, y: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.evaluate(y)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
    }

    #[test]
    fn monomial_basis_counts_match_binomials() {
        for n in 1..=5usize {
            for m in 0..=5u32 {
                assert_eq!(
                    monomial_basis(n, m).len() as u64,
                    binomial(m as u64 + n as u64, n as u64),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn monomial_basis_is_sorted_and_distinct() {
        let b = monomial_basis(3, 3);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(b[0], Monomial::one(3));
        assert_eq!(b[1], Monomial::var(3, 0));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            PolyFun::one(3).evaluate(&[int(4), int(5), int(6)]).unwrap(),
            int(1)
        );
        assert_eq!(
            PolyFun::var(3, 2)
                .evaluate(&[int(0), int(0), int(5)])
                .unwrap(),
            int(5)
        );
        let p = &PolyFun::var(3, 0) * &PolyFun::var(3, 1);
        assert_eq!(p.evaluate(&[int(2), int(3), int(0)]).unwrap(), int(6));
        assert_eq!(
            p.evaluate(&[int(1)]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 1
            })
        );
    }

    #[test]
    fn compose_examples() {
        let y = |i| PolyFun::var(3, i);
        let phi = &(&y(0) * &y(1)) + &y(2);
        assert_eq!(phi.compose(&PolyMap::identity(3)).unwrap(), phi);

        // (y1 - 1, y2, y3 - y2/2) is the left translation by e1 in the Heisenberg algebra
        let lx = PolyMap::new(
            3,
            vec![
                &y(0) - &PolyFun::one(3),
                y(1),
                &y(2) - &y(1).scale(&rat(1, 2)),
            ],
        );
        assert_eq!(y(2).compose(&lx).unwrap(), &y(2) - &y(1).scale(&rat(1, 2)));

        let sq = y(0).pow(2);
        let f = PolyMap::new(3, vec![sq.clone(), sq.clone(), sq]);
        let phi2 = &y(0) * &y(1);
        assert!(phi2.compose(&f).unwrap().degree().unwrap() <= 4);
    }

    #[test]
    fn homogeneous_component_examples() {
        let y1 = PolyFun::var(2, 0);
        let p = &PolyFun::one(2) + &y1;
        assert_eq!(
            p.homogeneous_components(),
            vec![PolyFun::one(2), y1.clone()]
        );
        let h = y1.pow(2);
        assert_eq!(
            h.homogeneous_components(),
            vec![PolyFun::zero(2), PolyFun::zero(2), h.clone()]
        );
        assert!(PolyFun::zero(2).homogeneous_components().is_empty());
    }

    #[test]
    fn directional_derivative_examples() {
        let y = |i| PolyFun::var(2, i);
        let e1 = [int(1), int(0)];
        let e2 = [int(0), int(1)];
        assert_eq!(
            y(0).pow(2).directional_derivative(&e1).unwrap(),
            y(0).scale(&int(2))
        );
        let xi = PolyFun::linear(&[int(3), int(-2)]);
        assert_eq!(
            xi.directional_derivative(&[int(1), int(1)]).unwrap(),
            PolyFun::constant(2, int(1))
        );
        assert_eq!((&y(0) * &y(1)).directional_derivative(&e2).unwrap(), y(0));
    }

    #[test]
    fn display_is_graded_lex() {
        let y = |i| PolyFun::var(2, i);
        let p = &(&y(1).pow(2) + &y(0)) + &PolyFun::constant(2, rat(-1, 2));
        assert_eq!(p.to_string(), "-1/2 + y1 + y2^2");
        let q = &(&y(0).scale(&int(-1)) - &(&y(0) * &y(1)).scale(&rat(3, 4))) + &y(1).pow(3);
        assert_eq!(q.to_string(), "-y1 - 3/4*y1*y2 + y2^3");
        assert_eq!(PolyFun::zero(2).to_string(), "0");
    }

    fn small_poly(nvars: usize) -> impl Strategy<Value = PolyFun> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, nvars), -3i64..4, 1i64..3),
            0..5,
        )
        .prop_map(move |ts| {
            PolyFun::from_terms(
                nvars,
                ts.into_iter()
                    .map(|(e, n, d)| (Monomial::new(e), rat(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn components_sum_back(p in small_poly(3)) {
            let sum = p.homogeneous_components().iter().fold(PolyFun::zero(3), |acc, c| &acc + c);
            prop_assert_eq!(sum, p);
        }

        #[test]
        fn compose_commutes_with_evaluation(
            p in small_poly(2),
            f0 in small_poly(2),
            f1 in small_poly(2),
            y0 in -3i64..4,
            y1 in -3i64..4,
        ) {
            let f = PolyMap::new(2, vec![f0, f1]);
            let y = [int(y0), int(y1)];
            let lhs = p.compose(&f).unwrap().evaluate(&y).unwrap();
            let rhs = p.evaluate(&f.evaluate(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_rule_for_partials(p in small_poly(2), q in small_poly(2)) {
            let lhs = (&p * &q).partial(0);
            let rhs = &(&p.partial(0) * &q) + &(&p * &q.partial(0));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
