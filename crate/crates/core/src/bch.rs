//! The Baker–Campbell–Hausdorff group law, truncated at the nilpotency degree.
//!
//! The series is expanded once per degree bound with Dynkin's formula
//!
//! ```text
//! log(e^X e^Y) = Σ_n (−1)^(n−1)/n Σ [X^r1 Y^s1 ⋯ X^rn Y^sn] / ((Σ r_i + s_i) Π r_i! s_i!)
//! ```
//!
//! where the bracket is right-nested. Terms are collected by word, so the
//! whole series up to degree `d` has at most `2^(d+1)` entries. Evaluation
//! happens directly in the concrete algebra, with coordinates that may be
//! rationals or polynomials.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::Result;
use crate::lie::{Coefficient, LieAlgebra, LieElement};
use crate::poly::{PolyFun, PolyMap};
use crate::rational::{factorial, format_rational, Rational};
use crate::report::CheckResult;
use crate::sample::Sampler;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

/// A right-nested bracket word `[w_1, [w_2, [… , w_d]]]` with its coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BchTerm {
    pub word: Vec<Letter>,
    pub coeff: Rational,
}

impl BchTerm {
    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.word.iter().filter(|&&l| l == letter).count()
    }
}

/// BCH series truncated at a fixed degree, as collected bracket words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BchSeries {
    max_degree: usize,
    terms: Vec<BchTerm>,
}

impl BchSeries {
    /// Expands Dynkin's formula through degree `max_degree`.
    ///
    /// Words ending in a repeated letter vanish and are dropped; a final
    /// `…YX` is rewritten as `−…XY`.
    pub fn dynkin(max_degree: usize) -> Self {
        let mut collected: BTreeMap<Vec<Letter>, Rational> = BTreeMap::new();
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        expand_blocks(max_degree, 0, &mut blocks, &mut collected);
        let mut terms: Vec<BchTerm> = collected
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(word, coeff)| BchTerm { word, coeff })
            .collect();
        terms.sort_by(|a, b| {
            a.word
                .len()
                .cmp(&b.word.len())
                .then_with(|| a.word.cmp(&b.word))
        });
        BchSeries { max_degree, terms }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn terms(&self) -> &[BchTerm] {
        &self.terms
    }

    pub fn degree_part(&self, d: usize) -> impl Iterator<Item = &BchTerm> {
        self.terms.iter().filter(move |t| t.degree() == d)
    }

    /// Evaluates `Σ coeff · word(X = x, Y = y)` using the algebra's bracket.
    pub fn evaluate<C: Coefficient>(&self, g: &LieAlgebra, x: &[C], y: &[C]) -> Vec<C> {
        self.evaluate_filtered(g, x, y, |_| true)
    }

    pub(crate) fn evaluate_filtered<C: Coefficient>(
        &self,
        g: &LieAlgebra,
        x: &[C],
        y: &[C],
        keep: impl Fn(&BchTerm) -> bool,
    ) -> Vec<C> {
        let zero = x[0].zero_like();
        let mut out = vec![zero; g.dim()];
        let mut memo: HashMap<Vec<Letter>, Vec<C>> = HashMap::new();
        for term in self.terms.iter().filter(|t| keep(t)) {
            let value = nested_value(g, &term.word, x, y, &mut memo);
            for (o, v) in out.iter_mut().zip(&value) {
                o.axpy(&term.coeff, v);
            }
        }
        out
    }
}

fn expand_blocks(
    max_degree: usize,
    degree: usize,
    blocks: &mut Vec<(usize, usize)>,
    collected: &mut BTreeMap<Vec<Letter>, Rational>,
) {
    for total in 1..=max_degree - degree {
        for r in 0..=total {
            let s = total - r;
            blocks.push((r, s));
            let d = degree + total;
            record_term(blocks, d, collected);
            if d < max_degree {
                expand_blocks(max_degree, d, blocks, collected);
            }
            blocks.pop();
        }
    }
}

fn record_term(
    blocks: &[(usize, usize)],
    degree: usize,
    collected: &mut BTreeMap<Vec<Letter>, Rational>,
) {
    let mut word = Vec::with_capacity(degree);
    for &(r, s) in blocks {
        word.extend(std::iter::repeat_n(Letter::X, r));
        word.extend(std::iter::repeat_n(Letter::Y, s));
    }
    let mut sign = Rational::one();
    if word.len() >= 2 {
        let (a, b) = (word[word.len() - 2], word[word.len() - 1]);
        if a == b {
            return;
        }
        if a == Letter::Y {
            let len = word.len();
            word.swap(len - 2, len - 1);
            sign = -sign;
        }
    }
    let n = blocks.len();
    let mut denom = Rational::from_integer((n * degree).into());
    for &(r, s) in blocks {
        denom *= factorial(r) * factorial(s);
    }
    if n.is_multiple_of(2) {
        sign = -sign;
    }
    *collected.entry(word).or_insert_with(Rational::zero) += sign / denom;
}

fn nested_value<C: Coefficient>(
    g: &LieAlgebra,
    word: &[Letter],
    x: &[C],
    y: &[C],
    memo: &mut HashMap<Vec<Letter>, Vec<C>>,
) -> Vec<C> {
    let letter = |l: Letter| match l {
        Letter::X => x.to_vec(),
        Letter::Y => y.to_vec(),
    };
    if word.len() == 1 {
        return letter(word[0]);
    }
    if let Some(v) = memo.get(word) {
        return v.clone();
    }
    let inner = nested_value(g, &word[1..], x, y, memo);
    let head = match word[0] {
        Letter::X => x,
        Letter::Y => y,
    };
    let v = g.bracket_with(head, &inner);
    memo.insert(word.to_vec(), v.clone());
    v
}

/// `x ∗ y` in the simply connected group `(g, ∗)`.
pub fn bch_product(g: &LieAlgebra, x: &LieElement, y: &LieElement) -> Result<LieElement> {
    g.bracket(x, y)?;
    Ok(LieElement::new(g.bch_series().evaluate(
        g,
        x.coords(),
        y.coords(),
    )))
}

/// `L_x(y) = (−x) ∗ y` as a polynomial map in the coordinates of `y`.
pub fn left_translation(g: &LieAlgebra, x: &LieElement) -> Result<PolyMap> {
    g.bracket(x, x)?;
    let n = g.dim();
    let minus_x: Vec<PolyFun> = PolyMap::constant(n, (-x).coords()).into_components();
    let y = PolyMap::identity(n).into_components();
    Ok(PolyMap::new(n, g.bch_series().evaluate(g, &minus_x, &y)))
}

/// Universal constants `c_0..c_upto` with
/// `d/dt ((−t x) ∗ y)|_{t=0} = Σ_j c_j (ad y)^j x`.
///
/// Obtained from the part of the series that is linear in `X`: in a free
/// algebra each such word reduces to `±(ad Y)^j X` or vanishes.
pub fn bch_derivative_coeffs(upto: usize) -> Vec<Rational> {
    let series = BchSeries::dynkin(upto + 1);
    let mut c = vec![Rational::zero(); upto + 1];
    for t in series.terms().iter().filter(|t| t.count(Letter::X) == 1) {
        let d = t.degree();
        let j = d - 1;
        // (ad Y)^j X with X = −x
        let sign = match (t.word.last(), d) {
            (Some(Letter::X), _) => Rational::one(),
            (Some(Letter::Y), d) if d >= 2 && t.word[d - 2] == Letter::X => -Rational::one(),
            _ => Rational::zero(),
        };
        c[j] -= &t.coeff * sign;
    }
    c
}

/// Samples triples and checks associativity, the identity and inverses.
pub fn group_axiom_check(g: &LieAlgebra, samples: usize, seed: u64) -> Vec<CheckResult> {
    let mut rng = Sampler::new(seed);
    let mut assoc = CheckResult::new("bch_associativity");
    let mut ident = CheckResult::new("bch_identity");
    let mut inverse = CheckResult::new("bch_inverse");
    let zero = g.zero_element();
    let fmt = |v: &LieElement| v.coords().iter().map(format_rational).collect::<Vec<_>>();
    for _ in 0..samples {
        let x = rng.element(g.dim());
        let y = rng.element(g.dim());
        let z = rng.element(g.dim());
        let prod = |a: &LieElement, b: &LieElement| bch_product(g, a, b).expect("same algebra");
        let lhs = prod(&prod(&x, &y), &z);
        let rhs = prod(&x, &prod(&y, &z));
        assoc.record(lhs == rhs, || {
            json!({"x": fmt(&x), "y": fmt(&y), "z": fmt(&z), "left": fmt(&lhs), "right": fmt(&rhs)})
        });
        let xr = prod(&x, &zero);
        let xl = prod(&zero, &x);
        ident.record(
            xr == x && xl == x,
            || json!({"x": fmt(&x), "x*0": fmt(&xr), "0*x": fmt(&xl)}),
        );
        let inv = prod(&x, &-&x);
        inverse.record(inv.is_zero(), || json!({"x": fmt(&x), "x*(-x)": fmt(&inv)}));
    }
    vec![assoc, ident, inverse]
}
