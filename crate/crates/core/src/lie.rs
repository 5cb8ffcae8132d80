//! Nilpotent Lie algebras given by rational structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::bch::BchSeries;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Matrix, Subspace, Vector};
use crate::poly::PolyMap;
use crate::rational::Rational;

/// Scalars the bracket can be evaluated over: plain rationals, or
/// polynomials when an element has symbolic coordinates.
pub trait Coefficient: Clone {
    fn zero_like(&self) -> Self;
    fn is_null(&self) -> bool;
    /// `self += c·other`
    fn axpy(&mut self, c: &Rational, other: &Self);
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }
    fn axpy(&mut self, c: &Rational, other: &Self) {
        *self += c * other;
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Coordinates of an element in the basis `e_1..e_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LieElement(Vec<Rational>);

impl LieElement {
    pub fn new(coords: Vec<Rational>) -> Self {
        LieElement(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LieElement(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = LieElement::zero(dim);
        v.0[i] = Rational::from_integer(1.into());
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        LieElement(
            coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        LieElement(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        LieElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        LieElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement(self.0.iter().map(|a| -a).collect())
    }
}

/// One stored structure constant row: `[e_i, e_j] = Σ_k c_k e_k` with `i < j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<Rational>,
}

/// A validated nilpotent Lie algebra.
///
/// Brackets are stored for `i < j` only; `[e_j, e_i] = −[e_i, e_j]` and
/// `[e_i, e_i] = 0` are implied. The lower central series and the
/// nilpotency degree `N` (with `g^(N) ≠ 0 = g^(N+1)`) are computed on
/// construction.
#[derive(Clone)]
pub struct LieAlgebra {
    name: String,
    basis_names: Vec<String>,
    structure: BTreeMap<(usize, usize), Vec<Rational>>,
    sparse: Vec<(usize, usize, Vec<(usize, Rational)>)>,
    lcs: Vec<Subspace>,
    nilpotency: usize,
    bch: OnceLock<BchSeries>,
    fields: OnceLock<Vec<PolyMap>>,
}

impl LieAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        brackets: Vec<Bracket>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::InvalidStructure(
                "dimension must be at least 1".into(),
            ));
        }
        let mut structure = BTreeMap::new();
        for b in brackets {
            if b.i >= b.j || b.j >= dim {
                return Err(Error::InvalidStructure(format!(
                    "bracket indices ({}, {}) must satisfy 0 <= i < j < {dim}",
                    b.i, b.j
                )));
            }
            if b.coeffs.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: b.coeffs.len(),
                });
            }
            if structure.contains_key(&(b.i, b.j)) {
                return Err(Error::InvalidStructure(format!(
                    "bracket ({}, {}) given twice",
                    b.i, b.j
                )));
            }
            if b.coeffs.iter().any(|c| !c.is_zero()) {
                structure.insert((b.i, b.j), b.coeffs);
            }
        }
        let sparse = structure
            .iter()
            .map(|(&(i, j), c)| {
                let nz = c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k, x.clone()))
                    .collect();
                (i, j, nz)
            })
            .collect();
        let mut g = LieAlgebra {
            name: name.into(),
            basis_names,
            structure,
            sparse,
            lcs: Vec::new(),
            nilpotency: 0,
            bch: OnceLock::new(),
            fields: OnceLock::new(),
        };
        g.check_jacobi()?;
        g.lcs = g.compute_lcs()?;
        g.nilpotency = g.lcs.len() - 1;
        Ok(g)
    }

    /// Convenience constructor with basis names `e1..en`.
    pub fn with_default_names(
        name: impl Into<String>,
        dim: usize,
        brackets: Vec<Bracket>,
    ) -> Result<Self> {
        let names = (1..=dim).map(|i| format!("e{i}")).collect();
        LieAlgebra::new(name, names, brackets)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// `N`: the largest `j` with `g^(j) ≠ 0`.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// `2^(N−1)·N + 1`, the nilpotence bound for the faithful representation.
    pub fn representation_bound(&self) -> usize {
        (1usize << (self.nilpotency - 1)) * self.nilpotency + 1
    }

    pub fn brackets(&self) -> impl Iterator<Item = Bracket> + '_ {
        self.structure.iter().map(|(&(i, j), c)| Bracket {
            i,
            j,
            coeffs: c.clone(),
        })
    }

    pub fn basis_element(&self, i: usize) -> LieElement {
        LieElement::basis(self.dim(), i)
    }

    pub fn zero_element(&self) -> LieElement {
        LieElement::zero(self.dim())
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found,
            })
        }
    }

    /// Bracket of coordinate vectors over any coefficient ring.
    ///
    /// Both slices must have length `dim`; `a` must be nonempty so a zero
    /// of the right shape can be produced.
    pub fn bracket_with<C: Coefficient>(&self, a: &[C], b: &[C]) -> Vec<C> {
        let zero = a[0].zero_like();
        let mut out = vec![zero; self.dim()];
        let minus_one = -Rational::from_integer(1.into());
        for (i, j, coeffs) in &self.sparse {
            let mut s = a[*i].times(&b[*j]);
            s.axpy(&minus_one, &a[*j].times(&b[*i]));
            if s.is_null() {
                continue;
            }
            for (k, c) in coeffs {
                out[*k].axpy(c, &s);
            }
        }
        out
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        self.check_dim(a.dim())?;
        self.check_dim(b.dim())?;
        Ok(LieElement(self.bracket_with(&a.0, &b.0)))
    }

    fn bracket_vec(&self, a: &[Rational], b: &[Rational]) -> Vector {
        self.bracket_with(a, b)
    }

    /// Matrix of `ad x`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &LieElement) -> Result<Matrix> {
        self.check_dim(x.dim())?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.bracket_vec(&x.0, LieElement::basis(n, j).coords()))
            .collect();
        Ok(Matrix::from_columns(n, &cols))
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let e = |i| LieElement::basis(n, i).0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket_vec(&e(i), &self.bracket_vec(&e(j), &e(k)));
                    let t2 = self.bracket_vec(&e(j), &self.bracket_vec(&e(k), &e(i)));
                    let t3 = self.bracket_vec(&e(k), &self.bracket_vec(&e(i), &e(j)));
                    let ok = (0..n).all(|c| (&t1[c] + &t2[c] + &t3[c]).is_zero());
                    if !ok {
                        return Err(Error::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_lcs(&self) -> Result<Vec<Subspace>> {
        let n = self.dim();
        let mut series = vec![Subspace::full(n)];
        loop {
            let prev = series.last().unwrap();
            if prev.dim() == 0 {
                return Ok(series);
            }
            let images = (0..n).flat_map(|i| {
                let ei = LieElement::basis(n, i).0;
                prev.basis()
                    .iter()
                    .map(move |v| self.bracket_vec(&ei, v))
                    .collect::<Vec<_>>()
            });
            let next = Subspace::spanned_by(n, images);
            if next.dim() == prev.dim() {
                return Err(Error::NotNilpotent {
                    stalled_dim: next.dim(),
                });
            }
            series.push(next);
        }
    }

    /// `g^(1) ⊋ g^(2) ⊋ … ⊋ g^(N+1) = 0`.
    pub fn lower_central_series(&self) -> &[Subspace] {
        &self.lcs
    }

    pub fn lcs_dims(&self) -> Vec<usize> {
        self.lcs.iter().map(Subspace::dim).collect()
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // rows of block j: v ↦ [v, e_j]
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            let m = self
                .ad_matrix(&LieElement::basis(n, j))
                .expect("basis element has ambient dimension");
            rows.extend((-&m).row_vectors());
        }
        Subspace::spanned_by(n, kernel_basis(&Matrix::from_rows(rows)))
    }

    /// The subalgebra generated by `s`, spanned by `s` and the bracket words
    /// `(ad v_r)⋯(ad v_1) w` with `v_i, w ∈ s` and `1 ≤ r ≤ N − 1`.
    pub fn generated_subalgebra(&self, s: &[LieElement]) -> Result<Subspace> {
        for x in s {
            self.check_dim(x.dim())?;
        }
        let n = self.dim();
        let mut span = Subspace::zero(n);
        let mut level: Vec<Vector> = s.iter().map(|x| x.0.clone()).collect();
        for r in 0..self.nilpotency {
            for w in &level {
                span.insert(w.clone());
            }
            if r + 1 == self.nilpotency {
                break;
            }
            level = level
                .iter()
                .flat_map(|w| s.iter().map(move |v| self.bracket_vec(&v.0, w)))
                .collect();
        }
        Ok(span)
    }

    pub(crate) fn bch_series(&self) -> &BchSeries {
        self.bch.get_or_init(|| BchSeries::dynkin(self.nilpotency))
    }

    pub(crate) fn velocity_fields(&self) -> &[PolyMap] {
        self.fields
            .get_or_init(|| crate::poly::compute_velocity_fields(self))
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.basis_names == other.basis_names
            && self.structure == other.structure
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("N", &self.nilpotency)
            .field("brackets", &self.structure.len())
            .finish()
    }
}
