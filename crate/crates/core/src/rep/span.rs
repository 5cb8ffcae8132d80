use num_traits::{One, Zero};

use crate::poly::{Monomial, PolyFun};
use crate::rational::Rational;

/// Span of polynomials in reduced echelon form.
///
/// Each basis element has coefficient 1 at its pivot (its smallest monomial
/// in graded-lex order) and 0 at every other pivot. This is the reduced row
/// echelon form of the coordinate matrix over the monomial basis, stored
/// sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpan {
    nvars: usize,
    rows: Vec<PolyFun>,
    pivots: Vec<Monomial>,
}

impl PolySpan {
    pub fn new(nvars: usize) -> Self {
        PolySpan {
            nvars,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<I: IntoIterator<Item = PolyFun>>(nvars: usize, polys: I) -> Self {
        let mut s = PolySpan::new(nvars);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[PolyFun] {
        &self.rows
    }

    pub fn pivots(&self) -> &[Monomial] {
        &self.pivots
    }

    pub fn reduce(&self, mut p: PolyFun) -> PolyFun {
        for (row, pivot) in self.rows.iter().zip(&self.pivots) {
            let c = p.coeff(pivot);
            if !c.is_zero() {
                p.add_scaled(&-c, row);
            }
        }
        p
    }

    pub fn contains(&self, p: &PolyFun) -> bool {
        self.reduce(p.clone()).is_zero()
    }

    /// Coordinates in the echelon basis: the coefficients at the pivots.
    pub fn coordinates(&self, p: &PolyFun) -> Option<Vec<Rational>> {
        if !self.contains(p) {
            return None;
        }
        Some(self.pivots.iter().map(|m| p.coeff(m)).collect())
    }

    /// Adds `p` to the span. Returns the nonzero remainder of `p` modulo the
    /// previous span when the dimension grows.
    pub fn insert(&mut self, p: PolyFun) -> Option<PolyFun> {
        assert_eq!(p.nvars(), self.nvars, "variable count");
        let r = self.reduce(p);
        let (pivot, lead) = match r.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return None,
        };
        let normalized = if lead.is_one() {
            r.clone()
        } else {
            r.scale(&lead.recip())
        };
        for row in self.rows.iter_mut() {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.add_scaled(&-c, &normalized);
            }
        }
        let at = self.pivots.partition_point(|q| *q < pivot);
        self.rows.insert(at, normalized);
        self.pivots.insert(at, pivot);
        Some(r)
    }
}
