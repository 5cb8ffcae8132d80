//! JSON documents: algebras, polynomials, and representation dumps.
//!
//! Rationals are always written as strings in canonical reduced form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::linalg::Matrix;
use crate::poly::{Monomial, PolyFun};
use crate::rational::{format_rational, parse_rational};
use crate::rep::Representation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

/// `{ "name", "dim", "basis": [..], "brackets": [{ "i", "j", "coeffs" }] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketDoc>,
}

impl AlgebraDoc {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        AlgebraDoc {
            name: g.name().to_string(),
            dim: g.dim(),
            basis: g.basis_names().to_vec(),
            brackets: g
                .brackets()
                .map(|b| BracketDoc {
                    i: b.i,
                    j: b.j,
                    coeffs: b.coeffs.iter().map(format_rational).collect(),
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Validates the document and constructs the algebra.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: self.basis.len(),
            });
        }
        let brackets = self
            .brackets
            .iter()
            .map(|b| {
                Ok(Bracket {
                    i: b.i,
                    j: b.j,
                    coeffs: b
                        .coeffs
                        .iter()
                        .map(|c| parse_rational(c))
                        .collect::<Result<_>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::new(self.name.clone(), self.basis.clone(), brackets)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra document serializes")
    }
}

pub fn read_algebra(text: &str) -> Result<LieAlgebra> {
    AlgebraDoc::parse(text)?.to_algebra()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub coeff: String,
}

/// `{ "vars": n, "terms": [{ "exp": [..], "coeff" }] }`, terms in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: usize,
    pub terms: Vec<TermDoc>,
}

impl PolyDoc {
    pub fn from_poly(p: &PolyFun) -> Self {
        PolyDoc {
            vars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TermDoc {
                    exp: m.exps().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<PolyFun> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.exp.len() != self.vars {
                    return Err(Error::DimensionMismatch {
                        expected: self.vars,
                        found: t.exp.len(),
                    });
                }
                Ok((Monomial::new(t.exp.clone()), parse_rational(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyFun::from_terms(self.vars, terms))
    }
}

pub fn matrix_doc(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub x: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDump {
    pub algebra: String,
    pub dim_g: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub bound: usize,
    #[serde(rename = "dim_FG")]
    pub dim_fg: usize,
    pub basis: Vec<PolyDoc>,
    pub generators: Vec<GeneratorDoc>,
}

impl RepresentationDump {
    pub fn from_representation(rep: &Representation) -> Self {
        RepresentationDump {
            algebra: rep.algebra_name().to_string(),
            dim_g: rep.dim_g(),
            n: rep.nilpotency(),
            bound: rep.bound(),
            dim_fg: rep.dim(),
            basis: rep.space().basis().iter().map(PolyDoc::from_poly).collect(),
            generators: rep
                .generator_matrices()
                .iter()
                .enumerate()
                .map(|(x, m)| GeneratorDoc {
                    x,
                    matrix: matrix_doc(m),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, CorpusSpec};
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn heisenberg_document() {
        let g = corpus::make(&CorpusSpec::Heisenberg(3)).unwrap();
        let doc = AlgebraDoc::from_algebra(&g);
        assert_eq!(
            doc.brackets,
            vec![BracketDoc {
                i: 0,
                j: 1,
                coeffs: vec!["0".into(), "0".into(), "1".into()]
            }]
        );
        let back = read_algebra(&doc.to_json()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn malformed_rational_is_a_parse_error() {
        let text = r#"{"name":"x","dim":3,"basis":["a","b","c"],
            "brackets":[{"i":0,"j":1,"coeffs":["0","0","1//2"]}]}"#;
        assert!(matches!(read_algebra(text), Err(Error::Parse(_))));
        assert!(matches!(read_algebra("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn basis_length_must_match_dim() {
        let text = r#"{"name":"x","dim":2,"basis":["a"],"brackets":[]}"#;
        assert!(read_algebra(text).is_err());
    }

    #[test]
    fn polynomial_document_order() {
        let p = &PolyFun::var(2, 1).pow(2) + &PolyFun::constant(2, rat(-1, 3));
        let doc = PolyDoc::from_poly(&p);
        assert_eq!(
            doc.terms[0],
            TermDoc {
                exp: vec![0, 0],
                coeff: "-1/3".into()
            }
        );
        assert_eq!(doc.terms[1].exp, vec![0, 2]);
    }

    proptest! {
        #[test]
        fn polynomial_documents_round_trip(
            ts in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -5i64..6, 1i64..4), 0..6)
        ) {
            let p = PolyFun::from_terms(3, ts.into_iter().map(|(e, n, d)| (Monomial::new(e), rat(n, d))));
            let json = serde_json::to_string(&PolyDoc::from_poly(&p)).unwrap();
            let back: PolyDoc = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back.to_poly().unwrap(), p);
        }
    }
}
