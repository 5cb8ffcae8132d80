//! Standard nilpotent Lie algebras.
//!
//! Basis conventions (all indices 1-based in the names):
//!
//! * `abelian(n)`, name `a{n}`: basis `e1..en`, all brackets zero, `N = 1`.
//! * `heisenberg(2k+1)`, name `h{2k+1}`: `[e_i, e_{k+i}] = e_{2k+1}`, `N = 2`.
//!   For `k = 1` this is `[e1, e2] = e3`.
//! * `strict_upper(n)`, name `u{n}`: matrix units `E_ab` (`a < b`) ordered by
//!   superdiagonal `b − a`, then by `a`; `[E_ab, E_bc] = E_ac`, `N = n − 1`.
//! * `filiform(n)`, name `f{n}`: `[e1, e_i] = e_{i+1}` for `2 ≤ i ≤ n − 1`, `N = n − 1`.
//! * `free_nilpotent_2_3`, name `free23`: free 3-step algebra on `x, y` with
//!   basis `x, y, [x,y], [x,[x,y]], [y,[x,y]]`, `N = 3`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CorpusSpec {
    Abelian(usize),
    Heisenberg(usize),
    StrictUpper(usize),
    Filiform(usize),
    FreeNilpotent23,
}

impl CorpusSpec {
    /// Parses a family name and an optional size parameter.
    pub fn parse(family: &str, param: Option<usize>) -> Result<Self> {
        let need = |p: Option<usize>| {
            p.ok_or_else(|| Error::BadParameter(format!("family {family} needs a size")))
        };
        let spec = match family {
            "abelian" => CorpusSpec::Abelian(need(param)?),
            "heisenberg" => CorpusSpec::Heisenberg(need(param)?),
            "strict_upper" => CorpusSpec::StrictUpper(need(param)?),
            "filiform" => CorpusSpec::Filiform(need(param)?),
            "free_nilpotent_2_3" => {
                if param.is_some() {
                    return Err(Error::BadParameter(
                        "free_nilpotent_2_3 takes no size".into(),
                    ));
                }
                CorpusSpec::FreeNilpotent23
            }
            other => return Err(Error::BadParameter(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadParameter(msg));
        match *self {
            CorpusSpec::Abelian(n) if n < 1 => bad("abelian needs n >= 1".into()),
            CorpusSpec::Heisenberg(d) if d < 3 || d % 2 == 0 => bad(format!(
                "heisenberg dimension must be odd and >= 3, got {d}"
            )),
            CorpusSpec::StrictUpper(n) if n < 2 => bad("strict_upper needs n >= 2".into()),
            CorpusSpec::Filiform(n) if n < 3 => bad("filiform needs n >= 3".into()),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            CorpusSpec::Abelian(n) => format!("a{n}"),
            CorpusSpec::Heisenberg(d) => format!("h{d}"),
            CorpusSpec::StrictUpper(n) => format!("u{n}"),
            CorpusSpec::Filiform(n) => format!("f{n}"),
            CorpusSpec::FreeNilpotent23 => "free23".into(),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            CorpusSpec::Abelian(n) | CorpusSpec::Heisenberg(n) | CorpusSpec::Filiform(n) => n,
            CorpusSpec::StrictUpper(n) => n * (n - 1) / 2,
            CorpusSpec::FreeNilpotent23 => 5,
        }
    }

    /// The documented nilpotency degree `N`.
    pub fn nilpotency(&self) -> usize {
        match *self {
            CorpusSpec::Abelian(_) => 1,
            CorpusSpec::Heisenberg(_) => 2,
            CorpusSpec::StrictUpper(n) | CorpusSpec::Filiform(n) => n - 1,
            CorpusSpec::FreeNilpotent23 => 3,
        }
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    /// Accepts the short names `a3`, `h5`, `u4`, `f5`, `free23`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "free23" {
            return Ok(CorpusSpec::FreeNilpotent23);
        }
        let (head, tail) = s.split_at(s.len().min(1));
        let n: usize = tail
            .parse()
            .map_err(|_| Error::BadParameter(format!("unknown corpus name {s:?}")))?;
        let spec = match head {
            "a" => CorpusSpec::Abelian(n),
            "h" => CorpusSpec::Heisenberg(n),
            "u" => CorpusSpec::StrictUpper(n),
            "f" => CorpusSpec::Filiform(n),
            _ => return Err(Error::BadParameter(format!("unknown corpus name {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// The algebras used throughout tests and acceptance runs.
pub fn standard_corpus() -> Vec<CorpusSpec> {
    vec![
        CorpusSpec::Abelian(1),
        CorpusSpec::Abelian(2),
        CorpusSpec::Abelian(3),
        CorpusSpec::Abelian(4),
        CorpusSpec::Heisenberg(3),
        CorpusSpec::Heisenberg(5),
        CorpusSpec::StrictUpper(3),
        CorpusSpec::StrictUpper(4),
        CorpusSpec::Filiform(4),
        CorpusSpec::Filiform(5),
        CorpusSpec::FreeNilpotent23,
    ]
}

fn unit(dim: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[k] = int(1);
    v
}

/// Adds `[e_a, e_b] = sign · e_c`, normalizing to `a < b`.
fn push(brackets: &mut Vec<Bracket>, dim: usize, a: usize, b: usize, c: usize, sign: i64) {
    let (i, j, s) = if a < b { (a, b, sign) } else { (b, a, -sign) };
    let coeffs = unit(dim, c).into_iter().map(|x| x * int(s)).collect();
    brackets.push(Bracket { i, j, coeffs });
}

pub fn make(spec: &CorpusSpec) -> Result<LieAlgebra> {
    spec.validate()?;
    let dim = spec.dim();
    let mut brackets = Vec::new();
    let names: Vec<String> = match *spec {
        CorpusSpec::Abelian(_) | CorpusSpec::Filiform(_) | CorpusSpec::Heisenberg(_) => {
            (1..=dim).map(|i| format!("e{i}")).collect()
        }
        CorpusSpec::StrictUpper(n) => {
            let units = strict_upper_units(n);
            for (p, &(a, b)) in units.iter().enumerate() {
                for (q, &(c, d)) in units.iter().enumerate().skip(p + 1) {
                    if b == c {
                        let r = units.iter().position(|&u| u == (a, d)).unwrap();
                        push(&mut brackets, dim, p, q, r, 1);
                    } else if d == a {
                        let r = units.iter().position(|&u| u == (c, b)).unwrap();
                        push(&mut brackets, dim, p, q, r, -1);
                    }
                }
            }
            units
                .iter()
                .map(|(a, b)| format!("E{}{}", a + 1, b + 1))
                .collect()
        }
        CorpusSpec::FreeNilpotent23 => {
            push(&mut brackets, dim, 0, 1, 2, 1);
            push(&mut brackets, dim, 0, 2, 3, 1);
            push(&mut brackets, dim, 1, 2, 4, 1);
            ["x", "y", "[x,y]", "[x,[x,y]]", "[y,[x,y]]"]
                .map(String::from)
                .to_vec()
        }
    };
    match *spec {
        CorpusSpec::Heisenberg(d) => {
            let k = (d - 1) / 2;
            for i in 0..k {
                push(&mut brackets, dim, i, k + i, d - 1, 1);
            }
        }
        CorpusSpec::Filiform(n) => {
            for i in 1..n - 1 {
                push(&mut brackets, dim, 0, i, i + 1, 1);
            }
        }
        _ => {}
    }
    LieAlgebra::new(spec.name(), names, brackets)
}

fn strict_upper_units(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|level| (0..n - level).map(move |a| (a, a + level)))
        .collect()
}
