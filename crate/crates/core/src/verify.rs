//! The full property suite for one algebra.
//!
//! Every check draws its samples from its own stream, derived from the
//! report seed and the check's position, so adding samples to one check
//! never changes what another check sees.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bch::{bch_derivative_coeffs, group_axiom_check};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieElement};
use crate::linalg::Subspace;
use crate::poly::{lie_derivative, lie_derivative_by_coefficients, translate_poly, PolyFun};
use crate::rational::{factorial, format_rational, Rational};
use crate::rep::{
    corr3_check, corr3_family, corr4_check, homomorphism_check, vphi_space, RepSpace,
    Representation,
};
use crate::report::CheckResult;
use crate::sample::Sampler;

pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: DEFAULT_SAMPLES,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub algebra: String,
    pub dim_g: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub bound: usize,
    #[serde(rename = "dim_FG")]
    pub dim_fg: usize,
    pub measured_max_nilpotence_index: usize,
    pub measured_max_unipotence_index: usize,
    pub samples: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Bernoulli numbers `B_0..B_n` from `Σ_{k<m+1} C(m+1,k) B_k = 0`, so `B_1 = −1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(Rational::one());
            continue;
        }
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += binomial(m + 1, k) * bk;
        }
        b.push(-s / binomial(m + 1, m));
    }
    b
}

fn binomial(n: usize, k: usize) -> Rational {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn coords(x: &LieElement) -> Vec<String> {
    x.coords().iter().map(format_rational).collect()
}

fn per_degree(samples: usize, parts: usize) -> usize {
    samples.div_ceil(parts).max(1)
}

/// Seed of the `stream`-th independent sample stream under `seed`.
pub fn sub_seed(seed: u64, stream: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(stream)
}

/// Runs every check on `g`; failures are report entries, not errors.
pub fn verify(g: &LieAlgebra, opts: VerifyOptions) -> Result<VerificationReport> {
    if opts.samples == 0 {
        return Err(Error::BadParameter("samples must be at least 1".into()));
    }
    let k = opts.samples;
    let seed = opts.seed;
    let rep = Representation::build(g)?;
    let mut checks = Vec::new();

    checks.extend(group_axiom_check(g, k, sub_seed(seed, 1)));
    checks.push(bernoulli_check(6));
    checks.push(formula_agreement(g, k, sub_seed(seed, 2))?);
    checks.push(generated_subalgebra_check(g, k, sub_seed(seed, 3))?);
    checks.push(invariance_check(g, &rep)?);
    checks.push(oracle_membership(g, &rep, k, sub_seed(seed, 4))?);
    checks.extend(faithfulness_checks(g, &rep)?);
    let (nil, uni, max_nil, max_uni) = index_checks(g, &rep, k, sub_seed(seed, 5))?;
    checks.push(nil);
    checks.push(uni);
    checks.extend(homomorphism_check(g, &rep, k, sub_seed(seed, 6))?);
    checks.push(annihilation_check(g, k, sub_seed(seed, 7))?);
    checks.push(functional_family_check(
        g,
        per_degree(k, 4),
        sub_seed(seed, 8),
    )?);
    checks.push(cyclic_space_check(
        g,
        2,
        per_degree(k, 5),
        sub_seed(seed, 9),
    )?);

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerificationReport {
        algebra: g.name().to_string(),
        dim_g: g.dim(),
        n: g.nilpotency(),
        bound: rep.bound(),
        dim_fg: rep.dim(),
        measured_max_nilpotence_index: max_nil,
        measured_max_unipotence_index: max_uni,
        samples: k,
        seed,
        passed,
        checks,
    })
}

/// `c_j = −B_j / j!` for `j ≤ upto`.
pub fn bernoulli_check(upto: usize) -> CheckResult {
    let c = bch_derivative_coeffs(upto);
    let b = bernoulli_numbers(upto);
    let mut check = CheckResult::new("bch_derivative_coefficients");
    for j in 0..=upto {
        let expected = -&b[j] / factorial(j);
        check.record(c[j] == expected, || {
            json!({"j": j, "computed": format_rational(&c[j]), "expected": format_rational(&expected)})
        });
    }
    check.with_measured(json!(c.iter().map(format_rational).collect::<Vec<_>>()))
}

/// The velocity-field `λ̇` against `Σ_j c_j φ'_y((ad y)^j x)` for `deg φ ≤ 3`.
pub fn formula_agreement(g: &LieAlgebra, samples: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = Sampler::new(seed);
    let mut check = CheckResult::new("lambda_dot_formula");
    for t in 0..samples {
        let x = rng.element(g.dim());
        let phi = rng.poly(g.dim(), (t % 4) as u32);
        let a = lie_derivative(g, &x, &phi)?;
        let b = lie_derivative_by_coefficients(g, &x, &phi)?;
        check.record(a == b, || {
            json!({"x": coords(&x), "phi": phi.to_string(), "velocity": a.to_string(), "formula": b.to_string()})
        });
    }
    Ok(check)
}

/// Subsets of size 1, 2, 3: dimension bound `Σ_{r<N} q^(r+1)` and closure
/// under brackets.
pub fn generated_subalgebra_check(
    g: &LieAlgebra,
    samples: usize,
    seed: u64,
) -> Result<CheckResult> {
    let mut rng = Sampler::new(seed);
    let mut check = CheckResult::new("generated_subalgebra");
    let n_deg = g.nilpotency() as u32;
    let mut max_dim = 0;
    for t in 0..samples {
        let q = t % 3 + 1;
        let s: Vec<LieElement> = (0..q).map(|_| rng.element(g.dim())).collect();
        let h = g.generated_subalgebra(&s)?;
        let bound: usize = (0..n_deg).map(|r| q.pow(r + 1)).sum();
        let closed = is_bracket_closed(g, &h)?;
        max_dim = max_dim.max(h.dim());
        check.record(h.dim() <= bound && closed && s.iter().all(|x| h.contains(x.coords())), || {
            json!({"subset": s.iter().map(coords).collect::<Vec<_>>(), "dim": h.dim(), "bound": bound, "closed": closed})
        });
    }
    Ok(check.with_measured(json!({"max_dim": max_dim})))
}

pub fn is_bracket_closed(g: &LieAlgebra, h: &Subspace) -> Result<bool> {
    let basis: Vec<LieElement> = h
        .basis()
        .iter()
        .map(|v| LieElement::new(v.clone()))
        .collect();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if !h.contains(g.bracket(a, b)?.coords()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `F_G` contains `g*` and `1`, is `λ̇(e_i)`-stable, and has degree at most `N`.
pub fn invariance_check(g: &LieAlgebra, rep: &Representation) -> Result<CheckResult> {
    let space = rep.space();
    let mut check = CheckResult::new("fg_invariance");
    let stable = space.is_invariant(g)?;
    let duals = RepSpace::dual_basis(g).iter().all(|p| space.contains(p));
    let constants = space.contains(&PolyFun::one(g.dim()));
    let degree = space.degree_cap();
    check.record(stable && duals && constants && degree as usize <= g.nilpotency(), || {
        json!({"stable": stable, "contains_duals": duals, "contains_one": constants, "degree": degree})
    });
    Ok(check.with_measured(json!({"dim_FG": space.dim(), "degree": degree})))
}

/// `λ(x) ξ ∈ F_G` for sampled `x` and every coordinate functional `ξ`.
pub fn oracle_membership(
    g: &LieAlgebra,
    rep: &Representation,
    samples: usize,
    seed: u64,
) -> Result<CheckResult> {
    let mut rng = Sampler::new(seed);
    let mut check = CheckResult::new("fg_oracle_membership");
    let duals = RepSpace::dual_basis(g);
    for _ in 0..samples {
        let x = rng.element(g.dim());
        for (i, xi) in duals.iter().enumerate() {
            let moved = translate_poly(g, &x, xi)?;
            check.record(
                rep.space().contains(&moved),
                || json!({"x": coords(&x), "functional": i, "translate": moved.to_string()}),
            );
        }
    }
    Ok(check)
}

/// Rank of `λ̇_G` equals `dim g`, and the control space is detected as
/// unfaithful.
pub fn faithfulness_checks(g: &LieAlgebra, rep: &Representation) -> Result<Vec<CheckResult>> {
    let f = rep.faithfulness_check();
    let mut faithful = CheckResult::new("faithfulness");
    faithful.record(f.is_faithful, || json!({"rank": f.rank, "dim_g": g.dim()}));
    let faithful = faithful.with_measured(json!({"rank": f.rank, "kernel_dim": f.kernel_dim}));

    let control = Representation::on_space(g, RepSpace::without_central_duals(g)?)?;
    let cf = control.faithfulness_check();
    let mut negative = CheckResult::new("negative_control_unfaithful");
    negative.record(
        !cf.is_faithful,
        || json!({"rank": cf.rank, "dim_g": g.dim(), "control_dim": control.dim()}),
    );
    let negative = negative
        .with_measured(json!({"rank": cf.rank, "kernel_dim": cf.kernel_dim, "dim": control.dim()}));
    Ok(vec![faithful, negative])
}

/// `λ̇_G(x)^b = 0` and `(λ_G(x) − 1)^b = 0` with `b = 2^(N−1)·N + 1`.
/// Returns the two checks and the largest indices seen.
pub fn index_checks(
    g: &LieAlgebra,
    rep: &Representation,
    samples: usize,
    seed: u64,
) -> Result<(CheckResult, CheckResult, usize, usize)> {
    let mut rng = Sampler::new(seed);
    let bound = rep.bound();
    let mut nil = CheckResult::new("nilpotence_bound");
    let mut uni = CheckResult::new("unipotence_bound");
    let (mut max_nil, mut max_uni) = (0, 0);
    let d = rep.dim();
    for t in 0..samples {
        // the basis vectors first, then random elements
        let x = if t < g.dim() {
            g.basis_element(t)
        } else {
            rng.element(g.dim())
        };
        let dot = rep.lambda_dot_matrix(&x)?;
        let ni = dot.nilpotence_index();
        let ok = ni.is_some_and(|i| i <= bound) && dot.pow(bound).is_zero();
        nil.record(ok, || json!({"x": coords(&x), "index": ni, "bound": bound}));
        max_nil = max_nil.max(ni.unwrap_or(usize::MAX));

        let u = &rep.lambda_matrix(&x)? - &crate::linalg::Matrix::identity(d);
        let ui = u.nilpotence_index();
        let ok = ui.is_some_and(|i| i <= bound) && u.pow(bound).is_zero();
        uni.record(ok, || json!({"x": coords(&x), "index": ui, "bound": bound}));
        max_uni = max_uni.max(ui.unwrap_or(usize::MAX));
    }
    Ok((
        nil.with_measured(json!({"max_index": max_nil, "bound": bound})),
        uni.with_measured(json!({"max_index": max_uni, "bound": bound})),
        max_nil,
        max_uni,
    ))
}

/// `λ̇(x0)^(2^(N−1)·m + 1) φ = 0` for `deg φ = m ∈ {0, 1, 2, 3}`.
pub fn annihilation_check(g: &LieAlgebra, samples: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = Sampler::new(seed);
    let mut check = CheckResult::new("polynomial_annihilation");
    let per = per_degree(samples, 4);
    let mut powers = vec![0usize; 4];
    for m in 0..4u32 {
        for _ in 0..per {
            let x0 = rng.element(g.dim());
            let phi = rng.poly(g.dim(), m);
            let r = corr4_check(g, &x0, &phi)?;
            powers[m as usize] = powers[m as usize].max(r.annihilating_power.unwrap_or(usize::MAX));
            check.record(r.passed, || {
                json!({"x0": coords(&x0), "phi": phi.to_string(), "degree": m, "bound": r.bound})
            });
        }
    }
    Ok(check.with_measured(json!({"max_power_by_degree": powers})))
}

/// The `p_αβ` family of a random `ξ ∈ g*`: dimension at most `2^(N−1) + 1`,
/// `λ̇(x0)`-stable, killed by `λ̇(x0)^(2^(N−1)+1)`, filtered by `I_αβ`.
pub fn functional_family_check(g: &LieAlgebra, samples: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = Sampler::new(seed);
    let mut check = CheckResult::new("functional_family");
    let mut max_dim = 0;
    for _ in 0..samples {
        let xi = rng.functional(g.dim());
        let x0 = rng.element(g.dim());
        let family = corr3_family(g, &xi, &x0)?;
        let r = corr3_check(g, &family)?;
        max_dim = max_dim.max(r.dim);
        check.record(
            r.passed,
            || json!({"xi": xi.to_string(), "x0": coords(&x0), "result": r}),
        );
    }
    Ok(check.with_measured(
        json!({"max_dim": max_dim, "dim_bound": (1usize << (g.nilpotency() - 1)) + 1}),
    ))
}

/// `V_Φ` for random polynomials of degrees `1..=max_deg`: degree at most
/// `max_deg·N` and stable under `λ(x)` for sampled `x`.
pub fn cyclic_space_check(
    g: &LieAlgebra,
    max_deg: u32,
    samples: usize,
    seed: u64,
) -> Result<CheckResult> {
    let mut rng = Sampler::new(seed);
    let mut check = CheckResult::new("cyclic_space");
    let phis: Vec<PolyFun> = (1..=max_deg).map(|m| rng.poly(g.dim(), m)).collect();
    let space = vphi_space(g, &phis, max_deg)?;
    let cap = max_deg as usize * g.nilpotency();
    let degree = space.degree_cap();
    check.record(
        degree as usize <= cap,
        || json!({"degree": degree, "cap": cap}),
    );
    for _ in 0..samples {
        let x = rng.element(g.dim());
        for b in space.basis() {
            let moved = translate_poly(g, &x, b)?;
            check.record(
                space.contains(&moved),
                || json!({"x": coords(&x), "basis": b.to_string()}),
            );
        }
    }
    let phi_text: Vec<String> = phis.iter().map(ToString::to_string).collect();
    Ok(check
        .with_measured(json!({"phi": phi_text, "dim": space.dim(), "degree": degree, "cap": cap})))
}

/// Summary row for the `report` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub name: String,
    pub dim_g: usize,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "dim_FG")]
    pub dim_fg: usize,
    pub measured: usize,
    pub bound: usize,
    pub pass: bool,
}

impl From<&VerificationReport> for ReportRow {
    fn from(r: &VerificationReport) -> Self {
        ReportRow {
            name: r.algebra.clone(),
            dim_g: r.dim_g,
            n: r.n,
            dim_fg: r.dim_fg,
            measured: r.measured_max_nilpotence_index,
            bound: r.bound,
            pass: r.passed,
        }
    }
}

pub fn render_table(rows: &[ReportRow]) -> String {
    let header = [
        "algebra", "dim g", "N", "dim F_G", "measured", "bound", "result",
    ];
    let body: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.name.clone(),
                r.dim_g.to_string(),
                r.n.to_string(),
                r.dim_fg.to_string(),
                r.measured.to_string(),
                r.bound.to_string(),
                if r.pass { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(header.to_vec())];
    for row in &body {
        out.push(line(row.iter().map(String::as_str).collect()));
    }
    out.join("\n") + "\n"
}

pub fn report_json(rows: &[ReportRow]) -> Value {
    json!({ "rows": rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, CorpusSpec};
    use crate::rational::rat;

    #[test]
    fn bernoulli_recurrence() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[8], rat(-1, 30));
    }

    #[test]
    fn heisenberg_suite_passes() {
        let g = corpus::make(&CorpusSpec::Heisenberg(3)).unwrap();
        let r = verify(
            &g,
            VerifyOptions {
                samples: 12,
                seed: 42,
            },
        )
        .unwrap();
        assert!(r.passed, "{}", r.to_json());
        assert_eq!((r.dim_fg, r.bound), (4, 5));
    }

    #[test]
    fn abelian_index_attains_bound() {
        let g = corpus::make(&CorpusSpec::Abelian(2)).unwrap();
        let r = verify(
            &g,
            VerifyOptions {
                samples: 10,
                seed: 1,
            },
        )
        .unwrap();
        assert!(r.passed);
        assert_eq!(r.measured_max_nilpotence_index, 2);
        assert_eq!(r.bound, 2);
    }

    #[test]
    fn zero_samples_rejected() {
        let g = corpus::make(&CorpusSpec::Abelian(1)).unwrap();
        assert!(verify(
            &g,
            VerifyOptions {
                samples: 0,
                seed: 0
            }
        )
        .is_err());
    }

    #[test]
    fn table_rendering() {
        let rows = vec![ReportRow {
            name: "a1".into(),
            dim_g: 1,
            n: 1,
            dim_fg: 2,
            measured: 2,
            bound: 2,
            pass: true,
        }];
        let t = render_table(&rows);
        assert_eq!(
            t.lines()
                .nth(1)
                .unwrap()
                .split_whitespace()
                .collect::<Vec<_>>(),
            ["a1", "1", "1", "2", "2", "2", "pass"]
        );
    }
}
