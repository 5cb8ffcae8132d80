mod common;

use nilrep::corpus::{self, CorpusSpec};
use nilrep::rational::rat;
use nilrep::rep::RepSpace;
use nilrep::{
    bch_product, lie_derivative, LieAlgebra, LieElement, Matrix, PolyFun, Representation,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn element(dim: usize) -> impl Strategy<Value = LieElement> {
    proptest::collection::vec((-4i64..=4, 1i64..=4), dim)
        .prop_map(|v| LieElement::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn spec() -> impl Strategy<Value = CorpusSpec> {
    proptest::sample::select(corpus::standard_corpus())
}

fn cached(spec: CorpusSpec) -> &'static (LieAlgebra, Representation) {
    static CACHE: OnceLock<Vec<(CorpusSpec, (LieAlgebra, Representation))>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        corpus::standard_corpus()
            .into_iter()
            .map(|s| {
                let g = corpus::make(&s).unwrap();
                let rep = Representation::build(&g).unwrap();
                (s, (g, rep))
            })
            .collect()
    });
    &all.iter().find(|(s, _)| *s == spec).unwrap().1
}

fn with_elements(n: usize) -> impl Strategy<Value = (CorpusSpec, Vec<LieElement>)> {
    spec().prop_flat_map(move |s| (Just(s), proptest::collection::vec(element(s.dim()), n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bch_is_associative((s, v) in with_elements(3)) {
        let (g, _) = cached(s);
        let p = |a: &LieElement, b: &LieElement| bch_product(g, a, b).unwrap();
        prop_assert_eq!(p(&p(&v[0], &v[1]), &v[2]), p(&v[0], &p(&v[1], &v[2])));
    }

    #[test]
    fn one_parameter_subgroups_commute((s, v) in with_elements(1), a in -3i64..=3, b in -3i64..=3) {
        // (a x) ∗ (b x) = (a + b) x
        let (g, _) = cached(s);
        let x = &v[0];
        let lhs = bch_product(g, &x.scale(&rat(a, 1)), &x.scale(&rat(b, 1))).unwrap();
        prop_assert_eq!(lhs, x.scale(&rat(a + b, 1)));
    }

    #[test]
    fn lambda_dot_is_a_lie_homomorphism((s, v) in with_elements(2)) {
        let (g, rep) = cached(s);
        let dx = rep.lambda_dot_matrix(&v[0]).unwrap();
        let dy = rep.lambda_dot_matrix(&v[1]).unwrap();
        prop_assert_eq!(rep.lambda_dot_matrix(&g.bracket(&v[0], &v[1]).unwrap()).unwrap(), dx.commutator(&dy));
    }

    #[test]
    fn lambda_is_a_group_homomorphism((s, v) in with_elements(2)) {
        let (g, rep) = cached(s);
        let lhs = rep.lambda_matrix(&bch_product(g, &v[0], &v[1]).unwrap()).unwrap();
        let rhs = &rep.lambda_matrix(&v[0]).unwrap() * &rep.lambda_matrix(&v[1]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_inverse((s, v) in with_elements(1)) {
        let (_, rep) = cached(s);
        let x = &v[0];
        let prod = &rep.lambda_matrix(x).unwrap() * &rep.lambda_matrix(&-x).unwrap();
        prop_assert_eq!(prod, Matrix::identity(rep.dim()));
    }

    #[test]
    fn lambda_dot_within_bound((s, v) in with_elements(1)) {
        let (_, rep) = cached(s);
        prop_assert!(rep.lambda_dot_matrix(&v[0]).unwrap().pow(rep.bound()).is_zero());
    }

    #[test]
    fn lambda_dot_is_a_derivation(
        (s, v) in with_elements(1),
        i in 0usize..16, j in 0usize..16,
    ) {
        let (g, rep) = cached(s);
        let basis = rep.space().basis();
        let (p, q) = (&basis[i % basis.len()], &basis[j % basis.len()]);
        let x = &v[0];
        let lhs = lie_derivative(g, x, &(p * q)).unwrap();
        let rhs = &(&lie_derivative(g, x, p).unwrap() * q) + &(p * &lie_derivative(g, x, q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrices_track_polynomials((s, v) in with_elements(1), k in 0usize..16) {
        // the coordinate column of λ̇(x)b is λ̇_G(x) applied to b's column
        let (g, rep) = cached(s);
        let space: &RepSpace = rep.space();
        let b = &space.basis()[k % space.dim()];
        let image = space.coordinates(&lie_derivative(g, &v[0], b).unwrap()).unwrap();
        let mut unit = vec![rat(0, 1); space.dim()];
        unit[k % space.dim()] = rat(1, 1);
        prop_assert_eq!(rep.lambda_dot_matrix(&v[0]).unwrap().mul_vec(&unit), image);
        prop_assert!(space.contains(&PolyFun::one(g.dim())));
    }
}
