//! The finer invariant spaces behind the nilpotence bound.

use nilrep::corpus::{self, CorpusSpec};
use nilrep::rep::{corr3_check, corr3_family, corr4_check, vphi_space};
use nilrep::sample::Sampler;

fn main() {
    let g = corpus::make(&CorpusSpec::Filiform(5)).unwrap();
    let mut rng = Sampler::new(11);
    let xi = rng.functional(g.dim());
    let x0 = rng.element(g.dim());

    let family = corr3_family(&g, &xi, &x0).unwrap();
    println!("ξ = {xi}");
    for (pair, p) in family.members.iter().filter(|(_, p)| !p.is_zero()) {
        println!("  α={:?} β={:?}: {p}", pair.alpha, pair.beta);
    }
    let r = corr3_check(&g, &family).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());

    for m in 0..=3 {
        let phi = rng.poly(g.dim(), m);
        let r = corr4_check(&g, &x0, &phi).unwrap();
        println!(
            "deg {m}: killed after {:?} steps, bound {}",
            r.annihilating_power, r.bound
        );
    }

    let phis = [rng.poly(g.dim(), 1), rng.poly(g.dim(), 2)];
    let v = vphi_space(&g, &phis, 2).unwrap();
    println!(
        "V_Φ: dim {}, degree {} ≤ {}",
        v.dim(),
        v.degree_cap(),
        2 * g.nilpotency()
    );
}
