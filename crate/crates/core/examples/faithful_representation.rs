//! Builds F_G for a few algebras and prints the matrices of λ̇_G.

use nilrep::corpus::{self, CorpusSpec};
use nilrep::rational::format_rational;
use nilrep::sample::Sampler;
use nilrep::Representation;

fn main() {
    let h = corpus::make(&CorpusSpec::Heisenberg(3)).unwrap();
    let rep = Representation::build(&h).unwrap();
    let basis: Vec<String> = rep
        .space()
        .basis()
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("h3: F_G = span{{{}}}", basis.join(", "));
    for (i, m) in rep.generator_matrices().iter().enumerate() {
        println!("λ̇_G(e{}):", i + 1);
        for r in 0..m.rows() {
            let row: Vec<String> = m
                .row(r)
                .iter()
                .map(|c| format!("{:>5}", format_rational(c)))
                .collect();
            println!("  {}", row.join(" "));
        }
    }

    let mut rng = Sampler::new(7);
    for spec in [
        CorpusSpec::StrictUpper(4),
        CorpusSpec::Filiform(5),
        CorpusSpec::FreeNilpotent23,
    ] {
        let g = corpus::make(&spec).unwrap();
        let rep = Representation::build(&g).unwrap();
        let f = rep.faithfulness_check();
        let worst = (0..50)
            .map(|_| {
                rep.nilpotence_index(&rng.element(g.dim()))
                    .unwrap()
                    .unwrap()
            })
            .max()
            .unwrap();
        println!(
            "{spec}: dim g {}, dim F_G {}, rank {}, faithful {}, max index {worst} ≤ {}",
            g.dim(),
            rep.dim(),
            f.rank,
            f.is_faithful,
            rep.bound()
        );
    }
}
