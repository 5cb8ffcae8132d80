//! Subalgebras generated by a few elements, against the word-count bound.

use nilrep::corpus::{self, CorpusSpec};
use nilrep::sample::Sampler;
use nilrep::LieElement;

fn main() {
    let g = corpus::make(&CorpusSpec::StrictUpper(4)).unwrap();
    let n = g.nilpotency() as u32;
    let mut rng = Sampler::new(3);

    let s = [g.basis_element(0), g.basis_element(1)];
    let h = g.generated_subalgebra(&s).unwrap();
    println!("⟨E12, E23⟩ has dim {}", h.dim());

    for q in 1..=3usize {
        let s: Vec<LieElement> = (0..q).map(|_| rng.element(g.dim())).collect();
        let h = g.generated_subalgebra(&s).unwrap();
        let bound: usize = (0..n).map(|r| q.pow(r + 1)).sum();
        println!("{q} random generators: dim {} ≤ {bound}", h.dim());
    }
}
