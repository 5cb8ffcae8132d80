//! Lower central series, nilpotency degree and center of the standard algebras.

use nilrep::corpus::{self, standard_corpus};
use nilrep::rational::format_rational;

fn main() {
    println!(
        "{:<8} {:>3} {:>3}  {:<16} center",
        "algebra", "dim", "N", "lcs dims"
    );
    for spec in standard_corpus() {
        let g = corpus::make(&spec).unwrap();
        let center: Vec<String> = g
            .center()
            .basis()
            .iter()
            .map(|v| {
                format!(
                    "({})",
                    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        println!(
            "{:<8} {:>3} {:>3}  {:<16} {}",
            g.name(),
            g.dim(),
            g.nilpotency(),
            format!("{:?}", g.lcs_dims()),
            center.join(" ")
        );
    }
}
