//! Runs the property suite over the standard algebras and prints the table.

use nilrep::corpus::{self, standard_corpus};
use nilrep::verify::{render_table, verify, ReportRow, VerifyOptions};

fn main() {
    let opts = VerifyOptions {
        samples: 50,
        seed: 42,
    };
    let mut rows = Vec::new();
    for spec in standard_corpus() {
        let g = corpus::make(&spec).unwrap();
        let report = verify(&g, opts).unwrap();
        for c in report.failed_checks() {
            eprintln!("{spec}: {} failed: {:?}", c.name, c.counterexample);
        }
        rows.push(ReportRow::from(&report));
    }
    print!("{}", render_table(&rows));
}
