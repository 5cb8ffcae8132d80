//! Reading an algebra from JSON and dumping its representation.

use nilrep::io::{read_algebra, AlgebraDoc, RepresentationDump};
use nilrep::Representation;

const ENGEL: &str = r#"{
  "name": "engel4",
  "dim": 4,
  "basis": ["x", "y", "z", "w"],
  "brackets": [
    {"i": 0, "j": 1, "coeffs": ["0", "0", "1", "0"]},
    {"i": 0, "j": 2, "coeffs": ["0", "0", "0", "1"]}
  ]
}"#;

fn main() {
    let g = read_algebra(ENGEL).unwrap();
    println!(
        "{}: dim {}, N {}, lcs {:?}",
        g.name(),
        g.dim(),
        g.nilpotency(),
        g.lcs_dims()
    );

    let rep = Representation::build(&g).unwrap();
    for (k, b) in rep.space().basis().iter().enumerate() {
        println!("  b{k} = {b}");
    }
    let dump = RepresentationDump::from_representation(&rep);
    println!("dump: dim_FG {}, bound {}", dump.dim_fg, dump.bound);
    println!(
        "λ̇_G(x) = {}",
        serde_json::to_string(&dump.generators[0].matrix).unwrap()
    );

    let bad = ENGEL.replace("\"0\", \"0\", \"0\", \"1\"", "\"1\", \"0\", \"0\", \"0\"");
    match read_algebra(&bad) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {} {:?} ({e})", e.kind(), e.indices()),
    }
    assert_eq!(
        AlgebraDoc::from_algebra(&g),
        AlgebraDoc::parse(ENGEL).unwrap()
    );
}
