//! The group law x ∗ y on a nilpotent Lie algebra.

use nilrep::bch::BchSeries;
use nilrep::corpus::{self, CorpusSpec};
use nilrep::rational::{format_rational, rat};
use nilrep::{bch_derivative_coeffs, bch_product, left_translation, LieElement};

fn fmt(x: &LieElement) -> String {
    x.coords()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() {
    let series = BchSeries::dynkin(4);
    println!(
        "Dynkin series up to degree 4 ({} terms):",
        series.terms().len()
    );
    for t in series.terms() {
        let word: String = t.word.iter().map(|l| format!("{l:?}")).collect();
        println!("  {:>6} · {word}", format_rational(&t.coeff));
    }

    let h = corpus::make(&CorpusSpec::Heisenberg(3)).unwrap();
    let x = LieElement::from_ints(&[1, 0, 0]);
    let y = LieElement::from_ints(&[0, 1, 0]);
    println!(
        "h3: ({}) ∗ ({}) = ({})",
        fmt(&x),
        fmt(&y),
        fmt(&bch_product(&h, &x, &y).unwrap())
    );
    println!(
        "h3: x ∗ (−x) = ({})",
        fmt(&bch_product(&h, &x, &-&x).unwrap())
    );

    let f = corpus::make(&CorpusSpec::Filiform(5)).unwrap();
    let x = LieElement::new(vec![rat(1, 2), rat(-1, 1), rat(0, 1), rat(2, 3), rat(1, 1)]);
    let y = LieElement::from_ints(&[-1, 1, 1, 0, 0]);
    let xy = bch_product(&f, &x, &y).unwrap();
    let yx = bch_product(&f, &y, &x).unwrap();
    println!("f5: x ∗ y = ({})", fmt(&xy));
    println!("f5: y ∗ x = ({})", fmt(&yx));

    let l = left_translation(&h, &h.basis_element(0)).unwrap();
    for (i, c) in l.components().iter().enumerate() {
        println!("h3: L_e1(y)_{} = {c}", i + 1);
    }

    let c: Vec<String> = bch_derivative_coeffs(8)
        .iter()
        .map(format_rational)
        .collect();
    println!("c_0..c_8 = [{}]", c.join(", "));
}
