//! Translating polynomial functions and differentiating the action.

use nilrep::corpus::{self, CorpusSpec};
use nilrep::poly::lie_derivative_by_coefficients;
use nilrep::{lie_derivative, translate_poly, LieElement, PolyFun};

fn main() {
    let g = corpus::make(&CorpusSpec::FreeNilpotent23).unwrap();
    let y = |i| PolyFun::var(5, i);
    let phi = &(&y(3) * &y(0)) + &y(4);
    let x = LieElement::from_ints(&[1, -1, 0, 0, 2]);

    println!("φ        = {phi}");
    println!("λ(x)φ    = {}", translate_poly(&g, &x, &phi).unwrap());
    let a = lie_derivative(&g, &x, &phi).unwrap();
    let b = lie_derivative_by_coefficients(&g, &x, &phi).unwrap();
    println!("λ̇(x)φ    = {a}");
    println!("formula  = {b}");
    assert_eq!(a, b);

    let mut p = phi.clone();
    let mut k = 0;
    while !p.is_zero() {
        p = lie_derivative(&g, &x, &p).unwrap();
        k += 1;
    }
    println!(
        "λ̇(x)^{k} φ = 0, degree {} bound {}",
        phi.degree().unwrap(),
        (1 << (g.nilpotency() - 1)) * 2 + 1
    );
}
