//! Row reduction, kernels and exponentials of nilpotent matrices over ℚ.

use nilrep::linalg::{exp_nilpotent, kernel_basis, rref, Matrix, Subspace};
use nilrep::rational::{format_rational, int, rat};

fn show(m: &Matrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(format_rational).collect();
        println!("  [{}]", row.join(", "));
    }
}

fn main() {
    let m = Matrix::from_rows(vec![
        vec![int(1), int(2), int(3)],
        vec![int(2), int(4), int(6)],
        vec![int(1), rat(1, 2), int(0)],
    ]);
    let r = rref(&m);
    println!("rank {} pivots {:?}", r.rank, r.pivots);
    show(&r.matrix);

    for v in kernel_basis(&m) {
        let v: Vec<String> = v.iter().map(format_rational).collect();
        println!("kernel vector ({})", v.join(", "));
    }

    let s = Subspace::spanned_by(3, m.row_vectors());
    println!(
        "row space dim {}, contains (0,3,6)? {}",
        s.dim(),
        s.contains(&[int(0), int(3), int(6)])
    );

    // strictly upper triangular, so exp is a finite sum
    let n = Matrix::from_rows(vec![
        vec![int(0), int(1), rat(1, 3)],
        vec![int(0), int(0), int(2)],
        vec![int(0), int(0), int(0)],
    ]);
    println!("nilpotence index {:?}", n.nilpotence_index());
    let e = exp_nilpotent(&n, 3).unwrap();
    println!("exp:");
    show(&e);
    let back = &e * &exp_nilpotent(&-&n, 3).unwrap();
    println!("exp(N)·exp(−N) = I? {}", back == Matrix::identity(3));
}
