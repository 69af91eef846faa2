//! Smith normal form with unimodular witnesses.

use symcalc::snf::{smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m, true);
    let (u, v) = (snf.u.clone().unwrap(), snf.v.clone().unwrap());
    let diag: Vec<String> = snf.diagonal.iter().map(|d| d.to_string()).collect();
    println!("invariant factors: {}", diag.join(", "));
    println!("U·M·V = S: {}", u.mul(&m).mul(&v) == snf.diagonal_matrix(3, 3));
}
