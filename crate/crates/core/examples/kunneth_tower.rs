//! Box^n_i stages and their quotient certificates for S^0 -> S^0 v S^0.

use symcalc::cube::{box_stage, kunneth_quotient_certificate, sym_kunneth_certificate, tilde_box, tower};
use symcalc::sset::{sphere, Inclusion};

fn main() -> symcalc::Result<()> {
    let s0 = sphere(0, 0)?;
    let f = Inclusion::wedge_left(&s0, &s0);
    for n in 1..=4 {
        let plain: Vec<usize> = (0..=n).map(|i| box_stage(&f, n, i).unwrap().keyed.set.reduced_size(0)).collect();
        let sym: Vec<usize> = (0..=n).map(|i| tilde_box(&f, n, i).unwrap().0.set.reduced_size(0)).collect();
        println!("n = {n}: plain stages {plain:?}, symmetrized {sym:?}");
        for i in 1..=n {
            let p = kunneth_quotient_certificate(&f, n, i)?;
            let s = sym_kunneth_certificate(&f, n, i)?;
            println!("    i = {i}: quotients {:?} and {:?} certified", p.reduced_sizes(), s.reduced_sizes());
        }
    }
    let s1 = sphere(1, 3)?;
    let r = tower(&Inclusion::wedge_left(&s1, &s1), 3)?;
    println!("tower of S^1 -> S^1 v S^1 telescopes: {}", r.passed);
    Ok(())
}
