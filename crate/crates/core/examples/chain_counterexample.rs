//! The acyclic complex Z -> Z whose naive symmetric square has Z/2 in degree -2.

use symcalc::chain_sym::{contrast_report, identity_cone, sym_naive};
use symcalc::homology::format_homology;

fn main() -> symcalc::Result<()> {
    let x = identity_cone(-1);
    let r = contrast_report(&x)?;
    println!("input homology:   {}", format_homology(&r.input_homology));
    println!("Sym^2 homology:   {}", format_homology(&r.sym2_homology));
    for lo in [0, 1] {
        let h = sym_naive(2, &identity_cone(lo))?.homology()?;
        println!("shifted to ({lo}, {}): {}", lo + 1, format_homology(&h));
    }
    let h3 = sym_naive(3, &x)?.homology()?;
    println!("Sym^3 homology:   {}", format_homology(&h3));
    Ok(())
}
