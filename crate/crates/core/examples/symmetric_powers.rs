//! Symmetric powers of spheres: odd spheres vanish, Sym^2 S^2 is a 4-sphere in homology.

use symcalc::homology::{format_homology, reduced_homology};
use symcalc::sset::{sphere, sym_power};

fn main() -> symcalc::Result<()> {
    for (k, n) in [(1, 2), (1, 3), (2, 2), (0, 3)] {
        let x = sym_power(n, &sphere(k, n * k.max(1))?);
        let h = reduced_homology(&x)?;
        println!("Sym^{n} S^{k}: {}", format_homology(&h).replace('\n', ", "));
    }
    Ok(())
}
