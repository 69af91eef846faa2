//! Slices of free symmetric spectra and of their symmetric squares.

use symcalc::symseq::{free_spectrum, slice_check, sym_slice_check, FreeSpectrumSpec};

fn main() -> symcalc::Result<()> {
    let spec = FreeSpectrumSpec { n: 1, a: 2, t: 1 };
    let f = free_spectrum(spec, 5)?;
    println!("F_1(A) reduced level sizes: {:?}", f.seq.reduced_sizes());
    for m in 1..=5 {
        let c = slice_check(spec, m)?;
        println!("  level {m}: {} points, formula predicts {}", c.reduced_size, c.expected_size);
    }
    for m in 2..=4 {
        let c = sym_slice_check(2, FreeSpectrumSpec { n: 1, a: 2, t: 1 }, m)?;
        println!("Sym^2 F_1(A) level {m}: {} points, fibers {:?}, orbits: {}", c.sym_reduced_size, c.fiber_sizes, c.fibers_are_orbits);
    }
    Ok(())
}
