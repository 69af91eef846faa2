//! Zeta-functions: rationality, multiplicativity along cofibers, suspension inverse.

use symcalc::series::binomial_neg;
use symcalc::sset::{sphere, wedge, Inclusion};
use symcalc::zeta::{macdonald_check, multiplicativity_check, suspension_inverse_check, zeta};

fn main() -> symcalc::Result<()> {
    let s1 = sphere(1, 4)?;
    let w = wedge(&s1, &s1);
    println!("ζ_(S^1 v S^1) = {}", zeta(&w, 4)?.series);
    println!("(1 - t)^2     = {}", binomial_neg(-2, 4));
    println!("MacDonald on S^2: {}", macdonald_check(&sphere(2, 6)?, 3)?.passed);
    let s2 = sphere(2, 6)?;
    let r = multiplicativity_check(&Inclusion::wedge_left(&s2, &s2), 3)?;
    println!("ζ_Y = {} = ζ_X·ζ_Z = {}", r.zeta_y.series, r.product);
    let r = suspension_inverse_check(&sphere(0, 3)?, 3)?;
    println!("ζ_ΣS^0 · ζ_S^0 = {}", r.product);
    Ok(())
}
