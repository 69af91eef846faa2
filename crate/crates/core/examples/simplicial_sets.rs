//! Build spheres, wedges and smash products, and write one as PSS-JSON.

use symcalc::pss_json;
use symcalc::sset::{cone, smash, sphere, wedge, PointedSimplicialSet};

fn sizes(x: &PointedSimplicialSet) -> Vec<usize> {
    (0..=x.dim_bound()).map(|m| x.reduced_size(m)).collect()
}

fn main() -> symcalc::Result<()> {
    let s1 = sphere(1, 3)?;
    let s2 = sphere(2, 3)?;
    println!("S^1          {:?}", sizes(&s1));
    println!("S^2          {:?}", sizes(&s2));
    println!("S^1 v S^1    {:?}", sizes(&wedge(&s1, &s1)));
    println!("S^1 ^ S^1    {:?}  (dimension {:?})", sizes(&smash(&s1, &s1)), smash(&s1, &s1).geometric_dim());
    println!("cone(S^1)    {:?}", sizes(&cone(&s1).0));
    print!("{}", pss_json::write_string(&sphere(1, 1)?));
    Ok(())
}
