//! Corestriction, restriction and their adjunction for Σ_2 × Σ_1 ⊂ Σ_3.

use std::sync::Arc;

use symcalc::corpus::{gset_from_orbits, Orbit};
use symcalc::gset::{adjunction_check, cor, res};
use symcalc::perm::{EmbeddingSpec, PermGroup};

fn main() -> symcalc::Result<()> {
    let g = Arc::new(PermGroup::symmetric(3)?);
    let h = Arc::new(EmbeddingSpec::Young { a: 2, b: 1 }.group()?);
    let x = gset_from_orbits(&h, &[Orbit::Fixed, Orbit::Sign])?;
    let induced = cor(&g, &x)?;
    println!("|cor X| = {} = [G:H]·|X| = {}·{}", induced.gset.reduced_size(), g.order() / h.order(), x.reduced_size());
    println!("cor X labels: {:?}", induced.gset.labels());
    let y = gset_from_orbits(&g, &[Orbit::Letters])?;
    println!("res Y has {} orbits under H", res(&h, &y)?.orbits().len() - 1);
    let r = adjunction_check(&g, &x, &y)?;
    println!("Hom(cor X, Y) = {}, Hom(X, res Y) = {}, bijective: {}", r.hom_cor_count, r.hom_res_count, r.passed);
    Ok(())
}
