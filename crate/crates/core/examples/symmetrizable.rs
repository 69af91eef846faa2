//! Injectivity of tilde-Box^n_{n-1}(f) -> Sym^n Y on seeded random inclusions.

use symcalc::corpus::{random_inclusions, RandomInclusionSpec};
use symcalc::cube::symmetrizable_check;

fn main() -> symcalc::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    for (k, f) in random_inclusions(seed, 10, RandomInclusionSpec::default()).iter().enumerate() {
        let flags = (1..=3)
            .map(|n| symmetrizable_check(f, n).map(|r| r.injective))
            .collect::<symcalc::Result<Vec<_>>>()?;
        let y = f.target();
        println!("#{k}: Y sizes {:?}, injective for n = 1, 2, 3: {flags:?}", (0..=2).map(|m| y.reduced_size(m)).collect::<Vec<_>>());
    }
    Ok(())
}
