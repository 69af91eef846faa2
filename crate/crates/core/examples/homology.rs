//! Reduced integral homology and Euler characteristics of a few spaces.

use symcalc::corpus::space_corpus;
use symcalc::homology::{euler, format_homology, reduced_homology};

fn main() -> symcalc::Result<()> {
    for (name, x) in space_corpus(3) {
        let h = reduced_homology(&x)?;
        println!("{name:32} χ̃ = {:2}   {}", euler(&x)?, format_homology(&h).replace('\n', ", "));
    }
    Ok(())
}
