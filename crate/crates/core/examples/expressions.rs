//! Parse and evaluate space expressions the way the command line does.

use symcalc::expr::{parse, Expr};
use symcalc::homology::{format_homology, reduced_homology};

fn main() -> symcalc::Result<()> {
    for text in ["sym(2, sphere(1))", "smash(sphere(1), cone(sphere(0)))", "wedge_left(sphere(1), sphere(2))", "sym(-1, point)"] {
        match parse(text) {
            Ok(Expr::Space(e)) => {
                let x = e.eval(e.dim()?)?;
                println!("{e}: dim {}, {}", e.dim()?, format_homology(&reduced_homology(&x)?));
            }
            Ok(Expr::Inclusion(i)) => {
                let f = i.eval(i.target_dim()?)?;
                println!("{i}: {} -> {} vertices", f.source().level_size(0), f.target().level_size(0));
            }
            Err(err) => println!("{text}: {err}"),
        }
    }
    Ok(())
}
