//! Invariants checked on seeded random inclusions and on the fixed space corpus.

use proptest::prelude::*;

use symcalc::corpus::{random_inclusions, space_corpus, RandomInclusionSpec};
use symcalc::cube::{box_generic_level, box_stage};
use symcalc::expr::parse_space;
use symcalc::homology::{euler, euler_from_homology, is_acyclic, normalized_chains, reduced_homology};
use symcalc::sset::{cone, quotient_by_subobject, suspend, sym_power};
use symcalc::zeta::zeta;

fn one(seed: u64) -> symcalc::sset::Inclusion {
    random_inclusions(seed, 1, RandomInclusionSpec::default()).pop().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn union_matches_generic_colimit(seed in any::<u64>(), n in 1usize..=3) {
        let f = one(seed);
        for i in 0..=n {
            let stage = box_stage(&f, n, i).unwrap();
            for m in 0..=f.target().dim_bound() {
                let generic = box_generic_level(&f, n, i, m).unwrap();
                prop_assert_eq!(&generic, &stage.keyed.keys[m]);
            }
        }
    }

    #[test]
    fn stages_increase(seed in any::<u64>(), n in 1usize..=3) {
        let f = one(seed);
        for i in 0..n {
            let (a, b) = (box_stage(&f, n, i).unwrap(), box_stage(&f, n, i + 1).unwrap());
            for m in 0..=f.target().dim_bound() {
                prop_assert!(a.keyed.keys[m].iter().all(|t| b.keyed.keys[m].binary_search(t).is_ok()));
            }
        }
    }

    #[test]
    fn euler_two_ways_on_random_sets(seed in any::<u64>()) {
        let f = one(seed);
        let (z, _) = quotient_by_subobject(&f);
        for x in [f.source(), f.target(), &z] {
            let h = reduced_homology(x).unwrap();
            prop_assert_eq!(euler(x).unwrap(), euler_from_homology(&h));
        }
        // χ̃ is additive along the cofiber sequence X -> Y -> Y/X.
        prop_assert_eq!(euler(f.target()).unwrap(), euler(f.source()).unwrap() + euler(&z).unwrap());
    }
}

#[test]
fn boundary_squares_to_zero_on_corpus() {
    for (name, x) in space_corpus(3) {
        let c = normalized_chains(&x, None).unwrap();
        c.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn suspension_shifts_homology() {
    for (name, x) in space_corpus(3) {
        if x.geometric_dim().unwrap() >= 3 {
            continue;
        }
        let h = reduced_homology(&x).unwrap();
        let hs = reduced_homology(&suspend(&x)).unwrap();
        for (k, g) in &h {
            let shifted = hs.get(&(k + 1)).cloned().unwrap_or_default();
            assert_eq!(&shifted, g, "{name}: degree {k}");
        }
        assert!(hs.get(&0).is_none_or(|g| g.is_zero()), "{name}");
    }
}

#[test]
fn symmetric_powers_of_cones_are_acyclic() {
    for text in ["sphere(0)", "sphere(1)", "wedge(sphere(0), sphere(1))", "point"] {
        let e = parse_space(text).unwrap();
        let d = e.dim().unwrap() + 1;
        for n in 1..=3 {
            let c = cone(&e.eval(n * d).unwrap()).0;
            let s = sym_power(n, &c);
            assert!(is_acyclic(&reduced_homology(&s).unwrap()), "Sym^{n} cone({text})");
        }
    }
}

#[test]
fn zeta_depends_only_on_homology() {
    let groups = [
        vec!["sphere(1)", "susp(sphere(0))"],
        vec!["point", "cone(sphere(1))", "sym(2, sphere(1))"],
        vec!["sphere(2)", "susp(sphere(1))", "smash(sphere(1), sphere(1))"],
    ];
    let order = 3;
    for group in groups {
        let series: Vec<_> = group
            .iter()
            .map(|t| {
                let e = parse_space(t).unwrap();
                zeta(&e.eval(order * e.dim().unwrap()).unwrap(), order).unwrap().series
            })
            .collect();
        assert!(series.windows(2).all(|w| w[0] == w[1]), "{group:?}: {series:?}");
    }
}
