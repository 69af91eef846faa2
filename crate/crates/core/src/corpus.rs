//! Fixed and seeded corpora used by the verification commands and property suites.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gset::{GSet, Point};
use crate::perm::{EmbeddingSpec, Perm, PermGroup};
use crate::sset::{KeyedSet, Inclusion, PointedSimplicialSet, Simplex, SimplicialMap};

/// Vertex sets of an ordered simplicial complex on `0..v`, each stored sorted.
type Complex = BTreeSet<Vec<u8>>;

fn support(seq: &[u8]) -> Vec<u8> {
    let mut s = seq.to_vec();
    s.dedup();
    s
}

/// Nondecreasing sequences of length `m + 1` through the simplices of `k`.
fn sequences(k: &Complex, m: usize) -> Vec<Vec<u8>> {
    let mut out = BTreeSet::new();
    for simplex in k {
        let d = simplex.len();
        if d > m + 1 {
            continue;
        }
        // Multiplicities c_0..c_{d-1} >= 1 summing to m + 1.
        fn go(simplex: &[u8], k: usize, left: usize, cur: &mut Vec<u8>, out: &mut BTreeSet<Vec<u8>>) {
            if k + 1 == simplex.len() {
                let start = cur.len();
                cur.extend(std::iter::repeat_n(simplex[k], left));
                out.insert(cur.clone());
                cur.truncate(start);
                return;
            }
            for c in 1..=left - (simplex.len() - k - 1) {
                let start = cur.len();
                cur.extend(std::iter::repeat_n(simplex[k], c));
                go(simplex, k + 1, left - c, cur, out);
                cur.truncate(start);
            }
        }
        go(simplex, 0, m + 1, &mut Vec::new(), &mut out);
    }
    out.into_iter().collect()
}

/// The realization of `k/k0` as a pointed simplicial set (requires `k0 ⊂ k`, `k0 ≠ ∅`).
fn relative_set(k: &Complex, k0: &Complex, dim_bound: usize) -> KeyedSet<Vec<u8>> {
    let keys = (0..=dim_bound)
        .map(|m| sequences(k, m).into_iter().filter(|s| !k0.contains(&support(s))).collect())
        .collect();
    let reduce = |s: Vec<u8>| (!k0.contains(&support(&s))).then_some(s);
    let top = k.iter().filter(|s| !k0.contains(*s)).map(|s| s.len() - 1).max().unwrap_or(0);
    let mut keyed = KeyedSet::build(
        dim_bound,
        keys,
        |_, i, s: &Vec<u8>| {
            let mut t = s.clone();
            t.remove(i);
            reduce(t)
        },
        |_, i, s: &Vec<u8>| {
            let mut t = s.clone();
            t.insert(i, s[i]);
            reduce(t)
        },
        Some(top),
    );
    let labels = keyed
        .keys
        .iter()
        .map(|level| {
            std::iter::once("*".to_string())
                .chain(level.iter().map(|s| s.iter().map(|v| v.to_string()).collect()))
                .collect()
        })
        .collect();
    keyed.set = keyed.set.with_labels(labels);
    keyed
}

fn closed_random_subcomplex(rng: &mut impl Rng, k: &Complex, forced: &Complex, p: f64) -> Complex {
    let mut out = forced.clone();
    let mut by_dim: Vec<&Vec<u8>> = k.iter().collect();
    by_dim.sort_by_key(|s| s.len());
    for s in by_dim {
        if out.contains(s) {
            continue;
        }
        let faces_in = s.len() == 1
            || (0..s.len()).all(|i| {
                let mut f = s.clone();
                f.remove(i);
                out.contains(&f)
            });
        if faces_in && rng.gen_bool(p) {
            out.insert(s.clone());
        }
    }
    out
}

/// Bounds for [`random_inclusion`].
#[derive(Clone, Copy, Debug)]
pub struct RandomInclusionSpec {
    pub dim_bound: usize,
    /// Largest number of non-basepoint simplices allowed at any stored level.
    pub max_level_size: usize,
}

impl Default for RandomInclusionSpec {
    fn default() -> Self {
        RandomInclusionSpec {
            dim_bound: 2,
            max_level_size: 8,
        }
    }
}

/// A random inclusion `L/L0 ↪ K/K0` of relative ordered complexes of dimension
/// at most 2 with `L/L0` neither a point nor everything, resampled until every
/// level meets the size bound.
pub fn random_inclusion(rng: &mut impl Rng, spec: RandomInclusionSpec) -> Inclusion {
    loop {
        let v = rng.gen_range(2..=4u8);
        let mut k: Complex = (0..v).map(|a| vec![a]).collect();
        for a in 0..v {
            for b in a + 1..v {
                if rng.gen_bool(0.6) {
                    k.insert(vec![a, b]);
                }
            }
        }
        for a in 0..v {
            for b in a + 1..v {
                for c in b + 1..v {
                    let edges = [vec![a, b], vec![a, c], vec![b, c]];
                    if edges.iter().all(|e| k.contains(e)) && rng.gen_bool(0.8) {
                        k.insert(vec![a, b, c]);
                    }
                }
            }
        }
        let base: Complex = [vec![0u8]].into_iter().collect();
        let (p0, pl) = (rng.gen_range(0.1..0.9), rng.gen_range(0.3..0.9));
        let k0 = if rng.gen_bool(0.5) {
            closed_random_subcomplex(rng, &k, &base, p0)
        } else {
            // Collapse the 1-skeleton on 0, 1, 2 so a triangle there becomes a 2-sphere.
            k.iter().filter(|s| s.len() <= 2 && s.iter().all(|&v| v <= 2)).cloned().collect()
        };
        let l = closed_random_subcomplex(rng, &k, &base, pl);
        let l0: Complex = l.intersection(&k0).cloned().collect();
        let y = relative_set(&k, &k0, spec.dim_bound);
        let too_big = (0..=spec.dim_bound).any(|m| y.set.reduced_size(m) > spec.max_level_size);
        let x = relative_set(&l, &l0, spec.dim_bound);
        let proper = (0..=spec.dim_bound).any(|m| x.set.level_size(m) != y.set.level_size(m));
        if too_big || x.set.is_point() || !proper {
            continue;
        }
        let components = (0..=spec.dim_bound)
            .map(|m| {
                let mut c = vec![0 as Simplex];
                c.extend(x.keys[m].iter().map(|s| y.index_of(m, s).expect("L/L0 sits inside K/K0")));
                c
            })
            .collect();
        let map = SimplicialMap::new(x.set, y.set, components).expect("inclusion of relative complexes");
        return Inclusion::new(map).expect("distinct sequences stay distinct");
    }
}

/// `count` random inclusions from a ChaCha stream seeded with `seed`.
pub fn random_inclusions(seed: u64, count: usize, spec: RandomInclusionSpec) -> Vec<Inclusion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_inclusion(&mut rng, spec)).collect()
}

/// A small corpus of pointed simplicial sets with certified dimension.
pub fn space_corpus(dim_bound: usize) -> Vec<(String, PointedSimplicialSet)> {
    use crate::sset::{cone, point, sphere, suspend, sym_power, wedge};
    let s0 = sphere(0, dim_bound).expect("S^0");
    let mut out = vec![
        ("point".to_string(), point(dim_bound)),
        ("sphere(0)".to_string(), s0.clone()),
        ("wedge(sphere(0), sphere(0))".to_string(), wedge(&s0, &s0)),
        ("sym(2, sphere(0))".to_string(), sym_power(2, &s0)),
    ];
    if dim_bound >= 1 {
        let s1 = sphere(1, dim_bound).expect("S^1");
        out.push(("sphere(1)".into(), s1.clone()));
        out.push(("wedge(sphere(0), sphere(1))".into(), wedge(&s0, &s1)));
        out.push(("wedge(sphere(1), sphere(1))".into(), wedge(&s1, &s1)));
        out.push(("cone(sphere(0))".into(), cone(&s0).0));
        out.push(("susp(sphere(0))".into(), suspend(&s0)));
    }
    if dim_bound >= 2 {
        let s1 = sphere(1, dim_bound).expect("S^1");
        out.push(("sphere(2)".into(), sphere(2, dim_bound).expect("S^2")));
        out.push(("sym(2, sphere(1))".into(), sym_power(2, &s1)));
        out.push(("cone(sphere(1))".into(), cone(&s1).0));
    }
    out
}

/// The subgroup embeddings of the adjunction corpus, paired with their ambient symmetric group.
pub fn embedding_corpus() -> Vec<EmbeddingSpec> {
    vec![
        EmbeddingSpec::Young { a: 1, b: 1 },
        EmbeddingSpec::Young { a: 2, b: 0 },
        EmbeddingSpec::Young { a: 2, b: 1 },
        EmbeddingSpec::Young { a: 1, b: 2 },
        EmbeddingSpec::Young { a: 2, b: 2 },
        EmbeddingSpec::Tail { m: 3, k: 2 },
        EmbeddingSpec::Tail { m: 3, k: 0 },
        EmbeddingSpec::BlockShuffle { p: 2, n: 1 },
        EmbeddingSpec::BlockShuffle { p: 2, n: 2 },
        EmbeddingSpec::ShuffleTail { p: 2, n: 1, m: 3 },
    ]
}

fn parity(p: &Perm) -> bool {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut odd = false;
    for s in 0..n {
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = p.apply(k);
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Building blocks for pointed G-sets: each is one orbit (or a fixed point).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orbit {
    Fixed,
    /// The permutation action on the letters `1..=degree`.
    Letters,
    /// Two points swapped by the odd permutations.
    Sign,
}

/// The disjoint union (wedge) of the given orbits, as a pointed G-set.
pub fn gset_from_orbits(group: &Arc<PermGroup>, orbits: &[Orbit]) -> Result<GSet> {
    let deg = group.degree();
    let mut labels = vec!["*".to_string()];
    let mut tables: Vec<Vec<Point>> = vec![vec![0]; group.generators().len()];
    for (o, orbit) in orbits.iter().enumerate() {
        let start = labels.len() as Point;
        match orbit {
            Orbit::Fixed => {
                labels.push(format!("f{o}"));
                for t in &mut tables {
                    t.push(start);
                }
            }
            Orbit::Letters => {
                labels.extend((1..=deg).map(|k| format!("l{o}.{k}")));
                for (t, g) in tables.iter_mut().zip(group.generators()) {
                    t.extend((0..deg).map(|k| start + g.apply(k) as Point));
                }
            }
            Orbit::Sign => {
                labels.extend([format!("s{o}+"), format!("s{o}-")]);
                for (t, g) in tables.iter_mut().zip(group.generators()) {
                    let flip = parity(g) as Point;
                    t.extend([start + flip, start + 1 - flip]);
                }
            }
        }
    }
    GSet::new(group.clone(), labels, tables)
}

fn orbit_lists(degree: usize, cap: usize) -> Vec<Vec<Orbit>> {
    let size = |o: &Orbit| match o {
        Orbit::Fixed => 1,
        Orbit::Letters => degree,
        Orbit::Sign => 2,
    };
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    while let Some(cur) = frontier.pop() {
        let used: usize = cur.iter().map(size).sum();
        for o in [Orbit::Fixed, Orbit::Letters, Orbit::Sign] {
            // Orbits are listed in nondecreasing order so each multiset appears once.
            if cur.last().is_some_and(|l: &Orbit| (*l as u8) > (o as u8)) || used + size(&o) > cap {
                continue;
            }
            let mut next = cur.clone();
            next.push(o);
            out.push(next.clone());
            frontier.push(next);
        }
    }
    out.sort_by_key(|l| (l.len(), l.iter().map(|o| *o as u8).collect::<Vec<_>>()));
    out
}

/// One adjunction test case: `G`, an `H`-set `X` and a `G`-set `Y`.
#[derive(Clone, Debug)]
pub struct AdjunctionCase {
    pub embedding: EmbeddingSpec,
    pub x_orbits: Vec<Orbit>,
    pub y_orbits: Vec<Orbit>,
    pub g: Arc<PermGroup>,
    pub x: GSet,
    pub y: GSet,
}

fn case(e: &EmbeddingSpec, xo: &[Orbit], yo: &[Orbit]) -> Result<AdjunctionCase> {
    let g = Arc::new(PermGroup::symmetric(e.ambient_degree())?);
    let h = Arc::new(e.group()?);
    Ok(AdjunctionCase {
        embedding: e.clone(),
        x_orbits: xo.to_vec(),
        y_orbits: yo.to_vec(),
        x: gset_from_orbits(&h, xo)?,
        y: gset_from_orbits(&g, yo)?,
        g,
    })
}

/// Every embedding of [`embedding_corpus`] against all orbit combinations with at
/// most `cap` non-base points on each side.
pub fn adjunction_corpus(cap: usize) -> Result<Vec<AdjunctionCase>> {
    let mut out = Vec::new();
    for e in embedding_corpus() {
        let lists = orbit_lists(e.ambient_degree(), cap);
        for xo in &lists {
            for yo in &lists {
                out.push(case(&e, xo, yo)?);
            }
        }
    }
    Ok(out)
}

/// `count` cases drawn from the same families with a ChaCha stream seeded by `seed`.
pub fn random_adjunction_cases(seed: u64, count: usize, cap: usize) -> Result<Vec<AdjunctionCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let embeddings = embedding_corpus();
    let mut out = Vec::new();
    for _ in 0..count {
        let e = &embeddings[rng.gen_range(0..embeddings.len())];
        let lists = orbit_lists(e.ambient_degree(), cap);
        let xo = &lists[rng.gen_range(0..lists.len())];
        let yo = &lists[rng.gen_range(0..lists.len())];
        out.push(case(e, xo, yo)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{euler, euler_from_homology, reduced_homology};

    #[test]
    fn random_inclusions_respect_bounds() {
        let spec = RandomInclusionSpec::default();
        for f in random_inclusions(7, 30, spec) {
            let y = f.target();
            y.validate().unwrap();
            f.source().validate().unwrap();
            assert!(y.geometric_dim().unwrap() <= 2);
            assert!((0..=2).all(|m| y.reduced_size(m) <= 8));
            let h = reduced_homology(y).unwrap();
            assert_eq!(euler(y).unwrap(), euler_from_homology(&h));
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let spec = RandomInclusionSpec::default();
        let a = random_inclusions(3, 5, spec);
        let b = random_inclusions(3, 5, spec);
        assert_eq!(a, b);
    }

    #[test]
    fn relative_triangle_is_a_two_sphere() {
        let k: Complex = [vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]
            .into_iter()
            .collect();
        let k0: Complex = k.iter().filter(|s| s.len() < 3).cloned().collect();
        let s = relative_set(&k, &k0, 3);
        assert_eq!((0..=3).map(|m| s.set.reduced_size(m)).collect::<Vec<_>>(), vec![0, 0, 1, 3]);
        assert_eq!(euler(&s.set).unwrap(), 1);
    }

    #[test]
    fn orbit_gsets() {
        let g = Arc::new(PermGroup::symmetric(3).unwrap());
        let y = gset_from_orbits(&g, &[Orbit::Fixed, Orbit::Letters]).unwrap();
        assert_eq!(y.reduced_size(), 4);
        assert_eq!(y.orbits().len(), 3);
        let s = gset_from_orbits(&g, &[Orbit::Sign]).unwrap();
        assert_eq!(s.orbits().len(), 2);
        assert_eq!(orbit_lists(2, 2).len(), 5);
    }
}
