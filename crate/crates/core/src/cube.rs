//! The cube filtration of `Y^∧n` induced by an inclusion `f: X -> Y`.
//!
//! For injective `f` every vertex `ε ∈ {0,1}^n` of the cube contributes the
//! subset `Π_k (ε_k = 0 ? X : Y)` of `Y^∧n`, and these subsets are closed under
//! pairwise intersection. The colimit over the vertices of weight `<= i` is
//! therefore their union: the tuples with at most `i` coordinates outside the
//! image of `X`. [`box_generic_level`] computes the same colimit the long way
//! (disjoint union modulo the diagram maps) so the shortcut can be spot-checked.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{cert_err, Error, Result};
use crate::gset::{cor, orbit_quotient, GSet, Point, UnionFind};
use crate::homology::{euler, is_acyclic, reduced_homology};
use crate::perm::{EmbeddingSpec, PermGroup};
use crate::sset::{
    quotient_keyed, smash_keyed, sym_power, sym_power_keyed, Inclusion, KeyedSet, PointedSimplicialSet, Simplex,
    SimplicialMap,
};

/// Image-of-`X` masks for every level of `Y`.
fn image_masks(f: &Inclusion) -> Vec<Vec<bool>> {
    let y = f.target();
    (0..=y.dim_bound())
        .map(|m| {
            let mut mask = vec![false; y.level_size(m)];
            for &a in &f.map().components[m] {
                mask[a as usize] = true;
            }
            mask
        })
        .collect()
}

fn outside(mask: &[bool], t: &[Simplex]) -> usize {
    t.iter().filter(|&&a| !mask[a as usize]).count()
}

fn tuple_face(y: &PointedSimplicialSet, m: usize, i: usize, t: &[Simplex]) -> Option<Vec<Simplex>> {
    t.iter()
        .map(|&a| {
            let r = y.face(m, i, a);
            (r != y.basepoint(m - 1)).then_some(r)
        })
        .collect()
}

fn tuple_degeneracy(y: &PointedSimplicialSet, m: usize, i: usize, t: &[Simplex]) -> Vec<Simplex> {
    t.iter().map(|&a| y.degeneracy(m, i, a)).collect()
}

fn tuples(elems: &[Simplex], n: usize) -> Vec<Vec<Simplex>> {
    let mut out: Vec<Vec<Simplex>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                elems.iter().map(move |&a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// One stage `Box^n_i(f)` of the plain filtration, keyed by tuples of simplices of `Y`.
#[derive(Clone, Debug)]
pub struct BoxStage {
    pub n: usize,
    pub i: usize,
    pub keyed: KeyedSet<Vec<Simplex>>,
}

fn check_stage(n: usize, i: usize) -> Result<()> {
    if i > n {
        return Err(Error::Invalid(format!("stage {i} exceeds cube dimension {n}")));
    }
    Ok(())
}

fn stage_keys(f: &Inclusion, n: usize, i: usize, sorted: bool, exact: bool) -> Vec<Vec<Vec<Simplex>>> {
    let y = f.target();
    let masks = image_masks(f);
    (0..=y.dim_bound())
        .map(|m| {
            let elems: Vec<Simplex> = y.non_base(m).collect();
            let all = if sorted { crate::sset::multisets(&elems, n) } else { tuples(&elems, n) };
            all.into_iter()
                .filter(|t| {
                    let k = outside(&masks[m], t);
                    if exact {
                        k == i
                    } else {
                        k <= i
                    }
                })
                .collect()
        })
        .collect()
}

fn geometric_bound(f: &Inclusion, n: usize) -> Option<usize> {
    if n == 0 {
        Some(0)
    } else {
        f.target().geometric_dim().map(|d| d * n)
    }
}

/// `Box^n_i(f)`: the union of the cube vertices of weight at most `i` inside `Y^∧n`.
pub fn box_stage(f: &Inclusion, n: usize, i: usize) -> Result<BoxStage> {
    check_stage(n, i)?;
    let y = f.target();
    let keyed = KeyedSet::build(
        y.dim_bound(),
        stage_keys(f, n, i, false, false),
        |m, k, t: &Vec<Simplex>| tuple_face(y, m, k, t),
        |m, k, t: &Vec<Simplex>| Some(tuple_degeneracy(y, m, k, t)),
        geometric_bound(f, n),
    );
    Ok(BoxStage { n, i, keyed })
}

/// `tilde-Box^n_i(f)`, the `Σ_n`-orbit quotient of `Box^n_i(f)`, keyed by sorted tuples,
/// with the projection from the plain stage.
pub fn tilde_box(f: &Inclusion, n: usize, i: usize) -> Result<(KeyedSet<Vec<Simplex>>, SimplicialMap)> {
    let plain = box_stage(f, n, i)?;
    let sym = tilde_box_keyed(f, n, i)?;
    let components = (0..=plain.keyed.set.dim_bound())
        .map(|m| {
            std::iter::once(0)
                .chain(plain.keyed.keys[m].iter().map(|t| {
                    let mut s = t.clone();
                    s.sort_unstable();
                    sym.index_of(m, &s).expect("sorted box tuple lies in the symmetrized stage")
                }))
                .collect()
        })
        .collect();
    let proj = SimplicialMap::new(plain.keyed.set, sym.set.clone(), components)?;
    Ok((sym, proj))
}

fn tilde_box_keyed(f: &Inclusion, n: usize, i: usize) -> Result<KeyedSet<Vec<Simplex>>> {
    check_stage(n, i)?;
    let y = f.target();
    Ok(KeyedSet::build(
        y.dim_bound(),
        stage_keys(f, n, i, true, false),
        |m, k, t: &Vec<Simplex>| {
            let mut r = tuple_face(y, m, k, t)?;
            r.sort_unstable();
            Some(r)
        },
        |m, k, t: &Vec<Simplex>| {
            let mut r = tuple_degeneracy(y, m, k, t);
            r.sort_unstable();
            Some(r)
        },
        geometric_bound(f, n),
    ))
}

/// Computes the level-`m` colimit of the weight-`<= i` part of the cube diagram as a
/// disjoint union modulo the diagram maps, and returns the image of each class in
/// `Y^∧n` (sorted). Fails if two classes land on the same tuple or one class on two.
pub fn box_generic_level(f: &Inclusion, n: usize, i: usize, m: usize) -> Result<Vec<Vec<Simplex>>> {
    check_stage(n, i)?;
    let x = f.source();
    let y = f.target();
    let xs: Vec<Simplex> = x.non_base(m).collect();
    let ys: Vec<Simplex> = y.non_base(m).collect();
    // Enumerate (vertex, tuple) pairs; coordinates are X-indices where ε_k = 0 and Y-indices where ε_k = 1.
    let mut nodes: Vec<(u32, Vec<Simplex>)> = Vec::new();
    let mut index: HashMap<(u32, Vec<Simplex>), usize> = HashMap::new();
    for eps in 0u32..(1 << n) {
        if eps.count_ones() as usize > i {
            continue;
        }
        let choices: Vec<&[Simplex]> = (0..n).map(|k| if eps >> k & 1 == 1 { &ys[..] } else { &xs[..] }).collect();
        let mut acc: Vec<Vec<Simplex>> = vec![Vec::new()];
        for c in choices {
            acc = acc
                .into_iter()
                .flat_map(|t| {
                    c.iter().map(move |&a| {
                        let mut t = t.clone();
                        t.push(a);
                        t
                    })
                })
                .collect();
        }
        for t in acc {
            index.insert((eps, t.clone()), nodes.len());
            nodes.push((eps, t));
        }
    }
    let mut uf = UnionFind::new(nodes.len());
    for (id, (eps, t)) in nodes.iter().enumerate() {
        for k in 0..n {
            if eps >> k & 1 == 0 && (eps | 1 << k).count_ones() as usize <= i {
                let mut u = t.clone();
                u[k] = f.map().apply(m, t[k]);
                let target = index[&(eps | 1 << k, u)];
                uf.union(id, target);
            }
        }
    }
    let q = uf.quotient();
    let full_image = |(eps, t): &(u32, Vec<Simplex>)| -> Vec<Simplex> {
        t.iter()
            .enumerate()
            .map(|(k, &a)| if eps >> k & 1 == 1 { a } else { f.map().apply(m, a) })
            .collect()
    };
    let mut class_image: Vec<Option<Vec<Simplex>>> = vec![None; q.len()];
    for (id, node) in nodes.iter().enumerate() {
        let img = full_image(node);
        let c = q.projection[id] as usize;
        match &class_image[c] {
            None => class_image[c] = Some(img),
            Some(prev) if *prev != img => {
                return Err(cert_err(format!("level {m}"), "one colimit class maps to two tuples"));
            }
            _ => {}
        }
    }
    let mut images: Vec<Vec<Simplex>> = class_image.into_iter().map(Option::unwrap).collect();
    let count = images.len();
    images.sort();
    images.dedup();
    if images.len() != count {
        return Err(cert_err(format!("level {m}"), "two colimit classes map to the same tuple"));
    }
    Ok(images)
}

/// Coordinate-permutation action of the adjacent transpositions of `Σ_n` on a
/// keyed set of tuples (sorted keys when `sorted`), per level and generator.
fn coordinate_action(keyed: &KeyedSet<Vec<Simplex>>, n: usize) -> Vec<Vec<Vec<Simplex>>> {
    (0..=keyed.set.dim_bound())
        .map(|m| {
            (0..n.saturating_sub(1))
                .map(|g| {
                    std::iter::once(0)
                        .chain(keyed.keys[m].iter().map(|t| {
                            let mut s = t.clone();
                            s.swap(g, g + 1);
                            keyed.index_of(m, &s).expect("stage is Σ_n-stable")
                        }))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Per-level witness of a verified bijection.
#[derive(Clone, Debug, Serialize)]
pub struct LevelWitness {
    pub level: usize,
    pub reduced_size: usize,
    /// `table[x]` is the image of simplex `x` of the formula side.
    pub table: Vec<Simplex>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientCertificate {
    pub kind: &'static str,
    pub n: usize,
    pub i: usize,
    pub levels: Vec<LevelWitness>,
    pub generators_checked: usize,
    pub fingerprint_match: bool,
}

impl QuotientCertificate {
    pub fn reduced_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.reduced_size).collect()
    }
}

type Actions<'a> = Option<(&'a [Vec<Vec<Simplex>>], &'a [Vec<Vec<Simplex>>])>;

/// Checks that `map: a -> b` is a levelwise bijection commuting with all faces,
/// degeneracies and (when given) the generator actions on both sides; then
/// transports the structure of `a` along `map` and compares digests with `b`.
fn verify_simplicial_bijection(
    a: &PointedSimplicialSet,
    b: &PointedSimplicialSet,
    map: &[Vec<Simplex>],
    actions: Actions<'_>,
    location: &str,
) -> Result<(Vec<LevelWitness>, bool)> {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};
    if a.dim_bound() != b.dim_bound() {
        return Err(cert_err(location, "dimension bounds differ"));
    }
    let mut witnesses = Vec::new();
    let (mut ha, mut hb) = (DefaultHasher::new(), DefaultHasher::new());
    for m in 0..=a.dim_bound() {
        let loc = format!("{location}, level {m}");
        if a.level_size(m) != b.level_size(m) {
            return Err(cert_err(loc, format!("sizes {} vs {}", a.reduced_size(m), b.reduced_size(m))));
        }
        let tm = &map[m];
        if tm[a.basepoint(m) as usize] != b.basepoint(m) {
            return Err(cert_err(loc, "basepoint not preserved"));
        }
        let mut inv = vec![u32::MAX; b.level_size(m)];
        for (x, &y) in tm.iter().enumerate() {
            if inv[y as usize] != u32::MAX {
                return Err(cert_err(loc, format!("simplex {} is hit twice", b.label(m, y))));
            }
            inv[y as usize] = x as Simplex;
        }
        for x in 0..a.level_size(m) as Simplex {
            if m > 0 {
                for i in 0..=m {
                    if map[m - 1][a.face(m, i, x) as usize] != b.face(m, i, tm[x as usize]) {
                        return Err(cert_err(loc, format!("d_{i} does not commute at {}", a.label(m, x))));
                    }
                }
            }
            if m < a.dim_bound() {
                for i in 0..=m {
                    if map[m + 1][a.degeneracy(m, i, x) as usize] != b.degeneracy(m, i, tm[x as usize]) {
                        return Err(cert_err(loc, format!("s_{i} does not commute at {}", a.label(m, x))));
                    }
                }
            }
            if let Some((acts_a, acts_b)) = actions {
                for (g, (ta, tb)) in acts_a[m].iter().zip(&acts_b[m]).enumerate() {
                    if tm[ta[x as usize] as usize] != tb[tm[x as usize] as usize] {
                        return Err(cert_err(loc, format!("generator {g} does not commute at {}", a.label(m, x))));
                    }
                }
            }
        }
        // Transport faces of `a` to `b`'s indexing and hash both.
        if m > 0 {
            for i in 0..=m {
                let mut moved = vec![0; b.level_size(m)];
                for x in 0..a.level_size(m) {
                    moved[tm[x] as usize] = map[m - 1][a.face(m, i, x as Simplex) as usize];
                }
                moved.hash(&mut ha);
                (0..b.level_size(m) as Simplex).map(|y| b.face(m, i, y)).collect::<Vec<_>>().hash(&mut hb);
            }
        }
        witnesses.push(LevelWitness {
            level: m,
            reduced_size: a.reduced_size(m),
            table: tm.clone(),
        });
    }
    Ok((witnesses, ha.finish() == hb.finish()))
}

/// The quotient `stage_i / stage_{i-1}` of two nested keyed stages, keyed by the
/// tuples of `stage_i` that are not in `stage_{i-1}`.
fn stage_quotient(
    lower: &KeyedSet<Vec<Simplex>>,
    upper: &KeyedSet<Vec<Simplex>>,
) -> Result<(KeyedSet<Vec<Simplex>>, SimplicialMap)> {
    let components = (0..=upper.set.dim_bound())
        .map(|m| {
            std::iter::once(0)
                .chain(lower.keys[m].iter().map(|t| upper.index_of(m, t).expect("stages are nested")))
                .collect()
        })
        .collect();
    let incl = Inclusion::new(SimplicialMap::new(lower.set.clone(), upper.set.clone(), components)?)?;
    let (q, proj) = quotient_keyed(&incl);
    // Re-key the quotient by tuples instead of upper-stage indices.
    let keys: Vec<Vec<Vec<Simplex>>> = q
        .keys
        .iter()
        .enumerate()
        .map(|(m, level)| level.iter().map(|&a| upper.key(m, a).unwrap().clone()).collect())
        .collect();
    let rekeyed = KeyedSet { set: q.set, keys };
    debug_assert!(rekeyed.keys.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
    Ok((rekeyed, proj))
}

/// The formula side of the plain Künneth quotient,
/// `cor^{Σ_n}_{Σ_{n-i} × Σ_i}(X^∧(n-i) ∧ Z^∧i)`, built level by level as a pointed
/// simplicial set with its `Σ_n` action. Also returns, per level, the class of each
/// `(g, tuple)` pair and the representative pairs.
struct CorSide {
    set: PointedSimplicialSet,
    actions: Vec<Vec<Vec<Simplex>>>,
    /// Per level: representatives `(g, tuple)` in class order (class 0 is the basepoint).
    reps: Vec<Vec<(usize, Vec<Simplex>)>>,
    /// Per level: tuple lookup and pair classes for well-definedness checks.
    tuples: Vec<Vec<Vec<Simplex>>>,
    classes: Vec<Vec<Simplex>>,
}

fn cor_side(
    x: &PointedSimplicialSet,
    z: &PointedSimplicialSet,
    n: usize,
    i: usize,
    g: &Arc<PermGroup>,
) -> Result<CorSide> {
    let h = Arc::new(EmbeddingSpec::Young { a: n - i, b: i }.group()?);
    let top = x.dim_bound();
    let block = |m: usize| -> Vec<Vec<Simplex>> {
        let xs: Vec<Simplex> = x.non_base(m).collect();
        let zs: Vec<Simplex> = z.non_base(m).collect();
        let mut acc = tuples(&xs, n - i);
        acc = acc
            .into_iter()
            .flat_map(|t| {
                tuples(&zs, i).into_iter().map(move |u| {
                    let mut t = t.clone();
                    t.extend(u);
                    t
                })
            })
            .collect();
        acc
    };
    let mut per_level_tuples = Vec::new();
    let mut induced = Vec::new();
    for m in 0..=top {
        let ts = block(m);
        let lookup: HashMap<&Vec<Simplex>, Point> = ts.iter().enumerate().map(|(k, t)| (t, k as Point + 1)).collect();
        let gen_action = h
            .generators()
            .iter()
            .map(|p| std::iter::once(0).chain(ts.iter().map(|t| lookup[&p.permute(t)])).collect())
            .collect();
        let labels = std::iter::once("*".to_string()).chain(ts.iter().map(|t| format!("{t:?}"))).collect();
        let hset = GSet::new_unchecked(h.clone(), labels, gen_action);
        induced.push(cor(g, &hset)?);
        per_level_tuples.push(ts);
    }
    // Structure maps on classes, computed on representatives.
    let tuple_index = |m: usize, t: &Vec<Simplex>| -> Point {
        per_level_tuples[m].binary_search(t).map(|p| p as Point + 1).expect("tuple in block")
    };
    let x_or_z = |k: usize| if k < n - i { x } else { z };
    let face_tuple = |m: usize, j: usize, t: &Vec<Simplex>| -> Option<Vec<Simplex>> {
        t.iter()
            .enumerate()
            .map(|(k, &a)| {
                let s = x_or_z(k);
                let r = s.face(m, j, a);
                (r != s.basepoint(m - 1)).then_some(r)
            })
            .collect()
    };
    let degen_tuple = |m: usize, j: usize, t: &Vec<Simplex>| -> Vec<Simplex> {
        t.iter().enumerate().map(|(k, &a)| x_or_z(k).degeneracy(m, j, a)).collect()
    };
    let rep_tuple = |m: usize, c: usize| -> (usize, Vec<Simplex>) {
        let (e, p) = induced[m].reps[c];
        if p == 0 {
            return (0, Vec::new());
        }
        (e, per_level_tuples[m][p as usize - 1].clone())
    };
    let sizes: Vec<usize> = induced.iter().map(|ind| ind.gset.size()).collect();
    let mut faces = vec![Vec::new()];
    for m in 1..=top {
        let mut lvl = Vec::new();
        for j in 0..=m {
            let mut table = vec![0];
            for c in 1..sizes[m] {
                let (e, t) = rep_tuple(m, c);
                table.push(match face_tuple(m, j, &t) {
                    None => 0,
                    Some(ft) => induced[m - 1].class(e, tuple_index(m - 1, &ft)),
                });
            }
            lvl.push(table);
        }
        faces.push(lvl);
    }
    let mut degeneracies = Vec::new();
    for m in 0..top {
        let mut lvl = Vec::new();
        for j in 0..=m {
            let mut table = vec![0];
            for c in 1..sizes[m] {
                let (e, t) = rep_tuple(m, c);
                table.push(induced[m + 1].class(e, tuple_index(m + 1, &degen_tuple(m, j, &t))));
            }
            lvl.push(table);
        }
        degeneracies.push(lvl);
    }
    let bound = match (x.geometric_dim(), z.geometric_dim()) {
        (Some(a), Some(b)) => Some(a * (n - i) + b * i),
        _ => None,
    };
    let set = PointedSimplicialSet::from_tables(top, sizes.clone(), vec![0; top + 1], faces, degeneracies, None, None)?
        .with_geometric_bound(bound);
    let actions = induced
        .iter()
        .map(|ind| (0..g.generators().len()).map(|s| ind.gset.gen_table(s).to_vec()).collect())
        .collect();
    let reps = (0..=top).map(|m| (0..sizes[m]).map(|c| rep_tuple(m, c)).collect()).collect();
    let classes = induced.iter().map(|ind| ind.class_of.clone()).collect();
    Ok(CorSide {
        set,
        actions,
        reps,
        tuples: per_level_tuples,
        classes,
    })
}

fn z_of(f: &Inclusion) -> KeyedSet<Simplex> {
    quotient_keyed(f).0
}

/// Certifies `Box^n_i / Box^n_{i-1} ≅ cor^{Σ_n}_{Σ_{n-i}×Σ_i}(X^∧(n-i) ∧ Z^∧i)` with an
/// explicit bijection `[g, (x, z)] ↦ g·(f(x), z)` checked against faces, degeneracies
/// and the `Σ_n` generators.
pub fn kunneth_quotient_certificate(f: &Inclusion, n: usize, i: usize) -> Result<QuotientCertificate> {
    if i == 0 || i > n {
        return Err(Error::Invalid(format!("quotient index {i} outside 1..={n}")));
    }
    let zk = z_of(f);
    let z = &zk.set;
    let g = Arc::new(PermGroup::symmetric(n)?);
    let lower = box_stage(f, n, i - 1)?;
    let upper = box_stage(f, n, i)?;
    let (quot, _) = stage_quotient(&lower.keyed, &upper.keyed)?;
    let quot_actions = coordinate_action(&quot, n);
    let formula = cor_side(f.source(), z, n, i, &g)?;
    let location = format!("plain Künneth quotient n={n} i={i}");
    let embed = |m: usize, t: &[Simplex]| -> Vec<Simplex> {
        t.iter()
            .enumerate()
            .map(|(k, &a)| if k < n - i { f.map().apply(m, a) } else { *zk.key(m, a).unwrap() })
            .collect()
    };
    let mut map = Vec::new();
    for m in 0..=formula.set.dim_bound() {
        let mut table = vec![0];
        for c in 1..formula.set.level_size(m) {
            let (e, t) = &formula.reps[m][c];
            let img = g.elements()[*e].permute(&embed(m, t));
            let idx = quot
                .index_of(m, &img)
                .ok_or_else(|| cert_err(format!("{location}, level {m}"), format!("{img:?} is not in the quotient")))?;
            table.push(idx);
        }
        // Well-definedness: every pair in a class has the same image.
        let ts = &formula.tuples[m];
        let width = ts.len() + 1;
        for e in 0..g.order() {
            for (k, t) in ts.iter().enumerate() {
                let c = formula.classes[m][e * width + k + 1] as usize;
                let img = g.elements()[e].permute(&embed(m, t));
                if quot.index_of(m, &img) != Some(table[c]) {
                    return Err(cert_err(format!("{location}, level {m}"), "map depends on the class representative"));
                }
            }
        }
        map.push(table);
    }
    let (levels, fingerprint_match) = verify_simplicial_bijection(
        &formula.set,
        &quot.set,
        &map,
        Some((&formula.actions, &quot_actions)),
        &location,
    )?;
    if !fingerprint_match {
        return Err(cert_err(location, "independent fingerprint re-check failed"));
    }
    Ok(QuotientCertificate {
        kind: "plain",
        n,
        i,
        levels,
        generators_checked: g.generators().len(),
        fingerprint_match,
    })
}

/// Certifies `tilde-Box^n_i / tilde-Box^n_{i-1} ≅ Sym^{n-i}X ∧ Sym^i Z` via
/// `(a, b) ↦ sort(f(a) ++ b)`.
pub fn sym_kunneth_certificate(f: &Inclusion, n: usize, i: usize) -> Result<QuotientCertificate> {
    if i == 0 || i > n {
        return Err(Error::Invalid(format!("quotient index {i} outside 1..={n}")));
    }
    let zk = z_of(f);
    let lower = tilde_box_keyed(f, n, i - 1)?;
    let upper = tilde_box_keyed(f, n, i)?;
    let (quot, _) = stage_quotient(&lower, &upper)?;
    let sx = sym_power_keyed(n - i, f.source());
    let sz = sym_power_keyed(i, &zk.set);
    let formula = smash_keyed(&sx.set, &sz.set);
    let location = format!("symmetrized Künneth quotient n={n} i={i}");
    let mut map = Vec::new();
    for m in 0..=formula.set.dim_bound() {
        let mut table = vec![0];
        for &(a, b) in &formula.keys[m] {
            let mut img: Vec<Simplex> = sx.key(m, a).unwrap().iter().map(|&v| f.map().apply(m, v)).collect();
            img.extend(sz.key(m, b).unwrap().iter().map(|&w| *zk.key(m, w).unwrap()));
            img.sort_unstable();
            let idx = quot
                .index_of(m, &img)
                .ok_or_else(|| cert_err(format!("{location}, level {m}"), format!("{img:?} is not in the quotient")))?;
            table.push(idx);
        }
        map.push(table);
    }
    let (levels, fingerprint_match) = verify_simplicial_bijection(&formula.set, &quot.set, &map, None, &location)?;
    if !fingerprint_match {
        return Err(cert_err(location, "independent fingerprint re-check failed"));
    }
    Ok(QuotientCertificate {
        kind: "symmetric",
        n,
        i,
        levels,
        generators_checked: 0,
        fingerprint_match,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetrizableLevel {
    pub level: usize,
    pub stage_size: usize,
    pub orbit_count: usize,
    pub target_size: usize,
    pub injective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetrizableReport {
    pub n: usize,
    pub levels: Vec<SymmetrizableLevel>,
    pub injective: bool,
}

/// Checks that `tilde-Box^n_{n-1}(f) -> Sym^n Y` is levelwise injective. The orbit
/// quotient is taken generically (union-find over the `Σ_n` generators acting on the
/// plain stage) and each orbit is sent to its image in `Sym^n Y`.
pub fn symmetrizable_check(f: &Inclusion, n: usize) -> Result<SymmetrizableReport> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let stage = box_stage(f, n, n - 1)?;
    let sym_y = sym_power_keyed(n, f.target());
    let g = Arc::new(PermGroup::symmetric(n)?);
    let actions = coordinate_action(&stage.keyed, n);
    let mut levels = Vec::new();
    for m in 0..=stage.keyed.set.dim_bound() {
        let size = stage.keyed.set.level_size(m);
        let labels: Vec<String> = (0..size as Simplex).map(|x| stage.keyed.set.label(m, x)).collect();
        let gset = GSet::new_unchecked(g.clone(), labels, actions[m].clone());
        let (_, q) = orbit_quotient(&gset);
        let mut hit = vec![false; sym_y.set.level_size(m)];
        let mut injective = true;
        for &rep in q.reps.iter().skip(1) {
            let mut t = stage.keyed.key(m, rep).unwrap().clone();
            t.sort_unstable();
            let target = sym_y.index_of(m, &t).expect("orbit lands in Sym^n Y");
            if std::mem::replace(&mut hit[target as usize], true) {
                injective = false;
            }
        }
        levels.push(SymmetrizableLevel {
            level: m,
            stage_size: size - 1,
            orbit_count: q.len() - 1,
            target_size: sym_y.set.reduced_size(m),
            injective,
        });
    }
    let injective = levels.iter().all(|l| l.injective);
    Ok(SymmetrizableReport { n, levels, injective })
}

#[derive(Clone, Debug, Serialize)]
pub struct StageSummary {
    pub i: usize,
    pub reduced_sizes: Vec<usize>,
    pub euler: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientSummary {
    pub i: usize,
    pub euler: i64,
    /// `χ̃` predicted by the Künneth rule from `χ̃` of the factors.
    pub kunneth_rule: i64,
    pub certificate: QuotientCertificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerLevel {
    pub n: usize,
    pub plain_stages: Vec<StageSummary>,
    pub plain_quotients: Vec<QuotientSummary>,
    pub sym_stages: Vec<StageSummary>,
    pub sym_quotients: Vec<QuotientSummary>,
    pub plain_telescopes: bool,
    pub sym_telescopes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    pub euler_x: i64,
    pub euler_z: i64,
    pub levels: Vec<TowerLevel>,
    pub passed: bool,
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

/// Both towers for every `1 <= n <= nmax`, with certificates and `χ̃` bookkeeping.
pub fn tower(f: &Inclusion, nmax: usize) -> Result<TowerReport> {
    let zk = z_of(f);
    let (x, z) = (f.source(), &zk.set);
    let euler_x = euler(x)?;
    let euler_z = euler(z)?;
    let mut levels = Vec::new();
    for n in 1..=nmax {
        let mut plain_stages = Vec::new();
        let mut sym_stages = Vec::new();
        for i in 0..=n {
            let b = box_stage(f, n, i)?;
            plain_stages.push(StageSummary {
                i,
                reduced_sizes: (0..=b.keyed.set.dim_bound()).map(|m| b.keyed.set.reduced_size(m)).collect(),
                euler: euler(&b.keyed.set)?,
            });
            let t = tilde_box_keyed(f, n, i)?;
            sym_stages.push(StageSummary {
                i,
                reduced_sizes: (0..=t.set.dim_bound()).map(|m| t.set.reduced_size(m)).collect(),
                euler: euler(&t.set)?,
            });
        }
        let g = Arc::new(PermGroup::symmetric(n)?);
        let mut plain_quotients = Vec::new();
        let mut sym_quotients = Vec::new();
        for i in 1..=n {
            let certificate = kunneth_quotient_certificate(f, n, i)?;
            let formula = cor_side(x, z, n, i, &g)?;
            plain_quotients.push(QuotientSummary {
                i,
                euler: euler(&formula.set)?,
                kunneth_rule: binomial(n, i) * euler_x.pow((n - i) as u32) * euler_z.pow(i as u32),
                certificate,
            });
            let certificate = sym_kunneth_certificate(f, n, i)?;
            let sx = sym_power(n - i, x);
            let sz = sym_power(i, z);
            sym_quotients.push(QuotientSummary {
                i,
                euler: euler(&crate::sset::smash(&sx, &sz))?,
                kunneth_rule: euler(&sx)? * euler(&sz)?,
                certificate,
            });
        }
        let telescopes = |stages: &[StageSummary], quots: &[QuotientSummary]| {
            stages[n].euler - stages[0].euler == quots.iter().map(|q| q.euler).sum::<i64>()
                && quots.iter().all(|q| q.euler == q.kunneth_rule)
        };
        levels.push(TowerLevel {
            n,
            plain_telescopes: telescopes(&plain_stages, &plain_quotients),
            sym_telescopes: telescopes(&sym_stages, &sym_quotients),
            plain_stages,
            plain_quotients,
            sym_stages,
            sym_quotients,
        });
    }
    let passed = levels.iter().all(|l| l.plain_telescopes && l.sym_telescopes);
    Ok(TowerReport {
        euler_x,
        euler_z,
        levels,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AcyclicityRow {
    pub n: usize,
    pub x: bool,
    pub z: bool,
    pub y: bool,
    pub euler_y: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdditivityReport {
    pub rows: Vec<AcyclicityRow>,
    /// Smallest `a` with `Sym^k X` acyclic for all `a <= k <= nmax` (`nmax + 1` if none).
    pub threshold_x: usize,
    pub threshold_z: usize,
    /// The range `a + b - 1 ..= nmax` on which the towers force `Sym^N Y` to be acyclic.
    pub implied: Vec<usize>,
    pub passed: bool,
}

fn acyclic_sym(n: usize, s: &PointedSimplicialSet) -> Result<bool> {
    let p = sym_power(n, s);
    if p.geometric_dim().is_none() {
        let needed = s.geometric_dim().map_or(s.dim_bound() + 1, |d| n * d);
        return Err(Error::Truncation {
            needed,
            have: s.dim_bound(),
        });
    }
    Ok(is_acyclic(&reduced_homology(&p)?))
}

/// Computes acyclicity of `Sym^n X`, `Sym^n Z`, `Sym^n Y` for `1 <= n <= nmax` and checks
/// the implication the towers give: acyclic tails for `X` from `a` and for `Z` from `b`
/// force `Sym^N Y` acyclic for `N >= a + b - 1`.
pub fn additivity_probe(f: &Inclusion, nmax: usize) -> Result<AdditivityReport> {
    let zk = z_of(f);
    let (x, y, z) = (f.source(), f.target(), &zk.set);
    let mut rows = Vec::new();
    for n in 1..=nmax {
        rows.push(AcyclicityRow {
            n,
            x: acyclic_sym(n, x)?,
            z: acyclic_sym(n, z)?,
            y: acyclic_sym(n, y)?,
            euler_y: euler(&sym_power(n, y))?,
        });
    }
    let threshold = |flag: &dyn Fn(&AcyclicityRow) -> bool| -> usize {
        let mut a = nmax + 1;
        for r in rows.iter().rev() {
            if flag(r) {
                a = r.n;
            } else {
                break;
            }
        }
        a
    };
    let threshold_x = threshold(&|r| r.x);
    let threshold_z = threshold(&|r| r.z);
    let implied: Vec<usize> = ((threshold_x + threshold_z).saturating_sub(1).max(1)..=nmax).collect();
    let passed = implied.iter().all(|&n| rows[n - 1].y);
    Ok(AdditivityReport {
        rows,
        threshold_x,
        threshold_z,
        implied,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{point, sphere, wedge};

    fn wedge_example(bound: usize) -> Inclusion {
        let s0 = sphere(0, bound).unwrap();
        Inclusion::wedge_left(&s0, &s0)
    }

    #[test]
    fn stage_extremes() {
        let f = wedge_example(1);
        let y = f.target();
        for n in 1..=3 {
            let b0 = box_stage(&f, n, 0).unwrap();
            let bn = box_stage(&f, n, n).unwrap();
            assert_eq!(b0.keyed.set.reduced_size(0), 1);
            assert_eq!(bn.keyed.set, crate::sset::smash_power(y, n).set);
            let (t0, _) = tilde_box(&f, n, 0).unwrap();
            let (tn, _) = tilde_box(&f, n, n).unwrap();
            assert_eq!(t0.set, sym_power(n, f.source()));
            assert_eq!(tn.set, sym_power(n, y));
        }
    }

    #[test]
    fn wedge_example_sizes() {
        let f = wedge_example(1);
        let b = box_stage(&f, 2, 1).unwrap();
        assert_eq!(b.keyed.set.reduced_size(0), 3);
        let (t, proj) = tilde_box(&f, 2, 1).unwrap();
        assert_eq!(t.set.reduced_size(0), 2);
        proj.validate().unwrap();
        let c1 = kunneth_quotient_certificate(&f, 2, 1).unwrap();
        assert_eq!(c1.levels[0].reduced_size, 2);
        let c2 = kunneth_quotient_certificate(&f, 2, 2).unwrap();
        assert_eq!(c2.levels[0].reduced_size, 1);
        let s1 = sym_kunneth_certificate(&f, 2, 1).unwrap();
        assert_eq!(s1.levels[0].reduced_size, 1);
    }

    #[test]
    fn identity_inclusion_quotients_are_points() {
        let s1 = sphere(1, 2).unwrap();
        let f = Inclusion::identity(&s1);
        for n in 1..=2 {
            for i in 1..=n {
                let c = kunneth_quotient_certificate(&f, n, i).unwrap();
                assert!(c.levels.iter().all(|l| l.reduced_size == 0));
                let c = sym_kunneth_certificate(&f, n, i).unwrap();
                assert!(c.levels.iter().all(|l| l.reduced_size == 0));
            }
        }
    }

    #[test]
    fn basepoint_inclusion_concentrates_at_top() {
        let s1 = sphere(1, 2).unwrap();
        let f = Inclusion::basepoint(&s1);
        let n = 2;
        for i in 1..n {
            let c = sym_kunneth_certificate(&f, n, i).unwrap();
            assert!(c.levels.iter().all(|l| l.reduced_size == 0));
        }
        let top = sym_kunneth_certificate(&f, n, n).unwrap();
        let sym = sym_power(n, &s1);
        assert_eq!(top.reduced_sizes(), (0..=2).map(|m| sym.reduced_size(m)).collect::<Vec<_>>());
    }

    #[test]
    fn stages_are_monotone() {
        let s1 = sphere(1, 2).unwrap();
        let f = Inclusion::wedge_left(&s1, &s1);
        for n in 1..=3 {
            for i in 0..n {
                let a = box_stage(&f, n, i).unwrap();
                let b = box_stage(&f, n, i + 1).unwrap();
                for m in 0..=2 {
                    assert!(a.keyed.keys[m].iter().all(|t| b.keyed.index_of(m, t).is_some()));
                }
            }
        }
    }

    #[test]
    fn generic_colimit_agrees() {
        let s1 = sphere(1, 2).unwrap();
        let f = Inclusion::wedge_left(&s1, &sphere(0, 2).unwrap());
        for n in 1..=3 {
            for i in 0..=n {
                let b = box_stage(&f, n, i).unwrap();
                for m in 0..=2 {
                    assert_eq!(box_generic_level(&f, n, i, m).unwrap(), b.keyed.keys[m]);
                }
            }
        }
    }

    #[test]
    fn symmetrizable_examples() {
        let s1 = sphere(1, 2).unwrap();
        for f in [Inclusion::identity(&s1), Inclusion::basepoint(&s1), wedge_example(1)] {
            for n in 1..=3 {
                assert!(symmetrizable_check(&f, n).unwrap().injective);
            }
        }
        let r = symmetrizable_check(&wedge_example(1), 2).unwrap();
        assert_eq!((r.levels[0].orbit_count, r.levels[0].target_size), (2, 3));
    }

    #[test]
    fn tower_bookkeeping() {
        let f = wedge_example(1);
        let r = tower(&f, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.levels[2].plain_stages[3].euler, 8);
        assert_eq!(r.levels[1].sym_stages[2].euler, 3);
        let one = &r.levels[0];
        assert_eq!(one.plain_stages.len(), 2);
    }

    #[test]
    fn additivity_on_points() {
        let p = point(2);
        let r = additivity_probe(&Inclusion::identity(&p), 3).unwrap();
        assert!(r.rows.iter().all(|row| row.x && row.y && row.z));
        assert!(r.passed);
    }

    #[test]
    fn additivity_identity_circle() {
        let s1 = sphere(1, 3).unwrap();
        let r = additivity_probe(&Inclusion::identity(&s1), 3).unwrap();
        assert!(r.rows.iter().filter(|row| row.n >= 2).all(|row| row.y));
        assert!(r.passed);
    }

    #[test]
    fn wedge_bound_mismatch_is_truncated() {
        let w = wedge(&sphere(1, 3).unwrap(), &sphere(1, 2).unwrap());
        assert_eq!(w.dim_bound(), 2);
    }
}
