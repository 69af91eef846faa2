//! Symmetric sequences of finite pointed sets, their smash product, the free
//! commutative monoid `S(T)` and free spectra, with certified slice formulas.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{cert_err, Error, Result};
use crate::gset::{cor, orbit_quotient, verify_equivariant_bijection, BijectionCertificate, GSet, Induced, Point};
use crate::perm::{block_permutation, young_generators, EmbeddingSpec, Perm, PermGroup};

/// Largest level accepted by the constructors.
pub const MAX_LEVEL: usize = 8;

/// Level `m` is a pointed `Σ_m`-set; `Σ_m` is generated by adjacent transpositions.
#[derive(Clone, Debug)]
pub struct SymmetricSequence {
    pub levels: Vec<GSet>,
}

fn symmetric_groups(max: usize) -> Result<Vec<Arc<PermGroup>>> {
    (0..=max).map(|m| PermGroup::symmetric(m).map(Arc::new)).collect()
}

fn check_max(max: usize) -> Result<()> {
    if max > MAX_LEVEL {
        return Err(Error::DegreeTooLarge {
            degree: max,
            cap: MAX_LEVEL,
        });
    }
    Ok(())
}

impl SymmetricSequence {
    pub fn new(levels: Vec<GSet>) -> Result<Self> {
        for (m, l) in levels.iter().enumerate() {
            let g = l.group();
            if g.degree() != m || g.order() != (1..=m).product::<usize>() {
                return Err(Error::Structure(format!("level {m} is not acted on by Σ_{m}")));
            }
            l.validate()?;
        }
        Ok(SymmetricSequence { levels })
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, m: usize) -> &GSet {
        &self.levels[m]
    }

    /// Reduced sizes of all levels.
    pub fn reduced_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(GSet::reduced_size).collect()
    }

    /// The unit: one non-base point at level 0, a point elsewhere.
    pub fn unit(max: usize) -> Result<Self> {
        check_max(max)?;
        let groups = symmetric_groups(max)?;
        let levels = groups
            .into_iter()
            .enumerate()
            .map(|(m, g)| {
                let labels = if m == 0 { vec!["*".into(), "1".into()] } else { vec!["*".into()] };
                GSet::trivial(g, labels)
            })
            .collect();
        Ok(SymmetricSequence { levels })
    }

    /// A single pointed set `{*, 1..=size}` at level `at` with trivial action, points elsewhere.
    pub fn concentrated(at: usize, size: usize, max: usize) -> Result<Self> {
        check_max(max)?;
        let groups = symmetric_groups(max)?;
        let levels = groups
            .into_iter()
            .enumerate()
            .map(|(m, g)| {
                let n = if m == at { size } else { 0 };
                GSet::trivial(g, pointed_labels("x", n))
            })
            .collect();
        SymmetricSequence::new(levels)
    }
}

fn pointed_labels(prefix: &str, n: usize) -> Vec<String> {
    std::iter::once("*".to_string()).chain((1..=n).map(|k| format!("{prefix}{k}"))).collect()
}

/// One wedge summand `cor^{Σ_m}_{Σ_{i_1}×…×Σ_{i_p}}(X1_{i_1} ∧ … ∧ Xp_{i_p})` of a smash level.
#[derive(Clone, Debug)]
pub struct Summand {
    pub blocks: Vec<usize>,
    /// Reduced size of each factor's level.
    radix: Vec<usize>,
    pub induced: Induced,
    /// Index in the level of this summand's first non-base point, minus one.
    offset: usize,
}

impl Summand {
    fn carrier_index(&self, coords: &[Point]) -> Point {
        let mut idx = 0usize;
        for (&c, &r) in coords.iter().zip(&self.radix) {
            idx = idx * r + (c as usize - 1);
        }
        idx as Point + 1
    }

    fn coords(&self, mut idx: usize) -> Vec<Point> {
        idx -= 1;
        let mut out = vec![0; self.radix.len()];
        for k in (0..self.radix.len()).rev() {
            out[k] = (idx % self.radix[k]) as Point + 1;
            idx /= self.radix[k];
        }
        out
    }

    fn carrier_size(&self) -> usize {
        self.radix.iter().product()
    }
}

/// A smash level together with the decomposition of its points.
#[derive(Clone, Debug)]
pub struct SmashLevel {
    pub summands: Vec<Summand>,
    pub group: Arc<PermGroup>,
}

/// Canonical description of a non-base point: summand, group element and factor points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashPoint {
    pub summand: usize,
    pub g: usize,
    pub coords: Vec<Point>,
}

impl SmashLevel {
    /// The point `[g, (u_1, …, u_p)]` of summand `s` (coordinates are non-base points).
    pub fn point(&self, s: usize, g: usize, coords: &[Point]) -> Point {
        let sm = &self.summands[s];
        let c = sm.induced.class(g, sm.carrier_index(coords));
        sm.offset as Point + c
    }

    pub fn summand_of_blocks(&self, blocks: &[usize]) -> Option<usize> {
        self.summands.iter().position(|s| s.blocks == blocks)
    }

    /// The canonical representative of a non-base point.
    pub fn decompose(&self, x: Point) -> SmashPoint {
        let s = self.summands.iter().rposition(|s| (s.offset as Point) < x).expect("non-base point");
        let sm = &self.summands[s];
        let (g, c) = sm.induced.reps[x as usize - sm.offset];
        SmashPoint {
            summand: s,
            g,
            coords: sm.coords(c as usize),
        }
    }

    /// Evaluates `f` on every pair `(g, u)` of every summand and checks it is constant
    /// on classes; returns the resulting table on points.
    pub fn table_from_pairs(
        &self,
        size: usize,
        location: &str,
        mut f: impl FnMut(&SmashPoint) -> Result<Point>,
    ) -> Result<Vec<Point>> {
        let mut table = vec![u32::MAX; size];
        table[0] = 0;
        for (s, sm) in self.summands.iter().enumerate() {
            for g in 0..self.group.order() {
                for c in 1..=sm.carrier_size() {
                    let x = sm.offset as Point + sm.induced.class(g, c as Point);
                    let y = f(&SmashPoint {
                        summand: s,
                        g,
                        coords: sm.coords(c),
                    })?;
                    let slot = &mut table[x as usize];
                    if *slot == u32::MAX {
                        *slot = y;
                    } else if *slot != y {
                        return Err(cert_err(location, format!("map depends on the representative of point {x}")));
                    }
                }
            }
        }
        Ok(table)
    }
}

/// `X1 ∧ … ∧ Xp` of symmetric sequences, with the decomposition of each level.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub seq: SymmetricSequence,
    pub levels: Vec<SmashLevel>,
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn young_group(blocks: &[usize]) -> Result<Arc<PermGroup>> {
    let deg = blocks.iter().sum();
    let gens = young_generators(blocks).into_iter().map(|(_, _, p)| p).collect();
    Ok(Arc::new(PermGroup::generate(deg, gens)?))
}

/// The multi-factor smash `(X1 ∧ … ∧ Xp)_m = ∨_{i_1+…+i_p=m} Σ_m ×_{Σ_{i_1}×…×Σ_{i_p}} (X1_{i_1} ∧ … ∧ Xp_{i_p})`.
pub fn smash_many(factors: &[&SymmetricSequence]) -> Result<SmashProduct> {
    if factors.is_empty() {
        return Err(Error::Invalid("empty smash product".into()));
    }
    let max = factors[0].max_degree();
    if factors.iter().any(|f| f.max_degree() != max) {
        return Err(Error::Invalid("factors have different maximal degrees".into()));
    }
    let groups = symmetric_groups(max)?;
    let mut levels = Vec::new();
    let mut smash_levels = Vec::new();
    for (m, g) in groups.iter().enumerate() {
        let mut summands = Vec::new();
        let mut labels = vec!["*".to_string()];
        let mut gen_action: Vec<Vec<Point>> = vec![vec![0]; g.generators().len()];
        for blocks in compositions(m, factors.len()) {
            let parts: Vec<&GSet> = blocks.iter().zip(factors).map(|(&i, f)| f.level(i)).collect();
            let radix: Vec<usize> = parts.iter().map(|p| p.reduced_size()).collect();
            if radix.contains(&0) {
                continue;
            }
            let h = young_group(&blocks)?;
            let template = Summand {
                blocks: blocks.clone(),
                radix: radix.clone(),
                induced: Induced {
                    gset: GSet::trivial(h.clone(), vec!["*".into()]),
                    class_of: Vec::new(),
                    reps: Vec::new(),
                    source_size: 0,
                },
                offset: 0,
            };
            let size = template.carrier_size();
            let mut carrier_labels = vec!["*".to_string()];
            let mut actions: Vec<Vec<Point>> = vec![vec![0]; h.generators().len()];
            for c in 1..=size {
                let coords = template.coords(c);
                carrier_labels.push(
                    coords
                        .iter()
                        .zip(&parts)
                        .map(|(&u, p)| p.label(u).to_string())
                        .collect::<Vec<_>>()
                        .join("∧"),
                );
                for (s, (k, r, _)) in young_generators(&blocks).into_iter().enumerate() {
                    let mut moved = coords.clone();
                    moved[k] = parts[k].gen_act(r, coords[k]);
                    actions[s].push(template.carrier_index(&moved));
                }
            }
            let hset = GSet::new_unchecked(h, carrier_labels, actions);
            let induced = cor(g, &hset)?;
            let offset = labels.len() - 1;
            labels.extend(induced.gset.labels()[1..].iter().cloned());
            for (s, table) in gen_action.iter_mut().enumerate() {
                table.extend(induced.gset.gen_table(s)[1..].iter().map(|&y| if y == 0 { 0 } else { y + offset as Point }));
            }
            summands.push(Summand {
                induced,
                offset,
                ..template
            });
        }
        levels.push(GSet::new_unchecked(g.clone(), labels, gen_action));
        smash_levels.push(SmashLevel {
            summands,
            group: g.clone(),
        });
    }
    Ok(SmashProduct {
        seq: SymmetricSequence::new(levels)?,
        levels: smash_levels,
    })
}

/// `(X∧Y)_n = ∨_{i+j=n} Σ_n ×_{Σ_i×Σ_j} (X_i ∧ Y_j)`.
pub fn seq_smash(x: &SymmetricSequence, y: &SymmetricSequence) -> Result<SmashProduct> {
    smash_many(&[x, y])
}

/// `S(T)`: level `m` is `T^∧m` with `Σ_m` permuting factors; `T = {*, t1..t_t}`.
pub fn free_monoid(t: usize, max: usize) -> Result<SymmetricSequence> {
    check_max(max)?;
    let groups = symmetric_groups(max)?;
    let mut levels = Vec::new();
    for (m, g) in groups.into_iter().enumerate() {
        let tuples = power_tuples(t, m);
        let index = |tu: &Vec<Point>| tuples.binary_search(tu).unwrap() as Point + 1;
        let labels = std::iter::once("*".to_string())
            .chain(tuples.iter().map(|tu| {
                if tu.is_empty() {
                    "1".to_string()
                } else {
                    tu.iter().map(|v| format!("t{v}")).collect::<Vec<_>>().join("∧")
                }
            }))
            .collect();
        let gen_action = g
            .generators()
            .iter()
            .map(|p| std::iter::once(0).chain(tuples.iter().map(|tu| index(&p.permute(tu)))).collect())
            .collect();
        levels.push(GSet::new_unchecked(g, labels, gen_action));
    }
    SymmetricSequence::new(levels)
}

/// All tuples of length `m` over `1..=t`, lexicographic.
fn power_tuples(t: usize, m: usize) -> Vec<Vec<Point>> {
    let mut out: Vec<Vec<Point>> = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|tu| {
                (1..=t as Point).map(move |v| {
                    let mut tu = tu.clone();
                    tu.push(v);
                    tu
                })
            })
            .collect();
    }
    out
}

/// Parameters of a free spectrum `F_n(A)` over `S(T)` with `A`, `T` given by reduced sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FreeSpectrumSpec {
    pub n: usize,
    pub a: usize,
    pub t: usize,
}

/// `F̃_n A`: `Σ_n × A` at level `n` (free action on the first factor), points elsewhere.
pub fn free_shift(n: usize, a: usize, max: usize) -> Result<SymmetricSequence> {
    check_max(max)?;
    let groups = symmetric_groups(max)?;
    let mut levels = Vec::new();
    for (m, g) in groups.into_iter().enumerate() {
        if m != n {
            levels.push(GSet::trivial(g, vec!["*".into()]));
            continue;
        }
        let point = |e: usize, v: usize| (e * a + v) as Point;
        let mut labels = vec!["*".to_string()];
        for p in g.elements() {
            for v in 1..=a {
                labels.push(format!("({},a{v})", p.one_line()));
            }
        }
        let gen_action = g
            .generators()
            .iter()
            .map(|s| {
                std::iter::once(0)
                    .chain(g.elements().iter().flat_map(|p| {
                        let e = g.index_of(&s.compose(p)).unwrap();
                        (1..=a).map(move |v| point(e, v))
                    }))
                    .collect()
            })
            .collect();
        levels.push(GSet::new_unchecked(g, labels, gen_action));
    }
    SymmetricSequence::new(levels)
}

/// `F_n(A) = F̃_n A ∧ S(T)`.
pub fn free_spectrum(spec: FreeSpectrumSpec, max: usize) -> Result<SmashProduct> {
    seq_smash(&free_shift(spec.n, spec.a, max)?, &free_monoid(spec.t, max)?)
}

/// `cor^{Σ_m}_H(A^∧p ∧ T^∧k)` for `H` generated by block swaps (acting on the `A`
/// factors) followed by tail transpositions (acting on the `T` factors), as given by
/// `ShuffleTail { p, n, m }` or, with `shuffle = false`, `Tail { m, k }`.
struct FormulaSide {
    induced: Induced,
    tuples: Vec<(Vec<Point>, Vec<Point>)>,
}

fn formula_side(g: &Arc<PermGroup>, spec: FreeSpectrumSpec, p: usize, m: usize, shuffle: bool) -> Result<FormulaSide> {
    let k = m - p * spec.n;
    let embedding = if shuffle {
        EmbeddingSpec::ShuffleTail { p, n: spec.n, m }
    } else {
        EmbeddingSpec::Tail { m, k }
    };
    let h = Arc::new(embedding.group()?);
    let mut tuples = Vec::new();
    for av in power_tuples(spec.a, p) {
        for tv in power_tuples(spec.t, k) {
            tuples.push((av.clone(), tv));
        }
    }
    let index = |x: &(Vec<Point>, Vec<Point>)| tuples.binary_search(x).unwrap() as Point + 1;
    let shuffles = if shuffle { p.saturating_sub(1) } else { 0 };
    let mut gen_action = Vec::new();
    for s in 0..h.generators().len() {
        let mut table = vec![0];
        for (av, tv) in &tuples {
            let (mut av, mut tv) = (av.clone(), tv.clone());
            if s < shuffles {
                av.swap(s, s + 1);
            } else {
                let r = s - shuffles;
                tv.swap(r, r + 1);
            }
            table.push(index(&(av, tv)));
        }
        gen_action.push(table);
    }
    let labels = std::iter::once("*".to_string())
        .chain(tuples.iter().map(|(av, tv)| {
            av.iter()
                .map(|v| format!("a{v}"))
                .chain(tv.iter().map(|v| format!("t{v}")))
                .collect::<Vec<_>>()
                .join("∧")
        }))
        .collect();
    let hset = GSet::new(h, labels, gen_action)?;
    Ok(FormulaSide {
        induced: cor(g, &hset)?,
        tuples,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceCertificate {
    pub spec: FreeSpectrumSpec,
    pub m: usize,
    pub reduced_size: usize,
    pub expected_size: usize,
    pub bijection: BijectionCertificate,
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Certifies `(F_n A)_m ≅ cor^{Σ_m}_{Σ_{m-n}}(A ∧ T^∧(m-n))` with `Σ_{m-n}` permuting the
/// tail, by the map `[g, (a, t)] ↦ [g, ((e, a), t)]`.
pub fn slice_check(spec: FreeSpectrumSpec, m: usize) -> Result<SliceCertificate> {
    if m < spec.n {
        return Err(Error::Invalid(format!("level {m} lies below the shift {}", spec.n)));
    }
    let free = free_spectrum(spec, m)?;
    let level = &free.levels[m];
    let g = &level.group;
    let formula = formula_side(g, spec, 1, m, false)?;
    let location = format!("slice of F_{}(A) at level {m}", spec.n);
    let direct = free.seq.level(m);
    let summand = level.summand_of_blocks(&[spec.n, m - spec.n]);
    let table = induced_table(&formula.induced, &location, |e, x| {
        let summand = summand.ok_or_else(|| cert_err(&location, "no summand for the shift"))?;
        let (av, tv) = &formula.tuples[x as usize - 1];
        // Σ_n × A is indexed by (element, a) with the identity first; T^∧k by tuple order.
        let first = av[0];
        let second = power_index(spec.t, tv);
        Ok(level.point(summand, e, &[first, second]))
    })?;
    let bijection = verify_equivariant_bijection(&formula.induced.gset, direct, &table, &location)?;
    let expected = factorial(m) / factorial(m - spec.n) * spec.a * spec.t.pow((m - spec.n) as u32);
    Ok(SliceCertificate {
        spec,
        m,
        reduced_size: direct.reduced_size(),
        expected_size: expected,
        bijection,
    })
}

fn power_index(t: usize, tv: &[Point]) -> Point {
    tv.iter().fold(0usize, |acc, &v| acc * t + (v as usize - 1)) as Point + 1
}

/// Evaluates `f` on every pair `(g, x)` of `G × X` and checks it is constant on classes.
fn induced_table(ind: &Induced, location: &str, mut f: impl FnMut(usize, Point) -> Result<Point>) -> Result<Vec<Point>> {
    let mut table = vec![u32::MAX; ind.gset.size()];
    table[0] = 0;
    let order = ind.class_of.len() / ind.source_size;
    for e in 0..order {
        for x in 1..ind.source_size as Point {
            let c = ind.class(e, x) as usize;
            let y = f(e, x)?;
            if table[c] == u32::MAX {
                table[c] = y;
            } else if table[c] != y {
                return Err(cert_err(location, format!("map depends on the representative of {}", ind.gset.label(c as Point))));
            }
        }
    }
    Ok(table)
}

/// The `Σ_p` action on a smash product whose first `p` factors agree: the adjacent
/// twist `k` sends `[g, (…, u_k, u_{k+1}, …)]` to `[g β^{-1}, (…, u_{k+1}, u_k, …)]`,
/// `β` the corresponding block swap.
pub fn twist_action(power: &SmashProduct, p: usize, m: usize) -> Result<GSet> {
    let level = &power.levels[m];
    let direct = power.seq.level(m);
    let g = &level.group;
    let sp = Arc::new(PermGroup::symmetric(p)?);
    let mut gen_action = Vec::new();
    for k in 0..p.saturating_sub(1) {
        let location = format!("twist {k} at level {m}");
        let table = level.table_from_pairs(direct.size(), &location, |pt| {
            let blocks = &level.summands[pt.summand].blocks;
            let mut order: Vec<usize> = (0..blocks.len()).collect();
            order.swap(k, k + 1);
            let beta = block_permutation(blocks, &order);
            let gb = g.elements()[pt.g].compose(&beta.inverse());
            let mut swapped_blocks = blocks.clone();
            swapped_blocks.swap(k, k + 1);
            let mut coords = pt.coords.clone();
            coords.swap(k, k + 1);
            let s = level
                .summand_of_blocks(&swapped_blocks)
                .ok_or_else(|| cert_err(&location, "missing swapped summand"))?;
            Ok(level.point(s, g.index_of(&gb).unwrap(), &coords))
        })?;
        gen_action.push(table);
    }
    GSet::new(sp, direct.labels().to_vec(), gen_action)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymSliceCertificate {
    pub p: usize,
    pub spec: FreeSpectrumSpec,
    pub m: usize,
    pub power_bijection: BijectionCertificate,
    pub sym_bijection: BijectionCertificate,
    pub sym_reduced_size: usize,
    /// Sizes of the fibers of the quotient map, one per non-base point of the target.
    pub fiber_sizes: Vec<usize>,
    pub fibers_are_orbits: bool,
}

/// The `Σ_m`-set of `Σ_p`-orbits of a level of `X^∧p`, with the projection.
fn orbit_level(direct: &GSet, twists: &GSet) -> (GSet, Vec<Point>) {
    let (labels, q) = orbit_quotient(twists);
    let gen_action = (0..direct.group().generators().len())
        .map(|s| q.reps.iter().map(|&r| q.projection[direct.gen_act(s, r) as usize]).collect())
        .collect();
    (GSet::new_unchecked(direct.group().clone(), labels, gen_action), q.projection)
}

/// Certifies the level-`m` slices of `F_n(A)^∧p` and `Sym^p F_n(A)` against
/// `cor^{Σ_m}_{Σ_{m-pn}}(A^∧p ∧ T^∧(m-pn))` and `cor^{Σ_m}_{Σ_p×Σ_{m-pn}}(…)` (block
/// shuffle on the first `pn` letters), and that the quotient map between them has
/// exactly the `Σ_p`-orbits as fibers.
pub fn sym_slice_check(p: usize, spec: FreeSpectrumSpec, m: usize) -> Result<SymSliceCertificate> {
    if p == 0 || p > 3 {
        return Err(Error::Invalid(format!("p = {p} outside 1..=3")));
    }
    if spec.n == 0 {
        return Err(Error::Invalid("the block shuffle needs n >= 1".into()));
    }
    if m < p * spec.n {
        return Err(Error::Invalid(format!("level {m} lies below {p}·{}", spec.n)));
    }
    // Over S(T): F_n(A)^∧p = (F̃_n A)^∧p ∧ S(T).
    let shift = free_shift(spec.n, spec.a, m)?;
    let monoid = free_monoid(spec.t, m)?;
    let mut factors: Vec<&SymmetricSequence> = vec![&shift; p];
    factors.push(&monoid);
    let power = smash_many(&factors)?;
    let level = &power.levels[m];
    let g = level.group.clone();
    let direct = power.seq.level(m);
    let loc_power = format!("Σ_{p}-power of F_{}(A) at level {m}", spec.n);
    let loc_sym = format!("Sym^{p} F_{}(A) at level {m}", spec.n);
    let k = m - p * spec.n;
    let mut blocks = vec![spec.n; p];
    blocks.push(k);
    let outer = level
        .summand_of_blocks(&blocks)
        .ok_or_else(|| cert_err(&loc_power, "no summand for the shifted blocks"))?;
    // Σ_n × A is indexed by (element, a) with the identity first; T^∧k by tuple order.
    let embed = |e: usize, av: &[Point], tv: &[Point]| -> Point {
        let mut coords = av.to_vec();
        coords.push(power_index(spec.t, tv));
        level.point(outer, e, &coords)
    };
    let plain = formula_side(&g, spec, p, m, false)?;
    let table = induced_table(&plain.induced, &loc_power, |e, x| {
        let (av, tv) = &plain.tuples[x as usize - 1];
        Ok(embed(e, av, tv))
    })?;
    let power_bijection = verify_equivariant_bijection(&plain.induced.gset, direct, &table, &loc_power)?;

    let twists = twist_action(&power, p, m)?;
    let (sym, projection) = orbit_level(direct, &twists);
    let shuffled = formula_side(&g, spec, p, m, true)?;
    let table = induced_table(&shuffled.induced, &loc_sym, |e, x| {
        let (av, tv) = &shuffled.tuples[x as usize - 1];
        Ok(projection[embed(e, av, tv) as usize])
    })?;
    let sym_bijection = verify_equivariant_bijection(&shuffled.induced.gset, &sym, &table, &loc_sym)?;

    // The quotient map [g, x] ↦ [g, x] between the two formula sides, and its fibers.
    let quotient = induced_table(&plain.induced, &loc_sym, |e, x| {
        let key = &plain.tuples[x as usize - 1];
        let y = shuffled.tuples.binary_search(key).unwrap() as Point + 1;
        Ok(shuffled.induced.class(e, y))
    })?;
    let mut fiber_sizes = vec![0usize; shuffled.induced.gset.size()];
    for &y in &quotient[1..] {
        fiber_sizes[y as usize] += 1;
    }
    let surjective = fiber_sizes[1..].iter().all(|&s| s > 0);
    // Fibers versus orbits: transport the plain side along the certified bijection.
    let mut orbit_size = vec![0usize; sym.size()];
    for x in 1..direct.size() {
        orbit_size[projection[x] as usize] += 1;
    }
    let mut fibers_are_orbits = surjective;
    for x in 1..plain.induced.gset.size() {
        let via_orbits = projection[power_bijection.table[x] as usize];
        let via_quotient = sym_bijection.table[quotient[x] as usize];
        if via_orbits != via_quotient {
            fibers_are_orbits = false;
        }
    }
    for y in 1..shuffled.induced.gset.size() {
        if fiber_sizes[y] != orbit_size[sym_bijection.table[y] as usize] {
            fibers_are_orbits = false;
        }
    }
    if !fibers_are_orbits {
        return Err(cert_err(loc_sym, "quotient map fibers are not the Σ_p-orbits"));
    }
    Ok(SymSliceCertificate {
        p,
        spec,
        m,
        power_bijection,
        sym_reduced_size: sym.reduced_size(),
        sym_bijection,
        fiber_sizes: fiber_sizes[1..].to_vec(),
        fibers_are_orbits,
    })
}

/// Certifies `X ∧ Y ≅ Y ∧ X` at every level via `[g, (a, b)] ↦ [g β^{-1}, (b, a)]`.
pub fn commutativity_check(x: &SymmetricSequence, y: &SymmetricSequence) -> Result<Vec<BijectionCertificate>> {
    let xy = seq_smash(x, y)?;
    let yx = seq_smash(y, x)?;
    let mut out = Vec::new();
    for m in 0..=x.max_degree() {
        let location = format!("twist at level {m}");
        let (l, r) = (&xy.levels[m], &yx.levels[m]);
        let g = &l.group;
        let table = l.table_from_pairs(xy.seq.level(m).size(), &location, |pt| {
            let blocks = &l.summands[pt.summand].blocks;
            let beta = block_permutation(blocks, &[1, 0]);
            let gb = g.elements()[pt.g].compose(&beta.inverse());
            let s = r.summand_of_blocks(&[blocks[1], blocks[0]]).unwrap();
            Ok(r.point(s, g.index_of(&gb).unwrap(), &[pt.coords[1], pt.coords[0]]))
        })?;
        out.push(verify_equivariant_bijection(xy.seq.level(m), yx.seq.level(m), &table, &location)?);
    }
    Ok(out)
}

/// Certifies `(X ∧ Y) ∧ Z ≅ X ∧ Y ∧ Z ≅ X ∧ (Y ∧ Z)` at every level.
pub fn associativity_check(
    x: &SymmetricSequence,
    y: &SymmetricSequence,
    z: &SymmetricSequence,
) -> Result<Vec<(BijectionCertificate, BijectionCertificate)>> {
    let xy = seq_smash(x, y)?;
    let yz = seq_smash(y, z)?;
    let left = seq_smash(&xy.seq, z)?;
    let right = seq_smash(x, &yz.seq)?;
    let flat = smash_many(&[x, y, z])?;
    let mut out = Vec::new();
    for m in 0..=x.max_degree() {
        let f = &flat.levels[m];
        let g = &f.group;
        let location = format!("left bracket at level {m}");
        let l = &left.levels[m];
        let lt = l.table_from_pairs(left.seq.level(m).size(), &location, |pt| {
            let outer = &l.summands[pt.summand].blocks;
            let inner = xy.levels[outer[0]].decompose(pt.coords[0]);
            let ib = &xy.levels[outer[0]].summands[inner.summand].blocks;
            let gi = &xy.levels[outer[0]].group.elements()[inner.g];
            let e = g.elements()[pt.g].compose(&gi.direct_sum(&Perm::identity(outer[1])));
            let s = f.summand_of_blocks(&[ib[0], ib[1], outer[1]]).unwrap();
            Ok(f.point(s, g.index_of(&e).unwrap(), &[inner.coords[0], inner.coords[1], pt.coords[1]]))
        })?;
        let lc = verify_equivariant_bijection(left.seq.level(m), flat.seq.level(m), &lt, &location)?;
        let location = format!("right bracket at level {m}");
        let r = &right.levels[m];
        let rt = r.table_from_pairs(right.seq.level(m).size(), &location, |pt| {
            let outer = &r.summands[pt.summand].blocks;
            let inner = yz.levels[outer[1]].decompose(pt.coords[1]);
            let ib = &yz.levels[outer[1]].summands[inner.summand].blocks;
            let gi = &yz.levels[outer[1]].group.elements()[inner.g];
            let e = g.elements()[pt.g].compose(&Perm::identity(outer[0]).direct_sum(gi));
            let s = f.summand_of_blocks(&[outer[0], ib[0], ib[1]]).unwrap();
            Ok(f.point(s, g.index_of(&e).unwrap(), &[pt.coords[0], inner.coords[0], inner.coords[1]]))
        })?;
        let rc = verify_equivariant_bijection(right.seq.level(m), flat.seq.level(m), &rt, &location)?;
        out.push((lc, rc));
    }
    Ok(out)
}

/// Certifies `X ∧ 𝟙 ≅ X` at every level via `[g, (a, 1)] ↦ g·a`.
pub fn unit_check(x: &SymmetricSequence) -> Result<Vec<BijectionCertificate>> {
    let unit = SymmetricSequence::unit(x.max_degree())?;
    let xu = seq_smash(x, &unit)?;
    let mut out = Vec::new();
    for m in 0..=x.max_degree() {
        let location = format!("unit law at level {m}");
        let level = &xu.levels[m];
        let target = x.level(m);
        let table = level.table_from_pairs(xu.seq.level(m).size(), &location, |pt| Ok(target.act(pt.g, pt.coords[0])))?;
        out.push(verify_equivariant_bijection(xu.seq.level(m), target, &table, &location)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_monoid_sizes() {
        let s = free_monoid(2, 4).unwrap();
        assert_eq!(s.reduced_sizes(), vec![1, 2, 4, 8, 16]);
        assert_eq!(s.level(0).label(1), "1");
        let (_, q) = orbit_quotient(s.level(2));
        assert_eq!(q.len() - 1, 3);
    }

    #[test]
    fn smash_with_unit_and_degree_two() {
        let x = SymmetricSequence::concentrated(1, 1, 3).unwrap();
        let xx = seq_smash(&x, &x).unwrap();
        assert_eq!(xx.seq.reduced_sizes(), vec![0, 0, 2, 0]);
        assert_eq!(unit_check(&x).unwrap().len(), 4);
        let u = SymmetricSequence::unit(3).unwrap();
        assert_eq!(seq_smash(&u, &u).unwrap().seq.reduced_sizes(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn free_spectrum_levels() {
        for (n, a, t) in [(0, 2, 1), (1, 1, 2), (2, 2, 2)] {
            let f = free_spectrum(FreeSpectrumSpec { n, a, t }, 4).unwrap();
            for m in 0..=4 {
                let expected = if m < n { 0 } else { factorial(m) / factorial(m - n) * a * t.pow((m - n) as u32) };
                assert_eq!(f.seq.level(m).reduced_size(), expected, "n={n} m={m}");
            }
        }
        // F_0 A at level m is A ∧ T^∧m with the plain permutation action.
        let f = free_spectrum(FreeSpectrumSpec { n: 0, a: 1, t: 2 }, 3).unwrap();
        let s = free_monoid(2, 3).unwrap();
        assert_eq!(f.seq.level(3).fingerprint(), s.level(3).fingerprint());
    }

    #[test]
    fn slices() {
        let c = slice_check(FreeSpectrumSpec { n: 1, a: 1, t: 2 }, 3).unwrap();
        assert_eq!((c.reduced_size, c.expected_size), (12, 12));
        for n in 0..=2 {
            for m in n..=4 {
                let c = slice_check(FreeSpectrumSpec { n, a: 2, t: 1 }, m).unwrap();
                assert_eq!(c.reduced_size, c.expected_size);
            }
        }
        assert!(slice_check(FreeSpectrumSpec { n: 2, a: 1, t: 1 }, 1).is_err());
        let empty = slice_check(FreeSpectrumSpec { n: 0, a: 0, t: 2 }, 2).unwrap();
        assert_eq!((empty.reduced_size, empty.expected_size), (0, 0));
    }

    #[test]
    fn sym_slices() {
        let c = sym_slice_check(2, FreeSpectrumSpec { n: 1, a: 2, t: 1 }, 2).unwrap();
        assert_eq!(c.sym_reduced_size, 4);
        let c = sym_slice_check(2, FreeSpectrumSpec { n: 1, a: 1, t: 2 }, 3).unwrap();
        assert!(c.fibers_are_orbits);
        assert!(c.fiber_sizes.iter().all(|&s| s == 2));
        let c = sym_slice_check(1, FreeSpectrumSpec { n: 1, a: 1, t: 1 }, 2).unwrap();
        assert!(c.fiber_sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn symmetric_monoidal_structure() {
        let x = SymmetricSequence::concentrated(1, 2, 3).unwrap();
        let t = free_monoid(1, 3).unwrap();
        let f = free_spectrum(FreeSpectrumSpec { n: 1, a: 1, t: 1 }, 3).unwrap().seq;
        assert_eq!(commutativity_check(&x, &t).unwrap().len(), 4);
        assert_eq!(commutativity_check(&f, &x).unwrap().len(), 4);
        assert_eq!(associativity_check(&x, &t, &f).unwrap().len(), 4);
        unit_check(&f).unwrap();
    }

    #[test]
    fn twist_squares_to_identity() {
        let f = free_spectrum(FreeSpectrumSpec { n: 1, a: 2, t: 1 }, 3).unwrap().seq;
        let ff = seq_smash(&f, &f).unwrap();
        for m in 0..=3 {
            let tw = twist_action(&ff, 2, m).unwrap();
            for x in 0..tw.size() as Point {
                assert_eq!(tw.gen_act(0, tw.gen_act(0, x)), x);
            }
        }
    }

    #[test]
    fn caps() {
        assert!(free_monoid(1, 9).is_err());
        assert!(sym_slice_check(4, FreeSpectrumSpec { n: 1, a: 1, t: 1 }, 4).is_err());
    }
}
