//! Pointed finite G-sets: orbit quotients, corestriction, restriction and the
//! exhaustive check of the corestriction/restriction adjunction.
//!
//! Actions are stored only for the group's generators; orbits, equivariance
//! and the induced actions are all determined by those. Arbitrary elements act
//! through the word recorded by [`PermGroup::word`].

use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{cert_err, Error, Result};
use crate::perm::{Perm, PermGroup};

/// Element index in a carrier; `0` is always the basepoint.
pub type Point = u32;

#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<PermGroup>,
    labels: Vec<String>,
    /// `gen_action[s][x]` is `generators[s] · x`.
    gen_action: Vec<Vec<Point>>,
}

impl GSet {
    /// Builds a G-set from generator actions, checking it is a pointed group action.
    pub fn new(group: Arc<PermGroup>, labels: Vec<String>, gen_action: Vec<Vec<Point>>) -> Result<Self> {
        let set = Self::new_unchecked(group, labels, gen_action);
        set.validate()?;
        Ok(set)
    }

    pub(crate) fn new_unchecked(group: Arc<PermGroup>, labels: Vec<String>, gen_action: Vec<Vec<Point>>) -> Self {
        GSet {
            group,
            labels,
            gen_action,
        }
    }

    /// The trivial action on a pointed set.
    pub fn trivial(group: Arc<PermGroup>, labels: Vec<String>) -> Self {
        let n = labels.len();
        let gen_action = vec![(0..n as Point).collect(); group.generators().len()];
        GSet {
            group,
            labels,
            gen_action,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn reduced_size(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Point) -> &str {
        &self.labels[x as usize]
    }

    pub fn gen_act(&self, s: usize, x: Point) -> Point {
        self.gen_action[s][x as usize]
    }

    pub fn gen_table(&self, s: usize) -> &[Point] {
        &self.gen_action[s]
    }

    /// Action of group element number `g`.
    pub fn act(&self, g: usize, x: Point) -> Point {
        self.group.word(g).into_iter().fold(x, |y, s| self.gen_act(s, y))
    }

    /// Action of an arbitrary permutation in the group.
    pub fn act_perm(&self, p: &Perm, x: Point) -> Result<Point> {
        let g = self
            .group
            .index_of(p)
            .ok_or_else(|| Error::NotASubgroup(format!("{p} is not in the acting group")))?;
        Ok(self.act(g, x))
    }

    /// Checks that generators act by basepoint-preserving bijections and that the
    /// induced map from the group is a homomorphism.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        if n == 0 {
            return Err(Error::Structure("empty carrier".into()));
        }
        if self.gen_action.len() != self.group.generators().len() {
            return Err(Error::Structure("one action table per generator required".into()));
        }
        for (s, table) in self.gen_action.iter().enumerate() {
            if table.len() != n || table[0] != 0 {
                return Err(Error::Structure(format!("generator {s} does not fix the basepoint")));
            }
            let mut seen = vec![false; n];
            for &y in table {
                if y as usize >= n || std::mem::replace(&mut seen[y as usize], true) {
                    return Err(Error::Structure(format!("generator {s} does not act bijectively")));
                }
            }
        }
        // Tabulate every element via its word, then check s·(g·x) = (s∘g)·x.
        let g = &self.group;
        let tables: Vec<Vec<Point>> = (0..g.order()).map(|e| (0..n as Point).map(|x| self.act(e, x)).collect()).collect();
        if tables[0].iter().enumerate().any(|(x, &y)| x as Point != y) {
            return Err(Error::Structure("identity acts non-trivially".into()));
        }
        for (e, elem) in g.elements().iter().enumerate() {
            for (s, gen) in g.generators().iter().enumerate() {
                let prod = g.index_of(&gen.compose(elem)).expect("group is closed");
                for x in 0..n {
                    if self.gen_action[s][tables[e][x] as usize] != tables[prod][x] {
                        return Err(Error::Structure(format!(
                            "action is not associative at {} on {}",
                            elem,
                            self.labels[x]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Orbit index of every point (orbits numbered by their minimal element).
    pub fn orbits(&self) -> OrbitQuotient {
        let n = self.size();
        let mut uf = UnionFind::new(n);
        for table in &self.gen_action {
            for (x, &y) in table.iter().enumerate() {
                uf.union(x, y as usize);
            }
        }
        uf.quotient()
    }

    /// Whether `self` and `other` are acted on by the same generator list.
    pub fn same_generators(&self, other: &GSet) -> bool {
        self.group.degree() == other.group.degree() && self.group.generators() == other.group.generators()
    }

    /// Digest of the carrier size and all generator tables.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.size().hash(&mut h);
        self.gen_action.hash(&mut h);
        h.finish()
    }
}

/// Orbit decomposition: `projection[x]` is the orbit of `x`, orbit `k` is represented by
/// `reps[k]`, the smallest point in it. Orbit `0` is the basepoint's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitQuotient {
    pub reps: Vec<Point>,
    pub projection: Vec<Point>,
}

impl OrbitQuotient {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Keeps the smaller root so every class is rooted at its minimum.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn quotient(&mut self) -> OrbitQuotient {
        let n = self.parent.len();
        let mut class = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut projection = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            if class[r] == u32::MAX {
                class[r] = reps.len() as u32;
                reps.push(r as Point);
            }
            projection[x] = class[r];
        }
        OrbitQuotient { reps, projection }
    }
}

/// The orbit set of `a` as a pointed set (labels of the orbit representatives),
/// with the projection from `a`.
pub fn orbit_quotient(a: &GSet) -> (Vec<String>, OrbitQuotient) {
    let q = a.orbits();
    let labels = q.reps.iter().map(|&r| a.labels[r as usize].clone()).collect();
    (labels, q)
}

/// `cor^G_H(X)` together with the class of every pair `(g, x)` of `G × X`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub gset: GSet,
    /// Class of the pair `(g, x)` stored at `g * |X| + x`; pairs with `x = *` go to `0`.
    pub class_of: Vec<Point>,
    /// Canonical (lexicographically minimal) pair `(g, x)` of each class.
    pub reps: Vec<(usize, Point)>,
    pub source_size: usize,
}

impl Induced {
    pub fn class(&self, g: usize, x: Point) -> Point {
        self.class_of[g * self.source_size + x as usize]
    }
}

fn check_subgroup(g: &PermGroup, h: &PermGroup) -> Result<()> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup(format!(
            "group of order {} in degree {} is not contained in the ambient group of order {} in degree {}",
            h.order(),
            h.degree(),
            g.order(),
            g.degree()
        )));
    }
    Ok(())
}

/// Corestriction `cor^G_H(X) = (G_+ ∧ X)/H` with `h·(g, x) = (g h^{-1}, h x)` and
/// `G` acting on the left factor.
pub fn cor(g: &Arc<PermGroup>, x: &GSet) -> Result<Induced> {
    let h = x.group();
    check_subgroup(g, h)?;
    let n = x.size();
    let total = g.order() * n;
    let mut uf = UnionFind::new(total + 1);
    // Slot `total` collects every pair with a basepoint coordinate.
    for e in 0..g.order() {
        uf.union(e * n, total);
    }
    let h_inv: Vec<usize> = h
        .generators()
        .iter()
        .map(|p| g.index_of(&p.inverse()).expect("subgroup element"))
        .collect();
    let right_mult: Vec<Vec<usize>> = h_inv
        .iter()
        .map(|&hi| {
            let hp = &g.elements()[hi];
            g.elements().iter().map(|e| g.index_of(&e.compose(hp)).unwrap()).collect()
        })
        .collect();
    for (s, rm) in right_mult.iter().enumerate() {
        for e in 0..g.order() {
            for xp in 1..n as Point {
                uf.union(e * n + xp as usize, rm[e] * n + x.gen_act(s, xp) as usize);
            }
        }
    }
    // Number classes: basepoint class first, then by minimal pair.
    let base_root = uf.find(total);
    let mut class_num = vec![u32::MAX; total + 1];
    class_num[base_root] = 0;
    let mut reps = vec![(0usize, 0 as Point)];
    let mut class_of = vec![0; total];
    for idx in 0..total {
        let r = uf.find(idx);
        if class_num[r] == u32::MAX {
            class_num[r] = reps.len() as u32;
            reps.push((idx / n, (idx % n) as Point));
        }
        class_of[idx] = class_num[r];
    }
    let labels: Vec<String> = reps
        .iter()
        .enumerate()
        .map(|(k, &(e, xp))| {
            if k == 0 {
                "*".to_string()
            } else {
                format!("[{}|{}]", g.elements()[e], x.label(xp))
            }
        })
        .collect();
    let gen_action = g
        .generators()
        .iter()
        .map(|s| {
            reps.iter()
                .enumerate()
                .map(|(k, &(e, xp))| {
                    if k == 0 {
                        0
                    } else {
                        let se = g.index_of(&s.compose(&g.elements()[e])).unwrap();
                        class_of[se * n + xp as usize]
                    }
                })
                .collect()
        })
        .collect();
    Ok(Induced {
        gset: GSet::new_unchecked(g.clone(), labels, gen_action),
        class_of,
        reps,
        source_size: n,
    })
}

/// Restriction of a `G`-set to the subgroup `H`.
pub fn res(h: &Arc<PermGroup>, y: &GSet) -> Result<GSet> {
    let g = y.group();
    check_subgroup(g, h)?;
    let gen_action = h
        .generators()
        .iter()
        .map(|p| {
            let e = g.index_of(p).unwrap();
            (0..y.size() as Point).map(|v| y.act(e, v)).collect()
        })
        .collect();
    Ok(GSet::new_unchecked(h.clone(), y.labels.clone(), gen_action))
}

/// All pointed equivariant maps `a -> b`, each as a table, in lexicographic order.
/// Values are chosen on orbit representatives and propagated along generators.
pub fn equivariant_maps(a: &GSet, b: &GSet) -> Result<Vec<Vec<Point>>> {
    if !a.same_generators(b) {
        return Err(Error::Mismatch("G-sets over different generator lists".into()));
    }
    let q = a.orbits();
    let reps: Vec<Point> = q.reps.iter().copied().filter(|&r| r != 0).collect();
    let mut out = Vec::new();
    let mut current = vec![u32::MAX; a.size()];
    current[0] = 0;
    fn extend(a: &GSet, b: &GSet, f: &mut [Point], start: Point, value: Point) -> bool {
        let mut queue = VecDeque::from([(start, value)]);
        f[start as usize] = value;
        while let Some((x, v)) = queue.pop_front() {
            for s in 0..a.gen_action.len() {
                let (sx, sv) = (a.gen_act(s, x), b.gen_act(s, v));
                match f[sx as usize] {
                    u32::MAX => {
                        f[sx as usize] = sv;
                        queue.push_back((sx, sv));
                    }
                    w if w != sv => return false,
                    _ => {}
                }
            }
        }
        true
    }
    fn go(a: &GSet, b: &GSet, reps: &[Point], k: usize, f: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if k == reps.len() {
            out.push(f.clone());
            return;
        }
        for v in 0..b.size() as Point {
            let saved = f.clone();
            if extend(a, b, f, reps[k], v) {
                go(a, b, reps, k + 1, f, out);
            }
            *f = saved;
        }
    }
    go(a, b, &reps, 0, &mut current, &mut out);
    Ok(out)
}

/// Largest reduced carrier accepted by [`adjunction_check`].
pub const ADJUNCTION_CAP: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct AdjunctionReport {
    pub hom_cor_count: usize,
    pub hom_res_count: usize,
    /// `(i, j)`: the `i`-th map `cor X -> Y` corresponds to the `j`-th map `X -> res Y`.
    pub bijection: Vec<(usize, usize)>,
    pub passed: bool,
}

/// Enumerates `Hom_G(cor^G_H X, Y)` and `Hom_H(X, res^G_H Y)` and checks that
/// restriction along the unit `x ↦ [e, x]` and extension `[g, x] ↦ g·ψ(x)` are
/// mutually inverse bijections.
pub fn adjunction_check(g: &Arc<PermGroup>, x: &GSet, y: &GSet) -> Result<AdjunctionReport> {
    for s in [x.reduced_size(), y.reduced_size()] {
        if s > ADJUNCTION_CAP {
            return Err(Error::CarrierTooLarge {
                size: s,
                cap: ADJUNCTION_CAP,
            });
        }
    }
    if !Arc::ptr_eq(y.group(), g) && **y.group() != **g {
        return Err(Error::Mismatch("Y is not a G-set for the ambient group".into()));
    }
    let h = x.group();
    let induced = cor(g, x)?;
    let ry = res(h, y)?;
    let left = equivariant_maps(&induced.gset, y)?;
    let right = equivariant_maps(x, &ry)?;
    let identity = 0usize;
    debug_assert!(g.elements()[identity].is_identity());
    let restrict = |phi: &Vec<Point>| -> Vec<Point> {
        (0..x.size() as Point)
            .map(|xp| if xp == 0 { 0 } else { phi[induced.class(identity, xp) as usize] })
            .collect()
    };
    let extend = |psi: &Vec<Point>| -> Vec<Point> {
        induced
            .reps
            .iter()
            .enumerate()
            .map(|(k, &(e, xp))| if k == 0 { 0 } else { y.act(e, psi[xp as usize]) })
            .collect()
    };
    let mut bijection = Vec::with_capacity(left.len());
    for (i, phi) in left.iter().enumerate() {
        let psi = restrict(phi);
        let j = right
            .binary_search(&psi)
            .map_err(|_| cert_err(format!("Hom_G map {i}"), "restriction is not H-equivariant"))?;
        if &extend(&psi) != phi {
            return Err(cert_err(format!("Hom_G map {i}"), "extension does not invert restriction"));
        }
        bijection.push((i, j));
    }
    for (j, psi) in right.iter().enumerate() {
        let phi = extend(psi);
        if left.binary_search(&phi).is_err() || restrict(&phi) != *psi {
            return Err(cert_err(format!("Hom_H map {j}"), "extension is not an inverse"));
        }
    }
    Ok(AdjunctionReport {
        hom_cor_count: left.len(),
        hom_res_count: right.len(),
        passed: left.len() == right.len(),
        bijection,
    })
}

/// A verified equivariant bijection between two G-sets over the same generators.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionCertificate {
    pub left: Vec<String>,
    pub right: Vec<String>,
    /// `table[x]` is the image of left point `x`.
    pub table: Vec<Point>,
    pub generators_checked: usize,
}

/// Checks `map: a -> b` is a pointed bijection commuting with every generator, then
/// re-checks by comparing the fingerprint of `a` transported along `map` with `b`'s.
pub fn verify_equivariant_bijection(a: &GSet, b: &GSet, map: &[Point], location: &str) -> Result<BijectionCertificate> {
    if !a.same_generators(b) {
        return Err(cert_err(location, "the two sides are acted on by different generators"));
    }
    if map.len() != a.size() || a.size() != b.size() {
        return Err(cert_err(location, format!("sizes differ: {} vs {}", a.size(), b.size())));
    }
    if map[0] != 0 {
        return Err(cert_err(location, "basepoint not preserved"));
    }
    let mut inverse = vec![u32::MAX; b.size()];
    for (x, &y) in map.iter().enumerate() {
        if y as usize >= b.size() || inverse[y as usize] != u32::MAX {
            return Err(cert_err(location, format!("not injective at {}", a.label(x as Point))));
        }
        inverse[y as usize] = x as Point;
    }
    for s in 0..a.gen_action.len() {
        for x in 0..a.size() {
            if map[a.gen_act(s, x as Point) as usize] != b.gen_act(s, map[x]) {
                return Err(cert_err(
                    location,
                    format!("generator {} does not commute at {}", a.group.generators()[s], a.label(x as Point)),
                ));
            }
        }
    }
    let transported: Vec<Vec<Point>> = a
        .gen_action
        .iter()
        .map(|t| {
            let mut out = vec![0; b.size()];
            for (x, &sx) in t.iter().enumerate() {
                out[map[x] as usize] = map[sx as usize];
            }
            out
        })
        .collect();
    let moved = GSet::new_unchecked(b.group.clone(), b.labels.clone(), transported);
    if moved.fingerprint() != b.fingerprint() {
        return Err(cert_err(location, "transported structure differs"));
    }
    Ok(BijectionCertificate {
        left: a.labels.clone(),
        right: b.labels.clone(),
        table: map.to_vec(),
        generators_checked: a.gen_action.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::EmbeddingSpec;

    fn labels(n: usize) -> Vec<String> {
        std::iter::once("*".to_string()).chain((1..=n).map(|k| format!("p{k}"))).collect()
    }

    fn sym(n: usize) -> Arc<PermGroup> {
        Arc::new(PermGroup::symmetric(n).unwrap())
    }

    /// Σ_n on `{*, 1..n}` by permuting letters.
    fn letters(g: &Arc<PermGroup>) -> GSet {
        let n = g.degree();
        let gen_action = g
            .generators()
            .iter()
            .map(|p| std::iter::once(0).chain((0..n).map(|k| p.apply(k) as Point + 1)).collect())
            .collect();
        GSet::new(g.clone(), labels(n), gen_action).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let s2 = sym(2);
        let triv = GSet::trivial(s2.clone(), labels(3));
        assert_eq!(triv.orbits().projection, vec![0, 1, 2, 3]);
        let swap = GSet::new(s2.clone(), labels(2), vec![vec![0, 2, 1]]).unwrap();
        assert_eq!(swap.orbits().len(), 2);
        // ordered pairs over {x, y}: xx, xy, yx, yy with coordinate swap
        let pairs = GSet::new(s2, labels(4), vec![vec![0, 1, 3, 2, 4]]).unwrap();
        assert_eq!(pairs.orbits().len() - 1, 3);
    }

    #[test]
    fn orbit_quotient_idempotent() {
        let g = sym(3);
        let a = letters(&g);
        let (lab, q) = orbit_quotient(&a);
        let again = GSet::trivial(g, lab);
        let q2 = again.orbits();
        assert_eq!(q2.projection, (0..q.len() as Point).collect::<Vec<_>>());
    }

    #[test]
    fn invalid_action_rejected() {
        let s2 = sym(2);
        assert!(GSet::new(s2, labels(2), vec![vec![1, 0, 2]]).is_err());
    }

    #[test]
    fn non_homomorphism_rejected() {
        // In Σ_3, s1 s2 has order 3; s1 ↦ swap, s2 ↦ identity on {a,b} fails (s1 s2)^3 = 1.
        let s3 = sym(3);
        let bad = GSet::new(s3, labels(2), vec![vec![0, 2, 1], vec![0, 1, 2]]);
        assert!(bad.is_err());
    }

    #[test]
    fn cor_over_whole_group_is_identity() {
        let g = sym(3);
        let x = letters(&g);
        let c = cor(&g, &x).unwrap();
        assert_eq!(c.gset.size(), x.size());
        let map: Vec<Point> = (0..x.size() as Point).map(|p| if p == 0 { 0 } else { c.class(0, p) }).collect();
        verify_equivariant_bijection(&x, &c.gset, &map, "cor^G_G").unwrap();
    }

    #[test]
    fn cor_from_trivial_subgroup() {
        let g = sym(2);
        let h = Arc::new(PermGroup::trivial(2).unwrap());
        let x = GSet::trivial(h, labels(1));
        let c = cor(&g, &x).unwrap();
        assert_eq!(c.gset.reduced_size(), 2);
        assert_eq!(c.gset.orbits().len(), 2);
        c.gset.validate().unwrap();
    }

    #[test]
    fn cor_size_law() {
        let g = sym(3);
        let h = Arc::new(EmbeddingSpec::Tail { m: 3, k: 2 }.group().unwrap());
        let x = GSet::new(h, labels(2), vec![vec![0, 2, 1]]).unwrap();
        let c = cor(&g, &x).unwrap();
        assert_eq!(c.gset.reduced_size(), 6);
        c.gset.validate().unwrap();
    }

    #[test]
    fn cor_rejects_non_subgroup() {
        let g = sym(2);
        let other = Arc::new(PermGroup::symmetric(3).unwrap());
        let x = GSet::trivial(other, labels(1));
        assert!(matches!(cor(&g, &x), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn res_examples() {
        let g = sym(3);
        let y = letters(&g);
        let triv = Arc::new(PermGroup::trivial(3).unwrap());
        let r = res(&triv, &y).unwrap();
        assert_eq!(r.orbits().len(), y.size());
        let same = res(&g, &y).unwrap();
        assert_eq!(same.orbits(), y.orbits());
        let tail = Arc::new(EmbeddingSpec::Tail { m: 3, k: 2 }.group().unwrap());
        assert!(res(&tail, &y).unwrap().orbits().len() >= y.orbits().len());
    }

    #[test]
    fn adjunction_examples() {
        let g = sym(2);
        let triv = Arc::new(PermGroup::trivial(2).unwrap());
        let y = GSet::new(g.clone(), labels(2), vec![vec![0, 2, 1]]).unwrap();
        let point = GSet::trivial(triv.clone(), labels(0));
        let r = adjunction_check(&g, &point, &y).unwrap();
        assert_eq!((r.hom_cor_count, r.hom_res_count), (1, 1));
        let x = GSet::trivial(triv, labels(1));
        let r = adjunction_check(&g, &x, &y).unwrap();
        assert!(r.passed);
        // Maps from one point to {*, a, b}: three choices on either side.
        assert_eq!(r.hom_res_count, 3);
        let xg = letters(&g);
        let r = adjunction_check(&g, &xg, &y).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn adjunction_cap() {
        let g = sym(2);
        let big = GSet::trivial(g.clone(), labels(7));
        assert!(matches!(adjunction_check(&g, &big, &big), Err(Error::CarrierTooLarge { .. })));
    }
}
