//! Finite pointed simplicial sets stored levelwise up to a dimension bound.
//!
//! Every level is a finite set of simplices `0..size`, one of which is the
//! basepoint. Faces and degeneracies are stored as dense lookup tables, so
//! all the pointed monoidal constructions (wedge, smash, quotients, orbit
//! quotients) are plain finite-set computations done one level at a time.
//!
//! Sets produced by the constructors in this module always put the
//! basepoint at index 0 and order the remaining simplices by a canonical
//! key, so outputs are deterministic. Sets read from files keep the order
//! they were given in.

use crate::error::{Error, Result};

/// Simplex index within one level.
pub type Simplex = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSimplicialSet {
    dim_bound: usize,
    sizes: Vec<usize>,
    basepoint: Vec<Simplex>,
    /// `faces[m][i][x]` is `d_i x` for `x` at level `m >= 1`; `faces[0]` is empty.
    faces: Vec<Vec<Vec<Simplex>>>,
    /// `degeneracies[m][i][x]` is `s_i x` for `m < dim_bound`.
    degeneracies: Vec<Vec<Vec<Simplex>>>,
    geometric_dim: Option<usize>,
    labels: Option<Vec<Vec<String>>>,
}

impl PointedSimplicialSet {
    /// Assembles a set from raw tables and checks every stored simplicial identity.
    pub fn from_tables(
        dim_bound: usize,
        sizes: Vec<usize>,
        basepoint: Vec<Simplex>,
        faces: Vec<Vec<Vec<Simplex>>>,
        degeneracies: Vec<Vec<Vec<Simplex>>>,
        geometric_dim: Option<usize>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        let set = PointedSimplicialSet {
            dim_bound,
            sizes,
            basepoint,
            faces,
            degeneracies,
            geometric_dim: None,
            labels,
        };
        set.validate()?;
        let set = set.with_geometric_bound(geometric_dim);
        if let Some(d) = geometric_dim {
            if set.geometric_dim.is_none() {
                return Err(Error::Structure(format!(
                    "declared geometric_dim {d} but a non-degenerate simplex exists above it"
                )));
            }
        }
        Ok(set)
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    pub fn level_size(&self, m: usize) -> usize {
        self.sizes[m]
    }

    /// Number of non-basepoint simplices at level `m`.
    pub fn reduced_size(&self, m: usize) -> usize {
        self.sizes[m] - 1
    }

    pub fn basepoint(&self, m: usize) -> Simplex {
        self.basepoint[m]
    }

    pub fn face(&self, m: usize, i: usize, x: Simplex) -> Simplex {
        self.faces[m][i][x as usize]
    }

    pub fn degeneracy(&self, m: usize, i: usize, x: Simplex) -> Simplex {
        self.degeneracies[m][i][x as usize]
    }

    /// Largest level carrying a non-degenerate non-basepoint simplex, when it is
    /// certified to lie within the stored range.
    pub fn geometric_dim(&self) -> Option<usize> {
        self.geometric_dim
    }

    pub fn labels(&self) -> Option<&Vec<Vec<String>>> {
        self.labels.as_ref()
    }

    pub fn label(&self, m: usize, x: Simplex) -> String {
        match &self.labels {
            Some(l) => l[m][x as usize].clone(),
            None if x == self.basepoint[m] => "*".to_string(),
            None => x.to_string(),
        }
    }

    pub(crate) fn with_labels(mut self, labels: Vec<Vec<String>>) -> Self {
        self.labels = Some(labels);
        self
    }

    /// Non-basepoint simplices at level `m`.
    pub fn non_base(&self, m: usize) -> impl Iterator<Item = Simplex> + '_ {
        let b = self.basepoint[m];
        (0..self.sizes[m] as Simplex).filter(move |&x| x != b)
    }

    /// Marks which simplices at level `m` are degenerate.
    pub fn degenerate_mask(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; self.sizes[m]];
        if m > 0 {
            for i in 0..m {
                for &y in &self.degeneracies[m - 1][i] {
                    mask[y as usize] = true;
                }
            }
        }
        mask
    }

    /// Non-degenerate, non-basepoint simplices at level `m`, in index order.
    pub fn nondegenerate(&self, m: usize) -> Vec<Simplex> {
        let mask = self.degenerate_mask(m);
        self.non_base(m).filter(|&x| !mask[x as usize]).collect()
    }

    pub fn is_point(&self) -> bool {
        self.sizes.iter().all(|&s| s == 1)
    }

    /// Records the certified dimension when an upper bound on it is known and fits
    /// within the stored levels.
    pub(crate) fn with_geometric_bound(mut self, bound: Option<usize>) -> Self {
        self.geometric_dim = match bound {
            Some(b) if b <= self.dim_bound => {
                if (b + 1..=self.dim_bound).any(|m| !self.nondegenerate(m).is_empty()) {
                    None
                } else {
                    Some(
                        (0..=b)
                            .rev()
                            .find(|&m| !self.nondegenerate(m).is_empty())
                            .unwrap_or(0),
                    )
                }
            }
            _ => None,
        };
        self
    }

    /// Upper bound on the geometric dimension that survives truncation, used to
    /// propagate dimension information through constructions.
    pub(crate) fn dim_hint(&self) -> Option<usize> {
        self.geometric_dim
    }

    /// Restricts to levels `0..=bound`.
    pub fn truncate(&self, bound: usize) -> PointedSimplicialSet {
        if bound >= self.dim_bound {
            return self.clone();
        }
        let degeneracies = self.degeneracies[..bound].to_vec();
        let set = PointedSimplicialSet {
            dim_bound: bound,
            sizes: self.sizes[..=bound].to_vec(),
            basepoint: self.basepoint[..=bound].to_vec(),
            faces: self.faces[..=bound].to_vec(),
            degeneracies,
            geometric_dim: None,
            labels: self.labels.as_ref().map(|l| l[..=bound].to_vec()),
        };
        set.with_geometric_bound(self.geometric_dim)
    }

    /// Checks table shapes, the simplicial identities wherever both sides are
    /// stored, and that the basepoint is preserved by every structure map.
    pub fn validate(&self) -> Result<()> {
        let top = self.dim_bound;
        let bad = |msg: String| Err(Error::Structure(msg));
        if self.sizes.len() != top + 1 || self.basepoint.len() != top + 1 {
            return bad("level count does not match dim_bound".into());
        }
        if self.faces.len() != top + 1 || self.degeneracies.len() != top {
            return bad("structure table count does not match dim_bound".into());
        }
        if let Some(l) = &self.labels {
            if l.len() != top + 1 || l.iter().zip(&self.sizes).any(|(v, &s)| v.len() != s) {
                return bad("label table does not match level sizes".into());
            }
        }
        for m in 0..=top {
            if self.sizes[m] == 0 || self.basepoint[m] as usize >= self.sizes[m] {
                return bad(format!("level {m} has no valid basepoint"));
            }
            let expect_faces = if m == 0 { 0 } else { m + 1 };
            if self.faces[m].len() != expect_faces {
                return bad(format!("level {m} has {} face maps", self.faces[m].len()));
            }
            for (i, table) in self.faces[m].iter().enumerate() {
                if table.len() != self.sizes[m]
                    || table.iter().any(|&y| y as usize >= self.sizes[m - 1])
                {
                    return bad(format!("face d_{i} at level {m} is malformed"));
                }
                if table[self.basepoint[m] as usize] != self.basepoint[m - 1] {
                    return bad(format!("d_{i} moves the basepoint at level {m}"));
                }
            }
            if m < top {
                if self.degeneracies[m].len() != m + 1 {
                    return bad(format!("level {m} has wrong degeneracy count"));
                }
                for (i, table) in self.degeneracies[m].iter().enumerate() {
                    if table.len() != self.sizes[m]
                        || table.iter().any(|&y| y as usize >= self.sizes[m + 1])
                    {
                        return bad(format!("degeneracy s_{i} at level {m} is malformed"));
                    }
                    if table[self.basepoint[m] as usize] != self.basepoint[m + 1] {
                        return bad(format!("s_{i} moves the basepoint at level {m}"));
                    }
                }
            }
        }
        // d_i d_j = d_{j-1} d_i for i < j, on level m >= 2.
        for m in 2..=top {
            for j in 1..=m {
                for i in 0..j {
                    for x in 0..self.sizes[m] as Simplex {
                        let lhs = self.face(m - 1, i, self.face(m, j, x));
                        let rhs = self.face(m - 1, j - 1, self.face(m, i, x));
                        if lhs != rhs {
                            return bad(format!("d_{i} d_{j} != d_{} d_{i} on {x} at level {m}", j - 1));
                        }
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i <= j, starting at level m with m + 2 <= top.
        for m in 0..top.saturating_sub(1) {
            for j in 0..=m {
                for i in 0..=j {
                    for x in 0..self.sizes[m] as Simplex {
                        let lhs = self.degeneracy(m + 1, i, self.degeneracy(m, j, x));
                        let rhs = self.degeneracy(m + 1, j + 1, self.degeneracy(m, i, x));
                        if lhs != rhs {
                            return bad(format!("s_{i} s_{j} identity fails on {x} at level {m}"));
                        }
                    }
                }
            }
        }
        // Mixed identities: s_j from level m, then d_i from level m + 1.
        for m in 0..top {
            for j in 0..=m {
                for i in 0..=m + 1 {
                    for x in 0..self.sizes[m] as Simplex {
                        let lhs = self.face(m + 1, i, self.degeneracy(m, j, x));
                        let rhs = if i < j {
                            self.degeneracy(m - 1, j - 1, self.face(m, i, x))
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            self.degeneracy(m - 1, j, self.face(m, i - 1, x))
                        };
                        if lhs != rhs {
                            return bad(format!("d_{i} s_{j} identity fails on {x} at level {m}"));
                        }
                    }
                }
            }
        }
        if let Some(d) = self.geometric_dim {
            for m in d + 1..=top {
                if !self.nondegenerate(m).is_empty() {
                    return bad(format!("non-degenerate simplex above geometric_dim {d}"));
                }
            }
        }
        Ok(())
    }
}

/// A pointed simplicial set whose non-basepoint simplices are indexed by sorted
/// keys, so constructions can refer to simplices by their meaning.
///
/// Simplex `0` at every level is the basepoint; simplex `k + 1` carries `keys[m][k]`.
#[derive(Clone, Debug)]
pub struct KeyedSet<K> {
    pub set: PointedSimplicialSet,
    pub keys: Vec<Vec<K>>,
}

impl<K: Ord + Clone> KeyedSet<K> {
    /// Builds a set from per-level key lists. `face`/`degeneracy` return `None`
    /// when the image is the basepoint. Keys are sorted and deduplicated here.
    pub fn build(
        dim_bound: usize,
        mut keys: Vec<Vec<K>>,
        face: impl Fn(usize, usize, &K) -> Option<K>,
        degeneracy: impl Fn(usize, usize, &K) -> Option<K>,
        geometric_bound: Option<usize>,
    ) -> Self {
        assert_eq!(keys.len(), dim_bound + 1);
        for level in &mut keys {
            level.sort();
            level.dedup();
        }
        let lookup = |m: usize, k: Option<K>| -> Simplex {
            match k {
                None => 0,
                Some(k) => match keys[m].binary_search(&k) {
                    Ok(pos) => pos as Simplex + 1,
                    Err(_) => panic!("structure map leaves the key set at level {m}"),
                },
            }
        };
        let sizes: Vec<usize> = keys.iter().map(|l| l.len() + 1).collect();
        let mut faces = vec![Vec::new()];
        for m in 1..=dim_bound {
            let mut per_level = Vec::with_capacity(m + 1);
            for i in 0..=m {
                let mut table = Vec::with_capacity(sizes[m]);
                table.push(0);
                for k in &keys[m] {
                    table.push(lookup(m - 1, face(m, i, k)));
                }
                per_level.push(table);
            }
            faces.push(per_level);
        }
        let mut degeneracies = Vec::with_capacity(dim_bound);
        for m in 0..dim_bound {
            let mut per_level = Vec::with_capacity(m + 1);
            for i in 0..=m {
                let mut table = Vec::with_capacity(sizes[m]);
                table.push(0);
                for k in &keys[m] {
                    table.push(lookup(m + 1, degeneracy(m, i, k)));
                }
                per_level.push(table);
            }
            degeneracies.push(per_level);
        }
        let set = PointedSimplicialSet {
            dim_bound,
            sizes,
            basepoint: vec![0; dim_bound + 1],
            faces,
            degeneracies,
            geometric_dim: None,
            labels: None,
        }
        .with_geometric_bound(geometric_bound);
        KeyedSet { set, keys }
    }

    pub fn index_of(&self, m: usize, key: &K) -> Option<Simplex> {
        self.keys[m].binary_search(key).ok().map(|p| p as Simplex + 1)
    }

    pub fn key(&self, m: usize, x: Simplex) -> Option<&K> {
        if x == 0 {
            None
        } else {
            self.keys[m].get(x as usize - 1)
        }
    }
}

/// A map of pointed simplicial sets, stored as one lookup table per level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub source: PointedSimplicialSet,
    pub target: PointedSimplicialSet,
    pub components: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    pub fn new(
        source: PointedSimplicialSet,
        target: PointedSimplicialSet,
        components: Vec<Vec<Simplex>>,
    ) -> Result<Self> {
        let map = SimplicialMap {
            source,
            target,
            components,
        };
        map.validate()?;
        Ok(map)
    }

    pub fn identity(x: &PointedSimplicialSet) -> Self {
        let components = (0..=x.dim_bound())
            .map(|m| (0..x.level_size(m) as Simplex).collect())
            .collect();
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            components,
        }
    }

    pub fn apply(&self, m: usize, x: Simplex) -> Simplex {
        self.components[m][x as usize]
    }

    /// Checks the map preserves basepoints and commutes with all stored structure maps.
    pub fn validate(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if s.dim_bound() != t.dim_bound() || self.components.len() != s.dim_bound() + 1 {
            return Err(Error::Mismatch("source and target bounds differ".into()));
        }
        for m in 0..=s.dim_bound() {
            let comp = &self.components[m];
            if comp.len() != s.level_size(m) || comp.iter().any(|&y| y as usize >= t.level_size(m)) {
                return Err(Error::Mismatch(format!("component {m} has the wrong shape")));
            }
            if comp[s.basepoint(m) as usize] != t.basepoint(m) {
                return Err(Error::Mismatch(format!("basepoint not preserved at level {m}")));
            }
            for x in 0..s.level_size(m) as Simplex {
                if m > 0 {
                    for i in 0..=m {
                        if self.apply(m - 1, s.face(m, i, x)) != t.face(m, i, self.apply(m, x)) {
                            return Err(Error::Mismatch(format!(
                                "map does not commute with d_{i} at level {m}"
                            )));
                        }
                    }
                }
                if m < s.dim_bound() {
                    for i in 0..=m {
                        if self.apply(m + 1, s.degeneracy(m, i, x))
                            != t.degeneracy(m, i, self.apply(m, x))
                        {
                            return Err(Error::Mismatch(format!(
                                "map does not commute with s_{i} at level {m}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        self.first_collision().is_none()
    }

    fn first_collision(&self) -> Option<(usize, Simplex, Simplex)> {
        for (m, comp) in self.components.iter().enumerate() {
            let mut seen = vec![u32::MAX; self.target.level_size(m)];
            for (x, &y) in comp.iter().enumerate() {
                if seen[y as usize] != u32::MAX {
                    return Some((m, seen[y as usize], x as Simplex));
                }
                seen[y as usize] = x as Simplex;
            }
        }
        None
    }

    /// Composite `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != other.source {
            return Err(Error::Mismatch("target of first map is not source of second".into()));
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(m, c)| c.iter().map(|&x| other.apply(m, x)).collect())
            .collect();
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            components,
        })
    }
}

/// A levelwise-injective simplicial map; the cofibrations of this setting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion(SimplicialMap);

impl Inclusion {
    pub fn new(map: SimplicialMap) -> Result<Self> {
        if let Some((level, a, b)) = map.first_collision() {
            return Err(Error::NotAnInclusion { level, a, b });
        }
        Ok(Inclusion(map))
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.0
    }

    pub fn source(&self) -> &PointedSimplicialSet {
        &self.0.source
    }

    pub fn target(&self) -> &PointedSimplicialSet {
        &self.0.target
    }

    pub fn identity(x: &PointedSimplicialSet) -> Self {
        Inclusion(SimplicialMap::identity(x))
    }

    /// The inclusion of the basepoint `* -> Y`.
    pub fn basepoint(y: &PointedSimplicialSet) -> Self {
        let p = point(y.dim_bound());
        let components = (0..=y.dim_bound()).map(|m| vec![y.basepoint(m)]).collect();
        Inclusion(SimplicialMap {
            source: p,
            target: y.clone(),
            components,
        })
    }

    /// The left summand `X -> X ∨ Y`.
    pub fn wedge_left(x: &PointedSimplicialSet, y: &PointedSimplicialSet) -> Self {
        let (w, embed_x, _) = wedge_with_embeddings(x, y);
        let x = x.truncate(w.dim_bound());
        Inclusion(SimplicialMap {
            source: x,
            target: w,
            components: embed_x,
        })
    }
}

fn monotone_surjections(len: usize, n: usize) -> Vec<Vec<u8>> {
    // Multiplicities c_0..c_n >= 1 summing to len.
    fn go(k: usize, n: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == n {
            if left >= 1 {
                let start = cur.len();
                cur.extend(std::iter::repeat_n(n as u8, left));
                out.push(cur.clone());
                cur.truncate(start);
            }
            return;
        }
        let remaining_values = n - k;
        for c in 1..=left.saturating_sub(remaining_values) {
            let start = cur.len();
            cur.extend(std::iter::repeat_n(k as u8, c));
            go(k + 1, n, left - c, cur, out);
            cur.truncate(start);
        }
    }
    let mut out = Vec::new();
    if len > n {
        go(0, n, len, &mut Vec::new(), &mut out);
    }
    out
}

/// `x = σ^* y` with `y` non-degenerate, or `None` for the basepoint.
fn eilenberg_zilber(x: &PointedSimplicialSet, m: usize, a: Simplex) -> Option<(Vec<u8>, usize, Simplex)> {
    if a == x.basepoint(m) {
        return None;
    }
    for j in 0..m {
        let f = x.face(m, j, a);
        if x.degeneracy(m - 1, j, f) == a {
            let (tau, k, y) = eilenberg_zilber(x, m - 1, f)?;
            let sigma = (0..=m).map(|t| tau[if t <= j { t } else { t - 1 }]).collect();
            return Some((sigma, k, y));
        }
    }
    Some(((0..=m as u8).collect(), m, a))
}

/// Rebuilds `x` with `bound` stored levels, filling levels above the stored range
/// with degenerate simplices. Needs a certified geometric dimension.
pub fn extend_levels(x: &PointedSimplicialSet, bound: usize) -> Result<PointedSimplicialSet> {
    if bound <= x.dim_bound() {
        return Ok(x.truncate(bound));
    }
    let gd = x.geometric_dim().ok_or(Error::Truncation {
        needed: bound,
        have: x.dim_bound(),
    })?;
    type Key = (Vec<u8>, Simplex);
    let nondeg: Vec<Vec<Simplex>> = (0..=gd).map(|k| x.nondegenerate(k)).collect();
    let keys: Vec<Vec<Key>> = (0..=bound)
        .map(|m| {
            let mut level = Vec::new();
            for (k, ys) in nondeg.iter().enumerate().take(m + 1) {
                for sigma in monotone_surjections(m + 1, k) {
                    level.extend(ys.iter().map(|&y| (sigma.clone(), y)));
                }
            }
            level
        })
        .collect();
    let pull = |rho: &[u8], k: usize, y: Simplex| -> Option<Key> {
        // `rho^* y` where `rho` hits every value of `[k]`.
        let (tau, _, z) = eilenberg_zilber(x, k, y)?;
        Some((rho.iter().map(|&t| tau[t as usize]).collect(), z))
    };
    let face = |m: usize, i: usize, key: &Key| -> Option<Key> {
        let (sigma, y) = key;
        let k = *sigma.last().unwrap() as usize;
        let mut rho = sigma.clone();
        rho.remove(i);
        match (0..=k as u8).find(|v| !rho.contains(v)) {
            None => pull(&rho, k, *y),
            Some(v) => {
                let rho: Vec<u8> = rho.iter().map(|&t| if t > v { t - 1 } else { t }).collect();
                debug_assert!(m >= 1);
                pull(&rho, k - 1, x.face(k, v as usize, *y))
            }
        }
    };
    let degeneracy = |_: usize, i: usize, key: &Key| -> Option<Key> {
        let mut sigma = key.0.clone();
        sigma.insert(i, sigma[i]);
        Some((sigma, key.1))
    };
    let keyed = KeyedSet::build(bound, keys, face, degeneracy, Some(gd));
    let labels = keyed
        .keys
        .iter()
        .map(|level| {
            std::iter::once("*".to_string())
                .chain(level.iter().map(|(sigma, y)| {
                    let k = *sigma.last().unwrap() as usize;
                    let name = x.label(k, *y);
                    if sigma.len() == k + 1 {
                        name
                    } else {
                        let s: String = sigma.iter().map(|t| t.to_string()).collect();
                        format!("{name}[{s}]")
                    }
                }))
                .collect()
        })
        .collect();
    Ok(keyed.set.with_labels(labels))
}

/// The one-point simplicial set.
pub fn point(dim_bound: usize) -> PointedSimplicialSet {
    KeyedSet::<()>::build(dim_bound, vec![Vec::new(); dim_bound + 1], |_, _, _| None, |_, _, _| None, Some(0)).set
}

/// `Δ^n/∂Δ^n`: level `m` holds the surjective monotone maps `[m] -> [n]` plus the basepoint.
pub fn sphere(n: usize, dim_bound: usize) -> Result<PointedSimplicialSet> {
    Ok(sphere_keyed(n, dim_bound)?.set)
}

pub fn sphere_keyed(n: usize, dim_bound: usize) -> Result<KeyedSet<Vec<u8>>> {
    if dim_bound < n {
        return Err(Error::BoundBelowGeometricDim {
            dim_bound,
            needed: n,
        });
    }
    let keys = (0..=dim_bound).map(|m| monotone_surjections(m + 1, n)).collect();
    let face = move |_m: usize, i: usize, k: &Vec<u8>| {
        let mut v = k.clone();
        v.remove(i);
        let surjective = v.first() == Some(&0) && v.last() == Some(&(n as u8)) && v.windows(2).all(|w| w[1] - w[0] <= 1);
        surjective.then_some(v)
    };
    let degeneracy = |_m: usize, i: usize, k: &Vec<u8>| {
        let mut v = k.clone();
        v.insert(i, k[i]);
        Some(v)
    };
    Ok(KeyedSet::build(dim_bound, keys, face, degeneracy, Some(n)))
}

/// The standard 1-simplex pointed at vertex 1. Level `m` holds the sequences `0^a 1^b`
/// with `a >= 1`; the constant-1 sequence is the basepoint.
pub fn interval(dim_bound: usize) -> KeyedSet<Vec<u8>> {
    let keys = (0..=dim_bound)
        .map(|m| {
            (1..=m + 1)
                .map(|a| {
                    let mut v = vec![0u8; a];
                    v.resize(m + 1, 1);
                    v
                })
                .collect()
        })
        .collect();
    let face = |_m: usize, i: usize, k: &Vec<u8>| {
        let mut v = k.clone();
        v.remove(i);
        (v[0] == 0).then_some(v)
    };
    let degeneracy = |_m: usize, i: usize, k: &Vec<u8>| {
        let mut v = k.clone();
        v.insert(i, k[i]);
        Some(v)
    };
    KeyedSet::build(dim_bound, keys, face, degeneracy, Some(1))
}

fn max_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    Some(a?.max(b?))
}

fn sum_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    Some(a? + b?)
}

/// Wedge `X ∨ Y` together with the embeddings of both summands (as level tables).
fn wedge_with_embeddings(
    x: &PointedSimplicialSet,
    y: &PointedSimplicialSet,
) -> (PointedSimplicialSet, Vec<Vec<Simplex>>, Vec<Vec<Simplex>>) {
    let keyed = wedge_keyed(x, y);
    let top = keyed.set.dim_bound();
    let embed = |side: u8, s: &PointedSimplicialSet| -> Vec<Vec<Simplex>> {
        (0..=top)
            .map(|m| {
                (0..s.level_size(m) as Simplex)
                    .map(|a| {
                        if a == s.basepoint(m) {
                            0
                        } else {
                            keyed.index_of(m, &(side, a)).expect("summand simplex")
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let ex = embed(0, x);
    let ey = embed(1, y);
    (keyed.set, ex, ey)
}

fn wedge_keyed(x: &PointedSimplicialSet, y: &PointedSimplicialSet) -> KeyedSet<(u8, Simplex)> {
    let top = x.dim_bound().min(y.dim_bound());
    let keys = (0..=top)
        .map(|m| {
            x.non_base(m)
                .map(|a| (0u8, a))
                .chain(y.non_base(m).map(|b| (1u8, b)))
                .collect()
        })
        .collect();
    let pick = |side: u8| if side == 0 { x } else { y };
    let face = |m: usize, i: usize, &(side, a): &(u8, Simplex)| {
        let s = pick(side);
        let r = s.face(m, i, a);
        (r != s.basepoint(m - 1)).then_some((side, r))
    };
    let degeneracy = |m: usize, i: usize, &(side, a): &(u8, Simplex)| {
        let s = pick(side);
        let r = s.degeneracy(m, i, a);
        (r != s.basepoint(m + 1)).then_some((side, r))
    };
    KeyedSet::build(top, keys, face, degeneracy, max_opt(x.dim_hint(), y.dim_hint()))
}

/// `X ∨ Y`, truncated to the smaller of the two bounds.
pub fn wedge(x: &PointedSimplicialSet, y: &PointedSimplicialSet) -> PointedSimplicialSet {
    wedge_keyed(x, y).set
}

pub fn smash_keyed(x: &PointedSimplicialSet, y: &PointedSimplicialSet) -> KeyedSet<(Simplex, Simplex)> {
    let top = x.dim_bound().min(y.dim_bound());
    let keys = (0..=top)
        .map(|m| {
            let ys: Vec<Simplex> = y.non_base(m).collect();
            x.non_base(m)
                .flat_map(|a| ys.iter().map(move |&b| (a, b)))
                .collect()
        })
        .collect();
    let face = |m: usize, i: usize, &(a, b): &(Simplex, Simplex)| {
        let (fa, fb) = (x.face(m, i, a), y.face(m, i, b));
        (fa != x.basepoint(m - 1) && fb != y.basepoint(m - 1)).then_some((fa, fb))
    };
    let degeneracy = |m: usize, i: usize, &(a, b): &(Simplex, Simplex)| {
        Some((x.degeneracy(m, i, a), y.degeneracy(m, i, b)))
    };
    let bound = if x.is_point() || y.is_point() {
        Some(0)
    } else {
        sum_opt(x.dim_hint(), y.dim_hint())
    };
    KeyedSet::build(top, keys, face, degeneracy, bound)
}

/// `X ∧ Y = (X × Y)/(X ∨ Y)`, computed levelwise.
pub fn smash(x: &PointedSimplicialSet, y: &PointedSimplicialSet) -> PointedSimplicialSet {
    smash_keyed(x, y).set
}

fn tuple_face(x: &PointedSimplicialSet, m: usize, i: usize, t: &[Simplex]) -> Option<Vec<Simplex>> {
    let b = x.basepoint(m - 1);
    t.iter()
        .map(|&a| {
            let f = x.face(m, i, a);
            (f != b).then_some(f)
        })
        .collect()
}

fn tuple_degeneracy(x: &PointedSimplicialSet, m: usize, i: usize, t: &[Simplex]) -> Vec<Simplex> {
    t.iter().map(|&a| x.degeneracy(m, i, a)).collect()
}

fn scaled(n: usize, d: Option<usize>) -> Option<usize> {
    if n == 0 {
        Some(0)
    } else {
        d.map(|d| n * d)
    }
}

/// The `n`-fold smash power `X^∧n`, with simplices keyed by ordered tuples of
/// non-basepoint simplices of `X`.
pub fn smash_power(x: &PointedSimplicialSet, n: usize) -> KeyedSet<Vec<Simplex>> {
    let top = x.dim_bound();
    let keys = (0..=top)
        .map(|m| {
            let base: Vec<Simplex> = x.non_base(m).collect();
            let mut out: Vec<Vec<Simplex>> = vec![Vec::new()];
            for _ in 0..n {
                out = out
                    .into_iter()
                    .flat_map(|t| {
                        base.iter().map(move |&a| {
                            let mut t = t.clone();
                            t.push(a);
                            t
                        })
                    })
                    .collect();
            }
            out
        })
        .collect();
    let bound = if x.is_point() && n > 0 { Some(0) } else { scaled(n, x.dim_hint()) };
    KeyedSet::build(
        top,
        keys,
        |m, i, t: &Vec<Simplex>| tuple_face(x, m, i, t),
        |m, i, t: &Vec<Simplex>| Some(tuple_degeneracy(x, m, i, t)),
        bound,
    )
}

/// All multisets of size `n` over `elems` (sorted input), as sorted vectors.
pub(crate) fn multisets(elems: &[Simplex], n: usize) -> Vec<Vec<Simplex>> {
    fn go(elems: &[Simplex], start: usize, n: usize, cur: &mut Vec<Simplex>, out: &mut Vec<Vec<Simplex>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in start..elems.len() {
            cur.push(elems[k]);
            go(elems, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(elems, 0, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `Sym^n X`: the orbit set of `X^∧n` under permutation of coordinates. Each orbit is
/// represented by its sorted (lexicographically minimal) tuple.
pub fn sym_power_keyed(n: usize, x: &PointedSimplicialSet) -> KeyedSet<Vec<Simplex>> {
    let top = x.dim_bound();
    let keys = (0..=top)
        .map(|m| {
            let base: Vec<Simplex> = x.non_base(m).collect();
            multisets(&base, n)
        })
        .collect();
    let bound = if x.is_point() && n > 0 { Some(0) } else { scaled(n, x.dim_hint()) };
    KeyedSet::build(
        top,
        keys,
        |m, i, t: &Vec<Simplex>| {
            let mut f = tuple_face(x, m, i, t)?;
            f.sort_unstable();
            Some(f)
        },
        |m, i, t: &Vec<Simplex>| {
            let mut s = tuple_degeneracy(x, m, i, t);
            s.sort_unstable();
            Some(s)
        },
        bound,
    )
}

pub fn sym_power(n: usize, x: &PointedSimplicialSet) -> PointedSimplicialSet {
    sym_power_keyed(n, x).set
}

/// `Sym^n f`, the map induced on coordinate-permutation orbits.
pub fn sym_power_map(n: usize, f: &SimplicialMap) -> SimplicialMap {
    let src = sym_power_keyed(n, &f.source);
    let tgt = sym_power_keyed(n, &f.target);
    let components = (0..=src.set.dim_bound())
        .map(|m| {
            let mut comp = vec![0; src.set.level_size(m)];
            for (k, t) in src.keys[m].iter().enumerate() {
                let mut img: Vec<Simplex> = t.iter().map(|&a| f.apply(m, a)).collect();
                let hits_base = img.iter().any(|&a| a == f.target.basepoint(m));
                comp[k + 1] = if hits_base {
                    0
                } else {
                    img.sort_unstable();
                    tgt.index_of(m, &img).expect("image tuple is a simplex")
                };
            }
            comp
        })
        .collect();
    SimplicialMap {
        source: src.set,
        target: tgt.set,
        components,
    }
}

/// `Y/X` for an inclusion `X -> Y`, with the projection `Y -> Y/X`.
pub fn quotient_by_subobject(j: &Inclusion) -> (PointedSimplicialSet, SimplicialMap) {
    let (keyed, proj) = quotient_keyed(j);
    (keyed.set, proj)
}

/// Like [`quotient_by_subobject`]; quotient simplices are keyed by their index in `Y`.
pub fn quotient_keyed(j: &Inclusion) -> (KeyedSet<Simplex>, SimplicialMap) {
    let y = j.target();
    let top = y.dim_bound();
    let in_image: Vec<Vec<bool>> = (0..=top)
        .map(|m| {
            let mut mask = vec![false; y.level_size(m)];
            mask[y.basepoint(m) as usize] = true;
            for &a in &j.map().components[m] {
                mask[a as usize] = true;
            }
            mask
        })
        .collect();
    let keys = (0..=top)
        .map(|m| (0..y.level_size(m) as Simplex).filter(|&a| !in_image[m][a as usize]).collect())
        .collect();
    let keyed = KeyedSet::build(
        top,
        keys,
        |m, i, &a: &Simplex| {
            let f = y.face(m, i, a);
            (!in_image[m - 1][f as usize]).then_some(f)
        },
        |m, i, &a: &Simplex| {
            let s = y.degeneracy(m, i, a);
            (!in_image[m + 1][s as usize]).then_some(s)
        },
        y.dim_hint(),
    );
    let components = (0..=top)
        .map(|m| {
            (0..y.level_size(m) as Simplex)
                .map(|a| if in_image[m][a as usize] { 0 } else { keyed.index_of(m, &a).unwrap() })
                .collect()
        })
        .collect();
    let proj = SimplicialMap {
        source: y.clone(),
        target: keyed.set.clone(),
        components,
    };
    (keyed, proj)
}

/// `ΣX = S^1 ∧ X`.
pub fn suspend(x: &PointedSimplicialSet) -> PointedSimplicialSet {
    if x.dim_bound() == 0 {
        return point(0);
    }
    let s1 = sphere(1, x.dim_bound()).expect("dim_bound >= 1");
    smash(&s1, x)
}

/// The reduced cone `X ∧ Δ^1` (pointed at vertex 1) and the inclusion of `X` at vertex 0.
pub fn cone(x: &PointedSimplicialSet) -> (PointedSimplicialSet, Inclusion) {
    let i = interval(x.dim_bound());
    let keyed = smash_keyed(x, &i.set);
    let bound = if x.is_point() { Some(0) } else { x.dim_hint().map(|d| d + 1) };
    let c = keyed.set.clone().with_geometric_bound(bound);
    let components = (0..=x.dim_bound())
        .map(|m| {
            let v0 = i.index_of(m, &vec![0u8; m + 1]).unwrap();
            (0..x.level_size(m) as Simplex)
                .map(|a| if a == x.basepoint(m) { 0 } else { keyed.index_of(m, &(a, v0)).unwrap() })
                .collect()
        })
        .collect();
    let incl = Inclusion(SimplicialMap {
        source: x.clone(),
        target: c.clone(),
        components,
    });
    (c, incl)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn sphere_level_counts() {
        let s0 = sphere(0, 3).unwrap();
        assert_eq!(s0.level_size(0), 2);
        let s1 = sphere(1, 3).unwrap();
        let nd: Vec<usize> = (0..=3).map(|m| s1.nondegenerate(m).len()).collect();
        assert_eq!(nd, vec![0, 1, 0, 0]);
        let s2 = sphere(2, 8).unwrap();
        // brute-force count of monotone surjections [8] -> [2]
        let mut count = 0;
        for a in 0..=8usize {
            for b in a..=8 {
                // sequence: 0 on [0,a), 1 on [a,b), 2 on [b,9)
                if a >= 1 && b > a && b < 9 {
                    count += 1;
                }
            }
        }
        assert_eq!(count, binom(8, 2));
        assert_eq!(s2.level_size(8), count + 1);
        assert_eq!(s2.geometric_dim(), Some(2));
    }

    #[test]
    fn sphere_bound_error() {
        assert!(matches!(sphere(3, 2), Err(Error::BoundBelowGeometricDim { .. })));
    }

    #[test]
    fn constructors_validate() {
        let s1 = sphere(1, 4).unwrap();
        let s2 = sphere(2, 4).unwrap();
        for set in [
            point(3),
            s1.clone(),
            wedge(&s1, &s2),
            smash(&s1, &s2),
            sym_power(2, &s1),
            sym_power(3, &wedge(&s1, &s1)),
            suspend(&s1),
            cone(&s1).0,
            interval(4).set,
        ] {
            set.validate().unwrap();
        }
    }

    #[test]
    fn wedge_and_smash_sizes() {
        let s1 = sphere(1, 4).unwrap();
        let s2 = sphere(2, 4).unwrap();
        let w = wedge(&s1, &s2);
        let sm = smash(&s1, &s2);
        for m in 0..=4 {
            assert_eq!(w.reduced_size(m), s1.reduced_size(m) + s2.reduced_size(m));
            assert_eq!(sm.reduced_size(m), s1.reduced_size(m) * s2.reduced_size(m));
        }
        let s0 = sphere(0, 2).unwrap();
        assert_eq!(wedge(&s0, &s0).reduced_size(0), 2);
        assert_eq!(smash(&s0, &s2.truncate(2)), s2.truncate(2));
        assert_eq!(wedge(&s2.truncate(2), &point(2)), s2.truncate(2));
    }

    #[test]
    fn sym_power_units() {
        let s1 = sphere(1, 3).unwrap();
        assert_eq!(sym_power(1, &s1), s1);
        assert_eq!(sym_power(0, &s1), sphere(0, 3).unwrap());
        let two = wedge(&sphere(0, 1).unwrap(), &sphere(0, 1).unwrap());
        for n in 0..6 {
            assert_eq!(sym_power(n, &two).reduced_size(0), n + 1);
        }
    }

    #[test]
    fn quotient_extremes() {
        let s1 = sphere(1, 3).unwrap();
        let (q, _) = quotient_by_subobject(&Inclusion::basepoint(&s1));
        assert_eq!(q, s1);
        let (q, proj) = quotient_by_subobject(&Inclusion::identity(&s1));
        assert!(q.is_point());
        proj.validate().unwrap();
    }

    #[test]
    fn not_an_inclusion() {
        let s1 = sphere(1, 2).unwrap();
        let w = wedge(&s1, &s1);
        // fold map S^1 ∨ S^1 -> S^1
        let fold = (0..=2)
            .map(|m| (0..w.level_size(m) as Simplex).map(|x| if x == 0 { 0 } else { (x - 1) % s1.reduced_size(m) as u32 + 1 }).collect())
            .collect();
        let f = SimplicialMap::new(w, s1, fold).unwrap();
        assert!(matches!(Inclusion::new(f), Err(Error::NotAnInclusion { .. })));
    }

    #[test]
    fn sym_power_of_map_commutes() {
        let s1 = sphere(1, 3).unwrap();
        let j = Inclusion::wedge_left(&s1, &s1);
        let f = sym_power_map(2, j.map());
        f.validate().unwrap();
        assert!(f.is_injective());
    }

    #[test]
    fn cone_and_suspension_of_point() {
        assert!(cone(&point(3)).0.is_point());
        assert!(suspend(&point(3)).is_point());
    }

    #[test]
    fn multiset_counts() {
        let e: Vec<Simplex> = (1..=4).collect();
        assert_eq!(multisets(&e, 3).len(), binom(6, 3));
        assert_eq!(multisets(&e, 0), vec![Vec::<Simplex>::new()]);
    }

    #[test]
    fn extension_matches_direct_construction() {
        let s1 = sphere(1, 1).unwrap();
        let ext = extend_levels(&s1, 4).unwrap();
        ext.validate().unwrap();
        let direct = sphere(1, 4).unwrap();
        let sizes = |x: &PointedSimplicialSet| (0..=x.dim_bound()).map(|m| x.level_size(m)).collect::<Vec<_>>();
        assert_eq!(sizes(&ext), sizes(&direct));
        assert_eq!(ext.geometric_dim(), Some(1));

        let t = sym_power(2, &sphere(1, 2).unwrap());
        let ext = extend_levels(&t, 4).unwrap();
        ext.validate().unwrap();
        assert_eq!(sizes(&ext), sizes(&sym_power(2, &sphere(1, 4).unwrap())));
        assert!(extend_levels(&sphere(1, 1).unwrap().truncate(0), 2).is_err());
    }
}
