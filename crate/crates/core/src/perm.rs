//! Permutations of `{0..n}` and small permutation groups stored by explicit element lists.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest degree for which groups are enumerated.
pub const DEGREE_CAP: usize = 10;

/// A permutation in image form: `self.0[k]` is the image of `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x as usize >= images.len() || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::BadPermutation(format!("{images:?}")));
            }
        }
        Ok(Perm(images))
    }

    /// Transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&k| self.0[k as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    /// Acts on positions of a tuple: the entry at position `k` moves to position `self(k)`.
    pub fn permute<T: Clone>(&self, t: &[T]) -> Vec<T> {
        let mut out = t.to_vec();
        for (k, x) in t.iter().enumerate() {
            out[self.0[k] as usize] = x.clone();
        }
        out
    }

    /// `self ⊕ id_k` in degree `n + k`.
    pub fn extend(&self, k: usize) -> Perm {
        let n = self.0.len();
        let mut v = self.0.clone();
        v.extend((n..n + k).map(|x| x as u8));
        Perm(v)
    }

    /// `self ⊕ other`: `self` on the first letters, `other` shifted onto the rest.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let n = self.0.len() as u8;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + n));
        Perm(v)
    }

    /// One-line notation with 1-based images, e.g. `[2 1 3]`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|&v| (v + 1).to_string()).collect();
        format!("[{}]", parts.join(" "))
    }

    /// Parses one-line notation (1-based, space or comma separated, optional brackets).
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .map(|v| v - 1)
                    .ok_or_else(|| Error::BadPermutation(s.to_string()))
            })
            .collect::<Result<Vec<u8>>>()?;
        Perm::from_images(images)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.one_line())
    }
}

/// A permutation group given by generators, with all elements enumerated.
///
/// Elements are sorted lexicographically by image list, so element `0` is the
/// identity. A breadth-first spanning tree over the generators lets any element
/// be written as a word in the generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// `(parent, generator)` with `element = generators[generator] ∘ elements[parent]`.
    tree: Vec<Option<(usize, usize)>>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl PermGroup {
    /// Enumerates the subgroup of `Σ_degree` generated by `generators`.
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree > DEGREE_CAP {
            return Err(Error::DegreeTooLarge {
                degree,
                cap: DEGREE_CAP,
            });
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::BadPermutation(format!("{g} does not have degree {degree}")));
        }
        let id = Perm::identity(degree);
        let mut found: HashMap<Perm, (Option<(Perm, usize)>,)> = HashMap::new();
        found.insert(id.clone(), (None,));
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for (gi, g) in generators.iter().enumerate() {
                let y = g.compose(&x);
                if !found.contains_key(&y) {
                    found.insert(y.clone(), (Some((x.clone(), gi)),));
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = found.keys().cloned().collect();
        elements.sort();
        let index: HashMap<Perm, usize> = elements.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        let tree = elements
            .iter()
            .map(|p| found[p].0.as_ref().map(|(parent, gi)| (index[parent], *gi)))
            .collect();
        Ok(PermGroup {
            degree,
            generators,
            elements,
            index,
            tree,
        })
    }

    /// The full symmetric group, generated by adjacent transpositions.
    pub fn symmetric(n: usize) -> Result<Self> {
        let gens = (0..n.saturating_sub(1)).map(|k| Perm::transposition(n, k, k + 1)).collect();
        Self::generate(n, gens)
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::generate(n, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|p| g.contains(p))
    }

    /// Generator indices `[g_1, .., g_k]` with `element = g_k ∘ … ∘ g_1`.
    pub fn word(&self, element: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = element;
        while let Some((parent, gi)) = self.tree[cur] {
            word.push(gi);
            cur = parent;
        }
        word.reverse();
        word
    }
}

/// The subgroup embeddings used by the Künneth and slice formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum EmbeddingSpec {
    /// `Σ_a × Σ_b ⊂ Σ_{a+b}` acting on the blocks `0..a` and `a..a+b`.
    Young { a: usize, b: usize },
    /// `Σ_p ⊂ Σ_{pn}` permuting `p` consecutive blocks of size `n`.
    BlockShuffle { p: usize, n: usize },
    /// `Σ_k ⊂ Σ_m` permuting the last `k` letters.
    Tail { m: usize, k: usize },
    /// `Σ_p × Σ_{m-pn} ⊂ Σ_m`: block shuffle on the first `pn` letters, tail permutations after.
    ShuffleTail { p: usize, n: usize, m: usize },
}

impl EmbeddingSpec {
    pub fn ambient_degree(&self) -> usize {
        match *self {
            EmbeddingSpec::Young { a, b } => a + b,
            EmbeddingSpec::BlockShuffle { p, n } => p * n,
            EmbeddingSpec::Tail { m, .. } | EmbeddingSpec::ShuffleTail { m, .. } => m,
        }
    }

    pub fn subgroup_order(&self) -> usize {
        let fact = |k: usize| (1..=k).product::<usize>();
        match *self {
            EmbeddingSpec::Young { a, b } => fact(a) * fact(b),
            EmbeddingSpec::BlockShuffle { p, n } => if n == 0 { 1 } else { fact(p) },
            EmbeddingSpec::Tail { k, .. } => fact(k),
            EmbeddingSpec::ShuffleTail { p, n, m } => {
                (if n == 0 { 1 } else { fact(p) }) * fact(m - p * n)
            }
        }
    }

    fn check(&self) -> Result<()> {
        match *self {
            EmbeddingSpec::Tail { m, k } if k > m => Err(Error::NotASubgroup(format!("Σ_{k} does not fit in Σ_{m}"))),
            EmbeddingSpec::ShuffleTail { p, n, m } if p * n > m => {
                Err(Error::NotASubgroup(format!("{p} blocks of size {n} do not fit in Σ_{m}")))
            }
            _ => Ok(()),
        }
    }

    /// Swap of blocks `[start, start+n)` and `[start+n, start+2n)` in degree `deg`.
    fn block_swap(deg: usize, start: usize, n: usize) -> Perm {
        let mut p = Perm::identity(deg);
        for r in 0..n {
            p.0.swap(start + r, start + n + r);
        }
        p
    }

    /// Generators, listed in a fixed order: within-block adjacent transpositions
    /// (block by block), or block swaps followed by tail transpositions.
    pub fn generators(&self) -> Result<Vec<Perm>> {
        self.check()?;
        let deg = self.ambient_degree();
        let adj = |range: std::ops::Range<usize>| -> Vec<Perm> {
            let (s, e) = (range.start, range.end);
            (s..e.saturating_sub(1).max(s)).map(|k| Perm::transposition(deg, k, k + 1)).collect()
        };
        Ok(match *self {
            EmbeddingSpec::Young { a, b } => {
                let mut g = adj(0..a);
                g.extend(adj(a..a + b));
                g
            }
            EmbeddingSpec::BlockShuffle { p, n } => {
                if n == 0 {
                    Vec::new()
                } else {
                    (0..p.saturating_sub(1)).map(|k| Self::block_swap(deg, k * n, n)).collect()
                }
            }
            EmbeddingSpec::Tail { m, k } => adj(m - k..m),
            EmbeddingSpec::ShuffleTail { p, n, m } => {
                let mut g: Vec<Perm> = if n == 0 {
                    Vec::new()
                } else {
                    (0..p.saturating_sub(1)).map(|k| Self::block_swap(deg, k * n, n)).collect()
                };
                g.extend(adj(p * n..m));
                g
            }
        })
    }

    pub fn group(&self) -> Result<PermGroup> {
        PermGroup::generate(self.ambient_degree(), self.generators()?)
    }
}

/// Adjacent-transposition generators of `Σ_{i_1} × … × Σ_{i_p} ⊂ Σ_{i_1+…+i_p}`,
/// listed block by block. Generator `r` of block `k` is the image of generator `r`
/// of `Σ_{i_k}`.
pub fn young_generators(blocks: &[usize]) -> Vec<(usize, usize, Perm)> {
    let deg: usize = blocks.iter().sum();
    let mut out = Vec::new();
    let mut start = 0;
    for (k, &len) in blocks.iter().enumerate() {
        for r in 0..len.saturating_sub(1) {
            out.push((k, r, Perm::transposition(deg, start + r, start + r + 1)));
        }
        start += len;
    }
    out
}

/// Block permutation in `Σ_{Σ i}` that reorders blocks of sizes `blocks` by `order`:
/// the new layout lists old block `order[0]` first, then `order[1]`, etc. Sends each
/// old position to its new position.
pub fn block_permutation(blocks: &[usize], order: &[usize]) -> Perm {
    let mut starts = Vec::with_capacity(blocks.len());
    let mut acc = 0;
    for &b in blocks {
        starts.push(acc);
        acc += b;
    }
    let mut images = vec![0u8; acc];
    let mut pos = 0;
    for &k in order {
        for r in 0..blocks[k] {
            images[starts[k] + r] = pos as u8;
            pos += 1;
        }
    }
    Perm(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small_groups() {
        let s3 = PermGroup::generate(3, vec![Perm::transposition(3, 0, 1), Perm::transposition(3, 1, 2)]).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.elements()[0].is_identity());
        assert_eq!(PermGroup::trivial(4).unwrap().order(), 1);
        assert_eq!(EmbeddingSpec::Young { a: 2, b: 2 }.group().unwrap().order(), 4);
        assert!(matches!(PermGroup::symmetric(11), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn embedding_orders_match() {
        for spec in [
            EmbeddingSpec::Young { a: 3, b: 1 },
            EmbeddingSpec::Young { a: 0, b: 4 },
            EmbeddingSpec::BlockShuffle { p: 3, n: 2 },
            EmbeddingSpec::Tail { m: 5, k: 3 },
            EmbeddingSpec::ShuffleTail { p: 2, n: 1, m: 4 },
            EmbeddingSpec::ShuffleTail { p: 2, n: 2, m: 6 },
        ] {
            let h = spec.group().unwrap();
            assert_eq!(h.order(), spec.subgroup_order(), "{spec:?}");
            let g = PermGroup::symmetric(spec.ambient_degree()).unwrap();
            assert!(h.is_subgroup_of(&g));
            assert_eq!(g.order() % h.order(), 0);
        }
    }

    #[test]
    fn words_reconstruct_elements() {
        let g = PermGroup::symmetric(4).unwrap();
        for (k, e) in g.elements().iter().enumerate() {
            let mut p = Perm::identity(4);
            for gi in g.word(k) {
                p = g.generators()[gi].compose(&p);
            }
            assert_eq!(&p, e);
        }
    }

    #[test]
    fn one_line_round_trip() {
        let p = Perm::from_images(vec![2, 0, 1]).unwrap();
        assert_eq!(p.one_line(), "[3 1 2]");
        assert_eq!(Perm::parse_one_line("[3 1 2]").unwrap(), p);
        assert!(Perm::parse_one_line("[1 1]").is_err());
    }

    #[test]
    fn permute_is_a_left_action() {
        let g = PermGroup::symmetric(3).unwrap();
        let t = vec!['a', 'b', 'c'];
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(a.permute(&b.permute(&t)), a.compose(b).permute(&t));
            }
        }
    }

    #[test]
    fn block_permutation_conjugates_young_subgroups() {
        // Moving a block of size 2 past a block of size 1.
        let beta = block_permutation(&[2, 1], &[1, 0]);
        assert_eq!(beta.images(), &[1, 2, 0]);
        let h = EmbeddingSpec::Young { a: 2, b: 1 }.group().unwrap();
        let h2 = EmbeddingSpec::Young { a: 1, b: 2 }.group().unwrap();
        for x in h.elements() {
            assert!(h2.contains(&beta.compose(x).compose(&beta.inverse())));
        }
    }
}
