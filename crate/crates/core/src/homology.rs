//! Reduced normalized chains, integral homology and reduced Euler characteristics.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::snf::{invariant_factors_sparse, SparseMatrix};
use crate::sset::PointedSimplicialSet;

/// Direction of the differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// `d: C_k -> C_{k-1}`
    Homological,
    /// `d: C^k -> C^{k+1}`
    Cohomological,
}

impl Grading {
    pub fn step(self) -> i64 {
        match self {
            Grading::Homological => -1,
            Grading::Cohomological => 1,
        }
    }
}

/// A bounded complex of free abelian groups with sparse integer differentials.
///
/// `differentials[k]` is the matrix of `d` leaving degree `k`, with shape
/// `rank(k + step) × rank(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexZ {
    pub grading: Grading,
    pub bases: BTreeMap<i64, Vec<String>>,
    pub differentials: BTreeMap<i64, SparseMatrix>,
}

impl ChainComplexZ {
    pub fn new(grading: Grading) -> Self {
        ChainComplexZ {
            grading,
            bases: BTreeMap::new(),
            differentials: BTreeMap::new(),
        }
    }

    pub fn rank(&self, k: i64) -> usize {
        self.bases.get(&k).map_or(0, Vec::len)
    }

    /// Degrees carrying a nonzero group, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.bases.iter().filter(|(_, b)| !b.is_empty()).map(|(&k, _)| k).collect()
    }

    /// The differential leaving degree `k` (zero matrix when absent).
    pub fn d(&self, k: i64) -> SparseMatrix {
        self.differentials
            .get(&k)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::new(self.rank(k + self.grading.step()), self.rank(k)))
    }

    /// Checks matrix shapes and `d∘d = 0`.
    pub fn validate(&self) -> Result<()> {
        let step = self.grading.step();
        for (&k, d) in &self.differentials {
            if d.rows != self.rank(k + step) || d.cols != self.rank(k) {
                return Err(Error::Structure(format!("differential at degree {k} has the wrong shape")));
            }
        }
        for &k in self.differentials.keys() {
            let next = self.d(k + step);
            let composite = next
                .mul(&self.d(k))
                .ok_or_else(|| Error::Structure("overflow while composing differentials".into()))?;
            if !composite.is_zero() {
                return Err(Error::Structure(format!("d∘d != 0 leaving degree {k}")));
            }
        }
        Ok(())
    }

    /// Homology in every degree of the support (and its neighbours), computed
    /// from invariant factors of the differentials.
    pub fn homology(&self) -> BTreeMap<i64, HomologyGroup> {
        let step = self.grading.step();
        let mut out = BTreeMap::new();
        for k in self.support() {
            let outgoing = self.d(k);
            let incoming = self.d(k - step);
            let rank_out = invariant_factors_sparse(&outgoing).len();
            let factors_in = invariant_factors_sparse(&incoming);
            let rank = self.rank(k) - rank_out - factors_in.len();
            let torsion = factors_in.into_iter().filter(|f| !f.is_one()).collect();
            out.insert(k, HomologyGroup { rank, torsion });
        }
        out
    }
}

/// A finitely generated abelian group `Z^rank ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "crate::report::bigints")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Builds the group from invariant factors of a relation matrix on `generators` generators.
    pub fn from_presentation(generators: usize, factors: &[BigInt]) -> Self {
        HomologyGroup {
            rank: generators - factors.len(),
            torsion: factors.iter().filter(|f| !f.abs().is_one()).map(|f| f.abs()).collect(),
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduced homology of a space, by degree.
pub type Homology = BTreeMap<i64, HomologyGroup>;

/// Formats `H_k = ...` lines for every nonzero group, or `H̃_* = 0`.
pub fn format_homology(h: &Homology) -> String {
    let lines: Vec<String> = h
        .iter()
        .filter(|(_, g)| !g.is_zero())
        .map(|(k, g)| format!("H_{k} = {g}"))
        .collect();
    if lines.is_empty() {
        "H̃_* = 0".to_string()
    } else {
        lines.join("\n")
    }
}

pub fn is_acyclic(h: &Homology) -> bool {
    h.values().all(HomologyGroup::is_zero)
}

/// Highest level the chains of `x` must reach to report `H̃_k` for all `k <= through`.
fn chain_top(x: &PointedSimplicialSet, through: Option<usize>) -> Result<usize> {
    match (x.geometric_dim(), through) {
        (Some(d), None) => Ok(d),
        (Some(d), Some(k)) => Ok(d.min(k + 1)),
        (None, Some(k)) if x.dim_bound() > k => Ok(k + 1),
        (None, Some(k)) => Err(Error::Truncation {
            needed: k + 1,
            have: x.dim_bound(),
        }),
        (None, None) => Err(Error::Truncation {
            needed: x.dim_bound() + 1,
            have: x.dim_bound(),
        }),
    }
}

/// Normalized reduced chains: degree `m` is free on the non-degenerate non-basepoint
/// `m`-simplices, `d = Σ (-1)^i d_i` with degenerate and basepoint faces dropped.
///
/// With `through = Some(k)` the complex reaches degree `k + 1` (enough for `H̃_k`);
/// with `None` it covers the whole certified geometric dimension.
pub fn normalized_chains(x: &PointedSimplicialSet, through: Option<usize>) -> Result<ChainComplexZ> {
    let top = chain_top(x, through)?;
    let mut cx = ChainComplexZ::new(Grading::Homological);
    let mut index: Vec<Vec<u32>> = Vec::with_capacity(top + 1);
    for m in 0..=top {
        let nd = x.nondegenerate(m);
        let mut pos = vec![u32::MAX; x.level_size(m)];
        for (k, &s) in nd.iter().enumerate() {
            pos[s as usize] = k as u32;
        }
        cx.bases.insert(m as i64, nd.iter().map(|&s| x.label(m, s)).collect());
        if m > 0 {
            let mut d = SparseMatrix::new(index[m - 1].iter().filter(|&&p| p != u32::MAX).count(), nd.len());
            for (col, &s) in nd.iter().enumerate() {
                for i in 0..=m {
                    let f = x.face(m, i, s);
                    let row = index[m - 1][f as usize];
                    if row != u32::MAX {
                        d.add(row as usize, col, if i % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
            cx.differentials.insert(m as i64, d);
        }
        index.push(pos);
    }
    Ok(cx)
}

/// Reduced integral homology `H̃_k` for all `k` up to the certified geometric dimension.
pub fn reduced_homology(x: &PointedSimplicialSet) -> Result<Homology> {
    let cx = normalized_chains(x, None)?;
    let mut h = cx.homology();
    let top = x.geometric_dim().unwrap_or(0) as i64;
    for k in 0..=top {
        h.entry(k).or_default();
    }
    Ok(h)
}

/// Reduced homology in degrees `0..=k`.
pub fn reduced_homology_through(x: &PointedSimplicialSet, k: usize) -> Result<Homology> {
    let cx = normalized_chains(x, Some(k))?;
    let mut h = cx.homology();
    h.retain(|&deg, _| deg <= k as i64);
    for deg in 0..=k as i64 {
        h.entry(deg).or_default();
    }
    Ok(h)
}

/// `χ̃ = Σ_m (-1)^m #(non-degenerate non-basepoint m-simplices)`.
pub fn euler(x: &PointedSimplicialSet) -> Result<i64> {
    let d = x.geometric_dim().ok_or(Error::Truncation {
        needed: x.dim_bound() + 1,
        have: x.dim_bound(),
    })?;
    Ok((0..=d)
        .map(|m| {
            let c = x.nondegenerate(m).len() as i64;
            if m % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum())
}

/// `Σ_k (-1)^k rank H̃_k`, the homological route to `χ̃`.
pub fn euler_from_homology(h: &Homology) -> i64 {
    h.iter()
        .map(|(&k, g)| if k.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{cone, smash, sphere, suspend, sym_power, wedge};

    fn single(k: i64, g: HomologyGroup, top: i64) -> Homology {
        (0..=top).map(|d| (d, if d == k { g.clone() } else { HomologyGroup::zero() })).collect()
    }

    #[test]
    fn spheres() {
        for n in 0..=3 {
            let s = sphere(n, n + 1).unwrap();
            let h = reduced_homology(&s).unwrap();
            assert_eq!(h, single(n as i64, HomologyGroup::free(1), n as i64), "S^{n}");
            assert_eq!(euler(&s).unwrap(), if n % 2 == 0 { 1 } else { -1 });
        }
        let cx = normalized_chains(&sphere(2, 3).unwrap(), None).unwrap();
        assert_eq!((0..=2).map(|k| cx.rank(k)).collect::<Vec<_>>(), vec![0, 0, 1]);
    }

    #[test]
    fn wedge_of_circles() {
        let s1 = sphere(1, 2).unwrap();
        let w = wedge(&s1, &s1);
        let cx = normalized_chains(&w, None).unwrap();
        assert_eq!(cx.rank(0), 0);
        assert_eq!(cx.rank(1), 2);
        cx.validate().unwrap();
    }

    #[test]
    fn smash_of_circles_is_two_sphere() {
        let s1 = sphere(1, 3).unwrap();
        let h = reduced_homology(&smash(&s1, &s1)).unwrap();
        assert_eq!(h, single(2, HomologyGroup::free(1), 2));
    }

    #[test]
    fn suspension_shifts() {
        let s1 = sphere(1, 3).unwrap();
        let w = wedge(&s1, &s1);
        let h = reduced_homology(&w).unwrap();
        let hs = reduced_homology(&suspend(&w)).unwrap();
        for (k, g) in &h {
            assert_eq!(hs.get(&(k + 1)), Some(g));
        }
        let s2 = sphere(2, 3).unwrap();
        assert_eq!(euler(&suspend(&s2)).unwrap(), -euler(&s2).unwrap());
    }

    #[test]
    fn cone_is_acyclic() {
        let s1 = sphere(1, 3).unwrap();
        assert!(is_acyclic(&reduced_homology(&cone(&s1).0).unwrap()));
    }

    #[test]
    fn sym_square_of_two_points() {
        let two = wedge(&sphere(0, 1).unwrap(), &sphere(0, 1).unwrap());
        assert_eq!(euler(&sym_power(2, &two)).unwrap(), 3);
    }

    #[test]
    fn truncation_errors() {
        let s = sphere(2, 2).unwrap();
        let big = sym_power(2, &s);
        assert!(big.geometric_dim().is_none());
        assert!(matches!(euler(&big), Err(Error::Truncation { .. })));
        assert!(matches!(normalized_chains(&big, Some(2)), Err(Error::Truncation { .. })));
        assert!(reduced_homology_through(&big, 1).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::free(1).to_string(), "Z");
        let t = HomologyGroup { rank: 0, torsion: vec![BigInt::from(2)] };
        assert_eq!(t.to_string(), "Z/2");
        let mut h = Homology::new();
        h.insert(-2, t);
        h.insert(0, HomologyGroup::zero());
        assert_eq!(format_homology(&h), "H_-2 = Z/2");
    }
}
