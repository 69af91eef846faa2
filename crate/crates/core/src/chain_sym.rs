//! Naive symmetric powers of bounded complexes of free abelian groups: tensor
//! powers with Koszul signs followed by degreewise `Σ_n`-coinvariants.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{ChainComplexZ, Grading, Homology, HomologyGroup};
use crate::snf::{smith_normal_form, IntMatrix, SparseMatrix};

/// Bounded complex of finitely generated free abelian groups.
pub type BoundedComplex = ChainComplexZ;

/// Largest `n` accepted by [`sym_naive`].
pub const SYM_CAP: usize = 4;

/// `Z --id--> Z` with the source in degree `lo` and the target in degree `lo + 1`,
/// cohomologically graded.
pub fn identity_cone(lo: i64) -> BoundedComplex {
    let mut c = ChainComplexZ::new(Grading::Cohomological);
    c.bases.insert(lo, vec!["x".into()]);
    c.bases.insert(lo + 1, vec!["y".into()]);
    let mut d = SparseMatrix::new(1, 1);
    d.add(0, 0, 1);
    c.differentials.insert(lo, d);
    c
}

/// `Z` in degree `k`.
pub fn unit_complex(k: i64, grading: Grading) -> BoundedComplex {
    let mut c = ChainComplexZ::new(grading);
    c.bases.insert(k, vec!["1".into()]);
    c
}

type Factor = (i64, usize);

/// Basis of `X^⊗n`: tuples of `(degree, index)` grouped by total degree, in
/// lexicographic order.
fn tensor_basis(x: &BoundedComplex, n: usize) -> BTreeMap<i64, Vec<Vec<Factor>>> {
    let gens: Vec<Factor> = x.bases.iter().flat_map(|(&k, b)| (0..b.len()).map(move |i| (k, i))).collect();
    let mut tuples: Vec<Vec<Factor>> = vec![Vec::new()];
    for _ in 0..n {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                gens.iter().map(move |&g| {
                    let mut t = t.clone();
                    t.push(g);
                    t
                })
            })
            .collect();
    }
    let mut out: BTreeMap<i64, Vec<Vec<Factor>>> = BTreeMap::new();
    for t in tuples {
        out.entry(t.iter().map(|f| f.0).sum()).or_default().push(t);
    }
    out
}

fn tuple_label(x: &BoundedComplex, t: &[Factor]) -> String {
    if t.is_empty() {
        return "1".into();
    }
    t.iter().map(|&(k, i)| x.bases[&k][i].as_str()).collect::<Vec<_>>().join("⊗")
}

/// `d` of a basis tensor: `Σ_j (-1)^{p_1 + … + p_{j-1}} x_1 ⊗ … ⊗ dx_j ⊗ … ⊗ x_n`.
fn tensor_differential(x: &BoundedComplex, t: &[Factor]) -> Vec<(Vec<Factor>, i64)> {
    let step = x.grading.step();
    let mut out = Vec::new();
    let mut prefix = 0i64;
    for j in 0..t.len() {
        let (k, i) = t[j];
        let sign = if prefix.rem_euclid(2) == 0 { 1 } else { -1 };
        if let Some(d) = x.differentials.get(&k) {
            for (r, row) in d.row_entries.iter().enumerate() {
                for &(c, v) in row {
                    if c == i {
                        let mut u = t.to_vec();
                        u[j] = (k + step, r);
                        out.push((u, sign * v));
                    }
                }
            }
        }
        prefix += k;
    }
    out
}

/// Adjacent transposition of factors `j, j+1` with the Koszul sign `(-1)^{pq}`.
fn koszul_swap(t: &[Factor], j: usize) -> (Vec<Factor>, i64) {
    let mut u = t.to_vec();
    u.swap(j, j + 1);
    let sign = if (t[j].0 * t[j + 1].0).rem_euclid(2) == 0 { 1 } else { -1 };
    (u, sign)
}

struct Tensor {
    grading: Grading,
    basis: BTreeMap<i64, Vec<Vec<Factor>>>,
    index: HashMap<Vec<Factor>, usize>,
    labels: BTreeMap<i64, Vec<String>>,
}

impl Tensor {
    fn new(x: &BoundedComplex, n: usize) -> Self {
        let basis = tensor_basis(x, n);
        let index = basis
            .values()
            .flat_map(|b| b.iter().enumerate().map(|(i, t)| (t.clone(), i)))
            .collect();
        let labels = basis
            .iter()
            .map(|(&k, b)| (k, b.iter().map(|t| tuple_label(x, t)).collect()))
            .collect();
        Tensor {
            grading: x.grading,
            basis,
            index,
            labels,
        }
    }

    fn rank(&self, k: i64) -> usize {
        self.basis.get(&k).map_or(0, Vec::len)
    }

    fn differential(&self, x: &BoundedComplex, k: i64) -> IntMatrix {
        let target = k + self.grading.step();
        let mut m = IntMatrix::zeros(self.rank(target), self.rank(k));
        for (c, t) in self.basis.get(&k).into_iter().flatten().enumerate() {
            for (u, v) in tensor_differential(x, t) {
                m[(self.index[&u], c)] += v;
            }
        }
        m
    }

    /// Signed permutation matrix of the adjacent transposition `j` in degree `k`.
    fn swap_matrix(&self, k: i64, j: usize) -> IntMatrix {
        let r = self.rank(k);
        let mut m = IntMatrix::zeros(r, r);
        for (c, t) in self.basis.get(&k).into_iter().flatten().enumerate() {
            let (u, s) = koszul_swap(t, j);
            m[(self.index[&u], c)] += s;
        }
        m
    }
}

/// `X ⊗ Y` with `d(x⊗y) = dx⊗y + (-1)^p x⊗dy`.
pub fn total_tensor(x: &BoundedComplex, y: &BoundedComplex) -> Result<BoundedComplex> {
    if x.grading != y.grading {
        return Err(Error::Invalid("cannot tensor complexes with different gradings".into()));
    }
    let step = x.grading.step();
    let pairs = |k: i64| -> Vec<(i64, usize, i64, usize)> {
        let mut out = Vec::new();
        for (&p, bx) in &x.bases {
            if let Some(by) = y.bases.get(&(k - p)) {
                for i in 0..bx.len() {
                    for j in 0..by.len() {
                        out.push((p, i, k - p, j));
                    }
                }
            }
        }
        out
    };
    let mut degrees: Vec<i64> = Vec::new();
    for &p in x.bases.keys() {
        for &q in y.bases.keys() {
            degrees.push(p + q);
        }
    }
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = ChainComplexZ::new(x.grading);
    let mut index: HashMap<(i64, usize, i64, usize), usize> = HashMap::new();
    for &k in &degrees {
        let ps = pairs(k);
        let labels = ps
            .iter()
            .enumerate()
            .map(|(n, &(p, i, q, j))| {
                index.insert((p, i, q, j), n);
                format!("{}⊗{}", x.bases[&p][i], y.bases[&q][j])
            })
            .collect();
        out.bases.insert(k, labels);
    }
    for &k in &degrees {
        let mut d = SparseMatrix::new(out.rank(k + step), out.rank(k));
        for (c, &(p, i, q, j)) in pairs(k).iter().enumerate() {
            let dx = x.d(p);
            for (r, row) in dx.row_entries.iter().enumerate() {
                for &(col, v) in row {
                    if col == i {
                        d.add(index[&(p + step, r, q, j)], c, v);
                    }
                }
            }
            let sign = if p.rem_euclid(2) == 0 { 1 } else { -1 };
            let dy = y.d(q);
            for (r, row) in dy.row_entries.iter().enumerate() {
                for &(col, v) in row {
                    if col == j {
                        d.add(index[&(p, i, q + step, r)], c, sign * v);
                    }
                }
            }
        }
        if !d.is_zero() {
            out.differentials.insert(k, d);
        }
    }
    out.validate()?;
    Ok(out)
}

/// One term `Z^generators / span(relations)` of a presented complex.
#[derive(Clone, Debug, Serialize)]
pub struct PresentedTerm {
    pub generators: Vec<String>,
    /// Relations as columns, `generators.len() × r`.
    #[serde(skip)]
    pub relations: IntMatrix,
    /// The term as an abstract group.
    pub group: HomologyGroup,
}

/// A complex whose terms are cokernels; the differential is given on generators
/// and maps relations into relations.
#[derive(Clone, Debug, Serialize)]
pub struct PresentedComplex {
    pub grading: Grading,
    pub terms: BTreeMap<i64, PresentedTerm>,
    #[serde(skip)]
    pub differentials: BTreeMap<i64, IntMatrix>,
}

fn nonzero_factors(m: &IntMatrix) -> Vec<BigInt> {
    if m.rows == 0 || m.cols == 0 {
        return Vec::new();
    }
    smith_normal_form(m, false).diagonal.into_iter().filter(|d| !d.is_zero()).collect()
}

fn hcat(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.rows, b.rows);
    let mut m = IntMatrix::zeros(a.rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            m[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols {
            m[(i, a.cols + j)] = b[(i, j)].clone();
        }
    }
    m
}

/// The lattice spanned by the columns of `g`, with coordinates relative to the basis
/// given by the first `rank` columns of `g·V`.
struct LatticeBasis {
    u: IntMatrix,
    diagonal: Vec<BigInt>,
}

impl LatticeBasis {
    fn new(g: &IntMatrix) -> Self {
        if g.cols == 0 || g.rows == 0 {
            return LatticeBasis {
                u: IntMatrix::identity(g.rows),
                diagonal: Vec::new(),
            };
        }
        let snf = smith_normal_form(g, true);
        let r = snf.rank();
        LatticeBasis {
            u: snf.u.unwrap(),
            diagonal: snf.diagonal[..r].to_vec(),
        }
    }

    fn rank(&self) -> usize {
        self.diagonal.len()
    }

    fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        let w = self.u.mul_vec(v);
        let mut c = Vec::with_capacity(self.rank());
        for (j, x) in w.iter().enumerate() {
            if j < self.rank() {
                let (q, r) = x.div_rem(&self.diagonal[j]);
                if !r.is_zero() {
                    return Err(Error::Structure("vector outside the lattice".into()));
                }
                c.push(q);
            } else if !x.is_zero() {
                return Err(Error::Structure("vector outside the lattice".into()));
            }
        }
        Ok(c)
    }
}

/// Columns of `V` spanning the kernel of `a`.
fn kernel(a: &IntMatrix) -> IntMatrix {
    if a.rows == 0 {
        return IntMatrix::identity(a.cols);
    }
    if a.cols == 0 {
        return IntMatrix::zeros(0, 0);
    }
    let snf = smith_normal_form(a, true);
    let r = snf.rank();
    let v = snf.v.unwrap();
    let cols: Vec<Vec<BigInt>> = (r..a.cols).map(|j| v.column(j)).collect();
    IntMatrix::from_columns(a.cols, &cols)
}

impl PresentedComplex {
    fn rank(&self, k: i64) -> usize {
        self.terms.get(&k).map_or(0, |t| t.generators.len())
    }

    fn relations(&self, k: i64) -> IntMatrix {
        self.terms
            .get(&k)
            .map_or_else(|| IntMatrix::zeros(0, 0), |t| t.relations.clone())
    }

    fn d(&self, k: i64) -> IntMatrix {
        self.differentials
            .get(&k)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(self.rank(k + self.grading.step()), self.rank(k)))
    }

    /// Checks that `d` maps relations into relations and `d∘d` lands in relations.
    pub fn validate(&self) -> Result<()> {
        let step = self.grading.step();
        for &k in self.terms.keys() {
            let target = LatticeBasis::new(&self.relations(k + step));
            let d = self.d(k);
            let rel = self.relations(k);
            for j in 0..rel.cols {
                target
                    .coordinates(&d.mul_vec(&rel.column(j)))
                    .map_err(|_| Error::Structure(format!("d does not preserve relations at degree {k}")))?;
            }
            let twice = LatticeBasis::new(&self.relations(k + 2 * step));
            let dd = self.d(k + step).mul(&d);
            for j in 0..dd.cols {
                twice
                    .coordinates(&dd.column(j))
                    .map_err(|_| Error::Structure(format!("d∘d != 0 leaving degree {k}")))?;
            }
        }
        Ok(())
    }

    /// Homology of the presented complex: `{v : dv ∈ R_{k+1}} / (R_k + im d)`.
    pub fn homology(&self) -> Result<Homology> {
        let step = self.grading.step();
        let mut out = BTreeMap::new();
        for &k in self.terms.keys() {
            let g = self.rank(k);
            if g == 0 {
                out.insert(k, HomologyGroup::zero());
                continue;
            }
            let d = self.d(k);
            let rel_next = self.relations(k + step);
            let stacked = if rel_next.cols == 0 { d.clone() } else { hcat(&d, &rel_next) };
            let ker = kernel(&stacked);
            let projected: Vec<Vec<BigInt>> = (0..ker.cols).map(|j| ker.column(j)[..g].to_vec()).collect();
            let cycles = LatticeBasis::new(&IntMatrix::from_columns(g, &projected));
            let mut boundary_cols: Vec<Vec<BigInt>> = Vec::new();
            let rel = self.relations(k);
            boundary_cols.extend((0..rel.cols).map(|j| rel.column(j)));
            let incoming = self.d(k - step);
            boundary_cols.extend((0..incoming.cols).map(|j| incoming.column(j)));
            let coords: Vec<Vec<BigInt>> = boundary_cols
                .iter()
                .map(|v| cycles.coordinates(v))
                .collect::<Result<_>>()?;
            let pres = IntMatrix::from_columns(cycles.rank(), &coords);
            let factors = nonzero_factors(&pres);
            out.insert(k, HomologyGroup::from_presentation(cycles.rank(), &factors));
        }
        Ok(out)
    }
}

/// `Sym^n X` computed naively: `X^⊗n` modulo `σv - v` for the Koszul-signed adjacent
/// transpositions, degreewise.
pub fn sym_naive(n: usize, x: &BoundedComplex) -> Result<PresentedComplex> {
    if n > SYM_CAP {
        return Err(Error::DegreeTooLarge { degree: n, cap: SYM_CAP });
    }
    x.validate()?;
    let t = Tensor::new(x, n);
    check_symmetric_group_relations(&t, n)?;
    let step = x.grading.step();
    let mut terms = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    for (&k, labels) in &t.labels {
        let r = labels.len();
        let mut cols = Vec::new();
        for j in 0..n.saturating_sub(1) {
            let s = t.swap_matrix(k, j);
            for c in 0..r {
                let mut col = s.column(c);
                col[c] -= BigInt::one();
                if col.iter().any(|v| !v.is_zero()) {
                    cols.push(col);
                }
            }
        }
        let relations = IntMatrix::from_columns(r, &cols);
        let group = HomologyGroup::from_presentation(r, &nonzero_factors(&relations));
        terms.insert(
            k,
            PresentedTerm {
                generators: labels.clone(),
                relations,
                group,
            },
        );
        let d = t.differential(x, k);
        // Equivariance of d under every generator.
        for j in 0..n.saturating_sub(1) {
            if d.mul(&t.swap_matrix(k, j)) != t.swap_matrix(k + step, j).mul(&d) {
                return Err(Error::Structure(format!("transposition {j} does not commute with d at degree {k}")));
            }
        }
        differentials.insert(k, d);
    }
    let out = PresentedComplex {
        grading: x.grading,
        terms,
        differentials,
    };
    out.validate()?;
    Ok(out)
}

/// Involution, braid and far-commutation relations for the signed transpositions.
fn check_symmetric_group_relations(t: &Tensor, n: usize) -> Result<()> {
    for &k in t.basis.keys() {
        let id = IntMatrix::identity(t.rank(k));
        let s: Vec<IntMatrix> = (0..n.saturating_sub(1)).map(|j| t.swap_matrix(k, j)).collect();
        for a in 0..s.len() {
            if s[a].mul(&s[a]) != id {
                return Err(Error::Structure(format!("s_{a}^2 != 1 in degree {k}")));
            }
            for b in a + 1..s.len() {
                let ab = s[a].mul(&s[b]);
                let power = if b == a + 1 { 3 } else { 2 };
                let mut p = id.clone();
                for _ in 0..power {
                    p = p.mul(&ab);
                }
                if p != id {
                    return Err(Error::Structure(format!("(s_{a} s_{b})^{power} != 1 in degree {k}")));
                }
            }
        }
    }
    Ok(())
}

/// The action of the transposition on `X ⊗ X`, per degree (for comparison with
/// hand-drawn diagrams).
pub fn transposition_matrices(x: &BoundedComplex) -> BTreeMap<i64, Vec<Vec<i64>>> {
    let t = Tensor::new(x, 2);
    t.basis
        .keys()
        .map(|&k| {
            let m = t.swap_matrix(k, 0);
            let rows = (0..m.rows)
                .map(|i| (0..m.cols).map(|j| i64::try_from(&m[(i, j)]).unwrap()).collect())
                .collect();
            (k, rows)
        })
        .collect()
}

/// Map of complexes given degreewise on bases.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub components: BTreeMap<i64, IntMatrix>,
}

/// Whether `Sym^n(f)` is surjective in every degree onto the coinvariants of the target.
pub fn sym_naive_surjective(n: usize, f: &ChainMap, x: &BoundedComplex, y: &BoundedComplex) -> Result<bool> {
    let tx = Tensor::new(x, n);
    let ty = Tensor::new(y, n);
    let sy = sym_naive(n, y)?;
    for (&k, targets) in &ty.basis {
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for s in tx.basis.get(&k).into_iter().flatten() {
            // f^⊗n on a basis tensor.
            let mut acc: Vec<(Vec<Factor>, BigInt)> = vec![(Vec::new(), BigInt::one())];
            for &(p, i) in s {
                let fm = f.components.get(&p);
                let mut next = Vec::new();
                for (u, c) in &acc {
                    if let Some(fm) = fm {
                        for r in 0..fm.rows {
                            let v = &fm[(r, i)];
                            if !v.is_zero() {
                                let mut u = u.clone();
                                u.push((p, r));
                                next.push((u, c * v));
                            }
                        }
                    }
                }
                acc = next;
            }
            let mut col = vec![BigInt::zero(); targets.len()];
            for (u, c) in acc {
                col[ty.index[&u]] += c;
            }
            cols.push(col);
        }
        let rel = &sy.terms[&k].relations;
        cols.extend((0..rel.cols).map(|j| rel.column(j)));
        let m = IntMatrix::from_columns(targets.len(), &cols);
        let factors = nonzero_factors(&m);
        if factors.len() != targets.len() || factors.iter().any(|d| !d.is_one() && *d != -BigInt::one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct ContrastReport {
    pub input_homology: Homology,
    pub sym2_terms: BTreeMap<i64, HomologyGroup>,
    pub sym2_homology: Homology,
    /// Diagonal sign of the transposition on `x⊗x`-type tensors, per degree.
    pub transposition: BTreeMap<i64, Vec<Vec<i64>>>,
    pub input_acyclic: bool,
    pub sym2_acyclic: bool,
    pub passed: bool,
}

/// `X` is acyclic while its naive symmetric square is not.
pub fn contrast_report(x: &BoundedComplex) -> Result<ContrastReport> {
    let input_homology = x.homology();
    let s = sym_naive(2, x)?;
    let sym2_homology = s.homology()?;
    let input_acyclic = input_homology.values().all(HomologyGroup::is_zero);
    let sym2_acyclic = sym2_homology.values().all(HomologyGroup::is_zero);
    Ok(ContrastReport {
        input_homology,
        sym2_terms: s.terms.iter().map(|(&k, t)| (k, t.group.clone())).collect(),
        sym2_homology,
        transposition: transposition_matrices(x),
        input_acyclic,
        sym2_acyclic,
        passed: input_acyclic && !sym2_acyclic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nonzero(h: &Homology) -> Vec<(i64, String)> {
        h.iter().filter(|(_, g)| !g.is_zero()).map(|(&k, g)| (k, g.to_string())).collect()
    }

    #[test]
    fn tensor_ranks_and_unit() {
        let x = identity_cone(-1);
        let xx = total_tensor(&x, &x).unwrap();
        assert_eq!((xx.rank(-2), xx.rank(-1), xx.rank(0)), (1, 2, 1));
        let u = total_tensor(&x, &unit_complex(0, Grading::Cohomological)).unwrap();
        assert_eq!(u.rank(-1), 1);
        assert_eq!(u.d(-1).get(0, 0), 1);
    }

    #[test]
    fn example_counterexample() {
        let x = identity_cone(-1);
        let r = contrast_report(&x).unwrap();
        assert!(r.input_acyclic);
        assert_eq!(nonzero(&r.sym2_homology), vec![(-2, "Z/2".to_string())]);
        assert_eq!(r.sym2_terms[&-2].to_string(), "Z/2");
        assert_eq!(r.sym2_terms[&-1].to_string(), "Z");
        assert_eq!(r.sym2_terms[&0].to_string(), "Z");
        assert_eq!(r.transposition[&-2], vec![vec![-1]]);
        assert_eq!(r.transposition[&0], vec![vec![1]]);
        assert!(r.passed);
    }

    #[test]
    fn shifted_variants() {
        // x in even degree: the sign lands on y⊗y and the square is acyclic.
        let s = sym_naive(2, &identity_cone(0)).unwrap();
        assert_eq!(s.terms[&2].group.to_string(), "Z/2");
        assert!(nonzero(&s.homology().unwrap()).is_empty());
        // x in odd degree again: Z/2 reappears, shifted.
        let s = sym_naive(2, &identity_cone(1)).unwrap();
        assert_eq!(nonzero(&s.homology().unwrap()), vec![(2, "Z/2".to_string())]);
    }

    #[test]
    fn trivial_powers() {
        let x = identity_cone(-1);
        let s1 = sym_naive(1, &x).unwrap();
        assert!(nonzero(&s1.homology().unwrap()).is_empty());
        assert_eq!(s1.terms[&-1].group.to_string(), "Z");
        let u = unit_complex(0, Grading::Cohomological);
        let s2 = sym_naive(2, &u).unwrap();
        assert_eq!(nonzero(&s2.homology().unwrap()), vec![(0, "Z".to_string())]);
        assert!(matches!(sym_naive(5, &x), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn higher_powers_of_counterexample() {
        let x = identity_cone(-1);
        for n in 3..=4 {
            let s = sym_naive(n, &x).unwrap();
            s.validate().unwrap();
            s.homology().unwrap();
        }
        // Sym^3: x⊗x⊗x is killed by 2, and so is the whole degree -3 term.
        let s3 = sym_naive(3, &x).unwrap();
        assert_eq!(s3.terms[&-3].group.to_string(), "Z/2");
    }

    #[test]
    fn surjections_stay_surjective() {
        // Z ⊕ Z -> Z in degree 0 (sum map), and the identity on the example.
        let mut y = ChainComplexZ::new(Grading::Cohomological);
        y.bases.insert(0, vec!["a".into()]);
        let mut x = ChainComplexZ::new(Grading::Cohomological);
        x.bases.insert(0, vec!["b".into(), "c".into()]);
        let f = ChainMap {
            components: [(0, IntMatrix::from_rows(&[vec![1, 1]]))].into_iter().collect(),
        };
        for n in 1..=3 {
            assert!(sym_naive_surjective(n, &f, &x, &y).unwrap());
        }
        let e = identity_cone(-1);
        let id = ChainMap {
            components: [(-1, IntMatrix::identity(1)), (0, IntMatrix::identity(1))].into_iter().collect(),
        };
        assert!(sym_naive_surjective(2, &id, &e, &e).unwrap());
        let twice = ChainMap {
            components: [(0, IntMatrix::from_rows(&[vec![2, 2]]))].into_iter().collect(),
        };
        assert!(!sym_naive_surjective(1, &twice, &x, &y).unwrap());
    }

    fn random_complex() -> impl Strategy<Value = BoundedComplex> {
        // Z^a --d--> Z^2 with random entries.
        (-2i64..2, 1usize..3, prop::collection::vec(-2i64..=2, 4)).prop_map(|(lo, a, entries)| {
            let mut c = ChainComplexZ::new(Grading::Cohomological);
            c.bases.insert(lo, (0..a).map(|i| format!("u{i}")).collect());
            c.bases.insert(lo + 1, vec!["v".into(), "w".into()]);
            let mut d = SparseMatrix::new(2, a);
            for i in 0..a {
                d.add(0, i, entries[i]);
                d.add(1, i, entries[i + 2]);
            }
            c.differentials.insert(lo, d);
            c
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn tensor_square_is_a_complex(x in random_complex()) {
            let xx = total_tensor(&x, &x).unwrap();
            prop_assert!(xx.validate().is_ok());
        }

        #[test]
        fn sym_square_is_a_complex(x in random_complex()) {
            let s = sym_naive(2, &x).unwrap();
            prop_assert!(s.validate().is_ok());
            s.homology().unwrap();
        }

        #[test]
        fn sym_one_is_identity(x in random_complex()) {
            let s = sym_naive(1, &x).unwrap();
            let h = s.homology().unwrap();
            let direct = x.homology();
            for (k, g) in direct {
                prop_assert_eq!(&h[&k], &g);
            }
        }
    }
}
