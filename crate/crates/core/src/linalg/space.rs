use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::matrix::Matrix;
use super::reducer::RowReducer;
use super::sparse::{Accumulator, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite-dimensional space with a labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedSpace {
    labels: Vec<String>,
}

impl BasedSpace {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidBasis(format!("duplicate label {l:?}")));
            }
        }
        Ok(BasedSpace { labels })
    }

    /// Basis `prefix0, prefix1, ...`.
    pub fn indexed(prefix: &str, dim: usize) -> Self {
        BasedSpace {
            labels: (0..dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_vector(&self, v: &SparseVec) -> Result<()> {
        match v.max_index() {
            Some(i) if i >= self.dim() => Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim(),
            }),
            _ => Ok(()),
        }
    }

    /// Human-readable linear combination, e.g. `1/2*e11 - e22`.
    pub fn format_vector(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (i, c)) in v.iter().enumerate() {
            let neg = c.signum() < 0;
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !mag.is_one() {
                let _ = write!(s, "{mag}*");
            }
            s.push_str(&self.labels[i]);
        }
        s
    }
}

/// A subspace of `k^n`, stored as the rows of its reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: (0..ambient_dim).map(SparseVec::unit).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<'a, I: IntoIterator<Item = &'a SparseVec>>(ambient_dim: usize, vectors: I) -> Self {
        let mut r = RowReducer::new(ambient_dim);
        for v in vectors {
            r.insert(v);
        }
        Self::from_reducer(r)
    }

    pub fn from_reducer(r: RowReducer) -> Self {
        let ambient_dim = r.ncols();
        let (rows, pivots) = r.into_rref();
        Subspace {
            ambient_dim,
            rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(p);
            if !c.is_zero() {
                acc.add_scaled(&-&c, row);
            }
        }
        acc
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_terms(
            self.pivots
                .iter()
                .enumerate()
                .map(|(k, &p)| (k, v.get(p))),
        ))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient_dim, self.rows.iter().chain(other.rows.iter()))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.pivots == other.pivots && self.rows == other.rows
    }
}

/// Linear map stored by the images of the source basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    source_dim: usize,
    target_dim: usize,
    columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn from_columns(source_dim: usize, target_dim: usize, columns: Vec<SparseVec>) -> Result<Self> {
        if columns.len() != source_dim {
            return Err(Error::DimensionMismatch {
                expected: source_dim,
                found: columns.len(),
            });
        }
        for c in &columns {
            if let Some(i) = c.max_index() {
                if i >= target_dim {
                    return Err(Error::IndexOutOfRange {
                        index: i,
                        dim: target_dim,
                    });
                }
            }
        }
        Ok(LinearMap {
            source_dim,
            target_dim,
            columns,
        })
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let columns = (0..m.ncols())
            .map(|c| SparseVec::from_terms((0..m.nrows()).map(|r| (r, m.get(r, c).clone()))))
            .collect();
        LinearMap {
            source_dim: m.ncols(),
            target_dim: m.nrows(),
            columns,
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            source_dim: n,
            target_dim: n,
            columns: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        LinearMap {
            source_dim,
            target_dim,
            columns: alloc::vec![SparseVec::new(); source_dim],
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn column(&self, i: usize) -> &SparseVec {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in v.iter() {
            acc.add_scaled(c, &self.columns[i]);
        }
        acc.finish()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.target_dim != self.source_dim {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim,
                found: inner.target_dim,
            });
        }
        Ok(LinearMap {
            source_dim: inner.source_dim,
            target_dim: self.target_dim,
            columns: inner.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.target_dim, self.source_dim);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.target_dim, self.columns.iter())
    }

    pub fn rank(&self) -> usize {
        let mut r = RowReducer::new(self.target_dim);
        for c in &self.columns {
            r.insert(c);
        }
        r.rank()
    }

    pub fn kernel(&self) -> Subspace {
        kernel_basis(self)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source_dim
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target_dim
    }
}

/// Null space of a linear map.
///
/// Each source basis vector is inserted as `(f(e_i) | e_i)`; after
/// elimination, the rows whose pivot lies in the `e_i` block have zero image
/// part and span the kernel.
pub fn kernel_basis(map: &LinearMap) -> Subspace {
    let t = map.target_dim;
    let mut r = RowReducer::new(t + map.source_dim);
    for (i, col) in map.columns.iter().enumerate() {
        let mut v = col.clone();
        v.add_scaled(&Scalar::one(), &SparseVec::unit(t + i));
        r.insert(&v);
    }
    let (rows, pivots) = r.into_rref();
    let kernel_rows: Vec<SparseVec> = rows
        .iter()
        .zip(pivots)
        .filter(|(_, p)| *p >= t)
        .map(|(row, _)| {
            SparseVec::from_sorted_unchecked(
                row.iter().map(|(j, c)| (j - t, c.clone())).collect(),
            )
        })
        .collect();
    Subspace::span(map.source_dim, kernel_rows.iter())
}

/// `ambient / sub`, with basis given by the non-pivot coordinates of `sub`.
#[derive(Clone, Debug)]
pub struct Quotient {
    space: BasedSpace,
    reps: Vec<usize>,
    position: Vec<Option<usize>>,
    sub: Subspace,
}

impl Quotient {
    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Ambient basis index representing quotient basis vector `k`.
    pub fn representative(&self, k: usize) -> usize {
        self.reps[k]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.sub.reduce(v);
        SparseVec::from_sorted_unchecked(
            r.iter()
                .map(|(i, c)| (self.position[i].expect("reduced vector off pivots"), c.clone()))
                .collect(),
        )
    }

    pub fn section(&self, q: &SparseVec) -> SparseVec {
        q.remap(|k| self.reps[k])
    }

    pub fn proj_map(&self) -> LinearMap {
        let n = self.sub.ambient_dim();
        LinearMap {
            source_dim: n,
            target_dim: self.dim(),
            columns: (0..n).map(|i| self.project(&SparseVec::unit(i))).collect(),
        }
    }

    pub fn section_map(&self) -> LinearMap {
        LinearMap {
            source_dim: self.dim(),
            target_dim: self.sub.ambient_dim(),
            columns: self.reps.iter().map(|&i| SparseVec::unit(i)).collect(),
        }
    }
}

pub fn quotient_space(ambient: &BasedSpace, sub: &Subspace) -> Result<Quotient> {
    if sub.ambient_dim() != ambient.dim() {
        return Err(Error::DimensionMismatch {
            expected: ambient.dim(),
            found: sub.ambient_dim(),
        });
    }
    let mut position = alloc::vec![None; ambient.dim()];
    let pivots: BTreeSet<usize> = sub.pivots().iter().copied().collect();
    let mut reps = Vec::new();
    let mut labels = Vec::new();
    for i in 0..ambient.dim() {
        if !pivots.contains(&i) {
            position[i] = Some(reps.len());
            reps.push(i);
            labels.push(format!("[{}]", ambient.label(i)));
        }
    }
    Ok(Quotient {
        space: BasedSpace { labels },
        reps,
        position,
        sub: sub.clone(),
    })
}

/// `Λ²V` with basis `e_i ∧ e_j`, `i < j`.
#[derive(Clone, Debug)]
pub struct WedgeSquare {
    n: usize,
    space: BasedSpace,
}

impl WedgeSquare {
    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn base_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Index of `e_i ∧ e_j` for `i < j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        let mut i = 0;
        let mut start = 0;
        loop {
            let row = self.n - i - 1;
            if idx < start + row {
                return (i, i + 1 + idx - start);
            }
            start += row;
            i += 1;
        }
    }

    /// `e_i ∧ e_j` as a signed basis element, or `None` when `i == j`.
    pub fn basis_wedge(&self, i: usize, j: usize) -> Option<(usize, Scalar)> {
        use core::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => Some((self.index(i, j), Scalar::one())),
            Greater => Some((self.index(j, i), Scalar::from_int(-1))),
            Equal => None,
        }
    }

    /// Bilinear, alternating embedding `(x, y) ↦ x ∧ y`.
    pub fn embed(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if let Some((k, s)) = self.basis_wedge(i, j) {
                    acc.add(k, &(&(a * b) * &s));
                }
            }
        }
        acc.finish()
    }
}

pub fn wedge_square(space: &BasedSpace) -> WedgeSquare {
    let n = space.dim();
    let mut labels = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            labels.push(format!("{}^{}", space.label(i), space.label(j)));
        }
    }
    WedgeSquare {
        n,
        space: BasedSpace { labels },
    }
}

/// Expresses vectors as combinations of a fixed generating list.
///
/// Each generator `g_i` is stored as `(g_i | e_i)`; reducing `(t | 0)`
/// leaves `(t - G c | -c)`, so a zero first block yields `t = G c`.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    ambient_dim: usize,
    ngens: usize,
    reducer: RowReducer,
}

impl SpanSolver {
    pub fn new(ambient_dim: usize, generators: &[SparseVec]) -> Self {
        let mut reducer = RowReducer::new(ambient_dim + generators.len());
        for (i, g) in generators.iter().enumerate() {
            let mut v = g.clone();
            v.add_scaled(&Scalar::one(), &SparseVec::unit(ambient_dim + i));
            reducer.insert(&v);
        }
        SpanSolver {
            ambient_dim,
            ngens: generators.len(),
            reducer,
        }
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn solve(&self, target: &SparseVec) -> Option<SparseVec> {
        let r = self.reducer.reduce(target);
        if r.leading().is_some_and(|(i, _)| i < self.ambient_dim) {
            return None;
        }
        Some(SparseVec::from_sorted_unchecked(
            r.iter().map(|(i, c)| (i - self.ambient_dim, -c)).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(terms: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_terms(terms.iter().map(|&(i, c)| (i, Scalar::from_int(c))))
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(LinearMap::zero(3, 2).kernel().dim(), 3);
        assert_eq!(LinearMap::identity(4).kernel().dim(), 0);
        let f = LinearMap::from_columns(2, 1, alloc::vec![v(&[(0, 1)]), v(&[(0, 1)])]).unwrap();
        let k = f.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&v(&[(0, 1), (1, -1)])));
    }

    #[test]
    fn quotient_examples() {
        let amb = BasedSpace::indexed("e", 5);
        let sub = Subspace::span(5, [v(&[(0, 1), (1, 1)]), v(&[(2, 1), (4, 3)])].iter());
        let q = quotient_space(&amb, &sub).unwrap();
        assert_eq!(q.dim(), 3);
        let q0 = quotient_space(&amb, &Subspace::zero(5)).unwrap();
        assert_eq!(q0.proj_map(), LinearMap::identity(5));
        assert_eq!(quotient_space(&amb, &Subspace::full(5)).unwrap().dim(), 0);
        assert!(quotient_space(&amb, &Subspace::zero(4)).is_err());
    }

    #[test]
    fn wedge_examples() {
        let sp = BasedSpace::indexed("e", 4);
        let w = wedge_square(&sp);
        assert_eq!(w.dim(), 6);
        assert_eq!(wedge_square(&BasedSpace::indexed("e", 1)).dim(), 0);
        let (e1, e2) = (SparseVec::unit(1), SparseVec::unit(2));
        assert_eq!(w.embed(&e2, &e1), -&w.embed(&e1, &e2));
        for idx in 0..w.dim() {
            let (i, j) = w.pair(idx);
            assert_eq!(w.index(i, j), idx);
        }
    }

    #[test]
    fn span_solver_recovers_combination() {
        let gens = [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (2, -1)])];
        let s = SpanSolver::new(3, &gens);
        let t = v(&[(0, 2), (1, 5), (2, 3)]);
        let c = s.solve(&t).unwrap();
        let mut back = SparseVec::new();
        for (i, x) in c.iter() {
            back.add_scaled(x, &gens[i]);
        }
        assert_eq!(back, t);
        assert!(s.solve(&v(&[(0, 1)])).is_none());
    }

    fn arb_map() -> impl Strategy<Value = LinearMap> {
        (1usize..6, 1usize..6).prop_flat_map(|(s, t)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, t), s).prop_map(
                move |cols| {
                    let columns = cols
                        .iter()
                        .map(|c| SparseVec::from_terms(c.iter().enumerate().map(|(i, &x)| (i, Scalar::from_int(x)))))
                        .collect();
                    LinearMap::from_columns(s, t, columns).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(f in arb_map()) {
            let k = f.kernel();
            prop_assert_eq!(f.rank() + k.dim(), f.source_dim());
            for b in k.basis() {
                prop_assert!(f.apply(b).is_zero());
            }
            prop_assert_eq!(f.rank(), f.to_matrix().rank());
        }

        #[test]
        fn incremental_and_dense_rref_agree(f in arb_map()) {
            // Rows of the transpose are the columns of f.
            let sub = f.image();
            let m = f.to_matrix();
            let mut rows = alloc::vec::Vec::new();
            for j in 0..m.ncols() {
                rows.push((0..m.nrows()).map(|i| m.get(i, j).clone()).collect::<Vec<_>>());
            }
            let dense = Matrix::from_rows(rows).unwrap().rref();
            prop_assert_eq!(dense.rank, sub.dim());
            prop_assert_eq!(&dense.pivots[..], sub.pivots());
            for (k, row) in sub.basis().iter().enumerate() {
                prop_assert_eq!(&SparseVec::from_dense(dense.reduced.row(k)), row);
            }
            prop_assert_eq!(dense.reduced.rref().reduced, dense.reduced);
        }

        #[test]
        fn quotient_section_is_right_inverse(f in arb_map()) {
            let sub = f.image();
            let amb = BasedSpace::indexed("e", f.target_dim());
            let q = quotient_space(&amb, &sub).unwrap();
            prop_assert_eq!(q.dim(), amb.dim() - sub.dim());
            let composed = q.proj_map().compose(&q.section_map()).unwrap();
            prop_assert_eq!(composed, LinearMap::identity(q.dim()));
            prop_assert!(q.proj_map().kernel().same_as(&sub));
        }
    }
}
