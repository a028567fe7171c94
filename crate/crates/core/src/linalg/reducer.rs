use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::sparse::SparseVec;
use crate::scalar::Scalar;

/// Incremental row-echelon accumulator.
///
/// Rows are kept in echelon form (pivot entry 1, keyed by pivot column) but
/// are not back-substituted until [`RowReducer::into_rref`]; remainders from
/// [`RowReducer::reduce`] are nevertheless canonical, since a fully reduced
/// vector has no support on pivot columns.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
    scratch: Vec<Scalar>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer {
            ncols,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
            scratch: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    fn reduce_into(&self, v: &SparseVec, buf: &mut Vec<Scalar>) -> SparseVec {
        let Some((first, _)) = v.leading() else {
            return SparseVec::new();
        };
        debug_assert!(v.max_index().unwrap() < self.ncols);
        buf.clear();
        buf.resize(self.ncols, Scalar::zero());
        for (i, c) in v.iter() {
            buf[i] = c.clone();
        }
        // Subtracting the row for pivot p only touches columns >= p.
        for (&p, &r) in self.pivot_row.range(first..) {
            if buf[p].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut buf[p]);
            for (j, x) in self.rows[r].iter().skip(1) {
                let t = x * &c;
                buf[j] -= &t;
            }
        }
        let out: Vec<(usize, Scalar)> = buf[first..]
            .iter_mut()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + first, core::mem::take(c)))
            .collect();
        SparseVec::from_sorted_unchecked(out)
    }

    /// Canonical remainder of `v` modulo the current span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut buf = Vec::new();
        self.reduce_into(v, &mut buf)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the span grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        if self.is_full() {
            return false;
        }
        let mut buf = core::mem::take(&mut self.scratch);
        let r = self.reduce_into(v, &mut buf);
        self.scratch = buf;
        self.push_reduced(r)
    }

    fn push_reduced(&mut self, r: SparseVec) -> bool {
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let inv = lead.recip().expect("nonzero leading entry");
        let row = r.scaled(&inv);
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Back-substitutes to reduced row-echelon form, rows ordered by pivot.
    pub fn into_rref(self) -> (Vec<SparseVec>, Vec<usize>) {
        let RowReducer {
            rows, pivot_row, ..
        } = self;
        let mut rows: Vec<Option<SparseVec>> = rows.into_iter().map(Some).collect();
        let pivots: Vec<usize> = pivot_row.keys().copied().collect();
        let order: Vec<usize> = pivot_row.values().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        // Process from the last pivot backwards; later rows are already reduced.
        for (&p, &r) in pivots.iter().zip(order.iter()).rev() {
            let mut row = rows[r].take().unwrap();
            let hits: Vec<(usize, Scalar)> = row
                .iter()
                .skip(1)
                .filter(|(j, _)| done.contains_key(j))
                .map(|(j, c)| (j, c.clone()))
                .collect();
            for (j, c) in hits {
                let other = &done[&j];
                row.add_scaled(&-&c, other);
            }
            done.insert(p, row);
        }
        (done.into_values().collect(), pivots)
    }
}
