use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: alloc::vec![(i, Scalar::one())],
        }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: alloc::vec![(i, c)],
        }
    }

    /// Builds a vector from unordered terms, summing repeated indices.
    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in terms {
            acc.add(i, &c);
        }
        acc.finish()
    }

    /// Caller guarantees sorted, distinct indices and nonzero values.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = alloc::vec![Scalar::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = core::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v * c));
                }
                (Some(_), Some(_)) => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = &x + &(y * c);
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v * c));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    /// Applies an index map to every entry, summing collisions.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_terms(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if i > j {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }
}

impl Add<&SparseVec> for &SparseVec {
    type Output = SparseVec;
    fn add(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub<&SparseVec> for &SparseVec {
    type Output = SparseVec;
    fn sub(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), rhs);
        out
    }
}

impl Neg for &SparseVec {
    type Output = SparseVec;
    fn neg(self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }
}

/// Collects many scaled contributions before materializing a [`SparseVec`].
#[derive(Default, Debug)]
pub struct Accumulator {
    terms: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(i).or_default();
        *slot += c;
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(i, &(x * c));
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        )
    }
}
