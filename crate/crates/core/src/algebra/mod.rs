//! Finite-dimensional algebras given by structure constants.

mod construct;
mod identity;
mod peirce;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

pub use construct::{
    commutator_subspace, direct_sum, grassmann, matrix_algebra, plus_algebra, scalar_field,
    sl_n, truncated_free, Polynomial, SpecialLinear,
};
pub use identity::{check_identity, Identity, IdentityReport, Witness};
pub use peirce::peirce_decompose;

use crate::error::{Error, Result};
use crate::linalg::{Accumulator, BasedSpace, SparseVec, SpanSolver};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Associative,
    Lie,
    Jordan,
    Untagged,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Associative => "associative",
            Kind::Lie => "lie",
            Kind::Jordan => "jordan",
            Kind::Untagged => "untagged",
        })
    }
}

impl core::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "associative" => Ok(Kind::Associative),
            "lie" => Ok(Kind::Lie),
            "jordan" => Ok(Kind::Jordan),
            "untagged" => Ok(Kind::Untagged),
            other => Err(Error::InvalidBasis(alloc::format!("unknown kind {other:?}"))),
        }
    }
}

/// `e_i · e_j = Σ c_k e_k`, stored densely by pair with sparse values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    entries: Vec<SparseVec>,
}

impl StructureTable {
    pub fn new(dim: usize) -> Self {
        StructureTable {
            dim,
            entries: alloc::vec![SparseVec::new(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SparseVec) {
        self.entries[i * self.dim + j] = v;
    }

    /// Nonzero products in `(i, j)` order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / self.dim, idx % self.dim, v))
    }

    fn validate(&self) -> Result<()> {
        for v in &self.entries {
            if let Some(k) = v.max_index() {
                if k >= self.dim {
                    return Err(Error::IndexOutOfRange {
                        index: k,
                        dim: self.dim,
                    });
                }
            }
        }
        Ok(())
    }

    /// Copy with `delta` added to the coefficient of `e_k` in `e_i · e_j`.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: &Scalar) -> Self {
        let mut t = self.clone();
        let mut v = t.get(i, j).clone();
        v.add_scaled(delta, &SparseVec::unit(k));
        t.set(i, j, v);
        t
    }

    /// Bilinear extension of the table.
    pub fn product(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        if x.is_zero() || y.is_zero() {
            return SparseVec::new();
        }
        if x.nnz() == 1 && y.nnz() == 1 {
            let (i, a) = x.leading().unwrap();
            let (j, b) = y.leading().unwrap();
            return self.get(i, j).scaled(&(a * b));
        }
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), self.get(i, j));
            }
        }
        acc.finish()
    }
}

/// Records that an algebra was built as `M_n(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixShape {
    pub n: usize,
    pub base_dim: usize,
}

#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    space: BasedSpace,
    table: StructureTable,
    kind: Kind,
    unit: Option<SparseVec>,
    shape: Option<MatrixShape>,
}

/// Validates a structure table and wraps it as an algebra.
///
/// A declared kind runs the matching identity checker; a supplied unit is
/// verified, otherwise one is searched for (except for Lie algebras).
pub fn make_algebra(
    name: &str,
    space: BasedSpace,
    table: StructureTable,
    kind: Kind,
    unit: Option<SparseVec>,
) -> Result<Algebra> {
    if table.dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: table.dim(),
        });
    }
    table.validate()?;
    let mut alg = Algebra {
        name: name.to_string(),
        space,
        table,
        kind: Kind::Untagged,
        unit: None,
        shape: None,
    };
    let checks: &[Identity] = match kind {
        Kind::Associative => &[Identity::Associativity],
        Kind::Lie => &[Identity::Anticommutativity, Identity::Jacobi],
        Kind::Jordan => &[Identity::Jordan],
        Kind::Untagged => &[],
    };
    for &id in checks {
        let report = check_identity(&alg, id);
        if !report.holds {
            return Err(Error::Validation {
                what: alloc::format!("{kind} algebra {name:?}"),
                report: Box::new(report),
            });
        }
    }
    alg.kind = kind;
    match unit {
        Some(u) => {
            alg.space.check_vector(&u)?;
            if let Some(report) = alg.unit_failure(&u) {
                return Err(Error::Validation {
                    what: alloc::format!("unit of {name:?}"),
                    report: Box::new(report),
                });
            }
            alg.unit = Some(u);
        }
        None if kind != Kind::Lie => alg.unit = alg.detect_unit(),
        None => {}
    }
    Ok(alg)
}

impl Algebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn unit(&self) -> Option<&SparseVec> {
        self.unit.as_ref()
    }

    pub fn shape(&self) -> Option<MatrixShape> {
        self.shape
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub(crate) fn with_shape(mut self, shape: MatrixShape) -> Self {
        self.shape = Some(shape);
        self
    }

    pub fn require_kind(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch {
                expected: kind,
                found: self.kind,
            });
        }
        Ok(())
    }

    pub fn require_unit(&self) -> Result<&SparseVec> {
        self.unit
            .as_ref()
            .ok_or_else(|| Error::NotUnital(self.name.clone()))
    }

    /// Product without dimension checks; see [`product_eval`].
    #[inline]
    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.table.product(x, y)
    }

    #[inline]
    pub fn basis_mul(&self, i: usize, j: usize) -> &SparseVec {
        self.table.get(i, j)
    }

    pub fn basis(&self, label: &str) -> Option<SparseVec> {
        self.space.index_of(label).map(SparseVec::unit)
    }

    fn unit_failure(&self, u: &SparseVec) -> Option<IdentityReport> {
        for i in 0..self.dim() {
            let e = SparseVec::unit(i);
            for (left, right) in [(self.mul(u, &e), e.clone()), (self.mul(&e, u), e.clone())] {
                if left != right {
                    return Some(IdentityReport::failed(
                        "unit",
                        Witness {
                            inputs: alloc::vec![u.clone(), e.clone()],
                            left,
                            right,
                        },
                    ));
                }
            }
        }
        None
    }

    /// Solves `u·e_i = e_i = e_i·u` for all `i`.
    fn detect_unit(&self) -> Option<SparseVec> {
        let n = self.dim();
        if n == 0 {
            return None;
        }
        // Equation block i: coordinates of u·e_i, then of e_i·u.
        let gens: Vec<SparseVec> = (0..n)
            .map(|k| {
                let mut acc = Accumulator::new();
                for i in 0..n {
                    for (t, c) in self.table.get(k, i).iter() {
                        acc.add(2 * n * i + t, c);
                    }
                    for (t, c) in self.table.get(i, k).iter() {
                        acc.add(2 * n * i + n + t, c);
                    }
                }
                acc.finish()
            })
            .collect();
        let target = SparseVec::from_terms(
            (0..n).flat_map(|i| [(2 * n * i + i, Scalar::one()), (2 * n * i + n + i, Scalar::one())]),
        );
        let u = SpanSolver::new(2 * n * n, &gens).solve(&target)?;
        debug_assert!(self.unit_failure(&u).is_none());
        Some(u)
    }
}

/// Bilinear product of two coordinate vectors.
pub fn product_eval(a: &Algebra, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
    a.space.check_vector(x)?;
    a.space.check_vector(y)?;
    Ok(a.mul(x, y))
}
