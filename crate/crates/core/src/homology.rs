//! First cyclic homology from the Connes complex `C^λ_n = A^{⊗(n+1)} / (1 − t)`,
//! `t(a₀⊗…⊗a_n) = (−1)ⁿ a_n⊗a₀⊗…⊗a_{n−1}`, in degrees 0 through 2.

use alloc::format;

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::linalg::{quotient_space, Accumulator, BasedSpace, LinearMap, Quotient, RowReducer, SparseVec, Subspace};
use crate::scalar::Scalar;

/// Degrees 0..=2 of the Connes complex with the induced boundaries.
#[derive(Clone, Debug)]
pub struct ConnesComplex {
    pub levels: [Quotient; 3],
    /// `b̄₁: C^λ₁ → C^λ₀`.
    pub b1: LinearMap,
    /// `b̄₂: C^λ₂ → C^λ₁`.
    pub b2: LinearMap,
}

fn power(d: usize, k: u32) -> usize {
    d.pow(k)
}

/// `(1 − t)` image in `A^{⊗(n+1)}`, tensors indexed in base `d`, first factor most significant.
fn cyclic_relations(d: usize, n: usize) -> Subspace {
    let len = n + 1;
    let size = power(d, len as u32);
    let sign = if n.is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
    let mut r = RowReducer::new(size);
    for idx in 0..size {
        // t moves the last factor to the front.
        let last = idx % d;
        let rotated = last * power(d, n as u32) + idx / d;
        let mut v = SparseVec::unit(idx);
        v.add_scaled(&-&sign, &SparseVec::unit(rotated));
        r.insert(&v);
    }
    Subspace::from_reducer(r)
}

fn level(d: usize, n: usize) -> Result<Quotient> {
    let space = BasedSpace::indexed("c", power(d, n as u32 + 1));
    quotient_space(&space, &cyclic_relations(d, n))
}

/// `b(a₀⊗a₁) = a₀a₁ − a₁a₀`.
fn b1(a: &Algebra, idx: usize) -> SparseVec {
    let d = a.dim();
    let (x, y) = (idx / d, idx % d);
    a.basis_mul(x, y) - a.basis_mul(y, x)
}

/// `b(a₀⊗a₁⊗a₂) = a₀a₁⊗a₂ − a₀⊗a₁a₂ + a₂a₀⊗a₁`.
fn b2(a: &Algebra, idx: usize) -> SparseVec {
    let d = a.dim();
    let (x, y, z) = (idx / (d * d), idx / d % d, idx % d);
    let mut acc = Accumulator::new();
    for (k, c) in a.basis_mul(x, y).iter() {
        acc.add(k * d + z, c);
    }
    for (k, c) in a.basis_mul(y, z).iter() {
        acc.add(x * d + k, &-c);
    }
    for (k, c) in a.basis_mul(z, x).iter() {
        acc.add(k * d + y, c);
    }
    acc.finish()
}

fn induced(
    source: &Quotient,
    target: &Quotient,
    b: impl Fn(usize) -> SparseVec,
) -> Result<LinearMap> {
    // b must carry (1 − t) into (1 − t) for the induced map to exist.
    for row in source.sub().basis() {
        let mut acc = Accumulator::new();
        for (i, c) in row.iter() {
            acc.add_scaled(c, &b(i));
        }
        if !target.sub().contains(&acc.finish()) {
            return Err(Error::Internal("boundary does not preserve cyclic relations".into()));
        }
    }
    let columns = source
        .representatives()
        .iter()
        .map(|&r| target.project(&b(r)))
        .collect();
    LinearMap::from_columns(source.dim(), target.dim(), columns)
}

pub fn connes_complex(a: &Algebra) -> Result<ConnesComplex> {
    a.require_kind(Kind::Associative)?;
    a.require_unit()?;
    let d = a.dim();
    let levels = [level(d, 0)?, level(d, 1)?, level(d, 2)?];
    let m1 = induced(&levels[1], &levels[0], |i| b1(a, i))?;
    let m2 = induced(&levels[2], &levels[1], |i| b2(a, i))?;
    let comp = m1.compose(&m2)?;
    if let Some(k) = comp.columns().iter().position(|c| !c.is_zero()) {
        return Err(Error::Internal(format!("b1 b2 != 0 on column {k}")));
    }
    Ok(ConnesComplex { levels, b1: m1, b2: m2 })
}

/// `dim HC₁(A) = dim ker b̄₁ − rank b̄₂`.
pub fn hc1_dim(a: &Algebra) -> Result<usize> {
    let c = connes_complex(a)?;
    let cycles = c.b1.source_dim() - c.b1.rank();
    Ok(cycles - c.b2.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_sum, matrix_algebra, scalar_field, truncated_free};

    #[test]
    fn scalar_has_trivial_c1() {
        let c = connes_complex(&scalar_field()).unwrap();
        assert_eq!(c.levels[1].dim(), 0);
        assert_eq!(hc1_dim(&scalar_field()).unwrap(), 0);
    }

    #[test]
    fn additive_on_direct_sums() {
        let k = scalar_field();
        let dual = truncated_free(&["x"], 1, &[]).unwrap();
        for (a, b) in [(k.clone(), k.clone()), (k.clone(), dual.clone()), (dual.clone(), dual.clone())] {
            let s = direct_sum(&a, &b).unwrap();
            assert_eq!(hc1_dim(&s).unwrap(), hc1_dim(&a).unwrap() + hc1_dim(&b).unwrap());
        }
    }

    #[test]
    fn matrix_algebra_matches_scalar() {
        // Morita invariance gives HC₁(M₂(k)) = HC₁(k) = 0.
        assert_eq!(hc1_dim(&matrix_algebra(&scalar_field(), 2).unwrap()).unwrap(), 0);
    }

    #[test]
    fn rejects_lie_and_non_unital_input() {
        let a = truncated_free(&["x"], 1, &[]).unwrap();
        let lie = crate::algebra::sl_n(&a, 2).unwrap();
        assert!(matches!(hc1_dim(lie.algebra()), Err(Error::KindMismatch { .. })));
        let nil = crate::algebra::make_algebra(
            "nil",
            BasedSpace::indexed("n", 1),
            crate::algebra::StructureTable::new(1),
            Kind::Associative,
            None,
        )
        .unwrap();
        assert!(matches!(hc1_dim(&nil), Err(Error::NotUnital(_))));
    }
}
