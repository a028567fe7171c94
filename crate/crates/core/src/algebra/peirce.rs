use alloc::format;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Subspace};

/// The four entry subspaces `[e11(A), e12(A), e21(A), e22(A)]` of `M_2(A)`.
pub fn peirce_decompose(m: &Algebra) -> Result<[Subspace; 4]> {
    let shape = match m.shape() {
        Some(s) if s.n == 2 => s,
        Some(s) => {
            return Err(Error::Untagged(format!(
                "{} is a {0}x{0} matrix algebra, not 2x2",
                s.n
            )))
        }
        None => return Err(Error::Untagged(format!("{} is not tagged as a matrix algebra", m.name()))),
    };
    let d = shape.base_dim;
    let part = |p: usize, q: usize| {
        let vs: alloc::vec::Vec<SparseVec> = (0..d).map(|s| SparseVec::unit((p * 2 + q) * d + s)).collect();
        Subspace::span(m.dim(), &vs)
    };
    Ok([part(0, 0), part(0, 1), part(1, 0), part(1, 1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, scalar_field, sl_n};

    #[test]
    fn parts_have_base_dimension_and_span_m() {
        for a in [scalar_field(), matrix_algebra(&scalar_field(), 2).unwrap()] {
            let m = matrix_algebra(&a, 2).unwrap();
            let parts = peirce_decompose(&m).unwrap();
            let mut total = Subspace::zero(m.dim());
            for p in &parts {
                assert_eq!(p.dim(), a.dim());
                total = total.sum(p);
            }
            assert_eq!(total.dim(), m.dim());
        }
    }

    #[test]
    fn parts_multiply_like_matrix_units() {
        let a = matrix_algebra(&scalar_field(), 2).unwrap();
        let m = matrix_algebra(&a, 2).unwrap();
        let [p11, p12, p21, _] = peirce_decompose(&m).unwrap();
        for x in p12.basis() {
            for y in p21.basis() {
                assert!(p11.contains(&m.mul(x, y)));
            }
            for y in p12.basis() {
                assert!(m.mul(x, y).is_zero());
            }
        }
    }

    #[test]
    fn untagged_input_rejected() {
        let k = scalar_field();
        assert!(peirce_decompose(&k).is_err());
        assert!(peirce_decompose(sl_n(&k, 2).unwrap().algebra()).is_err());
        assert!(peirce_decompose(&matrix_algebra(&k, 3).unwrap()).is_err());
    }
}
