//! Exact rational linear algebra: sparse vectors, row reduction, kernels,
//! quotients and exterior squares.

mod matrix;
mod reducer;
mod space;
mod sparse;

pub use matrix::{Matrix, Rref};
pub use reducer::RowReducer;
pub use space::{
    kernel_basis, quotient_space, wedge_square, BasedSpace, LinearMap, Quotient, SpanSolver,
    Subspace, WedgeSquare,
};
pub use sparse::{Accumulator, SparseVec};

/// Reduced row-echelon form of a dense matrix.
pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}
