//! Universal central extensions of perfect Lie algebras, modelled as
//! `Λ²g / B` with `B` spanned by the cyclic sums `x∧[y,z] + y∧[z,x] + z∧[x,y]`.

mod growth;
mod lift;
mod verify;

use alloc::format;
use alloc::vec::Vec;

pub use growth::{growth_report, GrowthRow};
pub use lift::{canonical_lift, steinberg_check, GeneratorLift};
pub use verify::{verify_thm32, verify_thm41, Check, IsoReport, Theorem, VerifyOptions};

use crate::algebra::{make_algebra, Algebra, IdentityReport, Kind, StructureTable, Witness};
use crate::error::{Error, Result};
use crate::linalg::{
    kernel_basis, quotient_space, wedge_square, Accumulator, LinearMap, Quotient, RowReducer, SparseVec, Subspace,
    WedgeSquare,
};
use crate::scalar::Scalar;

/// Default cap on `dim Λ²g`.
pub const DEFAULT_MAX_WEDGE_DIM: usize = 2500;

#[derive(Clone, Debug)]
pub struct UceOptions {
    pub max_wedge_dim: usize,
}

impl Default for UceOptions {
    fn default() -> Self {
        UceOptions {
            max_wedge_dim: DEFAULT_MAX_WEDGE_DIM,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CentralExtension {
    total: Algebra,
    target: Algebra,
    pi: LinearMap,
    kernel: Subspace,
    wedge: WedgeSquare,
    classes: Quotient,
}

impl CentralExtension {
    pub fn total(&self) -> &Algebra {
        &self.total
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn pi(&self) -> &LinearMap {
        &self.pi
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// `dim H₂(g)`.
    pub fn h2_dim(&self) -> usize {
        self.kernel.dim()
    }

    /// The class `⟨x ∧ y⟩` in the total space.
    pub fn class(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.classes.project(&self.wedge.embed(x, y))
    }

    /// Cycle subspace `B ⊆ Λ²g`.
    pub fn cycles(&self) -> &Subspace {
        self.classes.sub()
    }
}

/// Rank of `[g, g]`.
pub fn derived_rank(g: &Algebra) -> usize {
    let n = g.dim();
    let mut r = RowReducer::new(n);
    'outer: for i in 0..n {
        for j in i + 1..n {
            r.insert(g.basis_mul(i, j));
            if r.is_full() {
                break 'outer;
            }
        }
    }
    r.rank()
}

pub fn build_uce(g: &Algebra) -> Result<CentralExtension> {
    build_uce_with(g, &UceOptions::default())
}

pub fn build_uce_with(g: &Algebra, opts: &UceOptions) -> Result<CentralExtension> {
    g.require_kind(Kind::Lie)?;
    let n = g.dim();
    let rank = derived_rank(g);
    if rank != n {
        return Err(Error::NotPerfect { rank, dim: n });
    }
    let wedge = wedge_square(g.space());
    if wedge.dim() > opts.max_wedge_dim {
        return Err(Error::ResourceLimit {
            what: "dim of exterior square",
            size: wedge.dim(),
            limit: opts.max_wedge_dim,
        });
    }
    let e = SparseVec::unit;
    let mut b = RowReducer::new(wedge.dim());
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut acc = Accumulator::new();
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    acc.add_scaled(&Scalar::one(), &wedge.embed(&e(x), g.basis_mul(y, z)));
                }
                b.insert(&acc.finish());
            }
        }
    }
    let b = Subspace::from_reducer(b);
    let classes = quotient_space(wedge.space(), &b)?;
    let dim = classes.dim();
    let pairs: Vec<(usize, usize)> = (0..dim).map(|k| wedge.pair(classes.representative(k))).collect();
    let images: Vec<SparseVec> = pairs.iter().map(|&(p, q)| g.basis_mul(p, q).clone()).collect();
    let mut table = StructureTable::new(dim);
    for k in 0..dim {
        for l in k + 1..dim {
            let v = classes.project(&wedge.embed(&images[k], &images[l]));
            table.set(l, k, -&v);
            table.set(k, l, v);
        }
    }
    let name = format!("uce({})", g.name());
    let total = make_algebra(&name, classes.space().clone(), table, Kind::Lie, None)
        .map_err(|err| Error::Internal(format!("{name}: {err}")))?;
    let pi = LinearMap::from_columns(dim, n, images)?;
    let kernel = kernel_basis(&pi);
    let ext = CentralExtension {
        total,
        target: g.clone(),
        pi,
        kernel,
        wedge,
        classes,
    };
    let report = check_extension(&ext)?;
    if !report.holds {
        return Err(Error::Internal(format!("{name}: {} failed", report.identity)));
    }
    Ok(ext)
}

/// `π` surjective and a homomorphism, kernel central, total perfect.
pub fn check_extension(e: &CentralExtension) -> Result<IdentityReport> {
    if !e.pi.is_surjective() {
        let r = e.pi.rank();
        return Ok(IdentityReport::failed(
            "surjective",
            Witness {
                inputs: Vec::new(),
                left: SparseVec::single(0, Scalar::from_int(r as i64)),
                right: SparseVec::single(0, Scalar::from_int(e.target.dim() as i64)),
            },
        ));
    }
    let hom = verify_lie_hom(&e.pi, &e.total, &e.target)?;
    if !hom.holds {
        return Ok(hom);
    }
    for z in e.kernel.basis() {
        for i in 0..e.total.dim() {
            let x = SparseVec::unit(i);
            let v = e.total.mul(z, &x);
            if !v.is_zero() {
                return Ok(IdentityReport::failed(
                    "central-kernel",
                    Witness {
                        inputs: alloc::vec![z.clone(), x],
                        left: v,
                        right: SparseVec::new(),
                    },
                ));
            }
        }
    }
    let rank = derived_rank(&e.total);
    if rank != e.total.dim() {
        return Ok(IdentityReport::failed(
            "perfect",
            Witness {
                inputs: Vec::new(),
                left: SparseVec::single(0, Scalar::from_int(rank as i64)),
                right: SparseVec::single(0, Scalar::from_int(e.total.dim() as i64)),
            },
        ));
    }
    Ok(IdentityReport::passed("central-extension"))
}

/// `f[x, y] = [f x, f y]` on every ordered pair of basis vectors.
pub fn verify_lie_hom(f: &LinearMap, l1: &Algebra, l2: &Algebra) -> Result<IdentityReport> {
    if f.source_dim() != l1.dim() || f.target_dim() != l2.dim() {
        return Err(Error::DimensionMismatch {
            expected: l1.dim() * l2.dim(),
            found: f.source_dim() * f.target_dim(),
        });
    }
    for i in 0..l1.dim() {
        for j in 0..l1.dim() {
            let left = f.apply(l1.basis_mul(i, j));
            let right = l2.mul(f.column(i), f.column(j));
            if left != right {
                return Ok(IdentityReport::failed(
                    "lie-hom",
                    Witness {
                        inputs: alloc::vec![SparseVec::unit(i), SparseVec::unit(j)],
                        left,
                        right,
                    },
                ));
            }
        }
    }
    Ok(IdentityReport::passed("lie-hom"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{scalar_field, sl_n};
    use crate::linalg::BasedSpace;

    #[test]
    fn sl2_has_no_central_extension() {
        let sl2 = sl_n(&scalar_field(), 2).unwrap();
        let e = build_uce(sl2.algebra()).unwrap();
        assert_eq!(e.total().dim(), 3);
        assert_eq!(e.h2_dim(), 0);
    }

    #[test]
    fn abelian_rejected() {
        let g = make_algebra("ab", BasedSpace::indexed("z", 1), StructureTable::new(1), Kind::Lie, None).unwrap();
        assert!(matches!(build_uce(&g), Err(Error::NotPerfect { rank: 0, dim: 1 })));
    }

    #[test]
    fn wedge_guard() {
        let sl2 = sl_n(&scalar_field(), 2).unwrap();
        let r = build_uce_with(sl2.algebra(), &UceOptions { max_wedge_dim: 2 });
        assert!(matches!(r, Err(Error::ResourceLimit { size: 3, .. })));
    }

    #[test]
    fn lie_hom_examples() {
        let sl2 = sl_n(&scalar_field(), 2).unwrap();
        let g = sl2.algebra();
        let id = LinearMap::identity(3);
        assert!(verify_lie_hom(&id, g, g).unwrap().holds);
        let zero = LinearMap::zero(3, 3);
        assert!(verify_lie_hom(&zero, g, g).unwrap().holds);
        assert!(!zero.is_injective());
        let e = g.space().index_of("e12(1)").unwrap();
        let h = g.space().index_of("e11(1)-e22(1)").unwrap();
        let mut cols: Vec<SparseVec> = (0..3).map(SparseVec::unit).collect();
        cols.swap(e, h);
        let swap = LinearMap::from_columns(3, 3, cols).unwrap();
        // f[h, e] = f(2e) = 2h, while [f h, f e] = [e, h] = -2e.
        let lhs = swap.apply(g.basis_mul(h, e));
        let rhs = g.mul(swap.column(h), swap.column(e));
        assert_eq!(lhs, SparseVec::single(h, Scalar::from_int(2)));
        assert_eq!(rhs, SparseVec::single(e, Scalar::from_int(-2)));
        let r = verify_lie_hom(&swap, g, g).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().inputs.len(), 2);
    }
}
