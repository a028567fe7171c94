use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::CentralExtension;
use crate::algebra::{IdentityReport, SpecialLinear, Witness};
use crate::error::{Error, Result};
use crate::linalg::{RowReducer, SparseVec};
use crate::scalar::Scalar;

/// A chosen preimage of `e_ij(a)` in `uce(sl_n(A))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorLift {
    pub family: String,
    pub indices: (usize, usize),
    pub argument: String,
    pub value: SparseVec,
}

fn check_target(e: &CentralExtension, sl: &SpecialLinear) -> Result<()> {
    if e.target().table() != sl.algebra().table() {
        return Err(Error::InvalidArgument(format!(
            "extension target is not {}",
            sl.algebra().name()
        )));
    }
    Ok(())
}

/// `X_ij(a) = ⟨½ h_ij ∧ e_ij(a)⟩`, `h_ij = e_ii(1) − e_jj(1)`, zero-based indices.
pub fn canonical_lift(
    e: &CentralExtension,
    sl: &SpecialLinear,
    i: usize,
    j: usize,
    a: &SparseVec,
) -> Result<GeneratorLift> {
    check_target(e, sl)?;
    let x = sl.elementary(i, j, a)?;
    let h = sl.coroot(i, j)?.scaled(&Scalar::half());
    Ok(GeneratorLift {
        family: String::from("X"),
        indices: (i, j),
        argument: sl.base().space().format_vector(a),
        value: e.class(&h, &x),
    })
}

/// The elementary relations on the fixed lifts, exhaustively over basis
/// arguments, and generation of the total space by the lifts.
pub fn steinberg_check(e: &CentralExtension, sl: &SpecialLinear) -> Result<IdentityReport> {
    let n = sl.n();
    if n < 3 {
        return Err(Error::InvalidArgument(format!("steinberg relations need n >= 3, got {n}")));
    }
    check_target(e, sl)?;
    let a = sl.base();
    let d = a.dim();
    let total = e.total();
    let mut lifts = alloc::vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                lifts[i * n + j] = (0..d)
                    .map(|p| canonical_lift(e, sl, i, j, &SparseVec::unit(p)).map(|l| l.value))
                    .collect::<Result<Vec<_>>>()?;
            }
        }
    }
    let lift_of = |i: usize, j: usize, v: &SparseVec| -> SparseVec {
        let mut acc = SparseVec::new();
        for (p, c) in v.iter() {
            acc.add_scaled(c, &lifts[i * n + j][p]);
        }
        acc
    };
    let fail = |name: &str, args: [usize; 6], left: SparseVec, right: SparseVec| {
        let inputs = args.iter().map(|&k| SparseVec::single(0, Scalar::from_int(k as i64))).collect();
        IdentityReport::failed(name, Witness { inputs, left, right })
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if i == j || k == l {
                        continue;
                    }
                    for p in 0..d {
                        for q in 0..d {
                            let left = total.mul(&lifts[i * n + j][p], &lifts[k * n + l][q]);
                            if j == k && i != l {
                                let right = lift_of(i, l, a.basis_mul(p, q));
                                if left != right {
                                    return Ok(fail("steinberg-product", [i, j, k, l, p, q], left, right));
                                }
                            } else if j != k && i != l && !left.is_zero() {
                                return Ok(fail("steinberg-commute", [i, j, k, l, p, q], left, SparseVec::new()));
                            }
                        }
                    }
                }
            }
        }
    }
    let gens: Vec<&SparseVec> = lifts.iter().flatten().collect();
    let mut span = RowReducer::new(total.dim());
    let mut pending: Vec<SparseVec> = Vec::new();
    for g in &gens {
        if span.insert(g) {
            pending.push((*g).clone());
        }
    }
    while let Some(v) = pending.pop() {
        for g in &gens {
            let b = total.mul(&v, g);
            if span.insert(&b) {
                pending.push(b);
            }
        }
    }
    if span.rank() != total.dim() {
        return Ok(IdentityReport::failed(
            "lifts-generate",
            Witness {
                inputs: Vec::new(),
                left: SparseVec::single(0, Scalar::from_int(span.rank() as i64)),
                right: SparseVec::single(0, Scalar::from_int(total.dim() as i64)),
            },
        ));
    }
    Ok(IdentityReport::passed("steinberg"))
}
