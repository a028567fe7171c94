//! Polynomial identity checkers.
//!
//! Multilinear identities are checked on every basis tuple. The Jordan
//! identity has degree 3 in `x`; over the rationals it holds iff its full
//! linearization in `x` does, so that is what is checked exhaustively.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Associativity,
    Commutativity,
    Anticommutativity,
    Jacobi,
    /// Commutativity, the linearized Jordan identity on basis 4-tuples, the
    /// raw identity on basis pairs, and a random-vector spot check.
    Jordan,
    /// Only the full linearization of `(x²y)x = x²(yx)` in `x`.
    PowerLinearized,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Associativity => "associativity",
            Identity::Commutativity => "commutativity",
            Identity::Anticommutativity => "anticommutativity",
            Identity::Jacobi => "jacobi",
            Identity::Jordan => "jordan",
            Identity::PowerLinearized => "power-linearized",
        }
    }
}

/// A failing input tuple and the two sides of the identity on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<SparseVec>,
    pub left: SparseVec,
    pub right: SparseVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn passed(identity: &str) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            holds: true,
            witness: None,
        }
    }

    pub fn failed(identity: &str, witness: Witness) -> Self {
        debug_assert!(witness.left != witness.right);
        IdentityReport {
            identity: identity.to_string(),
            holds: false,
            witness: Some(witness),
        }
    }

    /// Runs `checks` in order and returns the first failure, if any.
    pub fn first_failure<I: IntoIterator<Item = IdentityReport>>(identity: &str, checks: I) -> Self {
        for r in checks {
            if !r.holds {
                return r;
            }
        }
        IdentityReport::passed(identity)
    }
}

fn basis(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

fn witness(inputs: &[usize], left: SparseVec, right: SparseVec) -> Witness {
    Witness {
        inputs: inputs.iter().map(|&i| basis(i)).collect(),
        left,
        right,
    }
}

pub fn check_identity(a: &Algebra, identity: Identity) -> IdentityReport {
    match identity {
        Identity::Associativity => associativity(a),
        Identity::Commutativity => commutativity(a),
        Identity::Anticommutativity => anticommutativity(a),
        Identity::Jacobi => jacobi(a),
        Identity::Jordan => jordan(a),
        Identity::PowerLinearized => jordan_linearized(a, "power-linearized"),
    }
}

fn associativity(a: &Algebra) -> IdentityReport {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_mul(i, j);
            for k in 0..n {
                let left = a.mul(ij, &basis(k));
                let right = a.mul(&basis(i), a.basis_mul(j, k));
                if left != right {
                    return IdentityReport::failed("associativity", witness(&[i, j, k], left, right));
                }
            }
        }
    }
    IdentityReport::passed("associativity")
}

fn commutativity_named(a: &Algebra, name: &str) -> IdentityReport {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            let (left, right) = (a.basis_mul(i, j), a.basis_mul(j, i));
            if left != right {
                return IdentityReport::failed(name, witness(&[i, j], left.clone(), right.clone()));
            }
        }
    }
    IdentityReport::passed(name)
}

fn commutativity(a: &Algebra) -> IdentityReport {
    commutativity_named(a, "commutativity")
}

fn anticommutativity(a: &Algebra) -> IdentityReport {
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let left = a.basis_mul(i, j).clone();
            let right = if i == j {
                SparseVec::new()
            } else {
                -a.basis_mul(j, i)
            };
            if left != right {
                return IdentityReport::failed("anticommutativity", witness(&[i, j], left, right));
            }
        }
    }
    IdentityReport::passed("anticommutativity")
}

fn jacobi_sum(a: &Algebra, i: usize, j: usize, k: usize) -> SparseVec {
    let mut s = a.mul(a.basis_mul(i, j), &basis(k));
    s.add_scaled(&Scalar::one(), &a.mul(a.basis_mul(j, k), &basis(i)));
    s.add_scaled(&Scalar::one(), &a.mul(a.basis_mul(k, i), &basis(j)));
    s
}

fn jacobi(a: &Algebra) -> IdentityReport {
    let n = a.dim();
    // With an alternating bracket the Jacobi sum is alternating too.
    let alternating = anticommutativity(a).holds;
    for i in 0..n {
        for j in 0..n {
            if alternating && j <= i {
                continue;
            }
            for k in 0..n {
                if alternating && k <= j {
                    continue;
                }
                let left = jacobi_sum(a, i, j, k);
                if !left.is_zero() {
                    return IdentityReport::failed(
                        "jacobi",
                        witness(&[i, j, k], left, SparseVec::new()),
                    );
                }
            }
        }
    }
    IdentityReport::passed("jacobi")
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// `Σ_σ ((x_σ1 x_σ2) y) x_σ3` and `Σ_σ (x_σ1 x_σ2)(y x_σ3)`.
fn jordan_linear_sides(a: &Algebra, xs: [&SparseVec; 3], y: &SparseVec) -> (SparseVec, SparseVec) {
    let mut left = SparseVec::new();
    let mut right = SparseVec::new();
    for p in PERMS3 {
        let xx = a.mul(xs[p[0]], xs[p[1]]);
        if xx.is_zero() {
            continue;
        }
        left.add_scaled(&Scalar::one(), &a.mul(&a.mul(&xx, y), xs[p[2]]));
        right.add_scaled(&Scalar::one(), &a.mul(&xx, &a.mul(y, xs[p[2]])));
    }
    (left, right)
}

fn jordan_linearized(a: &Algebra, name: &str) -> IdentityReport {
    let n = a.dim();
    let bs: Vec<SparseVec> = (0..n).map(basis).collect();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                for y in 0..n {
                    let (left, right) = jordan_linear_sides(a, [&bs[i], &bs[j], &bs[k]], &bs[y]);
                    if left != right {
                        return IdentityReport::failed(name, witness(&[i, j, k, y], left, right));
                    }
                }
            }
        }
    }
    IdentityReport::passed(name)
}

fn jordan_raw(a: &Algebra, x: &SparseVec, y: &SparseVec) -> Option<Witness> {
    let xx = a.mul(x, x);
    let left = a.mul(&a.mul(&xx, y), x);
    let right = a.mul(&xx, &a.mul(y, x));
    (left != right).then(|| Witness {
        inputs: alloc::vec![x.clone(), y.clone()],
        left,
        right,
    })
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> SparseVec {
    SparseVec::from_terms((0..n).map(|i| {
        let num = (rng.next_u32() % 11) as i64 - 5;
        let den = (rng.next_u32() % 4) as i64 + 1;
        (i, Scalar::new(num, den).unwrap())
    }))
}

const JORDAN_RANDOM_SAMPLES: usize = 8;

fn jordan(a: &Algebra) -> IdentityReport {
    let comm = commutativity_named(a, "jordan");
    if !comm.holds {
        return comm;
    }
    let lin = jordan_linearized(a, "jordan");
    if !lin.holds {
        return lin;
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            if let Some(w) = jordan_raw(a, &basis(i), &basis(j)) {
                return IdentityReport::failed("jordan", w);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a6f_7264_616e);
    for _ in 0..JORDAN_RANDOM_SAMPLES {
        let x = random_vector(&mut rng, n);
        let y = random_vector(&mut rng, n);
        if let Some(w) = jordan_raw(a, &x, &y) {
            return IdentityReport::failed("jordan", w);
        }
    }
    IdentityReport::passed("jordan")
}
