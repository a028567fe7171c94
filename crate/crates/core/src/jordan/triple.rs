use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{Algebra, IdentityReport, Kind, Witness};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, BasedSpace, SparseVec};
use crate::scalar::Scalar;

/// A trilinear product `{e_u, e_v, e_w} = Σ γ^t_uvw e_t`, symmetric in the
/// outer slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    name: String,
    space: BasedSpace,
    gamma: Vec<SparseVec>,
}

impl TripleSystem {
    /// `gamma` is indexed by `(u·n + v)·n + w`.
    pub fn new(name: &str, space: BasedSpace, gamma: Vec<SparseVec>) -> Result<Self> {
        let n = space.dim();
        if gamma.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: gamma.len(),
            });
        }
        for g in &gamma {
            space.check_vector(g)?;
        }
        let t = TripleSystem {
            name: name.to_string(),
            space,
            gamma,
        };
        let report = t.outer_symmetry();
        if !report.holds {
            return Err(Error::Validation {
                what: format!("triple system {name:?}"),
                report: Box::new(report),
            });
        }
        Ok(t)
    }

    /// Builds from sparse `(u, v, w, value)` entries; unlisted products are zero.
    pub fn from_entries<I>(name: &str, space: BasedSpace, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, SparseVec)>,
    {
        let n = space.dim();
        let mut gamma = alloc::vec![SparseVec::new(); n * n * n];
        for (u, v, w, val) in entries {
            for idx in [u, v, w] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            gamma[(u * n + v) * n + w] = val;
        }
        Self::new(name, space, gamma)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    #[inline]
    pub fn gamma(&self, u: usize, v: usize, w: usize) -> &SparseVec {
        let n = self.dim();
        &self.gamma[(u * n + v) * n + w]
    }

    /// Nonzero entries in `(u, v, w)` order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &SparseVec)> + '_ {
        let n = self.dim();
        self.gamma
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(move |(i, g)| (i / (n * n), i / n % n, i % n, g))
    }

    /// Trilinear extension of the table.
    pub fn product(&self, x: &SparseVec, y: &SparseVec, z: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (u, a) in x.iter() {
            for (v, b) in y.iter() {
                let ab = a * b;
                for (w, c) in z.iter() {
                    acc.add_scaled(&(&ab * c), self.gamma(u, v, w));
                }
            }
        }
        acc.finish()
    }

    /// `{e_u, y, e_w}` for a vector middle argument.
    fn middle(&self, u: usize, y: &SparseVec, w: usize) -> SparseVec {
        let mut acc = Accumulator::new();
        for (v, b) in y.iter() {
            acc.add_scaled(b, self.gamma(u, v, w));
        }
        acc.finish()
    }

    /// `{x, e_v, z}` for vector outer arguments.
    fn outer(&self, x: &SparseVec, v: usize, z: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (u, a) in x.iter() {
            for (w, c) in z.iter() {
                acc.add_scaled(&(a * c), self.gamma(u, v, w));
            }
        }
        acc.finish()
    }

    /// Copy with `delta` added to the coefficient of `e_t` in `{e_u,e_v,e_w}`
    /// and, to keep outer symmetry, in `{e_w,e_v,e_u}`.
    pub fn perturbed(&self, u: usize, v: usize, w: usize, t: usize, delta: &Scalar) -> Self {
        let n = self.dim();
        let mut gamma = self.gamma.clone();
        for idx in [(u * n + v) * n + w, (w * n + v) * n + u] {
            gamma[idx].add_scaled(delta, &SparseVec::unit(t));
            if u == w {
                break;
            }
        }
        TripleSystem {
            name: format!("{}~", self.name),
            space: self.space.clone(),
            gamma,
        }
    }

    fn outer_symmetry(&self) -> IdentityReport {
        let n = self.dim();
        for u in 0..n {
            for v in 0..n {
                for w in u + 1..n {
                    let (l, r) = (self.gamma(u, v, w), self.gamma(w, v, u));
                    if l != r {
                        return IdentityReport::failed(
                            "outer-symmetry",
                            Witness {
                                inputs: basis_inputs(&[u, v, w]),
                                left: l.clone(),
                                right: r.clone(),
                            },
                        );
                    }
                }
            }
        }
        IdentityReport::passed("outer-symmetry")
    }
}

fn basis_inputs(idx: &[usize]) -> Vec<SparseVec> {
    idx.iter().map(|&i| SparseVec::unit(i)).collect()
}

/// `{a,b,c} = (ab)c + a(bc) - b(ac)` on a Jordan algebra.
pub fn triple_from_jordan(j: &Algebra) -> Result<TripleSystem> {
    j.require_kind(Kind::Jordan)?;
    let n = j.dim();
    let mut gamma = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ea = SparseVec::unit(a);
                let ec = SparseVec::unit(c);
                let mut v = j.mul(j.basis_mul(a, b), &ec);
                v.add_scaled(&Scalar::one(), &j.mul(&ea, j.basis_mul(b, c)));
                v.add_scaled(&Scalar::from_int(-1), &j.mul(&SparseVec::unit(b), j.basis_mul(a, c)));
                gamma.push(v);
            }
        }
    }
    TripleSystem::new(&format!("T({})", j.name()), j.space().clone(), gamma)
}

/// `{a,b,c} = ½(abc + cba)` on an associative algebra.
pub fn triple_from_associative(a: &Algebra) -> Result<TripleSystem> {
    a.require_kind(Kind::Associative)?;
    let n = a.dim();
    let half = Scalar::half();
    let mut gamma = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut v = a.mul(a.basis_mul(x, y), &SparseVec::unit(z));
                v.add_scaled(&Scalar::one(), &a.mul(a.basis_mul(z, y), &SparseVec::unit(x)));
                gamma.push(v.scaled(&half));
            }
        }
    }
    TripleSystem::new(&format!("T({}+)", a.name()), a.space().clone(), gamma)
}

fn fail(name: &str, inputs: &[usize], left: SparseVec, right: SparseVec) -> IdentityReport {
    IdentityReport::failed(
        name,
        Witness {
            inputs: basis_inputs(inputs),
            left,
            right,
        },
    )
}

fn sum(parts: impl IntoIterator<Item = SparseVec>) -> SparseVec {
    let mut acc = SparseVec::new();
    for p in parts {
        acc.add_scaled(&Scalar::one(), &p);
    }
    acc
}

/// Full linearization of `{a,b,{a,c,a}} = {a,{b,a,c},a}`.
fn identity_one(t: &TripleSystem) -> IdentityReport {
    const NAME: &str = "jts-1";
    let n = t.dim();
    let e = |i: usize| SparseVec::unit(i);
    for a1 in 0..n {
        for a2 in a1..n {
            for a3 in a2..n {
                let a = [a1, a2, a3];
                for b in 0..n {
                    for c in 0..n {
                        // LHS: choose the outer a; the other two go inside.
                        let left = sum((0..3).map(|o| {
                            let (i1, i2) = others(o, &a);
                            let inner = t.gamma(i1, c, i2);
                            t.product(&e(a[o]), &e(b), inner)
                        }));
                        // RHS: choose the middle a; the other two go outside.
                        let right = sum((0..3).map(|m| {
                            let (x, y) = others(m, &a);
                            t.middle(x, t.gamma(b, a[m], c), y)
                        }));
                        if left != right {
                            return fail(NAME, &[a1, a2, a3, b, c], left, right);
                        }
                    }
                }
            }
        }
    }
    IdentityReport::passed(NAME)
}

fn others(k: usize, a: &[usize; 3]) -> (usize, usize) {
    match k {
        0 => (a[1], a[2]),
        1 => (a[0], a[2]),
        _ => (a[0], a[1]),
    }
}

/// Full linearization of `{{a,b,a},b,c} = {a,{b,a,b},c}`.
fn identity_two(t: &TripleSystem) -> IdentityReport {
    const NAME: &str = "jts-2";
    let n = t.dim();
    let e = |i: usize| SparseVec::unit(i);
    for a1 in 0..n {
        for a2 in a1..n {
            for b1 in 0..n {
                for b2 in b1..n {
                    for c in 0..n {
                        let left = &t.product(t.gamma(a1, b1, a2), &e(b2), &e(c))
                            + &t.product(t.gamma(a1, b2, a2), &e(b1), &e(c));
                        let right = &t.product(&e(a1), t.gamma(b1, a2, b2), &e(c))
                            + &t.product(&e(a2), t.gamma(b1, a1, b2), &e(c));
                        if left != right {
                            return fail(NAME, &[a1, a2, b1, b2, c], left, right);
                        }
                    }
                }
            }
        }
    }
    IdentityReport::passed(NAME)
}

/// Splittings of four slots into an ordered pair of unordered pairs.
const PAIRINGS: [([usize; 2], [usize; 2]); 6] = [
    ([0, 1], [2, 3]),
    ([2, 3], [0, 1]),
    ([0, 2], [1, 3]),
    ([1, 3], [0, 2]),
    ([0, 3], [1, 2]),
    ([1, 2], [0, 3]),
];

/// Full linearization of `{a,{b,{a,c,a},b},a} = {{a,b,a},c,{a,b,a}}`.
fn identity_three(t: &TripleSystem) -> IdentityReport {
    const NAME: &str = "jts-3";
    let n = t.dim();
    for a1 in 0..n {
        for a2 in a1..n {
            for a3 in a2..n {
                for a4 in a3..n {
                    let a = [a1, a2, a3, a4];
                    for b1 in 0..n {
                        for b2 in b1..n {
                            let sides: Vec<(&SparseVec, &SparseVec)> = PAIRINGS
                                .iter()
                                .map(|(p, q)| (t.gamma(a[p[0]], b1, a[p[1]]), t.gamma(a[q[0]], b2, a[q[1]])))
                                .collect();
                            for c in 0..n {
                                let mut left = SparseVec::new();
                                for (outer, inner) in PAIRINGS {
                                    let v = t.gamma(a[inner[0]], c, a[inner[1]]);
                                    if v.is_zero() {
                                        continue;
                                    }
                                    let w = t.middle(b1, v, b2);
                                    if w.is_zero() {
                                        continue;
                                    }
                                    left.add_scaled(&Scalar::one(), &t.middle(a[outer[0]], &w, a[outer[1]]));
                                }
                                let mut right = SparseVec::new();
                                for (p, q) in &sides {
                                    if !p.is_zero() && !q.is_zero() {
                                        right.add_scaled(&Scalar::one(), &t.outer(p, c, q));
                                    }
                                }
                                if left != right {
                                    return fail(NAME, &[a1, a2, a3, a4, b1, b2, c], left, right);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    IdentityReport::passed(NAME)
}

/// `{a,b,{c,d,e}} = {{a,b,c},d,e} - {c,{b,a,d},e} + {c,d,{a,b,e}}` on all
/// basis 5-tuples.
pub fn check_five_linear(t: &TripleSystem) -> IdentityReport {
    const NAME: &str = "jts-5-linear";
    let n = t.dim();
    let e = |i: usize| SparseVec::unit(i);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let abc = t.gamma(a, b, c);
                for d in 0..n {
                    let bad = t.gamma(b, a, d);
                    for x in 0..n {
                        let left = t.product(&e(a), &e(b), t.gamma(c, d, x));
                        let mut right = t.product(abc, &e(d), &e(x));
                        right.add_scaled(&Scalar::from_int(-1), &t.middle(c, bad, x));
                        right.add_scaled(&Scalar::one(), &t.product(&e(c), &e(d), t.gamma(a, b, x)));
                        if left != right {
                            return fail(NAME, &[a, b, c, d, x], left, right);
                        }
                    }
                }
            }
        }
    }
    IdentityReport::passed(NAME)
}

/// The three defining identities, each fully linearized, on basis tuples.
pub fn check_jts_axioms(t: &TripleSystem) -> IdentityReport {
    IdentityReport::first_failure(
        "jts",
        [identity_one as fn(&TripleSystem) -> IdentityReport, identity_two, identity_three]
            .into_iter()
            .map(|f| f(t)),
    )
}

/// Outer symmetry, the three defining identities, and the 5-linear identity.
pub fn check_jts(t: &TripleSystem) -> IdentityReport {
    let checks: [fn(&TripleSystem) -> IdentityReport; 3] =
        [TripleSystem::outer_symmetry, check_jts_axioms, check_five_linear];
    IdentityReport::first_failure("jts", checks.into_iter().map(|f| f(t)))
}
