use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::triple::{check_jts, TripleSystem};
use crate::algebra::{make_algebra, Algebra, IdentityReport, Kind, StructureTable, Witness};
use crate::error::{Error, Result};
use crate::linalg::{
    kernel_basis, quotient_space, Accumulator, BasedSpace, LinearMap, Matrix, Quotient, RowReducer, SpanSolver,
    SparseVec, Subspace,
};
use crate::scalar::Scalar;
use crate::uce::verify_lie_hom;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Presented by generators `x_u^±` and the TKK relations.
    Universal,
    /// Degree-zero part realized by operator pairs on `T`.
    Standard,
}

/// A 3-graded Lie algebra `K₋₁ ⊕ K₀ ⊕ K₁` built from a triple system.
///
/// Total basis layout: `x⁻_u` for `u < n`, then the `K₀` basis, then `x⁺_u`.
/// Each `K₀` basis vector is the class of a pure tensor `e_a ⊗ e_b`, i.e.
/// `t(a,b) = [x⁺_a, x⁻_b]`.
#[derive(Clone, Debug)]
pub struct GradedLie {
    flavor: Flavor,
    triple: TripleSystem,
    algebra: Algebra,
    zero: Quotient,
}

#[derive(Clone, Debug, Default)]
pub struct TkkOptions {
    /// Seed the relation space with random combinations before the full
    /// enumeration (which always runs).
    pub fast: bool,
}

impl GradedLie {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn triple(&self) -> &TripleSystem {
        &self.triple
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `[dim K₋₁, dim K₀, dim K₁]`.
    pub fn dims(&self) -> [usize; 3] {
        let n = self.triple.dim();
        [n, self.zero.dim(), n]
    }

    /// The relation subspace of `T ⊗ T` that `K₀` is the quotient by.
    pub fn relations(&self) -> &Subspace {
        self.zero.sub()
    }

    /// `t: T ⊗ T → K₀`, with `a ⊗ b` at index `a·n + b`.
    pub fn t_map(&self) -> LinearMap {
        self.zero.proj_map()
    }

    pub fn t_section(&self) -> LinearMap {
        self.zero.section_map()
    }

    pub fn minus(&self, v: &SparseVec) -> SparseVec {
        v.clone()
    }

    pub fn plus(&self, v: &SparseVec) -> SparseVec {
        let shift = self.triple.dim() + self.zero.dim();
        v.remap(|i| i + shift)
    }

    /// `t(x)` for `x ∈ T ⊗ T`, in total coordinates.
    pub fn t(&self, x: &SparseVec) -> SparseVec {
        let shift = self.triple.dim();
        self.zero.project(x).remap(|i| i + shift)
    }

    /// The pure tensor `(a, b)` representing `K₀` basis vector `k`.
    pub fn zero_rep(&self, k: usize) -> (usize, usize) {
        let n = self.triple.dim();
        let r = self.zero.representative(k);
        (r / n, r % n)
    }

    /// Degree (-1, 0, 1) of a total basis index.
    pub fn degree(&self, idx: usize) -> i32 {
        let [m, z, _] = self.dims();
        if idx < m {
            -1
        } else if idx < m + z {
            0
        } else {
            1
        }
    }
}

fn tensor(n: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut acc = Accumulator::new();
    for (a, p) in x.iter() {
        for (b, q) in y.iter() {
            acc.add(a * n + b, &(p * q));
        }
    }
    acc.finish()
}

/// `β(a⊗b, c⊗d) = {a,b,c}⊗d − c⊗{b,a,d}` on basis tensors.
fn beta_basis(t: &TripleSystem, i: usize, j: usize) -> SparseVec {
    let n = t.dim();
    let (a, b, c, d) = (i / n, i % n, j / n, j % n);
    let mut v = tensor(n, t.gamma(a, b, c), &SparseVec::unit(d));
    v.add_scaled(&Scalar::from_int(-1), &tensor(n, &SparseVec::unit(c), t.gamma(b, a, d)));
    v
}

fn beta(t: &TripleSystem, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut acc = Accumulator::new();
    for (i, p) in x.iter() {
        for (j, q) in y.iter() {
            acc.add_scaled(&(p * q), &beta_basis(t, i, j));
        }
    }
    acc.finish()
}

/// `a⊗b ↦ (L(a,b), −L(b,a))` flattened: block `s`, row, column at
/// `s·n² + row·n + col`, where `L(a,b)c = {a,b,c}`.
fn operator_pair_map(t: &TripleSystem) -> LinearMap {
    let n = t.dim();
    let columns = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            let mut acc = Accumulator::new();
            for c in 0..n {
                for (row, v) in t.gamma(a, b, c).iter() {
                    acc.add(row * n + c, v);
                }
                for (row, v) in t.gamma(b, a, c).iter() {
                    acc.add(n * n + row * n + c, &-v);
                }
            }
            acc.finish()
        })
        .collect();
    LinearMap::from_columns(n * n, 2 * n * n, columns).expect("operator pair shape")
}

fn tensor_space(t: &TripleSystem) -> BasedSpace {
    let n = t.dim();
    let mut labels = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            labels.push(format!("t({},{})", t.space().label(a), t.space().label(b)));
        }
    }
    BasedSpace::new(labels).expect("distinct tensor labels")
}

fn require_jts(t: &TripleSystem) -> Result<()> {
    let report = check_jts(t);
    if !report.holds {
        return Err(Error::Validation {
            what: format!("triple system {:?}", t.name()),
            report: alloc::boxed::Box::new(report),
        });
    }
    Ok(())
}

/// Closes `w` under two-sided `β`, processing each new basis vector once.
fn close_under_beta(t: &TripleSystem, w: &mut RowReducer, mut pending: Vec<SparseVec>) {
    let nn = w.ncols();
    while let Some(v) = pending.pop() {
        for j in 0..nn {
            let e = SparseVec::unit(j);
            for x in [beta(t, &v, &e), beta(t, &e, &v)] {
                if !x.is_zero() && w.insert(&x) {
                    pending.push(x);
                }
            }
        }
    }
}

/// Relation space `W ⊆ T ⊗ T` of the presented algebra.
fn universal_relations(t: &TripleSystem, opts: &TkkOptions) -> Subspace {
    let nn = t.dim() * t.dim();
    let mut w = RowReducer::new(nn);
    let mut pending = Vec::new();
    if opts.fast {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0074_6b6b);
        for _ in 0..nn {
            let i = rng.next_u32() as usize % nn;
            let j = rng.next_u32() as usize % nn;
            let x = &beta_basis(t, i, j) + &beta_basis(t, j, i);
            if w.insert(&x) {
                pending.push(x);
            }
        }
    }
    for i in 0..nn {
        for j in i..nn {
            let x = &beta_basis(t, i, j) + &beta_basis(t, j, i);
            if !x.is_zero() && w.insert(&x) {
                pending.push(x);
            }
        }
    }
    close_under_beta(t, &mut w, pending);
    // Jacobi defects, evaluated on quotient representatives until stable.
    loop {
        let reps: Vec<usize> = (0..nn).filter(|&c| !w.is_pivot(c)).collect();
        let mut added = Vec::new();
        for (x, &i) in reps.iter().enumerate() {
            for (y, &j) in reps.iter().enumerate().skip(x + 1) {
                let ij = beta_basis(t, i, j);
                for &k in &reps[y + 1..] {
                    let (ei, ej, ek) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let mut jac = beta(t, &ij, &ek);
                    jac.add_scaled(&Scalar::one(), &beta(t, &beta_basis(t, j, k), &ei));
                    jac.add_scaled(&Scalar::one(), &beta(t, &beta_basis(t, k, i), &ej));
                    if !jac.is_zero() && w.insert(&jac) {
                        added.push(jac);
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        close_under_beta(t, &mut w, added);
    }
    Subspace::from_reducer(w)
}

/// Assembles the bracket table given `K₀` and its `[K₀, K₀]` products.
fn assemble(
    flavor: Flavor,
    t: &TripleSystem,
    zero: Quotient,
    zero_bracket: impl Fn(usize, usize) -> SparseVec,
) -> Result<GradedLie> {
    let n = t.dim();
    let d0 = zero.dim();
    let dim = 2 * n + d0;
    let (mo, zo, po) = (0, n, n + d0);
    let mut labels: Vec<String> = (0..n).map(|u| format!("x-({})", t.space().label(u))).collect();
    for k in 0..d0 {
        let r = zero.representative(k);
        labels.push(format!("t({},{})", t.space().label(r / n), t.space().label(r % n)));
    }
    labels.extend((0..n).map(|u| format!("x+({})", t.space().label(u))));
    let mut table = StructureTable::new(dim);
    let mut set = |i: usize, j: usize, v: SparseVec| {
        table.set(j, i, -&v);
        table.set(i, j, v);
    };
    for a in 0..n {
        for b in 0..n {
            let tv = zero.project(&SparseVec::unit(a * n + b)).remap(|k| k + zo);
            set(po + a, mo + b, tv);
        }
    }
    for k in 0..d0 {
        let r = zero.representative(k);
        let (a, b) = (r / n, r % n);
        for c in 0..n {
            set(zo + k, po + c, t.gamma(a, b, c).remap(|u| u + po));
            set(zo + k, mo + c, (-t.gamma(b, a, c)).remap(|u| u + mo));
        }
        for l in k + 1..d0 {
            set(zo + k, zo + l, zero_bracket(k, l).remap(|u| u + zo));
        }
    }
    let name = match flavor {
        Flavor::Universal => format!("K({})", t.name()),
        Flavor::Standard => format!("Kstd({})", t.name()),
    };
    let algebra = make_algebra(&name, BasedSpace::new(labels)?, table, Kind::Lie, None)
        .map_err(|e| Error::Internal(format!("{name}: {e}")))?;
    let g = GradedLie {
        flavor,
        triple: t.clone(),
        algebra,
        zero,
    };
    let report = check_graded(&g);
    if !report.holds {
        return Err(Error::Internal(format!("{name}: {} failed", report.identity)));
    }
    Ok(g)
}

/// The presented (universal) TKK algebra `K(T)`.
pub fn universal_tkk(t: &TripleSystem) -> Result<GradedLie> {
    universal_tkk_with(t, &TkkOptions::default())
}

pub fn universal_tkk_with(t: &TripleSystem, opts: &TkkOptions) -> Result<GradedLie> {
    require_jts(t)?;
    let w = universal_relations(t, opts);
    let z = kernel_basis(&operator_pair_map(t));
    if !w.is_subspace_of(&z) {
        return Err(Error::Internal(
            "relation space is not annihilated by the operator-pair map".into(),
        ));
    }
    let zero = quotient_space(&tensor_space(t), &w)?;
    let bracket = |k: usize, l: usize| {
        let (i, j) = (zero.representative(k), zero.representative(l));
        zero.project(&beta_basis(t, i, j))
    };
    assemble(Flavor::Universal, t, zero.clone(), bracket)
}

fn operator_block(flat: &SparseVec, n: usize, s: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (idx, c) in flat.iter() {
        if idx / (n * n) == s {
            let r = idx % (n * n);
            m.set(r / n, r % n, c.clone());
        }
    }
    m
}

fn flatten(blocks: [&Matrix; 2], n: usize) -> SparseVec {
    let mut terms = Vec::new();
    for (s, m) in blocks.iter().enumerate() {
        for r in 0..n {
            for c in 0..n {
                let v = m.get(r, c);
                if !v.is_zero() {
                    terms.push((s * n * n + r * n + c, v.clone()));
                }
            }
        }
    }
    SparseVec::from_terms(terms)
}

fn commutator(x: &Matrix, y: &Matrix) -> Matrix {
    let xy = x.mul(y).expect("square");
    let yx = y.mul(x).expect("square");
    let n = x.nrows();
    let mut out = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, xy.get(r, c) - yx.get(r, c));
        }
    }
    out
}

/// The operator realization: `K₀` is the image of `a⊗b ↦ (L(a,b), −L(b,a))`.
///
/// `[K₀, K₀]` is computed from operator commutators and cross-checked
/// against the tensor formula.
pub fn standard_tkk(t: &TripleSystem) -> Result<GradedLie> {
    require_jts(t)?;
    let n = t.dim();
    let rho = operator_pair_map(t);
    let z = kernel_basis(&rho);
    let zero = quotient_space(&tensor_space(t), &z)?;
    let images: Vec<SparseVec> = zero.representatives().iter().map(|&r| rho.column(r).clone()).collect();
    let solver = SpanSolver::new(2 * n * n, &images);
    let blocks: Vec<[Matrix; 2]> = images
        .iter()
        .map(|f| [operator_block(f, n, 0), operator_block(f, n, 1)])
        .collect();
    let d0 = zero.dim();
    let mut brackets = alloc::vec![SparseVec::new(); d0 * d0];
    for k in 0..d0 {
        for l in k + 1..d0 {
            let c0 = commutator(&blocks[k][0], &blocks[l][0]);
            let c1 = commutator(&blocks[k][1], &blocks[l][1]);
            let coords = solver.solve(&flatten([&c0, &c1], n)).ok_or_else(|| {
                Error::Internal(format!("operator commutator {k},{l} leaves the image"))
            })?;
            let via_tensor = zero.project(&beta_basis(t, zero.representative(k), zero.representative(l)));
            if coords != via_tensor {
                return Err(Error::Internal(format!(
                    "operator and tensor brackets disagree on K0 pair {k},{l}"
                )));
            }
            brackets[k * d0 + l] = coords;
        }
    }
    assemble(Flavor::Standard, t, zero, |k, l| brackets[k * d0 + l].clone())
}

/// Relations (K1), (K2) and the grading, on all basis tuples.
pub fn check_graded(g: &GradedLie) -> IdentityReport {
    let alg = g.algebra();
    let t = g.triple();
    let n = t.dim();
    let dim = alg.dim();
    let fail = |name: &str, inputs: Vec<SparseVec>, left: SparseVec, right: SparseVec| {
        IdentityReport::failed(name, Witness { inputs, left, right })
    };
    for i in 0..dim {
        for j in 0..dim {
            let v = alg.basis_mul(i, j);
            let deg = g.degree(i) + g.degree(j);
            if let Some((k, _)) = v.iter().find(|&(k, _)| deg.abs() > 1 || g.degree(k) != deg) {
                let (x, y) = (SparseVec::unit(i), SparseVec::unit(j));
                return fail("grading", alloc::vec![x, y, SparseVec::unit(k)], v.clone(), SparseVec::new());
            }
        }
    }
    for u in 0..n {
        let xu = SparseVec::unit(u);
        for v in 0..n {
            let xv = SparseVec::unit(v);
            let t_uv = alg.mul(&g.plus(&xu), &g.minus(&xv));
            for w in 0..n {
                let xw = SparseVec::unit(w);
                let left = alg.mul(&t_uv, &g.plus(&xw));
                let right = g.plus(t.gamma(u, v, w));
                if left != right {
                    return fail("K2+", alloc::vec![xu, xv, xw], left, right);
                }
                // (K2) for σ = −: [[x⁻_u, x⁺_v], x⁻_w] = x⁻{u,v,w}.
                let t_vu = alg.mul(&g.plus(&xv), &g.minus(&xu));
                let left = alg.mul(&-&t_vu, &g.minus(&xw));
                let right = g.minus(t.gamma(u, v, w));
                if left != right {
                    return fail("K2-", alloc::vec![xu, xv, xw], left, right);
                }
            }
        }
    }
    IdentityReport::passed("tkk-relations")
}

/// Universal → standard, identity on `K±₁`, with its kernel.
#[derive(Clone, Debug)]
pub struct Surjection {
    pub map: LinearMap,
    pub kernel: Subspace,
    pub hom: IdentityReport,
    pub central: bool,
}

pub fn canonical_surjection(universal: &GradedLie, standard: &GradedLie) -> Result<Surjection> {
    if universal.triple() != standard.triple()
        || universal.flavor() != Flavor::Universal
        || standard.flavor() != Flavor::Standard
    {
        return Err(Error::InvalidArgument(
            "expected universal and standard TKK of the same triple system".into(),
        ));
    }
    let n = universal.triple().dim();
    let [_, d0, _] = universal.dims();
    let mut columns = Vec::with_capacity(universal.dim());
    for u in 0..n {
        columns.push(standard.minus(&SparseVec::unit(u)));
    }
    for k in 0..d0 {
        let (a, b) = universal.zero_rep(k);
        columns.push(standard.t(&SparseVec::unit(a * n + b)));
    }
    for u in 0..n {
        columns.push(standard.plus(&SparseVec::unit(u)));
    }
    let map = LinearMap::from_columns(universal.dim(), standard.dim(), columns)?;
    let hom = verify_lie_hom(&map, universal.algebra(), standard.algebra())?;
    let kernel = kernel_basis(&map);
    let alg = universal.algebra();
    let central = kernel
        .basis()
        .iter()
        .all(|z| (0..alg.dim()).all(|i| alg.mul(z, &SparseVec::unit(i)).is_zero()));
    Ok(Surjection {
        map,
        kernel,
        hom,
        central,
    })
}

/// Checks `φ{e_u,e_v,e_w} = {φe_u, φe_v, φe_w}` on all basis triples.
pub fn check_triple_hom(phi: &LinearMap, t1: &TripleSystem, t2: &TripleSystem) -> Result<IdentityReport> {
    let n = t1.dim();
    if phi.source_dim() != n || phi.target_dim() != t2.dim() {
        return Err(Error::DimensionMismatch {
            expected: n * t2.dim(),
            found: phi.source_dim() * phi.target_dim(),
        });
    }
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let left = phi.apply(t1.gamma(u, v, w));
                let right = t2.product(phi.column(u), phi.column(v), phi.column(w));
                if left != right {
                    return Ok(IdentityReport::failed(
                        "triple-hom",
                        Witness {
                            inputs: alloc::vec![SparseVec::unit(u), SparseVec::unit(v), SparseVec::unit(w)],
                            left,
                            right,
                        },
                    ));
                }
            }
        }
    }
    Ok(IdentityReport::passed("triple-hom"))
}

/// `K(φ)`: `x^±_u ↦ x^±_{φu}`, `t(a⊗b) ↦ t(φa ⊗ φb)`.
pub fn tkk_functor_map(phi: &LinearMap, k1: &GradedLie, k2: &GradedLie) -> Result<LinearMap> {
    let (t1, t2) = (k1.triple(), k2.triple());
    let report = check_triple_hom(phi, t1, t2)?;
    if !report.holds {
        return Err(Error::NotTripleHomomorphism {
            report: alloc::boxed::Box::new(report),
        });
    }
    let (n1, n2) = (t1.dim(), t2.dim());
    let [_, d0, _] = k1.dims();
    let mut columns = Vec::with_capacity(k1.dim());
    for u in 0..n1 {
        columns.push(k2.minus(phi.column(u)));
    }
    for k in 0..d0 {
        let (a, b) = k1.zero_rep(k);
        columns.push(k2.t(&tensor(n2, phi.column(a), phi.column(b))));
    }
    for u in 0..n1 {
        columns.push(k2.plus(phi.column(u)));
    }
    let map = LinearMap::from_columns(k1.dim(), k2.dim(), columns)?;
    let hom = verify_lie_hom(&map, k1.algebra(), k2.algebra())?;
    if !hom.holds {
        return Err(Error::Internal(format!(
            "induced map {} -> {} is not a Lie homomorphism",
            k1.algebra().name(),
            k2.algebra().name()
        )));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_sum, matrix_algebra, plus_algebra, scalar_field, sl_n, truncated_free};
    use crate::jordan::{triple_from_associative, triple_from_jordan};

    fn triple(a: &Algebra) -> TripleSystem {
        triple_from_associative(a).unwrap()
    }

    #[test]
    fn scalar_tkk_is_sl2() {
        let t = triple(&scalar_field());
        let u = universal_tkk(&t).unwrap();
        let s = standard_tkk(&t).unwrap();
        assert_eq!(u.dims(), [1, 1, 1]);
        assert_eq!(s.dim(), 3);
        // Base change to sl2: x+ ↦ e12, x- ↦ ½e21, t(1,1) ↦ ½h.
        let sl2 = sl_n(&scalar_field(), 2).unwrap();
        let g = sl2.algebra();
        let half = |l: &str| SparseVec::single(g.space().index_of(l).unwrap(), Scalar::half());
        let e12 = SparseVec::unit(g.space().index_of("e12(1)").unwrap());
        let f = LinearMap::from_columns(3, 3, alloc::vec![half("e21(1)"), half("e11(1)-e22(1)"), e12]).unwrap();
        assert!(verify_lie_hom(&f, u.algebra(), g).unwrap().holds);
        assert!(f.is_injective());
    }

    #[test]
    fn m2_plus_tkk_has_dim_15() {
        let m2 = matrix_algebra(&scalar_field(), 2).unwrap();
        let t = triple_from_jordan(&plus_algebra(&m2).unwrap()).unwrap();
        let s = standard_tkk(&t).unwrap();
        assert_eq!(s.dim(), 15);
        assert_eq!(s.dim(), sl_n(&scalar_field(), 4).unwrap().algebra().dim());
        let u = universal_tkk(&t).unwrap();
        assert_eq!(u.dim(), 15);
    }

    #[test]
    fn universal_surjects_onto_standard_with_central_kernel() {
        let a = truncated_free(&["x", "y"], 2, &[]).unwrap();
        let t = triple(&a);
        let u = universal_tkk(&t).unwrap();
        let s = standard_tkk(&t).unwrap();
        assert!(u.dim() >= s.dim());
        let surj = canonical_surjection(&u, &s).unwrap();
        assert!(surj.hom.holds);
        assert!(surj.central);
        assert!(surj.map.is_surjective());
        assert_eq!(surj.kernel.dim(), u.dims()[1] - s.dims()[1]);
    }

    #[test]
    fn fast_mode_gives_same_relations() {
        let t = triple(&truncated_free(&["x"], 2, &[]).unwrap());
        let a = universal_tkk(&t).unwrap();
        let b = universal_tkk_with(&t, &TkkOptions { fast: true }).unwrap();
        assert!(a.relations().same_as(b.relations()));
        assert_eq!(a.algebra().table(), b.algebra().table());
    }

    #[test]
    fn functor_identity_zero_and_composition() {
        let k = scalar_field();
        let kk = direct_sum(&k, &k).unwrap();
        let m2 = matrix_algebra(&k, 2).unwrap();
        let (t1, t2, t3) = (triple(&k), triple(&kk), triple(&m2));
        let (k1, k2, k3) = (
            universal_tkk(&t1).unwrap(),
            universal_tkk(&t2).unwrap(),
            universal_tkk(&t3).unwrap(),
        );
        let id = tkk_functor_map(&LinearMap::identity(2), &k2, &k2).unwrap();
        assert_eq!(id, LinearMap::identity(k2.dim()));

        let zero = tkk_functor_map(&LinearMap::zero(2, 4), &k2, &k3).unwrap();
        assert_eq!(zero, LinearMap::zero(k2.dim(), k3.dim()));

        // ψ: k → k⊕k diagonal, φ: k⊕k → M2(k) onto the diagonal matrices.
        let psi = LinearMap::from_columns(1, 2, alloc::vec![SparseVec::from_terms([(0, Scalar::one()), (1, Scalar::one())])])
            .unwrap();
        let e = |l: &str| SparseVec::unit(m2.space().index_of(l).unwrap());
        let phi = LinearMap::from_columns(2, 4, alloc::vec![e("e11(1)"), e("e22(1)")]).unwrap();
        let k_psi = tkk_functor_map(&psi, &k1, &k2).unwrap();
        let k_phi = tkk_functor_map(&phi, &k2, &k3).unwrap();
        let k_comp = tkk_functor_map(&phi.compose(&psi).unwrap(), &k1, &k3).unwrap();
        assert_eq!(k_comp.to_matrix(), k_phi.compose(&k_psi).unwrap().to_matrix());
    }

    #[test]
    fn non_homomorphism_rejected() {
        let k = scalar_field();
        let t = triple(&k);
        let kt = universal_tkk(&t).unwrap();
        let two = LinearMap::from_columns(1, 1, alloc::vec![SparseVec::single(0, Scalar::from_int(2))]).unwrap();
        assert!(matches!(
            tkk_functor_map(&two, &kt, &kt),
            Err(Error::NotTripleHomomorphism { .. })
        ));
    }
}
