//! Single-coefficient perturbations of validated tables. Each fixture is
//! confirmed broken by a random-vector evaluation of the unlinearized
//! identity before the checker is asked about it.

use tkk_core::algebra::{
    make_algebra, matrix_algebra, plus_algebra, scalar_field, sl_n, Algebra, IdentityReport, Kind, StructureTable,
};
use tkk_core::corpus::builtin;
use tkk_core::jordan::{check_jts, triple_from_associative, TripleSystem};
use tkk_core::linalg::SparseVec;
use tkk_core::{Error, Scalar};

struct Lcg(u64);

impl Lcg {
    fn vector(&mut self, dim: usize) -> SparseVec {
        SparseVec::from_terms((0..dim).map(|i| {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (i, Scalar::from_int(((self.0 >> 33) % 7) as i64 - 3))
        }))
    }
}

fn mul(t: &StructureTable, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            out.add_scaled(&(a * b), t.get(i, j));
        }
    }
    out
}

fn jacobi_broken(t: &StructureTable) -> bool {
    let mut rng = Lcg(7);
    (0..40).any(|_| {
        let (x, y, z) = (rng.vector(t.dim()), rng.vector(t.dim()), rng.vector(t.dim()));
        let anti = &mul(t, &x, &y) + &mul(t, &y, &x);
        let jac = &(&mul(t, &x, &mul(t, &y, &z)) + &mul(t, &y, &mul(t, &z, &x))) + &mul(t, &z, &mul(t, &x, &y));
        !anti.is_zero() || !jac.is_zero()
    })
}

fn jordan_broken(t: &StructureTable) -> bool {
    let mut rng = Lcg(11);
    (0..40).any(|_| {
        let (x, y) = (rng.vector(t.dim()), rng.vector(t.dim()));
        let x2 = mul(t, &x, &x);
        mul(t, &x, &y) != mul(t, &y, &x) || mul(t, &mul(t, &x2, &y), &x) != mul(t, &x2, &mul(t, &y, &x))
    })
}

fn tp(t: &TripleSystem, a: &SparseVec, b: &SparseVec, c: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            for (w, z) in c.iter() {
                out.add_scaled(&(&(x * y) * z), t.gamma(u, v, w));
            }
        }
    }
    out
}

fn jts_broken(t: &TripleSystem) -> bool {
    let mut rng = Lcg(13);
    (0..40).any(|_| {
        let (a, b, c) = (rng.vector(t.dim()), rng.vector(t.dim()), rng.vector(t.dim()));
        let aca = tp(t, &a, &c, &a);
        let aba = tp(t, &a, &b, &a);
        let bab = tp(t, &b, &a, &b);
        let one = tp(t, &a, &b, &aca) != tp(t, &a, &tp(t, &b, &a, &c), &a);
        let two = tp(t, &aba, &b, &c) != tp(t, &a, &bab, &c);
        let three = tp(t, &a, &tp(t, &b, &aca, &b), &a) != tp(t, &aba, &c, &aba);
        one || two || three
    })
}

fn assert_witnessed(report: &IdentityReport) {
    assert!(!report.holds);
    let w = report.witness.as_ref().expect("failure without witness");
    assert_ne!(w.left, w.right);
}

fn expect_rejected(a: &Algebra, table: StructureTable, kind: Kind) {
    match make_algebra("perturbed", a.space().clone(), table, kind, None) {
        Err(Error::Validation { report, .. }) => assert_witnessed(&report),
        other => panic!("perturbed {} table accepted: {:?}", a.name(), other.map(|x| x.dim())),
    }
}

#[test]
fn sl2_bracket_perturbed() {
    let sl = sl_n(&scalar_field(), 2).unwrap();
    let g = sl.algebra();
    // Keep antisymmetry so only Jacobi can catch it.
    let d = Scalar::from_int(1);
    let t = g.table().perturbed(0, 2, 0, &d).perturbed(2, 0, 0, &-&d);
    assert!(jacobi_broken(&t));
    expect_rejected(g, t, Kind::Lie);
}

#[test]
fn sl3_bracket_perturbed() {
    let sl = sl_n(&scalar_field(), 3).unwrap();
    let g = sl.algebra();
    let d = Scalar::new(1, 2).unwrap();
    let t = g.table().perturbed(0, 1, 7, &d).perturbed(1, 0, 7, &-&d);
    assert!(jacobi_broken(&t));
    expect_rejected(g, t, Kind::Lie);
}

#[test]
fn m2_plus_perturbed() {
    let p = plus_algebra(&matrix_algebra(&scalar_field(), 2).unwrap()).unwrap();
    let d = Scalar::from_int(2);
    let t = p.table().perturbed(1, 2, 1, &d).perturbed(2, 1, 1, &d);
    assert!(jordan_broken(&t));
    expect_rejected(&p, t, Kind::Jordan);
}

#[test]
fn grassmann_plus_perturbed() {
    let p = plus_algebra(&builtin("grassmann2").unwrap()).unwrap();
    let d = Scalar::from_int(1);
    let t = p.table().perturbed(1, 2, 1, &d).perturbed(2, 1, 1, &d);
    assert!(jordan_broken(&t));
    expect_rejected(&p, t, Kind::Jordan);
}

#[test]
fn m2_tagged_jordan() {
    let m = matrix_algebra(&scalar_field(), 2).unwrap();
    let t = m.table().clone();
    assert!(jordan_broken(&t));
    expect_rejected(&m, t, Kind::Jordan);
}

#[test]
fn m2_triple_perturbed() {
    let t = triple_from_associative(&matrix_algebra(&scalar_field(), 2).unwrap()).unwrap();
    let bad = t.perturbed(0, 1, 2, 3, &Scalar::from_int(1));
    assert!(jts_broken(&bad));
    assert_witnessed(&check_jts(&bad));
}

#[test]
fn grassmann_triple_perturbed() {
    let t = triple_from_associative(&builtin("grassmann2").unwrap()).unwrap();
    let bad = t.perturbed(1, 0, 1, 3, &Scalar::from_int(-1));
    assert!(jts_broken(&bad));
    assert_witnessed(&check_jts(&bad));
}

#[test]
fn unperturbed_fixtures_pass_the_oracles() {
    let sl = sl_n(&scalar_field(), 3).unwrap();
    assert!(!jacobi_broken(sl.algebra().table()));
    let p = plus_algebra(&matrix_algebra(&scalar_field(), 2).unwrap()).unwrap();
    assert!(!jordan_broken(p.table()));
    let t = triple_from_associative(&builtin("grassmann2").unwrap()).unwrap();
    assert!(!jts_broken(&t));
    assert!(check_jts(&t).holds);
}
#[test]
fn jordan_checker_agrees_with_oracle_on_all_symmetric_perturbations() {
    // Plenty of these stay Jordan (e.g. e1∘e2 = 1 gives a spin factor).
    for name in ["grassmann2", "dual", "double"] {
        let p = plus_algebra(&builtin(name).unwrap()).unwrap();
        let n = p.dim();
        let d = Scalar::from_int(1);
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let mut t = p.table().perturbed(i, j, k, &d);
                    if i != j {
                        t = t.perturbed(j, i, k, &d);
                    }
                    let broken = jordan_broken(&t);
                    let accepted = make_algebra("p", p.space().clone(), t, Kind::Jordan, None).is_ok();
                    assert_eq!(broken, !accepted, "{name} ({i},{j},{k})");
                }
            }
        }
    }
}

#[test]
fn jts_checker_agrees_with_oracle_on_all_perturbations() {
    for name in ["dual", "grassmann2"] {
        let t = triple_from_associative(&builtin(name).unwrap()).unwrap();
        let n = t.dim();
        for u in 0..n {
            for v in 0..n {
                for w in u..n {
                    for s in 0..n {
                        let bad = t.perturbed(u, v, w, s, &Scalar::from_int(1));
                        assert_eq!(jts_broken(&bad), !check_jts(&bad).holds, "{name} ({u},{v},{w};{s})");
                    }
                }
            }
        }
    }
}
