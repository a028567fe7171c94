use tkk_core::corpus::builtin;
use tkk_core::jordan::{standard_tkk, tkk_functor_map, triple_from_associative, universal_tkk, GradedLie};
use tkk_core::linalg::{LinearMap, SparseVec};
use tkk_core::uce::verify_lie_hom;
use tkk_core::{Error, Scalar};

fn tkk(name: &str) -> GradedLie {
    universal_tkk(&triple_from_associative(&builtin(name).unwrap()).unwrap()).unwrap()
}

fn map(src: usize, dst: usize, cols: &[&[(usize, i64)]]) -> LinearMap {
    let columns = cols
        .iter()
        .map(|c| SparseVec::from_terms(c.iter().map(|&(i, v)| (i, Scalar::from_int(v)))))
        .collect();
    LinearMap::from_columns(src, dst, columns).unwrap()
}

/// `e1 ↔ e2`, `e1e2 ↦ −e1e2`, located by label.
fn grassmann_swap() -> LinearMap {
    let a = builtin("grassmann2").unwrap();
    let idx = |l: &str| a.space().index_of(l).unwrap();
    let mut cols = vec![SparseVec::new(); 4];
    cols[idx("1")] = SparseVec::unit(idx("1"));
    cols[idx("e1")] = SparseVec::unit(idx("e2"));
    cols[idx("e2")] = SparseVec::unit(idx("e1"));
    cols[idx("e1e2")] = SparseVec::single(idx("e1e2"), Scalar::from_int(-1));
    LinearMap::from_columns(4, 4, cols).unwrap()
}

#[test]
fn identity_goes_to_identity() {
    for name in ["scalar", "dual", "grassmann2", "mat2"] {
        let k = tkk(name);
        let n = k.triple().dim();
        let id = tkk_functor_map(&LinearMap::identity(n), &k, &k).unwrap();
        assert_eq!(id.to_matrix(), LinearMap::identity(k.dim()).to_matrix(), "{name}");
    }
}

#[test]
fn augmentation_then_diagonal() {
    let (kd, kk, k2) = (tkk("dual"), tkk("scalar"), tkk("double"));
    // dual basis (1, x); double basis (e, f) with 1 = e + f.
    let aug = map(2, 1, &[&[(0, 1)], &[]]);
    let diag = map(1, 2, &[&[(0, 1), (1, 1)]]);
    let both = diag.compose(&aug).unwrap();
    let f = tkk_functor_map(&aug, &kd, &kk).unwrap();
    let g = tkk_functor_map(&diag, &kk, &k2).unwrap();
    let gf = tkk_functor_map(&both, &kd, &k2).unwrap();
    assert_eq!(gf.to_matrix(), g.compose(&f).unwrap().to_matrix());
    assert!(verify_lie_hom(&gf, kd.algebra(), k2.algebra()).unwrap().holds);
}

#[test]
fn grassmann_swap_is_an_involution() {
    let k = tkk("grassmann2");
    let s = grassmann_swap();
    let ks = tkk_functor_map(&s, &k, &k).unwrap();
    assert_ne!(ks.to_matrix(), LinearMap::identity(k.dim()).to_matrix());
    let twice = tkk_functor_map(&s.compose(&s).unwrap(), &k, &k).unwrap();
    assert_eq!(twice.to_matrix(), ks.compose(&ks).unwrap().to_matrix());
    assert_eq!(twice.to_matrix(), LinearMap::identity(k.dim()).to_matrix());
}

#[test]
fn standard_flavor_is_functorial_too() {
    let t = triple_from_associative(&builtin("grassmann2").unwrap()).unwrap();
    let k = standard_tkk(&t).unwrap();
    let s = grassmann_swap();
    let ks = tkk_functor_map(&s, &k, &k).unwrap();
    assert_eq!(ks.compose(&ks).unwrap().to_matrix(), LinearMap::identity(k.dim()).to_matrix());
}

#[test]
fn non_homomorphism_rejected() {
    let kd = tkk("dual");
    // x ↦ 1 does not respect {x,x,x} = 0.
    let bad = map(2, 2, &[&[(0, 1)], &[(0, 1)]]);
    assert!(matches!(tkk_functor_map(&bad, &kd, &kd), Err(Error::NotTripleHomomorphism { .. })));
}
