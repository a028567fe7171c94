use tkk_core::corpus::builtin;
use tkk_core::uce::{verify_thm32, verify_thm41, VerifyOptions};

fn thm32(name: &str) {
    let a = builtin(name).unwrap();
    let r = verify_thm32(&a, &VerifyOptions::default()).unwrap();
    assert!(r.passed(), "{r:#?}");
    assert_eq!(r.dim_uce, r.dim_tkk);
}

fn thm41(name: &str) {
    let a = builtin(name).unwrap();
    let r = verify_thm41(&a, &VerifyOptions::default()).unwrap();
    assert!(r.passed(), "{r:#?}");
    assert_eq!(r.h2_dim, r.hc1_dim);
    assert_eq!(r.placement.as_deref(), Some("block"));
    let transposed = r.notes.iter().find(|c| c.name == "placement-transposed").unwrap();
    eprintln!("{name}: dims {} h2 {} transposed placement holds: {}", r.dim_uce, r.h2_dim, transposed.holds);
}

#[test]
fn thm32_scalar() {
    thm32("scalar");
}

#[test]
fn thm32_dual() {
    thm32("dual");
}

#[test]
fn thm32_double() {
    thm32("double");
}

#[test]
fn thm32_grassmann2() {
    thm32("grassmann2");
}

#[test]
fn thm32_mat2() {
    thm32("mat2");
}

#[test]
fn thm32_free2d2() {
    thm32("free2d2");
}

#[test]
fn thm41_scalar() {
    thm41("scalar");
}

#[test]
fn thm41_double() {
    thm41("double");
}

#[test]
fn thm41_dual() {
    thm41("dual");
}

#[test]
fn thm41_grassmann2() {
    thm41("grassmann2");
}
