//! Named base algebras used by the command line and the test suites.

use alloc::format;

use crate::algebra::{direct_sum, grassmann, matrix_algebra, scalar_field, truncated_free, Algebra};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 7] = ["scalar", "dual", "double", "grassmann2", "mat2", "free2d2", "free2d3"];

/// Bases small enough for `uce(sl₄(A))` under the default wedge guard.
pub const SL4_NAMES: [&str; 5] = ["scalar", "double", "dual", "grassmann2", "mat2"];

/// `k`, `k[x]/(x²)`, `k⊕k`, `Λ(e1,e2)`, `M2(k)`, `k⟨x,y⟩` cut at degree 2 or 3.
pub fn builtin(name: &str) -> Result<Algebra> {
    let k = scalar_field();
    let a = match name {
        "scalar" => k,
        "dual" => truncated_free(&["x"], 1, &[])?,
        "double" => direct_sum(&k, &k)?,
        "grassmann2" => grassmann(2)?,
        "mat2" => matrix_algebra(&k, 2)?,
        "free2d2" => truncated_free(&["x", "y"], 2, &[])?,
        "free2d3" => truncated_free(&["x", "y"], 3, &[])?,
        other => return Err(Error::InvalidArgument(format!("unknown base algebra {other:?}"))),
    };
    Ok(a.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;

    #[test]
    fn builtins_are_unital_associative() {
        let dims = [1, 2, 2, 4, 4, 7, 15];
        for (name, d) in BUILTIN_NAMES.iter().zip(dims) {
            let a = builtin(name).unwrap();
            assert_eq!(a.dim(), d, "{name}");
            assert_eq!(a.kind(), Kind::Associative);
            assert!(a.unit().is_some());
            assert_eq!(a.name(), *name);
        }
        assert!(builtin("nope").is_err());
    }
}
