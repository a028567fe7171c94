//! Jordan triple systems and their Tits–Kantor–Koecher Lie algebras.

mod tkk;
mod triple;

pub use tkk::{
    canonical_surjection, check_graded, check_triple_hom, standard_tkk, tkk_functor_map, universal_tkk,
    universal_tkk_with, Flavor, GradedLie, Surjection, TkkOptions,
};
pub use triple::{
    check_five_linear, check_jts, check_jts_axioms, triple_from_associative, triple_from_jordan, TripleSystem,
};
