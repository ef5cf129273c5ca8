//! Syzygies of codimension-two ideals in k[x,y,z].

pub mod error;
pub mod families;
pub mod field;
pub mod gb;
pub mod hilbert;
pub mod kv;
pub mod linalg;
pub mod modalg;
pub mod module;
pub mod monomial;
pub mod order;
mod parse;
pub mod poly;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField, DEFAULT_PRIME};
pub use gb::{buchberger, contains, normal_form, submodule_equal, GbStats, GroebnerBasis};
pub use module::{FreeModule, ModuleElement, Submodule};
pub use monomial::Monomial;
pub use order::{MonomialOrder, SchreyerFrame};
pub use poly::{Polynomial, Ring};
pub use hilbert::{degree_of_z, hilbert_function, hilbert_polynomial, Graded, HilbertData, HilbertPolynomial};
pub use modalg::{intersect, koszul_submodule, minimal_resolution, quotient, saturate, syzygies, GradedResolution, ResolutionStep};
pub use kv::{kv_verdict, KvReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/hilbert.md")]
    mod hilbert {}
    #[doc = include_str!("../../../book/src/koszul-and-vanishing.md")]
    mod koszul_and_vanishing {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
