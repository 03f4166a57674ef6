//! Exact arithmetic: integer polynomials in one and two variables, prime-field
//! polynomials, factorization over Q, number fields, cyclotomic polynomials,
//! exact linear algebra and lattice reduction.

pub mod cyclotomic;
pub mod factor;
pub mod field;
pub mod lattice;
pub mod linalg;
pub mod modp;
pub mod poly1;
pub mod poly2;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi};
pub use factor::{factor_univariate, is_irreducible, Factorization};
pub use field::{Field, FieldElement, NumberField};
pub use poly1::IntPoly1;
pub use poly2::{FieldPoly2, IntPoly2};

/// Minimal polynomial of a field element over Q.
pub fn minimal_polynomial(e: &FieldElement) -> IntPoly1 {
    e.minimal_polynomial()
}
