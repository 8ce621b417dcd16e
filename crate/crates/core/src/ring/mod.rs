//! Scalars, monomials, polynomials and graded free modules.

pub mod field;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod order;
pub mod poly;

pub use field::{Coeff, FieldSpec, DEFAULT_PRIME};
pub use module::{column_degree, map_compose, GradedFreeModule, ModuleMap};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{monomial_cmp, MonomialOrder};
pub use poly::{poly_mul, Polynomial, RingContext};
