//! Gröbner bases and the ideal algebra on top of them.

pub mod engine;
pub mod hilbert;
pub mod ideal;
pub mod modules;
pub mod monideal;
pub mod vector;

pub use hilbert::{binom, HilbertSeries};
pub use ideal::{
    buchberger, divide_exact, elimination_ideal, gin, gin_checked, normal_form, random_invertible,
    GroebnerBasis, Ideal,
};
pub use modules::{kernel, mingens_mod, module_gb, module_hilbert_series};
pub use monideal::MonomialIdeal;
