//! Theorem-instance checkers, the conjecture fuzzer and the Koszul
//! homology oracle.

mod data;
mod fuzz;
mod oracle;
mod products;
mod report;
mod tor;

pub use data::{ModuleData, ModuleSummary, PairData};
pub use fuzz::{fuzz, FuzzConfig, FuzzReport, NearSharp, Witness, GIN_CAVEAT};
pub use oracle::oracle_betti;
pub use products::{
    check_generator_bound, check_products_powers, generator_bound_reports, monomial_linear_report, power_reports,
    product_reports, torsion_reports,
};
pub use report::{add_opt, le, max_opt, BoundReport, ClaimKind, Hypothesis, Relation, Verdict};
pub use tor::{
    check_cm_case, check_reg_tor, check_specialization, check_tor_bound, cm_case_reports, initials_report,
    linear_complements_report, reg_tor_reports, socle_estimation_reports, socle_stepwise_reports, subadd_reports,
    tor_bound_reports,
};
