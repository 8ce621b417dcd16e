//! Checks whose hypotheses random ideals rarely meet, run on ideals built to meet them.

use regtor_core::constructions::{catalecticant_space, power_max_ideal};
use regtor_core::ring::{FieldSpec, RingContext};
use regtor_core::verify::{product_reports, torsion_reports, BoundReport, ModuleData, PairData, Verdict};

fn find<'a>(reports: &'a [BoundReport], id: &str) -> Vec<&'a BoundReport> {
    reports.iter().filter(|r| r.theorem_id == id).collect()
}

#[test]
fn product_of_linearly_resolved_ideals() {
    let r = RingContext::with_prime(3, 32003);
    let m2 = power_max_ideal(&r, 2).unwrap();
    let cat = catalecticant_space(3, FieldSpec::default()).unwrap().ideal(&r).unwrap();
    for (i, j) in [(&m2, &m2), (&cat, &m2), (&cat, &cat)] {
        let pair = PairData::new(ModuleData::quotient(i).unwrap(), ModuleData::quotient(j).unwrap(), 1).unwrap();
        let reports = product_reports(i, j, &pair).unwrap();
        let hw = find(&reports, "half-way-linear2");
        assert_eq!(hw.len(), 1);
        assert!(hw[0].hypotheses_pass(), "{:?}", hw[0].hypothesis_results);
        assert_eq!(hw[0].holds, Verdict::Holds);
        assert_eq!(hw[0].lhs, Some(4));
    }
}

#[test]
fn torsion_of_symmetric_powers_is_concentrated() {
    let r = RingContext::with_prime(3, 32003);
    let m2 = power_max_ideal(&r, 2).unwrap();
    let reports = torsion_reports(&m2, &ModuleData::quotient(&m2).unwrap(), 3).unwrap();
    let pa = find(&reports, "partial-annihilation");
    assert_eq!(pa.len(), 2);
    for rep in pa {
        assert!(rep.hypotheses_pass());
        assert_eq!(rep.holds, Verdict::Holds);
    }
    assert!(reports.iter().all(|r| !r.is_violation()));
}
