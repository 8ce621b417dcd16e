use std::collections::BTreeMap;

use regtor_core::groebner::{binom, Ideal};
use regtor_core::homalg::{finite_summary, tor_module};
use regtor_core::resolution::{betti_of_quotient, ModulePresentation};
use regtor_core::source::{parse_source, print_source};

const SRC: &str = "ring 32003 [x,y,z]\nideal I = x^2 - y*z, y^2, z^3\nideal J = x + y, z^2\n";

#[test]
fn complete_intersection_has_koszul_betti_numbers() {
    let src = parse_source(SRC).unwrap();
    let t = betti_of_quotient(src.get("I").unwrap());
    // degrees 2, 2, 3: the Koszul complex is minimal
    let want: BTreeMap<(usize, i32), u64> =
        [((0, 0), 1), ((1, 2), 2), ((1, 3), 1), ((2, 4), 1), ((2, 5), 2), ((3, 7), 1)].into_iter().collect();
    assert_eq!(t.entries, want);
    assert_eq!(t.reg(), Some(4));
}

#[test]
fn source_round_trip() {
    let src = parse_source(SRC).unwrap();
    let text = print_source(&src.ring, &src.ideals);
    let back = parse_source(&text).unwrap();
    for (name, i) in &src.ideals {
        assert!(back.get(name).unwrap().same_as(i), "{name}");
    }
}

#[test]
fn tor_against_residue_field_is_betti() {
    let src = parse_source(SRC).unwrap();
    let i = src.get("I").unwrap();
    let k = ModulePresentation::cyclic(&Ideal::maximal(&src.ring));
    let t = betti_of_quotient(i);
    for p in 0..=3 {
        let tor = finite_summary(&tor_module(&ModulePresentation::cyclic(i), &k, p).unwrap()).unwrap();
        let row: BTreeMap<i32, u64> = t.entries.iter().filter(|(&(q, _), _)| q == p).map(|(&(_, j), &b)| (j, b)).collect();
        assert_eq!(tor.dims, row, "p = {p}");
    }
}

#[test]
fn tor_is_symmetric() {
    let src = parse_source(SRC).unwrap();
    let a = ModulePresentation::cyclic(src.get("I").unwrap());
    let b = ModulePresentation::cyclic(src.get("J").unwrap());
    for k in 0..=2 {
        let ab = finite_summary(&tor_module(&a, &b, k).unwrap()).unwrap();
        let ba = finite_summary(&tor_module(&b, &a, k).unwrap()).unwrap();
        assert_eq!(ab.dims, ba.dims, "k = {k}");
    }
}

#[test]
fn hilbert_function_of_a_power_of_the_maximal_ideal() {
    let src = parse_source(SRC).unwrap();
    let m3 = Ideal::maximal(&src.ring).power(3);
    for d in 0..3 {
        assert_eq!(m3.hilbert_function(d), binom(d as i64 + 2, 2));
    }
    assert_eq!(m3.hilbert_function(3), 0);
}
