mod common;

use common::{forms, ideal, nonzero_form, ring};
use kvsyz::gb::is_subset;
use kvsyz::hilbert::oracle::syzygies_in_degree;
use kvsyz::hilbert::{hilbert_function, Graded};
use kvsyz::modalg::{ideal_product, is_saturated};
use kvsyz::{contains, intersect, koszul_submodule, minimal_resolution, quotient, saturate, submodule_equal, syzygies};
use kvsyz::{ModuleElement, Submodule};
use proptest::prelude::*;

#[test]
fn koszul_examples() {
    let r = ring();
    let k = koszul_submodule(&r, &r.parse_list("x, y").unwrap()).unwrap();
    assert_eq!(k.generators(), [ModuleElement::new(vec![r.y(), r.neg(&r.x())])]);
    let cubics: Vec<_> = ["x^3", "y^3", "z^3", "x*y*z"].iter().map(|s| r.parse(s).unwrap()).collect();
    let k4 = koszul_submodule(&r, &cubics).unwrap();
    assert_eq!(k4.generator_degrees(), [6; 6]);
    assert!(koszul_submodule(&r, &[r.parse("x + y^2").unwrap(), r.x()]).is_err());
}

#[test]
fn syzygy_examples() {
    let r = ring();
    let s = syzygies(&ideal(&r, "xy, xz, yz")).unwrap();
    let phi = Submodule::new(
        r,
        s.ambient().clone(),
        vec![
            ModuleElement::new(r.parse_list("z, -y, 0").unwrap()),
            ModuleElement::new(r.parse_list("0, y, -x").unwrap()),
        ],
    )
    .unwrap();
    assert!(submodule_equal(&s, &phi).unwrap());
    assert_eq!(s.generator_degrees(), [3, 3]);

    // relations among the Koszul generators of a codimension-two ideal
    let f = r.parse_list("x^2, x*y, y^2").unwrap();
    let k = koszul_submodule(&r, &f).unwrap();
    let rel = syzygies(&k).unwrap();
    assert_eq!(rel.generators().len(), 1);
    let expected = ModuleElement::new(vec![f[2].clone(), r.neg(&f[1]), f[0].clone()]);
    assert!(contains(&rel, &expected).unwrap());
}

#[test]
fn intersection_and_quotient_examples() {
    let r = ring();
    assert!(submodule_equal(&intersect(&ideal(&r, "x"), &ideal(&r, "y")).unwrap(), &ideal(&r, "xy")).unwrap());
    assert!(submodule_equal(&quotient(&ideal(&r, "x^2, x*y"), &r.x()).unwrap(), &ideal(&r, "x, y")).unwrap());
    let i = ideal(&r, "xy, xz, yz");
    assert!(submodule_equal(&quotient(&i, &r.x()).unwrap(), &ideal(&r, "y, z")).unwrap());
    assert!(intersect(&i, &Submodule::full(r, kvsyz::FreeModule::new(vec![0, 0]))).is_err());
}

#[test]
fn quotient_matches_brute_force() {
    // {v of degree n : x v ∈ I} by linear algebra, compared up to degree 4
    let r = ring();
    let i = ideal(&r, "xy, xz, yz");
    let q = quotient(&i, &r.x()).unwrap();
    for n in 0..=4 {
        let basis = kvsyz::Monomial::all_of_degree(n);
        let inside: Vec<_> = basis
            .iter()
            .filter(|m| contains(&i, &ModuleElement::from_poly(r.mul(&r.x(), &r.term(kvsyz::Fp::ONE, **m)))).unwrap())
            .collect();
        assert_eq!(hilbert_function(Graded::Sub(&q), n as i64), inside.len() as u64);
    }
}

#[test]
fn saturation_examples() {
    let r = ring();
    assert!(submodule_equal(&saturate(&ideal(&r, "x^2, x*y, x*z")).unwrap(), &ideal(&r, "x")).unwrap());
    let tri = ideal(&r, "xy, xz, yz");
    assert!(submodule_equal(&saturate(&tri).unwrap(), &tri).unwrap());
    let fat = ideal(&r, "x^2, x*y, y^2");
    assert!(submodule_equal(&saturate(&fat).unwrap(), &fat).unwrap());
    assert!(is_saturated(&fat).unwrap());
}

#[test]
fn resolution_examples() {
    let r = ring();
    let res = minimal_resolution(&ideal(&r, "xy, xz, yz")).unwrap();
    assert_eq!((res.twists(0), res.twists(1), res.length()), (vec![2, 2, 2], vec![3, 3], 1));
    let ci = minimal_resolution(&ideal(&r, "x, y")).unwrap();
    assert_eq!(ci.twists(1), [2]);
    let k = r.field();
    let spec = kvsyz::families::ArrangementSpec::new(vec![k.elem(1), k.elem(2)], vec![k.elem(3)]).unwrap();
    let q = kvsyz::families::build_arrangement(&r, &spec).unwrap();
    let jac = minimal_resolution(&Submodule::ideal(r, &r.jacobian(&q).unwrap()).unwrap()).unwrap();
    let mut src = jac.twists(1);
    src.sort();
    assert_eq!((jac.twists(0), src), (vec![3, 3, 3], vec![4, 5]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn syzygies_are_complete_up_to_degree_six(gens in forms(3)) {
        let r = ring();
        let m = Submodule::ideal(r, &gens).unwrap();
        let s = syzygies(&m).unwrap();
        for g in s.generators() {
            prop_assert!(r.dot(g, &gens).is_zero());
        }
        for n in 0..=6 {
            let kernel = syzygies_in_degree(&r, m.ambient(), m.generators(), n).unwrap();
            for v in &kernel {
                prop_assert!(contains(&s, v).unwrap());
            }
            prop_assert_eq!(hilbert_function(Graded::Sub(&s), n), kernel.len() as u64);
        }
    }

    #[test]
    fn intersection_lies_in_both(a in forms(2), b in forms(2)) {
        let r = ring();
        let m = Submodule::ideal(r, &a).unwrap();
        let n = Submodule::ideal(r, &b).unwrap();
        let both = intersect(&m, &n).unwrap();
        prop_assert!(is_subset(&both, &m).unwrap() && is_subset(&both, &n).unwrap());
        let prod = ideal_product(&m, &n).unwrap();
        prop_assert!(is_subset(&prod, &both).unwrap());
    }

    #[test]
    fn saturation_is_a_closure(gens in forms(2), extra in nonzero_form(2)) {
        let r = ring();
        let i = Submodule::ideal(r, &gens).unwrap();
        let sat = saturate(&i).unwrap();
        prop_assert!(is_subset(&i, &sat).unwrap());
        prop_assert!(submodule_equal(&saturate(&sat).unwrap(), &sat).unwrap());
        let mut bigger = gens.clone();
        bigger.push(extra);
        let sat_big = saturate(&Submodule::ideal(r, &bigger).unwrap()).unwrap();
        prop_assert!(is_subset(&sat, &sat_big).unwrap());
    }

    #[test]
    fn resolutions_are_exact_complexes(gens in forms(3)) {
        let r = ring();
        let res = minimal_resolution(&Submodule::ideal(r, &gens).unwrap()).unwrap();
        prop_assert!(res.composes_to_zero() && res.is_minimal());
        prop_assert!(res.length() <= 2);
        for n in 0..=10 {
            prop_assert_eq!(res.euler_characteristic(n), hilbert_function(Graded::Sub(&res.resolved), n) as i64);
        }
    }
}
