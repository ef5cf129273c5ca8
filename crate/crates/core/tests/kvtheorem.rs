mod common;

use common::ring;
use kvsyz::hilbert::oracle::syzygies_in_degree;
use kvsyz::kv::{build_s, build_v, check_i2_isat, check_saturated_kv, koszul_chain_checks, kv_verdict};
use kvsyz::random::{random_codim_two, rng};
use kvsyz::{contains, submodule_equal, Error, FreeModule, HilbertPolynomial, ModuleElement, Polynomial, Ring};

fn forms(r: &Ring, s: &str) -> Vec<Polynomial> {
    r.parse_list(s).unwrap()
}

#[test]
fn s_and_v_examples() {
    let r = ring();
    let f = forms(&r, "x, y, x^2 + y^2");
    let s = build_s(&r, &f).unwrap();
    let gens: Vec<ModuleElement> = f.iter().cloned().map(ModuleElement::from_poly).collect();
    for n in 0..=4 {
        for v in syzygies_in_degree(&r, &FreeModule::ring(), &gens, n).unwrap() {
            assert!(contains(&s, &v).unwrap());
        }
    }
    let tri = forms(&r, "xy, xz, yz");
    let v = build_v(&r, &tri).unwrap();
    let k = kvsyz::koszul_submodule(&r, &tri).unwrap();
    assert!(submodule_equal(&v, &k).unwrap());
    let fat = forms(&r, "x^2, x*y, y^2");
    let v = build_v(&r, &fat).unwrap();
    for g in v.generators() {
        assert!(r.dot(g, &fat).is_zero());
    }
}

#[test]
fn verdict_examples() {
    let r = ring();
    let tri = kv_verdict(&r, &forms(&r, "xy, xz, yz")).unwrap();
    assert_eq!((tri.deg_z, tri.herzog_slack, tri.k_eq_v, tri.lci), (3, 0, true, true));

    let fat = kv_verdict(&r, &forms(&r, "x^2, x*y, y^2")).unwrap();
    assert_eq!((fat.deg_z, fat.herzog_slack, fat.k_eq_v, fat.lci), (3, 1, false, false));
    assert_eq!(fat.h_i_mod_i2.polynomial, HilbertPolynomial::constant(7));
    let w = fat.witness.as_ref().unwrap();
    assert!(!fat.k.gb().normal_form(w).unwrap().is_zero());
    assert!(w.degree_in(fat.v.ambient()).unwrap().unwrap() <= 4);

    let point = kv_verdict(&r, &forms(&r, "x, y, x^2 + y^2")).unwrap();
    assert_eq!((point.deg_z, point.herzog_slack, point.k_eq_v), (1, 0, true));
}

#[test]
fn lemma_checks_on_fixtures() {
    let r = ring();
    for text in ["xy, xz, yz", "x^2, x*y, y^2"] {
        let rep = kv_verdict(&r, &forms(&r, text)).unwrap();
        assert!(check_saturated_kv(&rep).unwrap(), "{text}");
    }
    assert!(check_i2_isat(&r, &forms(&r, "x^2, x*z, y^2")).unwrap());
    assert!(check_i2_isat(&r, &forms(&r, "xy, xz, yz")).unwrap());
}

#[test]
fn koszul_chain() {
    let r = ring();
    assert!(koszul_chain_checks(&r, &forms(&r, "xy, xz, yz")).unwrap().all());
    assert!(matches!(koszul_chain_checks(&r, &forms(&r, "x^2, y^2, z^2")), Err(Error::NotCodimTwo(_))));
    let k = r.field();
    let spec = kvsyz::families::ArrangementSpec::new(vec![k.elem(1), k.elem(2)], vec![k.elem(3)]).unwrap();
    let q = kvsyz::families::build_arrangement(&r, &spec).unwrap();
    assert!(koszul_chain_checks(&r, &r.jacobian(&q).unwrap()).unwrap().all());
}

#[test]
fn invariants_on_random_ideals() {
    let r = ring();
    let mut g = rng(2024);
    for _ in 0..20 {
        let f = random_codim_two(&r, &mut g, 4).unwrap().generators;
        let rep = kv_verdict(&r, &f).unwrap();
        assert!(rep.herzog_slack >= 0);
        assert!(rep.consistent);
        assert!(rep.containment_chain().unwrap());
        assert!(rep.identities().all());
        if !rep.k_eq_v {
            assert!(rep.witness_is_valid().unwrap());
        }
    }
}
