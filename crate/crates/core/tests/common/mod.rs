#![allow(dead_code)]

use kvsyz::{Monomial, Polynomial, Ring, Submodule};
use proptest::prelude::*;

pub fn ring() -> Ring {
    Ring::default()
}

pub fn ideal(r: &Ring, text: &str) -> Submodule {
    Submodule::ideal(*r, &r.parse_list(text).unwrap()).unwrap()
}

/// A sparse form of degree `d` with small coefficients, some of them zero.
pub fn form(d: u32) -> impl Strategy<Value = Polynomial> {
    let count = Monomial::all_of_degree(d).len();
    prop::collection::vec(-3i64..=3, count).prop_map(move |cs| {
        let r = ring();
        r.from_terms(Monomial::all_of_degree(d).into_iter().zip(cs).map(|(m, c)| (r.field().elem(c), m)))
    })
}

pub fn nonzero_form(d: u32) -> impl Strategy<Value = Polynomial> {
    form(d).prop_filter("nonzero", |f| !f.is_zero())
}

/// Two to four nonzero forms of degree 1 to `max_degree`.
pub fn forms(max_degree: u32) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec((1..=max_degree).prop_flat_map(nonzero_form), 2..=4)
}
