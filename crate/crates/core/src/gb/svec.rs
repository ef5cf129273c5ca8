//! Sparse module vectors sorted by a fixed module order.

use crate::field::{Fp, PrimeField};
use crate::module::ModuleElement;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Term {
    pub key: u128,
    pub coeff: Fp,
    pub mon: Monomial,
    pub pos: u32,
}

/// Terms in strictly decreasing key order, no zero coefficients.
#[derive(Clone, Debug, Default)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }
}

/// Order context: the field, the module order and the twists of the ambient.
#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub field: PrimeField,
    pub order: MonomialOrder,
    pub twists: Vec<i32>,
}

impl Frame {
    pub fn new(field: PrimeField, order: MonomialOrder, twists: Vec<i32>) -> Self {
        Frame { field, order, twists }
    }

    pub fn key(&self, m: &Monomial, pos: usize) -> u128 {
        self.order.key(&self.twists, m, pos)
    }

    /// `key(m * t, pos) - key(t, pos)`, the same for every term `t`.
    fn shift(&self, m: &Monomial) -> u128 {
        // Keys are affine in the exponent vector, so the difference at the
        // unit monomial of position 0 is valid everywhere.
        self.key(m, 0).wrapping_sub(self.key(&Monomial::ONE, 0))
    }

    pub fn degree(&self, t: &Term) -> i64 {
        t.mon.degree() as i64 + self.twists[t.pos as usize] as i64
    }

    pub fn unit(&self, pos: usize) -> SVec {
        SVec { terms: vec![Term { key: self.key(&Monomial::ONE, pos), coeff: Fp::ONE, mon: Monomial::ONE, pos: pos as u32 }] }
    }

    pub fn encode(&self, v: &ModuleElement) -> SVec {
        let mut terms: Vec<Term> = v
            .components()
            .iter()
            .enumerate()
            .flat_map(|(pos, f)| {
                f.terms().iter().map(move |&(coeff, mon)| Term { key: self.key(&mon, pos), coeff, mon, pos: pos as u32 })
            })
            .collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.key));
        SVec { terms }
    }

    pub fn to_element(&self, v: &SVec) -> ModuleElement {
        let rank = self.twists.len();
        let mut comps: Vec<Vec<(Fp, Monomial)>> = vec![Vec::new(); rank];
        for t in &v.terms {
            comps[t.pos as usize].push((t.coeff, t.mon));
        }
        let comps = comps
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable_by_key(|t| std::cmp::Reverse(t.1));
                Polynomial { terms: ts }
            })
            .collect();
        ModuleElement::new(comps)
    }

    pub fn scale(&self, v: &SVec, c: Fp) -> SVec {
        if c.is_zero() {
            return SVec::default();
        }
        SVec { terms: v.terms.iter().map(|t| Term { coeff: self.field.mul(t.coeff, c), ..*t }).collect() }
    }

    pub fn mul_term(&self, c: Fp, m: &Monomial, v: &SVec) -> SVec {
        if c.is_zero() {
            return SVec::default();
        }
        let s = self.shift(m);
        SVec {
            terms: v
                .terms
                .iter()
                .map(|t| Term { key: t.key.wrapping_add(s), coeff: self.field.mul(t.coeff, c), mon: t.mon.mul(m), pos: t.pos })
                .collect(),
        }
    }

    /// `v + c * m * w`, leaving the first `skip` terms of `v` untouched; they
    /// must all be larger than the leading term of `m * w`.
    pub fn axpy_from(&self, v: &mut SVec, skip: usize, c: Fp, m: &Monomial, w: &SVec) {
        if c.is_zero() || w.is_zero() {
            return;
        }
        let k = &self.field;
        let s = self.shift(m);
        let tail = v.terms.split_off(skip);
        let out = &mut v.terms;
        out.reserve(tail.len() + w.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < tail.len() && j < w.terms.len() {
            let a = tail[i];
            let b = w.terms[j];
            let bkey = b.key.wrapping_add(s);
            if a.key > bkey {
                out.push(a);
                i += 1;
            } else if a.key < bkey {
                out.push(Term { key: bkey, coeff: k.mul(b.coeff, c), mon: b.mon.mul(m), pos: b.pos });
                j += 1;
            } else {
                let coeff = k.add(a.coeff, k.mul(b.coeff, c));
                if !coeff.is_zero() {
                    out.push(Term { coeff, ..a });
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&tail[i..]);
        out.extend(w.terms[j..].iter().map(|b| Term { key: b.key.wrapping_add(s), coeff: k.mul(b.coeff, c), mon: b.mon.mul(m), pos: b.pos }));
    }

    pub fn axpy(&self, v: &mut SVec, c: Fp, m: &Monomial, w: &SVec) {
        self.axpy_from(v, 0, c, m, w)
    }

    /// `f * w` for a polynomial given by its terms.
    pub fn mul_poly(&self, f: &[(Fp, Monomial)], w: &SVec) -> SVec {
        let mut acc = SVec::default();
        for &(c, m) in f {
            self.axpy(&mut acc, c, &m, w);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use std::sync::Arc;

    #[test]
    fn shift_matches_direct_key() {
        let frames = [
            MonomialOrder::TermOverPosition,
            MonomialOrder::PositionOverTerm,
            MonomialOrder::Schreyer(Arc::new(crate::order::SchreyerFrame {
                target_twists: vec![0, 1],
                leads: vec![(Monomial::new([1, 0, 0]), 0), (Monomial::new([0, 2, 1]), 1), (Monomial::ONE, 1)],
            })),
        ];
        for order in frames {
            let f = Frame::new(PrimeField::default(), order, vec![1, 4, 2]);
            for t in Monomial::all_of_degree(3) {
                for m in Monomial::all_of_degree(2) {
                    for pos in 0..3 {
                        assert_eq!(f.key(&t.mul(&m), pos), f.key(&t, pos).wrapping_add(f.shift(&m)));
                    }
                }
            }
        }
    }

    #[test]
    fn element_round_trip_and_axpy() {
        let r = Ring::default();
        let f = Frame::new(*r.field(), MonomialOrder::TermOverPosition, vec![0, 1]);
        let v = ModuleElement::new(vec![r.parse("x^2 + y*z").unwrap(), r.parse("3*x - z").unwrap()]);
        let sv = f.encode(&v);
        assert_eq!(f.to_element(&sv), v);
        let mut acc = sv.clone();
        f.axpy(&mut acc, r.field().neg(Fp::ONE), &Monomial::ONE, &sv);
        assert!(acc.is_zero());
        let doubled = f.mul_term(r.field().elem(2), &Monomial::var(0), &sv);
        let expected = ModuleElement::new(vec![r.parse("2*x^3 + 2*x*y*z").unwrap(), r.parse("6*x^2 - 2*x*z").unwrap()]);
        assert_eq!(f.to_element(&doubled), expected);
    }
}
