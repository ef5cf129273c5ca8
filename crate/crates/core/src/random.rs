//! Seeded random forms, points and codimension-two ideals.
//!
//! Generic forms in three variables almost always form a regular sequence,
//! so codimension-two ideals are drawn inside the ideal of a random point
//! scheme instead.

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::kv::{check_codim_two, input_ideal};
use crate::modalg::{ideal_power, intersect};
use crate::module::Submodule;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

/// Attempts made before giving up on a genericity condition.
pub const MAX_ATTEMPTS: usize = 64;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar(ring: &Ring, rng: &mut ChaCha8Rng) -> Fp {
    ring.field().elem(rng.gen_range(0..ring.characteristic() as i64))
}

pub fn nonzero_scalar(ring: &Ring, rng: &mut ChaCha8Rng) -> Fp {
    ring.field().elem(rng.gen_range(1..ring.characteristic() as i64))
}

/// A form of degree `d` with independent uniform coefficients.
pub fn random_form(ring: &Ring, rng: &mut ChaCha8Rng, d: u32) -> Polynomial {
    ring.from_terms(Monomial::all_of_degree(d).into_iter().map(|m| (scalar(ring, rng), m)))
}

/// A point of P² with all coordinates nonzero.
pub fn random_point(ring: &Ring, rng: &mut ChaCha8Rng) -> [Fp; 3] {
    [Fp::ONE, nonzero_scalar(ring, rng), nonzero_scalar(ring, rng)]
}

/// Two independent linear forms cutting out `p`; needs `p[0] ≠ 0`.
pub fn point_forms(ring: &Ring, p: [Fp; 3]) -> [Polynomial; 2] {
    assert!(!p[0].is_zero(), "point at infinity");
    let k = ring.field();
    [ring.linear(k.neg(p[1]), p[0], Fp::ZERO), ring.linear(k.neg(p[2]), Fp::ZERO, p[0])]
}

pub fn point_ideal(ring: &Ring, p: [Fp; 3]) -> Submodule {
    Submodule::ideal(*ring, &point_forms(ring, p)).expect("linear forms are homogeneous")
}

/// Local shape of a random point scheme at one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    /// `⟨l_1, l_2⟩`.
    Reduced,
    /// `⟨l_1, l_2²⟩`, a complete intersection of length two.
    Curvilinear,
    /// `⟨l_1, l_2⟩²`, length three and not a complete intersection.
    Fat,
}

fn component(ring: &Ring, rng: &mut ChaCha8Rng, p: [Fp; 3], kind: PointKind) -> Result<Submodule> {
    let k = ring.field();
    let [u, w] = point_forms(ring, p);
    let (a, b, c) = (scalar(ring, rng), scalar(ring, rng), nonzero_scalar(ring, rng));
    // l1 = u + a w, l2 = b u + c w are independent unless a b = c
    let l1 = ring.add_scaled(&u, a, &w);
    let l2 = ring.add(&ring.scale(&u, b), &ring.scale(&w, c));
    if k.mul(a, b) == c {
        return component(ring, rng, p, kind);
    }
    match kind {
        PointKind::Reduced => Submodule::ideal(*ring, &[l1, l2]),
        PointKind::Curvilinear => Submodule::ideal(*ring, &[l1, ring.mul(&l2, &l2)]),
        PointKind::Fat => ideal_power(&Submodule::ideal(*ring, &[l1, l2])?, 2),
    }
}

/// A random element of the degree-`d` piece of an ideal.
pub fn random_element(ring: &Ring, rng: &mut ChaCha8Rng, ideal: &Submodule, d: u32) -> Polynomial {
    let mut acc = Polynomial::zero();
    for g in ideal.polys() {
        let e = g.homogeneous_degree().expect("homogeneous generator");
        if e <= d {
            acc = ring.add(&acc, &ring.mul(&random_form(ring, rng, d - e), &g));
        }
    }
    acc
}

/// A random codimension-two ideal with three generators of degree in
/// `2..=max_degree`, and the point scheme it was drawn from.
#[derive(Clone, Debug)]
pub struct RandomIdeal {
    pub generators: Vec<Polynomial>,
    pub kinds: Vec<PointKind>,
}

pub fn random_codim_two(ring: &Ring, rng: &mut ChaCha8Rng, max_degree: u32) -> Result<RandomIdeal> {
    let max_degree = max_degree.max(2);
    for _ in 0..MAX_ATTEMPTS {
        let count = rng.gen_range(1..=3usize);
        let kinds: Vec<PointKind> = (0..count)
            .map(|_| match rng.gen_range(0..3) {
                0 => PointKind::Reduced,
                1 => PointKind::Curvilinear,
                _ => PointKind::Fat,
            })
            .collect();
        let mut scheme: Option<Submodule> = None;
        for &kind in &kinds {
            let p = random_point(ring, rng);
            let c = component(ring, rng, p, kind)?;
            scheme = Some(match scheme {
                None => c,
                Some(s) => intersect(&s, &c)?,
            });
        }
        let scheme = scheme.expect("at least one point");
        let lowest = scheme.generator_degrees().into_iter().min().unwrap_or(0).max(2) as u32;
        if lowest > max_degree {
            continue;
        }
        let generators: Vec<Polynomial> = (0..3)
            .map(|_| {
                let d = rng.gen_range(lowest..=max_degree);
                random_element(ring, rng, &scheme, d)
            })
            .collect();
        if generators.iter().any(Polynomial::is_zero) {
            continue;
        }
        let i = input_ideal(ring, &generators)?;
        if check_codim_two(&i, crate::hilbert::DEFAULT_DEGREE_CAP).is_ok() {
            return Ok(RandomIdeal { generators, kinds });
        }
    }
    Err(Error::Genericity { attempts: MAX_ATTEMPTS, reason: "no codimension-two ideal drawn".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_forms_vanish() {
        let r = Ring::default();
        let mut g = rng(3);
        let p = random_point(&r, &mut g);
        for l in point_forms(&r, p) {
            assert!(r.eval(&l, p).is_zero());
        }
    }

    #[test]
    fn deterministic_and_codim_two() {
        let r = Ring::default();
        let a = random_codim_two(&r, &mut rng(11), 4).unwrap();
        let b = random_codim_two(&r, &mut rng(11), 4).unwrap();
        assert_eq!(a.generators, b.generators);
        assert_eq!(a.generators.len(), 3);
        let i = input_ideal(&r, &a.generators).unwrap();
        assert!(check_codim_two(&i, 256).unwrap() > 0);
    }
}
