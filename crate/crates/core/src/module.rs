//! Graded free modules `⊕ R(-d_j)`, their elements and submodules.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::gb::{self, GroebnerBasis};
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Ring};

/// The free module `⊕_j R(-d_j)`; `twists[j] = d_j` is the degree of `e_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeModule {
    twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        assert!(!twists.is_empty(), "free module of rank zero");
        FreeModule { twists }
    }

    /// R itself, rank one with twist zero.
    pub fn ring() -> Self {
        FreeModule { twists: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        FreeModule { twists: self.twists.iter().chain(&other.twists).copied().collect() }
    }

    /// Dimension of the degree-`n` piece: `Σ_j dim R_{n - d_j}`.
    pub fn dim(&self, n: i64) -> u64 {
        self.twists.iter().map(|&d| crate::monomial::Monomial::count_of_degree(n - d as i64)).sum()
    }
}

impl fmt::Display for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(|d| format!("R({})", -d)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A vector of polynomials; its ambient module is supplied by context.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        ModuleElement { components }
    }

    pub fn zero(rank: usize) -> Self {
        ModuleElement { components: vec![Polynomial::zero(); rank] }
    }

    /// The basis vector `e_j` scaled by `f`.
    pub fn basis(rank: usize, j: usize, f: Polynomial) -> Self {
        let mut v = ModuleElement::zero(rank);
        v.components[j] = f;
        v
    }

    pub fn from_poly(f: Polynomial) -> Self {
        ModuleElement { components: vec![f] }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn components_mut(&mut self) -> &mut [Polynomial] {
        &mut self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn component(&self, j: usize) -> &Polynomial {
        &self.components[j]
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Degree in the twisted grading of `ambient`: `deg(a_j) + d_j`, which must
    /// agree for every nonzero term. `Ok(None)` for the zero vector.
    pub fn degree_in(&self, ambient: &FreeModule) -> Result<Option<i32>> {
        if self.rank() != ambient.rank() {
            return Err(Error::AmbientMismatch(format!(
                "element of rank {} in a module of rank {}",
                self.rank(),
                ambient.rank()
            )));
        }
        let mut degree = None;
        for (f, &d) in self.components.iter().zip(ambient.twists()) {
            for (_, m) in f.terms() {
                let t = m.degree() as i32 + d;
                match degree {
                    None => degree = Some(t),
                    Some(e) if e != t => {
                        return Err(Error::NotHomogeneous(format!("terms of degrees {e} and {t} in one vector")))
                    }
                    _ => {}
                }
            }
        }
        Ok(degree)
    }
}

impl Ring {
    pub fn vec_add(&self, v: &ModuleElement, w: &ModuleElement) -> ModuleElement {
        ModuleElement::new(v.components.iter().zip(&w.components).map(|(a, b)| self.add(a, b)).collect())
    }

    pub fn vec_sub(&self, v: &ModuleElement, w: &ModuleElement) -> ModuleElement {
        ModuleElement::new(v.components.iter().zip(&w.components).map(|(a, b)| self.sub(a, b)).collect())
    }

    pub fn vec_neg(&self, v: &ModuleElement) -> ModuleElement {
        ModuleElement::new(v.components.iter().map(|a| self.neg(a)).collect())
    }

    pub fn vec_scale(&self, c: Fp, v: &ModuleElement) -> ModuleElement {
        ModuleElement::new(v.components.iter().map(|a| self.scale(a, c)).collect())
    }

    /// `f * v`.
    pub fn vec_mul(&self, f: &Polynomial, v: &ModuleElement) -> ModuleElement {
        ModuleElement::new(v.components.iter().map(|a| self.mul(f, a)).collect())
    }

    /// `Σ_j coeffs_j * columns_j`: applies the matrix with the given columns.
    pub fn combine(&self, coeffs: &[Polynomial], columns: &[ModuleElement], rank: usize) -> ModuleElement {
        let mut acc = ModuleElement::zero(rank);
        for (c, col) in coeffs.iter().zip(columns) {
            if !c.is_zero() {
                acc = self.vec_add(&acc, &self.vec_mul(c, col));
            }
        }
        acc
    }

    /// `Σ_j v_j f_j`.
    pub fn dot(&self, v: &ModuleElement, fs: &[Polynomial]) -> Polynomial {
        v.components.iter().zip(fs).fold(Polynomial::zero(), |acc, (a, f)| self.add(&acc, &self.mul(a, f)))
    }
}

/// A submodule of a graded free module, given by homogeneous generators.
///
/// Zero generators are dropped. The reduced Gröbner basis for the
/// term-over-position order is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Ring,
    ambient: FreeModule,
    gens: Vec<ModuleElement>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Submodule {
    pub fn new(ring: Ring, ambient: FreeModule, gens: Vec<ModuleElement>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.degree_in(&ambient)?.is_some() {
                kept.push(g);
            }
        }
        Ok(Submodule { ring, ambient, gens: kept, gb: OnceLock::new() })
    }

    /// The ideal generated by homogeneous polynomials, as a submodule of R.
    pub fn ideal(ring: Ring, gens: &[Polynomial]) -> Result<Self> {
        Submodule::new(ring, FreeModule::ring(), gens.iter().cloned().map(ModuleElement::from_poly).collect())
    }

    pub fn zero(ring: Ring, ambient: FreeModule) -> Self {
        Submodule { ring, ambient, gens: Vec::new(), gb: OnceLock::new() }
    }

    /// The whole free module.
    pub fn full(ring: Ring, ambient: FreeModule) -> Self {
        let r = ambient.rank();
        let gens = (0..r).map(|j| ModuleElement::basis(r, j, ring.one())).collect();
        Submodule { ring, ambient, gens, gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Degrees of the generators in the twisted grading.
    pub fn generator_degrees(&self) -> Vec<i32> {
        self.gens
            .iter()
            .map(|g| g.degree_in(&self.ambient).ok().flatten().expect("validated nonzero homogeneous generator"))
            .collect()
    }

    /// Generators of an ideal as polynomials. Panics for rank > 1.
    pub fn polys(&self) -> Vec<Polynomial> {
        assert_eq!(self.ambient.rank(), 1, "polys() on a module of rank {}", self.ambient.rank());
        self.gens.iter().map(|g| g.component(0).clone()).collect()
    }

    /// Cached reduced Gröbner basis in term-over-position order.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| Arc::new(gb::buchberger(self, MonomialOrder::TermOverPosition)))
    }

    /// The same submodule generated by a minimal generating set.
    pub fn minimize(&self) -> Submodule {
        let (gens, basis) = gb::minimal_generators(self);
        let cell = OnceLock::new();
        let _ = cell.set(self.gb.get().cloned().unwrap_or_else(|| Arc::new(basis)));
        Submodule { ring: self.ring, ambient: self.ambient.clone(), gens, gb: cell }
    }

    pub(crate) fn check_same_ambient(&self, other: &FreeModule) -> Result<()> {
        if &self.ambient != other {
            return Err(Error::AmbientMismatch(format!("{} versus {}", self.ambient, other)));
        }
        Ok(())
    }

    /// Displays generators one per line.
    pub fn display(&self) -> String {
        self.gens.iter().map(|g| self.ring.display_vec(g)).collect::<Vec<_>>().join("\n")
    }
}

impl Ring {
    /// `(a, b, c)` for vectors, the bare polynomial for rank one.
    pub fn display_vec(&self, v: &ModuleElement) -> String {
        if v.rank() == 1 {
            return self.display(v.component(0)).to_string();
        }
        let parts: Vec<String> = v.components.iter().map(|c| self.display(c).to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_degree() {
        let r = Ring::default();
        let f = FreeModule::new(vec![2, 2, 2]);
        let v = ModuleElement::new(vec![r.z(), r.neg(&r.y()), Polynomial::zero()]);
        assert_eq!(v.degree_in(&f).unwrap(), Some(3));
        let bad = ModuleElement::new(vec![r.z(), r.parse("y^2").unwrap(), Polynomial::zero()]);
        assert!(matches!(bad.degree_in(&f), Err(Error::NotHomogeneous(_))));
        assert!(matches!(v.degree_in(&FreeModule::ring()), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn dims_of_free_modules() {
        let f = FreeModule::new(vec![0]);
        assert_eq!(f.dim(4), 15);
        let g = FreeModule::new(vec![2, 2, 2]);
        assert_eq!(g.dim(1), 0);
        assert_eq!(g.dim(3), 9);
    }
}
