//! Gröbner bases of submodules of graded free modules; ideals are the rank-one
//! case.

mod engine;
pub(crate) mod svec;

use crate::error::Result;
use crate::module::{FreeModule, ModuleElement, Submodule};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Ring;

use engine::Reducer;
use svec::{Frame, SVec};

/// Counters collected while running Buchberger's algorithm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub spairs: usize,
    pub zero_reductions: usize,
    pub pairs_pruned: usize,
}

/// A reduced Gröbner basis: monic, minimal, tail-reduced, sorted by
/// increasing leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    ambient: FreeModule,
    elements: Vec<ModuleElement>,
    reducer: Reducer,
    stats: GbStats,
}

impl GroebnerBasis {
    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.reducer.frame.order
    }

    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    /// Leading monomials with their positions.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.reducer.leads.iter().map(|&(m, p)| (m, p as usize)).collect()
    }

    /// The remainder of `v` on division by the basis.
    pub fn normal_form(&self, v: &ModuleElement) -> Result<ModuleElement> {
        v.degree_in(&self.ambient)?;
        let mut s = self.reducer.frame.encode(v);
        self.reducer.reduce(&mut s, None);
        Ok(self.reducer.frame.to_element(&s))
    }

    pub fn contains(&self, v: &ModuleElement) -> Result<bool> {
        v.degree_in(&self.ambient)?;
        Ok(self.reducer.reduces_to_zero(&self.reducer.frame.encode(v)))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.reducer.frame.order == other.reducer.frame.order && self.elements == other.elements
    }
}

fn frame_for(m: &Submodule, order: MonomialOrder) -> Frame {
    Frame::new(*m.ring().field(), order, m.ambient().twists().to_vec())
}

/// The reduced Gröbner basis of `m` for `order`.
pub fn buchberger(m: &Submodule, order: MonomialOrder) -> GroebnerBasis {
    let frame = frame_for(m, order);
    let gens: Vec<SVec> = m.generators().iter().map(|g| frame.encode(g)).collect();
    wrap(m, engine::run(frame, gens, None))
}

pub fn normal_form(v: &ModuleElement, g: &GroebnerBasis) -> Result<ModuleElement> {
    g.normal_form(v)
}

/// Membership test via the cached basis of `m`.
pub fn contains(m: &Submodule, v: &ModuleElement) -> Result<bool> {
    m.gb().contains(v)
}

/// `m ⊆ n`.
pub fn is_subset(m: &Submodule, n: &Submodule) -> Result<bool> {
    n.check_same_ambient(m.ambient())?;
    let gb = n.gb();
    for g in m.generators() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of submodules, decided by comparing reduced bases.
pub fn submodule_equal(m: &Submodule, n: &Submodule) -> Result<bool> {
    m.check_same_ambient(n.ambient())?;
    Ok(m.gb().elements() == n.gb().elements())
}

/// A minimal homogeneous generating set, chosen among the given generators,
/// and the reduced basis found along the way.
pub(crate) fn minimal_generators(m: &Submodule) -> (Vec<ModuleElement>, GroebnerBasis) {
    let frame = frame_for(m, MonomialOrder::TermOverPosition);
    let gens: Vec<SVec> = m.generators().iter().map(|g| frame.encode(g)).collect();
    let out = engine::run(frame, gens, None);
    let minimal = out.minimal.iter().map(|&i| m.generators()[i].clone()).collect();
    (minimal, wrap(m, out))
}

fn wrap(m: &Submodule, out: engine::Output) -> GroebnerBasis {
    let elements = out.reducer.basis.iter().map(|v| out.reducer.frame.to_element(v)).collect();
    GroebnerBasis { ring: *m.ring(), ambient: m.ambient().clone(), elements, reducer: out.reducer, stats: out.stats }
}

/// Generators of the syzygies on `gens` (all nonzero and homogeneous in
/// `ambient`), living in the free module whose twists are their degrees.
pub(crate) fn syzygy_generators(ring: &Ring, ambient: &FreeModule, gens: &[ModuleElement]) -> Result<(FreeModule, Vec<ModuleElement>)> {
    let mut degrees = Vec::with_capacity(gens.len());
    for g in gens {
        let d = g.degree_in(ambient)?.ok_or_else(|| crate::Error::InvalidInput("zero generator in syzygy computation".into()))?;
        degrees.push(d);
    }
    let frame = Frame::new(*ring.field(), MonomialOrder::TermOverPosition, ambient.twists().to_vec());
    let source = FreeModule::new(degrees.clone());
    let rep_frame = Frame::new(*ring.field(), MonomialOrder::TermOverPosition, degrees.clone());
    let svecs: Vec<SVec> = gens.iter().map(|g| frame.encode(g)).collect();
    let out = engine::run(frame, svecs, Some(degrees));
    let syz = out.syzygies.iter().map(|s| rep_frame.to_element(s)).collect();
    Ok((source, syz))
}
