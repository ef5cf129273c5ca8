//! Koszul relations, syzygies, intersections, colon modules, saturation and
//! minimal free resolutions.

mod resolution;

pub use resolution::{minimal_resolution, GradedResolution, ResolutionStep};

use crate::error::{Error, Result};
use crate::gb;
use crate::module::{FreeModule, ModuleElement, Submodule};
use crate::poly::{Polynomial, Ring};

/// Iteration cap for [`saturate`].
pub const SATURATION_ROUNDS: usize = 64;

fn degrees_of(fs: &[Polynomial]) -> Result<Vec<i32>> {
    fs.iter()
        .enumerate()
        .map(|(i, f)| {
            if f.is_zero() {
                return Err(Error::InvalidInput(format!("generator {} is zero", i + 1)));
            }
            f.homogeneous_degree().map(|d| d as i32).ok_or_else(|| Error::NotHomogeneous(format!("generator {}", i + 1)))
        })
        .collect()
}

/// The submodule of `⊕ R(-d_j)` spanned by `f_k e_j - f_j e_k` for `j < k`.
pub fn koszul_submodule(ring: &Ring, f: &[Polynomial]) -> Result<Submodule> {
    if f.len() < 2 {
        return Err(Error::InvalidInput("Koszul relations need at least two forms".into()));
    }
    let ambient = FreeModule::new(degrees_of(f)?);
    let r = f.len();
    let mut gens = Vec::with_capacity(r * (r - 1) / 2);
    for j in 0..r {
        for k in j + 1..r {
            let mut v = ModuleElement::zero(r);
            let c = v.components_mut();
            c[j] = f[k].clone();
            c[k] = ring.neg(&f[j]);
            gens.push(v);
        }
    }
    Submodule::new(*ring, ambient, gens)
}

/// The free module `⊕ R(-deg g_i)` mapping onto `M` together with the
/// minimal generators of the kernel.
pub fn syzygies(m: &Submodule) -> Result<Submodule> {
    if m.is_zero() {
        return Err(Error::InvalidInput("syzygies of the zero module".into()));
    }
    let (source, syz) = gb::syzygy_generators(m.ring(), m.ambient(), m.generators())?;
    Ok(Submodule::new(*m.ring(), source, syz)?.minimize())
}

/// Coefficient blocks `[0, split)` of the syzygies on the concatenation
/// `left ++ right`.
fn split_syzygies(ring: &Ring, ambient: &FreeModule, left: &[ModuleElement], right: &[ModuleElement]) -> Result<Vec<ModuleElement>> {
    let all: Vec<ModuleElement> = left.iter().chain(right).cloned().collect();
    let (_, syz) = gb::syzygy_generators(ring, ambient, &all)?;
    Ok(syz)
}

pub fn intersect(m: &Submodule, n: &Submodule) -> Result<Submodule> {
    m.check_same_ambient(n.ambient())?;
    let ring = m.ring();
    if m.is_zero() || n.is_zero() {
        return Ok(Submodule::zero(*ring, m.ambient().clone()));
    }
    let k = m.generators().len();
    let rank = m.ambient().rank();
    let syz = split_syzygies(ring, m.ambient(), m.generators(), n.generators())?;
    let gens = syz
        .iter()
        .map(|s| ring.combine(&s.components()[..k], m.generators(), rank))
        .filter(|v| !v.is_zero())
        .collect();
    Ok(Submodule::new(*ring, m.ambient().clone(), gens)?.minimize())
}

/// `M : g = {v : g v ∈ M}`.
pub fn quotient(m: &Submodule, g: &Polynomial) -> Result<Submodule> {
    if g.is_zero() {
        return Err(Error::ZeroQuotient);
    }
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous("colon by a non-homogeneous form".into()));
    }
    let ring = m.ring();
    let rank = m.ambient().rank();
    if m.is_zero() {
        return Ok(Submodule::zero(*ring, m.ambient().clone()));
    }
    let multiples: Vec<ModuleElement> = (0..rank).map(|j| ModuleElement::basis(rank, j, g.clone())).collect();
    let k = m.generators().len();
    let syz = split_syzygies(ring, m.ambient(), m.generators(), &multiples)?;
    let gens = syz.into_iter().map(|s| ModuleElement::new(s.into_components().split_off(k))).filter(|v| !v.is_zero()).collect();
    Ok(Submodule::new(*ring, m.ambient().clone(), gens)?.minimize())
}

/// `M : ⟨x, y, z⟩`.
pub fn saturation_step(m: &Submodule) -> Result<Submodule> {
    let ring = m.ring();
    let qx = quotient(m, &ring.x())?;
    let qy = quotient(m, &ring.y())?;
    let qz = quotient(m, &ring.z())?;
    intersect(&intersect(&qx, &qy)?, &qz)
}

/// The saturation with respect to `⟨x, y, z⟩`, minimally generated.
pub fn saturate(m: &Submodule) -> Result<Submodule> {
    let mut cur = m.minimize();
    for _ in 0..SATURATION_ROUNDS {
        let next = saturation_step(&cur)?;
        if gb::is_subset(&next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::InvalidInput(format!("saturation did not stabilize after {SATURATION_ROUNDS} rounds")))
}

pub fn is_saturated(m: &Submodule) -> Result<bool> {
    gb::is_subset(&saturation_step(m)?, m)
}

/// The product ideal, generated by pairwise products.
pub fn ideal_product(i: &Submodule, j: &Submodule) -> Result<Submodule> {
    i.check_same_ambient(&FreeModule::ring())?;
    j.check_same_ambient(&FreeModule::ring())?;
    let ring = i.ring();
    let mut gens = Vec::new();
    for f in i.polys() {
        for g in j.polys() {
            gens.push(ring.mul(&f, &g));
        }
    }
    Ok(Submodule::ideal(*ring, &gens)?.minimize())
}

pub fn ideal_power(i: &Submodule, e: u32) -> Result<Submodule> {
    let mut acc = Submodule::ideal(*i.ring(), &[i.ring().one()])?;
    for _ in 0..e {
        acc = ideal_product(&acc, i)?;
    }
    Ok(acc)
}

/// `⊕_j I(-d_j)` inside `ambient`, for an ideal `I`.
pub fn ideal_times_free(i: &Submodule, ambient: &FreeModule) -> Result<Submodule> {
    i.check_same_ambient(&FreeModule::ring())?;
    let r = ambient.rank();
    let gens = (0..r).flat_map(|j| i.polys().into_iter().map(move |g| ModuleElement::basis(r, j, g))).collect();
    Submodule::new(*i.ring(), ambient.clone(), gens)
}
