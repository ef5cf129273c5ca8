//! Degree-by-degree linear algebra over GF(p), independent of Gröbner bases.
//!
//! The degree-`n` piece of a submodule is spanned by the monomial multiples
//! `m·g` of its generators; its dimension is the rank of their coordinate
//! matrix in the monomial basis of `F_n`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::linalg;
use crate::module::{FreeModule, ModuleElement};
use crate::monomial::Monomial;
use crate::poly::Ring;

use super::Graded;

/// Matrices larger than this many entries are refused.
pub const SIZE_CAP: usize = 20_000_000;

/// The monomial basis `{m e_j : deg m + d_j = n}` of `F_n`.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub degree: i64,
    pub basis: Vec<(Monomial, usize)>,
    index: HashMap<(Monomial, usize), usize>,
}

impl DegreeBasis {
    pub fn new(ambient: &FreeModule, n: i64) -> Self {
        let mut basis = Vec::new();
        for (j, &d) in ambient.twists().iter().enumerate() {
            if n - d as i64 >= 0 {
                basis.extend(Monomial::all_of_degree((n - d as i64) as u32).into_iter().map(|m| (m, j)));
            }
        }
        let index = basis.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        DegreeBasis { degree: n, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homogeneous vector of degree `n`.
    pub fn coordinates(&self, v: &ModuleElement) -> Vec<Fp> {
        let mut row = vec![Fp::ZERO; self.basis.len()];
        for (j, f) in v.components().iter().enumerate() {
            for &(c, m) in f.terms() {
                row[self.index[&(m, j)]] = c;
            }
        }
        row
    }

    pub fn element(&self, coords: &[Fp], rank: usize) -> ModuleElement {
        let mut comps = vec![Vec::new(); rank];
        for (&(m, j), &c) in self.basis.iter().zip(coords) {
            if !c.is_zero() {
                comps[j].push((c, m));
            }
        }
        ModuleElement::new(comps.into_iter().map(|ts| crate::poly::Polynomial { terms: ts }).collect())
    }
}

/// Coordinate rows of all `m·g` landing in degree `n`.
pub fn spanning_rows(ring: &Ring, ambient: &FreeModule, gens: &[ModuleElement], n: i64) -> Result<(DegreeBasis, Vec<Vec<Fp>>)> {
    let basis = DegreeBasis::new(ambient, n);
    let mut count = 0usize;
    let mut shifts = Vec::with_capacity(gens.len());
    for g in gens {
        let Some(d) = g.degree_in(ambient)? else {
            shifts.push(None);
            continue;
        };
        shifts.push(Some(n - d as i64));
        count += Monomial::count_of_degree(n - d as i64) as usize;
    }
    if count.saturating_mul(basis.dim()) > SIZE_CAP {
        return Err(Error::SizeCap(format!("{count} x {} matrix in degree {n}", basis.dim())));
    }
    let mut rows = Vec::with_capacity(count);
    for (g, s) in gens.iter().zip(shifts) {
        let Some(s) = s.filter(|&s| s >= 0) else { continue };
        for m in Monomial::all_of_degree(s as u32) {
            let term = ring.term(Fp::ONE, m);
            rows.push(basis.coordinates(&ring.vec_mul(&term, g)));
        }
    }
    Ok((basis, rows))
}

/// Hilbert function by rank computation.
pub fn oracle_hilbert(m: Graded<'_>, n: i64) -> Result<u64> {
    let sub = m.module();
    let (basis, rows) = spanning_rows(sub.ring(), sub.ambient(), sub.generators(), n)?;
    let r = linalg::rank(sub.ring().field(), rows) as u64;
    Ok(match m {
        Graded::Sub(_) => r,
        Graded::Quotient(_) => basis.dim() as u64 - r,
    })
}

/// A basis of the degree-`n` syzygies on `gens`: vectors `(a_i)` with
/// `Σ a_i g_i = 0`, found as the kernel of the multiplication map from the
/// source free module with twists `deg g_i`.
pub fn syzygies_in_degree(ring: &Ring, ambient: &FreeModule, gens: &[ModuleElement], n: i64) -> Result<Vec<ModuleElement>> {
    let degrees: Vec<i32> = gens
        .iter()
        .map(|g| g.degree_in(ambient).map(|d| d.expect("nonzero generator")))
        .collect::<Result<_>>()?;
    let source = FreeModule::new(degrees);
    let src_basis = DegreeBasis::new(&source, n);
    let tgt_basis = DegreeBasis::new(ambient, n);
    if src_basis.dim().saturating_mul(tgt_basis.dim()) > SIZE_CAP {
        return Err(Error::SizeCap(format!("{} x {} matrix in degree {n}", tgt_basis.dim(), src_basis.dim())));
    }
    // column c is the image of the source basis vector m e_i
    let mut rows = vec![vec![Fp::ZERO; src_basis.dim()]; tgt_basis.dim()];
    for (c, &(m, i)) in src_basis.basis.iter().enumerate() {
        let image = ring.vec_mul(&ring.term(Fp::ONE, m), &gens[i]);
        for (r, v) in tgt_basis.coordinates(&image).into_iter().enumerate() {
            rows[r][c] = v;
        }
    }
    let ker = linalg::kernel(ring.field(), rows, src_basis.dim());
    Ok(ker.iter().map(|v| src_basis.element(v, source.rank())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Submodule;

    #[test]
    fn small_oracles() {
        let r = Ring::default();
        let i = Submodule::ideal(r, &r.parse_list("xy, xz, yz").unwrap()).unwrap();
        assert_eq!(oracle_hilbert(Graded::Quotient(&i), 3).unwrap(), 3);
        let j = Submodule::ideal(r, &r.parse_list("x, y").unwrap()).unwrap();
        assert_eq!(oracle_hilbert(Graded::Sub(&j), 1).unwrap(), 2);
    }

    #[test]
    fn syzygy_kernel_of_three_monomials() {
        let r = Ring::default();
        let i = Submodule::ideal(r, &r.parse_list("xy, xz, yz").unwrap()).unwrap();
        assert!(syzygies_in_degree(&r, i.ambient(), i.generators(), 2).unwrap().is_empty());
        let s3 = syzygies_in_degree(&r, i.ambient(), i.generators(), 3).unwrap();
        assert_eq!(s3.len(), 2);
        for s in s3 {
            assert!(r.dot(&s, &i.polys()).is_zero());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let r = Ring::default();
        let i = Submodule::ideal(r, &[r.x()]).unwrap();
        assert!(matches!(oracle_hilbert(Graded::Sub(&i), 2000), Err(Error::SizeCap(_))));
    }
}
