use crate::error::Result;
use crate::gb;
use crate::hilbert::HilbertPolynomial;
use crate::module::{FreeModule, ModuleElement, Submodule};
use crate::monomial::Monomial;

/// A map `source → target` of graded free modules; `matrix[i]` is the image
/// of the `i`-th basis vector of `source`.
#[derive(Clone, Debug)]
pub struct ResolutionStep {
    pub source: FreeModule,
    pub target: FreeModule,
    pub matrix: Vec<ModuleElement>,
}

/// `0 → F_k → … → F_1 → F_0 → M → 0` with `F_0 → M` given by the generators
/// of `resolved` and `steps[i]` the map `F_{i+1} → F_i`.
#[derive(Clone, Debug)]
pub struct GradedResolution {
    pub steps: Vec<ResolutionStep>,
    pub resolved: Submodule,
}

/// Iterated minimal syzygies. Bounded by the global dimension of the ring.
pub fn minimal_resolution(m: &Submodule) -> Result<GradedResolution> {
    let resolved = m.minimize();
    let mut steps = Vec::new();
    let mut cur = resolved.clone();
    while !cur.is_zero() && steps.len() <= 3 {
        let (source, syz) = gb::syzygy_generators(cur.ring(), cur.ambient(), cur.generators())?;
        let next = Submodule::new(*cur.ring(), source.clone(), syz)?.minimize();
        if next.is_zero() {
            break;
        }
        steps.push(ResolutionStep {
            source: FreeModule::new(next.generator_degrees()),
            target: source,
            matrix: next.generators().to_vec(),
        });
        cur = next;
    }
    Ok(GradedResolution { steps, resolved })
}

impl GradedResolution {
    /// `F_0`.
    pub fn generators_module(&self) -> FreeModule {
        FreeModule::new(self.resolved.generator_degrees())
    }

    /// Twists of `F_i`.
    pub fn twists(&self, i: usize) -> Vec<i32> {
        if i == 0 {
            self.resolved.generator_degrees()
        } else {
            self.steps.get(i - 1).map_or_else(Vec::new, |s| s.source.twists().to_vec())
        }
    }

    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// No matrix entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.steps
            .iter()
            .flat_map(|s| s.matrix.iter())
            .flat_map(|c| c.components())
            .all(|f| f.is_zero() || f.degree() != Some(0))
    }

    /// Consecutive maps compose to zero, including `F_1 → F_0 → M`.
    pub fn composes_to_zero(&self) -> bool {
        let ring = self.resolved.ring();
        let mut prev: &[ModuleElement] = self.resolved.generators();
        let mut rank = self.resolved.ambient().rank();
        for s in &self.steps {
            for col in &s.matrix {
                if !ring.combine(col.components(), prev, rank).is_zero() {
                    return false;
                }
            }
            rank = s.target.rank();
            prev = &s.matrix;
        }
        true
    }

    /// `Σ_i (-1)^i dim (F_i)_n`, which equals the Hilbert function of the
    /// resolved module when the resolution is exact.
    pub fn euler_characteristic(&self, n: i64) -> i64 {
        (0..=self.steps.len())
            .map(|i| {
                let d: i64 = self.twists(i).iter().map(|&t| Monomial::count_of_degree(n - t as i64) as i64).sum();
                if i % 2 == 0 { d } else { -d }
            })
            .sum()
    }

    /// The alternating sum of the free Hilbert polynomials.
    pub fn euler_polynomial(&self) -> HilbertPolynomial {
        (0..=self.steps.len())
            .flat_map(|i| self.twists(i).into_iter().map(move |d| if i % 2 == 0 { HilbertPolynomial::free(d as i64) } else { -HilbertPolynomial::free(d as i64) }))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{hilbert_function, Graded};
    use crate::poly::Ring;

    fn ideal(r: &Ring, text: &str) -> Submodule {
        Submodule::ideal(*r, &r.parse_list(text).unwrap()).unwrap()
    }

    #[test]
    fn three_points_hilbert_burch() {
        let r = Ring::default();
        let res = minimal_resolution(&ideal(&r, "xy, xz, yz")).unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.twists(0), [2, 2, 2]);
        assert_eq!(res.twists(1), [3, 3]);
        assert!(res.is_minimal() && res.composes_to_zero());
        for n in 0..10 {
            assert_eq!(res.euler_characteristic(n), hilbert_function(Graded::Sub(&res.resolved), n) as i64);
        }
    }

    #[test]
    fn koszul_resolution() {
        let r = Ring::default();
        let res = minimal_resolution(&ideal(&r, "x, y, x^2 + y^2")).unwrap();
        assert_eq!(res.twists(0), [1, 1]);
        assert_eq!(res.twists(1), [2]);
        let full = minimal_resolution(&ideal(&r, "x, y, z")).unwrap();
        assert_eq!(full.length(), 2);
        assert_eq!(full.twists(2), [3]);
    }

    #[test]
    fn non_saturated_ideal_has_longer_resolution() {
        let r = Ring::default();
        let res = minimal_resolution(&ideal(&r, "x^2, x*z, y^2")).unwrap();
        assert_eq!(res.length(), 2);
        assert!(res.composes_to_zero() && res.is_minimal());
    }
}
