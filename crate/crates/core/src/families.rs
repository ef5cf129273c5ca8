//! Example families: the line arrangements `Q = x L_1 L_2`, five general
//! points cut out by four cubics, and the Euler characteristic test for
//! `Sym_2 I → I²`.

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::gb::submodule_equal;
use crate::hilbert::{hilbert_function, Graded};
use crate::kv::{kv_verdict, KvReport};
use crate::modalg::{ideal_power, intersect, is_saturated, minimal_resolution, saturate};
use crate::module::{ModuleElement, Submodule};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use crate::random::{self, nonzero_scalar, point_ideal, random_element, random_point, MAX_ATTEMPTS};

/// `L_1 = Π (y - a_i x)`, `L_2 = Π (z - b_j x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementSpec {
    pub m: usize,
    pub n: usize,
    pub a: Vec<Fp>,
    pub b: Vec<Fp>,
}

impl ArrangementSpec {
    pub fn new(a: Vec<Fp>, b: Vec<Fp>) -> Result<Self> {
        let spec = ArrangementSpec { m: a.len(), n: b.len(), a, b };
        spec.validate()?;
        Ok(spec)
    }

    /// Random nonzero distinct scalars.
    pub fn random(ring: &Ring, rng: &mut ChaCha8Rng, m: usize, n: usize) -> Self {
        let mut draw = |count: usize| {
            let mut out: Vec<Fp> = Vec::with_capacity(count);
            while out.len() < count {
                let c = nonzero_scalar(ring, rng);
                if !out.contains(&c) {
                    out.push(c);
                }
            }
            out
        };
        let a = draw(m);
        let b = draw(n);
        ArrangementSpec { m, n, a, b }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 || self.a.len() != self.m || self.b.len() != self.n {
            return Err(Error::InvalidArrangement("need m, n ≥ 1 scalars on each side".into()));
        }
        for (name, s) in [("a", &self.a), ("b", &self.b)] {
            if s.iter().any(|c| c.is_zero()) {
                return Err(Error::InvalidArrangement(format!("zero scalar in {name}")));
            }
            for (i, c) in s.iter().enumerate() {
                if s[..i].contains(c) {
                    return Err(Error::InvalidArrangement(format!("repeated scalar {} in {name}", c.value())));
                }
            }
        }
        Ok(())
    }

    pub fn degree_of_z(&self) -> i64 {
        let (m, n) = (self.m as i64, self.n as i64);
        m * m + n * n + m * n
    }
}

pub fn build_arrangement(ring: &Ring, spec: &ArrangementSpec) -> Result<Polynomial> {
    spec.validate()?;
    let p = ring.characteristic() as usize;
    let degree = spec.m + spec.n + 1;
    if degree.is_multiple_of(p) {
        return Err(Error::CharacteristicDividesDegree { p: p as u32, degree: degree as u32 });
    }
    let k = ring.field();
    let mut factors = vec![ring.x()];
    factors.extend(spec.a.iter().map(|&a| ring.linear(k.neg(a), Fp::ONE, Fp::ZERO)));
    factors.extend(spec.b.iter().map(|&b| ring.linear(k.neg(b), Fp::ZERO, Fp::ONE)));
    Ok(ring.product(&factors))
}

/// The arrangement `xyz`, whose Jacobian ideal is `⟨yz, xz, xy⟩`.
pub fn coordinate_triangle(ring: &Ring) -> Polynomial {
    ring.product(&[ring.x(), ring.y(), ring.z()])
}

#[derive(Clone, Debug)]
pub struct ArrangementReport {
    pub spec: ArrangementSpec,
    pub q: Polynomial,
    pub report: KvReport,
    /// Twists of the three partial derivatives.
    pub target_twists: Vec<i32>,
    /// Twists of the relations among them.
    pub source_twists: Vec<i32>,
}

impl ArrangementReport {
    pub fn expected_source(&self) -> Vec<i32> {
        let (m, n) = (self.spec.m as i32, self.spec.n as i32);
        let mut t = vec![m + 2 * n, 2 * m + n];
        t.sort_unstable();
        t
    }

    pub fn expected_target(&self) -> Vec<i32> {
        vec![(self.spec.m + self.spec.n) as i32; 3]
    }

    /// The degree of the base locus, the conormal count, the resolution
    /// shape and both verdicts all match the closed formulas.
    pub fn formulas_hold(&self) -> bool {
        let d = self.spec.degree_of_z();
        let mut source = self.source_twists.clone();
        source.sort_unstable();
        self.report.deg_z == d
            && self.report.h_i_mod_i2.polynomial.as_constant() == Some(2 * d)
            && source == self.expected_source()
            && self.target_twists == self.expected_target()
            && self.report.k_eq_v
            && self.report.lci
    }
}

pub fn arrangement_report(ring: &Ring, spec: &ArrangementSpec) -> Result<ArrangementReport> {
    let q = build_arrangement(ring, spec)?;
    let jac = ring.jacobian(&q)?.to_vec();
    let report = kv_verdict(ring, &jac)?;
    let res = minimal_resolution(&Submodule::ideal(*ring, &jac)?)?;
    Ok(ArrangementReport { spec: spec.clone(), q, report, target_twists: res.twists(0), source_twists: res.twists(1) })
}

/// Outcome of the five points construction.
#[derive(Clone, Debug)]
pub struct FivePoints {
    pub points: Vec<[Fp; 3]>,
    /// The ideal of the five points.
    pub j: Submodule,
    pub j_degrees: Vec<i32>,
    /// `dim J_n` for `n = 0..=4`.
    pub j_dims: Vec<u64>,
    /// Four random cubics through the points.
    pub cubics: Vec<Polynomial>,
    pub report: KvReport,
    /// `saturate(⟨f⟩) = J`.
    pub same_scheme: bool,
    pub attempts: usize,
}

impl FivePoints {
    pub fn witness(&self) -> Option<&ModuleElement> {
        self.report.witness.as_ref()
    }

    pub fn holds(&self) -> Result<bool> {
        Ok(self.j_degrees == [2, 3, 3]
            && self.j_dims[2] == 1
            && self.j_dims[3] == 5
            && self.same_scheme
            && self.report.deg_z == 5
            && self.report.lci
            && !self.report.k_eq_v
            && self.report.k.generators().len() == 6
            && self.report.witness_is_valid()?)
    }
}

fn det3(ring: &Ring, p: [Fp; 3], q: [Fp; 3], r: [Fp; 3]) -> Fp {
    let k = ring.field();
    let minor = |a: Fp, b: Fp, c: Fp, d: Fp| k.sub(k.mul(a, d), k.mul(b, c));
    let t0 = k.mul(p[0], minor(q[1], q[2], r[1], r[2]));
    let t1 = k.mul(p[1], minor(q[0], q[2], r[0], r[2]));
    let t2 = k.mul(p[2], minor(q[0], q[1], r[0], r[1]));
    k.add(k.sub(t0, t1), t2)
}

/// No three of the points on a line.
fn in_general_position(ring: &Ring, pts: &[[Fp; 3]]) -> bool {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            if (0..3).all(|c| ring.field().mul(pts[i][c], pts[j][0]) == ring.field().mul(pts[j][c], pts[i][0])) {
                return false;
            }
            for l in j + 1..n {
                if det3(ring, pts[i], pts[j], pts[l]).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Five random points in general position, their ideal `J`, and four random
/// cubics in `J`, redrawn until every genericity condition is certified.
pub fn five_points_counterexample(ring: &Ring, seed: u64) -> Result<FivePoints> {
    let mut rng = random::rng(seed);
    let mut reason = String::new();
    for attempt in 1..=MAX_ATTEMPTS {
        let points: Vec<[Fp; 3]> = (0..5).map(|_| random_point(ring, &mut rng)).collect();
        if !in_general_position(ring, &points) {
            reason = "three points on a line".into();
            continue;
        }
        let mut j = point_ideal(ring, points[0]);
        for &p in &points[1..] {
            j = intersect(&j, &point_ideal(ring, p))?;
        }
        let mut j_degrees = j.generator_degrees();
        j_degrees.sort_unstable();
        let j_dims: Vec<u64> = (0..=4).map(|n| hilbert_function(Graded::Sub(&j), n)).collect();
        if j_degrees != [2, 3, 3] || j_dims[2] != 1 || j_dims[3] != 5 {
            reason = format!("ideal of the points has generator degrees {j_degrees:?}");
            continue;
        }
        let cubics: Vec<Polynomial> = (0..4).map(|_| random_element(ring, &mut rng, &j, 3)).collect();
        let f = Submodule::ideal(*ring, &cubics)?;
        if f.generators().len() < 4 || !submodule_equal(&saturate(&f)?, &j)? {
            reason = "cubics cut out more than the points".into();
            continue;
        }
        let report = kv_verdict(ring, &cubics)?;
        return Ok(FivePoints { points, j, j_degrees, j_dims, cubics, report, same_scheme: true, attempts: attempt });
    }
    Err(Error::Genericity { attempts: MAX_ATTEMPTS, reason })
}

/// Comparison of the Euler characteristic of the complex resolving
/// `Sym_2 I` with the Hilbert function of `I²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sym2Report {
    /// Twists of the generators.
    pub a: Vec<i32>,
    /// Twists of the relations.
    pub b: Vec<i32>,
    /// `χ(n) - H(I²)(n)` for `n = 0..=2 max a + 3`.
    pub discrepancy: Vec<i64>,
    pub total_discrepancy: i64,
    pub verdict_iso: bool,
}

fn free_dim(n: i64, d: i32) -> i64 {
    Monomial::count_of_degree(n - d as i64) as i64
}

/// `Σ_{j≤k} H(R(-a_j-a_k)) - Σ_{i,j} H(R(-b_i-a_j)) + Σ_{i<i'} H(R(-b_i-b_i'))`.
pub fn sym2_euler(a: &[i32], b: &[i32], n: i64) -> i64 {
    let mut chi = 0;
    for j in 0..a.len() {
        for k in j..a.len() {
            chi += free_dim(n, a[j] + a[k]);
        }
    }
    for &bi in b {
        for &aj in a {
            chi -= free_dim(n, bi + aj);
        }
    }
    for i in 0..b.len() {
        for l in i + 1..b.len() {
            chi += free_dim(n, b[i] + b[l]);
        }
    }
    chi
}

pub fn sym2_euler_check(i: &Submodule) -> Result<Sym2Report> {
    if !is_saturated(i)? {
        return Err(Error::NotSaturated);
    }
    let res = minimal_resolution(i)?;
    if res.length() != 1 {
        return Err(Error::NotCodimTwo(format!("resolution has length {}", res.length())));
    }
    let (a, b) = (res.twists(0), res.twists(1));
    let square = ideal_power(i, 2)?;
    let top = 2 * a.iter().copied().max().unwrap_or(0) as i64 + 3;
    let discrepancy: Vec<i64> =
        (0..=top).map(|n| sym2_euler(&a, &b, n) - hilbert_function(Graded::Sub(&square), n) as i64).collect();
    let total_discrepancy = discrepancy.iter().sum();
    let verdict_iso = discrepancy.iter().all(|&d| d == 0);
    Ok(Sym2Report { a, b, discrepancy, total_discrepancy, verdict_iso })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arrangement() {
        let r = Ring::default();
        let k = r.field();
        let spec = ArrangementSpec::new(vec![k.elem(1)], vec![k.elem(1)]).unwrap();
        let q = build_arrangement(&r, &spec).unwrap();
        let factors = r.parse_list("x, y - x, z - x").unwrap();
        assert_eq!(q, r.product(&factors));
        let rep = arrangement_report(&r, &spec).unwrap();
        assert_eq!(rep.report.deg_z, 3);
        assert_eq!(rep.source_twists, [3, 3]);
        assert!(rep.formulas_hold());
    }

    #[test]
    fn rejects_bad_scalars() {
        let r = Ring::default();
        let k = r.field();
        assert!(ArrangementSpec::new(vec![k.elem(1), k.elem(1)], vec![k.elem(2)]).is_err());
        assert!(ArrangementSpec::new(vec![k.elem(0)], vec![k.elem(2)]).is_err());
        let small = Ring::new(3).unwrap();
        let spec = ArrangementSpec::new(vec![small.field().elem(1)], vec![small.field().elem(2)]).unwrap();
        assert!(matches!(build_arrangement(&small, &spec), Err(Error::CharacteristicDividesDegree { .. })));
    }

    #[test]
    fn sym2_on_fixtures() {
        let r = Ring::default();
        let ideal = |s: &str| Submodule::ideal(r, &r.parse_list(s).unwrap()).unwrap();
        let tri = sym2_euler_check(&ideal("xy, xz, yz")).unwrap();
        assert!(tri.verdict_iso);
        let ci = sym2_euler_check(&ideal("x, y")).unwrap();
        assert!(ci.verdict_iso);
        let fat = sym2_euler_check(&ideal("x^2, x*y, y^2")).unwrap();
        assert!(!fat.verdict_iso && fat.total_discrepancy >= 1);
        assert!(fat.discrepancy.iter().all(|&d| d >= 0));
        assert!(matches!(sym2_euler_check(&ideal("x^2, x*z, y^2")), Err(Error::NotSaturated)));
    }
}
