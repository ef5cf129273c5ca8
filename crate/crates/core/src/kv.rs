//! The syzygy module S of a codimension-two ideal, its Koszul part K and its
//! vanishing part V, and the verdicts comparing them.
//!
//! For `I = ⟨f_1, …, f_r⟩` with `d_j = deg f_j`, all three live in
//! `⊕ R(-d_j)`: S is the kernel of `e_j ↦ f_j`, K is spanned by the Koszul
//! relations and V collects the syzygies whose entries lie in `I^sat`.
//! Always `K ⊆ V ⊆ S`. For three generators K = V exactly when I is a local
//! complete intersection, which is decided independently through
//! `H(I/I²) = 2 deg Z`.

use crate::error::{Error, Result};
use crate::gb::{self, submodule_equal};
use crate::hilbert::{hilbert_polynomial_capped, Graded, HilbertData, HilbertPolynomial, DEFAULT_DEGREE_CAP};
use crate::modalg::{self, ideal_power, ideal_product, ideal_times_free, intersect, is_saturated, koszul_submodule, saturate};
use crate::module::{ModuleElement, Submodule};
use crate::poly::{Polynomial, Ring};

/// The ideal generated by `f`, after checking that every form is nonzero and
/// homogeneous.
pub fn input_ideal(ring: &Ring, f: &[Polynomial]) -> Result<Submodule> {
    if f.len() < 2 {
        return Err(Error::InvalidInput(format!("need at least two generators, got {}", f.len())));
    }
    for (i, g) in f.iter().enumerate() {
        if g.is_zero() {
            return Err(Error::InvalidInput(format!("generator {} is zero", i + 1)));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("generator {}", i + 1)));
        }
    }
    Submodule::ideal(*ring, f)
}

/// `deg Z`, after checking that `R/I` has a nonzero constant Hilbert
/// polynomial.
pub fn check_codim_two(i: &Submodule, degree_cap: u32) -> Result<i64> {
    let h = hilbert_polynomial_capped(Graded::Quotient(i), degree_cap)?.polynomial;
    match h.degree() {
        None => Err(Error::NotCodimTwo("empty base locus (codimension three)".into())),
        Some(0) => Ok(h.as_constant().expect("constant")),
        Some(d) => Err(Error::NotZeroDimensional(d)),
    }
}

pub fn build_s(ring: &Ring, f: &[Polynomial]) -> Result<Submodule> {
    let i = input_ideal(ring, f)?;
    check_codim_two(&i, DEFAULT_DEGREE_CAP)?;
    modalg::syzygies(&i)
}

fn vanishing(s: &Submodule, sat: &Submodule) -> Result<Submodule> {
    intersect(s, &ideal_times_free(sat, s.ambient())?)
}

pub fn build_v(ring: &Ring, f: &[Polynomial]) -> Result<Submodule> {
    let i = input_ideal(ring, f)?;
    check_codim_two(&i, DEFAULT_DEGREE_CAP)?;
    let s = modalg::syzygies(&i)?;
    vanishing(&s, &saturate(&i)?)
}

/// Everything computed for one ideal.
#[derive(Clone, Debug)]
pub struct KvReport {
    pub generators: Vec<Polynomial>,
    pub degrees: Vec<i32>,
    pub deg_z: i64,
    pub saturation: Submodule,
    pub s: Submodule,
    pub k: Submodule,
    pub v: Submodule,
    pub h_k: HilbertData,
    pub h_v: HilbertData,
    pub h_i_mod_i2: HilbertData,
    /// `H(I/I²) - 2 deg Z`, never negative.
    pub herzog_slack: i64,
    pub k_eq_v: bool,
    pub lci: bool,
    /// `k_eq_v == lci` for three generators; vacuously true otherwise.
    pub consistent: bool,
    /// A generator of V outside K, when there is one.
    pub witness: Option<ModuleElement>,
}

pub fn kv_verdict(ring: &Ring, f: &[Polynomial]) -> Result<KvReport> {
    kv_verdict_capped(ring, f, DEFAULT_DEGREE_CAP)
}

pub fn kv_verdict_capped(ring: &Ring, f: &[Polynomial], degree_cap: u32) -> Result<KvReport> {
    let i = input_ideal(ring, f)?;
    let deg_z = check_codim_two(&i, degree_cap)?;
    let degrees: Vec<i32> = f.iter().map(|g| g.homogeneous_degree().expect("checked") as i32).collect();
    let saturation = saturate(&i)?;
    let s = modalg::syzygies(&i)?;
    let k = koszul_submodule(ring, f)?;
    let v = vanishing(&s, &saturation)?;

    let h_k = hilbert_polynomial_capped(Graded::Sub(&k), degree_cap)?;
    let h_v = hilbert_polynomial_capped(Graded::Sub(&v), degree_cap)?;
    let quotient_i = hilbert_polynomial_capped(Graded::Quotient(&i), degree_cap)?;
    let square = ideal_power(&i, 2)?;
    let quotient_i2 = hilbert_polynomial_capped(Graded::Quotient(&square), degree_cap)?;
    let h_i_mod_i2 = quotient_i2.difference(&quotient_i);
    let conormal = h_i_mod_i2
        .polynomial
        .as_constant()
        .ok_or_else(|| Error::NotCodimTwo(format!("H(I/I^2) = {} is not constant", h_i_mod_i2.polynomial)))?;
    let herzog_slack = conormal - 2 * deg_z;

    let k_eq_v = submodule_equal(&k, &v)?;
    let lci = herzog_slack == 0;
    let consistent = f.len() != 3 || k_eq_v == lci;
    let witness = if k_eq_v { None } else { find_witness(&k, &v)? };
    Ok(KvReport {
        generators: f.to_vec(),
        degrees,
        deg_z,
        saturation,
        s,
        k,
        v,
        h_k,
        h_v,
        h_i_mod_i2,
        herzog_slack,
        k_eq_v,
        lci,
        consistent,
        witness,
    })
}

/// A generator of `v` of least degree that is not in `k`.
fn find_witness(k: &Submodule, v: &Submodule) -> Result<Option<ModuleElement>> {
    let gb = k.gb();
    let mut best: Option<(i32, ModuleElement)> = None;
    for (g, d) in v.generators().iter().zip(v.generator_degrees()) {
        if best.as_ref().is_some_and(|(b, _)| *b <= d) {
            continue;
        }
        if !gb.contains(g)? {
            best = Some((d, g.clone()));
        }
    }
    Ok(best.map(|(_, g)| g))
}

impl KvReport {
    /// `Σ_j H(R(-d_j)) - H(R)`.
    pub fn koszul_expected(&self) -> HilbertPolynomial {
        self.degrees.iter().map(|&d| HilbertPolynomial::free(d as i64)).sum::<HilbertPolynomial>() - HilbertPolynomial::free(0)
    }

    /// The witness annihilates the generators, has entries in `I^sat` and is
    /// not in K.
    pub fn witness_is_valid(&self) -> Result<bool> {
        let Some(w) = &self.witness else { return Ok(false) };
        let ring = self.s.ring();
        let sat = self.saturation.gb();
        let mut ok = ring.dot(w, &self.generators).is_zero() && !self.k.gb().contains(w)?;
        for c in w.components() {
            ok &= sat.contains(&ModuleElement::from_poly(c.clone()))?;
        }
        Ok(ok)
    }

    /// `K ⊆ V ⊆ S` on generators.
    pub fn containment_chain(&self) -> Result<bool> {
        Ok(gb::is_subset(&self.k, &self.v)? && gb::is_subset(&self.v, &self.s)?)
    }

    /// Polynomial identities tying K, V and the conormal module together.
    pub fn identities(&self) -> Identities {
        let base = self.koszul_expected();
        Identities {
            koszul: self.degrees.len() != 3 || self.h_k.polynomial == base,
            vanishing: self.degrees.len() != 3
                || self.h_v.polynomial == base + HilbertPolynomial::constant(self.herzog_slack),
            equality_by_hilbert: self.k_eq_v == (self.h_k.polynomial == self.h_v.polynomial),
        }
    }
}

/// Outcomes of the Hilbert polynomial identities; the first two are only
/// meaningful for three generators and read `true` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Identities {
    /// `H(K) = Σ H(R(-d_j)) - H(R)`.
    pub koszul: bool,
    /// `H(V) = Σ H(R(-d_j)) - H(R) + H(I/I²) - 2 deg Z`.
    pub vanishing: bool,
    /// `K = V ⟺ H(K) = H(V)`.
    pub equality_by_hilbert: bool,
}

impl Identities {
    pub fn all(&self) -> bool {
        self.koszul && self.vanishing && self.equality_by_hilbert
    }
}

/// `K` and `V` are both saturated.
pub fn check_saturated_kv(report: &KvReport) -> Result<bool> {
    Ok(is_saturated(&report.k)? && is_saturated(&report.v)?)
}

/// `I²` and `I·I^sat` have the same saturation.
pub fn check_i2_isat(ring: &Ring, f: &[Polynomial]) -> Result<bool> {
    let i = input_ideal(ring, f)?;
    let sat = saturate(&i)?;
    let square = saturate(&ideal_power(&i, 2)?)?;
    let mixed = saturate(&ideal_product(&i, &sat)?)?;
    submodule_equal(&square, &mixed)
}

/// Results of the Koszul complex checks for three generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KoszulChain {
    /// The relations among the Koszul generators are spanned by
    /// `(f_3, -f_2, f_1)`.
    pub second_syzygy: bool,
    /// `H(K) = Σ_{j<k} H(R(-d_j-d_k)) - H(R(-d_1-d_2-d_3))`.
    pub hilbert: bool,
    /// `K ≠ S`: the complex is not exact when the base locus is nonempty.
    pub strict: bool,
}

impl KoszulChain {
    pub fn all(&self) -> bool {
        self.second_syzygy && self.hilbert && self.strict
    }
}

pub fn koszul_chain_checks(ring: &Ring, f: &[Polynomial]) -> Result<KoszulChain> {
    if f.len() != 3 {
        return Err(Error::InvalidInput(format!("Koszul chain checks need three generators, got {}", f.len())));
    }
    let i = input_ideal(ring, f)?;
    check_codim_two(&i, DEFAULT_DEGREE_CAP)?;
    let k = koszul_submodule(ring, f)?;
    let s = modalg::syzygies(&i)?;

    let relations = modalg::syzygies(&Submodule::new(*ring, k.ambient().clone(), k.generators().to_vec())?)?;
    let expected = ModuleElement::new(vec![f[2].clone(), ring.neg(&f[1]), f[0].clone()]);
    let second_syzygy = relations.generators().len() == 1
        && gb::submodule_equal(&relations, &Submodule::new(*ring, relations.ambient().clone(), vec![expected])?)?;

    let d: Vec<i64> = f.iter().map(|g| g.homogeneous_degree().expect("checked") as i64).collect();
    let pairs = HilbertPolynomial::free(d[0] + d[1]) + HilbertPolynomial::free(d[0] + d[2]) + HilbertPolynomial::free(d[1] + d[2]);
    let expected_h = pairs - HilbertPolynomial::free(d.iter().sum());
    let hilbert = crate::hilbert::hilbert_polynomial(Graded::Sub(&k))?.polynomial == expected_h;

    let strict = !submodule_equal(&k, &s)?;
    Ok(KoszulChain { second_syzygy, hilbert, strict })
}
