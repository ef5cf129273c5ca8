//! Hilbert functions and Hilbert polynomials of graded submodules and
//! quotients, read off from leading terms of Gröbner bases.
//!
//! A position `j` of the ambient module contributes the standard monomials
//! of degree `n - d_j` not divisible by any leading monomial at `j`. The
//! independent check in [`oracle`] never touches a Gröbner basis.

pub mod oracle;
mod poly;

pub use poly::HilbertPolynomial;

use crate::error::{Error, Result};
use crate::module::Submodule;
use crate::monomial::Monomial;

/// Largest degree examined unless the caller says otherwise.
pub const DEFAULT_DEGREE_CAP: u32 = 256;

/// Which graded module a presentation stands for.
#[derive(Clone, Copy, Debug)]
pub enum Graded<'a> {
    /// `M` itself, as a submodule of its ambient free module.
    Sub(&'a Submodule),
    /// The quotient `F / M`.
    Quotient(&'a Submodule),
}

impl<'a> Graded<'a> {
    fn module(&self) -> &'a Submodule {
        match *self {
            Graded::Sub(m) | Graded::Quotient(m) => m,
        }
    }
}

/// Leading monomial ideals, one per ambient position.
struct LeadIdeals {
    twists: Vec<i32>,
    leads: Vec<Vec<Monomial>>,
}

impl LeadIdeals {
    fn of(m: &Submodule) -> Self {
        let twists = m.ambient().twists().to_vec();
        let mut leads = vec![Vec::new(); twists.len()];
        for (mon, pos) in m.gb().leading_terms() {
            leads[pos].push(mon);
        }
        LeadIdeals { twists, leads }
    }

    /// Standard monomials in degree `n` of the quotient.
    fn standard_count(&self, n: i64) -> u64 {
        let mut total = 0;
        for (j, &d) in self.twists.iter().enumerate() {
            let e = n - d as i64;
            if e < 0 {
                continue;
            }
            let leads = &self.leads[j];
            if leads.is_empty() {
                total += Monomial::count_of_degree(e);
                continue;
            }
            total += Monomial::all_of_degree(e as u32)
                .iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count() as u64;
        }
        total
    }

    /// A degree from which the quotient's Hilbert function is polynomial:
    /// the numerator of the Hilbert series has degree at most the degree of
    /// the lcm of all leading monomials at a position.
    fn regularity_bound(&self) -> i64 {
        self.twists
            .iter()
            .zip(&self.leads)
            .map(|(&d, leads)| {
                let e: i64 = (0..3).map(|v| leads.iter().map(|l| l.exp(v) as i64).max().unwrap_or(0)).sum();
                e + d as i64 - 2
            })
            .max()
            .unwrap_or(0)
    }

    fn max_lead_degree(&self) -> i64 {
        self.twists
            .iter()
            .zip(&self.leads)
            .flat_map(|(&d, ls)| ls.iter().map(move |l| l.degree() as i64 + d as i64))
            .max()
            .unwrap_or(0)
    }
}

/// `dim_k` of the degree-`n` piece.
pub fn hilbert_function(m: Graded<'_>, n: i64) -> u64 {
    let sub = m.module();
    let q = LeadIdeals::of(sub).standard_count(n);
    match m {
        Graded::Quotient(_) => q,
        Graded::Sub(_) => sub.ambient().dim(n) - q,
    }
}

/// Hilbert function values over a certified range together with the
/// Hilbert polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `values[n]` is the dimension in degree `n`.
    pub values: Vec<u64>,
    /// The polynomial agrees with the values from this degree on.
    pub stable_from: u32,
    pub polynomial: HilbertPolynomial,
}

impl HilbertData {
    pub fn value(&self, n: i64) -> i64 {
        if n < 0 {
            0
        } else if let Some(&v) = self.values.get(n as usize) {
            v as i64
        } else {
            self.polynomial.eval(n)
        }
    }

    /// Degree-wise `self - other`, for `other` a quotient of `self`.
    pub fn difference(&self, other: &HilbertData) -> HilbertData {
        let len = self.values.len().max(other.values.len());
        let values = (0..len as i64).map(|n| (self.value(n) - other.value(n)) as u64).collect();
        HilbertData {
            values,
            stable_from: self.stable_from.max(other.stable_from),
            polynomial: self.polynomial - other.polynomial,
        }
    }
}

pub fn hilbert_polynomial(m: Graded<'_>) -> Result<HilbertData> {
    hilbert_polynomial_capped(m, DEFAULT_DEGREE_CAP)
}

/// Computes values up to `max(bound + 6, top lead degree + 3)`, fits the
/// polynomial on the last three and certifies it on the four before.
pub fn hilbert_polynomial_capped(m: Graded<'_>, degree_cap: u32) -> Result<HilbertData> {
    let sub = m.module();
    let lead = LeadIdeals::of(sub);
    let top = (lead.regularity_bound() + 6).max(lead.max_lead_degree() + 3).max(6);
    if top > degree_cap as i64 {
        return Err(Error::Stabilization(degree_cap));
    }
    let values: Vec<u64> = (0..=top)
        .map(|n| {
            let q = lead.standard_count(n);
            match m {
                Graded::Quotient(_) => q,
                Graded::Sub(_) => sub.ambient().dim(n) - q,
            }
        })
        .collect();
    let at = |n: i64| values[n as usize] as i64;
    let polynomial = HilbertPolynomial::fit(top - 2, [at(top - 2), at(top - 1), at(top)]);
    if (top - 6..top - 2).any(|n| polynomial.eval(n) != at(n)) {
        return Err(Error::Stabilization(top as u32));
    }
    let mut stable_from = top - 2;
    while stable_from > 0 && polynomial.eval(stable_from - 1) == at(stable_from - 1) {
        stable_from -= 1;
    }
    Ok(HilbertData { values, stable_from: stable_from as u32, polynomial })
}

/// `deg Z`: the constant Hilbert polynomial of `R / I^sat`.
pub fn degree_of_z(ideal: &Submodule) -> Result<i64> {
    if ideal.ambient().rank() != 1 {
        return Err(Error::AmbientMismatch("degree of Z needs an ideal".into()));
    }
    let sat = crate::modalg::saturate(ideal)?;
    let h = hilbert_polynomial(Graded::Quotient(&sat))?.polynomial;
    match h.degree() {
        None => Err(Error::NotCodimTwo("empty base locus".into())),
        Some(0) => Ok(h.as_constant().expect("constant")),
        Some(d) => Err(Error::NotZeroDimensional(d)),
    }
}
