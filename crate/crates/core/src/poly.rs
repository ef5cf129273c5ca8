//! Polynomials in k[x,y,z] and the ring context that owns their arithmetic.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::monomial::{Monomial, Var};

/// A polynomial as a list of nonzero terms, strictly decreasing in grevlex.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Polynomial {
    pub(crate) terms: Vec<(Fp, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Fp, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Fp, Monomial)> {
        self.terms.first().copied()
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// The common degree of all terms, or `None` for a non-homogeneous or
    /// zero polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.1.degree();
        self.terms.iter().all(|(_, m)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Fp {
        self.terms
            .binary_search_by(|(_, t)| m.cmp(t))
            .map(|i| self.terms[i].0)
            .unwrap_or(Fp::ZERO)
    }
}

/// The polynomial ring k[x,y,z] over a fixed prime field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Ring {
    field: PrimeField,
}

impl Ring {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Ring { field: PrimeField::new(p)? })
    }

    pub fn with_field(field: PrimeField) -> Self {
        Ring { field }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.term(self.field.elem(c), Monomial::ONE)
    }

    pub fn var(&self, v: Var) -> Polynomial {
        self.term(Fp::ONE, Monomial::var(v))
    }

    pub fn x(&self) -> Polynomial {
        self.var(0)
    }

    pub fn y(&self) -> Polynomial {
        self.var(1)
    }

    pub fn z(&self) -> Polynomial {
        self.var(2)
    }

    pub fn term(&self, c: Fp, m: Monomial) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(c, m)] }
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Fp, Monomial)>) -> Polynomial {
        let mut acc: HashMap<Monomial, Fp> = HashMap::new();
        for (c, m) in terms {
            let e = acc.entry(m).or_insert(Fp::ZERO);
            *e = self.field.add(*e, c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.1));
        Polynomial { terms }
    }

    /// Same as [`Ring::from_terms`] with integer coefficients.
    pub fn from_int_terms(&self, terms: &[(i64, [u16; 3])]) -> Polynomial {
        self.from_terms(terms.iter().map(|&(c, e)| (self.field.elem(c), Monomial::new(e))))
    }

    fn merge(&self, f: &Polynomial, g: &Polynomial, g_scale: Fp) -> Polynomial {
        let k = &self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            let (a, ma) = f.terms[i];
            let (b, mb) = g.terms[j];
            match ma.cmp(&mb) {
                std::cmp::Ordering::Greater => {
                    out.push((a, ma));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((k.mul(b, g_scale), mb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = k.add(a, k.mul(b, g_scale));
                    if !c.is_zero() {
                        out.push((c, ma));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        out.extend(g.terms[j..].iter().map(|&(b, m)| (k.mul(b, g_scale), m)));
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, Fp::ONE)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, self.field.neg(Fp::ONE))
    }

    /// `f + c * g`.
    pub fn add_scaled(&self, f: &Polynomial, c: Fp, g: &Polynomial) -> Polynomial {
        if c.is_zero() {
            return f.clone();
        }
        self.merge(f, g, c)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(Fp::ONE))
    }

    pub fn scale(&self, f: &Polynomial, c: Fp) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|&(a, m)| (self.field.mul(a, c), m)).collect() }
    }

    /// `c * m * f`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, c: Fp, m: &Monomial, f: &Polynomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|&(a, t)| (self.field.mul(a, c), t.mul(m))).collect() }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let (short, long) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for &(c, m) in &short.terms {
            acc = self.add(&acc, &self.mul_term(c, &m, long));
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, f))
    }

    pub fn product<'a>(&self, fs: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        fs.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_term() {
            None => Polynomial::zero(),
            Some((c, _)) => self.scale(f, self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self, f: &Polynomial, v: Var) -> Polynomial {
        let terms = f.terms.iter().filter_map(|&(c, m)| {
            m.differentiate(v).map(|(e, q)| (self.field.mul(c, self.field.elem(e as i64)), q))
        });
        self.from_terms(terms)
    }

    /// The partial derivatives `(Q_x, Q_y, Q_z)` of a homogeneous form whose
    /// degree is not divisible by the characteristic.
    pub fn jacobian(&self, q: &Polynomial) -> Result<[Polynomial; 3]> {
        let d = q
            .homogeneous_degree()
            .ok_or_else(|| Error::NotHomogeneous("jacobian needs a nonzero homogeneous form".into()))?;
        if d % self.characteristic() == 0 {
            return Err(Error::CharacteristicDividesDegree { p: self.characteristic(), degree: d });
        }
        Ok([self.derivative(q, 0), self.derivative(q, 1), self.derivative(q, 2)])
    }

    pub fn eval(&self, f: &Polynomial, point: [Fp; 3]) -> Fp {
        let k = &self.field;
        f.terms.iter().fold(Fp::ZERO, |acc, &(c, m)| {
            let e = m.exps();
            let v = (0..3).fold(c, |v, i| k.mul(v, k.pow(point[i], e[i] as u64)));
            k.add(acc, v)
        })
    }

    /// Linear form `a x + b y + c z`.
    pub fn linear(&self, a: Fp, b: Fp, c: Fp) -> Polynomial {
        self.from_terms([(a, Monomial::var(0)), (b, Monomial::var(1)), (c, Monomial::var(2))])
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(self, text)
    }

    /// Parses a comma-separated list of polynomials.
    pub fn parse_list(&self, text: &str) -> Result<Vec<Polynomial>> {
        crate::parse::parse_list(self, text)
    }

    pub fn display<'a>(&'a self, f: &'a Polynomial) -> PolyDisplay<'a> {
        PolyDisplay { ring: self, poly: f }
    }
}

/// Printer with explicit `*` between factors and symmetric coefficients.
pub struct PolyDisplay<'a> {
    ring: &'a Ring,
    poly: &'a Polynomial,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, &(c, m)) in self.poly.terms.iter().enumerate() {
            let c = self.ring.field().signed(c);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
