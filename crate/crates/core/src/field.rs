//! Arithmetic in the prime field GF(p).

use std::fmt;

use crate::error::{Error, Result};

/// Default characteristic used throughout the crate.
pub const DEFAULT_PRIME: u32 = 32003;

/// A residue class modulo the session prime, stored as its canonical
/// representative in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp(pub(crate) u32);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(p). The prime is checked at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Primes are limited to 31 bits so products fit in a `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into the field.
    pub fn elem(&self, n: i64) -> Fp {
        Fp(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: Fp, b: Fp) -> Fp {
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(&self, a: Fp, b: Fp) -> Fp {
        Fp(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    pub fn neg(&self, a: Fp) -> Fp {
        Fp(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(&self, a: Fp, b: Fp) -> Fp {
        Fp(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: Fp, mut e: u64) -> Fp {
        let mut base = a;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: Fp) -> Result<Fp> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.elem(t0))
    }

    pub fn div(&self, a: Fp, b: Fp) -> Result<Fp> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(&self, a: Fp) -> i64 {
        if a.0 > self.p / 2 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_two() {
        let k = PrimeField::default();
        assert_eq!(k.inv(Fp(2)).unwrap(), Fp(16002));
        assert_eq!(k.mul(Fp(2), Fp(16002)), Fp::ONE);
    }

    #[test]
    fn zero_has_no_inverse() {
        let k = PrimeField::default();
        let err = k.inv(Fp::ZERO).unwrap_err();
        assert_eq!(err.to_string(), "zero has no inverse");
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn signed_representative() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.signed(Fp(6)), -1);
        assert_eq!(k.signed(Fp(3)), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn field_axioms(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
            let k = PrimeField::default();
            let (a, b, c) = (Fp(a), Fp(b), Fp(c));
            prop_assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
            prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
            prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
            prop_assert_eq!(k.add(a, k.neg(a)), Fp::ZERO);
            prop_assert_eq!(k.mul(Fp::ONE, a), a);
            prop_assert_eq!(k.sub(a, b), k.add(a, k.neg(b)));
            if !a.is_zero() {
                prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), Fp::ONE);
            }
        }
    }
}
