//! Monomials in x, y, z.

use std::cmp::Ordering;
use std::fmt;

/// Index of a variable: 0 = x, 1 = y, 2 = z.
pub type Var = usize;

pub const VARIABLES: [char; 3] = ['x', 'y', 'z'];

/// A monomial `x^a y^b z^c` with its total degree cached.
///
/// `Ord` is graded reverse lexicographic with `x > y > z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; 3],
    deg: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; 3], deg: 0 };

    pub fn new(exps: [u16; 3]) -> Self {
        Monomial { exps, deg: exps[0] + exps[1] + exps[2] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 3];
        exps[v] = 1;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> [u16; 3] {
        self.exps
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.exps[v]
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps[0] <= other.exps[0] && self.exps[1] <= other.exps[1] && self.exps[2] <= other.exps[2]
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exps: [
                other.exps[0] - self.exps[0],
                other.exps[1] - self.exps[1],
                other.exps[2] - self.exps[2],
            ],
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new([
            self.exps[0].max(other.exps[0]),
            self.exps[1].max(other.exps[1]),
            self.exps[2].max(other.exps[2]),
        ])
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..3).all(|v| self.exps[v] == 0 || other.exps[v] == 0)
    }

    /// Derivative exponent bookkeeping: `(multiplier, m / v)` or `None` when
    /// `v` does not occur.
    pub fn differentiate(&self, v: Var) -> Option<(u16, Monomial)> {
        if self.exps[v] == 0 {
            return None;
        }
        let mut exps = self.exps;
        exps[v] -= 1;
        Some((self.exps[v], Monomial::new(exps)))
    }

    /// A 48-bit key whose integer order is grevlex.
    pub(crate) fn grevlex_key(&self) -> u64 {
        ((self.deg as u64) << 32)
            | ((0xFFFF - self.exps[2] as u64) << 16)
            | (0xFFFF - self.exps[1] as u64)
    }

    /// All monomials of the given degree, in descending grevlex order.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
        let d = d as u16;
        for c in 0..=d {
            for b in 0..=(d - c) {
                out.push(Monomial::new([d - b - c, b, c]));
            }
        }
        out
    }

    /// Number of monomials of degree `d` in three variables; zero for negative `d`.
    pub fn count_of_degree(d: i64) -> u64 {
        if d < 0 {
            0
        } else {
            let d = d as u64;
            (d + 1) * (d + 2) / 2
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_key().cmp(&other.grevlex_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", VARIABLES[v])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: u16, b: u16, c: u16) -> Monomial {
        Monomial::new([a, b, c])
    }

    #[test]
    fn grevlex_order() {
        // x > y > z
        assert!(m(1, 0, 0) > m(0, 1, 0));
        assert!(m(0, 1, 0) > m(0, 0, 1));
        // degree first
        assert!(m(0, 0, 2) > m(1, 0, 0));
        // x*z^1 vs y^2: reverse lex on z: fewer z is bigger
        assert!(m(0, 2, 0) > m(1, 0, 1));
        assert!(m(1, 1, 0) > m(0, 2, 0));
    }

    #[test]
    fn all_of_degree_is_sorted_and_complete() {
        let ms = Monomial::all_of_degree(4);
        assert_eq!(ms.len(), 15);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn division_and_lcm() {
        assert_eq!(m(1, 1, 0).quotient_of(&m(2, 1, 3)), Some(m(1, 0, 3)));
        assert_eq!(m(1, 1, 0).quotient_of(&m(2, 0, 3)), None);
        assert_eq!(m(2, 0, 1).lcm(&m(1, 3, 0)), m(2, 3, 1));
        assert!(m(1, 0, 0).is_coprime(&m(0, 4, 1)));
    }
}
