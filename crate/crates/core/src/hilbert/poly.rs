use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A Hilbert polynomial of degree at most two, `c₂n² + c₁n + c₀`.
///
/// Stored as `2·H`, whose coefficients are integers for every graded module
/// over k[x,y,z].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct HilbertPolynomial {
    twice: [i64; 3],
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        HilbertPolynomial { twice: [2 * c, 0, 0] }
    }

    /// From `2·H = t₀ + t₁n + t₂n²`.
    pub fn from_twice(twice: [i64; 3]) -> Self {
        HilbertPolynomial { twice }
    }

    /// `H(R(-d))(n) = (n - d + 1)(n - d + 2) / 2`.
    pub fn free(d: i64) -> Self {
        HilbertPolynomial { twice: [(d - 1) * (d - 2), 3 - 2 * d, 1] }
    }

    /// The polynomial through three consecutive values at `n, n+1, n+2`.
    pub fn fit(n: i64, values: [i64; 3]) -> Self {
        let [v0, v1, v2] = values;
        // Newton form around n: v0 + Δ(t - n) + Δ²(t - n)(t - n - 1)/2
        let d1 = v1 - v0;
        let d2 = v2 - 2 * v1 + v0;
        let t2 = d2;
        let t1 = 2 * d1 - d2 * (2 * n + 1);
        let t0 = 2 * v0 - 2 * d1 * n + d2 * n * (n + 1);
        HilbertPolynomial { twice: [t0, t1, t2] }
    }

    pub fn eval(&self, n: i64) -> i64 {
        let [a, b, c] = self.twice;
        let two_h = a + b * n + c * n * n;
        debug_assert_eq!(two_h % 2, 0, "Hilbert polynomial value not integral");
        two_h / 2
    }

    /// Coefficients `(c₀, c₁, c₂)` as reduced fractions `(numerator, denominator)`.
    pub fn coefficients(&self) -> [(i64, i64); 3] {
        self.twice.map(|t| {
            let g = gcd(t, 2).max(1);
            (t / g, 2 / g)
        })
    }

    pub fn twice(&self) -> [i64; 3] {
        self.twice
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (0..3).rev().find(|&i| self.twice[i] != 0)
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<i64> {
        (self.twice[1] == 0 && self.twice[2] == 0).then(|| self.twice[0] / 2)
    }

    pub fn scale(&self, c: i64) -> Self {
        HilbertPolynomial { twice: self.twice.map(|t| t * c) }
    }

    /// `n ↦ H(n - d)`, the polynomial of the twist `M(-d)`.
    pub fn shift(&self, d: i64) -> Self {
        let [a, b, c] = self.twice;
        HilbertPolynomial { twice: [a - b * d + c * d * d, b - 2 * c * d, c] }
    }
}

impl Add for HilbertPolynomial {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        HilbertPolynomial { twice: [self.twice[0] + o.twice[0], self.twice[1] + o.twice[1], self.twice[2] + o.twice[2]] }
    }
}

impl Sub for HilbertPolynomial {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for HilbertPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl std::iter::Sum for HilbertPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), Add::add)
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, (num, den)) in self.coefficients().into_iter().enumerate().rev() {
            if num == 0 {
                continue;
            }
            let c = if den == 1 { format!("{num}") } else { format!("{num}/{den}") };
            let power = if i == 1 { "n" } else { "n^2" };
            parts.push(match (i, num, den) {
                (0, _, _) => c,
                (_, 1, 1) => power.to_string(),
                (_, -1, 1) => format!("-{power}"),
                _ => format!("{c}*{power}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom2(n: i64) -> i64 {
        if n < 0 {
            0
        } else {
            (n + 1) * (n + 2) / 2
        }
    }

    #[test]
    fn polynomial_of_the_ring() {
        let h = HilbertPolynomial::free(0);
        assert_eq!(h.coefficients(), [(1, 1), (3, 2), (1, 2)]);
        for n in 0..20 {
            assert_eq!(h.eval(n), binom2(n));
        }
    }

    #[test]
    fn twist_identity() {
        // H(R(i))(n) = H(R)(n + i)
        for d in -3..6 {
            let h = HilbertPolynomial::free(d);
            assert_eq!(h, HilbertPolynomial::free(0).shift(d));
            for n in d..d + 10 {
                assert_eq!(h.eval(n), binom2(n - d));
            }
        }
    }

    #[test]
    fn fit_recovers() {
        let h = HilbertPolynomial::from_twice([2, -3, 5]);
        for n in -4..10 {
            assert_eq!(HilbertPolynomial::fit(n, [h.eval(n), h.eval(n + 1), h.eval(n + 2)]), h);
        }
        assert_eq!(HilbertPolynomial::fit(9, [3, 3, 3]), HilbertPolynomial::constant(3));
    }

    #[test]
    fn display() {
        assert_eq!(HilbertPolynomial::free(0).to_string(), "1/2*n^2 + 3/2*n + 1");
        assert_eq!(HilbertPolynomial::constant(3).to_string(), "3");
        assert_eq!(HilbertPolynomial::from_twice([0, -2, 0]).to_string(), "-n");
    }
}
