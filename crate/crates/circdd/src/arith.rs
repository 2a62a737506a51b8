//! Small exact-arithmetic helpers shared across the crate: gcd/egcd, modular
//! inverses, checked binomials and a reduced `i128` rational.

/// Greatest common divisor (non-negative).
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended Euclid on `i128`: returns (g, s, t) with `s*a + t*b = g >= 0`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `x` modulo `n`, if `gcd(x, n) = 1`.
pub fn mod_inverse(x: u64, n: u64) -> Option<u64> {
    let (g, s, _) = egcd((x % n) as i128, n as i128);
    if g != 1 {
        return None;
    }
    Some(s.rem_euclid(n as i128) as u64)
}

/// Exact binomial coefficient in `i128`, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<i128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128)?;
        acc /= (i + 1) as i128; // exact: product of j consecutive integers is divisible by j!
    }
    Some(acc)
}

/// Reduced rational with `i128` numerator and positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let mut r = Rational { num, den };
        r.reduce();
        r
    }

    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    pub fn from_int(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    fn reduce(&mut self) {
        if self.den < 0 {
            self.num = -self.num;
            self.den = -self.den;
        }
        let g = gcd_i128(self.num.unsigned_abs(), self.den.unsigned_abs());
        if g > 1 {
            self.num /= g as i128;
            self.den /= g as i128;
        }
    }

    pub fn mul(self, other: Rational) -> Rational {
        // cross-reduce first so intermediates stay small
        let g1 = gcd_i128(self.num.unsigned_abs(), other.den.unsigned_abs()) as i128;
        let g2 = gcd_i128(other.num.unsigned_abs(), self.den.unsigned_abs()) as i128;
        Rational::new(
            (self.num / g1) * (other.num / g2),
            (self.den / g2) * (other.den / g1),
        )
    }

    pub fn div(self, other: Rational) -> Rational {
        assert!(other.num != 0, "division by zero rational");
        self.mul(Rational::new(other.den, other.num))
    }

    pub fn pow(self, e: u32) -> Rational {
        let mut acc = Rational::from_int(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // denominators are positive and cross products stay within i128 here
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

fn gcd_i128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn egcd_bezout() {
        for (a, b) in [(12, 18), (35, 64), (1, 7), (0, 5), (1099, 53)] {
            let (g, s, t) = egcd(a, b);
            assert_eq!(s * a + t * b, g);
            assert_eq!(g, gcd(a as u64, b as u64) as i128);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        for n in [7u64, 13, 56, 1099] {
            for x in 1..n.min(60) {
                if gcd(x, n) == 1 {
                    let inv = mod_inverse(x, n).unwrap();
                    assert_eq!(x as u128 * inv as u128 % n as u128, 1);
                } else {
                    assert!(mod_inverse(x, n).is_none());
                }
            }
        }
    }

    #[test]
    fn rational_reduction() {
        let r = Rational::new(1920, 3125);
        assert_eq!((r.num(), r.den()), (384, 625));
        assert_eq!(r, Rational::new(-1920, -3125));
        assert_eq!(Rational::new(4, 5).pow(4), Rational::new(256, 625));
        assert_eq!(
            Rational::new(1, 2).mul(Rational::new(4, 6)),
            Rational::new(1, 3)
        );
    }
}
