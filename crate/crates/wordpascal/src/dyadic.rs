//! Exact dyadic rationals k/2^e, the coordinate type of all geometry here.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// An exact dyadic rational `num / 2^exp`.
///
/// The representation is canonical: `num` is odd, or `exp` is zero. This
/// makes derived equality and hashing coincide with numeric equality.
/// All arithmetic provided is exact; there is no rounding anywhere.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

// Exponent ceiling: keeps alignment shifts and squared numerators inside
// i128 range.
const MAX_EXP: u32 = 96;

impl Dyadic {
    pub fn new(num: i64, exp: u32) -> Self {
        assert!(exp <= MAX_EXP, "dyadic exponent {exp} too deep");
        let mut d = Dyadic { num, exp };
        d.reduce();
        d
    }

    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    pub fn from_int(n: i64) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    /// 2^e for any integer e (negative e gives a fraction).
    pub fn pow2(e: i32) -> Self {
        if e >= 0 {
            assert!(e < 63, "dyadic overflow");
            Dyadic::from_int(1i64 << e)
        } else {
            let exp = (-e) as u32;
            assert!(exp <= MAX_EXP, "dyadic exponent {exp} too deep");
            Dyadic { num: 1, exp }
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    fn reduce(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    /// Exact product with 2^k.
    pub fn mul_pow2(&self, k: i32) -> Self {
        if self.num == 0 {
            return *self;
        }
        if k >= 0 {
            let k = k as u32;
            if k <= self.exp {
                Dyadic {
                    num: self.num,
                    exp: self.exp - k,
                }
            } else {
                let shift = k - self.exp;
                assert!(shift <= 80, "dyadic overflow");
                let shifted = (self.num as i128) << shift;
                Dyadic {
                    num: i64::try_from(shifted).expect("dyadic overflow"),
                    exp: 0,
                }
            }
        } else {
            let exp = self.exp + (-k) as u32;
            assert!(exp <= MAX_EXP, "dyadic exponent {exp} too deep");
            Dyadic { num: self.num, exp }
        }
    }

    pub fn halved(&self, times: u32) -> Self {
        self.mul_pow2(-(times as i32))
    }

    /// Exact conversion; panics if the numerator does not fit a double.
    pub fn to_f64(&self) -> f64 {
        assert!(
            self.num.unsigned_abs() < (1u64 << 53),
            "dyadic exceeds f64 precision"
        );
        self.num as f64 * (self.exp as f64).exp2().recip()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    // Numerators over a common exponent, for exact comparison/addition.
    fn aligned(&self, other: &Self) -> (i128, i128, u32) {
        let exp = self.exp.max(other.exp);
        let a = (self.num as i128) << (exp - self.exp);
        let b = (other.num as i128) << (exp - other.exp);
        (a, b, exp)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl std::ops::Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(&rhs);
        let sum = a + b;
        assert!(i64::try_from(sum).is_ok(), "dyadic overflow");
        Dyadic::new(sum as i64, exp)
    }
}

impl std::ops::Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + Dyadic {
            num: -rhs.num,
            exp: rhs.exp,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
