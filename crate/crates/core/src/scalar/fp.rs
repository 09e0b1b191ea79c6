use super::Field;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Element of the prime field of order `2^61 - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub const MODULUS: u64 = (1 << 61) - 1;

    pub fn new(v: u64) -> Fp {
        Fp(v % Self::MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce128(x: u128) -> u64 {
        let p = Self::MODULUS as u128;
        let lo = x & p;
        let hi = x >> 61;
        let mut s = lo + hi;
        while s >= p {
            s -= p;
        }
        s as u64
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod p)", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let s = self.0 + rhs.0;
        Fp(if s >= Self::MODULUS { s - Self::MODULUS } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp(self.0 + Self::MODULUS - rhs.0)
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(Self::reduce128(self.0 as u128 * rhs.0 as u128))
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv()
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(Self::MODULUS - self.0)
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Field for Fp {
    fn from_i64(v: i64) -> Self {
        let m = Self::MODULUS as i128;
        Fp((v as i128).rem_euclid(m) as u64)
    }

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(Self::MODULUS - 2)
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = *self - *a * *b;
    }

    fn magnitude_cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    fn is_integral(&self) -> bool {
        true
    }
}
