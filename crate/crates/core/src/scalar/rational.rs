use super::Field;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational number with an inline fast path.
///
/// Values whose reduced numerator and denominator fit in an `i64` are kept
/// inline and combined through `i128` intermediates; anything larger is
/// promoted to a heap [`BigRational`] and demoted again as soon as it fits.
/// The representation is canonical, so derived equality and hashing are
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// `num / den`, `den > 0`, `gcd(num, den) = 1`, `num != i64::MIN`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(0, 1));
    pub const ONE: Rational = Rational(Repr::Small(1, 1));

    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_integer(v: i64) -> Rational {
        if v == i64::MIN {
            return Self::from_big(BigRational::from_integer(BigInt::from(v)));
        }
        Rational(Repr::Small(v, 1))
    }

    /// Normalises an arbitrary `i128` fraction.
    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        if num == 0 {
            return Rational::ZERO;
        }
        let (mut n, mut d) = if den < 0 {
            match (num.checked_neg(), den.checked_neg()) {
                (Some(n), Some(d)) => (n, d),
                _ => return Self::from_big(big_frac(num, den)),
            }
        } else {
            (num, den)
        };
        let g = (n.unsigned_abs()).gcd(&(d as u128));
        if g > 1 {
            n /= g as i128;
            d /= g as i128;
        }
        Self::from_reduced_i128(n, d)
    }

    /// `n / d` already reduced with `d > 0`.
    fn from_reduced_i128(n: i128, d: i128) -> Rational {
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    /// Demotes a (reduced) big rational when it fits inline.
    pub fn from_big(v: BigRational) -> Rational {
        if let (Some(n), Some(d)) = (v.numer().to_i64(), v.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(Box::new(v)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            Repr::Small(..) => None,
            Repr::Big(b) if b.is_integer() => b.numer().to_i64(),
            Repr::Big(_) => None,
        }
    }

    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small(..))
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Rational {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn add_ref(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a, *b, *c, *d);
            if b == 1 && d == 1 {
                return Self::from_reduced_i128(a as i128 + c as i128, 1);
            }
            if b == d {
                return Self::from_i128(a as i128 + c as i128, b as i128);
            }
            let num = (a as i128 * d as i128).checked_add(c as i128 * b as i128);
            if let Some(num) = num {
                return Self::from_i128(num, b as i128 * d as i128);
            }
        }
        Self::from_big(self.to_big() + rhs.to_big())
    }

    fn mul_ref(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a, *b, *c, *d);
            if a == 0 || c == 0 {
                return Rational::ZERO;
            }
            if b == 1 && d == 1 {
                return Self::from_reduced_i128(a as i128 * c as i128, 1);
            }
            let g1 = (a.unsigned_abs()).gcd(&(d as u64)) as i64;
            let g2 = (c.unsigned_abs()).gcd(&(b as u64)) as i64;
            let num = (a / g1) as i128 * (c / g2) as i128;
            let den = (b / g2) as i128 * (d / g1) as i128;
            return Self::from_reduced_i128(num, den);
        }
        Self::from_big(self.to_big() * rhs.to_big())
    }

    fn recip_ref(&self) -> Rational {
        match &self.0 {
            Repr::Small(0, _) => panic!("division by zero"),
            Repr::Small(n, d) => {
                if *n < 0 {
                    Rational(Repr::Small(-*d, -*n))
                } else {
                    Rational(Repr::Small(*d, *n))
                }
            }
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }
}

fn big_frac(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from_integer(v as i64)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational::from_big(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        self.add_ref(rhs)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self.add_ref(&-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        self.mul_ref(rhs)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.mul_ref(&rhs.recip_ref())
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, d)),
            Repr::Big(b) => Rational::from_big(-*b),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::ONE
    }
}

impl Field for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }

    fn inv(&self) -> Self {
        self.recip_ref()
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        // all-integer inline case without touching the gcd path
        if let (Repr::Small(s, 1), Repr::Small(x, 1), Repr::Small(y, 1)) = (&self.0, &a.0, &b.0) {
            let v = *s as i128 - *x as i128 * *y as i128;
            *self = Rational::from_reduced_i128(v, 1);
            return;
        }
        let t = a.mul_ref(b);
        *self = self.add_ref(&-t);
    }

    fn magnitude_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}
