use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `a + b·√2` of `Q(√2)` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRat {
    a: BigRational,
    b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadRat {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRat { a, b }
    }

    /// `(an/ad) + (bn/bd)·√2`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QuadRat {
            a: rat(an, ad),
            b: rat(bn, bd),
        }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::from_ratios(a, 1, b, 1)
    }

    pub fn from_integer(a: BigInt) -> Self {
        QuadRat {
            a: BigRational::from_integer(a),
            b: BigRational::zero(),
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadRat {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as an integer, when the `√2` part vanishes and the rational
    /// part has denominator 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn conjugate(&self) -> Self {
        QuadRat {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² − 2b²`, zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(QuadRat {
            a: c.a / &n,
            b: c.b / n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            // opposite signs: the larger magnitude wins; a² = 2b² is impossible
            (x, y) => {
                let two_b2 = BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b;
                if &self.a * &self.a > two_b2 {
                    x
                } else {
                    y
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// `value · 10^digits` rounded towards an integer, within 2 units of the
    /// exact floor.
    pub fn approx_scaled(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits);
        let a_part = (&self.a * BigRational::from_integer(scale.clone()))
            .floor()
            .to_integer();
        // |b|·√2·10^d = sqrt(2·p²·10^{2d} / q²)
        let (p, q) = (self.b.numer(), self.b.denom());
        let radicand = (BigInt::from(2) * p * p * &scale * &scale) / (q * q);
        let b_part = radicand.sqrt();
        match self.b.numer().sign() {
            Sign::Minus => a_part - b_part,
            _ => a_part + b_part,
        }
    }

    /// Fixed-point decimal rendering with `digits` fractional digits (the last
    /// digit may be off by up to two units).
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let scaled = self.approx_scaled(digits);
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let d = digits as usize;
        let padded = format!("{s:0>width$}", width = d + 1);
        let (int, frac) = padded.split_at(padded.len() - d);
        format!("{}{int}.{frac}", if neg { "-" } else { "" })
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Add for &QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        QuadRat {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        QuadRat {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadRat {
    type Output = QuadRat;
    /// `(a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2`.
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        let two = BigRational::from_integer(BigInt::from(2));
        QuadRat {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for &QuadRat {
    type Output = QuadRat;
    fn div(self, rhs: &QuadRat) -> QuadRat {
        self.checked_div(rhs)
            .expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sqrt_part = if self.b.is_one() {
            "sqrt(2)".to_owned()
        } else if (-&self.b).is_one() {
            "-sqrt(2)".to_owned()
        } else {
            format!("{}*sqrt(2)", self.b)
        };
        if self.a.is_zero() {
            f.write_str(&sqrt_part)
        } else if let Some(rest) = sqrt_part.strip_prefix('-') {
            write!(f, "{} - {rest}", self.a)
        } else {
            write!(f, "{} + {sqrt_part}", self.a)
        }
    }
}
