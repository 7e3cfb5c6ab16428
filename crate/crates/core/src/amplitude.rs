//! Exact amplitudes `m · (√2)^(−e)`.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The number `m · (√2)^(−e)`, kept normalized: `e < 2` or `m` odd, and
/// zero is `(0, 0)`. Two normalized amplitudes are equal exactly when
/// their values are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Amplitude {
    m: BigInt,
    e: u32,
}

impl Amplitude {
    pub fn new(m: impl Into<BigInt>, e: u32) -> Amplitude {
        let mut m = m.into();
        let mut e = e;
        if m.is_zero() {
            return Amplitude::zero();
        }
        while e >= 2 && m.is_even() {
            m >>= 1;
            e -= 2;
        }
        Amplitude { m, e }
    }

    pub fn zero() -> Amplitude {
        Amplitude { m: BigInt::zero(), e: 0 }
    }

    pub fn one() -> Amplitude {
        Amplitude { m: BigInt::one(), e: 0 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.m
    }

    pub fn sqrt2_exponent(&self) -> u32 {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Sum, or `None` when the two values lie in different cosets
    /// (one rational, the other a rational multiple of √2), whose sum
    /// has no `m · (√2)^(−e)` form.
    pub fn checked_add(&self, rhs: &Amplitude) -> Option<Amplitude> {
        if self.is_zero() {
            return Some(rhs.clone());
        }
        if rhs.is_zero() {
            return Some(self.clone());
        }
        if self.e % 2 != rhs.e % 2 {
            return None;
        }
        let e = self.e.max(rhs.e);
        let scale = |a: &Amplitude| -> BigInt { &a.m << ((e - a.e) / 2) };
        Some(Amplitude::new(scale(self) + scale(rhs), e))
    }

    pub fn to_f64(&self) -> f64 {
        let m: f64 = self.m.to_string().parse().unwrap_or(f64::NAN);
        m / 2f64.sqrt().powi(self.e as i32)
    }
}

impl Add for &Amplitude {
    type Output = Amplitude;

    /// # Panics
    ///
    /// When the sum is not representable; see [`Amplitude::checked_add`].
    fn add(self, rhs: &Amplitude) -> Amplitude {
        self.checked_add(rhs)
            .unwrap_or_else(|| panic!("{self} + {rhs} is not of the form m/√2^e"))
    }
}

impl Add for Amplitude {
    type Output = Amplitude;

    fn add(self, rhs: Amplitude) -> Amplitude {
        &self + &rhs
    }
}

impl Mul for &Amplitude {
    type Output = Amplitude;

    fn mul(self, rhs: &Amplitude) -> Amplitude {
        Amplitude::new(&self.m * &rhs.m, self.e + rhs.e)
    }
}

impl Mul for Amplitude {
    type Output = Amplitude;

    fn mul(self, rhs: Amplitude) -> Amplitude {
        &self * &rhs
    }
}

impl Neg for Amplitude {
    type Output = Amplitude;

    fn neg(self) -> Amplitude {
        Amplitude { m: -self.m, e: self.e }
    }
}

impl Neg for &Amplitude {
    type Output = Amplitude;

    fn neg(self) -> Amplitude {
        -self.clone()
    }
}

impl fmt::Display for Amplitude {
    /// `0`, `±k`, `±k/2^j` for even `e`; `±k/√2` or `±k/(2^j·√2)` for odd
    /// `e`. Powers of two are written out in decimal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = self.e / 2;
        let denom = BigInt::one() << j;
        let text = match (self.e % 2, j) {
            (0, 0) => self.m.to_string(),
            (0, _) => format!("{}/{}", self.m, denom),
            (_, 0) => format!("{}/√2", self.m),
            _ => format!("{}/({}·√2)", self.m, denom),
        };
        f.pad(&text)
    }
}

impl FromStr for Amplitude {
    type Err = Error;

    fn from_str(s: &str) -> Result<Amplitude> {
        let bad = || Error::InvalidArgument(format!("`{s}` is not an amplitude"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let m: BigInt = num.parse().map_err(|_| bad())?;
        let e = match den {
            None => 0,
            Some("√2") => 1,
            Some(d) => {
                let (power, odd) = match d.strip_prefix('(').and_then(|d| d.strip_suffix("·√2)")) {
                    Some(p) => (p, 1),
                    None => (d, 0),
                };
                let p: BigInt = power.parse().map_err(|_| bad())?;
                if !p.is_positive() || p.bits() == 0 || (&p & (&p - 1u32)) != BigInt::zero() || p.is_one() {
                    return Err(bad());
                }
                2 * (p.bits() as u32 - 1) + odd
            }
        };
        let a = Amplitude::new(m, e);
        if a.to_string() != s {
            return Err(bad());
        }
        Ok(a)
    }
}
