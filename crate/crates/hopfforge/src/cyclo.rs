//! Exact arithmetic in Q(ζ₈).
//!
//! A [`Scalar`] is `c0 + c1·ζ + c2·ζ² + c3·ζ³` with `ζ⁴ = −1`. Coefficients are
//! [`Rational`]s that stay in machine words while they fit and promote to
//! big integers otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar `{0}`")]
    Parse(String),
}

/// Reduced fraction with positive denominator. The representation is canonical:
/// `Small` whenever numerator and denominator fit in an `i64`.
#[derive(Clone, Debug)]
pub enum Rational {
    Small(i64, i64),
    Big(BigInt, BigInt),
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => a == c && b == d,
            (Rational::Big(a, b), Rational::Big(c, d)) => a == c && b == d,
            _ => false,
        }
    }
}
impl Eq for Rational {}

impl std::hash::Hash for Rational {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Rational::Small(a, b) => {
                0u8.hash(state);
                a.hash(state);
                b.hash(state);
            }
            Rational::Big(a, b) => {
                1u8.hash(state);
                a.hash(state);
                b.hash(state);
            }
        }
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational::Small(0, 1);
    pub const ONE: Rational = Rational::Small(1, 1);

    pub fn from_int(n: i64) -> Self {
        Rational::Small(n, 1)
    }

    pub fn new(num: i64, den: i64) -> Result<Self, CycloError> {
        if den == 0 {
            return Err(CycloError::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Rational::ZERO;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rational::Small(a, b),
            _ => Rational::Big(BigInt::from(n), BigInt::from(d)),
        }
    }

    pub fn from_big(n: BigInt, d: BigInt) -> Result<Self, CycloError> {
        if d.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        Ok(Self::normalize_big(n, d))
    }

    fn normalize_big(mut n: BigInt, mut d: BigInt) -> Self {
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if !g.is_one() && !g.is_zero() {
            n /= &g;
            d /= &g;
        }
        if n.is_zero() {
            return Rational::ZERO;
        }
        match (n.to_i64(), d.to_i64()) {
            (Some(a), Some(b)) => Rational::Small(a, b),
            _ => Rational::Big(n, d),
        }
    }

    fn to_big(&self) -> (BigInt, BigInt) {
        match self {
            Rational::Small(a, b) => (BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(a, b) => (a.clone(), b.clone()),
        }
    }

    pub fn numer(&self) -> BigInt {
        self.to_big().0
    }

    pub fn denom(&self) -> BigInt {
        self.to_big().1
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(a, b) => match a.checked_neg() {
                Some(na) => Rational::Small(na, *b),
                None => Self::normalize_big(-BigInt::from(*a), BigInt::from(*b)),
            },
            Rational::Big(a, b) => Self::normalize_big(-a.clone(), b.clone()),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => {
                let (a, b) = self.to_big();
                let (c, d) = o.to_big();
                Self::normalize_big(a * &d + c * &b, b * d)
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Rational::ZERO;
        }
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => {
                let (a, b) = self.to_big();
                let (c, d) = o.to_big();
                Self::normalize_big(a * c, b * d)
            }
        }
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        match self {
            Rational::Small(0, _) => Err(CycloError::DivisionByZero),
            Rational::Small(a, b) => Ok(Self::from_i128(*b as i128, *a as i128)),
            Rational::Big(a, b) => Ok(Self::normalize_big(b.clone(), a.clone())),
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            Rational::Small(a, _) => a.cmp(&0),
            Rational::Big(a, _) => a.sign().cmp(&num_bigint::Sign::NoSign),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(a, b) => write!(f, "{a}/{b}"),
            Rational::Big(a, b) => write!(f, "{a}/{b}"),
        }
    }
}

impl FromStr for Rational {
    type Err = CycloError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| CycloError::Parse(s.to_string()))?;
        let d = BigInt::from_str(d).map_err(|_| CycloError::Parse(s.to_string()))?;
        Rational::from_big(n, d)
    }
}

/// Element of Q(ζ₈) in the power basis 1, ζ, ζ², ζ³.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub c: [Rational; 4],
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            c: [Rational::ZERO, Rational::ZERO, Rational::ZERO, Rational::ZERO],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut s = Self::zero();
        s.c[0] = Rational::from_int(n);
        s
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut s = Self::zero();
        s.c[0] = r;
        s
    }

    /// `n/d` as a scalar. Panics on `d = 0`; use [`Rational::new`] for fallible input.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n, d).expect("nonzero denominator"))
    }

    pub fn from_coeffs(c: [Rational; 4]) -> Self {
        Scalar { c }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Scalar {
            c: c.map(Rational::from_int),
        }
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut s = Self::zero();
        if k < 4 {
            s.c[k] = Rational::ONE;
        } else {
            s.c[k - 4] = Rational::from_int(-1);
        }
        s
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rational::is_zero)
    }

    /// Rational part if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (k odd).
    pub fn galois(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (i, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let e = (i as i64 * k).rem_euclid(8) as usize;
            let (idx, neg) = if e < 4 { (e, false) } else { (e - 4, true) };
            let term = if neg { r.neg() } else { r.clone() };
            out.c[idx] = out.c[idx].add(&term);
        }
        out
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.inv()?));
        }
        let p = &(&self.galois(3) * &self.galois(5)) * &self.galois(7);
        let norm = self * &p;
        let n = norm
            .as_rational()
            .expect("field norm is rational")
            .inv()?;
        Ok(p.scale(&n))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Scalar {
            c: [
                self.c[0].mul(r),
                self.c[1].mul(r),
                self.c[2].mul(r),
                self.c[3].mul(r),
            ],
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<Self, CycloError> {
        s.parse()
    }

    /// Human-readable form such as `1/2 + ζ - 3ζ^3`.
    pub fn pretty(&self) -> String {
        let mut parts = Vec::new();
        for (i, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let (num, den) = (r.numer(), r.denom());
            let coef = if den.is_one() {
                num.to_string()
            } else {
                format!("{num}/{den}")
            };
            let term = match i {
                0 => coef,
                _ => {
                    let z = if i == 1 { "ζ".to_string() } else { format!("ζ^{i}") };
                    match coef.as_str() {
                        "1" => z,
                        "-1" => format!("-{z}"),
                        _ => format!("{coef}{z}"),
                    }
                }
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// ξ = ζ², a primitive fourth root of unity.
pub fn xi() -> Scalar {
    Scalar::zeta_pow(2)
}

/// √2 = ζ − ζ³.
pub fn sqrt2() -> Scalar {
    Scalar::from_ints([0, 1, 0, -1])
}

/// ξ^k, with k reduced mod 4.
pub fn xi_pow(k: i64) -> Scalar {
    Scalar::zeta_pow(2 * k.rem_euclid(4))
}

/// (−1)^k.
pub fn sign_pow(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

impl FromStr for Scalar {
    type Err = CycloError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(CycloError::Parse(s.to_string()));
        }
        let mut c = [Rational::ZERO, Rational::ZERO, Rational::ZERO, Rational::ZERO];
        for (slot, p) in c.iter_mut().zip(parts) {
            if !p.contains('/') {
                return Err(CycloError::Parse(s.to_string()));
            }
            *slot = p.parse()?;
        }
        Ok(Scalar { c })
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar {
            c: [
                self.c[0].add(&o.c[0]),
                self.c[1].add(&o.c[1]),
                self.c[2].add(&o.c[2]),
                self.c[3].add(&o.c[3]),
            ],
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar {
            c: [
                self.c[0].sub(&o.c[0]),
                self.c[1].sub(&o.c[1]),
                self.c[2].sub(&o.c[2]),
                self.c[3].sub(&o.c[3]),
            ],
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let mut acc = [Rational::ZERO, Rational::ZERO, Rational::ZERO, Rational::ZERO];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if o.c[j].is_zero() {
                    continue;
                }
                let p = self.c[i].mul(&o.c[j]);
                let k = i + j;
                if k >= 4 {
                    acc[k - 4] = acc[k - 4].sub(&p);
                } else {
                    acc[k] = acc[k].add(&p);
                }
            }
        }
        Scalar { c: acc }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            c: [self.c[0].neg(), self.c[1].neg(), self.c[2].neg(), self.c[3].neg()],
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        for i in 0..4 {
            if !o.c[i].is_zero() {
                self.c[i] = self.c[i].add(&o.c[i]);
            }
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        for i in 0..4 {
            if !o.c[i].is_zero() {
                self.c[i] = self.c[i].sub(&o.c[i]);
            }
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        let z = Scalar::zeta();
        assert_eq!(&z * &Scalar::zeta_pow(3), Scalar::from_int(-1));
        assert_eq!(z.pow(8), Scalar::one());
        assert_eq!(z.pow(4), Scalar::from_int(-1));
        assert_eq!(&xi() * &xi(), Scalar::from_int(-1));
        assert_eq!(&sqrt2() * &sqrt2(), Scalar::from_int(2));
    }

    #[test]
    fn inverses() {
        assert_eq!(Scalar::zeta().inv().unwrap(), -Scalar::zeta_pow(3));
        assert_eq!(Scalar::from_int(2).inv().unwrap(), Scalar::frac(1, 2));
        assert_eq!(xi().inv().unwrap(), -xi());
        assert_eq!(Scalar::zero().inv(), Err(CycloError::DivisionByZero));
        let s = Scalar::from_ints([3, -1, 2, 5]);
        assert!((&s * &s.inv().unwrap()).is_one());
    }

    #[test]
    fn constants() {
        assert_eq!(xi_pow(2), Scalar::from_int(-1));
        assert_eq!(xi_pow(-1), -xi());
        assert_eq!(&sqrt2() * &xi(), Scalar::from_ints([0, 1, 0, 1]));
    }

    #[test]
    fn text_round_trip() {
        let s = Scalar::from_coeffs([
            Rational::new(1, 2).unwrap(),
            Rational::ZERO,
            Rational::from_int(-1),
            Rational::ZERO,
        ]);
        assert_eq!(s.to_string(), "1/2,0/1,-1/1,0/1");
        assert_eq!("1/2,0/1,-1/1,0/1".parse::<Scalar>().unwrap(), s);
        assert!("1/0,0/1,0/1,0/1".parse::<Scalar>().is_err());
        assert!("1/2,0/1,0/1".parse::<Scalar>().is_err());
    }

    #[test]
    fn promotion_to_big_and_back() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.c[0], Rational::Big(..)));
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back.c[0], Rational::Small(..)));
        let round: Scalar = sq.to_string().parse().unwrap();
        assert_eq!(round, sq);
    }

    #[test]
    fn pretty_print() {
        assert_eq!(Scalar::zero().pretty(), "0");
        assert_eq!(sqrt2().pretty(), "ζ - ζ^3");
        assert_eq!(Scalar::frac(-1, 2).pretty(), "-1/2");
    }
}
