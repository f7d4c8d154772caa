use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rationals with arbitrary precision.
pub type Q = BigRational;

/// Shorthand for the rational `num/den`.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn rational_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Q::new(a, b))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// A commutative field with exact equality.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Eq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn from_i64(v: i64) -> Self;
    /// Characteristic; 0 for the rationals.
    fn characteristic() -> u64;
    /// Short name used in serialized output ("Q", "F2", ...).
    fn name() -> String;
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Option<Self>;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Q {
    fn from_i64(v: i64) -> Self {
        Q::from_integer(BigInt::from(v))
    }
    fn characteristic() -> u64 {
        0
    }
    fn name() -> String {
        "Q".into()
    }
    fn to_text(&self) -> String {
        rational_to_string(self)
    }
    fn from_text(s: &str) -> Option<Self> {
        parse_rational(s)
    }
}

/// Integers modulo a small prime `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    pub fn value(self) -> u64 {
        self.0
    }
    /// All field elements in increasing order.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(Fp)
    }
    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        assert!(o.0 != 0, "division by zero in F_{P}");
        self * o.pow(P - 2)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn characteristic() -> u64 {
        P
    }
    fn name() -> String {
        format!("F{P}")
    }
    fn to_text(&self) -> String {
        self.0.to_string()
    }
    fn from_text(s: &str) -> Option<Self> {
        let v: i64 = s.trim().parse().ok()?;
        Some(Fp::new(v))
    }
}

/// Reduce a rational into `F_P`; fails if the denominator vanishes mod P.
pub fn reduce_mod_p<const P: u64>(x: &Q) -> Option<Fp<P>> {
    let p = BigInt::from(P);
    let num = x.numer().mod_floor_big(&p);
    let den = x.denom().mod_floor_big(&p);
    if den.is_zero() {
        return None;
    }
    let n: u64 = num.try_into().ok()?;
    let d: u64 = den.try_into().ok()?;
    Some(Fp::<P>(n) / Fp::<P>(d))
}

trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_roundtrip() {
        for (n, d) in [(0, 1), (3, 1), (-7, 2), (5, -10)] {
            let x = q(n, d);
            assert_eq!(parse_rational(&rational_to_string(&x)), Some(x));
        }
        assert_eq!(rational_to_string(&q(6, 4)), "3/2");
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn fp_inverse() {
        for a in F3::elements().skip(1) {
            assert_eq!(a * a.inv(), F3::one());
        }
        assert_eq!(F2::new(-1), F2::one());
        assert_eq!(reduce_mod_p::<3>(&q(1, 2)), Some(F3::new(2)));
    }
}
