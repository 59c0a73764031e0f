use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Error;

/// An element of the prime field `F_p` for an odd prime `p`, kept in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

/// Largest modulus accepted; keeps products inside `u128` and primality
/// checks cheap.
pub const MAX_MODULUS: u64 = 1 << 32;

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_modulus(p: u64) -> Result<(), Error> {
    if p > MAX_MODULUS || !is_odd_prime(p) {
        return Err(Error::InvalidInput(format!(
            "{p} is not an odd prime below 2^32"
        )));
    }
    Ok(())
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Result<Self, Error> {
        check_modulus(modulus)?;
        let v = value.rem_euclid(modulus as i64) as u64;
        Ok(Fp { value: v, modulus })
    }

    pub(crate) fn from_reduced(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Fp { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// Reduces a rational number modulo `p`; fails when `p` divides the denominator.
    pub fn from_rational(q: &BigRational, modulus: u64) -> Result<Self, Error> {
        check_modulus(modulus)?;
        let m = BigInt::from(modulus);
        let num = mod_u64(q.numer(), &m);
        let den = mod_u64(q.denom(), &m);
        if den == 0 {
            return Err(Error::BadPrime { prime: modulus });
        }
        let den_inv = Fp::from_reduced(den, modulus).inv();
        Ok(Fp::from_reduced(num, modulus).mul(den_inv))
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, other: Fp) -> Fp {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Fp::from_reduced(s as u64, self.modulus)
    }

    pub fn sub(self, other: Fp) -> Fp {
        self.add(other.neg())
    }

    pub fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            Fp::from_reduced(self.modulus - self.value, self.modulus)
        }
    }

    pub fn mul(self, other: Fp) -> Fp {
        debug_assert_eq!(self.modulus, other.modulus);
        let p = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Fp::from_reduced(p as u64, self.modulus)
    }

    /// Multiplicative inverse by Fermat's little theorem. Panics on zero.
    pub fn inv(self) -> Fp {
        assert!(!self.is_zero(), "inverse of zero in F_{}", self.modulus);
        let mut base = self;
        let mut exp = self.modulus - 2;
        let mut acc = Fp::from_reduced(1, self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            exp >>= 1;
        }
        acc
    }
}

fn mod_u64(x: &BigInt, m: &BigInt) -> u64 {
    let r = ((x % m) + m) % m;
    r.to_u64().expect("residue fits in u64")
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Exact coefficient: a rational number or an element of a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular(Fp),
}

/// The field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Modular(x) => FieldKind::Prime(x.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular(x) => x.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular(_) => None,
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<Fp> for Scalar {
    fn from(x: Fp) -> Self {
        Scalar::Modular(x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", format_rational(q)),
            Scalar::Modular(x) => write!(f, "{x}"),
        }
    }
}

/// Canonical text form: `n` for integers, `n/d` otherwise (denominator positive).
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

pub(crate) fn rational_is_integer(q: &BigRational) -> bool {
    q.denom().is_one() || q.denom().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_canonical_representative() {
        let x = Fp::new(-1, 7).unwrap();
        assert_eq!(x.value(), 6);
        assert_eq!(x.mul(x.inv()).value(), 1);
        assert!(Fp::new(1, 9).is_err());
        assert!(Fp::new(1, 2).is_err());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        let x = Fp::from_rational(&q, 7).unwrap();
        assert_eq!(x.value(), 4);
        let bad = BigRational::new(BigInt::from(1), BigInt::from(14));
        assert_eq!(
            Fp::from_rational(&bad, 7),
            Err(Error::BadPrime { prime: 7 })
        );
    }

    #[test]
    fn rational_text_roundtrip() {
        let q = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational(" 12 ").unwrap()), "12");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
