//! Ground fields and exact scalars.
//!
//! Two fields are supported: the rationals (arbitrary precision) and prime
//! fields `GF(p)` with `2 <= p < 2^31`. A [`Scalar`] always knows which kind
//! of field it belongs to; residues additionally carry their modulus so the
//! arithmetic operators can be implemented without a context argument.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// The field of definition of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

/// An exact field element in canonical form.
///
/// Rationals are stored reduced with a positive denominator (guaranteed by
/// `BigRational`); residues lie in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

/// Deterministic Miller-Rabin for 32-bit inputs (bases 2, 7, 61 suffice).
pub fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 61] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    let n64 = n as u64;
    let mut d = n64 - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a, d, n64);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n64;
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn inv_mod(value: u32, modulus: u32) -> u32 {
    // modulus is prime, value is nonzero
    pow_mod(value as u64, modulus as u64 - 2, modulus as u64) as u32
}

fn reduce_bigint(n: &BigInt, modulus: u32) -> u32 {
    let m = BigInt::from(modulus);
    n.mod_floor(&m).to_u32().expect("residue fits in u32")
}

impl FieldSpec {
    /// The prime field `GF(p)`; fails unless `p` is a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if !(2..(1 << 31)).contains(&p) || !is_prime_u32(p as u32) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// 0 for the rationals, `p` for `GF(p)`.
    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn is_char_zero(self) -> bool {
        matches!(self, FieldSpec::Rationals)
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Maps a rational number into this field.
    ///
    /// Fails with [`Error::NonReducible`] when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, Error> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(q.clone())),
            FieldSpec::Prime(p) => {
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::NonReducible {
                        value: fmt_rational(q),
                        modulus: p,
                    });
                }
                let num = reduce_bigint(q.numer(), p);
                let value = (num as u64 * inv_mod(den, p) as u64 % p as u64) as u32;
                Ok(Scalar::Residue { value, modulus: p })
            }
        }
    }

    /// Moves a scalar of any field into this one. Rationals reduce mod p;
    /// residues are only accepted by their own field.
    pub fn convert(self, s: &Scalar) -> Result<Scalar, Error> {
        match s {
            Scalar::Rational(q) => self.from_rational(q),
            Scalar::Residue { modulus, .. } if self == FieldSpec::Prime(*modulus) => Ok(s.clone()),
            Scalar::Residue { .. } => Err(Error::FieldMismatch),
        }
    }

    pub fn contains(self, s: &Scalar) -> bool {
        s.field() == self
    }

    /// Parses `[+-]?digits(/digits)?` exactly into this field.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, Error> {
        self.from_rational(&parse_rational(text)?)
    }

    /// All elements of a prime field, in residue order. Empty for `Q`.
    pub fn elements(self) -> impl Iterator<Item = Scalar> {
        let p = match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        };
        (0..p).map(move |value| Scalar::Residue { value, modulus: p })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Parses the scalar-string grammar into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let bad = || Error::ScalarSyntax(String::from(text));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut n: BigInt = digits.parse().map_err(|_| bad())?;
    if num.starts_with('-') {
        n = -n;
    }
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            d
        }
    };
    Ok(BigRational::new(n, d))
}

fn fmt_rational(q: &BigRational) -> String {
    use alloc::string::ToString;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Exact quotient; panics on division by zero.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv().expect("division by zero scalar")
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Residue { value, .. } => Some(*value),
        }
    }

    /// In-place `self += a * b`, the inner loop of every elimination.
    pub fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (
                Scalar::Residue { value, modulus },
                Scalar::Residue { value: x, .. },
                Scalar::Residue { value: y, .. },
            ) => {
                let p = *modulus as u64;
                *value = ((*value as u64 + (*x as u64) * (*y as u64)) % p) as u32;
            }
            (Scalar::Rational(q), Scalar::Rational(x), Scalar::Rational(y)) => {
                if !x.is_zero() && !y.is_zero() {
                    *q += x * y;
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&fmt_rational(q)),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order on `Q`, residue order on `GF(p)`; rationals sort first.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) => {
                (m, a).cmp(&(n, b))
            }
            (Scalar::Rational(_), Scalar::Residue { .. }) => Ordering::Less,
            (Scalar::Residue { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $res:expr) => {
        #[allow(clippy::suspicious_arithmetic_impl)]
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                        if p == q =>
                    {
                        Scalar::Residue {
                            value: $res(*a as u64, *b as u64, *p as u64) as u32,
                            modulus: *p,
                        }
                    }
                    _ => panic!("scalars from different fields"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, p: u64| a * b % p);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Clears denominators of a rational vector, returning integer entries
/// with the same projective class.
pub fn integer_multiple(values: &[BigRational]) -> Vec<BigInt> {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    values
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect()
}

/// Sign of a rational (`-1`, `0`, `1`).
pub fn signum(q: &BigRational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
