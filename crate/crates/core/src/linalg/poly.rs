//! Univariate polynomials over the ground field, with rational-root and
//! finite-field root finding.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::field::{integer_multiple, FieldSpec, Scalar};
use crate::linalg::Matrix;

/// Polynomial with coefficients in ascending degree order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: vec![field.one()],
        }
    }

    /// `t - a`.
    pub fn linear(a: &Scalar) -> Self {
        let field = a.field();
        Poly::new(field, vec![-a, field.one()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix, Error> {
        let n = m.require_square()?;
        let mut acc = Matrix::zeros(self.field, n, n);
        let id = Matrix::identity(self.field, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?.add(&id.scale(c))?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Poly::new(self.field, out)
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            let neg = -&c;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j].add_mul_assign(&neg, d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut acc = Poly::one(self.field).div_rem(modulus).1;
        let mut base = self.div_rem(modulus).1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).div_rem(modulus).1;
            }
        }
        acc
    }

    /// Roots in the ground field with multiplicities, sorted ascending.
    pub fn roots(&self) -> Vec<(Scalar, usize)> {
        if self.degree().is_none_or(|d| d == 0) {
            return Vec::new();
        }
        let candidates = match self.field {
            FieldSpec::Rationals => rational_root_candidates(self),
            FieldSpec::Prime(p) => prime_field_roots(self, p),
        };
        let mut out = Vec::new();
        for r in candidates {
            let mut rest = self.clone();
            let lin = Poly::linear(&r);
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                rest = q;
            }
            if mult > 0 {
                out.push((r, mult));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.dedup_by(|a, b| a.0 == b.0);
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Positive divisors of `n` (trial division; a cofactor above 10^6 after
/// sieving is treated as prime).
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &d * &d <= n && d <= limit {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1u32;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

fn rational_root_candidates(poly: &Poly) -> Vec<Scalar> {
    let rats: Vec<BigRational> = poly
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational polynomial").clone())
        .collect();
    let ints = integer_multiple(&rats);
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    if low > 0 {
        out.push(FieldSpec::Rationals.zero());
    }
    let trimmed = &ints[low..];
    if trimmed.len() < 2 {
        return out;
    }
    let a0 = &trimmed[0];
    let lead = trimmed.last().expect("nonempty");
    let content = trimmed.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let a0 = a0 / &content;
    let lead = lead / &content;
    for q in divisors(&lead) {
        for p in divisors(&a0) {
            for sign in [1i32, -1] {
                let r = BigRational::new(&p * BigInt::from(sign), q.clone());
                // only lowest terms
                if p.gcd(&q).is_one() {
                    let s = Scalar::Rational(r);
                    if poly.eval(&s).is_zero() {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

const SCAN_LIMIT: u32 = 1 << 16;

fn prime_field_roots(poly: &Poly, p: u32) -> Vec<Scalar> {
    let field = FieldSpec::Prime(p);
    if p <= SCAN_LIMIT {
        return field.elements().filter(|x| poly.eval(x).is_zero()).collect();
    }
    // Product of the distinct linear factors: gcd(f, t^p - t).
    let t = Poly::new(field, vec![field.zero(), field.one()]);
    let f = poly.monic();
    let tp = t.pow_mod(p as u64, &f);
    let g = f.gcd(&tp.sub(&t));
    let mut roots = Vec::new();
    split_linear_factors(&g, p, &mut roots);
    roots
}

/// Splits a squarefree product of distinct linear factors with the
/// deterministic sequence of shifts `(t + a)^((p-1)/2) - 1`, `a = 0, 1, ...`.
fn split_linear_factors(g: &Poly, p: u32, out: &mut Vec<Scalar>) {
    let field = FieldSpec::Prime(p);
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-&g.monic().coeffs[0]),
        Some(_) => {
            for a in 0..p {
                let shifted = Poly::new(field, vec![field.from_i64(a as i64), field.one()]);
                let h = shifted
                    .pow_mod((p as u64 - 1) / 2, g)
                    .sub(&Poly::one(field));
                let d = g.gcd(&h);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && Some(dd) < g.degree() {
                    split_linear_factors(&d, p, out);
                    split_linear_factors(&g.div_rem(&d).0, p, out);
                    return;
                }
            }
            unreachable!("no splitting shift found");
        }
    }
}
