//! Exact coefficient arithmetic: arbitrary-precision rationals and
//! machine-word prime fields behind one interface.
//!
//! A [`Field`] value carries the arithmetic; [`Scalar`] values are plain data
//! and only make sense relative to the field that produced them. Rationals
//! are kept in lowest terms with positive denominator (the `num-rational`
//! representation), prime residues in `[0, p)` with `p` a verified prime
//! below `2^31` so that products fit in a `u64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} out of range (need 2 <= p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("scalar belongs to a different field")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
}

/// The coefficient field of a computation: exact rationals or F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(FpCtx),
}

/// Prime-field context with a precomputed Barrett constant.
///
/// Invariant: `p` is prime and `2 <= p < 2^31`, so `a*b < 2^62` for reduced
/// residues and the Barrett reduction below is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpCtx {
    p: u64,
    // floor(2^64 / p)
    barrett: u64,
}

impl FpCtx {
    fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..1u64 << 31).contains(&p) {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        let barrett = ((1u128 << 64) / p as u128) as u64;
        Ok(FpCtx { p, barrett })
    }

    #[inline(always)]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduce a product `x < 2^62` modulo p via Barrett reduction.
    #[inline(always)]
    fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p));
        if r >= self.p {
            r -= self.p;
        }
        debug_assert!(r < self.p);
        r
    }

    #[inline(always)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        self.reduce(a * b)
    }

    #[inline(always)]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// a - c*b mod p, the inner step of row elimination.
    #[inline(always)]
    pub fn sub_mul(&self, a: u64, c: u64, b: u64) -> u64 {
        self.sub(a, self.reduce(c * b))
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        // Extended Euclid on signed words; |coefficients| stay below p.
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        let t = if t0 < 0 { t0 + self.p as i64 } else { t0 };
        Some(t as u64)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((v % &m) + &m) % &m;
        let (_, digits) = r.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the active field. `Rat` values pair with `Field::Rationals`,
/// `Mod` values with `Field::Prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    /// Zero test; residues are kept canonical so no field context is needed.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => num_traits::Zero::is_zero(r),
            Scalar::Mod(m) => *m == 0,
        }
    }
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Ok(Field::Prime(FpCtx::new(p)?))
    }

    /// The default prime modulus: the largest prime below 2^31.
    pub const DEFAULT_PRIME: u64 = 2_147_483_629;

    pub fn default_prime() -> Self {
        Field::prime(Self::DEFAULT_PRIME).expect("default modulus is prime")
    }

    pub fn fp(&self) -> Option<&FpCtx> {
        match self {
            Field::Rationals => None,
            Field::Prime(ctx) => Some(ctx),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(ctx) => Scalar::Mod(ctx.from_i64(v)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            Field::Prime(ctx) => Scalar::Mod(ctx.from_bigint(v)),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(m) => *m == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(ctx), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(ctx.add(*x, *y)),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (Field::Prime(ctx), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(ctx.sub(*x, *y)),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(ctx), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(ctx.mul(*x, *y)),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(ctx), Scalar::Mod(x)) => Scalar::Mod(ctx.neg(*x)),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(FieldError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            (Field::Prime(ctx), Scalar::Mod(x)) => {
                ctx.inv(*x).map(Scalar::Mod).ok_or(FieldError::DivisionByZero)
            }
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Canonical text form: integers as decimals, rationals as "p/q",
    /// residues as decimals.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(m) => m.to_string(),
        }
    }

    /// Descriptor used in file headers and reports: `Q` or `Fp:<modulus>`.
    pub fn descriptor(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(ctx) => format!("Fp:{}", ctx.modulus()),
        }
    }

    /// Parse a descriptor (`Q` or `Fp:<modulus>`).
    pub fn parse_descriptor(text: &str) -> Result<Field, FieldError> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(m) = t.strip_prefix("Fp:") {
            let p: u64 = m
                .parse()
                .map_err(|_| FieldError::ModulusOutOfRange(0))?;
            return Field::prime(p);
        }
        Err(FieldError::ModulusOutOfRange(0))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(9973));
        assert!(is_prime_u64(2_147_483_629));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(9975));
        assert!(!is_prime_u64(2_147_483_630));
        // the EX2 test prime must admit cube roots of unity
        assert_eq!(9973 % 3, 1);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(Field::prime(91).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(1 << 31).is_err());
        assert!(Field::prime(2_147_483_629).is_ok());
    }

    #[test]
    fn barrett_matches_naive() {
        let ctx = match Field::prime(2_147_483_629).unwrap() {
            Field::Prime(c) => c,
            _ => unreachable!(),
        };
        let mut x: u64 = 0x2545F4914F6CDD1D;
        for _ in 0..10_000 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = (x >> 33) % ctx.modulus();
            let b = (x & 0x7FFFFFFF) % ctx.modulus();
            assert_eq!(ctx.mul(a, b), ((a as u128 * b as u128) % ctx.modulus() as u128) as u64);
        }
    }

    #[test]
    fn field_ops_fp() {
        let f = Field::prime(9973).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Scalar::Mod(9972));
        let inv = f.inv(&f.from_i64(2)).unwrap();
        assert_eq!(f.mul(&inv, &f.from_i64(2)), f.one());
        assert!(f.inv(&f.zero()).is_err());
        let ctx = f.fp().unwrap();
        for v in [1u64, 2, 3, 9972, 4321] {
            assert_eq!(ctx.mul(ctx.inv(v).unwrap(), v), 1);
        }
    }

    #[test]
    fn field_ops_q() {
        let f = Field::rationals();
        let half = f.div(&f.one(), &f.from_i64(2)).unwrap();
        assert_eq!(f.format(&half), "1/2");
        let s = f.add(&half, &half);
        assert_eq!(s, f.one());
        assert_eq!(f.format(&f.from_i64(-3)), "-3");
    }

    #[test]
    fn descriptors_round_trip() {
        for d in ["Q", "Fp:9973", "Fp:2147483629"] {
            let fld = Field::parse_descriptor(d).unwrap();
            assert_eq!(fld.descriptor(), d);
        }
        assert!(Field::parse_descriptor("Fp:10").is_err());
        assert!(Field::parse_descriptor("R").is_err());
    }
}
