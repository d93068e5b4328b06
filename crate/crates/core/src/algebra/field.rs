//! Exact fields: prime fields `F_p`, single-step extensions `F_p[a]/(f)` and
//! the rationals.
//!
//! Finite-field elements are encoded as integers in `[0, q)`: the element
//! `c_0 + c_1 a + ... + c_{m-1} a^{m-1}` is stored as `sum c_i p^i`. The prime
//! subfield therefore embeds as the identity on `[0, p)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::fp_poly;
use super::primes::{is_prime, mul_mod, pow_mod, prime_factors, prime_power};
use crate::error::{Error, Result};

/// Extension fields up to this size get discrete-log tables.
const TABLE_LIMIT: u64 = 1 << 20;

#[derive(Clone)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field `F_q`, `q = p^m`, with arithmetic on encoded elements.
#[derive(Clone)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: u64,
    modulus: Option<Vec<u64>>,
    tables: Option<LogTables>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FiniteField {
    fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        Ok(FiniteField { p, m: 1, q: p, modulus: None, tables: None })
    }

    fn extension(p: u64, m: u32, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 || modulus.len() != m as usize + 1 {
            return Err(Error::DegreeMismatch(format!(
                "modulus {modulus:?} does not have degree {m}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidInput(format!(
                "modulus coefficients must lie in [0, {p})"
            )));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidInput("modulus must be monic".into()));
        }
        if m > 16 {
            return Err(Error::DegreeMismatch(format!("extension degree {m} exceeds 16")));
        }
        let q = p
            .checked_pow(m)
            .filter(|q| *q < 1 << 62)
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{m} is too large")))?;
        if !fp_poly::is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(modulus));
        }
        if m == 1 {
            return Self::prime(p);
        }
        let mut field = FiniteField { p, m, q, modulus: Some(modulus), tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    fn build_tables(&self) -> LogTables {
        let order = self.q - 1;
        let factors = prime_factors(order);
        let generator = (1..self.q)
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, order / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u64;
        for i in 0..order {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = self.mul_slow(x, generator);
        }
        LogTables { exp, log }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    /// Coefficients `c_0..c_{m-1}` of an encoded element.
    pub fn coeffs(&self, mut a: u64) -> Vec<u64> {
        (0..self.m)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    /// Encodes coefficients (ascending powers of the generator), reducing
    /// modulo the field modulus when more than `m` are given.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> u64 {
        match &self.modulus {
            None => coeffs.first().map_or(0, |c| c % self.p),
            Some(f) => {
                let c = fp_poly::trim(coeffs.iter().map(|c| c % self.p).collect());
                let r = fp_poly::rem(&c, f, self.p);
                r.iter().rev().fold(0, |acc, &c| acc * self.p + c)
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if self.m == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            let c = a % self.p;
            out += ((self.p - c) % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.m == 1 {
            return mul_mod(a, b, self.p);
        }
        match &self.tables {
            Some(t) => {
                let order = self.q - 1;
                let e = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % order;
                t.exp[e as usize] as u64
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        match &self.modulus {
            None => mul_mod(a, b, self.p),
            Some(f) => {
                let prod = fp_poly::mul(&self.coeffs(a), &self.coeffs(b), self.p);
                let r = fp_poly::rem(&prod, f, self.p);
                r.iter().rev().fold(0, |acc, &c| acc * self.p + c)
            }
        }
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.m == 1 {
            return Some(pow_mod(a, self.p - 2, self.p));
        }
        Some(match &self.tables {
            Some(t) => {
                let order = self.q - 1;
                let l = t.log[a as usize] as u64;
                t.exp[((order - l) % order) as usize] as u64
            }
            None => self.pow_slow(a, self.q - 2),
        })
    }
}

/// An exact field descriptor.
#[derive(Clone, Debug)]
pub enum Field {
    Finite(Arc<FiniteField>),
    Rationals,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rationals, Field::Rationals) => true,
            (Field::Finite(a), Field::Finite(b)) => {
                Arc::ptr_eq(a, b) || (a.p == b.p && a.m == b.m && a.modulus == b.modulus)
            }
            _ => false,
        }
    }
}

impl Eq for Field {}

/// An element of some [`Field`]. Finite elements use the integer encoding
/// described at module level; rationals are always in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Finite(u64),
    Rational(BigRational),
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        Ok(Field::Finite(Arc::new(FiniteField::prime(p)?)))
    }

    /// `F_p[a]/(modulus)`, modulus given in ascending powers and monic.
    pub fn extension(p: u64, m: u32, modulus: Vec<u64>) -> Result<Self> {
        Ok(Field::Finite(Arc::new(FiniteField::extension(p, m, modulus)?)))
    }

    /// `F_{p^m}` presented by the first irreducible modulus in base-`p`
    /// counting order (`a^2+a+1` for `F_4`, `a^2+1` for `F_9`).
    pub fn galois(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 1 {
            return Self::prime(p);
        }
        if m == 0 || m > 16 || p.checked_pow(m).map_or(true, |q| q >= 1 << 62) {
            return Err(Error::OutOfRange(format!("unsupported extension {p}^{m}")));
        }
        Self::extension(p, m, fp_poly::first_irreducible(p, m))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Finite(_))
    }

    pub fn finite(&self) -> Option<&FiniteField> {
        match self {
            Field::Finite(f) => Some(f),
            Field::Rationals => None,
        }
    }

    /// `q = |F|`, or `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        self.finite().map(|f| f.q)
    }

    /// Characteristic; `0` for the rationals.
    pub fn characteristic(&self) -> u64 {
        self.finite().map_or(0, |f| f.p)
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            Field::Finite(_) => FieldElem::Finite(0),
            Field::Rationals => FieldElem::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            Field::Finite(_) => FieldElem::Finite(1),
            Field::Rationals => FieldElem::Rational(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match self {
            Field::Finite(f) => FieldElem::Finite(f.from_i64(v)),
            Field::Rationals => FieldElem::Rational(BigRational::from_integer(v.into())),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElem {
        match self {
            Field::Finite(f) => {
                let r = v.mod_floor_u64(f.p);
                FieldElem::Finite(r)
            }
            Field::Rationals => FieldElem::Rational(BigRational::from_integer(v.clone())),
        }
    }

    /// Element with the given coefficients over the prime field.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        match self {
            Field::Finite(f) => Ok(FieldElem::Finite(f.from_coeffs(coeffs))),
            Field::Rationals => Err(Error::MixedFields),
        }
    }

    pub fn contains(&self, a: &FieldElem) -> bool {
        match (self, a) {
            (Field::Finite(f), FieldElem::Finite(v)) => *v < f.q,
            (Field::Rationals, FieldElem::Rational(_)) => true,
            _ => false,
        }
    }

    fn check(&self, a: &FieldElem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Finite(v) => *v == 0,
            FieldElem::Rational(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_raw(a, b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    pub fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        Ok(self.neg_raw(a))
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.inv_raw(a).ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        let inv = self.inv(b)?;
        Ok(self.mul_raw(a, &inv))
    }

    /// Equality of two members of this field.
    pub fn equal(&self, a: &FieldElem, b: &FieldElem) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    pub(crate) fn add_raw(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (Field::Finite(f), FieldElem::Finite(x), FieldElem::Finite(y)) => {
                FieldElem::Finite(f.add(*x, *y))
            }
            (Field::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => {
                FieldElem::Rational(x + y)
            }
            _ => unreachable!("element from a foreign field"),
        }
    }

    pub(crate) fn sub_raw(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (Field::Finite(f), FieldElem::Finite(x), FieldElem::Finite(y)) => {
                FieldElem::Finite(f.sub(*x, *y))
            }
            (Field::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => {
                FieldElem::Rational(x - y)
            }
            _ => unreachable!("element from a foreign field"),
        }
    }

    pub(crate) fn mul_raw(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (Field::Finite(f), FieldElem::Finite(x), FieldElem::Finite(y)) => {
                FieldElem::Finite(f.mul(*x, *y))
            }
            (Field::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => {
                FieldElem::Rational(x * y)
            }
            _ => unreachable!("element from a foreign field"),
        }
    }

    pub(crate) fn neg_raw(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (Field::Finite(f), FieldElem::Finite(x)) => FieldElem::Finite(f.neg(*x)),
            (Field::Rationals, FieldElem::Rational(x)) => FieldElem::Rational(-x),
            _ => unreachable!("element from a foreign field"),
        }
    }

    pub(crate) fn inv_raw(&self, a: &FieldElem) -> Option<FieldElem> {
        match (self, a) {
            (Field::Finite(f), FieldElem::Finite(x)) => f.inv(*x).map(FieldElem::Finite),
            (Field::Rationals, FieldElem::Rational(x)) => {
                (!x.is_zero()).then(|| FieldElem::Rational(x.recip()))
            }
            _ => unreachable!("element from a foreign field"),
        }
    }

    /// Parses one matrix entry: an integer for `F_p` (reduced mod `p`), an
    /// integer or `[c0,...,c_{m-1}]` for extensions, `a/b` or `a` for the
    /// rationals.
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let bad = || Error::InvalidInput(format!("cannot parse field element {s:?}"));
        match self {
            Field::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a, b),
                    None => (s, "1"),
                };
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldElem::Rational(BigRational::new(num, den)))
            }
            Field::Finite(f) => {
                if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                    if f.m == 1 {
                        return Err(bad());
                    }
                    let coeffs = inner
                        .split(',')
                        .map(|c| c.trim().parse::<i64>().map(|v| f.from_i64(v)))
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| bad())?;
                    if coeffs.len() > f.m as usize {
                        return Err(Error::DegreeMismatch(format!(
                            "element {s} has more than {} coefficients",
                            f.m
                        )));
                    }
                    Ok(FieldElem::Finite(f.from_coeffs(&coeffs)))
                } else {
                    let v: BigInt = s.parse().map_err(|_| bad())?;
                    Ok(FieldElem::Finite(v.mod_floor_u64(f.p)))
                }
            }
        }
    }

    pub fn format_elem(&self, a: &FieldElem) -> String {
        match (self, a) {
            (Field::Finite(f), FieldElem::Finite(v)) if f.m == 1 => v.to_string(),
            (Field::Finite(f), FieldElem::Finite(v)) => {
                let c: Vec<String> = f.coeffs(*v).iter().map(u64::to_string).collect();
                format!("[{}]", c.join(","))
            }
            (_, FieldElem::Rational(r)) => r.to_string(),
            _ => "?".into(),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let mut r = self % &m;
        if r.is_negative() {
            r += &m;
        }
        r.try_into().expect("residue fits in u64")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Finite(ff) => match &ff.modulus {
                None => write!(f, "gf {}", ff.p),
                Some(m) => {
                    let c: Vec<String> = m.iter().map(u64::to_string).collect();
                    write!(f, "gf {}^{} modulus=[{}]", ff.p, ff.m, c.join(","))
                }
            },
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `rationals`, `gf <p>`, `gf <p>^<m> [modulus=[...]]` or
    /// `gf <q> [modulus=[...]]` with `q` a prime power.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unrecognised field descriptor {s:?}"));
        let mut words = s.split_whitespace();
        match words.next() {
            Some("rationals") | Some("Q") => {
                return if words.next().is_none() { Ok(Field::Rationals) } else { Err(bad()) };
            }
            Some("gf") => {}
            _ => return Err(bad()),
        }
        let size = words.next().ok_or_else(bad)?;
        let modulus = match words.next() {
            None => None,
            Some(w) => {
                let list = w
                    .strip_prefix("modulus=[")
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(bad)?;
                let coeffs = list
                    .split(',')
                    .map(|c| c.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                Some(coeffs)
            }
        };
        if words.next().is_some() {
            return Err(bad());
        }
        let (p, m) = match size.split_once('^') {
            Some((p, m)) => {
                let p: u64 = p.parse().map_err(|_| bad())?;
                let m: u32 = m.parse().map_err(|_| bad())?;
                (p, m)
            }
            None => {
                let q: u64 = size.parse().map_err(|_| bad())?;
                if is_prime(q) {
                    (q, 1)
                } else {
                    match prime_power(q) {
                        Some(pm) => pm,
                        None if modulus.is_some() => {
                            return Err(Error::DegreeMismatch(format!("{q} is not a prime power")))
                        }
                        None => return Err(Error::NonPrimeCharacteristic(q)),
                    }
                }
            }
        };
        match modulus {
            Some(modulus) => Field::extension(p, m, modulus),
            None if m == 1 => Field::prime(p),
            None => Field::galois(p, m),
        }
    }
}
