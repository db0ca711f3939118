//! Exponent values and the scalars produced by truncated zeta sums.
//!
//! With rational exponents every term `1/M^s` is a product of rational
//! powers of primes. Writing each prime power as a rational number times
//! `p^f` with `0 <= f < 1` gives a representation as a rational linear
//! combination of radicals `Π p^f`; such products are linearly independent
//! over the rationals, so comparing coefficients decides equality exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The exponent carried by one box of an exponent tableau.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Rational(Rational64),
    Real(f64),
}

impl Exponent {
    pub fn int(n: i64) -> Self {
        Exponent::Rational(Rational64::from_integer(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Exponent::Rational(Rational64::new(p, q))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Exponent::Rational(r) => *r.numer() as f64 / *r.denom() as f64,
            Exponent::Real(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<Rational64> {
        match self {
            Exponent::Rational(r) => Some(*r),
            Exponent::Real(_) => None,
        }
    }
}

impl From<i64> for Exponent {
    fn from(n: i64) -> Self {
        Exponent::int(n)
    }
}

impl From<Rational64> for Exponent {
    fn from(r: Rational64) -> Self {
        Exponent::Rational(r)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Rational(r) => write!(f, "{r}"),
            Exponent::Real(x) => write!(f, "{x}"),
        }
    }
}

/// Accepts `p`, `p/q`, or a decimal (read as a real exponent).
impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {s:?}")))?;
            let q: i64 = q.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {s:?}")))?;
            if q == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(Exponent::ratio(p, q));
        }
        if let Ok(n) = s.parse::<i64>() {
            return Ok(Exponent::int(n));
        }
        s.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .map(Exponent::Real)
            .ok_or_else(|| Error::Parse(format!("bad exponent {s:?}")))
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Rational(r) if r.is_integer() => s.serialize_i64(*r.numer()),
            Exponent::Rational(r) => s.serialize_str(&r.to_string()),
            Exponent::Real(x) => s.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Exponent;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer, a float, or a string \"p/q\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exponent, E> {
                Ok(Exponent::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exponent, E> {
                i64::try_from(v).map(Exponent::int).map_err(E::custom)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Exponent, E> {
                Ok(Exponent::Real(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Exponent, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// A product `Π p^f` of prime radicals with `0 < f < 1`, sorted by prime.
pub type Radical = Vec<(u64, Rational64)>;

/// A finite rational linear combination of prime radicals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadicalSum {
    terms: BTreeMap<Radical, BigRational>,
}

fn rational_pow(p: u64, k: i64) -> BigRational {
    let base = BigInt::from(p).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

impl RadicalSum {
    pub fn zero() -> Self {
        RadicalSum::default()
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut out = RadicalSum::zero();
        out.add_term(Vec::new(), r);
        out
    }

    /// `coeff · Π p^(-e_p)` for the given primes and exponents.
    pub fn from_inverse_power(primes: &[u64], exps: &[Rational64], coeff: BigInt) -> Self {
        let mut rational = BigRational::from_integer(coeff);
        let mut radical = Vec::new();
        for (&p, &e) in primes.iter().zip(exps) {
            if e.is_zero() {
                continue;
            }
            // p^(-e) = p^(-ceil e) · p^(ceil e - e)
            let c = e.ceil();
            rational *= rational_pow(p, -c.to_integer());
            let frac = c - e;
            if !frac.is_zero() {
                radical.push((p, frac));
            }
        }
        let mut out = RadicalSum::zero();
        out.add_term(radical, rational);
        out
    }

    fn add_term(&mut self, radical: Radical, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(radical.clone()).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&radical);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when no radicals occur.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Radical, &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> RadicalSum {
        RadicalSum {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &RadicalSum) -> RadicalSum {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigRational) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (r, c) in &self.terms {
            out.add_term(r.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (ra, ca) in &self.terms {
            for (rb, cb) in &other.terms {
                let mut merged: BTreeMap<u64, Rational64> = ra.iter().copied().collect();
                for &(p, f) in rb {
                    *merged.entry(p).or_insert_with(Rational64::zero) += f;
                }
                let mut coeff = ca * cb;
                let mut radical = Vec::new();
                for (p, f) in merged {
                    if f >= Rational64::one() {
                        coeff *= BigRational::from_integer(BigInt::from(p));
                        let rest = f - Rational64::one();
                        if !rest.is_zero() {
                            radical.push((p, rest));
                        }
                    } else {
                        radical.push((p, f));
                    }
                }
                out.add_term(radical, coeff);
            }
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| {
                let rad: f64 = r
                    .iter()
                    .map(|&(p, f)| (p as f64).powf(*f.numer() as f64 / *f.denom() as f64))
                    .product();
                ratio_to_f64(c) * rad
            })
            .sum()
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale both sides down to keep the quotient representable.
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900);
            let n = (r.numer().abs() >> shift).to_f64().unwrap_or(f64::MAX);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::MAX);
            if r.is_negative() {
                -n / d
            } else {
                n / d
            }
        }
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (rad, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (p, e) in rad {
                write!(f, "*{p}^({e})")?;
            }
        }
        Ok(())
    }
}

/// The value of a truncated sum: exact, or a float in float mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(RadicalSum),
    Float(f64),
}

impl Scalar {
    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Exact(_) => Scalar::Exact(RadicalSum::zero()),
            Scalar::Float(_) => Scalar::Float(0.0),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64(),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&RadicalSum> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.add(b)),
            _ => Scalar::Float(self.to_f64() + other.to_f64()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.mul(b)),
            _ => Scalar::Float(self.to_f64() * other.to_f64()),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(a.scale(&BigRational::from_integer(k.clone()))),
            Scalar::Float(x) => Scalar::Float(x * k.to_f64().unwrap_or(f64::INFINITY)),
        }
    }

    /// Exact comparison for exact values; relative tolerance otherwise.
    pub fn agrees(&self, other: &Scalar, tolerance: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                let scale = a.abs().max(b.abs());
                (a - b).abs() <= tolerance * scale || a == b
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x:e}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(r) => s.serialize_str(&r.to_string()),
            Scalar::Float(x) => s.serialize_f64(*x),
        }
    }
}
