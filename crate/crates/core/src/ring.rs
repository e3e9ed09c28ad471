//! Exact coefficient rings.
//!
//! Every coefficient type implements [`Scalar`], which layers unit-group
//! queries and text I/O on top of the `num-traits` ring vocabulary. Four
//! backends are provided: [`Rational`] (ℚ), [`Integer`] (ℤ), [`Zmod`]
//! (ℤ/mℤ with a runtime modulus) and [`Eisenstein`] (ℤ[ε], ε² = −1 − ε).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Integer = BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    Rational,
    Integer,
    Modular,
    Eisenstein,
}

/// Names a coefficient ring together with the data needed to build its
/// constants (the modulus for ℤ/mℤ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Rational,
    Integer,
    Modular(u64),
    Eisenstein,
}

/// Largest supported modulus; residues are multiplied in `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

impl RingDescriptor {
    pub fn modular(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRing(format!("modulus {modulus} must be at least 2")));
        }
        if modulus > MAX_MODULUS {
            return Err(Error::InvalidRing(format!("modulus {modulus} exceeds 2^62")));
        }
        Ok(RingDescriptor::Modular(modulus))
    }

    pub fn kind(&self) -> RingKind {
        match self {
            RingDescriptor::Rational => RingKind::Rational,
            RingDescriptor::Integer => RingKind::Integer,
            RingDescriptor::Modular(_) => RingKind::Modular,
            RingDescriptor::Eisenstein => RingKind::Eisenstein,
        }
    }

    pub fn is_integral_domain(&self) -> bool {
        match self {
            RingDescriptor::Modular(m) => is_prime(*m),
            _ => true,
        }
    }

    pub fn is_q_ring(&self) -> bool {
        matches!(self, RingDescriptor::Rational)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rational => write!(f, "Q"),
            RingDescriptor::Integer => write!(f, "Z"),
            RingDescriptor::Modular(m) => write!(f, "mod:{m}"),
            RingDescriptor::Eisenstein => write!(f, "eisenstein"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "Q" | "q" | "rational" => Ok(RingDescriptor::Rational),
            "Z" | "z" | "integer" => Ok(RingDescriptor::Integer),
            "eisenstein" | "Z[w]" => Ok(RingDescriptor::Eisenstein),
            _ => {
                if let Some(m) = t.strip_prefix("mod:") {
                    let m: u64 = m
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidRing(format!("bad modulus in {t:?}")))?;
                    RingDescriptor::modular(m)
                } else {
                    Err(Error::InvalidRing(format!("unknown ring {t:?}")))
                }
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact commutative ring element.
///
/// Constants that do not depend on runtime ring data come from `Zero`/`One`;
/// everything else is built through [`Scalar::from_integer`] with the
/// descriptor of the ambient context.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const KIND: RingKind;

    fn from_integer(value: &BigInt, ring: &RingDescriptor) -> Self;

    /// Multiplicative inverse, or `None` when the element is not a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn parse(text: &str, ring: &RingDescriptor) -> Result<Self>;

    /// Whether two elements live in the same ring (only ℤ/mℤ can disagree).
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn from_i64(value: i64, ring: &RingDescriptor) -> Self {
        Self::from_integer(&BigInt::from(value), ring)
    }

    fn is_unit(&self) -> bool {
        self.try_inverse().is_some()
    }
}

/// Checks that `ring` describes the coefficient type `S`.
pub fn check_descriptor<S: Scalar>(ring: &RingDescriptor) -> Result<()> {
    if ring.kind() != S::KIND {
        return Err(Error::DescriptorMismatch(format!(
            "descriptor {ring} does not match coefficient type {:?}",
            S::KIND
        )));
    }
    Ok(())
}

fn mismatch<S: Scalar>(a: &S, b: &S) -> Error {
    Error::DescriptorMismatch(format!("{a:?} and {b:?} belong to different rings"))
}

pub fn checked_add<S: Scalar>(a: &S, b: &S) -> Result<S> {
    if !a.compatible(b) {
        return Err(mismatch(a, b));
    }
    Ok(a.clone() + b.clone())
}

pub fn checked_sub<S: Scalar>(a: &S, b: &S) -> Result<S> {
    if !a.compatible(b) {
        return Err(mismatch(a, b));
    }
    Ok(a.clone() - b.clone())
}

pub fn checked_mul<S: Scalar>(a: &S, b: &S) -> Result<S> {
    if !a.compatible(b) {
        return Err(mismatch(a, b));
    }
    Ok(a.clone() * b.clone())
}

pub fn try_invert<S: Scalar>(a: &S) -> Result<S> {
    a.try_inverse().ok_or_else(|| Error::NotAUnit(a.to_string()))
}

/// Inverse of the image of the positive integer `n` in the ring.
pub fn invert_integer<S: Scalar>(n: u64, ring: &RingDescriptor) -> Result<S> {
    let image = S::from_integer(&BigInt::from(n), ring);
    image.try_inverse().ok_or_else(|| Error::NotAUnit(format!("{n} in {ring}")))
}

fn normalize_minus(text: &str) -> String {
    text.trim().replace('\u{2212}', "-")
}

fn parse_bigint(text: &str) -> Result<BigInt> {
    let t = normalize_minus(text);
    let t = t.strip_prefix('+').unwrap_or(&t);
    BigInt::from_str(t).map_err(|_| Error::Parse(format!("not an integer: {text:?}")))
}

impl Scalar for Rational {
    const KIND: RingKind = RingKind::Rational;

    fn from_integer(value: &BigInt, _ring: &RingDescriptor) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse(text: &str, _ring: &RingDescriptor) -> Result<Self> {
        let t = normalize_minus(text);
        match t.split_once('/') {
            Some((p, q)) => {
                let p = parse_bigint(p)?;
                let q = parse_bigint(q)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {text:?}")));
                }
                Ok(BigRational::new(p, q))
            }
            None => Ok(BigRational::from_integer(parse_bigint(&t)?)),
        }
    }
}

impl Scalar for Integer {
    const KIND: RingKind = RingKind::Integer;

    fn from_integer(value: &BigInt, _ring: &RingDescriptor) -> Self {
        value.clone()
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn parse(text: &str, _ring: &RingDescriptor) -> Result<Self> {
        parse_bigint(text)
    }
}

/// Residue class modulo a runtime modulus.
///
/// A modulus of `0` marks a constant produced by `Zero::zero()` or
/// `One::one()` before it has met an element of a concrete ring; such
/// constants adopt the modulus of the first bound operand they are combined
/// with. Bound residues are always kept in `[0, m)`.
#[derive(Clone, Debug)]
pub struct Zmod {
    value: i128,
    modulus: u64,
}

impl Zmod {
    pub fn new(value: i128, modulus: u64) -> Self {
        assert!((2..=MAX_MODULUS).contains(&modulus), "invalid modulus {modulus}");
        Zmod { value: value.rem_euclid(modulus as i128), modulus }
    }

    /// The representative in `[0, m)`, or the raw constant when unbound.
    pub fn residue(&self) -> i128 {
        self.value
    }

    /// `None` for an unbound constant.
    pub fn modulus(&self) -> Option<u64> {
        (self.modulus != 0).then_some(self.modulus)
    }

    fn common_modulus(&self, other: &Zmod) -> u64 {
        match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) => {
                assert_eq!(a, b, "arithmetic between residues modulo {a} and {b}");
                a
            }
        }
    }

    fn reduce(value: i128, modulus: u64) -> Zmod {
        if modulus == 0 {
            Zmod { value, modulus }
        } else {
            Zmod { value: value.rem_euclid(modulus as i128), modulus }
        }
    }

    fn bound_value(&self, modulus: u64) -> i128 {
        if modulus == 0 {
            self.value
        } else {
            self.value.rem_euclid(modulus as i128)
        }
    }
}

impl PartialEq for Zmod {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (a, b) if a != 0 && b != 0 && a != b => false,
            _ => {
                let m = self.common_modulus(other);
                self.bound_value(m) == other.bound_value(m)
            }
        }
    }
}

impl Add for Zmod {
    type Output = Zmod;
    fn add(self, rhs: Zmod) -> Zmod {
        let m = self.common_modulus(&rhs);
        let v = self.bound_value(m) + rhs.bound_value(m);
        Zmod::reduce(v, m)
    }
}

impl Sub for Zmod {
    type Output = Zmod;
    fn sub(self, rhs: Zmod) -> Zmod {
        let m = self.common_modulus(&rhs);
        let v = self.bound_value(m) - rhs.bound_value(m);
        Zmod::reduce(v, m)
    }
}

impl Mul for Zmod {
    type Output = Zmod;
    fn mul(self, rhs: Zmod) -> Zmod {
        let m = self.common_modulus(&rhs);
        if m == 0 {
            let v = self.value.checked_mul(rhs.value).expect("unbound constant overflow");
            return Zmod { value: v, modulus: 0 };
        }
        let a = self.bound_value(m) as u128;
        let b = rhs.bound_value(m) as u128;
        Zmod { value: ((a * b) % m as u128) as i128, modulus: m }
    }
}

impl Neg for Zmod {
    type Output = Zmod;
    fn neg(self) -> Zmod {
        Zmod::reduce(-self.value, self.modulus)
    }
}

impl Zero for Zmod {
    fn zero() -> Self {
        Zmod { value: 0, modulus: 0 }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Zmod {
    fn one() -> Self {
        Zmod { value: 1, modulus: 0 }
    }
}

impl fmt::Display for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128) {
    // returns (g, x) with a*x ≡ g (mod b)
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r, old_s)
}

impl Scalar for Zmod {
    const KIND: RingKind = RingKind::Modular;

    fn from_integer(value: &BigInt, ring: &RingDescriptor) -> Self {
        let RingDescriptor::Modular(m) = *ring else {
            panic!("modular constant requested for ring {ring}");
        };
        let r = value.mod_floor(&BigInt::from(m));
        Zmod { value: r.to_i128().expect("residue fits"), modulus: m }
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.modulus == 0 {
            return (self.value == 1 || self.value == -1).then(|| self.clone());
        }
        let m = self.modulus as i128;
        let (g, x) = ext_gcd(self.value, m);
        (g == 1).then(|| Zmod::reduce(x, self.modulus))
    }

    fn parse(text: &str, ring: &RingDescriptor) -> Result<Self> {
        let v = parse_bigint(text)?;
        Ok(Zmod::from_integer(&v, ring))
    }

    fn compatible(&self, other: &Self) -> bool {
        self.modulus == 0 || other.modulus == 0 || self.modulus == other.modulus
    }
}

/// `a + b·ε` with ε a primitive cube root of unity, stored on the basis {1, ε}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: BigInt,
    pub b: BigInt,
}

impl Eisenstein {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Eisenstein { a: a.into(), b: b.into() }
    }

    pub fn omega() -> Self {
        Eisenstein::new(0, 1)
    }

    /// a² − ab + b²
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Image under ε ↦ ε².
    pub fn conjugate(&self) -> Self {
        Eisenstein { a: &self.a - &self.b, b: -&self.b }
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Self) -> Self {
        Eisenstein { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Self) -> Self {
        Eisenstein { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Self) -> Self {
        // ε² = −1 − ε
        let bd = &self.b * &rhs.b;
        Eisenstein {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Self {
        Eisenstein { a: -self.a, b: -self.b }
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Eisenstein::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Eisenstein::new(1, 0)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b_term = |f: &mut fmt::Formatter<'_>, b: &BigInt, leading: bool| -> fmt::Result {
            let sign = if b.is_negative() {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            let mag = b.abs();
            if mag.is_one() {
                write!(f, "{sign}w")
            } else {
                write!(f, "{sign}{mag}*w")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => b_term(f, &self.b, true),
            (false, false) => {
                write!(f, "{}", self.a)?;
                b_term(f, &self.b, false)
            }
        }
    }
}

impl Scalar for Eisenstein {
    const KIND: RingKind = RingKind::Eisenstein;

    fn from_integer(value: &BigInt, _ring: &RingDescriptor) -> Self {
        Eisenstein { a: value.clone(), b: BigInt::zero() }
    }

    fn try_inverse(&self) -> Option<Self> {
        // the norm is multiplicative and positive off zero, so units have norm 1
        self.norm().is_one().then(|| self.conjugate())
    }

    fn parse(text: &str, _ring: &RingDescriptor) -> Result<Self> {
        let t: String = normalize_minus(text).chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty Eisenstein integer".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in t.char_indices() {
            if (c == '+' || c == '-') && i > start {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut out = Eisenstein::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'+' => (BigInt::one(), &term[1..]),
                b'-' => (-BigInt::one(), &term[1..]),
                _ => (BigInt::one(), term),
            };
            if let Some(coef) = body.strip_suffix('w') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let c = if coef.is_empty() { BigInt::one() } else { parse_bigint(coef)? };
                out.b += sign * c;
            } else {
                out.a += sign * parse_bigint(body)?;
            }
        }
        Ok(out)
    }
}
