//! Dense univariate polynomials over F2, Z4 and R.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::ring::{RElem, Z4};

/// Coefficient ring of a [`Poly`].
pub trait Coeff:
    Copy
    + Eq
    + fmt::Debug
    + fmt::Display
    + FromStr<Err = ParseError>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// An element of the binary field.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F2(pub bool);

impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Sub for F2 {
    type Output = F2;
    fn sub(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

impl FromStr for F2 {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<F2, ParseError> {
        match s.trim() {
            "0" => Ok(F2(false)),
            "1" => Ok(F2(true)),
            other => Err(ParseError::BadBits(other.to_string())),
        }
    }
}

impl Coeff for F2 {
    fn zero() -> F2 {
        F2(false)
    }
    fn one() -> F2 {
        F2(true)
    }
}

impl Coeff for Z4 {
    fn zero() -> Z4 {
        Z4::ZERO
    }
    fn one() -> Z4 {
        Z4::ONE
    }
}

impl Coeff for RElem {
    fn zero() -> RElem {
        RElem::ZERO
    }
    fn one() -> RElem {
        RElem::ONE
    }
}

/// Dense polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type PolyF2 = Poly<F2>;
pub type PolyZ4 = Poly<Z4>;
pub type PolyR = Poly<RElem>;

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(C::one(), 1)
    }

    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(n: usize) -> Self {
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[0] = -C::one();
        coeffs[n] = coeffs[n] + C::one();
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).copied().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<C> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: C) -> Self {
        Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// Quotient and remainder by a monic divisor.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j] - c * d;
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// True when the monic `divisor` divides `self` exactly.
    pub fn divisible_by(&self, divisor: &Self) -> Result<bool> {
        Ok(self.rem(divisor)?.is_zero())
    }

    /// Reduction modulo `x^n - 1` (folds exponents mod n).
    pub fn mod_xn_minus_1(&self, n: usize) -> Self {
        assert!(n > 0, "x^0 - 1 is the zero polynomial");
        let mut out = vec![C::zero(); n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = out[i % n] + c;
        }
        Poly::new(out)
    }

    /// Product in `C[x]/(x^n - 1)`.
    pub fn mul_mod_xn_minus_1(&self, rhs: &Self, n: usize) -> Self {
        let mut out = vec![C::zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out[k] = out[k] + a * b;
            }
        }
        Poly::new(out)
    }

    /// Coefficients padded or folded to exactly `n` entries (a vector of length n).
    pub fn to_vector(&self, n: usize) -> Vec<C> {
        let mut v = vec![C::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i % n] = v[i % n] + c;
        }
        v
    }

    /// `p(-x)`.
    pub fn negate_x(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    /// Human-readable form, highest degree first (`x^3+2x^2+x+3`).
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = format!("{c:?}");
            let coef = if coef.contains('+') && i > 0 { format!("({coef})") } else { coef };
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c.is_one(), i) {
                (true, 0) => "1".to_string(),
                (true, _) => mono,
                (false, _) => format!("{coef}{mono}"),
            });
        }
        terms.join("+")
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Wire form: comma-separated ascending coefficients; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{}", C::zero());
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl<C: Coeff> FromStr for Poly<C> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::EmptyPoly);
        }
        let coeffs = s.split(',').map(str::parse).collect::<Result<Vec<C>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PolyZ4 {
    pub fn mod2(&self) -> PolyF2 {
        self.map(|c| F2(c.mod2()))
    }

    pub fn to_r(&self) -> PolyR {
        self.map(RElem::from_z4)
    }

    /// `u·p` as a polynomial over R.
    pub fn times_u(&self) -> PolyR {
        self.map(|c| RElem::new(Z4::ZERO, c))
    }
}

impl PolyF2 {
    /// The 0/1 lift to Z4.
    pub fn lift(&self) -> PolyZ4 {
        self.map(|c| if c.0 { Z4::ONE } else { Z4::ZERO })
    }

    /// Bit `i` holds the coefficient of `x^i`; requires degree < 128.
    pub fn to_bits(&self) -> u128 {
        self.coeffs
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, c)| acc | ((c.0 as u128) << i))
    }

    pub fn from_bits(bits: u128) -> Self {
        Poly::new((0..128 - bits.leading_zeros() as usize).map(|i| F2(bits >> i & 1 == 1)).collect())
    }

    /// Monic gcd over the binary field.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero polynomials over F2 are monic");
            a = b;
            b = r;
        }
        Ok(a)
    }

    pub fn coprime(&self, other: &Self) -> Result<bool> {
        Ok(self.gcd(other)?.is_one())
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g = gcd`.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("monic over F2");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        Ok((r0, s0, t0))
    }

    /// `base^(2^k) mod modulus` by repeated squaring.
    pub fn frobenius_pow(base: &Self, k: usize, modulus: &Self) -> Self {
        let mut p = base.rem(modulus).expect("monic over F2");
        for _ in 0..k {
            p = (&p * &p).rem(modulus).expect("monic over F2");
        }
        p
    }

    /// Rabin-style test: `gcd(f, x^(2^i) - x mod f) = 1` for `1 <= i <= deg/2`,
    /// together with squarefreeness via `x^(2^deg) = x mod f`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        let x = Poly::x();
        let mut p = x.rem(self).expect("monic");
        for i in 1..=d {
            p = (&p * &p).rem(self).expect("monic");
            if i <= d / 2 && !self.coprime(&(&p - &x)).expect("self nonzero") {
                return false;
            }
        }
        (&p - &x).rem(self).expect("monic").is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4(s: &str) -> PolyZ4 {
        s.parse().unwrap()
    }

    fn f2(s: &str) -> PolyF2 {
        s.parse().unwrap()
    }

    #[test]
    fn z4_product_and_division() {
        // (x - 1)(x^2 + x + 1) = x^3 - 1
        let p = &z4("3,1") * &z4("1,1,1");
        assert_eq!(p, PolyZ4::xn_minus_1(3));
        let (q, r) = p.divmod(&z4("3,1")).unwrap();
        assert_eq!(q, z4("1,1,1"));
        assert!(r.is_zero());
        assert_eq!(z4("1,1").divmod(&z4("1,2")), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn mod_xn_minus_1_folds() {
        let x3 = PolyR::monomial(RElem::ONE, 3);
        assert_eq!(x3.mod_xn_minus_1(3), PolyR::one());
        let p: PolyR = "1:1,0,2,0:3".parse().unwrap();
        assert_eq!(p.mod_xn_minus_1(3).to_string(), "1:0,0:0,2:0");
    }

    #[test]
    fn gcd_examples() {
        assert!(f2("1,1").gcd(&f2("1,1,1")).unwrap().is_one());
        let f = f2("1,0,1,1");
        assert_eq!(f.gcd(&f).unwrap(), f);
        assert!(f2("1,1,0,1").coprime(&f2("1,0,1,1")).unwrap());
        assert_eq!(PolyF2::zero().gcd(&PolyF2::zero()), Err(Error::BothZero));
        assert_eq!(PolyF2::zero().gcd(&f).unwrap(), f);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = f2("1,1,0,1");
        let b = f2("1,0,1,1,1");
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn irreducibility() {
        assert!(f2("1,1,0,1").is_irreducible());
        assert!(f2("1,1,1").is_irreducible());
        assert!(!f2("1,0,1").is_irreducible());
        assert!(!f2("1,1,1,1").is_irreducible());
        assert!(f2("0,1").is_irreducible());
    }

    #[test]
    fn wire_form() {
        assert_eq!(z4("3,1,2,1").pretty(), "x^3+2x^2+x+3");
        assert_eq!(z4("3,1,2,1").to_string(), "3,1,2,1");
        assert_eq!(z4("0,0").to_string(), "0");
        assert_eq!(PolyZ4::xn_minus_1(1).to_string(), "3,1");
        assert!("".parse::<PolyZ4>().is_err());
        assert!("1,5".parse::<PolyZ4>().is_err());
    }

    #[test]
    fn bits_round_trip() {
        let f = f2("1,1,0,1");
        assert_eq!(f.to_bits(), 0b1011);
        assert_eq!(PolyF2::from_bits(0b1011), f);
        assert!(PolyF2::from_bits(0).is_zero());
    }
}
